#pragma once

// Central differences on scalar fields f(x, t). The *_o4 variants are
// fourth-order accurate and reach 2h from the centre.

namespace hyper::fd {

template <class F>
double d_dx(const F& f, double x, double t, double h) {
  return (f(x + h, t) - f(x - h, t)) / (2.0 * h);
}

template <class F>
double d_dt(const F& f, double x, double t, double h) {
  return (f(x, t + h) - f(x, t - h)) / (2.0 * h);
}

template <class F>
double d2_dx2(const F& f, double x, double t, double h) {
  return (f(x + h, t) - 2.0 * f(x, t) + f(x - h, t)) / (h * h);
}

template <class F>
double d2_dt2(const F& f, double x, double t, double h) {
  return (f(x, t + h) - 2.0 * f(x, t) + f(x, t - h)) / (h * h);
}

template <class F>
double d2_dx2_o4(const F& f, double x, double t, double h) {
  return (-f(x + 2.0 * h, t) + 16.0 * f(x + h, t) - 30.0 * f(x, t) + 16.0 * f(x - h, t) -
          f(x - 2.0 * h, t)) /
         (12.0 * h * h);
}

template <class F>
double d2_dt2_o4(const F& f, double x, double t, double h) {
  return (-f(x, t + 2.0 * h) + 16.0 * f(x, t + h) - 30.0 * f(x, t) + 16.0 * f(x, t - h) -
          f(x, t - 2.0 * h)) /
         (12.0 * h * h);
}

}  // namespace hyper::fd
