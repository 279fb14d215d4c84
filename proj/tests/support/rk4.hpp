#pragma once

// Classical RK4 for x' = f(t, x); an independent reference for the alpha -> 1 limit.

#include <cstddef>
#include <vector>

#include "fracper/systems.hpp"

namespace reference {

inline std::vector<fracper::State> rk4(const fracper::Rhs& f, fracper::State x, double h, std::size_t steps) {
  std::vector<fracper::State> out{x};
  const std::size_t d = x.size();
  auto axpy = [d](const fracper::State& a, double s, const fracper::State& b) {
    fracper::State r(d);
    for (std::size_t i = 0; i < d; ++i)
      r[i] = a[i] + s * b[i];
    return r;
  };
  for (std::size_t n = 0; n < steps; ++n) {
    const double t = static_cast<double>(n) * h;
    const auto k1 = f(t, x);
    const auto k2 = f(t + h / 2, axpy(x, h / 2, k1));
    const auto k3 = f(t + h / 2, axpy(x, h / 2, k2));
    const auto k4 = f(t + h, axpy(x, h, k3));
    for (std::size_t i = 0; i < d; ++i)
      x[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    out.push_back(x);
  }
  return out;
}

} // namespace reference
