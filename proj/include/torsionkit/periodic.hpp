/*
 * Copyright 2026 The torsionkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "torsionkit/error.hpp"
#include "torsionkit/vec3.hpp"

namespace torsionkit {

inline constexpr std::size_t kDefaultSamples = 2048;
inline constexpr std::size_t kMinSamples = 16;

/// Uniform samples f(j * period / N), j = 0..N-1, of a periodic function.
/// N must be even and at least 16.
template <class T>
class Periodic {
 public:
  Periodic(std::vector<T> values, double period) : values_(std::move(values)), period_(period) {
    if (values_.size() < kMinSamples || values_.size() % 2 != 0) {
      throw Error(ErrorCode::InvalidArgument, "geometry-core",
                  "periodic sample count must be even and >= 16, got " +
                      std::to_string(values_.size()));
    }
    if (!(period_ > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "geometry-core", "period must be positive");
    }
  }

  template <class F>
  static Periodic sample(F&& f, double period, std::size_t n) {
    std::vector<T> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = f(static_cast<double>(j) * period / static_cast<double>(n));
    return Periodic(std::move(v), period);
  }

  std::size_t size() const noexcept { return values_.size(); }
  double period() const noexcept { return period_; }
  double spacing() const noexcept { return period_ / static_cast<double>(values_.size()); }
  double parameter(std::size_t j) const noexcept { return static_cast<double>(j) * spacing(); }

  std::span<const T> values() const noexcept { return values_; }
  const T& operator[](std::size_t j) const noexcept { return values_[j]; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

 private:
  std::vector<T> values_;
  double period_;
};

using PeriodicSamples = Periodic<double>;
using PeriodicCurve = Periodic<Vec3>;

/// Derivative of order 1..3 by multiplying Fourier mode m with
/// (i m 2 pi / period)^order. The Nyquist mode is dropped for odd orders.
PeriodicSamples spectral_derivative(const PeriodicSamples& f, int order);
PeriodicCurve spectral_derivative(const PeriodicCurve& f, int order);

/// Equal-weight rule (period / N) * sum f_j.
double periodic_integral(const PeriodicSamples& f);
Vec3 periodic_integral(const PeriodicCurve& f);

/// F(t) = mean * t + periodic(t) with F' = f. The periodic part has zero
/// mean; callers anchor it as they need.
template <class T>
struct Antiderivative {
  Periodic<T> periodic;
  T mean;
};

Antiderivative<double> spectral_antiderivative(const PeriodicSamples& f);
Antiderivative<Vec3> spectral_antiderivative(const PeriodicCurve& f);

/// Repeat samples `copies` times; the result has period `copies * period`.
template <class T>
Periodic<T> tile(const Periodic<T>& f, std::size_t copies) {
  std::vector<T> v;
  v.reserve(f.size() * copies);
  for (std::size_t c = 0; c < copies; ++c) v.insert(v.end(), f.begin(), f.end());
  return Periodic<T>(std::move(v), f.period() * static_cast<double>(copies));
}

template <class T, class F>
auto map(const Periodic<T>& f, F&& fn) {
  using R = std::decay_t<decltype(fn(f[0]))>;
  std::vector<R> v(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) v[j] = fn(f[j]);
  return Periodic<R>(std::move(v), f.period());
}

double max_abs(const PeriodicSamples& f);

/// Band-limited trigonometric interpolant of real periodic samples, for
/// evaluation between grid points.
class TrigInterpolant {
 public:
  explicit TrigInterpolant(const PeriodicSamples& f);

  double operator()(double t) const { return derivative(t, 0); }
  double derivative(double t, int order) const;
  double period() const noexcept { return period_; }

 private:
  std::vector<std::complex<double>> coeffs_;  // modes 0..N/2, normalized by 1/N
  double period_;
};

}  // namespace torsionkit
