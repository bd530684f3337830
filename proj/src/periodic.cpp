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

#include "torsionkit/periodic.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "fft.hpp"

namespace torsionkit {
namespace detail {
namespace {

// FFTW planning is not thread-safe; execution on fresh aligned buffers is.
struct PlanCache {
  std::mutex mutex;
  std::map<std::size_t, fftw_plan> forward;
  std::map<std::size_t, fftw_plan> backward;

  ~PlanCache() {
    for (auto& [n, p] : forward) fftw_destroy_plan(p);
    for (auto& [n, p] : backward) fftw_destroy_plan(p);
  }
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};
using RealBuffer = std::unique_ptr<double, FftwFree>;
using ComplexBuffer = std::unique_ptr<fftw_complex, FftwFree>;

RealBuffer alloc_real(std::size_t n) { return RealBuffer(fftw_alloc_real(n)); }
ComplexBuffer alloc_complex(std::size_t n) { return ComplexBuffer(fftw_alloc_complex(n)); }

fftw_plan plan_for(std::size_t n, bool forward) {
  auto& cache = plans();
  std::lock_guard lock(cache.mutex);
  auto& table = forward ? cache.forward : cache.backward;
  if (auto it = table.find(n); it != table.end()) return it->second;
  auto r = alloc_real(n);
  auto c = alloc_complex(n / 2 + 1);
  const int ni = static_cast<int>(n);
  fftw_plan p = forward ? fftw_plan_dft_r2c_1d(ni, r.get(), c.get(), FFTW_ESTIMATE)
                        : fftw_plan_dft_c2r_1d(ni, c.get(), r.get(), FFTW_ESTIMATE);
  table.emplace(n, p);
  return p;
}

}  // namespace

std::vector<std::complex<double>> rfft(std::span<const double> x) {
  const std::size_t n = x.size();
  fftw_plan p = plan_for(n, true);
  auto in = alloc_real(n);
  auto out = alloc_complex(n / 2 + 1);
  std::copy(x.begin(), x.end(), in.get());
  fftw_execute_dft_r2c(p, in.get(), out.get());
  std::vector<std::complex<double>> modes(n / 2 + 1);
  for (std::size_t m = 0; m < modes.size(); ++m) modes[m] = {out.get()[m][0], out.get()[m][1]};
  return modes;
}

std::vector<double> irfft(std::span<const std::complex<double>> modes, std::size_t n) {
  fftw_plan p = plan_for(n, false);
  auto in = alloc_complex(n / 2 + 1);
  auto out = alloc_real(n);
  for (std::size_t m = 0; m < modes.size(); ++m) {
    in.get()[m][0] = modes[m].real();
    in.get()[m][1] = modes[m].imag();
  }
  fftw_execute_dft_c2r(p, in.get(), out.get());
  std::vector<double> x(out.get(), out.get() + n);
  const double scale = 1.0 / static_cast<double>(n);
  for (double& v : x) v *= scale;
  return x;
}

}  // namespace detail

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// (i k)^order without going through complex pow, so i^n stays exact.
std::complex<double> i_power(double k, int order) {
  std::complex<double> r(1.0, 0.0);
  for (int q = 0; q < order; ++q) r = std::complex<double>(-r.imag() * k, r.real() * k);
  return r;
}

std::vector<double> component(const PeriodicCurve& f, int axis) {
  std::vector<double> v(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    const Vec3& p = f[j];
    v[j] = axis == 0 ? p.x : axis == 1 ? p.y : p.z;
  }
  return v;
}

std::vector<double> differentiate(std::span<const double> x, double period, int order) {
  const std::size_t n = x.size();
  auto modes = detail::rfft(x);
  // Coefficients at roundoff level carry no signal but would be amplified by
  // m^order; chop them.
  double peak = 0.0;
  for (const auto& c : modes) peak = std::max(peak, std::abs(c));
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * peak;
  const double w = kTwoPi / period;
  for (std::size_t m = 0; m < modes.size(); ++m) {
    modes[m] = std::abs(modes[m]) <= floor ? 0.0 : modes[m] * i_power(static_cast<double>(m) * w, order);
  }
  if (order % 2 == 1) modes.back() = 0.0;
  return detail::irfft(modes, n);
}

struct RawAntiderivative {
  std::vector<double> periodic;
  double mean;
};

RawAntiderivative antidifferentiate(std::span<const double> x, double period) {
  const std::size_t n = x.size();
  auto modes = detail::rfft(x);
  const double mean = modes[0].real() / static_cast<double>(n);
  const double w = kTwoPi / period;
  const std::complex<double> i(0.0, 1.0);
  modes[0] = 0.0;
  for (std::size_t m = 1; m < modes.size(); ++m) modes[m] /= i * (static_cast<double>(m) * w);
  modes.back() = 0.0;
  return {detail::irfft(modes, n), mean};
}

void check_order(int order) {
  if (order < 1 || order > 3) {
    throw Error(ErrorCode::InvalidArgument, "geometry-core",
                "spectral derivative order must be in 1..3, got " + std::to_string(order));
  }
}

}  // namespace

PeriodicSamples spectral_derivative(const PeriodicSamples& f, int order) {
  check_order(order);
  return PeriodicSamples(differentiate(f.values(), f.period(), order), f.period());
}

PeriodicCurve spectral_derivative(const PeriodicCurve& f, int order) {
  check_order(order);
  auto dx = differentiate(component(f, 0), f.period(), order);
  auto dy = differentiate(component(f, 1), f.period(), order);
  auto dz = differentiate(component(f, 2), f.period(), order);
  std::vector<Vec3> v(f.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = {dx[j], dy[j], dz[j]};
  return PeriodicCurve(std::move(v), f.period());
}

double periodic_integral(const PeriodicSamples& f) {
  double sum = 0.0;
  for (double v : f) sum += v;
  return sum * f.spacing();
}

Vec3 periodic_integral(const PeriodicCurve& f) {
  Vec3 sum;
  for (const Vec3& v : f) sum += v;
  return sum * f.spacing();
}

Antiderivative<double> spectral_antiderivative(const PeriodicSamples& f) {
  auto raw = antidifferentiate(f.values(), f.period());
  return {PeriodicSamples(std::move(raw.periodic), f.period()), raw.mean};
}

Antiderivative<Vec3> spectral_antiderivative(const PeriodicCurve& f) {
  auto ax = antidifferentiate(component(f, 0), f.period());
  auto ay = antidifferentiate(component(f, 1), f.period());
  auto az = antidifferentiate(component(f, 2), f.period());
  std::vector<Vec3> v(f.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = {ax.periodic[j], ay.periodic[j], az.periodic[j]};
  return {PeriodicCurve(std::move(v), f.period()), Vec3{ax.mean, ay.mean, az.mean}};
}

double max_abs(const PeriodicSamples& f) {
  double m = 0.0;
  for (double v : f) m = std::max(m, std::abs(v));
  return m;
}

TrigInterpolant::TrigInterpolant(const PeriodicSamples& f) : coeffs_(detail::rfft(f.values())), period_(f.period()) {
  const double scale = 1.0 / static_cast<double>(f.size());
  double peak = 0.0;
  for (auto& c : coeffs_) {
    c *= scale;
    peak = std::max(peak, std::abs(c));
  }
  // Same roundoff chop as spectral differentiation.
  const double floor = 8.0 * std::numeric_limits<double>::epsilon() * peak;
  for (auto& c : coeffs_) {
    if (std::abs(c) <= floor) c = 0.0;
  }
}

double TrigInterpolant::derivative(double t, int order) const {
  const double w = kTwoPi / period_;
  const std::size_t nyquist = coeffs_.size() - 1;
  double sum = order == 0 ? coeffs_[0].real() : 0.0;
  for (std::size_t m = 1; m < nyquist; ++m) {
    if (coeffs_[m] == 0.0) continue;
    const double mw = static_cast<double>(m) * w;
    sum += 2.0 * (coeffs_[m] * i_power(mw, order) * std::polar(1.0, mw * t)).real();
  }
  // Nyquist term is a pure cosine in the symmetric interpolant.
  const double kw = static_cast<double>(nyquist) * w;
  const double a = coeffs_[nyquist].real();
  switch (order % 4) {
    case 0: sum += a * std::pow(kw, order) * std::cos(kw * t); break;
    case 1: sum -= a * std::pow(kw, order) * std::sin(kw * t); break;
    case 2: sum -= a * std::pow(kw, order) * std::cos(kw * t); break;
    default: sum += a * std::pow(kw, order) * std::sin(kw * t); break;
  }
  return sum;
}

}  // namespace torsionkit
