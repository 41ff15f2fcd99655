#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <vector>

#include "dhtgb/dht.hpp"
#include "dhtgb/errors.hpp"
#include "dhtgb/signal.hpp"

namespace dhtgb {

/// Round trip through the transform pair keeping `guard` extra transform
/// points on each side: f'_m over the signal's own support.
template <typename Scalar>
BasicSignal<Scalar> reconstruct_with_guard(const BasicSignal<Scalar>& signal,
                                           Index guard) {
  const auto spectrum = guarded_forward(signal, guard);
  return inverse_dht(spectrum, signal.origin(), signal.last());
}

/// Root-mean-square pointwise difference over the common support, divided by
/// the width N.
template <typename Scalar>
Scalar rms_error(const BasicSignal<Scalar>& reference,
                 const BasicSignal<Scalar>& candidate) {
  if (!reference.same_support(candidate)) {
    throw ShapeMismatch("rms_error: signals differ in origin or width");
  }
  const Scalar sum_sq = (reference.samples() - candidate.samples()).squaredNorm();
  return std::sqrt(sum_sq / Scalar(reference.width()));
}

template <typename Scalar>
Scalar reconstruction_error(const BasicSignal<Scalar>& signal, Index guard) {
  return rms_error(signal, reconstruct_with_guard(signal, guard));
}

template <typename Scalar>
struct BasicErrorReport {
  Index guard = 0;
  Scalar rms_abs = 0;
  /// rms_abs divided by the zero-guard error; exactly 1 at guard 0.
  Scalar rms_ratio_to_zero_guard = 0;
};

using ErrorReport = BasicErrorReport<double>;

template <typename Scalar>
struct BasicGuardSweep {
  Scalar baseline_rms = 0;
  std::vector<BasicErrorReport<Scalar>> rows;
};

using GuardSweep = BasicGuardSweep<double>;

namespace detail {

template <typename Scalar>
Scalar checked_baseline(const BasicSignal<Scalar>& signal) {
  const Scalar baseline = reconstruction_error(signal, Index(0));
  if (baseline == Scalar(0)) {
    throw DegenerateBaseline(
        "zero-guard reconstruction is exact; error ratio is undefined");
  }
  return baseline;
}

}  // namespace detail

/// Absolute error at `guard` and its ratio to the zero-guard error. Throws
/// DegenerateBaseline when the zero-guard error is exactly zero.
template <typename Scalar>
BasicErrorReport<Scalar> error_ratio(const BasicSignal<Scalar>& signal,
                                     Index guard) {
  if (guard < 0) throw RangeError("guard width must be non-negative");
  const Scalar baseline = detail::checked_baseline(signal);
  const Scalar abs =
      guard == 0 ? baseline : reconstruction_error(signal, guard);
  return {guard, abs, abs / baseline};
}

/// Smallest guard in [0, max_guard] whose reconstruction error is below
/// `theta`. Linear scan: the error is not known to be monotone in the guard.
template <typename Scalar>
std::optional<Index> min_guard_band(const BasicSignal<Scalar>& signal,
                                    Scalar theta, Index max_guard) {
  if (!(theta > Scalar(0)) || !std::isfinite(static_cast<double>(theta))) {
    throw InvalidInput("theta must be a positive finite number");
  }
  if (max_guard < 0) throw RangeError("max guard must be non-negative");
  for (Index m = 0; m <= max_guard; ++m) {
    if (reconstruction_error(signal, m) < theta) return m;
  }
  return std::nullopt;
}

/// One ErrorReport per guard value. Guards must be strictly ascending and
/// start at 0; the zero-guard error is computed once and shared by all rows.
template <typename Scalar>
BasicGuardSweep<Scalar> sweep(const BasicSignal<Scalar>& signal,
                              std::span<const Index> guards) {
  if (guards.empty()) throw InvalidInput("guard list is empty");
  if (guards.front() != 0) throw InvalidInput("guard list must start at 0");
  for (std::size_t i = 1; i < guards.size(); ++i) {
    if (guards[i] <= guards[i - 1]) {
      throw InvalidInput("guard list must be strictly ascending");
    }
  }

  BasicGuardSweep<Scalar> out;
  out.baseline_rms = detail::checked_baseline(signal);
  out.rows.reserve(guards.size());
  for (const Index m : guards) {
    const Scalar abs =
        m == 0 ? out.baseline_rms : reconstruction_error(signal, m);
    out.rows.push_back({m, abs, abs / out.baseline_rms});
  }
  return out;
}

}  // namespace dhtgb
