#pragma once

#include <Eigen/Core>

#include <string>
#include <utility>

#include "dhtgb/errors.hpp"

namespace dhtgb {

using Index = Eigen::Index;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Floor-mod parity of an absolute index; 0 for even, 1 for odd, also for
/// negative indices.
constexpr Index parity(Index i) { return ((i % 2) + 2) % 2; }

/// A finite real sequence anchored at an absolute integer index.
///
/// Sample i (origin <= i <= last()) is samples()[i - origin]; the sequence is
/// identically zero elsewhere. Used both for signals f(n) and for transform
/// values g(k).
template <typename Scalar>
class BasicSignal {
 public:
  BasicSignal(Index origin, Vector<Scalar> samples)
      : origin_(origin), samples_(std::move(samples)) {
    if (samples_.size() < 1) {
      throw InvalidInput("signal must contain at least one sample");
    }
    if (!samples_.allFinite()) {
      throw InvalidInput("signal samples must be finite");
    }
  }

  Index origin() const { return origin_; }
  Index width() const { return samples_.size(); }
  Index last() const { return origin_ + samples_.size() - 1; }
  const Vector<Scalar>& samples() const { return samples_; }

  /// Value at absolute index i, zero outside the support.
  Scalar operator()(Index i) const {
    if (i < origin_ || i > last()) return Scalar(0);
    return samples_[i - origin_];
  }

  bool same_support(const BasicSignal& other) const {
    return origin_ == other.origin_ && width() == other.width();
  }

  friend bool operator==(const BasicSignal& a, const BasicSignal& b) {
    return a.same_support(b) && a.samples_ == b.samples_;
  }

 private:
  Index origin_;
  Vector<Scalar> samples_;
};

using Signal = BasicSignal<double>;

/// Transform-domain values over [origin - guard, origin + N + guard - 1] for a
/// signal of width N starting at origin.
template <typename Scalar>
class BasicGuardedSpectrum {
 public:
  BasicGuardedSpectrum(Index signal_width, Index guard, BasicSignal<Scalar> values)
      : signal_width_(signal_width), guard_(guard), values_(std::move(values)) {
    if (guard_ < 0) throw RangeError("guard width must be non-negative");
    if (values_.width() != signal_width_ + 2 * guard_) {
      throw ShapeMismatch("spectrum length must equal signal width + 2 * guard");
    }
  }

  Index signal_width() const { return signal_width_; }
  Index guard() const { return guard_; }
  /// Total number of transform-domain points, N + 2m.
  Index size() const { return values_.width(); }
  Index first_index() const { return values_.origin(); }
  Index last_index() const { return values_.last(); }
  const BasicSignal<Scalar>& values() const { return values_; }

 private:
  Index signal_width_;
  Index guard_;
  BasicSignal<Scalar> values_;
};

using GuardedSpectrum = BasicGuardedSpectrum<double>;

}  // namespace dhtgb
