#pragma once

#include <Eigen/Core>

#include <numbers>

#include "dhtgb/errors.hpp"
#include "dhtgb/signal.hpp"

namespace dhtgb {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense block of the 1/(row - col) kernel between rows
/// row_first, row_first + 2, ... and columns col_first, col_first + 2, ...
///
/// row_first - col_first must be odd, so every entry has an odd (non-zero)
/// denominator. The block is Toeplitz; the reciprocals are tabulated once per
/// diagonal.
template <typename Scalar>
DenseMatrix<Scalar> parity_kernel_block(Index row_first, Index rows,
                                        Index col_first, Index cols) {
  const Index offset = row_first - col_first;
  if (parity(offset) != 1) {
    throw InvalidInput("parity kernel block requires an odd index offset");
  }
  // diagonal[r - c + cols - 1] = 1 / (offset + 2 (r - c))
  Vector<Scalar> diagonal(rows + cols - 1);
  for (Index t = 0; t < diagonal.size(); ++t) {
    diagonal[t] = Scalar(1) / Scalar(offset + 2 * (t - cols + 1));
  }
  return DenseMatrix<Scalar>::NullaryExpr(
      rows, cols, [&diagonal, cols](Index r, Index c) {
        return diagonal[r - c + cols - 1];
      });
}

namespace detail {

struct ParityLane {
  Index first = 0;
  Index count = 0;
};

// Indices in [lo, hi] with the given parity.
inline ParityLane parity_lane(Index lo, Index hi, Index wanted) {
  const Index first = lo + (parity(lo) == wanted ? 0 : 1);
  if (first > hi) return {first, 0};
  return {first, (hi - first) / 2 + 1};
}

// out(i) = scale * sum_{j : i - j odd} in(j) / (i - j), for i in [out_lo, out_hi].
template <typename Scalar>
BasicSignal<Scalar> apply_parity_kernel(const BasicSignal<Scalar>& input,
                                        Index out_lo, Index out_hi,
                                        Scalar scale) {
  if (out_lo > out_hi) throw RangeError("output range is empty (lo > hi)");

  using Strided = Eigen::InnerStride<2>;
  Vector<Scalar> out = Vector<Scalar>::Zero(out_hi - out_lo + 1);

  for (Index out_parity : {Index(0), Index(1)}) {
    const ParityLane rows = parity_lane(out_lo, out_hi, out_parity);
    const ParityLane cols =
        parity_lane(input.origin(), input.last(), 1 - out_parity);
    if (rows.count == 0 || cols.count == 0) continue;

    Eigen::Map<Vector<Scalar>, 0, Strided> lane(
        out.data() + (rows.first - out_lo), rows.count);
    Eigen::Map<const Vector<Scalar>, 0, Strided> source(
        input.samples().data() + (cols.first - input.origin()), cols.count);
    const DenseMatrix<Scalar> block = parity_kernel_block<Scalar>(
        rows.first, rows.count, cols.first, cols.count);
    lane.noalias() = scale * (block * source);
  }
  return BasicSignal<Scalar>(out_lo, std::move(out));
}

}  // namespace detail

/// Non-periodic discrete Hilbert transform g(k) for k in [k_lo, k_hi].
///
/// g(k) = (2/pi) sum f(n) / (k - n), where n runs over the samples of the
/// signal whose parity is opposite to k. Throws RangeError if k_lo > k_hi.
template <typename Scalar>
BasicSignal<Scalar> forward_dht(const BasicSignal<Scalar>& signal, Index k_lo,
                                Index k_hi) {
  return detail::apply_parity_kernel(signal, k_lo, k_hi,
                                     Scalar(2) / std::numbers::pi_v<Scalar>);
}

/// Inverse transform f(n) for n in [n_lo, n_hi] from whatever transform values
/// are available; values outside their support are treated as zero.
template <typename Scalar>
BasicSignal<Scalar> inverse_dht(const BasicSignal<Scalar>& spectrum, Index n_lo,
                                Index n_hi) {
  return detail::apply_parity_kernel(spectrum, n_lo, n_hi,
                                     Scalar(-2) / std::numbers::pi_v<Scalar>);
}

template <typename Scalar>
BasicSignal<Scalar> inverse_dht(const BasicGuardedSpectrum<Scalar>& spectrum,
                                Index n_lo, Index n_hi) {
  return inverse_dht(spectrum.values(), n_lo, n_hi);
}

/// Forward transform over the signal's support widened by `guard` points on
/// each side.
template <typename Scalar>
BasicGuardedSpectrum<Scalar> guarded_forward(const BasicSignal<Scalar>& signal,
                                             Index guard) {
  if (guard < 0) throw RangeError("guard width must be non-negative");
  return BasicGuardedSpectrum<Scalar>(
      signal.width(), guard,
      forward_dht(signal, signal.origin() - guard, signal.last() + guard));
}

}  // namespace dhtgb
