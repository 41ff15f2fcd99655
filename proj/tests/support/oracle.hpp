#pragma once

// Naive double-loop evaluation of the transform pair, for tests only. Shares
// nothing with the Eigen kernel beyond the Signal container.

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dhtgb/errors.hpp"
#include "dhtgb/signal.hpp"

namespace dhtgb::testing {

template <typename Scalar>
BasicSignal<Scalar> oracle_parity_sum(const BasicSignal<Scalar>& input, Index out_lo,
                                      Index out_hi, Scalar scale) {
  if (out_lo > out_hi) throw RangeError("oracle: lo > hi");
  Vector<Scalar> out(out_hi - out_lo + 1);
  for (Index i = out_lo; i <= out_hi; ++i) {
    Scalar acc = 0;
    for (Index j = input.origin(); j <= input.last(); ++j) {
      const Index diff = i - j;
      if (diff % 2 == 0) continue;  // same parity: no term
      if (std::abs(diff) < 1) throw std::logic_error("oracle: singular term");
      acc += input(j) / Scalar(diff);
    }
    out[i - out_lo] = scale * acc;
  }
  return BasicSignal<Scalar>(out_lo, out);
}

template <typename Scalar>
BasicSignal<Scalar> oracle_forward(const BasicSignal<Scalar>& signal, Index k_lo,
                                   Index k_hi) {
  return oracle_parity_sum(signal, k_lo, k_hi, Scalar(2) / std::numbers::pi_v<Scalar>);
}

template <typename Scalar>
BasicSignal<Scalar> oracle_inverse(const BasicSignal<Scalar>& spectrum, Index n_lo,
                                   Index n_hi) {
  return oracle_parity_sum(spectrum, n_lo, n_hi,
                           Scalar(-2) / std::numbers::pi_v<Scalar>);
}

/// ||a - b|| / ||b||, or ||a - b|| when b is zero.
template <typename Scalar>
Scalar relative_rms(const BasicSignal<Scalar>& a, const BasicSignal<Scalar>& b) {
  const Scalar diff = (a.samples() - b.samples()).norm();
  const Scalar ref = b.samples().norm();
  return ref == Scalar(0) ? diff : diff / ref;
}

}  // namespace dhtgb::testing
