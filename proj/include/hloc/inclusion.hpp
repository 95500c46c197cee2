#ifndef HLOC_INCLUSION_HPP
#define HLOC_INCLUSION_HPP

#include "hloc/interval_set.hpp"
#include "hloc/tensor.hpp"

namespace hloc {

// Right endpoint of the open single-row interval in the double-B-bar set.
// The source statement prints diag - gamma_i - Theta_i, which provably cannot
// contain the large H-eigenvalue of the worked 4th-order example; the
// corrected endpoint diag - gamma_i + Theta_i is the default. The literal
// form is kept for comparison.
enum class TildeMode { corrected, literal };

// Gerschgorin set: union of closed [diag_i - r_i, diag_i + r_i].
IntervalSet gerschgorin(const Tensor& a);

// Real section of the Brauer-type set, over ordered pairs i != j.
// For dim 1 falls back to the Gerschgorin set.
IntervalSet brauer_real(const Tensor& a);

// Double-B-bar intervals. Intended for even-order symmetric tensors; the
// construction itself is total.
IntervalSet double_b_bar_set(const Tensor& a, TildeMode mode = TildeMode::corrected);

// Quasi-double-B-bar intervals.
IntervalSet quasi_double_b_bar_set(const Tensor& a);

// Intersection of the Brauer set and the quasi-double-B-bar intervals.
IntervalSet upsilon(const Tensor& a);

}  // namespace hloc

#endif
