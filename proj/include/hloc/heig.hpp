#ifndef HLOC_HEIG_HPP
#define HLOC_HEIG_HPP

#include <cstdint>
#include <vector>

#include "hloc/interval_set.hpp"
#include "hloc/tensor.hpp"

namespace hloc {

// Real eigenpair A x^{m-1} = lambda x^[m-1] with x canonicalized to max-norm
// 1 and first nonzero component positive.
struct HEigenpair {
    double lambda = 0;
    std::vector<double> x;
    double residual = 0;  // max-norm of A x^{m-1} - lambda x^[m-1]
};

// Complete solver for dimension-2 tensors. Works in the affine chart
// x = (s, 1): the eigen condition reduces to one real polynomial of degree
// <= 2(m-1) in s, whose real roots are isolated by a derivative-chain
// bisection; the chart at infinity x = (1, 0) is checked separately.
// If the chart polynomial vanishes identically (every direction is an
// eigenvector) representative pairs at s in {0, 1, -1} are reported.
std::vector<HEigenpair> heig_exact_n2(const Tensor& a, double dedup_tol = 1e-8);

struct SshopmOptions {
    double shift = 0;       // 0 means auto: 1 + sum of |entries|
    bool auto_shift = true;
    int starts = 20;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    int max_iters = 10000;
    double dedup_tol = 1e-8;
};

// Shifted symmetric higher-order power iteration. Heuristic: only the
// residual bound of each reported pair is guaranteed, not completeness.
// Deterministic in (tensor, options); starts are independent and merged in
// start order.
std::vector<HEigenpair> sshopm(const Tensor& a, const SshopmOptions& opts = {});

struct ContainmentEntry {
    double lambda = 0;
    std::vector<bool> contained;  // one flag per provided set
};

struct ContainmentReport {
    std::vector<ContainmentEntry> entries;
    bool all_contained = true;
};

// Membership of each eigenvalue in each set, the set dilated by its paired
// epsilon (0 for the sets whose endpoints are exact).
ContainmentReport verify_containment(const std::vector<HEigenpair>& pairs,
                                     const std::vector<IntervalSet>& sets,
                                     const std::vector<double>& epsilons);

// All real roots of sum coeffs[k] x^k, isolated on a Cauchy bound bracket by
// recursive monotonic bisection, refined to ~1e-12 relative.
std::vector<double> poly_real_roots(std::vector<double> coeffs);

}  // namespace hloc

#endif
