#include "hloc/inclusion.hpp"

#include <algorithm>
#include <cmath>

namespace hloc {

IntervalSet gerschgorin(const Tensor& a) {
    std::vector<Interval> comps;
    for (const RowProfile& p : row_profiles(a))
        comps.push_back({p.diag - p.r, p.diag + p.r, true, true});
    return IntervalSet(std::move(comps));
}

IntervalSet brauer_real(const Tensor& a) {
    if (a.dim() < 2) return gerschgorin(a);
    const std::vector<RowProfile> ps = row_profiles(a);
    IntervalSet result;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            const PairProfile q = pair_profile(a, ps[j], i);
            result = result.union_with(solve_abs_affine_product(
                ps[i].diag, ps[j].diag, q.r_j_i, ps[i].r * std::abs(q.a_ji), IntervalSet::all()));
        }
    return result;
}

IntervalSet double_b_bar_set(const Tensor& a, TildeMode mode) {
    const std::vector<RowProfile> ps = row_profiles(a);
    IntervalSet result;
    std::vector<Interval> rows;
    for (const RowProfile& p : ps) {
        rows.push_back({p.diag - p.beta, p.diag - p.gamma, true, true});
        const double tilde_hi = mode == TildeMode::corrected ? p.diag - p.gamma + p.theta
                                                             : p.diag - p.gamma - p.theta;
        rows.push_back({p.diag - p.beta - p.delta, tilde_hi, false, false});
    }
    result = IntervalSet(std::move(rows));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            const RowProfile& pi = ps[i];
            const RowProfile& pj = ps[j];
            const double lo_diag = std::min(pi.diag, pj.diag);
            const double hi_diag = std::max(pi.diag, pj.diag);
            // Lambda^1 on (-inf, min diag) and Lambda^4 on (max diag, +inf)
            // appear for every pair; the middle piece depends on the diagonal
            // order.
            result = result.union_with(solve_abs_affine_product(
                pi.diag - pi.beta, pj.diag - pj.beta, 0, pi.delta * pj.delta,
                IntervalSet::interval(-inf, lo_diag, false, false)));
            result = result.union_with(solve_abs_affine_product(
                pi.diag - pi.gamma, pj.diag - pj.gamma, 0, pi.theta * pj.theta,
                IntervalSet::interval(hi_diag, inf, false, false)));
            if (pi.diag < pj.diag) {
                result = result.union_with(solve_abs_affine_product(
                    pi.diag - pi.gamma, pj.diag - pj.beta, 0, pi.theta * pj.delta,
                    IntervalSet::open(pi.diag, pj.diag)));
            } else if (pi.diag > pj.diag) {
                result = result.union_with(solve_abs_affine_product(
                    pi.diag - pi.beta, pj.diag - pj.gamma, 0, pi.delta * pj.theta,
                    IntervalSet::open(pj.diag, pi.diag)));
            }
        }
    return result;
}

IntervalSet quasi_double_b_bar_set(const Tensor& a) {
    const std::vector<RowProfile> ps = row_profiles(a);
    std::vector<Interval> rows;
    for (const RowProfile& p : ps)
        rows.push_back({p.diag - p.beta, p.diag - p.gamma, true, true});
    IntervalSet result(std::move(rows));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            const RowProfile& pi = ps[i];
            const RowProfile& pj = ps[j];
            const PairProfile q = pair_profile(a, ps[j], i);
            const double lo_diag = std::min(pi.diag, pj.diag);
            const double hi_diag = std::max(pi.diag, pj.diag);
            result = result.union_with(solve_abs_affine_product(
                pi.diag - pi.beta, pj.diag - pj.beta, q.delta_j_i, (pj.beta - q.a_ji) * pi.delta,
                IntervalSet::interval(-inf, lo_diag, false, false)));
            result = result.union_with(solve_abs_affine_product(
                pi.diag - pi.gamma, pj.diag - pj.gamma, q.theta_j_i, (q.a_ji - pj.gamma) * pi.theta,
                IntervalSet::interval(hi_diag, inf, false, false)));
            if (pi.diag < pj.diag) {
                result = result.union_with(solve_abs_affine_product(
                    pi.diag - pi.gamma, pj.diag - pj.beta, q.delta_j_i, (pj.beta - q.a_ji) * pi.theta,
                    IntervalSet::open(pi.diag, pj.diag)));
            } else if (pi.diag > pj.diag) {
                result = result.union_with(solve_abs_affine_product(
                    pi.diag - pi.beta, pj.diag - pj.gamma, q.theta_j_i, (q.a_ji - pj.gamma) * pi.delta,
                    IntervalSet::open(pj.diag, pi.diag)));
            }
        }
    return result;
}

IntervalSet upsilon(const Tensor& a) {
    return brauer_real(a).intersect(quasi_double_b_bar_set(a));
}

}  // namespace hloc
