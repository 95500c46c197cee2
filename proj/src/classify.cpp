#include "hloc/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "hloc/inclusion.hpp"

namespace hloc {

namespace {

PredicateResult fail(std::string rule, int i, int j, double lhs, double rhs) {
    PredicateResult r;
    r.value = false;
    r.witness = Witness{std::move(rule), i, j, lhs, rhs};
    return r;
}

PredicateResult pass() { return PredicateResult{true, std::nullopt}; }

// Sum of |alpha_i - a| over the off-diagonal slots of row i: Delta_i when
// alpha_i = beta_i, Theta_i when alpha_i = gamma_i.
double alpha_spread(const RowProfile& p) { return p.diag < 0 ? p.theta : p.delta; }

}  // namespace

PredicateResult is_double_b(const Tensor& a) {
    const std::vector<RowProfile> ps = row_profiles(a);
    for (const RowProfile& p : ps) {
        if (!(p.diag > p.beta)) return fail("diag > beta", p.index, -1, p.diag, p.beta);
        if (!(p.diag - p.beta >= p.delta))
            return fail("diag - beta >= delta", p.index, -1, p.diag - p.beta, p.delta);
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            const double lhs = (ps[i].diag - ps[i].beta) * (ps[j].diag - ps[j].beta);
            const double rhs = ps[i].delta * ps[j].delta;
            if (!(lhs > rhs)) return fail("(diag-beta)_i (diag-beta)_j > delta_i delta_j", i, j, lhs, rhs);
        }
    return pass();
}

PredicateResult is_quasi_double_b(const Tensor& a, QuasiDef def) {
    const std::vector<RowProfile> ps = row_profiles(a);
    for (const RowProfile& p : ps)
        if (!(p.diag > p.beta)) return fail("diag > beta", p.index, -1, p.diag, p.beta);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            const PairProfile q = pair_profile(a, ps[j], i);
            const double lhs =
                (ps[i].diag - ps[i].beta) * (ps[j].diag - ps[j].beta - q.delta_j_i);
            const double rhs = def == QuasiDef::theorem
                                   ? (ps[j].beta - q.a_ji) * ps[i].delta
                                   : (ps[i].beta - q.a_ji) * ps[j].delta;
            if (!(lhs > rhs)) return fail("quasi pair inequality", i, j, lhs, rhs);
        }
    return pass();
}

PredicateResult is_double_b_bar(const Tensor& a, BarRoute route) {
    if (route == BarRoute::via_abar) return is_double_b(sign_normalize(a));
    const std::vector<RowProfile> ps = row_profiles(a);
    for (const RowProfile& p : ps)
        if (!(std::abs(p.diag) > std::abs(p.alpha)))
            return fail("|diag| > |alpha|", p.index, -1, std::abs(p.diag), std::abs(p.alpha));
    for (const RowProfile& p : ps) {
        const double lhs = std::abs(p.diag - p.alpha);
        const double rhs = alpha_spread(p);
        if (!(lhs >= rhs)) return fail("|diag - alpha| >= alpha spread", p.index, -1, lhs, rhs);
    }
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            const double lhs =
                std::abs(ps[i].diag - ps[i].alpha) * std::abs(ps[j].diag - ps[j].alpha);
            const double rhs = alpha_spread(ps[i]) * alpha_spread(ps[j]);
            if (!(lhs > rhs)) return fail("alpha pair product", i, j, lhs, rhs);
        }
    return pass();
}

PredicateResult is_quasi_double_b_bar(const Tensor& a, BarRoute route, QuasiDef def) {
    if (route == BarRoute::via_abar) return is_quasi_double_b(sign_normalize(a), def);
    if (def != QuasiDef::theorem)
        throw std::invalid_argument("alpha route exists only for the theorem-form definition");
    const std::vector<RowProfile> ps = row_profiles(a);
    for (const RowProfile& p : ps)
        if (!(std::abs(p.diag) > std::abs(p.alpha)))
            return fail("|diag| > |alpha|", p.index, -1, std::abs(p.diag), std::abs(p.alpha));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            const double a_ji = a.entry_row_at_repeated(j, i);
            const double spread_j_i = alpha_spread(ps[j]) - std::abs(ps[j].alpha - a_ji);
            const double lhs =
                std::abs(ps[i].diag - ps[i].alpha) * (std::abs(ps[j].diag - ps[j].alpha) - spread_j_i);
            const double rhs = std::abs(ps[j].alpha - a_ji) * alpha_spread(ps[i]);
            if (!(lhs > rhs)) return fail("alpha quasi pair inequality", i, j, lhs, rhs);
        }
    return pass();
}

PredicateResult is_dsdd(const Tensor& a) {
    const std::vector<RowProfile> ps = row_profiles(a);
    if (a.order() > 2)
        for (const RowProfile& p : ps)
            if (!(std::abs(p.diag) >= p.r))
                return fail("|diag| >= r", p.index, -1, std::abs(p.diag), p.r);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            const double lhs = std::abs(ps[i].diag) * std::abs(ps[j].diag);
            const double rhs = ps[i].r * ps[j].r;
            if (!(lhs > rhs)) return fail("|diag_i||diag_j| > r_i r_j", i, j, lhs, rhs);
        }
    return pass();
}

PredicateResult is_qdsdd(const Tensor& a) {
    const std::vector<RowProfile> ps = row_profiles(a);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) {
            if (i == j) continue;
            const PairProfile q = pair_profile(a, ps[j], i);
            const double lhs = std::abs(ps[i].diag) * (std::abs(ps[j].diag) - q.r_j_i);
            const double rhs = ps[i].r * std::abs(q.a_ji);
            if (!(lhs > rhs)) return fail("|diag_i|(|diag_j| - r_j^i) > r_i |a_ji..i|", i, j, lhs, rhs);
        }
    return pass();
}

ClassificationReport classify_all(const Tensor& a, QuasiDef def) {
    ClassificationReport rep;
    rep.double_b = is_double_b(a);
    rep.quasi_double_b = is_quasi_double_b(a, def);
    rep.double_b_bar = is_double_b_bar(a, BarRoute::via_abar);
    rep.quasi_double_b_bar = is_quasi_double_b_bar(a, BarRoute::via_abar, def);
    rep.dsdd = is_dsdd(a);
    rep.qdsdd = is_qdsdd(a);
    rep.z_tensor = is_z_tensor(a);
    rep.symmetric = is_symmetric(a);
    if (is_double_b_bar(a, BarRoute::via_alpha).value != rep.double_b_bar.value)
        throw std::logic_error("double B-bar route disagreement");
    if (def == QuasiDef::theorem &&
        is_quasi_double_b_bar(a, BarRoute::via_alpha, def).value != rep.quasi_double_b_bar.value)
        throw std::logic_error("quasi-double B-bar route disagreement");
    return rep;
}

const char* to_string(PdVerdict v) {
    switch (v) {
        case PdVerdict::Certified: return "Certified";
        case PdVerdict::Unknown: return "Unknown";
        case PdVerdict::NotApplicable: return "NotApplicable";
    }
    return "?";
}

PdCertificate certify_positive_definite(const Tensor& a) {
    PdCertificate cert;
    if (a.order() % 2 != 0) {
        cert.verdict = PdVerdict::NotApplicable;
        cert.reason = "odd order";
        return cert;
    }
    if (!is_symmetric(a)) {
        cert.verdict = PdVerdict::NotApplicable;
        cert.reason = "nonsymmetric";
        return cert;
    }

    const IntervalSet sets[] = {gerschgorin(a), brauer_real(a), double_b_bar_set(a),
                                quasi_double_b_bar_set(a), upsilon(a)};
    double best_lower = -inf;
    bool all_positive = true;
    for (const IntervalSet& s : sets) {
        const double lo = s.is_empty() ? inf : s.components().front().lo;
        best_lower = std::max(best_lower, lo);
        if (!(lo > 0)) all_positive = false;
    }
    cert.eigen_lower_bound = best_lower;

    bool diag_positive = true;
    for (int i = 0; i < a.dim(); ++i)
        if (!(a.diag(i) > 0)) diag_positive = false;

    if (diag_positive && is_dsdd(a)) {
        cert.verdict = PdVerdict::Certified;
        cert.reason = "dsdd with positive diagonal";
    } else if (diag_positive && is_qdsdd(a)) {
        cert.verdict = PdVerdict::Certified;
        cert.reason = "qdsdd with positive diagonal";
    } else if (is_double_b(a)) {
        cert.verdict = PdVerdict::Certified;
        cert.reason = "double B";
    } else if (is_quasi_double_b(a)) {
        cert.verdict = PdVerdict::Certified;
        cert.reason = "quasi-double B";
    } else if (all_positive) {
        cert.verdict = PdVerdict::Certified;
        cert.reason = "all inclusion sets strictly positive";
    } else {
        cert.verdict = PdVerdict::Unknown;
        cert.reason = "no sufficient condition fired";
    }
    return cert;
}

}  // namespace hloc
