#include "hloc/heig.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace hloc {

namespace {

double horner(const std::vector<double>& c, double x) {
    double v = 0;
    for (std::size_t k = c.size(); k-- > 0;) v = v * x + c[k];
    return v;
}

// Sum of |c_k x^k|; conditioning scale for "is P(x) effectively zero".
double horner_abs(const std::vector<double>& c, double x) {
    double v = 0;
    const double ax = std::abs(x);
    for (std::size_t k = c.size(); k-- > 0;) v = v * ax + std::abs(c[k]);
    return v;
}

double bisect_root(const std::vector<double>& c, double a, double b) {
    double fa = horner(c, a);
    if (fa == 0) return a;
    double fb = horner(c, b);
    if (fb == 0) return b;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = horner(c, mid);
        if (fm == 0) return mid;
        if ((fa < 0) == (fm < 0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        if (b - a <= 1e-15 * std::max({1.0, std::abs(a), std::abs(b)})) break;
    }
    return 0.5 * (a + b);
}

std::vector<double> derivative(const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    return d;
}

void canonicalize(std::vector<double>& x) {
    double mx = 0;
    for (double v : x) mx = std::max(mx, std::abs(v));
    if (mx == 0) throw std::logic_error("zero eigenvector");
    for (double& v : x) v /= mx;
    for (double v : x) {
        if (v != 0) {
            if (v < 0)
                for (double& w : x) w = -w;
            break;
        }
    }
}

// Least-squares lambda and max-norm residual for a canonical x.
void fit_lambda(const Tensor& a, const std::vector<double>& x, double& lambda, double& residual) {
    const std::vector<double> y = apply_power(a, x);
    const std::vector<double> xp = hadamard_power(x, a.order() - 1);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        num += y[i] * xp[i];
        den += xp[i] * xp[i];
    }
    lambda = den > 0 ? num / den : 0;
    residual = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        residual = std::max(residual, std::abs(y[i] - lambda * xp[i]));
}

bool same_pair(const HEigenpair& a, const HEigenpair& b, double tol) {
    if (std::abs(a.lambda - b.lambda) > tol) return false;
    for (std::size_t i = 0; i < a.x.size(); ++i)
        if (std::abs(a.x[i] - b.x[i]) > tol) return false;
    return true;
}

void push_dedup(std::vector<HEigenpair>& out, HEigenpair p, double tol) {
    for (const HEigenpair& q : out)
        if (same_pair(p, q, tol)) return;
    out.push_back(std::move(p));
}

}  // namespace

std::vector<double> poly_real_roots(std::vector<double> coeffs) {
    double maxc = 0;
    for (double c : coeffs) maxc = std::max(maxc, std::abs(c));
    if (maxc == 0) return {};
    while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-13 * maxc) coeffs.pop_back();
    const std::size_t deg = coeffs.empty() ? 0 : coeffs.size() - 1;
    if (deg == 0) return {};
    if (deg == 1) return {-coeffs[0] / coeffs[1]};
    if (deg == 2) {
        const double a = coeffs[2], b = coeffs[1], c = coeffs[0];
        const double disc = b * b - 4 * a * c;
        if (disc < 0) return {};
        const double sq = std::sqrt(disc);
        const double qv = -0.5 * (b + std::copysign(sq, b));
        double r1 = qv / a;
        double r2 = qv != 0 ? c / qv : -b / (2 * a);
        if (r1 > r2) std::swap(r1, r2);
        if (r1 == r2) return {r1};
        return {r1, r2};
    }

    double bound = 0;
    for (std::size_t k = 0; k + 1 < coeffs.size(); ++k)
        bound = std::max(bound, std::abs(coeffs[k] / coeffs.back()));
    bound += 1;

    std::vector<double> breaks{-bound};
    for (double cp : poly_real_roots(derivative(coeffs)))
        if (cp > -bound && cp < bound) breaks.push_back(cp);
    breaks.push_back(bound);
    std::sort(breaks.begin(), breaks.end());

    std::vector<double> roots;
    auto add_root = [&](double r) {
        for (double existing : roots)
            if (std::abs(existing - r) <= 1e-12 * std::max({1.0, std::abs(existing), std::abs(r)}))
                return;
        roots.push_back(r);
    };
    for (std::size_t k = 0; k < breaks.size(); ++k) {
        const double x = breaks[k];
        // tangency at a critical point (even-multiplicity root)
        if (std::abs(horner(coeffs, x)) <= 1e-10 * std::max(1.0, horner_abs(coeffs, x))) {
            add_root(x);
            continue;
        }
        if (k + 1 < breaks.size()) {
            const double fa = horner(coeffs, x);
            const double fb = horner(coeffs, breaks[k + 1]);
            if ((fa < 0) != (fb < 0)) add_root(bisect_root(coeffs, x, breaks[k + 1]));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<HEigenpair> heig_exact_n2(const Tensor& a, double dedup_tol) {
    if (a.dim() != 2) throw std::invalid_argument("exact solver requires dimension 2");
    if (a.order() < 2) throw std::invalid_argument("exact solver requires order >= 2");
    const int m = a.order();
    const std::size_t rs = a.row_size();

    // In the chart x = (s, 1) the row actions are polynomials in s; the
    // exponent of s for a slot is the number of indices equal to the first
    // axis.
    std::vector<double> f1(static_cast<std::size_t>(m), 0.0), f2(static_cast<std::size_t>(m), 0.0);
    std::vector<int> idx(static_cast<std::size_t>(m - 1));
    for (std::size_t t = 0; t < rs; ++t) {
        std::size_t rem = t;
        int zeros = 0;
        for (int k = m - 2; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rem % 2);
            rem /= 2;
        }
        for (int k = 0; k < m - 1; ++k)
            if (idx[static_cast<std::size_t>(k)] == 0) ++zeros;
        f1[static_cast<std::size_t>(zeros)] += a.data()[t];
        f2[static_cast<std::size_t>(zeros)] += a.data()[rs + t];
    }

    std::vector<double> p(static_cast<std::size_t>(2 * (m - 1) + 1), 0.0);
    for (int k = 0; k < m; ++k) {
        p[static_cast<std::size_t>(k)] += f1[static_cast<std::size_t>(k)];
        p[static_cast<std::size_t>(k + m - 1)] -= f2[static_cast<std::size_t>(k)];
    }

    std::vector<HEigenpair> out;
    auto add_chart_pair = [&](double s) {
        HEigenpair pr;
        pr.x = {s, 1.0};
        canonicalize(pr.x);
        fit_lambda(a, pr.x, pr.lambda, pr.residual);
        push_dedup(out, std::move(pr), dedup_tol);
    };

    bool zero_poly = true;
    for (double c : p)
        if (c != 0) zero_poly = false;
    if (zero_poly) {
        // Every direction (s, 1) is an eigenvector; report representatives.
        for (double s : {0.0, 1.0, -1.0}) add_chart_pair(s);
    } else {
        for (double s : poly_real_roots(p)) add_chart_pair(s);
    }

    // chart at infinity x = (1, 0)
    {
        const std::vector<double> x{1.0, 0.0};
        const std::vector<double> y = apply_power(a, x);
        if (std::abs(y[1]) <= 1e-12 * (1.0 + std::abs(y[0]))) {
            HEigenpair pr;
            pr.x = x;
            fit_lambda(a, pr.x, pr.lambda, pr.residual);
            push_dedup(out, std::move(pr), dedup_tol);
        }
    }

    std::sort(out.begin(), out.end(),
              [](const HEigenpair& l, const HEigenpair& r) { return l.lambda < r.lambda; });
    return out;
}

std::vector<HEigenpair> sshopm(const Tensor& a, const SshopmOptions& opts) {
    if (!is_symmetric(a)) throw std::invalid_argument("sshopm requires a symmetric tensor");
    if (a.order() < 2) throw std::invalid_argument("sshopm requires order >= 2");
    const int m = a.order();
    const int n = a.dim();

    double shift = opts.shift;
    if (opts.auto_shift) {
        shift = 1;
        for (double v : a.data()) shift += std::abs(v);
    }

    std::vector<std::vector<HEigenpair>> per_start(static_cast<std::size_t>(opts.starts));
#pragma omp parallel for schedule(dynamic)
    for (int k = 0; k < opts.starts; ++k) {
        std::mt19937_64 rng(opts.seed + 0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(k + 1));
        std::normal_distribution<double> gauss;
        std::vector<double> x(static_cast<std::size_t>(n));
        double norm = 0;
        do {
            norm = 0;
            for (double& v : x) {
                v = gauss(rng);
                norm += v * v;
            }
        } while (norm == 0);
        norm = std::sqrt(norm);
        for (double& v : x) v /= norm;

        for (int it = 0; it < opts.max_iters; ++it) {
            const std::vector<double> y = apply_power(a, x);
            const std::vector<double> xp = hadamard_power(x, m - 1);
            double num = 0, den = 0, mx = 0;
            for (int i = 0; i < n; ++i) {
                num += y[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(i)];
                den += xp[static_cast<std::size_t>(i)] * xp[static_cast<std::size_t>(i)];
                mx = std::max(mx, std::abs(x[static_cast<std::size_t>(i)]));
            }
            const double lambda = num / den;
            double resid = 0;
            for (int i = 0; i < n; ++i)
                resid = std::max(resid, std::abs(y[static_cast<std::size_t>(i)] -
                                                 lambda * xp[static_cast<std::size_t>(i)]));
            double scale = 1;
            for (int t = 0; t < m - 1; ++t) scale *= mx;
            if (resid / scale < opts.tol) {
                HEigenpair pr;
                pr.x = x;
                canonicalize(pr.x);
                fit_lambda(a, pr.x, pr.lambda, pr.residual);
                per_start[static_cast<std::size_t>(k)].push_back(std::move(pr));
                break;
            }
            double wnorm = 0;
            std::vector<double> w(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) {
                const double z = y[static_cast<std::size_t>(i)] +
                                 shift * xp[static_cast<std::size_t>(i)];
                // odd real root of z, sign preserved (m - 1 is odd for even m)
                w[static_cast<std::size_t>(i)] =
                    std::copysign(std::pow(std::abs(z), 1.0 / (m - 1)), z);
                wnorm += w[static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
            }
            if (wnorm == 0) break;
            wnorm = std::sqrt(wnorm);
            for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = w[static_cast<std::size_t>(i)] / wnorm;
        }
    }

    std::vector<HEigenpair> out;
    for (const std::vector<HEigenpair>& batch : per_start)
        for (const HEigenpair& pr : batch) push_dedup(out, pr, opts.dedup_tol);
    return out;
}

ContainmentReport verify_containment(const std::vector<HEigenpair>& pairs,
                                     const std::vector<IntervalSet>& sets,
                                     const std::vector<double>& epsilons) {
    if (sets.size() != epsilons.size())
        throw std::invalid_argument("one epsilon per set required");
    std::vector<IntervalSet> dilated;
    dilated.reserve(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k)
        dilated.push_back(epsilons[k] > 0 ? sets[k].dilate(epsilons[k]) : sets[k]);
    ContainmentReport rep;
    for (const HEigenpair& pr : pairs) {
        ContainmentEntry e;
        e.lambda = pr.lambda;
        for (const IntervalSet& s : dilated) {
            const bool in = s.contains(pr.lambda);
            e.contained.push_back(in);
            if (!in) rep.all_contained = false;
        }
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace hloc
