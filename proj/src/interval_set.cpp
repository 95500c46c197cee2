#include "hloc/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hloc {

namespace {

constexpr double rel_tol = 1e-12;

bool near(double a, double b) {
    if (a == b) return true;
    if (!std::isfinite(a) || !std::isfinite(b)) return false;
    return std::abs(a - b) <= rel_tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::string fmt_endpoint(double v, int digits) {
    if (v == inf) return "+inf";
    if (v == -inf) return "-inf";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> components) {
    std::vector<Interval> kept;
    kept.reserve(components.size());
    for (Interval c : components) {
        if (std::isnan(c.lo) || std::isnan(c.hi)) throw std::invalid_argument("NaN interval endpoint");
        if (c.lo == -inf) c.lo_closed = false;
        if (c.hi == inf) c.hi_closed = false;
        if (near(c.lo, c.hi)) {
            if (!(c.lo_closed && c.hi_closed)) continue;  // empty or open sliver
            c.hi = c.lo;                                  // collapse to a point
        } else if (c.lo > c.hi) {
            continue;
        }
        kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), [](const Interval& a, const Interval& b) {
        if (a.lo != b.lo) return a.lo < b.lo;
        if (a.lo_closed != b.lo_closed) return a.lo_closed;
        return a.hi < b.hi;
    });
    for (const Interval& c : kept) {
        if (!comps_.empty()) {
            Interval& cur = comps_.back();
            const bool touching = near(c.lo, cur.hi) && (cur.hi_closed || c.lo_closed);
            if (c.lo < cur.hi || touching) {
                if (near(cur.lo, c.lo)) cur.lo_closed = cur.lo_closed || c.lo_closed;
                if (near(cur.hi, c.hi)) {
                    cur.hi = std::max(cur.hi, c.hi);
                    cur.hi_closed = cur.hi_closed || c.hi_closed;
                } else if (c.hi > cur.hi) {
                    cur.hi = c.hi;
                    cur.hi_closed = c.hi_closed;
                }
                continue;
            }
        }
        comps_.push_back(c);
    }
}

IntervalSet IntervalSet::union_with(const IntervalSet& other) const {
    std::vector<Interval> all = comps_;
    all.insert(all.end(), other.comps_.begin(), other.comps_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const Interval& a : comps_) {
        for (const Interval& b : other.comps_) {
            Interval c;
            if (a.lo > b.lo) {
                c.lo = a.lo;
                c.lo_closed = a.lo_closed;
            } else if (b.lo > a.lo) {
                c.lo = b.lo;
                c.lo_closed = b.lo_closed;
            } else {
                c.lo = a.lo;
                c.lo_closed = a.lo_closed && b.lo_closed;
            }
            if (a.hi < b.hi) {
                c.hi = a.hi;
                c.hi_closed = a.hi_closed;
            } else if (b.hi < a.hi) {
                c.hi = b.hi;
                c.hi_closed = b.hi_closed;
            } else {
                c.hi = a.hi;
                c.hi_closed = a.hi_closed && b.hi_closed;
            }
            if (c.lo < c.hi || (c.lo == c.hi && c.lo_closed && c.hi_closed)) out.push_back(c);
        }
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement() const {
    std::vector<Interval> out;
    double prev = -inf;
    bool prev_closed = false;  // whether prev endpoint is excluded from complement
    for (const Interval& c : comps_) {
        Interval gap{prev, c.lo, !prev_closed && std::isfinite(prev), !c.lo_closed};
        if (gap.lo < gap.hi || (gap.lo == gap.hi && gap.lo_closed && gap.hi_closed))
            out.push_back(gap);
        prev = c.hi;
        prev_closed = c.hi_closed;
    }
    Interval tail{prev, inf, !prev_closed && std::isfinite(prev), false};
    if (tail.lo < tail.hi) out.push_back(tail);
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::dilate(double eps) const {
    if (eps < 0) throw std::invalid_argument("dilate needs eps >= 0");
    std::vector<Interval> out;
    out.reserve(comps_.size());
    for (const Interval& c : comps_)
        out.push_back({c.lo == -inf ? -inf : c.lo - eps, c.hi == inf ? inf : c.hi + eps,
                       std::isfinite(c.lo), std::isfinite(c.hi)});
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::hull() const {
    if (comps_.empty()) return empty();
    return IntervalSet({{comps_.front().lo, comps_.back().hi, comps_.front().lo_closed,
                         comps_.back().hi_closed}});
}

bool IntervalSet::contains(double x) const {
    for (const Interval& c : comps_) {
        const bool above = x > c.lo || (x == c.lo && c.lo_closed);
        const bool below = x < c.hi || (x == c.hi && c.hi_closed);
        if (above && below) return true;
    }
    return false;
}

bool IntervalSet::subset_of(const IntervalSet& other, double tol) const {
    const IntervalSet residual = intersect(other.complement());
    if (tol <= 0) return residual.is_empty();
    for (const Interval& c : residual.comps_)
        if (c.hi - c.lo > tol) return false;
    return true;
}

std::string IntervalSet::to_string(int significant_digits) const {
    if (comps_.empty()) return "{}";
    std::string s;
    for (std::size_t k = 0; k < comps_.size(); ++k) {
        const Interval& c = comps_[k];
        if (k) s += " ∪ ";
        if (c.lo == c.hi) {
            s += "{" + fmt_endpoint(c.lo, significant_digits) + "}";
        } else {
            s += c.lo_closed ? "[" : "(";
            s += fmt_endpoint(c.lo, significant_digits) + ", " + fmt_endpoint(c.hi, significant_digits);
            s += c.hi_closed ? "]" : ")";
        }
    }
    return s;
}

namespace {

// Solution set of A x^2 + B x + C <= 0 with A in {-1, 0, +1} scale.
IntervalSet quadratic_leq_zero(double A, double B, double C) {
    if (A == 0) {
        if (B == 0) return C <= 0 ? IntervalSet::all() : IntervalSet::empty();
        if (B > 0) return IntervalSet({{-inf, -C / B, false, true}});
        return IntervalSet({{-C / B, inf, true, false}});
    }
    if (A < 0) {
        A = -A;
        B = -B;
        C = -C;
        // now solving A x^2 + B x + C >= 0
        const double disc = B * B - 4 * A * C;
        if (disc <= 0) return IntervalSet::all();
        const double sq = std::sqrt(disc);
        const double qv = -0.5 * (B + std::copysign(sq, B));
        double r1 = qv / A;
        double r2 = qv != 0 ? C / qv : -B / (2 * A);
        if (r1 > r2) std::swap(r1, r2);
        return IntervalSet({{-inf, r1, false, true}, {r2, inf, true, false}});
    }
    const double disc = B * B - 4 * A * C;
    if (disc < 0) return IntervalSet::empty();
    const double sq = std::sqrt(disc);
    const double qv = -0.5 * (B + std::copysign(sq, B));
    double r1 = qv / A;
    double r2 = qv != 0 ? C / qv : -B / (2 * A);
    if (r1 > r2) std::swap(r1, r2);
    return IntervalSet::closed(r1, r2);
}

}  // namespace

IntervalSet solve_abs_affine_product(double p, double q, double t, double c,
                                     const IntervalSet& domain) {
    const double b1 = std::min(p, q);
    const double b2 = std::max(p, q);
    struct Piece {
        Interval span;
        double probe;
    };
    std::vector<Piece> pieces;
    pieces.push_back({{-inf, b1, false, true}, b1 - 1});
    if (b1 < b2) pieces.push_back({{b1, b2, true, true}, 0.5 * (b1 + b2)});
    pieces.push_back({{b2, inf, true, false}, b2 + 1});

    IntervalSet result;
    for (const Piece& piece : pieces) {
        const double s1 = piece.probe < p ? -1.0 : 1.0;  // sign of |p-x| = s1*(x-p)
        const double s2 = piece.probe < q ? -1.0 : 1.0;
        const double A = s1 * s2;
        const double B = -A * (p + q) - s1 * t;
        const double C = A * p * q + s1 * t * p - c;
        const IntervalSet sol = quadratic_leq_zero(A, B, C)
                                    .intersect(IntervalSet({piece.span}))
                                    .intersect(domain);
        result = result.union_with(sol);
    }
    return result;
}

IntervalSet grid_membership_oracle(const std::function<bool(double)>& predicate,
                                   double lo, double hi, double step) {
    if (step <= 0) throw std::invalid_argument("grid oracle needs step > 0");
    std::vector<Interval> runs;
    bool in_run = false;
    double run_start = 0, last_true = 0;
    const long long n = static_cast<long long>(std::floor((hi - lo) / step));
    for (long long k = 0; k <= n; ++k) {
        const double x = lo + static_cast<double>(k) * step;
        if (predicate(x)) {
            if (!in_run) {
                in_run = true;
                run_start = x;
            }
            last_true = x;
        } else if (in_run) {
            runs.push_back({run_start, last_true, true, true});
            in_run = false;
        }
    }
    if (in_run) runs.push_back({run_start, last_true, true, true});
    return IntervalSet(std::move(runs));
}

}  // namespace hloc
