#ifndef HLOC_INTERVAL_SET_HPP
#define HLOC_INTERVAL_SET_HPP

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace hloc {

constexpr double inf = std::numeric_limits<double>::infinity();

struct Interval {
    double lo = 0;
    double hi = 0;
    bool lo_closed = true;
    bool hi_closed = true;

    bool operator==(const Interval&) const = default;
};

// Finite union of real intervals with open/closed endpoint flags, kept in a
// canonical normalized form: components sorted, pairwise disjoint and
// non-adjacent. Endpoints closer than a 1e-12 relative tolerance are treated
// as equal during normalization.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> components);

    static IntervalSet empty() { return IntervalSet(); }
    static IntervalSet all() { return IntervalSet({{-inf, inf, false, false}}); }
    static IntervalSet closed(double a, double b) { return IntervalSet({{a, b, true, true}}); }
    static IntervalSet open(double a, double b) { return IntervalSet({{a, b, false, false}}); }
    static IntervalSet point(double a) { return IntervalSet({{a, a, true, true}}); }
    static IntervalSet interval(double a, double b, bool lc, bool hc) {
        return IntervalSet({{a, b, lc, hc}});
    }

    const std::vector<Interval>& components() const { return comps_; }
    bool is_empty() const { return comps_.empty(); }

    IntervalSet union_with(const IntervalSet& other) const;
    IntervalSet intersect(const IntervalSet& other) const;
    IntervalSet complement() const;
    IntervalSet dilate(double eps) const;  // closed eps-fattening per component
    IntervalSet hull() const;              // single interval spanning the set

    bool contains(double x) const;

    // Subset test up to the given endpoint tolerance: residual components of
    // this \ other narrower than tol are ignored.
    bool subset_of(const IntervalSet& other, double tol = 0.0) const;

    bool operator==(const IntervalSet& other) const = default;

    std::string to_string(int significant_digits = 6) const;

private:
    std::vector<Interval> comps_;
};

// Exact solution set of |p - x| * (|q - x| - t) <= c over the domain.
// Splits the line at x = p and x = q, expands each piece to a +-x^2
// quadratic, solves with a cancellation-safe formula, and unions the pieces.
IntervalSet solve_abs_affine_product(double p, double q, double t, double c,
                                     const IntervalSet& domain);

// Test-side oracle: reconstructs the membership set of a predicate from
// samples on [lo, hi] with the given step. Runs of true samples become
// closed intervals; accurate only to within one step of each boundary.
IntervalSet grid_membership_oracle(const std::function<bool(double)>& predicate,
                                   double lo, double hi, double step);

}  // namespace hloc

#endif
