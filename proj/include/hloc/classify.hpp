#ifndef HLOC_CLASSIFY_HPP
#define HLOC_CLASSIFY_HPP

#include <optional>
#include <string>

#include "hloc/tensor.hpp"

namespace hloc {

// First violated inequality, reported in lexicographic (i, j) order.
// j is -1 for single-row rules. Indices are 0-based.
struct Witness {
    std::string rule;
    int i = -1;
    int j = -1;
    double lhs = 0;
    double rhs = 0;
};

struct PredicateResult {
    bool value = false;
    std::optional<Witness> witness;  // present exactly when value is false

    explicit operator bool() const { return value; }
};

// Which quasi-double-B pairwise inequality to use. The source definition and
// its own characterization theorem disagree on the index placement; the
// theorem reading (beta_j - a_{ji..i}) * Delta_i is the default because it is
// the one consistent with the quasi interval construction.
enum class QuasiDef { theorem, paper_definition };

enum class BarRoute { via_abar, via_alpha };

PredicateResult is_double_b(const Tensor& a);
PredicateResult is_quasi_double_b(const Tensor& a, QuasiDef def = QuasiDef::theorem);
PredicateResult is_double_b_bar(const Tensor& a, BarRoute route = BarRoute::via_abar);
PredicateResult is_quasi_double_b_bar(const Tensor& a, BarRoute route = BarRoute::via_abar,
                                      QuasiDef def = QuasiDef::theorem);
PredicateResult is_dsdd(const Tensor& a);
PredicateResult is_qdsdd(const Tensor& a);

struct ClassificationReport {
    PredicateResult double_b;
    PredicateResult quasi_double_b;
    PredicateResult double_b_bar;
    PredicateResult quasi_double_b_bar;
    PredicateResult dsdd;
    PredicateResult qdsdd;
    bool z_tensor = false;
    bool symmetric = false;
};

// Runs every predicate once. For the theorem-form quasi definition the B-bar
// predicates are evaluated along both routes and must agree; disagreement is
// an internal inconsistency and throws.
ClassificationReport classify_all(const Tensor& a, QuasiDef def = QuasiDef::theorem);

enum class PdVerdict { Certified, Unknown, NotApplicable };

struct PdCertificate {
    PdVerdict verdict = PdVerdict::Unknown;
    std::string reason;
    std::optional<double> eigen_lower_bound;  // greatest lower hull endpoint
};

// Sufficient-condition ladder for positive definiteness of even-order
// symmetric tensors. Never certifies from the B-bar classes alone.
PdCertificate certify_positive_definite(const Tensor& a);

const char* to_string(PdVerdict v);

}  // namespace hloc

#endif
