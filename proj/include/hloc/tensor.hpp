#ifndef HLOC_TENSOR_HPP
#define HLOC_TENSOR_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace hloc {

// Dense m-order n-dimensional real tensor, row-major multi-index layout
// (last index fastest). Indices are 0-based internally; file formats use
// 1-based indices.
class Tensor {
public:
    static constexpr std::size_t default_guard = 100'000'000;

    Tensor(int order, int dim, std::vector<double> entries,
           std::size_t guard = default_guard);

    static Tensor zeros(int order, int dim, std::size_t guard = default_guard);

    int order() const { return order_; }
    int dim() const { return dim_; }

    const std::vector<double>& data() const { return entries_; }
    std::vector<double>& data() { return entries_; }

    // n^(m-1), the number of slots in one row.
    std::size_t row_size() const { return row_size_; }

    double at(std::span<const int> idx) const;
    double& at(std::span<const int> idx);

    std::size_t linear_index(std::span<const int> idx) const;
    void unpack_index(std::size_t lin, std::span<int> idx) const;

    // Offset within a row of the slot (i,...,i) repeated over the trailing
    // m-1 positions.
    std::size_t diag_offset(int i) const;

    double diag(int i) const { return entries_[static_cast<std::size_t>(i) * row_size_ + diag_offset(i)]; }

    // Entry a_{j i...i}: row j at the all-i slot.
    double entry_row_at_repeated(int j, int i) const {
        return entries_[static_cast<std::size_t>(j) * row_size_ + diag_offset(i)];
    }

private:
    int order_;
    int dim_;
    std::size_t row_size_;
    std::vector<double> entries_;
};

// Per-row statistics over the off-diagonal slots of row i.
struct RowProfile {
    int index = 0;
    double diag = 0;
    double r = 0;      // sum of |a| over off-diagonal slots
    double beta = 0;   // max(0, off-diagonal entries)
    double gamma = 0;  // min(0, off-diagonal entries)
    double delta = 0;  // sum(beta - a) over off-diagonal slots
    double theta = 0;  // sum(a - gamma) over off-diagonal slots
    double alpha = 0;  // beta if diag > 0, gamma if diag < 0 (beta at diag == 0)
};

// Statistics of row j with the (i,...,i) slot additionally excluded.
struct PairProfile {
    int i = 0;
    int j = 0;
    double a_ji = 0;       // a_{j i...i}
    double r_j_i = 0;      // r_j - |a_ji|
    double delta_j_i = 0;  // delta_j - (beta_j - a_ji)
    double theta_j_i = 0;  // theta_j - (a_ji - gamma_j)
};

RowProfile row_profile(const Tensor& a, int i);
std::vector<RowProfile> row_profiles(const Tensor& a);
PairProfile pair_profile(const Tensor& a, int i, int j);
PairProfile pair_profile(const Tensor& a, const RowProfile& row_j, int i);

Tensor identity_tensor(int order, int dim, std::size_t guard = Tensor::default_guard);

// (A x^{m-1})_i = sum over (i2..im) of a_{i i2..im} x_{i2} ... x_{im}.
std::vector<double> apply_power(const Tensor& a, std::span<const double> x);

// A x^m = dot(x, A x^{m-1}).
double poly_value(const Tensor& a, std::span<const double> x);

// Componentwise k-th power, with 0^0 = 1 so that x^[0] is all ones.
std::vector<double> hadamard_power(std::span<const double> x, int k);

// Order m-1 tensor holding row k of A.
Tensor row_tensor(const Tensor& a, int k);

// A-bar: row k scaled by sign(a_{k...k}); sign(0) zeroes the row.
Tensor sign_normalize(const Tensor& a);

// A-plus: entry minus beta of its leading row index. Always a Z-tensor.
Tensor plus_transform(const Tensor& a);

// Restriction of all indices to the (0-based, strictly increasing) subset.
Tensor principal_subtensor(const Tensor& a, std::span<const int> alpha);

// Row k multiplied by d_k, d_k in {-1, +1}.
Tensor scale_rows_by_signs(const Tensor& a, std::span<const int> d);

bool is_symmetric(const Tensor& a);

// All off-diagonal entries <= 0. Equivalent to A = sI - D with D >= 0
// entrywise and s = max_i a_{i...i}: sI - A has zero diagonal gaps filled
// by s - a_{i...i} >= 0 and off-diagonal -a_{...} >= 0 exactly when the
// off-diagonal entries of A are nonpositive.
bool is_z_tensor(const Tensor& a);

int sign_of(double v);

}  // namespace hloc

#endif
