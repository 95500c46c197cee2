#include "hloc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hloc/kernels.hpp"

namespace hloc {

int sign_of(double v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

namespace {

std::size_t checked_size(int order, int dim, std::size_t guard) {
    if (order < 1) throw std::invalid_argument("tensor order must be >= 1");
    if (dim < 1) throw std::invalid_argument("tensor dimension must be >= 1");
    std::size_t total = 1;
    for (int k = 0; k < order; ++k) {
        if (total > guard / static_cast<std::size_t>(dim))
            throw std::invalid_argument("tensor size exceeds entry guard");
        total *= static_cast<std::size_t>(dim);
    }
    if (total > guard) throw std::invalid_argument("tensor size exceeds entry guard");
    return total;
}

}  // namespace

Tensor::Tensor(int order, int dim, std::vector<double> entries, std::size_t guard)
    : order_(order), dim_(dim), entries_(std::move(entries)) {
    const std::size_t total = checked_size(order, dim, guard);
    if (entries_.size() != total)
        throw std::invalid_argument("entry count does not match dim^order");
    for (double v : entries_)
        if (!std::isfinite(v)) throw std::invalid_argument("tensor entries must be finite");
    row_size_ = total / static_cast<std::size_t>(dim);
}

Tensor Tensor::zeros(int order, int dim, std::size_t guard) {
    return Tensor(order, dim, std::vector<double>(checked_size(order, dim, guard), 0.0), guard);
}

std::size_t Tensor::linear_index(std::span<const int> idx) const {
    if (static_cast<int>(idx.size()) != order_)
        throw std::invalid_argument("index tuple arity mismatch");
    std::size_t lin = 0;
    for (int k = 0; k < order_; ++k) {
        if (idx[k] < 0 || idx[k] >= dim_) throw std::out_of_range("tensor index out of range");
        lin = lin * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(idx[k]);
    }
    return lin;
}

void Tensor::unpack_index(std::size_t lin, std::span<int> idx) const {
    for (int k = order_ - 1; k >= 0; --k) {
        idx[k] = static_cast<int>(lin % static_cast<std::size_t>(dim_));
        lin /= static_cast<std::size_t>(dim_);
    }
}

double Tensor::at(std::span<const int> idx) const { return entries_[linear_index(idx)]; }
double& Tensor::at(std::span<const int> idx) { return entries_[linear_index(idx)]; }

std::size_t Tensor::diag_offset(int i) const {
    std::size_t off = 0;
    for (int k = 0; k < order_ - 1; ++k)
        off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
    return off;
}

RowProfile row_profile(const Tensor& a, int i) {
    RowProfile p;
    p.index = i;
    const std::size_t rs = a.row_size();
    const std::size_t base = static_cast<std::size_t>(i) * rs;
    const std::size_t dslot = a.diag_offset(i);
    const double* row = a.data().data() + base;
    p.diag = row[dslot];
    double max_off = 0, min_off = 0, sum_off = 0;
    for (std::size_t t = 0; t < rs; ++t) {
        if (t == dslot) continue;
        const double v = row[t];
        p.r += std::abs(v);
        sum_off += v;
        max_off = std::max(max_off, v);
        min_off = std::min(min_off, v);
    }
    const double cnt = static_cast<double>(rs - 1);
    p.beta = max_off;   // already >= 0 (0 included in the max)
    p.gamma = min_off;  // already <= 0
    p.delta = cnt * p.beta - sum_off;
    p.theta = sum_off - cnt * p.gamma;
    p.alpha = p.diag < 0 ? p.gamma : p.beta;
    return p;
}

std::vector<RowProfile> row_profiles(const Tensor& a) {
    return kernels::row_profiles_parallel(a);
}

PairProfile pair_profile(const Tensor& a, const RowProfile& row_j, int i) {
    if (i == row_j.index) throw std::invalid_argument("pair profile needs i != j");
    PairProfile q;
    q.i = i;
    q.j = row_j.index;
    q.a_ji = a.entry_row_at_repeated(row_j.index, i);
    q.r_j_i = row_j.r - std::abs(q.a_ji);
    q.delta_j_i = row_j.delta - (row_j.beta - q.a_ji);
    q.theta_j_i = row_j.theta - (q.a_ji - row_j.gamma);
    return q;
}

PairProfile pair_profile(const Tensor& a, int i, int j) {
    return pair_profile(a, row_profile(a, j), i);
}

Tensor identity_tensor(int order, int dim, std::size_t guard) {
    Tensor t = Tensor::zeros(order, dim, guard);
    for (int i = 0; i < dim; ++i)
        t.data()[static_cast<std::size_t>(i) * t.row_size() + t.diag_offset(i)] = 1.0;
    return t;
}

std::vector<double> apply_power(const Tensor& a, std::span<const double> x) {
    return kernels::apply_power_parallel(a, x);
}

double poly_value(const Tensor& a, std::span<const double> x) {
    const std::vector<double> y = apply_power(a, x);
    double s = 0;
    for (int i = 0; i < a.dim(); ++i) s += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(i)];
    return s;
}

std::vector<double> hadamard_power(std::span<const double> x, int k) {
    if (k < 0) throw std::invalid_argument("hadamard power needs k >= 0");
    std::vector<double> y(x.size(), 1.0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (int t = 0; t < k; ++t) y[i] *= x[i];
    return y;
}

Tensor row_tensor(const Tensor& a, int k) {
    if (a.order() < 2) throw std::invalid_argument("row tensor needs order >= 2");
    if (k < 0 || k >= a.dim()) throw std::out_of_range("row index out of range");
    const std::size_t rs = a.row_size();
    const std::size_t base = static_cast<std::size_t>(k) * rs;
    std::vector<double> entries(a.data().begin() + static_cast<std::ptrdiff_t>(base),
                                a.data().begin() + static_cast<std::ptrdiff_t>(base + rs));
    return Tensor(a.order() - 1, a.dim(), std::move(entries));
}

Tensor sign_normalize(const Tensor& a) {
    Tensor b = a;
    const std::size_t rs = a.row_size();
    for (int i = 0; i < a.dim(); ++i) {
        const double s = sign_of(a.diag(i));
        double* row = b.data().data() + static_cast<std::size_t>(i) * rs;
        for (std::size_t t = 0; t < rs; ++t) row[t] *= s;
    }
    return b;
}

Tensor plus_transform(const Tensor& a) {
    Tensor b = a;
    const std::size_t rs = a.row_size();
    for (int i = 0; i < a.dim(); ++i) {
        const double bi = row_profile(a, i).beta;
        double* row = b.data().data() + static_cast<std::size_t>(i) * rs;
        for (std::size_t t = 0; t < rs; ++t) row[t] -= bi;
    }
    return b;
}

Tensor principal_subtensor(const Tensor& a, std::span<const int> alpha) {
    if (alpha.empty()) throw std::invalid_argument("principal subtensor needs nonempty index set");
    for (std::size_t k = 0; k < alpha.size(); ++k) {
        if (alpha[k] < 0 || alpha[k] >= a.dim()) throw std::out_of_range("subset index out of range");
        if (k > 0 && alpha[k] <= alpha[k - 1])
            throw std::invalid_argument("subset must be strictly increasing");
    }
    const int m = a.order();
    const int r = static_cast<int>(alpha.size());
    Tensor s = Tensor::zeros(m, r);
    std::vector<int> sub(static_cast<std::size_t>(m), 0), full(static_cast<std::size_t>(m), 0);
    const std::size_t total = s.data().size();
    for (std::size_t lin = 0; lin < total; ++lin) {
        s.unpack_index(lin, sub);
        for (int k = 0; k < m; ++k) full[static_cast<std::size_t>(k)] = alpha[static_cast<std::size_t>(sub[static_cast<std::size_t>(k)])];
        s.data()[lin] = a.at(full);
    }
    return s;
}

Tensor scale_rows_by_signs(const Tensor& a, std::span<const int> d) {
    if (static_cast<int>(d.size()) != a.dim())
        throw std::invalid_argument("sign vector length mismatch");
    for (int v : d)
        if (v != 1 && v != -1) throw std::invalid_argument("sign entries must be +1 or -1");
    Tensor b = a;
    const std::size_t rs = a.row_size();
    for (int i = 0; i < a.dim(); ++i) {
        double* row = b.data().data() + static_cast<std::size_t>(i) * rs;
        for (std::size_t t = 0; t < rs; ++t) row[t] *= d[static_cast<std::size_t>(i)];
    }
    return b;
}

bool is_symmetric(const Tensor& a) {
    const int m = a.order();
    std::vector<int> idx(static_cast<std::size_t>(m)), sorted(static_cast<std::size_t>(m));
    const std::size_t total = a.data().size();
    for (std::size_t lin = 0; lin < total; ++lin) {
        a.unpack_index(lin, idx);
        sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        if (a.data()[lin] != a.at(sorted)) return false;
    }
    return true;
}

bool is_z_tensor(const Tensor& a) {
    const std::size_t rs = a.row_size();
    for (int i = 0; i < a.dim(); ++i) {
        const std::size_t dslot = a.diag_offset(i);
        const double* row = a.data().data() + static_cast<std::size_t>(i) * rs;
        for (std::size_t t = 0; t < rs; ++t)
            if (t != dslot && row[t] > 0) return false;
    }
    return true;
}

}  // namespace hloc
