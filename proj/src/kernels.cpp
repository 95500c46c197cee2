#include "hloc/kernels.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace hloc::kernels {

namespace {

// Contribution of one row: sum over the n^(m-1) slots of a_{i i2..im} *
// x_{i2}...x_{im}, slots enumerated last-index-fastest.
double row_apply(const double* row, std::size_t rs, int order, int dim,
                 const double* x) {
    double acc = 0;
    std::vector<int> idx(static_cast<std::size_t>(order - 1), 0);
    for (std::size_t t = 0; t < rs; ++t) {
        double prod = row[t];
        if (prod != 0) {
            for (int k = 0; k < order - 1; ++k) prod *= x[idx[static_cast<std::size_t>(k)]];
            acc += prod;
        }
        for (int k = order - 2; k >= 0; --k) {
            if (++idx[static_cast<std::size_t>(k)] < dim) break;
            idx[static_cast<std::size_t>(k)] = 0;
        }
    }
    return acc;
}

void check_length(const Tensor& a, std::span<const double> x) {
    if (static_cast<int>(x.size()) != a.dim())
        throw std::invalid_argument("vector length does not match tensor dimension");
}

}  // namespace

std::vector<double> apply_power_serial(const Tensor& a, std::span<const double> x) {
    check_length(a, x);
    const std::size_t rs = a.row_size();
    std::vector<double> y(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i)
        y[static_cast<std::size_t>(i)] =
            row_apply(a.data().data() + static_cast<std::size_t>(i) * rs, rs, a.order(), a.dim(), x.data());
    return y;
}

std::vector<double> apply_power_parallel(const Tensor& a, std::span<const double> x) {
    check_length(a, x);
    const std::size_t rs = a.row_size();
    const int n = a.dim();
    std::vector<double> y(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (rs * static_cast<std::size_t>(n) > 4096)
    for (int i = 0; i < n; ++i)
        y[static_cast<std::size_t>(i)] =
            row_apply(a.data().data() + static_cast<std::size_t>(i) * rs, rs, a.order(), a.dim(), x.data());
    return y;
}

std::vector<RowProfile> row_profiles_serial(const Tensor& a) {
    std::vector<RowProfile> ps(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < a.dim(); ++i) ps[static_cast<std::size_t>(i)] = row_profile(a, i);
    return ps;
}

std::vector<RowProfile> row_profiles_parallel(const Tensor& a) {
    const int n = a.dim();
    std::vector<RowProfile> ps(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (a.row_size() * static_cast<std::size_t>(n) > 4096)
    for (int i = 0; i < n; ++i) ps[static_cast<std::size_t>(i)] = row_profile(a, i);
    return ps;
}

}  // namespace hloc::kernels
