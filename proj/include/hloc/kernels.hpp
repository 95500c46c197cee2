#ifndef HLOC_KERNELS_HPP
#define HLOC_KERNELS_HPP

#include <span>
#include <vector>

#include "hloc/tensor.hpp"

// Hot loops of tensor-core. The public API in tensor.hpp dispatches to the
// parallel variants; the serial ones are the reference implementations kept
// for testing and benchmarking. Both are bit-deterministic: parallelism is
// across rows, each row reduction stays sequential.
namespace hloc::kernels {

std::vector<double> apply_power_serial(const Tensor& a, std::span<const double> x);
std::vector<double> apply_power_parallel(const Tensor& a, std::span<const double> x);

std::vector<RowProfile> row_profiles_serial(const Tensor& a);
std::vector<RowProfile> row_profiles_parallel(const Tensor& a);

}  // namespace hloc::kernels

#endif
