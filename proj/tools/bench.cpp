// Compares the serial reference kernels against the OpenMP-parallel ones on
// a large random tensor and reports throughput for both.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "hloc/kernels.hpp"
#include "hloc/tensor.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double time_ms(const auto& fn, int reps) {
    const auto t0 = clock_type::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto t1 = clock_type::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    int order = 3, dim = 160, reps = 20;
    if (argc > 1) order = std::atoi(argv[1]);
    if (argc > 2) dim = std::atoi(argv[2]);
    if (argc > 3) reps = std::atoi(argv[3]);

    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> u(-1, 1);
    std::size_t total = 1;
    for (int k = 0; k < order; ++k) total *= static_cast<std::size_t>(dim);
    std::vector<double> entries(total);
    for (double& v : entries) v = u(rng);
    const hloc::Tensor a(order, dim, std::move(entries));

    std::vector<double> x(static_cast<std::size_t>(dim));
    for (double& v : x) v = u(rng);

    std::printf("tensor: order %d, dim %d, %zu entries\n", order, dim, total);

    volatile double sink = 0;
    const double apply_serial =
        time_ms([&] { sink = hloc::kernels::apply_power_serial(a, x)[0]; }, reps);
    const double apply_parallel =
        time_ms([&] { sink = hloc::kernels::apply_power_parallel(a, x)[0]; }, reps);
    std::printf("apply_power   serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                apply_serial, apply_parallel, apply_serial / apply_parallel);

    const double prof_serial =
        time_ms([&] { sink = hloc::kernels::row_profiles_serial(a)[0].r; }, reps);
    const double prof_parallel =
        time_ms([&] { sink = hloc::kernels::row_profiles_parallel(a)[0].r; }, reps);
    std::printf("row_profiles  serial %8.3f ms   parallel %8.3f ms   speedup %.2fx\n",
                prof_serial, prof_parallel, prof_serial / prof_parallel);

    (void)sink;
    return 0;
}
