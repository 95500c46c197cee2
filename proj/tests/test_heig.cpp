#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "hloc/heig.hpp"
#include "test_support.hpp"

using namespace hloc;
using namespace hloc::testing;

namespace {

bool has_lambda(const std::vector<HEigenpair>& eigs, double lambda, double tol) {
    return std::any_of(eigs.begin(), eigs.end(), [&](const HEigenpair& p) {
        return std::abs(p.lambda - lambda) <= tol;
    });
}

double residual_scale(const Tensor& t) {
    double s = 0;
    for (double v : t.data()) s = std::max(s, std::abs(v));
    return 1 + s;
}

}  // namespace

TEST_CASE("poly_real_roots on known polynomials") {
    // x^2 - 53 x + 600
    const std::vector<double> r1 = poly_real_roots({600, -53, 1});
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == doctest::Approx((53 - std::sqrt(409.0)) / 2).epsilon(1e-12));
    CHECK(r1[1] == doctest::Approx((53 + std::sqrt(409.0)) / 2).epsilon(1e-12));

    // (x-1)^2 (x+2): tangency at 1 must be reported once
    const std::vector<double> r2 = poly_real_roots({2, -3, 0, 1});
    REQUIRE(r2.size() == 2);
    CHECK(r2[0] == doctest::Approx(-2).epsilon(1e-12));
    CHECK(r2[1] == doctest::Approx(1).epsilon(1e-10));

    // no real roots
    CHECK(poly_real_roots({1, 0, 1}).empty());

    // linear, and a constant
    const std::vector<double> r3 = poly_real_roots({-6, 2});
    REQUIRE(r3.size() == 1);
    CHECK(r3[0] == doctest::Approx(3));
    CHECK(poly_real_roots({5}).empty());

    // high degree with clustered roots: (x - 1)(x - 1.001)(x + 4)(x^2 + 1)
    std::vector<double> c{4.004, -7.003, 6.003, -6.003, 1.999, 1};
    std::vector<double> r4 = poly_real_roots(c);
    REQUIRE(r4.size() == 3);
    CHECK(r4[0] == doctest::Approx(-4).epsilon(1e-9));
    CHECK(r4[1] == doctest::Approx(1).epsilon(1e-6));
    CHECK(r4[2] == doctest::Approx(1.001).epsilon(1e-6));
}

TEST_CASE("exact solver reproduces the worked eigenvalues") {
    const std::vector<HEigenpair> e1 = heig_exact_n2(tensor_a1());
    CHECK(has_lambda(e1, 15.0, 1e-9));
    CHECK(has_lambda(e1, 35.1469, 1e-3));
    for (const HEigenpair& p : e1) CHECK(p.residual <= 1e-9 * residual_scale(tensor_a1()));

    const std::vector<HEigenpair> e2 = heig_exact_n2(tensor_a2());
    CHECK(has_lambda(e2, -20.2289, 1e-3));
    CHECK(has_lambda(e2, 16.0666, 1e-3));

    const std::vector<HEigenpair> ec = heig_exact_n2(counterexample_matrix());
    CHECK(has_lambda(ec, -0.5, 1e-10));
    CHECK(has_lambda(ec, -1.5, 1e-10));
}

TEST_CASE("matrix case agrees with the closed-form spectrum") {
    std::mt19937_64 rng(307);
    std::uniform_int_distribution<int> u(-5, 5);
    for (int rep = 0; rep < 200; ++rep) {
        const double a = u(rng), b = u(rng), d = u(rng);
        const Tensor t(2, 2, {a, b, b, d});
        const double mid = (a + d) / 2;
        const double rad = std::sqrt((a - d) * (a - d) / 4 + b * b);
        const std::vector<HEigenpair> eigs = heig_exact_n2(t);
        CHECK(has_lambda(eigs, mid - rad, 1e-8));
        CHECK(has_lambda(eigs, mid + rad, 1e-8));
    }
}

TEST_CASE("eigenpairs are canonical and sorted") {
    const std::vector<HEigenpair> eigs = heig_exact_n2(tensor_a2());
    REQUIRE(eigs.size() >= 2);
    for (std::size_t k = 0; k + 1 < eigs.size(); ++k)
        CHECK(eigs[k].lambda <= eigs[k + 1].lambda);
    for (const HEigenpair& p : eigs) {
        double mx = 0;
        for (double v : p.x) mx = std::max(mx, std::abs(v));
        CHECK(mx == doctest::Approx(1.0).epsilon(1e-12));
        for (double v : p.x)
            if (std::abs(v) > 1e-14) {
                CHECK(v > 0);  // first nonzero component positive
                break;
            }
    }
}

TEST_CASE("every direction degenerate: identity and zero tensors") {
    const std::vector<HEigenpair> id = heig_exact_n2(identity_tensor(4, 2));
    REQUIRE_FALSE(id.empty());
    for (const HEigenpair& p : id) CHECK(p.lambda == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<HEigenpair> zero = heig_exact_n2(Tensor::zeros(3, 2));
    REQUIRE_FALSE(zero.empty());
    for (const HEigenpair& p : zero) CHECK(p.lambda == doctest::Approx(0.0));
}

TEST_CASE("zero row forces a zero eigenvalue on the infinity chart") {
    // row 1 identically zero, row 2 dominated by its diagonal
    Tensor t = Tensor::zeros(3, 2);
    t.data()[static_cast<std::size_t>(1) * t.row_size() + t.diag_offset(1)] = 4;
    const std::vector<HEigenpair> eigs = heig_exact_n2(t);
    REQUIRE(has_lambda(eigs, 0.0, 1e-12));
    bool found_e1 = false;
    for (const HEigenpair& p : eigs)
        if (std::abs(p.lambda) <= 1e-12 && std::abs(p.x[0] - 1) <= 1e-12 &&
            std::abs(p.x[1]) <= 1e-12)
            found_e1 = true;
    CHECK(found_e1);
}

TEST_CASE("residual contract holds on random symmetric tensors") {
    std::mt19937_64 rng(311);
    for (int rep = 0; rep < 150; ++rep) {
        const int m = 2 + static_cast<int>(rng() % 4);
        const Tensor t = random_symmetric_int_tensor(rng, m, 2);
        for (const HEigenpair& p : heig_exact_n2(t))
            CHECK(p.residual <= 1e-8 * residual_scale(t));
    }
}

TEST_CASE("sshopm is deterministic and meets its residual contract") {
    const Tensor t = tensor_a1();
    SshopmOptions opts;
    opts.starts = 12;
    opts.seed = 42;
    const std::vector<HEigenpair> a = sshopm(t, opts);
    const std::vector<HEigenpair> b = sshopm(t, opts);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].lambda == b[k].lambda);
        CHECK(a[k].x == b[k].x);
    }
    for (const HEigenpair& p : a) CHECK(p.residual <= 1e-8 * residual_scale(t));
    REQUIRE_FALSE(a.empty());

    Tensor asym = Tensor::zeros(3, 2);
    asym.data()[1] = 1;
    CHECK_THROWS(sshopm(asym));
}

TEST_CASE("sshopm eigenvalues match the exact solver on dimension 2") {
    std::mt19937_64 rng(313);
    int cross_checked = 0;
    for (int rep = 0; rep < 25; ++rep) {
        const int m = rng() % 2 ? 4 : 6;
        const Tensor t = random_symmetric_int_tensor(rng, m, 2);
        SshopmOptions opts;
        opts.starts = 10;
        opts.seed = 7 + static_cast<std::uint64_t>(rep);
        const std::vector<HEigenpair> approx = sshopm(t, opts);
        const std::vector<HEigenpair> exact = heig_exact_n2(t);
        for (const HEigenpair& p : approx) {
            ++cross_checked;
            CHECK(has_lambda(exact, p.lambda, 1e-6 * residual_scale(t)));
        }
    }
    CHECK(cross_checked > 0);
}

TEST_CASE("verify_containment reports per-set membership") {
    const Tensor t = tensor_a1();
    const std::vector<HEigenpair> eigs = heig_exact_n2(t);
    const std::vector<IntervalSet> sets{IntervalSet::closed(0, 100),
                                        IntervalSet::closed(0, 20)};
    const ContainmentReport rep = verify_containment(eigs, sets, {0, 0});
    CHECK_FALSE(rep.all_contained);
    REQUIRE(rep.entries.size() == eigs.size());
    for (const ContainmentEntry& e : rep.entries) {
        CHECK(e.contained[0]);
        CHECK(e.contained[1] == (e.lambda <= 20));
    }
    CHECK_THROWS(verify_containment(eigs, sets, {0}));
}
