// Command-line front end: tensor classification, eigenvalue inclusion
// intervals, H-eigenvalue solvers, and positive-definiteness certification.
//
// Exit codes: 0 success, 1 input error, 2 infeasible request,
// 3 containment violation (check subcommand).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "hloc/classify.hpp"
#include "hloc/heig.hpp"
#include "hloc/inclusion.hpp"
#include "hloc/interval_set.hpp"
#include "hloc/io.hpp"
#include "hloc/tensor.hpp"

using nlohmann::json;

namespace {

json endpoint_json(double v) {
    if (v == hloc::inf) return "inf";
    if (v == -hloc::inf) return "-inf";
    return v;
}

json set_to_json(const hloc::IntervalSet& s) {
    json comps = json::array();
    for (const hloc::Interval& c : s.components()) {
        comps.push_back({{"lo", endpoint_json(c.lo)},
                         {"hi", endpoint_json(c.hi)},
                         {"lo_closed", c.lo_closed},
                         {"hi_closed", c.hi_closed}});
    }
    return comps;
}

json predicate_json(const hloc::PredicateResult& p) {
    json j;
    j["value"] = p.value;
    if (p.witness) {
        j["witness"] = {{"rule", p.witness->rule},
                        {"i", p.witness->i + 1},
                        {"j", p.witness->j >= 0 ? json(p.witness->j + 1) : json()},
                        {"lhs", p.witness->lhs},
                        {"rhs", p.witness->rhs}};
    }
    return j;
}

void print_predicate(const char* name, const hloc::PredicateResult& p) {
    std::printf("  %-22s %s", name, p.value ? "yes" : "no");
    if (p.witness) {
        std::printf("   [%s at i=%d%s%s: lhs=%g rhs=%g]", p.witness->rule.c_str(),
                    p.witness->i + 1, p.witness->j >= 0 ? ", j=" : "",
                    p.witness->j >= 0 ? std::to_string(p.witness->j + 1).c_str() : "",
                    p.witness->lhs, p.witness->rhs);
    }
    std::printf("\n");
}

double containment_epsilon(const hloc::Tensor& a) {
    double mx = 0;
    for (double v : a.data()) mx = std::max(mx, std::abs(v));
    return 1e-9 * (1 + mx);
}

std::vector<hloc::HEigenpair> solve_eigs(const hloc::Tensor& a, const std::string& method,
                                         int starts, std::uint64_t seed, double tol) {
    if (method == "exact2") {
        if (a.dim() != 2) throw CLI::RuntimeError("exact2 requires dimension 2", 2);
        return hloc::heig_exact_n2(a);
    }
    hloc::SshopmOptions opts;
    opts.starts = starts;
    opts.seed = seed;
    opts.tol = tol;
    return hloc::sshopm(a, opts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"H-eigenvalue localization for real higher-order tensors"};
    app.require_subcommand(1);

    std::string file;
    bool as_json = false;

    auto* profile = app.add_subcommand("profile", "row and pair statistics");
    profile->add_option("file", file)->required();
    profile->add_flag("--json", as_json);

    std::string quasi_def = "theorem";
    auto* classify = app.add_subcommand("classify", "tensor class membership");
    classify->add_option("file", file)->required();
    classify->add_option("--quasi-def", quasi_def)->check(CLI::IsMember({"paper", "theorem"}));
    classify->add_flag("--json", as_json);

    std::string set_name = "all", tilde = "corrected";
    bool hull = false;
    auto* intervals = app.add_subcommand("intervals", "eigenvalue inclusion sets");
    intervals->add_option("file", file)->required();
    intervals->add_option("--set", set_name)
        ->check(CLI::IsMember({"gersh", "brauer", "double-b-bar", "quasi-double-b-bar", "upsilon", "all"}));
    intervals->add_flag("--hull", hull);
    intervals->add_option("--tilde", tilde)->check(CLI::IsMember({"literal", "corrected"}));
    intervals->add_flag("--json", as_json);

    std::string method = "exact2";
    int starts = 20;
    std::uint64_t seed = 1;
    double tol = 1e-10;
    auto* eigs = app.add_subcommand("eigs", "H-eigenvalue solvers");
    eigs->add_option("file", file)->required();
    eigs->add_option("--method", method)->check(CLI::IsMember({"exact2", "sshopm"}));
    eigs->add_option("--starts", starts);
    eigs->add_option("--seed", seed);
    eigs->add_option("--tol", tol);
    eigs->add_flag("--json", as_json);

    auto* certify = app.add_subcommand("certify", "positive-definiteness certificate");
    certify->add_option("file", file)->required();
    certify->add_flag("--json", as_json);

    auto* check = app.add_subcommand("check", "verify eigenvalues against all inclusion sets");
    check->add_option("file", file)->required();
    check->add_option("--starts", starts);
    check->add_option("--seed", seed);
    check->add_option("--tol", tol);
    check->add_flag("--json", as_json);

    CLI11_PARSE(app, argc, argv);

    try {
        const hloc::Tensor a = hloc::load_tensor(file);

        if (profile->parsed()) {
            const std::vector<hloc::RowProfile> ps = hloc::row_profiles(a);
            if (as_json) {
                json out;
                out["rows"] = json::array();
                for (const hloc::RowProfile& p : ps)
                    out["rows"].push_back({{"i", p.index + 1}, {"diag", p.diag}, {"r", p.r},
                                           {"beta", p.beta}, {"gamma", p.gamma}, {"delta", p.delta},
                                           {"theta", p.theta}, {"alpha", p.alpha}});
                out["pairs"] = json::array();
                for (int i = 0; i < a.dim(); ++i)
                    for (int j = 0; j < a.dim(); ++j) {
                        if (i == j) continue;
                        const hloc::PairProfile q = hloc::pair_profile(a, ps[j], i);
                        out["pairs"].push_back({{"i", i + 1}, {"j", j + 1}, {"a_ji", q.a_ji},
                                                {"r_j_i", q.r_j_i}, {"delta_j_i", q.delta_j_i},
                                                {"theta_j_i", q.theta_j_i}});
                    }
                std::cout << out.dump(2) << "\n";
            } else {
                std::printf("row  diag        r           beta        gamma       delta       theta\n");
                for (const hloc::RowProfile& p : ps)
                    std::printf("%-4d %-11.6g %-11.6g %-11.6g %-11.6g %-11.6g %-11.6g\n",
                                p.index + 1, p.diag, p.r, p.beta, p.gamma, p.delta, p.theta);
                std::printf("\n(i,j)   a_ji        r_j^i       delta_j^i   theta_j^i\n");
                for (int i = 0; i < a.dim(); ++i)
                    for (int j = 0; j < a.dim(); ++j) {
                        if (i == j) continue;
                        const hloc::PairProfile q = hloc::pair_profile(a, ps[j], i);
                        std::printf("(%d,%d)   %-11.6g %-11.6g %-11.6g %-11.6g\n", i + 1, j + 1,
                                    q.a_ji, q.r_j_i, q.delta_j_i, q.theta_j_i);
                    }
            }
            return 0;
        }

        if (classify->parsed()) {
            const hloc::QuasiDef def =
                quasi_def == "paper" ? hloc::QuasiDef::paper_definition : hloc::QuasiDef::theorem;
            const hloc::ClassificationReport rep = hloc::classify_all(a, def);
            if (as_json) {
                json out;
                out["double_b"] = predicate_json(rep.double_b);
                out["quasi_double_b"] = predicate_json(rep.quasi_double_b);
                out["double_b_bar"] = predicate_json(rep.double_b_bar);
                out["quasi_double_b_bar"] = predicate_json(rep.quasi_double_b_bar);
                out["dsdd"] = predicate_json(rep.dsdd);
                out["qdsdd"] = predicate_json(rep.qdsdd);
                out["z_tensor"] = rep.z_tensor;
                out["symmetric"] = rep.symmetric;
                std::cout << out.dump(2) << "\n";
            } else {
                print_predicate("double-b", rep.double_b);
                print_predicate("quasi-double-b", rep.quasi_double_b);
                print_predicate("double-b-bar", rep.double_b_bar);
                print_predicate("quasi-double-b-bar", rep.quasi_double_b_bar);
                print_predicate("dsdd", rep.dsdd);
                print_predicate("qdsdd", rep.qdsdd);
                std::printf("  %-22s %s\n", "z-tensor", rep.z_tensor ? "yes" : "no");
                std::printf("  %-22s %s\n", "symmetric", rep.symmetric ? "yes" : "no");
            }
            return 0;
        }

        if (intervals->parsed()) {
            const hloc::TildeMode mode =
                tilde == "literal" ? hloc::TildeMode::literal : hloc::TildeMode::corrected;
            std::vector<std::pair<std::string, hloc::IntervalSet>> sets;
            auto want = [&](const char* k) { return set_name == k || set_name == "all"; };
            if (want("gersh")) sets.emplace_back("gersh", hloc::gerschgorin(a));
            if (want("brauer")) sets.emplace_back("brauer", hloc::brauer_real(a));
            if (want("double-b-bar")) sets.emplace_back("double-b-bar", hloc::double_b_bar_set(a, mode));
            if (want("quasi-double-b-bar"))
                sets.emplace_back("quasi-double-b-bar", hloc::quasi_double_b_bar_set(a));
            if (want("upsilon")) sets.emplace_back("upsilon", hloc::upsilon(a));
            if (as_json) {
                json out;
                for (auto& [name, s] : sets) {
                    out[name]["set"] = set_to_json(s);
                    out[name]["hull"] = set_to_json(s.hull());
                }
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto& [name, s] : sets) {
                    const hloc::IntervalSet& shown = hull ? s.hull() : s;
                    std::printf("%-20s %s\n", name.c_str(), shown.to_string().c_str());
                }
            }
            return 0;
        }

        if (eigs->parsed()) {
            const std::vector<hloc::HEigenpair> pairs = solve_eigs(a, method, starts, seed, tol);
            if (as_json) {
                json out = json::array();
                for (const hloc::HEigenpair& p : pairs)
                    out.push_back({{"lambda", p.lambda}, {"x", p.x}, {"residual", p.residual}});
                std::cout << out.dump(2) << "\n";
            } else {
                for (const hloc::HEigenpair& p : pairs) {
                    std::printf("lambda = %-12.6g residual = %-10.3g x = (", p.lambda, p.residual);
                    for (std::size_t i = 0; i < p.x.size(); ++i)
                        std::printf("%s%.6g", i ? ", " : "", p.x[i]);
                    std::printf(")\n");
                }
            }
            return 0;
        }

        if (certify->parsed()) {
            const hloc::PdCertificate cert = hloc::certify_positive_definite(a);
            if (as_json) {
                json out;
                out["verdict"] = hloc::to_string(cert.verdict);
                out["reason"] = cert.reason;
                if (cert.eigen_lower_bound)
                    out["eigen_lower_bound"] = endpoint_json(*cert.eigen_lower_bound);
                std::cout << out.dump(2) << "\n";
            } else {
                std::printf("verdict: %s (%s)\n", hloc::to_string(cert.verdict), cert.reason.c_str());
                if (cert.eigen_lower_bound && std::isfinite(*cert.eigen_lower_bound))
                    std::printf("eigenvalue lower bound: %.6g\n", *cert.eigen_lower_bound);
            }
            return 0;
        }

        if (check->parsed()) {
            const std::string eff_method = a.dim() == 2 ? "exact2" : "sshopm";
            const std::vector<hloc::HEigenpair> pairs = solve_eigs(a, eff_method, starts, seed, tol);
            const std::vector<std::string> names{"gersh", "brauer", "double-b-bar",
                                                 "quasi-double-b-bar", "upsilon"};
            const std::vector<hloc::IntervalSet> sets{
                hloc::gerschgorin(a), hloc::brauer_real(a), hloc::double_b_bar_set(a),
                hloc::quasi_double_b_bar_set(a), hloc::upsilon(a)};
            const double eps = containment_epsilon(a);
            const std::vector<double> epsilons{0, 0, eps, eps, eps};
            const hloc::ContainmentReport rep = hloc::verify_containment(pairs, sets, epsilons);
            if (as_json) {
                json out;
                out["method"] = eff_method;
                out["all_contained"] = rep.all_contained;
                out["entries"] = json::array();
                for (const hloc::ContainmentEntry& e : rep.entries) {
                    json je;
                    je["lambda"] = e.lambda;
                    for (std::size_t k = 0; k < names.size(); ++k) je[names[k]] = e.contained[k];
                    out["entries"].push_back(std::move(je));
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::printf("method: %s, %zu eigenpair(s)\n", eff_method.c_str(), pairs.size());
                for (const hloc::ContainmentEntry& e : rep.entries) {
                    std::printf("lambda = %-12.6g", e.lambda);
                    for (std::size_t k = 0; k < names.size(); ++k)
                        std::printf("  %s:%s", names[k].c_str(), e.contained[k] ? "in" : "OUT");
                    std::printf("\n");
                }
            }
            return rep.all_contained ? 0 : 3;
        }
    } catch (const CLI::RuntimeError& e) {
        std::cerr << "error: infeasible request\n";
        return e.get_exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
