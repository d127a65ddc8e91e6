// Command-line surface for the descent polynomial library.
//
// Exit codes: 0 success, 1 usage/parse error, 2 sweep check failures,
// 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "descent/basis.hpp"
#include "descent/engine.hpp"
#include "descent/expansions.hpp"
#include "descent/poset.hpp"
#include "descent/roots.hpp"
#include "descent/sweep.hpp"
#include "descent/tree.hpp"
#include "descent/tree_io.hpp"

namespace {

using namespace descent;
using nlohmann::ordered_json;

MarkedTree load_tree(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw ParseError("cannot open tree file: " + arg.substr(1), 0);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_tree_any(buf.str());
    }
    return parse_tree_any(arg);
}

Algo parse_algo(const std::string& name) {
    for (Algo a : {Algo::Brute, Algo::Cut, Algo::AscentCut, Algo::Explicit, Algo::Shift,
                   Algo::Auto})
        if (algo_name(a) == name) return a;
    throw CLI::ValidationError("--algo", "unknown algorithm: " + name);
}

Basis parse_basis(const std::string& name) {
    for (Basis b : {Basis::A, Basis::Abar, Basis::C, Basis::Nk})
        if (basis_name(b) == name) return b;
    throw CLI::ValidationError("--basis", "unknown basis: " + name);
}

ordered_json poly_json(const ExactPolynomial& p) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : p.coefficients())
        coeffs.push_back({boost::multiprecision::numerator(c).str(),
                          boost::multiprecision::denominator(c).str()});
    return coeffs;
}

int default_jobs() {
    if (const char* env = std::getenv("DESCENT_POLY_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string complex_to_string(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(12);
    os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

int run(int argc, char** argv) {
    CLI::App app{"descent polynomials of marked rooted trees"};
    app.require_subcommand(1);

    std::string tree_arg, algo_arg = "auto", basis_arg, out_path, checks_arg, sweep_tree;
    int n_arg = 0, max_size = 6, jobs = default_jobs(), brute_cap = kDefaultBruteCap;
    double tol = 1e-9;
    bool json_out = false, want_complex = false;

    auto add_tree = [&](CLI::App* cmd) {
        cmd->add_option("--tree", tree_arg,
                        "tree in compact form, or @path to a structured file")
            ->required();
    };

    CLI::App* poly = app.add_subcommand("poly", "print the descent polynomial");
    add_tree(poly);
    poly->add_option("--algo", algo_arg, "brute|cut|ascent-cut|explicit|shift|auto");
    poly->add_option("--brute-cap", brute_cap, "largest n for brute-force enumeration");
    poly->add_flag("--json", json_out);

    CLI::App* eval = app.add_subcommand("eval", "evaluate d(T;n)");
    add_tree(eval);
    eval->add_option("--n", n_arg, "evaluation point")->required();
    eval->add_option("--algo", algo_arg, "brute|cut|ascent-cut|explicit|shift|auto");
    eval->add_option("--brute-cap", brute_cap, "largest n for brute-force enumeration");
    eval->add_flag("--json", json_out);

    CLI::App* expand_cmd = app.add_subcommand("expand", "binomial-basis coefficients");
    add_tree(expand_cmd);
    expand_cmd->add_option("--basis", basis_arg, "a|abar|c|nk")->required();
    expand_cmd->add_flag("--json", json_out);

    CLI::App* roots_cmd = app.add_subcommand("roots", "roots of the descent polynomial");
    add_tree(roots_cmd);
    roots_cmd->add_flag("--complex", want_complex, "also compute numeric complex roots");
    roots_cmd->add_option("--tol", tol, "residual tolerance for complex roots");
    roots_cmd->add_flag("--json", json_out);

    CLI::App* natlab_cmd = app.add_subcommand("natlab", "number of natural labelings");
    add_tree(natlab_cmd);
    natlab_cmd->add_flag("--json", json_out);

    CLI::App* poset_cmd =
        app.add_subcommand("poset", "height polynomial of the root element of the tree poset");
    add_tree(poset_cmd);
    poset_cmd->add_flag("--json", json_out);

    CLI::App* witness_cmd = app.add_subcommand("witness", "labeling realizing the marked set");
    add_tree(witness_cmd);
    witness_cmd->add_option("--n", n_arg, "size of the extended tree, > tree size")->required();
    witness_cmd->add_flag("--json", json_out);

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "run property checks over all marked trees");
    sweep_cmd->add_option("--max-size", max_size, "largest tree size to enumerate")->required();
    sweep_cmd->add_option("--checks", checks_arg,
                          "comma-separated subset of agreement,degree,roots,expansions,poset,"
                          "identities,witness,natlab (default: all)");
    sweep_cmd->add_option("--jobs", jobs, "worker count (default: DESCENT_POLY_JOBS or cores)");
    sweep_cmd->add_option("--brute-cap", brute_cap, "largest n for brute-force enumeration");
    sweep_cmd->add_option("--tree", sweep_tree, "restrict the sweep to one marked tree");
    sweep_cmd->add_option("--out", out_path, "report path, or - for stdout")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // --help/--version succeed; anything else is a usage error
    }

    if (poly->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        const ExactPolynomial p = descent_polynomial(t, parse_algo(algo_arg), brute_cap);
        if (json_out) {
            ordered_json j{{"tree", serialize_compact(t)},
                           {"algo", algo_arg},
                           {"degree", p.degree()},
                           {"coefficients", poly_json(p)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << p.to_string() << "\n";
        }
        return 0;
    }

    if (eval->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        const Algo algo = parse_algo(algo_arg);
        Rational value;
        const bool value_algo = algo == Algo::Brute || algo == Algo::Cut ||
                                algo == Algo::AscentCut || algo == Algo::Shift ||
                                algo == Algo::Auto;
        if (value_algo && n_arg >= t.size()) {
            MemoCache cache;
            switch (algo) {
                case Algo::Brute: value = Rational(count_brute(t, n_arg, brute_cap)); break;
                case Algo::AscentCut: value = Rational(count_ascent_cut(t, n_arg, cache)); break;
                case Algo::Shift: value = Rational(count_shift(t, n_arg, cache)); break;
                default: value = Rational(count_cut(t, n_arg, cache)); break;
            }
        } else {
            value = descent_polynomial(t, algo, brute_cap)(BigInt(n_arg));
        }
        if (json_out) {
            ordered_json j{{"tree", serialize_compact(t)},
                           {"n", n_arg},
                           {"algo", algo_arg},
                           {"value", to_string(value)}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << to_string(value) << "\n";
        }
        return 0;
    }

    if (expand_cmd->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        const BasisExpansion e = expand(t, parse_basis(basis_arg));
        if (json_out) {
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : e.coeffs) coeffs.push_back(c.str());
            ordered_json j{{"tree", serialize_compact(t)},
                           {"basis", basis_name(e.basis)},
                           {"anchor", e.degree_param},
                           {"coefficients", coeffs}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << basis_name(e.basis) << "-coefficients (anchor " << e.degree_param
                      << "): [";
            for (std::size_t i = 0; i < e.coeffs.size(); ++i)
                std::cout << (i ? ", " : "") << e.coeffs[i];
            std::cout << "]\n";
            if (e.basis == Basis::Abar)
                std::cout << "(first entry is the index -1 coefficient)\n";
        }
        return 0;
    }

    if (roots_cmd->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        RootReport rep = verify_roots(t);
        if (want_complex && !rep.complex_checked && rep.polynomial.degree() >= 1) {
            rep.complex = complex_roots(rep.polynomial, tol);
            rep.complex_checked = true;
        }
        if (json_out) {
            ordered_json ir = ordered_json::array();
            for (const auto& r : rep.integer_roots)
                ir.push_back({{"value", r.value.str()}, {"multiplicity", r.multiplicity}});
            ordered_json j{{"tree", serialize_compact(t)}, {"integer_roots", ir}};
            if (want_complex && rep.complex_checked) {
                ordered_json cr = ordered_json::array();
                for (const auto& z : rep.complex.roots)
                    cr.push_back({{"re", z.real()}, {"im", z.imag()}});
                j["complex_roots"] = cr;
                j["converged"] = rep.complex.converged;
            }
            const auto& f = rep.predictions;
            j["predictions"] = ordered_json{{"value_at_zero", f.value_at_zero.str()},
                                            {"size_is_root", f.size_is_root},
                                            {"size_minus_one_is_root", f.size_minus_one_is_root},
                                            {"root_descent_children", f.root_descent_children},
                                            {"one_is_root", f.one_is_root},
                                            {"only_root_descent", f.only_root_descent},
                                            {"minus_one_is_root", f.minus_one_is_root},
                                            {"all_descents", f.all_descents},
                                            {"complex_bound_applies", f.complex_bound_applies}};
            ordered_json vs = ordered_json::array();
            for (const auto& v : rep.verdicts)
                vs.push_back({{"name", v.name},
                              {"applicable", v.applicable},
                              {"pass", v.pass},
                              {"detail", v.detail}});
            j["verdicts"] = vs;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "integer roots: ";
            if (rep.integer_roots.empty()) std::cout << "none";
            for (std::size_t i = 0; i < rep.integer_roots.size(); ++i) {
                if (i) std::cout << ", ";
                std::cout << rep.integer_roots[i].value;
                if (rep.integer_roots[i].multiplicity > 1)
                    std::cout << " (x" << rep.integer_roots[i].multiplicity << ")";
            }
            std::cout << "\n";
            if (want_complex && rep.complex_checked) {
                std::cout << "complex roots:\n";
                for (const auto& z : rep.complex.roots)
                    std::cout << "  " << complex_to_string(z) << "\n";
                if (!rep.complex.converged)
                    std::cout << "  (residual tolerance not met; values are approximate)\n";
            }
        }
        return 0;
    }

    if (natlab_cmd->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        const BigInt v = natlab(t);
        if (json_out) {
            ordered_json j{{"tree", serialize_compact(t)}, {"value", v.str()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << v << "\n";
        }
        return 0;
    }

    if (poset_cmd->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        const Poset p = build_poset(t);
        const HeightPolynomial hp = height_polynomial(p, t.root());
        if (json_out) {
            ordered_json counts = ordered_json::array();
            for (const auto& c : hp.counts) counts.push_back(c.str());
            ordered_json j{{"tree", serialize_compact(t)},
                           {"elements", p.n},
                           {"extension_count", hp.total().str()},
                           {"root_height_counts", counts}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "linear extensions: " << hp.total() << "\n";
            std::cout << "root height counts: [";
            for (std::size_t i = 0; i < hp.counts.size(); ++i)
                std::cout << (i ? ", " : "") << hp.counts[i];
            std::cout << "]\n";
        }
        return 0;
    }

    if (witness_cmd->parsed()) {
        const MarkedTree t = load_tree(tree_arg);
        const Labeling w = witness_labeling(t, n_arg);
        if (json_out) {
            ordered_json j{{"tree", serialize_compact(t)}, {"n", w.tree_size},
                           {"labels", w.labels}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "labels: [";
            for (std::size_t i = 0; i < w.labels.size(); ++i)
                std::cout << (i ? ", " : "") << w.labels[i];
            std::cout << "]\n";
        }
        return 0;
    }

    if (sweep_cmd->parsed()) {
        SweepConfig cfg;
        cfg.max_size = max_size;
        cfg.brute_cap = brute_cap;
        cfg.worker_count = jobs;
        cfg.out_path = out_path;
        cfg.tree_filter = sweep_tree;
        if (!checks_arg.empty()) {
            std::stringstream ss(checks_arg);
            std::string item;
            while (std::getline(ss, item, ',')) cfg.checks.push_back(check_from_name(item));
        }
        const SweepReport rep = run_sweep(cfg);
        const std::string doc = rep.to_json().dump(2) + "\n";
        if (out_path == "-") {
            std::cout << doc;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot write report to " << out_path << "\n";
                return 3;
            }
            out << doc;
            std::cout << "marked trees: " << rep.marked_trees << "\n";
            for (const auto& c : rep.checks)
                std::cout << "check " << c.name << ": pass=" << c.pass << " fail=" << c.fail
                          << "\n";
            std::cout << "report written to " << out_path << "\n";
        }
        return rep.all_pass() ? 0 : 2;
    }

    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const descent::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const descent::TreeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const descent::CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
