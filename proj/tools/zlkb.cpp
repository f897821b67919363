// Command-line front end: act / matrix / verify / hn.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse errors.

#include "zlkb/braid.hpp"
#include "zlkb/homotopy.hpp"
#include "zlkb/objexpr.hpp"
#include "zlkb/reps.hpp"
#include "zlkb/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

namespace {

using namespace zlkb;

std::string charge_path_or_env(const std::string& flag) {
    if (!flag.empty() && flag != "default") return flag;
    const char* env = std::getenv("ZLKB_CHARGE_FILE");
    if (env && *env) return env;
    return "default";
}

std::vector<std::pair<int, int>> pair_labels(int n) {
    PairIndex pi{n};
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < pi.size(); ++a) out.push_back(pi.at(a));
    return out;
}

template <class R>
void print_matrix(const Mat<R>& m, int n, const std::string& format, bool pair_indexed) {
    auto label = [&](int a) {
        if (!pair_indexed) return std::to_string(a + 1);
        auto [i, j] = PairIndex{n}.at(a);
        return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    };
    if (format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t r = 0; r < m.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
            rows.push_back(row);
        }
        nlohmann::json labels = nlohmann::json::array();
        for (std::size_t a = 0; a < m.rows(); ++a) labels.push_back(label(int(a)));
        std::cout << nlohmann::json({{"labels", labels}, {"entries", rows}}).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "row";
        for (std::size_t c = 0; c < m.cols(); ++c) std::cout << "," << label(int(c));
        std::cout << "\n";
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::cout << label(int(r));
            for (std::size_t c = 0; c < m.cols(); ++c) std::cout << "," << m(r, c).str();
            std::cout << "\n";
        }
    } else {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            std::cout << label(int(r)) << ": ";
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (c) std::cout << " | ";
                std::cout << m(r, c).str();
            }
            std::cout << "\n";
        }
    }
}

void print_complex(const ProjComplex& x, const std::string& format) {
    if (format == "json")
        std::cout << x.to_json().dump(2) << "\n";
    else
        std::cout << x.pretty() << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"zlkb: exact computations for zigzag braid twists, stability data and "
                 "two-variable braid matrices"};
    app.require_subcommand(1);

    int n = 2;
    std::string word, object_spec, rep = "lkb", suite, format = "text";
    std::string charge_file = "default";
    int k = 0, samples = 100, random_words = 50;
    std::uint64_t seed = 7;

    auto* act = app.add_subcommand("act", "apply a braid word to an object and reduce");
    act->add_option("--n", n, "number of algebra vertices (strands minus one)");
    act->add_option("--word", word, "braid word, e.g. \"s1,s2^-1\" or \"garside\"");
    act->add_option("--object", object_spec, "object expression, e.g. \"P(1,3)\"")->required();
    act->add_option("--format", format, "json|text");

    auto* matrix = app.add_subcommand("matrix", "print a representation matrix");
    matrix->add_option("--rep", rep, "lkb|ptau|perm|burau|m0|m0inv|mk");
    matrix->add_option("--word", word, "braid word (lkb, ptau, perm, burau)");
    matrix->add_option("--n", n, "number of algebra vertices");
    matrix->add_option("--k", k, "k for --rep mk");
    matrix->add_option("--charge-file", charge_file, "charge parameter file or 'default'");
    matrix->add_option("--format", format, "json|text|csv");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "suite name; see --list")->required();
    verify->add_option("--n", n, "size parameter where applicable");
    verify->add_option("--samples", samples, "sample count for property suites");
    verify->add_option("--random", random_words, "randomized word count");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--charge-file", charge_file, "charge parameter file or 'default'");
    verify->add_option("--format", format, "json|text");

    auto* hn_cmd = app.add_subcommand("hn", "Harder-Narasimhan data of an object");
    hn_cmd->add_option("--n", n, "number of algebra vertices");
    hn_cmd->add_option("--object", object_spec, "object expression")->required();
    hn_cmd->add_option("--charge-file", charge_file, "charge parameter file or 'default'");
    hn_cmd->add_option("--format", format, "json|text");

    auto* suites_cmd = app.add_subcommand("suites", "list verification suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (suites_cmd->parsed()) {
            for (auto& s : suite_names()) std::cout << s << "\n";
            return 0;
        }
        if (act->parsed()) {
            ProjComplex x = parse_object(object_spec, n);
            BraidWord w = BraidWord::parse(word, n);
            print_complex(apply_word(w, x), format);
            return 0;
        }
        if (matrix->parsed()) {
            BraidWord w = word.empty() ? BraidWord{} : BraidWord::parse(word, n);
            if (rep == "lkb") {
                print_matrix(lkb_word(w, n), n, format, true);
            } else if (rep == "ptau") {
                ChargeParams charge = ChargeParams::load(charge_path_or_env(charge_file), n);
                StableBasis b0 = basis_tau_0(n, charge);
                print_matrix(ptau_matrix(w, b0).matrix, n, format, true);
            } else if (rep == "perm") {
                print_matrix(perm_word(w, n), n, format, true);
            } else if (rep == "burau") {
                print_matrix(burau_matrix(w, n), n, format, false);
            } else if (rep == "m0") {
                print_matrix(m_tau0(n).first, n, format, true);
            } else if (rep == "m0inv") {
                print_matrix(m_tau0(n).second, n, format, true);
            } else if (rep == "mk") {
                print_matrix(m_tau_k(n, k), n, format, true);
            } else {
                std::cerr << "unknown --rep " << rep << "\n";
                return 2;
            }
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions opts;
            opts.n = n;
            opts.samples = samples;
            opts.random_words = random_words;
            opts.seed = seed;
            opts.charge_file = charge_path_or_env(charge_file);
            SuiteReport report = run_suite(suite, opts);
            if (format == "json")
                std::cout << report.to_json().dump(2) << "\n";
            else
                std::cout << report.text();
            return report.ok() ? 0 : 1;
        }
        if (hn_cmd->parsed()) {
            ChargeParams charge = ChargeParams::load(charge_path_or_env(charge_file), n);
            StableBasis basis = basis_tau_0(n, charge);
            ProjComplex x = reduce(parse_object(object_spec, n));
            HNResult r = hn(x, basis);
            MassVector m = mass_of(r, int(basis.members.size()));
            auto k0 = k0_class(r, int(basis.members.size()));
            PairIndex pi{n};
            if (format == "json") {
                nlohmann::json pieces = nlohmann::json::array();
                for (auto& p : r.pieces) {
                    auto [i, j] = pi.at(p.root);
                    pieces.push_back(
                        {{"root", {i, j}}, {"k", p.k}, {"l", p.l}});
                }
                nlohmann::json massj = nlohmann::json::array(), k0j = nlohmann::json::array();
                for (int a = 0; a < pi.size(); ++a) {
                    auto [i, j] = pi.at(a);
                    massj.push_back({{"root", {i, j}}, {"multiplicity", m.aggregated[a].str()}});
                    k0j.push_back({{"root", {i, j}}, {"coefficient", k0[a].str()}});
                }
                std::cout << nlohmann::json(
                                 {{"pieces", pieces}, {"mass", massj}, {"k0", k0j}})
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "pieces:\n";
                for (auto& p : r.pieces) {
                    auto [i, j] = pi.at(p.root);
                    std::cout << "  (" << i << "," << j <<") {" << p.k << "}<" << p.l << ">\n";
                }
                std::cout << "mass:";
                for (int a = 0; a < pi.size(); ++a) {
                    auto [i, j] = pi.at(a);
                    std::cout << " (" << i << "," << j << "):" << m.aggregated[a].str();
                }
                std::cout << "\nk0:";
                for (int a = 0; a < pi.size(); ++a) {
                    auto [i, j] = pi.at(a);
                    std::cout << " (" << i << "," << j << "): " << k0[a].str() << " ;";
                }
                std::cout << "\n";
            }
            return 0;
        }
    } catch (const ObjParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
