// Python bindings for the main operations: acting on objects, representation
// matrices, HN data and the verification suites. Structured results cross the
// boundary as JSON strings; matrices as lists of entry strings.

#include "zlkb/braid.hpp"
#include "zlkb/homotopy.hpp"
#include "zlkb/objexpr.hpp"
#include "zlkb/reps.hpp"
#include "zlkb/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zlkb;

namespace {

template <class R>
std::vector<std::vector<std::string>> mat_strings(const Mat<R>& m) {
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c).str());
    return out;
}

ChargeParams charge_for(int n, const std::string& charge_file) {
    return ChargeParams::load(charge_file, n);
}

} // namespace

PYBIND11_MODULE(_zlkb, m) {
    m.doc() = "exact zigzag braid twists, stability data and two-variable braid matrices";

    m.def(
        "act",
        [](int n, const std::string& word, const std::string& object_spec) {
            ProjComplex x = parse_object(object_spec, n);
            BraidWord w = BraidWord::parse(word, n);
            return apply_word(w, x).to_json().dump();
        },
        py::arg("n"), py::arg("word"), py::arg("object"),
        "apply a braid word to an object expression; returns the reduced complex as JSON");

    m.def(
        "matrix",
        [](const std::string& rep, int n, const std::string& word, int k,
           const std::string& charge_file) {
            BraidWord w = word.empty() ? BraidWord{} : BraidWord::parse(word, n);
            if (rep == "lkb") return mat_strings(lkb_word(w, n));
            if (rep == "perm") return mat_strings(perm_word(w, n));
            if (rep == "burau") return mat_strings(burau_matrix(w, n));
            if (rep == "m0") return mat_strings(m_tau0(n).first);
            if (rep == "m0inv") return mat_strings(m_tau0(n).second);
            if (rep == "mk") return mat_strings(m_tau_k(n, k));
            if (rep == "ptau") {
                StableBasis b0 = basis_tau_0(n, charge_for(n, charge_file));
                return mat_strings(ptau_matrix(w, b0).matrix);
            }
            throw std::invalid_argument("unknown rep: " + rep);
        },
        py::arg("rep"), py::arg("n"), py::arg("word") = "", py::arg("k") = 0,
        py::arg("charge_file") = "default",
        "representation matrix as a list of rows of entry strings");

    m.def(
        "hn",
        [](int n, const std::string& object_spec, const std::string& charge_file) {
            StableBasis basis = basis_tau_0(n, charge_for(n, charge_file));
            ProjComplex x = reduce(parse_object(object_spec, n));
            HNResult r = hn(x, basis);
            PairIndex pi{n};
            nlohmann::json pieces = nlohmann::json::array();
            for (auto& p : r.pieces) {
                auto [i, j] = pi.at(p.root);
                pieces.push_back({{"root", {i, j}}, {"k", p.k}, {"l", p.l}});
            }
            auto k0 = k0_class(r, pi.size());
            nlohmann::json k0j = nlohmann::json::array();
            for (int a = 0; a < pi.size(); ++a) {
                auto [i, j] = pi.at(a);
                k0j.push_back({{"root", {i, j}}, {"coefficient", k0[a].str()}});
            }
            return nlohmann::json({{"pieces", pieces}, {"k0", k0j}}).dump();
        },
        py::arg("n"), py::arg("object"), py::arg("charge_file") = "default",
        "Harder-Narasimhan pieces and K0 class as JSON");

    m.def(
        "verify",
        [](const std::string& suite, int n, int samples, int random_words,
           std::uint64_t seed) {
            VerifyOptions opts;
            opts.n = n;
            opts.samples = samples;
            opts.random_words = random_words;
            opts.seed = seed;
            SuiteReport r = run_suite(suite, opts);
            return py::make_tuple(r.ok(), r.text());
        },
        py::arg("suite"), py::arg("n") = 2, py::arg("samples") = 100,
        py::arg("random_words") = 50, py::arg("seed") = 7,
        "run a verification suite; returns (ok, report text)");

    m.def("suites", []() { return suite_names(); });
}
