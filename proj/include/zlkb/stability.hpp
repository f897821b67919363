#pragma once

// Stability-condition representatives: the tau_k stable bases and their braid
// transports, greedy HN extraction, mass vectors, thin triangles and
// extriangulated K_0 classes.

#include "zlkb/braid.hpp"
#include "zlkb/charge.hpp"
#include "zlkb/homotopy.hpp"
#include "zlkb/laurent.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace zlkb {

struct StableMember {
    ProjComplex cx;
    Phase phase;
};

struct StableBasis {
    int n = 0;
    int tau_k = -1;      // >= 0 when the class is a tau_k class
    BraidWord defining;  // braid mapping the tau_0 representative here
    std::vector<StableMember> members; // indexed by PairIndex order

    PairIndex pairs() const { return PairIndex{n}; }
    std::vector<ProjComplex> complexes() const;
};

// the explicit complex of the tau_k stable at pair (i,j); k=0 gives the
// straight-line complexes, k=n coincides with k=0
ProjComplex tau_k_stable(int n, int k, int i, int j);

StableBasis basis_tau_0(int n, const ChargeParams& charge);
StableBasis basis_tau_k(int n, int k, const ChargeParams& charge);

// closed-form data of sigma_k^{-1}...sigma_1^{-1} on the tau_0 basis:
// source pair -> (target pair, homological shift, quantum shift)
struct TwistTableEntry {
    int ti, tj;
    int k, l;
};
TwistTableEntry twist_chain_table(int n, int k, int i, int j);

// apply w to every member, reduce, recognize the target class and
// re-normalize shifts canonically; phases transported exactly
StableBasis transport_basis(const StableBasis& b, const BraidWord& w);

struct HNPiece {
    int root; // PairIndex position
    int k, l;
    friend bool operator==(const HNPiece&, const HNPiece&) = default;
    friend auto operator<=>(const HNPiece&, const HNPiece&) = default;
};

struct HNResult {
    std::vector<HNPiece> pieces; // extraction order, phases non-increasing
};

HNResult hn(const ProjComplex& x, const StableBasis& basis);

struct MassVector {
    std::map<std::tuple<int, int, int>, Int> refined; // (root,k,l) -> multiplicity
    std::vector<Int> aggregated;                      // per root
    friend bool operator==(const MassVector&, const MassVector&) = default;
};
MassVector mass_of(const HNResult& r, int nroots);
MassVector mass(const ProjComplex& x, const StableBasis& basis);

// extriangulated K0 class: coordinates over the positive roots
std::vector<LaurentQT> k0_class(const ProjComplex& x, const StableBasis& basis);
std::vector<LaurentQT> k0_class(const HNResult& r, int nroots);

// split (naive) class: t^k q^l per summand-stable, without HN
std::vector<LaurentQT> k0_split_class(const std::vector<HNPiece>& pieces, int nroots);

// classical K0 class of a complex: sum of (-1)^k q^l [P_v]
std::vector<LaurentQT> classical_class(const ProjComplex& x);
// same computed through HN data
std::vector<LaurentQT> classical_class(const HNResult& r, const StableBasis& basis);

// triangle A -> B -> Cone(f); true iff aggregated masses add up
bool thin_check(const ChainMap& f, const StableBasis& basis);

struct PsiReport {
    bool refined_ok = true;
    bool aggregated_ok = true;
};
// Jordan-Holder-style additivity over a thin triangle A -> B -> C
PsiReport psi_additivity(const ProjComplex& a, const ProjComplex& b, const ProjComplex& c,
                         const StableBasis& basis);

// exhaustive top-phase peeling: every complete maximal-phase extraction path;
// returns all distinct resulting multisets (expected: exactly one)
std::vector<MassVector> hn_all_peelings(const ProjComplex& x, const StableBasis& basis,
                                        std::size_t cap);

} // namespace zlkb
