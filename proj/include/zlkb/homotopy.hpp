#pragma once

// Minimal models by Gaussian elimination, graded Hom spaces in the homotopy
// category, isomorphism testing and recognition of shifted stables.

#include "zlkb/complex.hpp"
#include "zlkb/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace zlkb {

// homotopy-equivalent minimal complex: no differential entry has an
// invertible degree-0 component
ProjComplex reduce(const ProjComplex& x);

struct Reduction {
    ProjComplex r;
    ChainMap to_reduced;   // X -> r
    ChainMap from_reduced; // r -> X
};
Reduction reduce_with_maps(const ProjComplex& x);

struct HomSpace {
    int dim = 0;
    std::vector<ChainMap> basis; // representatives mod null-homotopy, X -> shift(Y,k,l)
};

// chain maps X -> Y{k}<l> modulo homotopy, by exact rational linear algebra
HomSpace hom(const ProjComplex& x, const ProjComplex& y, int k, int l);
int hom_dim(const ProjComplex& x, const ProjComplex& y, int k, int l);

// quantum shifts l for which a chain-map slot exists at homological shift k
std::vector<int> hom_l_candidates(const ProjComplex& s, const ProjComplex& x, int k);

// isomorphism in the homotopy category; inputs must be reduced
bool is_isomorphic(const ProjComplex& x, const ProjComplex& y);
std::optional<ChainMap> find_isomorphism(const ProjComplex& x, const ProjComplex& y,
                                         std::uint64_t seed = 11);

struct StableMatch {
    int index; // position in the basis family
    int k, l;  // X ~ S{k}<l>
};

// recognize X as a shifted member of the given family of reduced complexes
std::optional<StableMatch> identify_in_family(const ProjComplex& x,
                                              const std::vector<ProjComplex>& family);

} // namespace zlkb
