#pragma once

// Braid words and the twist action on complexes. A word acts left to right:
// the first letter acts first. The "garside" macro token expands so that the
// whole word acts as sigma_1 ... sigma_n (and "garside^-1" as its inverse).

#include "zlkb/complex.hpp"

#include <string>
#include <vector>

namespace zlkb {

struct BraidLetter {
    int gen;  // 1..n
    int sign; // +1 or -1
    friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

struct BraidWord {
    std::vector<BraidLetter> letters;

    static BraidWord parse(const std::string& text, int n);
    std::string str() const;
    BraidWord inverse() const;       // reversed word with inverted letters
    BraidWord letters_inverted() const; // same order, each letter inverted
    friend BraidWord concat(const BraidWord& first, const BraidWord& then);
    friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord garside_word(int n, int sign); // sign +1: sigma_1...sigma_n

// one twist: totalization of the bimodule complex tensored with X, reduced
ProjComplex apply_generator(int i, int sign, const ProjComplex& x);
// unreduced version (exposed for tests of the reduction itself)
ProjComplex apply_generator_raw(int i, int sign, const ProjComplex& x);

ProjComplex apply_word(const BraidWord& w, const ProjComplex& x);

bool words_act_equally(const BraidWord& w1, const BraidWord& w2,
                       const std::vector<ProjComplex>& tests);

} // namespace zlkb
