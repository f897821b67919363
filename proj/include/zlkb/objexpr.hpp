#pragma once

// Object expression mini-language for the CLI:
//   P(i) | P(i,j) | Pk(k,i,j) | shift(X,k,l) | tshift(X,k) | sum(X,...)
//   | act(word, X) | cone(id, X) | cone(zero, X, Y)
// Braid words inside act(...) may separate letters with spaces or commas.

#include "zlkb/complex.hpp"

#include <string>

namespace zlkb {

struct ObjParseError : std::runtime_error {
    std::size_t position;
    ObjParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

ProjComplex parse_object(const std::string& text, int n);

} // namespace zlkb
