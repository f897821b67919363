#pragma once

// Small dense exact linear algebra over Q, used for Hom-space computations
// in the homotopy category. Row-echelon based; fully deterministic.

#include "zlkb/ints.hpp"

#include <vector>

namespace zlkb {

using QVecRow = std::vector<Rat>;

// Reduced row echelon form in place; returns pivot column of each kept row.
std::vector<std::size_t> rref(std::vector<QVecRow>& rows);

std::size_t rank(std::vector<QVecRow> rows);

// Basis of the kernel of the matrix (rows = equations, cols = variables).
std::vector<QVecRow> kernel_basis(const std::vector<QVecRow>& equations, std::size_t nvars);

// Span structure supporting "reduce a vector modulo the span" queries.
class Span {
public:
    explicit Span(std::size_t dim) : dim_(dim) {}
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    // reduce v modulo the span; returns the residue (zero if v in span)
    QVecRow residue(QVecRow v) const;
    // add a vector to the span; returns true if it enlarged the span
    bool add(QVecRow v);

private:
    std::size_t dim_;
    std::vector<QVecRow> rows_;            // echelon rows
    std::vector<std::size_t> pivots_;      // pivot column per row
};

} // namespace zlkb
