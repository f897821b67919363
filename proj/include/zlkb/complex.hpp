#pragma once

// Bounded complexes of shifted graded projectives P_i<l> over the zigzag
// algebra, with chain maps, shifts, direct sums and cones.
//
// Grading conventions, fixed once and used everywhere:
//  - a summand P_i<l> in homological degree k is written P_i{k}<l>;
//  - the differential raises the homological degree by one;
//  - a map P_j<a> -> P_i<b> of left modules is right multiplication by an
//    element of e_j A e_i of path degree a - b, so differential entries are
//    degree-compatible by construction;
//  - shift(X,k,l) relabels degrees, adds l to quantum shifts, and flips the
//    sign of the differential when k is odd;
//  - triangulated_shift(X,k) = shift(X,k,-k).

#include "zlkb/zigzag.hpp"

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace zlkb {

struct Summand {
    int v; // vertex, 1-based
    int q; // quantum shift <q>
    friend bool operator==(const Summand&, const Summand&) = default;
    friend auto operator<=>(const Summand&, const Summand&) = default;
};

using ZzMat = std::vector<std::vector<ZigzagElement>>; // rows: source, cols: target

ZzMat zz_mat(std::size_t rows, std::size_t cols);
ZzMat zz_mat_mul(const ZzMat& a, const ZzMat& b);
bool zz_mat_is_zero(const ZzMat& m);

class ProjComplex {
public:
    ProjComplex() = default;
    explicit ProjComplex(int n) : n_(n) {}

    // the projective P_i in bidegree (0,0)
    static ProjComplex projective(int n, int i);

    int n() const { return n_; }
    bool empty() const { return degs_.empty(); }
    int lo() const { return lo_; }            // lowest homological degree
    int hi() const { return lo_ + int(degs_.size()) - 1; }
    std::size_t summand_count() const;

    const std::vector<Summand>& summands(int m) const; // empty if out of range
    std::size_t width(int m) const { return summands(m).size(); }
    // differential block from degree m to m+1 (zero-sized if out of range)
    const ZzMat& diff(int m) const;

    // mutation used by constructors/builders
    void set_support(int lo, std::vector<std::vector<Summand>> degs);
    void set_diff(int m, ZzMat d);
    ZzMat& diff_mut(int m);

    void trim(); // drop empty boundary degrees

    bool degree_compatible() const;   // entries live in the forced path degree
    bool check_d_squared() const;

    ProjComplex shifted(int k, int l) const;
    ProjComplex triangulated_shifted(int k) const { return shifted(k, -k); }

    friend ProjComplex direct_sum(const ProjComplex& a, const ProjComplex& b);

    friend bool operator==(const ProjComplex&, const ProjComplex&) = default;

    // multiset of (k, v, q) triples, sorted; the shift-matching invariant data
    std::vector<std::array<int, 3>> summand_triples() const;

    // connected components (via nonzero differential entries), each returned
    // as a ProjComplex; order is deterministic
    std::vector<ProjComplex> components() const;

    std::string key() const; // canonical serialization (sorting, dedup)
    nlohmann::json to_json() const;
    std::string pretty() const; // human-readable one-line form

private:
    int n_ = 0;
    int lo_ = 0;
    std::vector<std::vector<Summand>> degs_;
    std::vector<ZzMat> diffs_; // diffs_[i]: degs_[i] -> degs_[i+1]
    int idx(int m) const { return m - lo_; }
};

// A bidegree-(0,0) chain map; arbitrary bidegrees are handled by shifting the
// target first.
class ChainMap {
public:
    ChainMap() = default;
    ChainMap(ProjComplex src, ProjComplex dst);

    static ChainMap identity(const ProjComplex& x);
    static ChainMap zero(const ProjComplex& x, const ProjComplex& y);

    const ProjComplex& src() const { return src_; }
    const ProjComplex& dst() const { return dst_; }

    const ZzMat& block(int m) const;  // src.deg(m) -> dst.deg(m)
    ZzMat& block_mut(int m);

    bool commutes() const; // d_src . F = F . d_dst degree-wise
    bool is_zero() const;

    friend ChainMap compose(const ChainMap& f, const ChainMap& g); // src(f) -> dst(g)
    ChainMap shifted(int k, int l) const;

private:
    ProjComplex src_, dst_;
    int lo_ = 0;                 // degree of blocks_[0]
    std::vector<ZzMat> blocks_;
    int idx(int m) const { return m - lo_; }
    friend class ConeBuilder;
};

struct Triangle {
    // X --f--> Y --incl--> C --proj--> shift(X,-1,0); C is the cone of f
    ProjComplex cone;
    ChainMap incl; // Y -> C
    ChainMap proj; // C -> shift(X,-1,0), the connecting data
};

Triangle cone(const ChainMap& f);

} // namespace zlkb
