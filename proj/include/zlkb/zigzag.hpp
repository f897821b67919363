#pragma once

// The type-A_n zigzag algebra: path basis, path-length grading, and
// multiplication modulo the relations (straight length-2 paths vanish,
// the two loops at a vertex coincide).
//
// A basis element is e_i (degree 0), an arrow (i|j) with |i-j| = 1
// (degree 1), or the loop l_i = (i|i+1|i) = (i|i-1|i) (degree 2).
// A ZigzagElement is an integer combination of basis elements sharing one
// (source, target) pair, so it is determined by at most two coefficients.

#include "zlkb/ints.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zlkb {

class ZigzagElement {
public:
    ZigzagElement() = default; // zero

    static ZigzagElement idem(int i) { return ZigzagElement(i, i, 1, 0); }
    static ZigzagElement arrow(int i, int j) {
        if (i - j != 1 && j - i != 1) throw std::invalid_argument("zigzag: not an arrow");
        return ZigzagElement(i, j, 1, 0);
    }
    static ZigzagElement loop(int i) { return ZigzagElement(i, i, 0, 1); }
    static ZigzagElement scaled(const ZigzagElement& z, const Int& c) {
        ZigzagElement r = z;
        r.low_ *= c;
        r.loop_ *= c;
        r.normalize();
        return r;
    }

    bool is_zero() const { return src_ == 0; }
    int src() const { return src_; }
    int dst() const { return dst_; }
    bool diagonal() const { return src_ == dst_; }

    // coefficient of the degree-0/1 part (e_i resp. the arrow)
    const Int& low() const { return low_; }
    // coefficient of the loop (diagonal case only)
    const Int& loop() const { return loop_; }

    // degree if homogeneous, -1 otherwise, -2 for zero
    int degree() const {
        if (is_zero()) return -2;
        bool has_low = low_ != 0, has_loop = loop_ != 0;
        if (has_low && has_loop) return -1;
        if (has_loop) return 2;
        return diagonal() ? 0 : 1;
    }

    ZigzagElement operator-() const { return scaled(*this, -1); }

    friend ZigzagElement operator+(const ZigzagElement& a, const ZigzagElement& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.src_ != b.src_ || a.dst_ != b.dst_)
            throw std::invalid_argument("zigzag: sum of elements with different endpoints");
        ZigzagElement r(a.src_, a.dst_, a.low_ + b.low_, a.loop_ + b.loop_);
        r.normalize();
        return r;
    }
    friend ZigzagElement operator-(const ZigzagElement& a, const ZigzagElement& b) {
        return a + (-b);
    }

    // product modulo the zigzag relations; non-composable pairs give 0
    friend ZigzagElement operator*(const ZigzagElement& a, const ZigzagElement& b) {
        if (a.is_zero() || b.is_zero() || a.dst_ != b.src_) return {};
        ZigzagElement r;
        r.src_ = a.src_;
        r.dst_ = b.dst_;
        if (a.diagonal() && b.diagonal()) {
            r.low_ = a.low_ * b.low_;
            r.loop_ = a.low_ * b.loop_ + a.loop_ * b.low_; // l*l = 0
        } else if (a.diagonal()) {
            r.low_ = a.low_ * b.low_; // l * arrow = 0
        } else if (b.diagonal()) {
            r.low_ = a.low_ * b.low_; // arrow * l = 0
        } else if (a.src_ == b.dst_) {
            r.loop_ = a.low_ * b.low_; // arrow there and back: the loop
        }
        // arrow * arrow straight through: 0 by the relations
        r.normalize();
        return r;
    }

    friend bool operator==(const ZigzagElement& a, const ZigzagElement& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_ && a.low_ == b.low_ && a.loop_ == b.loop_;
    }
    friend bool operator!=(const ZigzagElement& a, const ZigzagElement& b) { return !(a == b); }

    // text names: "e1", "a(1,2)", "l1", combinations "2*e1 + l1"
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        auto term = [&](const Int& c, const std::string& name) {
            if (c == 0) return;
            if (!out.empty()) out += " + ";
            if (c == 1)
                out += name;
            else if (c == -1)
                out += "-" + name;
            else
                out += c.str() + "*" + name;
        };
        if (diagonal()) {
            term(low_, "e" + std::to_string(src_));
            term(loop_, "l" + std::to_string(src_));
        } else {
            term(low_, "a(" + std::to_string(src_) + "," + std::to_string(dst_) + ")");
        }
        return out;
    }

private:
    ZigzagElement(int s, int d, Int low, Int loop)
        : src_(s), dst_(d), low_(std::move(low)), loop_(std::move(loop)) {
        normalize();
    }
    void normalize() {
        if (low_ == 0 && loop_ == 0) {
            src_ = dst_ = 0;
        }
    }

    int src_ = 0, dst_ = 0; // 1-based vertices; 0 means the zero element
    Int low_{}, loop_{};
};

inline ZigzagElement zz_mul(const ZigzagElement& a, const ZigzagElement& b) { return a * b; }

// basis of e_i A e_j in path degree d (for an algebra with n vertices)
inline std::vector<ZigzagElement> hom_basis(int n, int i, int j, int d) {
    if (i < 1 || i > n || j < 1 || j > n) throw std::out_of_range("zigzag: vertex out of range");
    std::vector<ZigzagElement> out;
    if (i == j) {
        if (d == 0) out.push_back(ZigzagElement::idem(i));
        if (d == 2) out.push_back(ZigzagElement::loop(i));
    } else if (i - j == 1 || j - i == 1) {
        if (d == 1) out.push_back(ZigzagElement::arrow(i, j));
    }
    return out;
}

// all basis elements of e_i A e_j
inline std::vector<ZigzagElement> hom_basis_all(int n, int i, int j) {
    std::vector<ZigzagElement> out;
    for (int d = 0; d <= 2; ++d)
        for (auto& z : hom_basis(n, i, j, d)) out.push_back(z);
    return out;
}

// the dual path: pairing partner in the coevaluation formula
// (e_i <-> l_i, arrow (i|j) <-> (j|i)); degrees sum to 2
inline ZigzagElement dual_path(const ZigzagElement& p) {
    if (p.degree() == 0) return ZigzagElement::loop(p.src());
    if (p.degree() == 2) return ZigzagElement::idem(p.src());
    if (p.degree() == 1) return ZigzagElement::arrow(p.dst(), p.src());
    throw std::invalid_argument("zigzag: dual of a non-basis element");
}

} // namespace zlkb
