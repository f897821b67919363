#pragma once

// Exact central-charge data: one rational planar vector per simple root, all
// in the open upper half plane, in convex position (right-turning path) so
// that every positive root is stable. Phases are never stored as numbers;
// comparisons go through exact cross products.

#include "zlkb/ints.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace zlkb {

struct PlaneVec {
    Rat x, y;
    friend bool operator==(const PlaneVec&, const PlaneVec&) = default;
};

inline Rat cross(const PlaneVec& a, const PlaneVec& b) { return a.x * b.y - a.y * b.x; }
inline PlaneVec operator+(const PlaneVec& a, const PlaneVec& b) {
    return {a.x + b.x, a.y + b.y};
}

// strict angle comparison within the open upper half plane
inline bool angle_less(const PlaneVec& a, const PlaneVec& b) { return cross(a, b) > 0; }

// phase of a stable shifted by {off}; larger = extracted earlier in HN
struct Phase {
    PlaneVec z;
    int off = 0;
};
inline bool phase_less(const Phase& a, const Phase& b) {
    if (a.off != b.off) return a.off < b.off;
    return angle_less(a.z, b.z);
}

struct ChargeParams {
    int n = 0;
    std::vector<PlaneVec> simple; // v_1..v_n

    static ChargeParams defaults(int n);
    static ChargeParams from_json(const nlohmann::json& j);
    static ChargeParams load(const std::string& path, int n); // file or "default"

    PlaneVec root_charge(int i, int j) const; // v_i + ... + v_{j-1}
    void validate() const;                    // throws on violation
    nlohmann::json to_json() const;
};

// lexicographic indexing of pairs 1 <= i < j <= n+1
struct PairIndex {
    int n = 0;
    int size() const { return n * (n + 1) / 2; }
    int idx(int i, int j) const;
    std::pair<int, int> at(int k) const;
};

} // namespace zlkb
