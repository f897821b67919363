#include "zlkb/charge.hpp"

#include <fstream>
#include <stdexcept>

namespace zlkb {

ChargeParams ChargeParams::defaults(int n) {
    ChargeParams c;
    c.n = n;
    for (int m = 1; m <= n; ++m) {
        Rat x = 4 * m - 2 * (n + 1) - 1;
        Rat y = Rat((2 * n + 2) * (2 * n + 2)) - x * x;
        c.simple.push_back({x, y});
    }
    c.validate();
    return c;
}

static Rat rat_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return Rat(j.get<std::string>());
    throw std::invalid_argument("charge file: rational must be integer or \"p/q\" string");
}

ChargeParams ChargeParams::from_json(const nlohmann::json& j) {
    ChargeParams c;
    auto& vecs = j.at("vectors");
    c.n = int(vecs.size());
    for (auto& v : vecs) c.simple.push_back({rat_from_json(v.at(0)), rat_from_json(v.at(1))});
    c.validate();
    return c;
}

ChargeParams ChargeParams::load(const std::string& path, int n) {
    if (path.empty() || path == "default") return defaults(n);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("charge file: cannot open " + path);
    nlohmann::json j;
    in >> j;
    ChargeParams c = from_json(j);
    if (c.n != n)
        throw std::runtime_error("charge file: has " + std::to_string(c.n) +
                                 " vectors, expected " + std::to_string(n));
    return c;
}

PlaneVec ChargeParams::root_charge(int i, int j) const {
    if (i < 1 || j > n + 1 || i >= j) throw std::out_of_range("root_charge: bad pair");
    PlaneVec z{0, 0};
    for (int m = i; m < j; ++m) z = z + simple[m - 1];
    return z;
}

void ChargeParams::validate() const {
    if (int(simple.size()) != n || n < 1)
        throw std::invalid_argument("charge: need one vector per simple root");
    for (auto& v : simple)
        if (v.y <= 0) throw std::invalid_argument("charge: vectors must lie in the upper half plane");
    for (int m = 0; m + 1 < n; ++m)
        if (cross(simple[m], simple[m + 1]) >= 0)
            throw std::invalid_argument("charge: path must be right-turning (convex position)");
    PairIndex pi{n};
    for (int a = 0; a < pi.size(); ++a)
        for (int b = a + 1; b < pi.size(); ++b) {
            auto [i1, j1] = pi.at(a);
            auto [i2, j2] = pi.at(b);
            if (cross(root_charge(i1, j1), root_charge(i2, j2)) == 0)
                throw std::invalid_argument("charge: two root charges have equal phase");
        }
}

nlohmann::json ChargeParams::to_json() const {
    nlohmann::json vecs = nlohmann::json::array();
    for (auto& v : simple) {
        auto fmt = [](const Rat& r) {
            return boost::multiprecision::denominator(r) == 1
                       ? nlohmann::json(boost::multiprecision::numerator(r).str())
                       : nlohmann::json(r.str());
        };
        vecs.push_back({fmt(v.x), fmt(v.y)});
    }
    return {{"vectors", vecs}};
}

int PairIndex::idx(int i, int j) const {
    if (i < 1 || j <= i || j > n + 1) throw std::out_of_range("PairIndex: bad pair");
    // pairs (1,2)..(1,n+1), (2,3)..(2,n+1), ...
    int base = 0;
    for (int a = 1; a < i; ++a) base += n + 1 - a;
    return base + (j - i - 1);
}

std::pair<int, int> PairIndex::at(int k) const {
    for (int i = 1; i <= n; ++i) {
        int row = n + 1 - i;
        if (k < row) return {i, i + 1 + k};
        k -= row;
    }
    throw std::out_of_range("PairIndex: index out of range");
}

} // namespace zlkb
