#pragma once

// Exact Laurent polynomials in two variables over the integers.
// Two instances are used throughout: Z[q^{+-1},t^{+-1}] and Z[x^{+-1},y^{+-1}].

#include "zlkb/ints.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

namespace zlkb {

struct QTVars {
    static constexpr const char* var1 = "q";
    static constexpr const char* var2 = "t";
    static constexpr const char* key1 = "qexp";
    static constexpr const char* key2 = "texp";
};

struct XYVars {
    static constexpr const char* var1 = "x";
    static constexpr const char* var2 = "y";
    static constexpr const char* key1 = "xexp";
    static constexpr const char* key2 = "yexp";
};

// Exponent pair (a,b) meaning var1^a * var2^b.
using Expo = std::pair<int, int>;

template <class Vars>
class Laurent {
public:
    using vars = Vars;

    Laurent() = default;
    Laurent(long c) { // NOLINT: implicit integer literals are convenient
        if (c != 0) terms_[{0, 0}] = c;
    }
    explicit Laurent(const Int& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }

    static Laurent monomial(const Int& c, int a, int b) {
        Laurent p;
        if (c != 0) terms_insert(p.terms_, {a, b}, c);
        return p;
    }
    static Laurent var1(int a = 1) { return monomial(1, a, 0); }
    static Laurent var2(int b = 1) { return monomial(1, 0, b); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0} &&
               terms_.begin()->second == 1;
    }
    // true iff +- a single monomial with coefficient +-1, i.e. a unit of the ring
    bool is_unit() const {
        if (terms_.size() != 1) return false;
        const Int& c = terms_.begin()->second;
        return c == 1 || c == -1;
    }
    bool is_monomial() const { return terms_.size() == 1; }

    const std::map<Expo, Int>& terms() const { return terms_; }

    Laurent operator-() const {
        Laurent r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    Laurent& operator+=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) terms_insert(terms_, e, c);
        return *this;
    }
    Laurent& operator-=(const Laurent& o) {
        for (auto& [e, c] : o.terms_) terms_insert(terms_, e, -c);
        return *this;
    }
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_)
                terms_insert(r.terms_, {ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
    friend bool operator<(const Laurent& a, const Laurent& b) { return a.terms_ < b.terms_; }

    Laurent inverse_of_unit() const {
        if (!is_unit()) throw std::domain_error("Laurent: not a unit");
        auto [e, c] = *terms_.begin();
        return monomial(c, -e.first, -e.second); // c = +-1 so c^{-1} = c
    }

    // Exact division; nullopt if the divisor does not divide exactly over Z.
    std::optional<Laurent> divided_by(const Laurent& d) const {
        if (d.is_zero()) throw std::domain_error("Laurent: division by zero");
        Laurent rem = *this, quot;
        // leading term w.r.t. lex order on (a,b); Laurent shifts are units so
        // plain lex on raw exponents works.
        const auto lead = [](const Laurent& p) { return std::prev(p.terms_.end()); };
        auto dl = lead(d);
        while (!rem.is_zero()) {
            auto rl = lead(rem);
            Int qc = rl->second / dl->second;
            if (qc * dl->second != rl->second) return std::nullopt;
            Expo qe{rl->first.first - dl->first.first, rl->first.second - dl->first.second};
            Laurent t = monomial(qc, qe.first, qe.second);
            quot += t;
            rem -= t * d;
            if (!rem.is_zero() && !(lead(rem)->first < rl->first)) return std::nullopt;
        }
        return quot;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        // highest (var2, var1) exponents first
        std::map<std::pair<int, int>, Int> by_v2;
        for (auto& [e, c] : terms_) by_v2[{-e.second, -e.first}] = c;
        std::string out;
        bool first = true;
        for (auto& [k, c] : by_v2) {
            int a = -k.second, b = -k.first;
            if (!first) out += " + ";
            first = false;
            std::string mono;
            if (a != 0) mono += std::string(Vars::var1) + (a == 1 ? "" : "^" + std::to_string(a));
            if (b != 0) {
                if (!mono.empty()) mono += "*";
                mono += std::string(Vars::var2) + (b == 1 ? "" : "^" + std::to_string(b));
            }
            if (mono.empty()) {
                out += c.str();
            } else if (c == 1) {
                out += mono;
            } else {
                out += c.str() + "*" + mono;
            }
        }
        return out;
    }

    nlohmann::json to_json() const {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& [e, c] : terms_)
            arr.push_back({{Vars::key1, e.first}, {Vars::key2, e.second}, {"coeff", c.str()}});
        return arr;
    }
    static Laurent from_json(const nlohmann::json& arr) {
        Laurent p;
        for (auto& t : arr) {
            Int c(t.at("coeff").template get<std::string>());
            terms_insert(p.terms_, {t.at(Vars::key1).template get<int>(),
                                    t.at(Vars::key2).template get<int>()},
                         c);
        }
        return p;
    }

private:
    static void terms_insert(std::map<Expo, Int>& m, Expo e, const Int& c) {
        if (c == 0) return;
        auto it = m.find(e);
        if (it == m.end()) {
            m.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) m.erase(it);
        }
    }

    std::map<Expo, Int> terms_; // invariant: no zero coefficients
};

using LaurentQT = Laurent<QTVars>;
using LaurentXY = Laurent<XYVars>;

// x -> t q^{-1}, y -> -t^{-1}; a ring homomorphism Z[x^{+-1},y^{+-1}] -> Z[q^{+-1},t^{+-1}].
inline LaurentQT xy_to_qt(const LaurentXY& p) {
    LaurentQT r;
    for (auto& [e, c] : p.terms()) {
        int a = e.first, b = e.second;
        Int coeff = (b % 2 == 0) ? c : -c;
        r += LaurentQT::monomial(coeff, -a, a - b);
    }
    return r;
}

// q -> -x^{-1}y^{-1}, t -> -y^{-1}; the inverse identification.
inline LaurentXY qt_to_xy(const LaurentQT& p) {
    LaurentXY r;
    for (auto& [e, c] : p.terms()) {
        int a = e.first, b = e.second;
        Int coeff = ((a + b) % 2 == 0) ? c : -c;
        r += LaurentXY::monomial(coeff, -a, -a - b);
    }
    return r;
}

} // namespace zlkb
