#include "zlkb/braid.hpp"

#include "zlkb/homotopy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zlkb {

BraidWord BraidWord::parse(const std::string& text, int n) {
    BraidWord w;
    std::string token;
    auto flush = [&]() {
        // trim spaces
        std::size_t a = token.find_first_not_of(" \t");
        if (a == std::string::npos) {
            token.clear();
            return;
        }
        std::size_t b = token.find_last_not_of(" \t");
        std::string t = token.substr(a, b - a + 1);
        token.clear();
        int sign = 1;
        if (t.size() > 3 && t.substr(t.size() - 3) == "^-1") {
            sign = -1;
            t = t.substr(0, t.size() - 3);
        }
        if (t == "garside") {
            auto g = garside_word(n, sign);
            w.letters.insert(w.letters.end(), g.letters.begin(), g.letters.end());
            return;
        }
        if (t.size() < 2 || t[0] != 's')
            throw std::invalid_argument("braid word: bad token '" + t + "'");
        int gen = std::stoi(t.substr(1));
        if (gen < 1 || gen > n)
            throw std::invalid_argument("braid word: generator out of range in '" + t + "'");
        w.letters.push_back({gen, sign});
    };
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (c == ',' || !token.empty()) {
                if (token.find_first_not_of(" \t") != std::string::npos) flush();
                else token.clear();
            }
        } else {
            token += c;
        }
    }
    if (token.find_first_not_of(" \t") != std::string::npos) flush();
    return w;
}

std::string BraidWord::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i) os << ",";
        os << "s" << letters[i].gen;
        if (letters[i].sign < 0) os << "^-1";
    }
    return os.str();
}

BraidWord BraidWord::inverse() const {
    BraidWord w;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
        w.letters.push_back({it->gen, -it->sign});
    return w;
}

BraidWord BraidWord::letters_inverted() const {
    BraidWord w = *this;
    for (auto& l : w.letters) l.sign = -l.sign;
    return w;
}

BraidWord concat(const BraidWord& first, const BraidWord& then) {
    BraidWord w = first;
    w.letters.insert(w.letters.end(), then.letters.begin(), then.letters.end());
    return w;
}

BraidWord garside_word(int n, int sign) {
    BraidWord w;
    if (sign > 0) {
        for (int i = n; i >= 1; --i) w.letters.push_back({i, 1});
    } else {
        for (int i = 1; i <= n; ++i) w.letters.push_back({i, -1});
    }
    return w;
}

namespace {

struct NewSummand {
    int deg;           // homological degree of the new summand
    std::size_t src;   // index of the source summand within its degree
    int src_deg;       // degree of the source summand
    ZigzagElement path; // basis path p of e_i A e_v
    Summand summand;   // the new P_i<q'>
};

} // namespace

ProjComplex apply_generator_raw(int i, int sign, const ProjComplex& x) {
    int n = x.n();
    if (i < 1 || i > n) throw std::out_of_range("apply_generator: index out of range");
    if (x.empty()) return x;

    // new summands P_i<...> created by tensoring with A e_i (x) e_i A
    std::vector<NewSummand> created;
    for (int m = x.lo(); m <= x.hi(); ++m) {
        auto& ss = x.summands(m);
        for (std::size_t s = 0; s < ss.size(); ++s) {
            for (auto& p : hom_basis_all(n, i, ss[s].v)) {
                NewSummand ns;
                ns.src = s;
                ns.src_deg = m;
                ns.path = p;
                if (sign > 0) {
                    ns.deg = m - 1;
                    ns.summand = {i, ss[s].q + p.degree()};
                } else {
                    ns.deg = m + 1;
                    ns.summand = {i, ss[s].q + p.degree() - 2};
                }
                created.push_back(ns);
            }
        }
    }

    int lo = x.lo() + (sign > 0 ? -1 : 0);
    int hi = x.hi() + (sign > 0 ? 0 : 1);
    // layout: per degree, old summands first, then created ones (in creation order)
    std::vector<std::vector<Summand>> degs;
    std::vector<std::vector<std::size_t>> created_at(hi - lo + 1);
    for (int m = lo; m <= hi; ++m) {
        std::vector<Summand> row = x.summands(m);
        std::size_t base = row.size();
        for (std::size_t c = 0; c < created.size(); ++c)
            if (created[c].deg == m) {
                created_at[m - lo].push_back(c);
                row.push_back(created[c].summand);
            }
        (void)base;
        degs.push_back(std::move(row));
    }
    ProjComplex out(n);
    out.set_support(lo, std::move(degs));

    auto created_col = [&](int m, std::size_t c) -> std::size_t {
        // column index of created summand c at its degree
        std::size_t off = x.width(m);
        auto& list = created_at[m - lo];
        for (std::size_t t = 0; t < list.size(); ++t)
            if (list[t] == c) return off + t;
        throw std::logic_error("apply_generator: created summand not found");
    };

    for (int m = lo; m < hi; ++m) {
        ZzMat d = zz_mat(out.width(m), out.width(m + 1));
        // old -> old
        auto& dx = x.diff(m);
        for (std::size_t r = 0; r < x.width(m) && !dx.empty(); ++r)
            for (std::size_t c = 0; c < x.width(m + 1); ++c) d[r][c] = dx[r][c];
        if (sign > 0) {
            // new(p from s@m+1)@m --p--> old s@m+1
            for (auto cidx : created_at[m - lo]) {
                auto& ns = created[cidx];
                d[created_col(m, cidx)][ns.src] = ns.path;
            }
        } else {
            // old s@m --dual(p)--> new(p from s@m)@m+1
            for (auto cidx : created_at[m + 1 - lo]) {
                auto& ns = created[cidx];
                if (ns.src_deg != m) continue;
                d[ns.src][created_col(m + 1, cidx)] = dual_path(ns.path);
            }
        }
        // new -> new, induced by d_X with a sign flip
        for (auto ca : created_at[m - lo]) {
            auto& a = created[ca];
            auto& dsrc = x.diff(a.src_deg);
            if (dsrc.empty()) continue;
            for (auto cb : created_at[m + 1 - lo]) {
                auto& b = created[cb];
                if (b.src_deg != a.src_deg + 1) continue;
                const ZigzagElement& step = dsrc[a.src][b.src];
                if (step.is_zero()) continue;
                // coefficient of the basis path b.path in a.path * step,
                // both living in e_i A e_{v_b}
                ZigzagElement prod = a.path * step;
                if (prod.is_zero()) continue;
                Int c = (b.path.degree() == 2) ? prod.loop() : prod.low();
                if (c != 0)
                    d[created_col(m, ca)][created_col(m + 1, cb)] =
                        ZigzagElement::scaled(ZigzagElement::idem(i), -c);
            }
        }
        out.set_diff(m, std::move(d));
    }
    out.trim();
    return out;
}

ProjComplex apply_generator(int i, int sign, const ProjComplex& x) {
    return reduce(apply_generator_raw(i, sign, x));
}

ProjComplex apply_word(const BraidWord& w, const ProjComplex& x) {
    ProjComplex cur = reduce(x);
    for (auto& l : w.letters) cur = apply_generator(l.gen, l.sign, cur);
    return cur;
}

bool words_act_equally(const BraidWord& w1, const BraidWord& w2,
                       const std::vector<ProjComplex>& tests) {
    for (auto& x : tests) {
        if (!is_isomorphic(apply_word(w1, x), apply_word(w2, x))) return false;
    }
    return true;
}

} // namespace zlkb
