#include "zlkb/homotopy.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace zlkb {

namespace {

// coefficient of the basis path r inside the element z
Int coeff_on(const ZigzagElement& z, const ZigzagElement& r) {
    if (z.is_zero()) return 0;
    if (z.src() != r.src() || z.dst() != r.dst()) return 0;
    return r.degree() == 2 ? z.loop() : z.low();
}

struct Pivot {
    int m;
    std::size_t i, j;
};

std::optional<Pivot> find_pivot(const ProjComplex& x) {
    for (int m = x.lo(); m < x.hi(); ++m) {
        auto& d = x.diff(m);
        auto& src = x.summands(m);
        auto& dst = x.summands(m + 1);
        for (std::size_t i = 0; i < src.size(); ++i)
            for (std::size_t j = 0; j < dst.size(); ++j) {
                const ZigzagElement& e = d[i][j];
                if (e.is_zero() || !e.diagonal()) continue;
                if (src[i].q != dst[j].q) continue;
                if (e.low() == 1 || e.low() == -1) return Pivot{m, i, j};
                if (e.low() != 0)
                    throw std::logic_error("reduce: degree-0 pivot with non-unit coefficient");
            }
    }
    return std::nullopt;
}

// inverse of a = c e + b l with c = +-1: c e - b l
ZigzagElement unit_inverse(const ZigzagElement& e) {
    ZigzagElement inv = ZigzagElement::scaled(ZigzagElement::idem(e.src()), e.low());
    if (e.loop() != 0)
        inv = inv - ZigzagElement::scaled(ZigzagElement::loop(e.src()), e.loop());
    return inv;
}

ProjComplex drop_summands(const ProjComplex& x, int m, std::size_t i, std::size_t j,
                          const ZzMat& corrected) {
    ProjComplex r(x.n());
    std::vector<std::vector<Summand>> degs;
    for (int d = x.lo(); d <= x.hi(); ++d) {
        std::vector<Summand> s = x.summands(d);
        if (d == m) s.erase(s.begin() + i);
        if (d == m + 1) s.erase(s.begin() + j);
        degs.push_back(std::move(s));
    }
    r.set_support(x.lo(), std::move(degs));
    for (int d = x.lo(); d < x.hi(); ++d) {
        if (r.width(d) == 0 || r.width(d + 1) == 0) continue;
        ZzMat blk = zz_mat(r.width(d), r.width(d + 1));
        auto pick_row = [&](int deg, std::size_t rr) {
            if (deg == m && rr >= i) return rr + 1;
            if (deg == m + 1 && rr >= j) return rr + 1;
            return rr;
        };
        const ZzMat& srcm = (d == m) ? corrected : x.diff(d);
        for (std::size_t rr = 0; rr < r.width(d); ++rr)
            for (std::size_t cc = 0; cc < r.width(d + 1); ++cc)
                blk[rr][cc] = srcm[pick_row(d, rr)][pick_row(d + 1, cc)];
        r.set_diff(d, std::move(blk));
    }
    r.trim();
    return r;
}

} // namespace

ProjComplex reduce(const ProjComplex& x) {
    ProjComplex cur = x;
    cur.trim();
    while (auto p = find_pivot(cur)) {
        const auto [m, i, j] = *p;
        const ZzMat& d = cur.diff(m);
        ZigzagElement phi_inv = unit_inverse(d[i][j]);
        ZzMat corrected = d;
        for (std::size_t r = 0; r < d.size(); ++r) {
            if (r == i || d[r][j].is_zero()) continue;
            ZigzagElement lead = d[r][j] * phi_inv;
            for (std::size_t c = 0; c < d[r].size(); ++c) {
                if (c == j || d[i][c].is_zero()) continue;
                corrected[r][c] = corrected[r][c] - lead * d[i][c];
            }
        }
        cur = drop_summands(cur, m, i, j, corrected);
    }
    return cur;
}

Reduction reduce_with_maps(const ProjComplex& x) {
    Reduction red;
    ProjComplex cur = x;
    cur.trim();
    ChainMap pi = ChainMap::identity(cur);   // x -> cur
    ChainMap iota = ChainMap::identity(cur); // cur -> x
    while (auto p = find_pivot(cur)) {
        const auto [m, i, j] = *p;
        const ZzMat& d = cur.diff(m);
        ZigzagElement phi_inv = unit_inverse(d[i][j]);
        ZzMat corrected = d;
        for (std::size_t r = 0; r < d.size(); ++r) {
            if (r == i || d[r][j].is_zero()) continue;
            ZigzagElement lead = d[r][j] * phi_inv;
            for (std::size_t c = 0; c < d[r].size(); ++c) {
                if (c == j || d[i][c].is_zero()) continue;
                corrected[r][c] = corrected[r][c] - lead * d[i][c];
            }
        }
        ProjComplex next = drop_summands(cur, m, i, j, corrected);

        // step projection cur -> next: kill S = (m,i); T-row corrections
        ChainMap pstep(cur, next);
        for (int deg = next.lo(); deg <= next.hi(); ++deg) {
            auto& b = pstep.block_mut(deg);
            std::size_t col = 0;
            for (std::size_t row = 0; row < cur.width(deg); ++row) {
                if (deg == m && row == i) continue;
                if (deg == m + 1 && row == j) {
                    continue; // T row filled below
                }
                b[row][col] = ZigzagElement::idem(cur.summands(deg)[row].v);
                ++col;
            }
        }
        if (next.width(m + 1) > 0) {
            auto& b = pstep.block_mut(m + 1);
            std::size_t col = 0;
            for (std::size_t c = 0; c < cur.width(m + 1); ++c) {
                if (c == j) continue;
                // component T -> B_c is -phi^{-1} d_{S -> B_c}
                if (!d[i][c].is_zero()) b[j][col] = -(phi_inv * d[i][c]);
                ++col;
            }
        }
        // step inclusion next -> cur: identity plus A -> S corrections
        ChainMap istep(next, cur);
        for (int deg = next.lo(); deg <= next.hi(); ++deg) {
            auto& b = istep.block_mut(deg);
            std::size_t row = 0;
            for (std::size_t r = 0; r < cur.width(deg); ++r) {
                if (deg == m && r == i) continue;
                if (deg == m + 1 && r == j) continue;
                b[row][r] = ZigzagElement::idem(cur.summands(deg)[r].v);
                ++row;
            }
        }
        if (next.width(m) > 0) {
            auto& b = istep.block_mut(m);
            std::size_t row = 0;
            for (std::size_t r = 0; r < cur.width(m); ++r) {
                if (r == i) continue;
                if (!d[r][j].is_zero()) b[row][i] = -(d[r][j] * phi_inv);
                ++row;
            }
        }
        pi = compose(pi, pstep);
        iota = compose(istep, iota);
        cur = next;
    }
    red.r = cur;
    red.to_reduced = pi;
    red.from_reduced = iota;
    return red;
}

namespace {

struct Slot {
    int m;
    std::size_t i, j;
    ZigzagElement path;
};

// variable slots of graded maps X.deg(m) -> Y.deg(m + off) in quantum degree 0
std::vector<Slot> map_slots(const ProjComplex& x, const ProjComplex& y, int off) {
    std::vector<Slot> slots;
    for (int m = x.lo(); m <= x.hi(); ++m) {
        auto& xs = x.summands(m);
        auto& ys = y.summands(m + off);
        for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = 0; j < ys.size(); ++j) {
                int d = xs[i].q - ys[j].q;
                if (d < 0 || d > 2) continue;
                for (auto& p : hom_basis(x.n(), xs[i].v, ys[j].v, d))
                    slots.push_back({m, i, j, p});
            }
    }
    return slots;
}

struct EqIndex {
    std::map<std::tuple<int, std::size_t, std::size_t, int>, std::size_t> rows;
    std::size_t count = 0;
    std::size_t row(int m, std::size_t i, std::size_t j, int pathdeg) {
        auto key = std::make_tuple(m, i, j, pathdeg);
        auto it = rows.find(key);
        if (it != rows.end()) return it->second;
        rows.emplace(key, count);
        return count++;
    }
};

} // namespace

std::vector<int> hom_l_candidates(const ProjComplex& s, const ProjComplex& x, int k) {
    std::set<int> ls;
    for (int m = s.lo() + k; m <= s.hi() + k; ++m) {
        for (auto& a : s.summands(m - k))
            for (auto& b : x.summands(m)) {
                for (int d = 0; d <= 2; ++d)
                    if (!hom_basis(x.n(), a.v, b.v, d).empty()) ls.insert(b.q - a.q + d);
            }
    }
    return {ls.begin(), ls.end()};
}

HomSpace hom(const ProjComplex& x, const ProjComplex& y, int k, int l) {
    HomSpace out;
    if (x.empty() || y.empty()) return out;
    ProjComplex ys = y.shifted(k, l);

    std::vector<Slot> fslots = map_slots(x, ys, 0);
    if (fslots.empty()) return out;
    std::map<std::string, std::size_t> fslot_index;

    // chain condition rows: for each (m, i, j') target slot and path degree,
    // coeff of [F d_Y - d_X F] vanishes
    EqIndex eqs;
    std::vector<std::map<std::size_t, Rat>> cols(fslots.size());
    for (std::size_t v = 0; v < fslots.size(); ++v) {
        auto& s = fslots[v];
        // F[i][j] d_Y[j][j']
        auto& dy = ys.diff(s.m);
        for (std::size_t j2 = 0; j2 < ys.width(s.m + 1); ++j2) {
            if (dy.empty() || dy[s.j][j2].is_zero()) continue;
            ZigzagElement prod = s.path * dy[s.j][j2];
            if (prod.is_zero()) continue;
            for (auto& r : hom_basis_all(x.n(), prod.src(), prod.dst())) {
                Int c = coeff_on(prod, r);
                if (c != 0) cols[v][eqs.row(s.m, s.i, j2, r.degree())] += Rat(c);
            }
        }
        // - d_X[i'][i] F[i][j]   (variable at degree m contributes to rows at m-1)
        auto& dx = x.diff(s.m - 1);
        for (std::size_t i0 = 0; i0 < x.width(s.m - 1); ++i0) {
            if (dx.empty() || dx[i0][s.i].is_zero()) continue;
            ZigzagElement prod = dx[i0][s.i] * s.path;
            if (prod.is_zero()) continue;
            for (auto& r : hom_basis_all(x.n(), prod.src(), prod.dst())) {
                Int c = coeff_on(prod, r);
                if (c != 0) cols[v][eqs.row(s.m - 1, i0, s.j, r.degree())] -= Rat(c);
            }
        }
    }
    std::vector<QVecRow> equations(eqs.count, QVecRow(fslots.size(), Rat(0)));
    for (std::size_t v = 0; v < fslots.size(); ++v)
        for (auto& [r, c] : cols[v]) equations[r][v] = c;
    std::vector<QVecRow> kernel = kernel_basis(equations, fslots.size());
    if (kernel.empty()) return out;

    // null-homotopies: image of h -> d_X h + h d_Y
    std::vector<Slot> hslots = map_slots(x, ys, -1);
    Span image(fslots.size());
    auto fslot_pos = [&](int m, std::size_t i, std::size_t j,
                         const ZigzagElement& p) -> std::optional<std::size_t> {
        for (std::size_t v = 0; v < fslots.size(); ++v)
            if (fslots[v].m == m && fslots[v].i == i && fslots[v].j == j &&
                fslots[v].path.degree() == p.degree())
                return v;
        return std::nullopt;
    };
    for (auto& h : hslots) {
        QVecRow vec(fslots.size(), Rat(0));
        // (h d_Y)[i][j''] at degree m
        auto& dy = ys.diff(h.m - 1);
        for (std::size_t j2 = 0; j2 < ys.width(h.m); ++j2) {
            if (dy.empty() || dy[h.j][j2].is_zero()) continue;
            ZigzagElement prod = h.path * dy[h.j][j2];
            if (prod.is_zero()) continue;
            for (auto& r : hom_basis_all(x.n(), prod.src(), prod.dst())) {
                Int c = coeff_on(prod, r);
                if (c == 0) continue;
                if (auto v = fslot_pos(h.m, h.i, j2, r)) vec[*v] += Rat(c);
            }
        }
        // (d_X h)[i''][j] at degree m-1
        auto& dx = x.diff(h.m - 1);
        for (std::size_t i0 = 0; i0 < x.width(h.m - 1); ++i0) {
            if (dx.empty() || dx[i0][h.i].is_zero()) continue;
            ZigzagElement prod = dx[i0][h.i] * h.path;
            if (prod.is_zero()) continue;
            for (auto& r : hom_basis_all(x.n(), prod.src(), prod.dst())) {
                Int c = coeff_on(prod, r);
                if (c == 0) continue;
                if (auto v = fslot_pos(h.m - 1, i0, h.j, r)) vec[*v] += Rat(c);
            }
        }
        image.add(std::move(vec));
    }

    // quotient ker / im
    Span reps(fslots.size());
    std::vector<QVecRow> rep_vecs;
    for (auto& kv : kernel) {
        QVecRow res = image.residue(kv);
        if (reps.add(res)) rep_vecs.push_back(image.residue(kv));
    }
    out.dim = int(rep_vecs.size());
    for (auto& v : rep_vecs) {
        ChainMap f(x, ys);
        // clear denominators for an integral representative
        Int lcm = 1;
        for (auto& c : v)
            if (c != 0) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
        for (std::size_t s = 0; s < fslots.size(); ++s) {
            if (v[s] == 0) continue;
            Rat scaled = v[s] * Rat(lcm);
            Int c = boost::multiprecision::numerator(scaled);
            auto& blk = f.block_mut(fslots[s].m);
            blk[fslots[s].i][fslots[s].j] =
                blk[fslots[s].i][fslots[s].j] + ZigzagElement::scaled(fslots[s].path, c);
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

int hom_dim(const ProjComplex& x, const ProjComplex& y, int k, int l) {
    return hom(x, y, k, l).dim;
}

namespace {

// all degree-(0,0) chain maps X -> Y (not modulo homotopy), as slot vectors
std::pair<std::vector<Slot>, std::vector<QVecRow>> chain_map_space(const ProjComplex& x,
                                                                   const ProjComplex& y) {
    std::vector<Slot> fslots = map_slots(x, y, 0);
    EqIndex eqs;
    std::vector<std::map<std::size_t, Rat>> cols(fslots.size());
    for (std::size_t v = 0; v < fslots.size(); ++v) {
        auto& s = fslots[v];
        auto& dy = y.diff(s.m);
        for (std::size_t j2 = 0; j2 < y.width(s.m + 1); ++j2) {
            if (dy.empty() || dy[s.j][j2].is_zero()) continue;
            ZigzagElement prod = s.path * dy[s.j][j2];
            if (prod.is_zero()) continue;
            for (auto& r : hom_basis_all(x.n(), prod.src(), prod.dst())) {
                Int c = coeff_on(prod, r);
                if (c != 0) cols[v][eqs.row(s.m, s.i, j2, r.degree())] += Rat(c);
            }
        }
        auto& dx = x.diff(s.m - 1);
        for (std::size_t i0 = 0; i0 < x.width(s.m - 1); ++i0) {
            if (dx.empty() || dx[i0][s.i].is_zero()) continue;
            ZigzagElement prod = dx[i0][s.i] * s.path;
            if (prod.is_zero()) continue;
            for (auto& r : hom_basis_all(x.n(), prod.src(), prod.dst())) {
                Int c = coeff_on(prod, r);
                if (c != 0) cols[v][eqs.row(s.m - 1, i0, s.j, r.degree())] -= Rat(c);
            }
        }
    }
    std::vector<QVecRow> equations(eqs.count, QVecRow(fslots.size(), Rat(0)));
    for (std::size_t v = 0; v < fslots.size(); ++v)
        for (auto& [r, c] : cols[v]) equations[r][v] = c;
    return {std::move(fslots), kernel_basis(equations, fslots.size())};
}

// blocks of the degree-0 "scalar part" sigma(F), grouped by (m, vertex, q).
// Entries of strictly positive path degree are nilpotent (the algebra lives
// in degrees 0..2), so F is invertible iff all these blocks are.
bool sigma_invertible(const ProjComplex& x, const ProjComplex& y,
                      const std::vector<Slot>& slots, const QVecRow& coeffs) {
    std::map<std::array<int, 3>, std::vector<std::size_t>> xg, yg; // (m,v,q) -> indices
    for (int m = x.lo(); m <= x.hi(); ++m) {
        auto& s = x.summands(m);
        for (std::size_t i = 0; i < s.size(); ++i) xg[{m, s[i].v, s[i].q}].push_back(i);
    }
    for (int m = y.lo(); m <= y.hi(); ++m) {
        auto& s = y.summands(m);
        for (std::size_t i = 0; i < s.size(); ++i) yg[{m, s[i].v, s[i].q}].push_back(i);
    }
    if (xg.size() != yg.size()) return false;
    for (auto& [key, xi] : xg) {
        auto it = yg.find(key);
        if (it == yg.end() || it->second.size() != xi.size()) return false;
        auto& yi = it->second;
        std::size_t b = xi.size();
        std::vector<QVecRow> blk(b, QVecRow(b, Rat(0)));
        for (std::size_t v = 0; v < slots.size(); ++v) {
            if (coeffs[v] == 0 || slots[v].m != key[0] || slots[v].path.degree() != 0) continue;
            for (std::size_t a = 0; a < b; ++a)
                for (std::size_t c = 0; c < b; ++c)
                    if (slots[v].i == xi[a] && slots[v].j == yi[c]) blk[a][c] += coeffs[v];
        }
        if (rank(blk) != b) return false;
    }
    return true;
}

} // namespace

std::optional<ChainMap> find_isomorphism(const ProjComplex& x, const ProjComplex& y,
                                         std::uint64_t seed) {
    if (x.empty() && y.empty()) return ChainMap(x, y);
    if (x.n() != y.n()) return std::nullopt;
    if (x.summand_triples() != y.summand_triples()) return std::nullopt;
    auto [slots, basis] = chain_map_space(x, y);
    if (basis.empty()) return std::nullopt;
    auto build = [&](const QVecRow& v) {
        ChainMap f(x, y);
        Int lcm = 1;
        for (auto& c : v)
            if (c != 0) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c));
        for (std::size_t s = 0; s < slots.size(); ++s) {
            if (v[s] == 0) continue;
            Int c = boost::multiprecision::numerator(v[s] * Rat(lcm));
            auto& blk = f.block_mut(slots[s].m);
            blk[slots[s].i][slots[s].j] =
                blk[slots[s].i][slots[s].j] + ZigzagElement::scaled(slots[s].path, c);
        }
        return f;
    };
    // deterministic attempts: each basis vector, the all-ones combination,
    // then seeded random combinations with growing coefficients
    for (auto& v : basis)
        if (sigma_invertible(x, y, slots, v)) return build(v);
    QVecRow ones(slots.size(), Rat(0));
    for (auto& v : basis)
        for (std::size_t s = 0; s < slots.size(); ++s) ones[s] += v[s];
    if (sigma_invertible(x, y, slots, ones)) return build(ones);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        long range = 3 + attempt;
        std::uniform_int_distribution<long> coeff(-range, range);
        QVecRow v(slots.size(), Rat(0));
        for (auto& b : basis) {
            long c = coeff(rng);
            if (c == 0) continue;
            for (std::size_t s = 0; s < slots.size(); ++s) v[s] += Rat(c) * b[s];
        }
        if (sigma_invertible(x, y, slots, v)) return build(v);
    }
    return std::nullopt;
}

bool is_isomorphic(const ProjComplex& x, const ProjComplex& y) {
    return find_isomorphism(x, y).has_value();
}

std::optional<StableMatch> identify_in_family(const ProjComplex& x,
                                              const std::vector<ProjComplex>& family) {
    if (x.empty()) return std::nullopt;
    auto xt = x.summand_triples();
    for (std::size_t idx = 0; idx < family.size(); ++idx) {
        const ProjComplex& s = family[idx];
        if (s.empty() || s.summand_count() != x.summand_count()) continue;
        int k = x.hi() - s.hi();
        auto st = s.summand_triples();
        // shifting by constants preserves the lex order of the triples, so the
        // sorted minima must correspond; that pins the quantum shift
        if (st[0][0] + k != xt[0][0] || st[0][1] != xt[0][1]) continue;
        int l = xt[0][2] - st[0][2];
        auto shifted = st;
        for (auto& t : shifted) {
            t[0] += k;
            t[2] += l;
        }
        if (shifted != xt) continue;
        if (is_isomorphic(x, s.shifted(k, l))) return StableMatch{int(idx), k, l};
    }
    return std::nullopt;
}

} // namespace zlkb
