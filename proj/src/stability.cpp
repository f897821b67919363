#include "zlkb/stability.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace zlkb {

std::vector<ProjComplex> StableBasis::complexes() const {
    std::vector<ProjComplex> out;
    for (auto& m : members) out.push_back(m.cx);
    return out;
}

ProjComplex tau_k_stable(int n, int k, int i, int j) {
    if (k < 0 || k > n) throw std::out_of_range("tau_k_stable: k out of range");
    if (i < 1 || j <= i || j > n + 1) throw std::out_of_range("tau_k_stable: bad pair");
    // vertices i..j-1; arrows follow the orientation
    //   1 -> 2 -> ... -> k <- k+1 -> k+2 -> ... -> n
    // homological degrees h(m), quantum degrees -h(m):
    //   linear cases anchored with rightmost term at (0,0);
    //   both branches (i <= k < j-1): sink P_k anchored so that the visually
    //   rightmost term sits at (0,0) (P_k when j = k+2, else P_{j-1}{-1}<1>)
    auto h = [&](int m) -> int {
        if (j <= k + 1 || i >= k + 1) return m - (j - 1);
        if (j == k + 2) return m <= k ? m - k : -1;
        return m <= k ? m + 2 - j : m - j;
    };
    ProjComplex x(n);
    int lo_h = h(i), hi_h = h(i);
    for (int m = i; m <= j - 1; ++m) {
        lo_h = std::min(lo_h, h(m));
        hi_h = std::max(hi_h, h(m));
    }
    std::vector<std::vector<Summand>> degs(hi_h - lo_h + 1);
    std::vector<std::vector<int>> verts(hi_h - lo_h + 1); // vertex per slot
    for (int m = i; m <= j - 1; ++m) {
        degs[h(m) - lo_h].push_back({m, -h(m)});
        verts[h(m) - lo_h].push_back(m);
    }
    x.set_support(lo_h, std::move(degs));
    auto slot = [&](int m) {
        auto& vs = verts[h(m) - lo_h];
        return std::size_t(std::find(vs.begin(), vs.end(), m) - vs.begin());
    };
    auto add_arrow = [&](int a, int b) { // oriented edge a -> b within support
        if (a < i || a > j - 1 || b < i || b > j - 1) return;
        x.diff_mut(h(a))[slot(a)][slot(b)] = ZigzagElement::arrow(a, b);
    };
    for (int m = 1; m < n + 1; ++m) {
        if (m + 1 > n) break;
        // edge between m and m+1
        if (m + 1 <= k)
            add_arrow(m, m + 1);
        else if (m == k)
            add_arrow(k + 1, k);
        else
            add_arrow(m, m + 1);
    }
    x.trim();
    return x;
}

TwistTableEntry twist_chain_table(int n, int k, int i, int j) {
    (void)n;
    if (i == 1 && k < j - 1) return {k + 1, j, 0, 0};
    if (i == 1 && k == j - 1) return {k, k + 1, 1, -2};
    if (i == 1 && k >= j) return {j - 1, k + 1, k - j + 2, j - k - 3};
    if (1 < i && i <= k && j <= k + 1) return {i - 1, j - 1, 1, -1};
    if (1 < i && i <= k && j >= k + 2) return {i - 1, j, 1, -1};
    if (i == k + 1) return {i - 1, j, 1, -1};
    return {i, j, 0, 0}; // i > k+1
}

StableBasis basis_tau_0(int n, const ChargeParams& charge) {
    charge.validate();
    StableBasis b;
    b.n = n;
    b.tau_k = 0;
    PairIndex pi{n};
    for (int a = 0; a < pi.size(); ++a) {
        auto [i, j] = pi.at(a);
        StableMember m;
        m.cx = tau_k_stable(n, 0, i, j);
        m.phase = {charge.root_charge(i, j), 0};
        b.members.push_back(std::move(m));
    }
    return b;
}

StableBasis basis_tau_k(int n, int k, const ChargeParams& charge) {
    StableBasis b0 = basis_tau_0(n, charge);
    if (k == 0) return b0;
    StableBasis b;
    b.n = n;
    b.tau_k = k;
    PairIndex pi{n};
    b.members.resize(pi.size());
    BraidWord w;
    for (int m = 1; m <= k; ++m) w.letters.push_back({m, -1});
    b.defining = w;
    for (int a = 0; a < pi.size(); ++a) {
        auto [i, j] = pi.at(a);
        TwistTableEntry t = twist_chain_table(n, k, i, j);
        int target = pi.idx(t.ti, t.tj);
        StableMember mem;
        mem.cx = tau_k_stable(n, k, t.ti, t.tj);
        mem.phase = {b0.members[a].phase.z, b0.members[a].phase.off - t.k};
        b.members[target] = std::move(mem);
    }
    return b;
}

namespace {

ProjComplex normalize_top(const ProjComplex& x, int& k_out, int& l_out) {
    if (x.empty()) throw std::invalid_argument("normalize_top: zero object");
    int k = x.hi();
    int l = x.summands(k).front().q;
    for (auto& s : x.summands(k)) l = std::max(l, s.q);
    k_out = k;
    l_out = l;
    return x.shifted(-k, -l);
}

} // namespace

StableBasis transport_basis(const StableBasis& b, const BraidWord& w) {
    StableBasis out;
    out.n = b.n;
    out.defining = concat(b.defining, w);
    PairIndex pi{b.n};
    std::vector<ProjComplex> images;
    for (auto& m : b.members) images.push_back(apply_word(w, m.cx));

    // recognize a tau_k class
    for (int k = 0; k <= b.n; ++k) {
        std::vector<ProjComplex> family;
        for (int a = 0; a < pi.size(); ++a) {
            auto [i, j] = pi.at(a);
            family.push_back(tau_k_stable(b.n, k, i, j));
        }
        std::vector<StableMember> members(pi.size());
        std::vector<bool> taken(pi.size(), false);
        bool ok = true;
        for (int a = 0; a < pi.size() && ok; ++a) {
            auto match = identify_in_family(images[a], family);
            if (!match || taken[match->index]) {
                ok = false;
                break;
            }
            taken[match->index] = true;
            members[match->index] = {family[match->index],
                                     {b.members[a].phase.z, b.members[a].phase.off - match->k}};
        }
        if (ok) {
            out.tau_k = (k == b.n) ? 0 : k;
            out.members = std::move(members);
            return out;
        }
    }

    // generic class: normalize members to top bidegree (0,0) and index by a
    // canonical sort of their serializations
    std::vector<std::pair<std::string, StableMember>> keyed;
    for (int a = 0; a < pi.size(); ++a) {
        int k0, l0;
        ProjComplex norm = normalize_top(images[a], k0, l0);
        StableMember m{norm, {b.members[a].phase.z, b.members[a].phase.off - k0}};
        keyed.push_back({norm.key(), std::move(m)});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [key, m] : keyed) out.members.push_back(std::move(m));
    out.tau_k = -1;
    return out;
}

namespace {

struct Candidate {
    Phase phase;
    int root;
    int k;
};

} // namespace

HNResult hn(const ProjComplex& x0, const StableBasis& basis) {
    HNResult res;
    ProjComplex x = reduce(x0);
    std::size_t cap = x.summand_count();
    std::size_t steps = 0;
    while (!x.empty()) {
        if (steps++ > cap)
            throw std::runtime_error("hn: extraction did not terminate within the summand bound");
        std::vector<Candidate> cands;
        for (int r = 0; r < int(basis.members.size()); ++r) {
            const ProjComplex& s = basis.members[r].cx;
            for (int k = x.lo() - s.hi(); k <= x.hi() - s.lo(); ++k) {
                cands.push_back({{basis.members[r].phase.z, basis.members[r].phase.off + k},
                                 r, k});
            }
        }
        std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
            if (phase_less(a.phase, b.phase)) return false;
            if (phase_less(b.phase, a.phase)) return true;
            return std::tie(a.root, a.k) < std::tie(b.root, b.k);
        });
        bool extracted = false;
        for (auto& c : cands) {
            const ProjComplex& s = basis.members[c.root].cx;
            for (int l : hom_l_candidates(s, x, c.k)) {
                ProjComplex ss = s.shifted(c.k, l);
                HomSpace h = hom(ss, x, 0, 0);
                if (h.dim == 0) continue;
                x = reduce(cone(h.basis[0]).cone);
                res.pieces.push_back({c.root, c.k, l});
                extracted = true;
                break;
            }
            if (extracted) break;
        }
        if (!extracted)
            throw std::runtime_error("hn: no stable admits a nonzero map; object outside the "
                                     "algorithm's validity");
    }
    return res;
}

MassVector mass_of(const HNResult& r, int nroots) {
    MassVector m;
    m.aggregated.assign(nroots, Int(0));
    for (auto& p : r.pieces) {
        m.refined[{p.root, p.k, p.l}] += 1;
        m.aggregated[p.root] += 1;
    }
    return m;
}

MassVector mass(const ProjComplex& x, const StableBasis& basis) {
    return mass_of(hn(x, basis), int(basis.members.size()));
}

std::vector<LaurentQT> k0_class(const HNResult& r, int nroots) {
    std::vector<LaurentQT> v(nroots);
    for (auto& p : r.pieces) v[p.root] += LaurentQT::monomial(1, p.l, p.k);
    return v;
}

std::vector<LaurentQT> k0_class(const ProjComplex& x, const StableBasis& basis) {
    return k0_class(hn(x, basis), int(basis.members.size()));
}

std::vector<LaurentQT> k0_split_class(const std::vector<HNPiece>& pieces, int nroots) {
    std::vector<LaurentQT> v(nroots);
    for (auto& p : pieces) v[p.root] += LaurentQT::monomial(1, p.l, p.k);
    return v;
}

std::vector<LaurentQT> classical_class(const ProjComplex& x) {
    std::vector<LaurentQT> v(x.n());
    for (int m = x.lo(); m <= x.hi(); ++m)
        for (auto& s : x.summands(m))
            v[s.v - 1] += LaurentQT::monomial((m % 2 == 0) ? 1 : -1, s.q, 0);
    return v;
}

std::vector<LaurentQT> classical_class(const HNResult& r, const StableBasis& basis) {
    std::vector<LaurentQT> v(basis.n);
    for (auto& p : r.pieces) {
        auto base = classical_class(basis.members[p.root].cx);
        LaurentQT mono = LaurentQT::monomial((p.k % 2 == 0) ? 1 : -1, p.l, 0);
        for (int i = 0; i < basis.n; ++i) v[i] += mono * base[i];
    }
    return v;
}

bool thin_check(const ChainMap& f, const StableBasis& basis) {
    ProjComplex a = reduce(f.src());
    ProjComplex b = reduce(f.dst());
    ProjComplex c = reduce(cone(f).cone);
    MassVector ma = mass(a, basis), mb = mass(b, basis), mc = mass(c, basis);
    for (std::size_t r = 0; r < mb.aggregated.size(); ++r)
        if (mb.aggregated[r] != ma.aggregated[r] + mc.aggregated[r]) return false;
    return true;
}

PsiReport psi_additivity(const ProjComplex& a, const ProjComplex& b, const ProjComplex& c,
                         const StableBasis& basis) {
    MassVector ma = mass(a, basis), mb = mass(b, basis), mc = mass(c, basis);
    PsiReport rep;
    std::map<std::tuple<int, int, int>, Int> sum = ma.refined;
    for (auto& [key, v] : mc.refined) sum[key] += v;
    for (auto it = sum.begin(); it != sum.end();) {
        if (it->second == 0) it = sum.erase(it);
        else ++it;
    }
    rep.refined_ok = (sum == mb.refined);
    for (std::size_t r = 0; r < mb.aggregated.size(); ++r)
        if (mb.aggregated[r] != ma.aggregated[r] + mc.aggregated[r]) rep.aggregated_ok = false;
    return rep;
}

namespace {

void peel_all(const ProjComplex& x, const StableBasis& basis, std::size_t cap,
              std::vector<HNPiece>& stack, std::vector<MassVector>& results) {
    if (x.empty()) {
        HNResult r;
        r.pieces = stack;
        MassVector m = mass_of(r, int(basis.members.size()));
        for (auto& known : results)
            if (known == m) return;
        results.push_back(std::move(m));
        return;
    }
    if (stack.size() > cap)
        throw std::runtime_error("hn oracle: peeling exceeded the summand bound");
    // find the maximal phase admitting a nonzero map, then branch over every
    // choice at that phase: all quantum shifts and all basis maps
    std::vector<Candidate> cands;
    for (int r = 0; r < int(basis.members.size()); ++r) {
        const ProjComplex& s = basis.members[r].cx;
        for (int k = x.lo() - s.hi(); k <= x.hi() - s.lo(); ++k)
            cands.push_back({{basis.members[r].phase.z, basis.members[r].phase.off + k}, r, k});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (phase_less(a.phase, b.phase)) return false;
        if (phase_less(b.phase, a.phase)) return true;
        return std::tie(a.root, a.k) < std::tie(b.root, b.k);
    });
    for (auto& c : cands) {
        const ProjComplex& s = basis.members[c.root].cx;
        bool any = false;
        for (int l : hom_l_candidates(s, x, c.k)) {
            ProjComplex ss = s.shifted(c.k, l);
            HomSpace h = hom(ss, x, 0, 0);
            for (auto& f : h.basis) {
                any = true;
                stack.push_back({c.root, c.k, l});
                peel_all(reduce(cone(f).cone), basis, cap, stack, results);
                stack.pop_back();
            }
        }
        if (any) return; // only the maximal phase with nonzero maps is legal
    }
    throw std::runtime_error("hn oracle: stuck with no admissible peel");
}

} // namespace

std::vector<MassVector> hn_all_peelings(const ProjComplex& x, const StableBasis& basis,
                                        std::size_t cap) {
    std::vector<MassVector> results;
    std::vector<HNPiece> stack;
    peel_all(reduce(x), basis, cap, stack, results);
    return results;
}

} // namespace zlkb
