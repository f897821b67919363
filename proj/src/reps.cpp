#include "zlkb/reps.hpp"

#include <stdexcept>

namespace zlkb {

MatQT mat_xy_to_qt(const MatXY& m) {
    MatQT r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = xy_to_qt(m(i, j));
    return r;
}

namespace {

const LaurentXY X = LaurentXY::var1();
const LaurentXY Y = LaurentXY::var2();
LaurentXY xpow(int a) { return LaurentXY::monomial(1, a, 0); }
LaurentQT qt(int texp, int qexp) { return LaurentQT::monomial(1, qexp, texp); }

} // namespace

MatXY lkb_generator(int k, int sign, int n) {
    if (k < 1 || k > n) throw std::out_of_range("lkb_generator: k out of range");
    PairIndex pi{n};
    MatXY m(pi.size(), pi.size());
    const LaurentXY one(1);
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        auto add = [&](int ti, int tj, const LaurentXY& c) { m(pi.idx(ti, tj), col) += c; };
        if (k == i - 1) {
            add(i - 1, j, X);
            add(i, j, one - X);
        } else if (k == i && k < j - 1) {
            add(i + 1, j, one);
            add(k, k + 1, -(X * Y * (X - one)));
        } else if (k == i && k == j - 1) {
            add(k, k + 1, -(X * X * Y));
        } else if (i < k && k < j - 1) {
            add(i, j, one);
            add(k, k + 1, -(Y * (X - one) * (X - one)));
        } else if (i < j - 1 && j - 1 == k) {
            add(i, j - 1, one);
            add(k, k + 1, -(X * Y * (X - one)));
        } else if (k == j) {
            add(i, j + 1, X);
            add(i, j, one - X);
        } else {
            add(i, j, one);
        }
    }
    if (sign < 0) m = m.inverse();
    return m;
}

MatXY lkb_word(const BraidWord& w, int n) {
    PairIndex pi{n};
    MatXY m = MatXY::identity(pi.size());
    for (auto& l : w.letters) m = lkb_generator(l.gen, l.sign, n) * m;
    return m;
}

MatXY gamma_lkb_closed_form(int n) {
    PairIndex pi{n};
    MatXY m(pi.size(), pi.size());
    const LaurentXY one(1);
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        auto add = [&](int ti, int tj, const LaurentXY& c) { m(pi.idx(ti, tj), col) += c; };
        if (i > 1) {
            add(i - 1, j - 1, X);
            continue;
        }
        LaurentXY xm1 = X - one;
        for (int r = 1; r <= j - 2; ++r)
            for (int s = r + 1; s <= n; ++s) add(r, s, xm1 * xm1 * xpow(s - r) * Y);
        for (int r = 1; r <= j - 2; ++r) add(r, n + 1, -(xm1 * xpow(n + 1 - r) * Y));
        add(j - 1, n + 1, -(xpow(n - j + 3) * Y));
        for (int s = j; s <= n; ++s) add(j - 1, s, xpow(s - j + 2) * Y * xm1);
    }
    return m;
}

std::pair<MatXY, MatXY> m_tau0(int n) {
    PairIndex pi{n};
    MatXY m(pi.size(), pi.size()), minv(pi.size(), pi.size());
    const LaurentXY one(1);
    LaurentXY alpha = one - xpow(-1);
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        m(pi.idx(i, j), col) += one;
        for (int s = i + 1; s <= j - 1; ++s) m(pi.idx(i, s), col) += alpha;
        minv(pi.idx(i, j), col) += one;
        for (int s = i + 1; s <= j - 1; ++s)
            minv(pi.idx(i, s), col) -= xpow(s - j) * (X - one);
    }
    return {m, minv};
}

MatXY m_tau_k(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("m_tau_k: k out of range");
    PairIndex pi{n};
    MatXY m(pi.size(), pi.size());
    const LaurentXY one(1);
    LaurentXY alpha = one - xpow(-1);
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        m(pi.idx(i, j), col) += one;
        for (int jp = i + 1; jp <= j - 1; ++jp) {
            if (jp == k + 1) continue;
            m(pi.idx(i, jp), col) += alpha;
        }
        if (k + 1 > i)
            for (int jp = k + 2; jp <= j - 1; ++jp)
                m(pi.idx(k + 1, jp), col) += alpha * alpha;
        if (i < k + 1 && j > k + 1) m(pi.idx(k + 1, j), col) += alpha;
    }
    return m;
}

MatXY mgamma_closed_form(int n) {
    PairIndex pi{n};
    MatXY m(pi.size(), pi.size());
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        if (i != 1)
            m(pi.idx(i - 1, j - 1), col) = X;
        else
            m(pi.idx(j - 1, n + 1), col) = -(xpow(n - j + 3) * Y);
    }
    return m;
}

MatQT homgamma_closed_form(int n) {
    PairIndex pi{n};
    MatQT m(pi.size(), pi.size());
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        if (i != 1)
            m(pi.idx(i - 1, j - 1), col) = qt(1, -1);
        else
            m(pi.idx(j - 1, n + 1), col) = qt(2 - j + n, j - 3 - n);
    }
    return m;
}

PtauResult ptau_matrix(const BraidWord& w, const StableBasis& basis) {
    PtauResult res;
    res.target = transport_basis(basis, w);
    PairIndex pi{basis.n};
    res.matrix = MatQT(pi.size(), pi.size());
    auto family = res.target.complexes();
    for (int col = 0; col < pi.size(); ++col) {
        ProjComplex img = apply_word(w, basis.members[col].cx);
        auto match = identify_in_family(img, family);
        if (!match)
            throw std::runtime_error("ptau_matrix: image of a stable not identified in the "
                                     "transported basis (normalization bug)");
        res.matrix(match->index, col) = qt(match->k, match->l);
    }
    return res;
}

MatQT perm_generator(int k, int sign, int n) {
    if (k < 1 || k > n) throw std::out_of_range("perm_generator: k out of range");
    PairIndex pi{n};
    MatQT inv(pi.size(), pi.size());
    for (int col = 0; col < pi.size(); ++col) {
        auto [i, j] = pi.at(col);
        auto set = [&](int ti, int tj, const LaurentQT& c) { inv(pi.idx(ti, tj), col) = c; };
        if (i == k && j == k + 1)
            set(k, k + 1, qt(1, -2));
        else if (i == k && j > k + 1)
            set(k + 1, j, qt(0, 0));
        else if (i == k + 1)
            set(k, j, qt(1, -1));
        else if (j == k)
            set(i, k + 1, qt(1, -1));
        else if (i < k && j == k + 1)
            set(i, k, qt(0, 0));
        else
            set(i, j, qt(0, 0));
    }
    if (sign < 0) return inv;
    // generalized permutation matrix: invert by transposing with inverted entries
    MatQT pos(pi.size(), pi.size());
    for (int col = 0; col < pi.size(); ++col)
        for (int row = 0; row < pi.size(); ++row)
            if (!inv(row, col).is_zero()) pos(col, row) = inv(row, col).inverse_of_unit();
    return pos;
}

MatQT perm_word(const BraidWord& w, int n) {
    PairIndex pi{n};
    MatQT m = MatQT::identity(pi.size());
    for (auto& l : w.letters) m = perm_generator(l.gen, l.sign, n) * m;
    return m;
}

MatQT burau_matrix(const BraidWord& w, int n) {
    MatQT m(n, n);
    for (int i = 1; i <= n; ++i) {
        ProjComplex img = apply_word(w, ProjComplex::projective(n, i));
        auto cls = classical_class(img);
        for (int r = 0; r < n; ++r) m(r, i - 1) = cls[r];
    }
    return m;
}

MatQT identification_matrix(const BraidWord& u, const StableBasis& tau0) {
    int n = tau0.n;
    MatQT p = ptau_matrix(u, tau0).matrix;
    MatQT m0 = mat_xy_to_qt(m_tau0(n).first);
    MatQT rho_inv = mat_xy_to_qt(lkb_word(u.letters_inverted().inverse(), n));
    return p * m0 * rho_inv;
}

} // namespace zlkb
