#pragma once

// Matrix-level content: the LKB representation, decategorified transport
// matrices P_tau(beta), identification matrices M_{tau_0} / M_{tau_k}, the
// alpha = 0 generalized-permutation representation, and a classical-K0 Burau
// layer.
//
// All matrices are indexed by the pairs 1 <= i < j <= n+1 in lexicographic
// order (PairIndex), except the n x n Burau matrices.

#include "zlkb/laurent.hpp"
#include "zlkb/matrix.hpp"
#include "zlkb/stability.hpp"

#include <utility>

namespace zlkb {

using MatQT = Mat<LaurentQT>;
using MatXY = Mat<LaurentXY>;

MatQT mat_xy_to_qt(const MatXY& m);

// LKB generator matrix of sigma_k (sign +1) or its exact inverse (sign -1)
MatXY lkb_generator(int k, int sign, int n);
// product following the action convention: the first letter acts first
MatXY lkb_word(const BraidWord& w, int n);

// closed form of sigma_n ... sigma_1 acting on the e_{i,j}
MatXY gamma_lkb_closed_form(int n);

// identification matrix at tau_0 and its closed-form inverse
std::pair<MatXY, MatXY> m_tau0(int n);
// alpha-expansion identification matrix at tau_k (k = 0 agrees with m_tau0)
MatXY m_tau_k(int n, int k);

// closed form of M gamma~^{-1} M^{-1} (two cases, over x,y)
MatXY mgamma_closed_form(int n);
// closed form of P_{tau_0}(sigma_n^{-1}...sigma_1^{-1}) (two cases, over q,t)
MatQT homgamma_closed_form(int n);

struct PtauResult {
    MatQT matrix;
    StableBasis target;
};
// decategorified transport matrix: column (i,j) holds t^k q^l at the row of
// the target-basis stable identified with w . S_{i,j}
PtauResult ptau_matrix(const BraidWord& w, const StableBasis& basis);

// alpha = 0 specialization: generalized permutation matrices over q,t
MatQT perm_generator(int k, int sign, int n);
MatQT perm_word(const BraidWord& w, int n);

// classical-K0 decategorification of the word action (n x n, q only)
MatQT burau_matrix(const BraidWord& w, int n);

// identification matrix of the class reached by the defining word u from
// tau_0: M_u = P_{tau_0}(u) . M_{tau_0} . rho(u~)^{-1}, over q,t
MatQT identification_matrix(const BraidWord& u, const StableBasis& tau0);

} // namespace zlkb
