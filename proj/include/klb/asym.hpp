#pragma once

#include "klb/engine.hpp"
#include "klb/report.hpp"

namespace klb {

// P_l = (T_{t_1} + V^{-1}) ... (T_{t_l} + V^{-1})
HeckeElem<GammaExp> p_l(const Engine& E, int l);
// the same element as the expanded sum over subsets of {t_1..t_l}
HeckeElem<GammaExp> p_l_expanded(const Engine& E, int l);

// closed form of tau(Gamma_z): zero unless a_z = b_z, and then
// V^{-l} tau(T_{sigma_l}^{-1} C_{sigma_z})
BiLaurent tau_gamma_closed(const Engine& E, ElemId z);

// --- named exhaustive verifications ---------------------------------------

// bar-invariance, strict negativity, normalization of p_{y,w}, Bruhat
// support, and bit-identical rebuild under a permuted processing order
CheckReport check_kl_basis(const Engine& E);
// deg h_{x,y,z} <= min(L(x), L(y)) over all triples
CheckReport check_borne_degre(const Engine& E);
// the lt-layers are H(S_n)-bimodules, the projections commute with the
// two-sided H(S_n)-action, T_{<=l} = C_{<=l}, and C_{>=l} is an ideal
CheckReport check_ideaux(const Engine& E);
// membership in C_n is detected by (T_t - V) x h = 0 over x in H(S_n)
CheckReport check_caracterisation(const Engine& E);
// C_{a_l} = P_l T_{sigma_l}^{-1} = T_{sigma_l}^{-1} P_l, the product rules
// C_{a_l} C_sigma = C_{a_l sigma} and C_sigma C_{a_l} = C_{sigma a_l},
// Pi_0^T(C_{a_l sigma}) = V^{-l} T_{sigma_l}^{-1} C_sigma, P_n central
CheckReport check_cal_identities(const Engine& E);
// Gamma_w = T_w + strictly negative lower terms
CheckReport check_gamma_unitriangular(const Engine& E);
// rho coefficients lie in Z[v,v^-1], are supported strictly below in the
// order, and satisfy the bar-orthogonality identity
CheckReport check_rho(const Engine& E);
// pi* coefficients lie in v^-1 Z[v^-1]
CheckReport check_pistar(const Engine& E);
// x <=_LR y iff sigma_x <=_LR sigma_y inside the parabolic, at equal lt
CheckReport check_ordre_lr(const Engine& E);
// two-sided equivalence iff equal lt and equivalent sigma parts
CheckReport check_cellules_bilateres(const Engine& E);
// two-sided cells match bipartition shapes, left cells match recording
// bi-tableaux, and the dominance criterion matches <=_LR at equal lt
CheckReport check_shape_criteria(const Engine& E);
// closed form of tau(Gamma_z), degree bound -alpha(z), equality exactly on
// involutions
CheckReport check_tau_gamma(const Engine& E);
// alpha is decreasing along <=_LR with equality forcing equivalence,
// alpha <= Delta with equality exactly on involutions, and alpha = a
CheckReport check_alpha_relations(const Engine& E);
// degree bounds for the expansion of T_{w0}^m C_y over the given exponents,
// including the even-power diagonal identity inside left cells
CheckReport check_tw0_bounds(const Engine& E, const std::vector<int>& exponents);
// deg tau(T_{w0}^{-k} C_w) against -a(w) + k(a(w0 w) - a(w)), with equality
// exactly when w0^k w^{-1} lies in D; k = 0..max_power
CheckReport check_tw0_tau(const Engine& E, int max_power);
// recomputing a from Gamma x Gamma products agrees with the C-basis value,
// and the top coefficient matches gamma
CheckReport check_changement_de_base(const Engine& E);

// every check above, in a fixed order (tw0 exponents -2..2, tau power 2)
std::vector<CheckReport> run_all_checks(const Engine& E);

}  // namespace klb
