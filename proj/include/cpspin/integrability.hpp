#pragma once

#include <array>
#include <optional>

#include "cpspin/killing.hpp"
#include "cpspin/linalg.hpp"

namespace cpspin {

template <class R> struct CompatibilityResidual {
  R gauss{0};
  R ricci{0};
  std::array<NormalVec<R>, 2> codazzi{NormalVec<R>::Zero(), NormalVec<R>::Zero()};
};

// K_M - (c + <B11,B22> - |B12|^2 + 3c j12^2)
template <class R> R gauss_residual(const PointConfig<R>& cfg, const R& K_M);
// K_N - (-<[S1,S2]e1,e2> + c (h11 h22 - h12 h21 + 2 j12 t12)), K_N = <R^perp(e1,e2) nu2, nu1>
template <class R> R ricci_residual(const PointConfig<R>& cfg, const R& K_N);
// The typeset right-hand side, with c (h21 h12 - h11 h22 + 2 j12 t12).
template <class R> R ricci_rhs_printed(const PointConfig<R>& cfg);
// D1(e2,e_k) - D2(e1,e_k) - c (j_2k h(e1) - j_1k h(e2) - 2 j12 h(e_k))
template <class R> NormalVec<R> codazzi_residual(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int k);
template <class R>
CompatibilityResidual<R> compatibility(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const R& K_M,
                                       const R& K_N);

// F(e1, e2) = -2i j12, returned as the real coefficient of i.
template <class R> R restricted_aux_curvature_im(const PointConfig<R>& cfg);
template <class R> Cx<R> restricted_aux_curvature(const PointConfig<R>& cfg);

// nabla_{e1} nabla_{e2} phi - nabla_{e2} nabla_{e1} phi through the Killing equation.
template <class R> Spinor<R> curvature_from_killing(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const Spinor<R>& phi);
// Same, summed from the lemma's right-hand sides.
template <class R> Spinor<R> curvature_from_lemma(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const Spinor<R>& phi);

// Coefficient of 1/2 K_M e1.e2.phi in the spin curvature. The Lagrangian and complex derivations print opposite signs.
inline constexpr int kSpinSigma = -1;

// sigma/2 K_M e1.e2.phi - 1/2 K_E nu1.nu2.phi + 1/2 F phi
template <class R>
Spinor<R> spin_curvature_rhs(const R& K_M, const R& K_E, const Cx<R>& F, const Spinor<R>& phi, int sigma = kSpinSigma);

// With curvature_from_killing = spin_curvature_rhs - T.phi:
//   e1^e2: 1/2 (<B11,B22> - |B12|^2 + c - K_M)
//   nu1^nu2: 1/2 (c det h - <[S1,S2]e1,e2> - K_E)
//   e_i^nu_j: 1/2 <D1(e2,e_i) - D2(e1,e_i), nu_j>
// Requires j = t = 0 and c = 1.
template <class R>
FormT<R> assemble_T_lagrangian(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const R& K_M, const R& K_E);

// Complex case, with curvature_from_killing = spin_curvature_rhs(F = -2i) - T.phi + i phi + i phi_bar:
//   e1^e2: -1/2 K_M + 1 - 1/2 (|B12|^2 - <B11,B22>)
//   nu1^nu2: -1/2 K_N - 1/2 <[S1,S2]e1,e2> + 1/2 (h11 h22 - h12 h21)
//   e_i^nu_j: 1/2 <D1(e2,e_i) - D2(e1,e_i), nu_j>
// Requires h = s = 0, j12 = t12 = 1 and c = 1.
template <class R>
FormT<R> assemble_T_complex(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const R& K_M, const R& K_N);

// Real 8x6 matrix of T -> T.phi in the basis (e1^e2, nu1^nu2, e1^nu1, e1^nu2, e2^nu1, e2^nu2),
// rows ordered (re, im) per component.
MatQ form_action_matrix(const Spinor<Rational>& phi);
VecQ spinor_to_real(const Spinor<Rational>& phi);
FormT<Rational> form_from_vector(const VecQ& x);
VecQ form_to_vector(const FormT<Rational>& T);

int kernel_rank(const Spinor<Rational>& phi);

struct FormSolve {
  bool consistent = false;
  bool unique = false;
  FormT<Rational> T;
};
// Exact solve of T.phi = target.
FormSolve solve_form(const Spinor<Rational>& phi, const Spinor<Rational>& target);

// T.phi = i phi + i phi_bar for phi in the (+,+) + (-,+) sector. Throws DegenerateSpinor when
// a slot vanishes and std::invalid_argument when phi leaves the sector.
FormSolve solve_complex_lemma(const Spinor<Rational>& phi);

// Spinor-level extraction: solves (spin - curvature_from_killing + zeroth-order terms)(phi) = T.phi
// for the unique T at the given phi.
FormSolve extract_T_lagrangian(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                               const Rational& K_M, const Rational& K_E, const Spinor<Rational>& phi);
FormSolve extract_T_complex(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                            const Rational& K_M, const Rational& K_N, const Spinor<Rational>& phi);

// Curvatures that make the tangent and normal coefficients of T hit the given targets.
// T is affine in K_M and K_E; the roots come from two probes of each slot.
struct CurvatureRoots {
  Rational K_M;
  Rational K_N;
};
CurvatureRoots lagrangian_roots(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                                const Spinor<Rational>& phi);
CurvatureRoots complex_roots(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                             const Spinor<Rational>& phi);

}  // namespace cpspin
