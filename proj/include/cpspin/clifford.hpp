#pragma once

#include <Eigen/Dense>

#include "cpspin/scalar.hpp"

namespace cpspin {

template <class R> using Vec2 = Eigen::Matrix<R, 2, 1>;
template <class R> using Mat2 = Eigen::Matrix<R, 2, 2>;
template <class R> using Vec4 = Eigen::Matrix<R, 4, 1>;
template <class R> using Mat4 = Eigen::Matrix<R, 4, 4>;

// Frame coefficients in {e1,e2} and {nu1,nu2}.
template <class R> using TangentVec = Vec2<R>;
template <class R> using NormalVec = Vec2<R>;
// (x1, x2, y1, y2): tangent part first.
template <class R> using AmbientVec = Vec4<R>;

// Components of a twisted spinor, indexed 2*m + e where m is the omega_M
// sign and e the omega_perp sign (0 for +, 1 for -).
template <class R> using Spinor = Eigen::Matrix<Cx<R>, 4, 1>;

enum Grading : int { kPP = 0, kPM = 1, kMP = 2, kMM = 3 };

template <class R> Vec2<R> basis2(int k) {
  Vec2<R> v = Vec2<R>::Zero();
  v(k) = R(1);
  return v;
}

// Gamma representation shared by Sigma M and Sigma E:
//   E1 = [[0,-1],[1,0]],  E2 = [[0,i],[i,0]],  i E1 E2 = diag(1,-1).
// On the twisted product e_a acts as E_a (x) diag(1,-1), nu_b as I (x) E_b.
Eigen::Matrix2cd gamma2(int a);
Eigen::Matrix4cd tangent_gamma(int a);
Eigen::Matrix4cd normal_gamma(int b);

template <class R> Spinor<R> tangent_mul(const TangentVec<R>& X, const Spinor<R>& phi);
template <class R> Spinor<R> normal_mul(const NormalVec<R>& xi, const Spinor<R>& phi);
template <class R> Spinor<R> ambient_mul(const AmbientVec<R>& v, const Spinor<R>& phi);

// phi_bar = phi^+ - phi^- for the total grading.
template <class R> Spinor<R> conjugate(const Spinor<R>& phi);
template <class R> Spinor<R> positive_part(const Spinor<R>& phi);
template <class R> Spinor<R> negative_part(const Spinor<R>& phi);

// Linear in the first slot.
template <class R> Cx<R> hermitian(const Spinor<R>& phi, const Spinor<R>& psi);
template <class R> R norm2(const Spinor<R>& phi);

template <class R> Spinor<R> times_i(const Spinor<R>& phi);
template <class R> Spinor<R> scaled(const R& r, const Spinor<R>& phi);

// i e1.e2.phi and i nu1.nu2.phi.
template <class R> Spinor<R> omega_tangent(const Spinor<R>& phi);
template <class R> Spinor<R> omega_normal(const Spinor<R>& phi);

// e_i . nu_j . phi
template <class R> Spinor<R> mixed_mul(int i, int j, const Spinor<R>& phi);

template <class R> struct FormT {
  R t_tangent{0};
  Mat2<R> t_mixed = Mat2<R>::Zero();  // (i,j): coefficient of e_i ^ nu_j
  R t_normal{0};
};

template <class R> Spinor<R> form_action(const FormT<R>& T, const Spinor<R>& phi);

// Largest |re|+|im| over the components; exact on rationals.
template <class R> R max_abs(const Spinor<R>& phi);

}  // namespace cpspin
