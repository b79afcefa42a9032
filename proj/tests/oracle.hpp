#pragma once

// Independent reference implementation for the exact tests: Clifford action by explicit 4x4
// Kronecker matrices, the Killing equation written as matrix products, and the curvature
// obtained by differentiating the Killing equation once more with the product rule.
// Shares only PointConfig/DerivSlots (plain data) with the library.

#include <Eigen/Dense>

#include "cpspin/structures.hpp"

namespace oracle {

using cpspin::GaussQ;
using cpspin::Rational;
using Q = Rational;
using Mat = Eigen::Matrix<GaussQ, 4, 4>;
using Sp = Eigen::Matrix<GaussQ, 4, 1>;
using V2 = Eigen::Matrix<Q, 2, 1>;
using M2 = Eigen::Matrix<GaussQ, 2, 2>;

inline GaussQ I() { return GaussQ(Q(0), Q(1)); }

inline M2 E(int a) {
  M2 m;
  if (a == 0)
    m << GaussQ(0), GaussQ(-1), GaussQ(1), GaussQ(0);
  else
    m << GaussQ(0), I(), I(), GaussQ(0);
  return m;
}
inline M2 D() {
  M2 m;
  m << GaussQ(1), GaussQ(0), GaussQ(0), GaussQ(-1);
  return m;
}
inline M2 Id2() { return M2::Identity(); }

inline Mat kron(const M2& A, const M2& B) {
  Mat K;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) K(2 * i + k, 2 * j + l) = A(i, j) * B(k, l);
  return K;
}

inline Mat e(int a) { return kron(E(a), D()); }
inline Mat nu(int b) { return kron(Id2(), E(b)); }

inline Mat tangent(const V2& X) { return e(0) * GaussQ(X(0)) + e(1) * GaussQ(X(1)); }
inline Mat normal(const V2& xi) { return nu(0) * GaussQ(xi(0)) + nu(1) * GaussQ(xi(1)); }

// total grading (i e1 e2)(i nu1 nu2)
inline Mat grading() { return (e(0) * e(1) * I()) * (nu(0) * nu(1) * I()); }
inline Sp bar(const Sp& phi) { return grading() * phi; }

inline V2 unit(int k) {
  V2 v = V2::Zero();
  v(k) = Q(1);
  return v;
}

// j(e_b), h(e_b), s(nu_l), t(nu_l) from the index convention, written out by hand
inline V2 j_of(const cpspin::PointConfig<Q>& c, const V2& X) { return V2(Q(-c.j12 * X(1)), Q(c.j12 * X(0))); }
inline V2 h_of(const cpspin::PointConfig<Q>& c, const V2& X) {
  return V2(Q(X(0) * c.h(0, 0) + X(1) * c.h(1, 0)), Q(X(0) * c.h(0, 1) + X(1) * c.h(1, 1)));
}
inline V2 s_of(const cpspin::PointConfig<Q>& c, const V2& xi) {
  return V2(Q(xi(0) * c.s(0, 0) + xi(1) * c.s(1, 0)), Q(xi(0) * c.s(0, 1) + xi(1) * c.s(1, 1)));
}
inline V2 t_of(const cpspin::PointConfig<Q>& c, const V2& xi) { return V2(Q(-c.t12 * xi(1)), Q(c.t12 * xi(0))); }

inline V2 Bab(const cpspin::PointConfig<Q>& c, int a, int b) {
  if (a == 0 && b == 0) return c.B11;
  if (a == 1 && b == 1) return c.B22;
  return c.B12;
}
inline V2 B(const cpspin::PointConfig<Q>& c, const V2& X, const V2& Y) {
  V2 out = V2::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) out += (X(a) * Y(b)) * Bab(c, a, b);
  return out;
}
// S_xi e_a = sum_c <B(e_a, e_c), xi> e_c
inline V2 shape(const cpspin::PointConfig<Q>& c, const V2& xi, int a) {
  return V2(Bab(c, a, 0).dot(xi), Bab(c, a, 1).dot(xi));
}

inline Mat eta(const cpspin::PointConfig<Q>& c, const V2& X) {
  Mat m = Mat::Zero();
  for (int j = 0; j < 2; ++j) m += e(j) * normal(B(c, unit(j), X));
  return m;
}

inline Sp killing(const cpspin::PointConfig<Q>& c, const V2& X, const Sp& phi) {
  const GaussQ half(Q(1, 2)), ihalf(Q(0), Q(1, 2));
  return -(eta(c, X) * phi) * half - (tangent(X) * phi) * half + (tangent(j_of(c, X)) * bar(phi)) * ihalf +
         (normal(h_of(c, X)) * bar(phi)) * ihalf;
}

// (nabla_a j)(e_b) = S_{h(e_b)} e_a + s(B_ab);  (nabla_a h)(e_b) = t(B_ab) - B(e_a, j e_b)
inline V2 dj(const cpspin::PointConfig<Q>& c, int a, int b) {
  return V2(shape(c, h_of(c, unit(b)), a) + s_of(c, Bab(c, a, b)));
}
inline V2 dh(const cpspin::PointConfig<Q>& c, int a, int b) {
  return V2(t_of(c, Bab(c, a, b)) - B(c, unit(a), j_of(c, unit(b))));
}

// nabla_{e_a} nabla_{e_b} phi in a frame normal at the point
inline Sp second(const cpspin::PointConfig<Q>& c, const cpspin::DerivSlots<Q>& d, int a, int b, const Sp& phi) {
  const GaussQ half(Q(1, 2)), ihalf(Q(0), Q(1, 2));
  const Sp da = killing(c, unit(a), phi);
  const Sp da_bar = bar(da);
  Mat deta = Mat::Zero();
  for (int j = 0; j < 2; ++j) deta += e(j) * normal(d(a, j, b));
  const V2 eb = unit(b);
  return -(deta * phi) * half - (eta(c, eb) * da) * half - (tangent(eb) * da) * half +
         (tangent(dj(c, a, b)) * bar(phi)) * ihalf + (tangent(j_of(c, eb)) * da_bar) * ihalf +
         (normal(dh(c, a, b)) * bar(phi)) * ihalf + (normal(h_of(c, eb)) * da_bar) * ihalf;
}

inline Sp curvature(const cpspin::PointConfig<Q>& c, const cpspin::DerivSlots<Q>& d, const Sp& phi) {
  return second(c, d, 0, 1, phi) - second(c, d, 1, 0, phi);
}

inline Sp dirac(const cpspin::PointConfig<Q>& c, const Sp& phi) {
  return e(0) * killing(c, unit(0), phi) + e(1) * killing(c, unit(1), phi);
}

inline GaussQ herm(const Sp& a, const Sp& b) {
  GaussQ s(0);
  for (int k = 0; k < 4; ++k) s += a(k) * cpspin::conj(b(k));
  return s;
}

inline bool zero(const Sp& s) {
  for (int k = 0; k < 4; ++k)
    if (!cpspin::is_zero(s(k))) return false;
  return true;
}

}  // namespace oracle
