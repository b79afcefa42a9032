#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>

#include "cpspin/clifford.hpp"

namespace cpspin {

enum class CaseTag { generic, complex, lagrangian };

std::string to_string(CaseTag tag);
CaseTag case_from_string(const std::string& s);

// Pointwise data at a point of the surface, in orthonormal frames {e1,e2}, {nu1,nu2}.
// Index convention: the first index names the input basis vector.
//   j(e1) = j12 e2,  h_kl = <h(e_k), nu_l>,  s_lk = <s(nu_l), e_k>,  t(nu1) = t12 nu2.
template <class R> struct PointConfig {
  R c{1};
  NormalVec<R> B11 = NormalVec<R>::Zero();
  NormalVec<R> B12 = NormalVec<R>::Zero();
  NormalVec<R> B22 = NormalVec<R>::Zero();
  R j12{0};
  Mat2<R> h = Mat2<R>::Zero();
  Mat2<R> s = Mat2<R>::Zero();
  R t12{0};
  CaseTag tag = CaseTag::generic;

  NormalVec<R> B(int a, int b) const;
  NormalVec<R> B(const TangentVec<R>& X, const TangentVec<R>& Y) const;

  // Coordinate matrices of the four blocks of J.
  Mat2<R> j_matrix() const;
  Mat2<R> t_matrix() const;
  Mat2<R> h_matrix() const { return h.transpose(); }
  Mat2<R> s_matrix() const { return s.transpose(); }

  TangentVec<R> j(const TangentVec<R>& X) const { return j_matrix() * X; }
  NormalVec<R> hmap(const TangentVec<R>& X) const { return h_matrix() * X; }
  TangentVec<R> smap(const NormalVec<R>& xi) const { return s_matrix() * xi; }
  NormalVec<R> t(const NormalVec<R>& xi) const { return t_matrix() * xi; }

  // j_kl = <j(e_k), e_l>
  R jkl(int k, int l) const;
};

// (nabla'_{e_a} B)(e_b, e_c) stored as D[a](b, c); frame normal at the point.
template <class R> struct DerivSlots {
  std::array<std::array<std::array<NormalVec<R>, 2>, 2>, 2> D{};

  DerivSlots() {
    for (auto& a : D)
      for (auto& b : a)
        for (auto& c : b) c = NormalVec<R>::Zero();
  }
  const NormalVec<R>& operator()(int a, int b, int c) const { return D[a][b][c]; }
  NormalVec<R>& operator()(int a, int b, int c) { return D[a][b][c]; }
};

// Max absolute entry of each of (1.1)..(1.5), as LHS - RHS.
template <class R> struct RelationResidual {
  std::array<R, 5> r{R(0), R(0), R(0), R(0), R(0)};
  R max() const;
};

template <class R> RelationResidual<R> check_relations(const PointConfig<R>& cfg);

// M(row, col) = <b_row, J b_col> in the basis (e1, e2, nu1, nu2).
template <class R> PointConfig<R> blocks_from_ambient_J(const Mat4<R>& M, R c = R(1));
template <class R> Mat4<R> ambient_J(const PointConfig<R>& cfg);

// Exact random admissible data. Trial k of a run uses seed base + k.
struct RandomOptions {
  int max_num = 10;
  int max_den = 10;
};
std::pair<PointConfig<Rational>, DerivSlots<Rational>> random_admissible(std::uint64_t seed, CaseTag tag,
                                                                        const RandomOptions& opt = {});
Spinor<Rational> random_spinor(std::uint64_t seed, unsigned support_mask = 0xF, const RandomOptions& opt = {});
Vec2<Rational> random_vec2(std::uint64_t seed, const RandomOptions& opt = {});

// eta(X) . phi = sum_j e_j . B(e_j, X) . phi
template <class R> Spinor<R> eta_mul(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi);
template <class R> NormalVec<R> mean_curvature(const PointConfig<R>& cfg);
// beta . phi = sum_i e_i . h(e_i) . phi
template <class R> Spinor<R> beta_mul(const PointConfig<R>& cfg, const Spinor<R>& phi);
// S(a, b) = <B(e_a, e_b), nu>
template <class R> Mat2<R> weingarten(const PointConfig<R>& cfg, const NormalVec<R>& nu);
// <[S_nu1, S_nu2] e1, e2>
template <class R> R normal_bracket(const PointConfig<R>& cfg);

// Derived first derivatives of j and h at a point where the frame is normal.
// (nabla_{e_a} j)(e_b) = S_{h(e_b)} e_a + s(B_ab)
template <class R> TangentVec<R> nabla_j(const PointConfig<R>& cfg, int a, int b);
// (nabla_{e_a} h)(e_b) = t(B_ab) - B(e_a, j e_b)
template <class R> NormalVec<R> nabla_h(const PointConfig<R>& cfg, int a, int b);
// (nabla_{e_a} t)(nu_l) = -B(s(nu_l), e_a) - h(S_{nu_l} e_a)
template <class R> NormalVec<R> nabla_t(const PointConfig<R>& cfg, int a, int l);
// (nabla_{e_a} s)(nu_l) = -j(S_{nu_l} e_a) + S_{t(nu_l)} e_a
template <class R> TangentVec<R> nabla_s(const PointConfig<R>& cfg, int a, int l);

}  // namespace cpspin
