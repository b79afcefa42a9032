#include "cpspin/structures.hpp"

#include <random>
#include <stdexcept>

#include "cpspin/linalg.hpp"
#include "cpspin/random.hpp"

namespace cpspin {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::generic: return "generic";
    case CaseTag::complex: return "complex";
    case CaseTag::lagrangian: return "lagrangian";
  }
  return "generic";
}

CaseTag case_from_string(const std::string& s) {
  if (s == "generic") return CaseTag::generic;
  if (s == "complex") return CaseTag::complex;
  if (s == "lagrangian") return CaseTag::lagrangian;
  throw std::invalid_argument("unknown case tag: " + s);
}

template <class R> NormalVec<R> PointConfig<R>::B(int a, int b) const {
  if (a == 0 && b == 0) return B11;
  if (a == 1 && b == 1) return B22;
  return B12;
}

template <class R> NormalVec<R> PointConfig<R>::B(const TangentVec<R>& X, const TangentVec<R>& Y) const {
  NormalVec<R> out = NormalVec<R>::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (X(a) != R(0) && Y(b) != R(0)) out += (X(a) * Y(b)) * B(a, b);
  return out;
}

template <class R> Mat2<R> PointConfig<R>::j_matrix() const {
  Mat2<R> m;
  m << R(0), R(-j12), j12, R(0);
  return m;
}

template <class R> Mat2<R> PointConfig<R>::t_matrix() const {
  Mat2<R> m;
  m << R(0), R(-t12), t12, R(0);
  return m;
}

template <class R> R PointConfig<R>::jkl(int k, int l) const {
  if (k == l) return R(0);
  return k == 0 ? j12 : R(-j12);
}

template <class R> R RelationResidual<R>::max() const {
  R m(0);
  for (const R& x : r)
    if (x > m) m = x;
  return m;
}

namespace {
template <class R> R relation_tolerance() {
  if constexpr (is_exact_v<R>)
    return R(0);
  else
    return R(1e-12);
}

template <class R> R max_abs_entry(const Mat2<R>& m) {
  R best(0);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      R a = abs_real(R(m(i, j)));
      if (a > best) best = a;
    }
  return best;
}
}  // namespace

template <class R> RelationResidual<R> check_relations(const PointConfig<R>& cfg) {
  const Mat2<R> J = cfg.j_matrix(), T = cfg.t_matrix(), H = cfg.h_matrix(), S = cfg.s_matrix();
  const Mat2<R> I = Mat2<R>::Identity();
  RelationResidual<R> out;
  out.r[0] = max_abs_entry<R>(J * J + I + S * H);
  out.r[1] = max_abs_entry<R>(T * T + I + H * S);
  out.r[2] = max_abs_entry<R>(J * S + S * T);
  out.r[3] = max_abs_entry<R>(H * J + T * H);
  out.r[4] = max_abs_entry<R>(H.transpose() + S);
  return out;
}

template <class R> PointConfig<R> blocks_from_ambient_J(const Mat4<R>& M, R c) {
  const Mat4<R> I = Mat4<R>::Identity();
  const Mat4<R> checks[3] = {M.transpose() * M - I, M * M + I, M.transpose() + M};
  for (const auto& m : checks)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (abs_real(R(m(i, j))) > relation_tolerance<R>())
          throw std::invalid_argument("not an orthogonal complex structure");
  PointConfig<R> cfg;
  cfg.c = c;
  cfg.j12 = M(1, 0);
  cfg.t12 = M(3, 2);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      cfg.h(k, l) = M(2 + l, k);
      cfg.s(l, k) = M(k, 2 + l);
    }
  return cfg;
}

template <class R> Mat4<R> ambient_J(const PointConfig<R>& cfg) {
  Mat4<R> M = Mat4<R>::Zero();
  M.template block<2, 2>(0, 0) = cfg.j_matrix();
  M.template block<2, 2>(2, 0) = cfg.h_matrix();
  M.template block<2, 2>(0, 2) = cfg.s_matrix();
  M.template block<2, 2>(2, 2) = cfg.t_matrix();
  return M;
}

namespace {

Mat4<Rational> standard_J() {
  Mat4<Rational> M = Mat4<Rational>::Zero();
  M(1, 0) = 1;
  M(0, 1) = -1;
  M(3, 2) = 1;
  M(2, 3) = -1;
  return M;
}

NormalVec<Rational> rand_normal(Rng& rng) { return {rng.rational(), rng.rational()}; }

}  // namespace

std::pair<PointConfig<Rational>, DerivSlots<Rational>> random_admissible(std::uint64_t seed, CaseTag tag,
                                                                        const RandomOptions& opt) {
  Rng rng(seed, opt.max_num, opt.max_den);
  PointConfig<Rational> cfg;
  switch (tag) {
    case CaseTag::generic: {
      MatQ A = MatQ::Zero(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
          A(i, j) = rng.rational();
          A(j, i) = -A(i, j);
        }
      MatQ I = MatQ::Identity(4, 4);
      MatQ Q = (I - A) * (*exact_inverse(I + A));
      Mat4<Rational> M = Q * standard_J() * Q.transpose();
      cfg = blocks_from_ambient_J<Rational>(M);
      cfg.B11 = rand_normal(rng);
      cfg.B12 = rand_normal(rng);
      cfg.B22 = rand_normal(rng);
      break;
    }
    case CaseTag::complex: {
      cfg.j12 = 1;
      cfg.t12 = 1;
      NormalVec<Rational> b = rand_normal(rng);
      cfg.B11 = b;
      cfg.B12 = cfg.t(b);
      cfg.B22 = -b;
      break;
    }
    case CaseTag::lagrangian: {
      Rational a = rng.rational();
      Rational cs = (1 - a * a) / (1 + a * a), sn = 2 * a / (1 + a * a);
      Mat2<Rational> Hm;  // rotation times diag(1,-1): orthogonal, det -1
      Hm << cs, sn, sn, -cs;
      cfg.h = Hm.transpose();
      cfg.s = -Hm;
      Rational C[2][2][2];
      Rational c000 = rng.rational(), c001 = rng.rational(), c011 = rng.rational(), c111 = rng.rational();
      C[0][0][0] = c000;
      C[0][0][1] = C[0][1][0] = C[1][0][0] = c001;
      C[0][1][1] = C[1][0][1] = C[1][1][0] = c011;
      C[1][1][1] = c111;
      auto Bab = [&](int p, int q) {
        NormalVec<Rational> v = NormalVec<Rational>::Zero();
        for (int r = 0; r < 2; ++r) v += C[p][q][r] * NormalVec<Rational>(Hm.col(r));
        return v;
      };
      cfg.B11 = Bab(0, 0);
      cfg.B12 = Bab(0, 1);
      cfg.B22 = Bab(1, 1);
      break;
    }
  }
  cfg.tag = tag;
  DerivSlots<Rational> d;
  for (int a = 0; a < 2; ++a) {
    d(a, 0, 0) = rand_normal(rng);
    d(a, 1, 1) = rand_normal(rng);
    d(a, 0, 1) = rand_normal(rng);
    d(a, 1, 0) = d(a, 0, 1);
  }
  return {cfg, d};
}

Spinor<Rational> random_spinor(std::uint64_t seed, unsigned support_mask, const RandomOptions& opt) {
  Rng rng(seed, opt.max_num, opt.max_den);
  Spinor<Rational> phi;
  for (int k = 0; k < 4; ++k) {
    GaussQ z(rng.rational(), rng.rational());
    if (!((support_mask >> k) & 1u))
      z = GaussQ(0);
    else if (is_zero(z))
      z = GaussQ(1);
    phi(k) = z;
  }
  return phi;
}

Vec2<Rational> random_vec2(std::uint64_t seed, const RandomOptions& opt) {
  Rng rng(seed, opt.max_num, opt.max_den);
  return {rng.rational(), rng.rational()};
}

template <class R> Spinor<R> eta_mul(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi) {
  Spinor<R> out = Spinor<R>::Zero();
  for (int j = 0; j < 2; ++j) {
    NormalVec<R> b = cfg.B(basis2<R>(j), X);
    out += tangent_mul<R>(basis2<R>(j), normal_mul<R>(b, phi));
  }
  return out;
}

template <class R> NormalVec<R> mean_curvature(const PointConfig<R>& cfg) {
  return (cfg.B11 + cfg.B22) / R(2);
}

template <class R> Spinor<R> beta_mul(const PointConfig<R>& cfg, const Spinor<R>& phi) {
  Spinor<R> out = Spinor<R>::Zero();
  for (int i = 0; i < 2; ++i)
    out += tangent_mul<R>(basis2<R>(i), normal_mul<R>(cfg.hmap(basis2<R>(i)), phi));
  return out;
}

template <class R> Mat2<R> weingarten(const PointConfig<R>& cfg, const NormalVec<R>& nu) {
  Mat2<R> S;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) S(a, b) = cfg.B(a, b).dot(nu);
  return S;
}

template <class R> R normal_bracket(const PointConfig<R>& cfg) {
  const Mat2<R> S1 = weingarten<R>(cfg, basis2<R>(0)), S2 = weingarten<R>(cfg, basis2<R>(1));
  const Mat2<R> C = S1 * S2 - S2 * S1;
  return C(1, 0);
}

template <class R> TangentVec<R> nabla_j(const PointConfig<R>& cfg, int a, int b) {
  const TangentVec<R> ea = basis2<R>(a), eb = basis2<R>(b);
  return weingarten<R>(cfg, cfg.hmap(eb)) * ea + cfg.smap(cfg.B(a, b));
}

template <class R> NormalVec<R> nabla_h(const PointConfig<R>& cfg, int a, int b) {
  const TangentVec<R> ea = basis2<R>(a), eb = basis2<R>(b);
  return cfg.t(cfg.B(a, b)) - cfg.B(ea, cfg.j(eb));
}

template <class R> NormalVec<R> nabla_t(const PointConfig<R>& cfg, int a, int l) {
  const TangentVec<R> ea = basis2<R>(a);
  const NormalVec<R> nl = basis2<R>(l);
  return -cfg.B(cfg.smap(nl), ea) - cfg.hmap(weingarten<R>(cfg, nl) * ea);
}

template <class R> TangentVec<R> nabla_s(const PointConfig<R>& cfg, int a, int l) {
  const TangentVec<R> ea = basis2<R>(a);
  const NormalVec<R> nl = basis2<R>(l);
  return -cfg.j(weingarten<R>(cfg, nl) * ea) + weingarten<R>(cfg, cfg.t(nl)) * ea;
}

#define CPSPIN_INSTANTIATE(R)                                                                    \
  template struct PointConfig<R>;                                                                \
  template struct RelationResidual<R>;                                                           \
  template RelationResidual<R> check_relations<R>(const PointConfig<R>&);                        \
  template PointConfig<R> blocks_from_ambient_J<R>(const Mat4<R>&, R);                           \
  template Mat4<R> ambient_J<R>(const PointConfig<R>&);                                          \
  template Spinor<R> eta_mul<R>(const PointConfig<R>&, const TangentVec<R>&, const Spinor<R>&);  \
  template NormalVec<R> mean_curvature<R>(const PointConfig<R>&);                                \
  template Spinor<R> beta_mul<R>(const PointConfig<R>&, const Spinor<R>&);                       \
  template Mat2<R> weingarten<R>(const PointConfig<R>&, const NormalVec<R>&);                    \
  template R normal_bracket<R>(const PointConfig<R>&);                                           \
  template TangentVec<R> nabla_j<R>(const PointConfig<R>&, int, int);                            \
  template NormalVec<R> nabla_h<R>(const PointConfig<R>&, int, int);                            \
  template NormalVec<R> nabla_t<R>(const PointConfig<R>&, int, int);                            \
  template TangentVec<R> nabla_s<R>(const PointConfig<R>&, int, int);

CPSPIN_INSTANTIATE(double)
CPSPIN_INSTANTIATE(Rational)

}  // namespace cpspin
