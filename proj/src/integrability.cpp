#include "cpspin/integrability.hpp"

#include <stdexcept>

namespace cpspin {

namespace {

template <class R> R half_of(const R& x) { return x / R(2); }

template <class R> R det2(const Mat2<R>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

template <class R> NormalVec<R> codazzi_lhs(const DerivSlots<R>& deriv, int k) {
  return deriv(0, 1, k) - deriv(1, 0, k);
}

template <class R> Mat2<R> mixed_block(const DerivSlots<R>& deriv) {
  Mat2<R> m;
  for (int i = 0; i < 2; ++i) {
    const NormalVec<R> d = codazzi_lhs<R>(deriv, i);
    for (int j = 0; j < 2; ++j) m(i, j) = half_of<R>(d(j));
  }
  return m;
}

template <class R> void require_unit_c(const PointConfig<R>& cfg) {
  if (cfg.c != R(1)) throw std::invalid_argument("the Killing constants assume c = 1");
}

}  // namespace

template <class R> R gauss_residual(const PointConfig<R>& cfg, const R& K_M) {
  return K_M - (cfg.c + cfg.B11.dot(cfg.B22) - cfg.B12.squaredNorm() + R(3) * cfg.c * cfg.j12 * cfg.j12);
}

template <class R> R ricci_residual(const PointConfig<R>& cfg, const R& K_N) {
  return K_N - (-normal_bracket<R>(cfg) + cfg.c * (det2<R>(cfg.h) + R(2) * cfg.j12 * cfg.t12));
}

template <class R> R ricci_rhs_printed(const PointConfig<R>& cfg) {
  return -normal_bracket<R>(cfg) + cfg.c * (R(-det2<R>(cfg.h)) + R(2) * cfg.j12 * cfg.t12);
}

template <class R> NormalVec<R> codazzi_residual(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int k) {
  const NormalVec<R> rhs = cfg.jkl(1, k) * cfg.hmap(basis2<R>(0)) - cfg.jkl(0, k) * cfg.hmap(basis2<R>(1)) -
                           R(2) * cfg.j12 * cfg.hmap(basis2<R>(k));
  return codazzi_lhs<R>(deriv, k) - cfg.c * rhs;
}

template <class R>
CompatibilityResidual<R> compatibility(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const R& K_M,
                                       const R& K_N) {
  CompatibilityResidual<R> out;
  out.gauss = gauss_residual<R>(cfg, K_M);
  out.ricci = ricci_residual<R>(cfg, K_N);
  for (int k = 0; k < 2; ++k) out.codazzi[k] = codazzi_residual<R>(cfg, deriv, k);
  return out;
}

template <class R> R restricted_aux_curvature_im(const PointConfig<R>& cfg) { return R(-2) * cfg.j12; }

template <class R> Cx<R> restricted_aux_curvature(const PointConfig<R>& cfg) {
  return make_cx<R>(R(0), restricted_aux_curvature_im<R>(cfg));
}

template <class R>
Spinor<R> curvature_from_killing(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const Spinor<R>& phi) {
  Spinor<R> out = Spinor<R>::Zero();
  for (int k = 1; k <= 10; ++k)
    out += a_term<R>(cfg, deriv, k, Order::e1e2, phi) - a_term<R>(cfg, deriv, k, Order::e2e1, phi);
  return out;
}

template <class R>
Spinor<R> curvature_from_lemma(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const Spinor<R>& phi) {
  Spinor<R> out = Spinor<R>::Zero();
  for (int item = 1; item <= 8; ++item) out += lemma_rhs<R>(cfg, deriv, item, phi);
  return out;
}

template <class R>
Spinor<R> spin_curvature_rhs(const R& K_M, const R& K_E, const Cx<R>& F, const Spinor<R>& phi, int sigma) {
  const TangentVec<R> e1 = basis2<R>(0), e2 = basis2<R>(1);
  Spinor<R> out = scaled<R>(R(R(sigma) * half_of<R>(K_M)), tangent_mul<R>(e1, tangent_mul<R>(e2, phi)));
  out -= scaled<R>(half_of<R>(K_E), normal_mul<R>(e1, normal_mul<R>(e2, phi)));
  const Cx<R> f = F / Cx<R>(R(2));
  for (int k = 0; k < 4; ++k) out(k) += f * phi(k);
  return out;
}

template <class R>
FormT<R> assemble_T_lagrangian(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const R& K_M, const R& K_E) {
  if (cfg.j12 != R(0) || cfg.t12 != R(0)) throw std::invalid_argument("assemble_T_lagrangian needs j = t = 0");
  require_unit_c<R>(cfg);
  FormT<R> T;
  T.t_tangent = half_of<R>(cfg.B11.dot(cfg.B22) - cfg.B12.squaredNorm() + cfg.c - K_M);
  T.t_normal = half_of<R>(cfg.c * det2<R>(cfg.h) - normal_bracket<R>(cfg) - K_E);
  T.t_mixed = mixed_block<R>(deriv);
  return T;
}

template <class R>
FormT<R> assemble_T_complex(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, const R& K_M, const R& K_N) {
  if (cfg.j12 != R(1) || cfg.t12 != R(1) || !cfg.h.isZero() || !cfg.s.isZero())
    throw std::invalid_argument("assemble_T_complex needs h = s = 0 and j12 = t12 = 1");
  require_unit_c<R>(cfg);
  FormT<R> T;
  T.t_tangent = half_of<R>(R(-K_M)) + R(1) - half_of<R>(cfg.B12.squaredNorm() - cfg.B11.dot(cfg.B22));
  T.t_normal = half_of<R>(R(-K_N)) - half_of<R>(normal_bracket<R>(cfg)) + half_of<R>(det2<R>(cfg.h));
  T.t_mixed = mixed_block<R>(deriv);
  return T;
}

VecQ spinor_to_real(const Spinor<Rational>& phi) {
  VecQ v(8);
  for (int k = 0; k < 4; ++k) {
    v(2 * k) = phi(k).re;
    v(2 * k + 1) = phi(k).im;
  }
  return v;
}

FormT<Rational> form_from_vector(const VecQ& x) {
  FormT<Rational> T;
  T.t_tangent = x(0);
  T.t_normal = x(1);
  T.t_mixed << x(2), x(3), x(4), x(5);
  return T;
}

VecQ form_to_vector(const FormT<Rational>& T) {
  VecQ x(6);
  x << T.t_tangent, T.t_normal, T.t_mixed(0, 0), T.t_mixed(0, 1), T.t_mixed(1, 0), T.t_mixed(1, 1);
  return x;
}

MatQ form_action_matrix(const Spinor<Rational>& phi) {
  MatQ A(8, 6);
  for (int col = 0; col < 6; ++col) {
    VecQ unit = VecQ::Zero(6);
    unit(col) = 1;
    A.col(col) = spinor_to_real(form_action<Rational>(form_from_vector(unit), phi));
  }
  return A;
}

int kernel_rank(const Spinor<Rational>& phi) { return exact_rank(form_action_matrix(phi)); }

FormSolve solve_form(const Spinor<Rational>& phi, const Spinor<Rational>& target) {
  const ExactSolve sol = exact_solve(form_action_matrix(phi), spinor_to_real(target));
  FormSolve out;
  out.consistent = sol.consistent;
  out.unique = sol.unique;
  if (sol.unique) out.T = form_from_vector(sol.x);
  return out;
}

FormSolve solve_complex_lemma(const Spinor<Rational>& phi) {
  if (!is_zero(phi(kPM)) || !is_zero(phi(kMM)))
    throw std::invalid_argument("solve_complex_lemma needs phi in the (+,+) and (-,+) components");
  if (is_zero(phi(kPP)) || is_zero(phi(kMP)))
    throw DegenerateSpinor("solve_complex_lemma needs both components nonzero");
  const Spinor<Rational> target = times_i<Rational>(phi) + times_i<Rational>(conjugate<Rational>(phi));
  return solve_form(phi, target);
}

FormSolve extract_T_lagrangian(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                               const Rational& K_M, const Rational& K_E, const Spinor<Rational>& phi) {
  const Spinor<Rational> spin =
      spin_curvature_rhs<Rational>(K_M, K_E, restricted_aux_curvature<Rational>(cfg), phi);
  return solve_form(phi, Spinor<Rational>(spin - curvature_from_killing<Rational>(cfg, deriv, phi)));
}

FormSolve extract_T_complex(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                            const Rational& K_M, const Rational& K_N, const Spinor<Rational>& phi) {
  const Spinor<Rational> spin =
      spin_curvature_rhs<Rational>(K_M, K_N, restricted_aux_curvature<Rational>(cfg), phi);
  Spinor<Rational> target = spin - curvature_from_killing<Rational>(cfg, deriv, phi);
  target += times_i<Rational>(phi) + times_i<Rational>(conjugate<Rational>(phi));
  return solve_form(phi, target);
}

namespace {

// Root of an affine function sampled at 0 and 1.
Rational affine_root(const Rational& f0, const Rational& f1, const Rational& target) {
  const Rational slope = f1 - f0;
  if (slope == 0) throw std::domain_error("coefficient does not depend on the curvature");
  return (target - f0) / slope;
}

template <class Extract>
CurvatureRoots roots_of(Extract extract, const Rational& target) {
  const FormSolve z = extract(Rational(0), Rational(0));
  const FormSolve m = extract(Rational(1), Rational(0));
  const FormSolve n = extract(Rational(0), Rational(1));
  if (!z.unique || !m.unique || !n.unique) throw std::domain_error("form extraction is not unique at this phi");
  return {affine_root(z.T.t_tangent, m.T.t_tangent, target), affine_root(z.T.t_normal, n.T.t_normal, target)};
}

}  // namespace

CurvatureRoots lagrangian_roots(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                                const Spinor<Rational>& phi) {
  return roots_of([&](const Rational& a, const Rational& b) { return extract_T_lagrangian(cfg, deriv, a, b, phi); },
                  Rational(0));
}

CurvatureRoots complex_roots(const PointConfig<Rational>& cfg, const DerivSlots<Rational>& deriv,
                             const Spinor<Rational>& phi) {
  return roots_of([&](const Rational& a, const Rational& b) { return extract_T_complex(cfg, deriv, a, b, phi); },
                  Rational(-1));
}

#define CPSPIN_INSTANTIATE(R)                                                                                  \
  template R gauss_residual<R>(const PointConfig<R>&, const R&);                                             \
  template R ricci_residual<R>(const PointConfig<R>&, const R&);                                             \
  template R ricci_rhs_printed<R>(const PointConfig<R>&);                                                    \
  template NormalVec<R> codazzi_residual<R>(const PointConfig<R>&, const DerivSlots<R>&, int);               \
  template CompatibilityResidual<R> compatibility<R>(const PointConfig<R>&, const DerivSlots<R>&, const R&,  \
                                                     const R&);                                              \
  template R restricted_aux_curvature_im<R>(const PointConfig<R>&);                                          \
  template Cx<R> restricted_aux_curvature<R>(const PointConfig<R>&);                                         \
  template Spinor<R> curvature_from_killing<R>(const PointConfig<R>&, const DerivSlots<R>&, const Spinor<R>&); \
  template Spinor<R> curvature_from_lemma<R>(const PointConfig<R>&, const DerivSlots<R>&, const Spinor<R>&);   \
  template Spinor<R> spin_curvature_rhs<R>(const R&, const R&, const Cx<R>&, const Spinor<R>&, int);         \
  template FormT<R> assemble_T_lagrangian<R>(const PointConfig<R>&, const DerivSlots<R>&, const R&, const R&); \
  template FormT<R> assemble_T_complex<R>(const PointConfig<R>&, const DerivSlots<R>&, const R&, const R&);

CPSPIN_INSTANTIATE(double)
CPSPIN_INSTANTIATE(Rational)

}  // namespace cpspin
