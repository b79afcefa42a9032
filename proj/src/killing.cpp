#include "cpspin/killing.hpp"

namespace cpspin {

namespace {

template <class R> Spinor<R> T(const TangentVec<R>& X, const Spinor<R>& phi) { return tangent_mul<R>(X, phi); }
template <class R> Spinor<R> N(const NormalVec<R>& xi, const Spinor<R>& phi) { return normal_mul<R>(xi, phi); }
template <class R> Spinor<R> S(const R& r, const Spinor<R>& phi) { return scaled<R>(r, phi); }
template <class R> Spinor<R> I(const Spinor<R>& phi) { return times_i<R>(phi); }
template <class R> TangentVec<R> e(int k) { return basis2<R>(k); }

template <class R> const R& half() {
  static const R h = R(1) / R(2);
  return h;
}
template <class R> const R& quarter() {
  static const R q = R(1) / R(4);
  return q;
}

}  // namespace

template <class R> Spinor<R> killing_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi) {
  const Spinor<R> bar = conjugate<R>(phi);
  Spinor<R> out = eta_mul<R>(cfg, X, phi) + T<R>(X, phi);
  out = S<R>(R(-half<R>()), out);
  out += S<R>(half<R>(), I<R>(T<R>(cfg.j(X), bar) + N<R>(cfg.hmap(X), bar)));
  return out;
}

template <class R> Spinor<R> nabla_bar_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi) {
  const Spinor<R> bar = conjugate<R>(phi);
  Spinor<R> out = S<R>(R(-half<R>()), eta_mul<R>(cfg, X, bar));
  out += S<R>(half<R>(), T<R>(X, bar));
  out -= S<R>(half<R>(), I<R>(T<R>(cfg.j(X), phi) + N<R>(cfg.hmap(X), phi)));
  return out;
}

template <class R>
std::pair<Spinor<R>, Spinor<R>> projected_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi) {
  const Spinor<R> pp = positive_part<R>(phi), pm = negative_part<R>(phi);
  auto half_line = [&](const Spinor<R>& same, const Spinor<R>& other, int sign) {
    Spinor<R> out = S<R>(R(-half<R>()), eta_mul<R>(cfg, X, same) + T<R>(X, other));
    Spinor<R> jh = I<R>(T<R>(cfg.j(X), other) + N<R>(cfg.hmap(X), other));
    out += S<R>(R(sign) * half<R>(), jh);
    return out;
  };
  return {half_line(pp, pm, -1), half_line(pm, pp, +1)};
}

template <class R>
Spinor<R> a_term(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int k, Order order, const Spinor<R>& phi) {
  if (k < 1 || k > 10) throw std::out_of_range("a_term index must be in 1..10");
  const int a = order == Order::e1e2 ? 0 : 1;
  const int b = 1 - a;
  const TangentVec<R> X = e<R>(a), Y = e<R>(b);
  const TangentVec<R> jX = cfg.j(X), jY = cfg.j(Y);
  const NormalVec<R> hX = cfg.hmap(X), hY = cfg.hmap(Y);
  const Spinor<R> bar = conjugate<R>(phi);
  auto eta = [&](const TangentVec<R>& Z, const Spinor<R>& p) { return eta_mul<R>(cfg, Z, p); };
  const R& q = quarter<R>();
  switch (k) {
    case 1: {
      // nabla_{e_a}(eta(e_b)) = sum_k e_k . (nabla'_{e_a} B)(e_k, e_b) in a normal frame
      Spinor<R> deta = Spinor<R>::Zero();
      for (int kk = 0; kk < 2; ++kk) deta += T<R>(e<R>(kk), N<R>(deriv(a, kk, b), phi));
      Spinor<R> out = S<R>(R(-half<R>()), deta);
      out += S<R>(q, eta(Y, eta(X, phi)) + T<R>(Y, T<R>(X, phi)));
      return out;
    }
    case 2: return S<R>(q, eta(Y, T<R>(X, phi)) + T<R>(Y, eta(X, phi)));
    case 3: {
      Spinor<R> out = T<R>(nabla_j<R>(cfg, a, b), bar) + N<R>(nabla_h<R>(cfg, a, b), bar);
      return S<R>(half<R>(), I<R>(out));
    }
    case 4: return S<R>(q, I<R>(T<R>(jY, T<R>(X, bar)) - T<R>(Y, T<R>(jX, bar))));
    case 5: return S<R>(q, I<R>(N<R>(hY, T<R>(X, bar)) - T<R>(Y, N<R>(hX, bar))));
    case 6: return S<R>(q, T<R>(jY, T<R>(jX, phi)));
    case 7: return S<R>(q, N<R>(hY, N<R>(hX, phi)));
    case 8: return S<R>(q, T<R>(jY, N<R>(hX, phi)) + N<R>(hY, T<R>(jX, phi)));
    case 9: return S<R>(R(-q), I<R>(eta(Y, N<R>(hX, bar)) + N<R>(hY, eta(X, bar))));
    case 10: return S<R>(R(-q), I<R>(eta(Y, T<R>(jX, bar)) + T<R>(jY, eta(X, bar))));
  }
  return Spinor<R>::Zero();
}

namespace {

template <class R>
Spinor<R> a_diff(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int k, const Spinor<R>& phi) {
  return a_term<R>(cfg, deriv, k, Order::e1e2, phi) - a_term<R>(cfg, deriv, k, Order::e2e1, phi);
}

template <class R> Spinor<R> e1e2(const Spinor<R>& phi) { return T<R>(e<R>(0), T<R>(e<R>(1), phi)); }
template <class R> Spinor<R> n1n2(const Spinor<R>& phi) { return N<R>(e<R>(0), N<R>(e<R>(1), phi)); }

}  // namespace

template <class R>
Spinor<R> lemma_lhs(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int item, const Spinor<R>& phi) {
  switch (item) {
    case 1: return a_diff<R>(cfg, deriv, 2, phi);
    case 2: return a_diff<R>(cfg, deriv, 5, phi);
    case 3: return a_diff<R>(cfg, deriv, 3, phi) + a_diff<R>(cfg, deriv, 9, phi) + a_diff<R>(cfg, deriv, 10, phi);
    case 4: return a_diff<R>(cfg, deriv, 6, phi);
    case 5: return a_diff<R>(cfg, deriv, 7, phi);
    case 6: return a_diff<R>(cfg, deriv, 4, phi);
    case 7: return a_diff<R>(cfg, deriv, 8, phi);
    case 8: return a_diff<R>(cfg, deriv, 1, phi);
  }
  throw std::out_of_range("lemma item must be in 1..8");
}

template <class R>
Spinor<R> lemma_rhs(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int item, const Spinor<R>& phi) {
  const Mat2<R>& h = cfg.h;
  switch (item) {
    case 1:
    case 2:
    case 3: return Spinor<R>::Zero();
    case 4: return S<R>(R(-half<R>() * cfg.j12 * cfg.j12), e1e2<R>(phi));
    case 5: return S<R>(R(half<R>() * (h(1, 0) * h(0, 1) - h(0, 0) * h(1, 1))), n1n2<R>(phi));
    case 6: return S<R>(cfg.j12, I<R>(conjugate<R>(phi)));
    case 7: {
      Spinor<R> out = Spinor<R>::Zero();
      for (int i = 0; i < 2; ++i)
        for (int l = 0; l < 2; ++l)
          if (h(i, l) != R(0)) out += S<R>(h(i, l), mixed_mul<R>(i, l, phi));
      return S<R>(R(-half<R>() * cfg.j12), out);
    }
    case 8: {
      Spinor<R> cod = Spinor<R>::Zero();
      for (int j = 0; j < 2; ++j) cod += T<R>(e<R>(j), N<R>(NormalVec<R>(deriv(0, 1, j) - deriv(1, 0, j)), phi));
      const R gauss_part = cfg.B12.squaredNorm() - cfg.B11.dot(cfg.B22) - R(1);
      Spinor<R> out = S<R>(R(-half<R>()), cod);
      out += S<R>(R(half<R>() * normal_bracket<R>(cfg)), n1n2<R>(phi));
      out += S<R>(R(half<R>() * gauss_part), e1e2<R>(phi));
      return out;
    }
  }
  throw std::out_of_range("lemma item must be in 1..8");
}

template <class R>
Spinor<R> lemma_item(const PointConfig<R>& cfg, const DerivSlots<R>& deriv, int item, const Spinor<R>& phi) {
  return lemma_lhs<R>(cfg, deriv, item, phi) - lemma_rhs<R>(cfg, deriv, item, phi);
}

template <class R> Spinor<R> item7_printed_rhs(const PointConfig<R>& cfg, const Spinor<R>& phi) {
  const Mat2<R>& h = cfg.h;
  const R j21 = -cfg.j12;
  Spinor<R> out = S<R>(R(j21 * h(0, 0)), mixed_mul<R>(0, 0, phi));
  out += S<R>(R(j21 * h(0, 1)), mixed_mul<R>(0, 1, phi));
  out += S<R>(R(j21 * h(1, 0)), mixed_mul<R>(1, 0, phi));
  out += S<R>(R(cfg.j12 * h(1, 1)), mixed_mul<R>(1, 1, phi));
  return S<R>(half<R>(), out);
}

template <class R> Spinor<R> eta_c_mul(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi) {
  return S<R>(R(-half<R>()), eta_mul<R>(cfg, X, phi));
}

template <class R> Spinor<R> eta_differential(const PointConfig<R>& /*cfg*/, const DerivSlots<R>& deriv, const Spinor<R>& phi) {
  // d eta_c(e1, e2) = nabla_{e1}(eta_c(e2)) - nabla_{e2}(eta_c(e1)), frame normal
  Spinor<R> lhs = Spinor<R>::Zero();
  for (int k = 0; k < 2; ++k) {
    lhs += T<R>(e<R>(k), N<R>(deriv(0, k, 1), phi));
    lhs -= T<R>(e<R>(k), N<R>(deriv(1, k, 0), phi));
  }
  lhs = S<R>(R(-half<R>()), lhs);
  Spinor<R> rhs = Spinor<R>::Zero();
  for (int j = 0; j < 2; ++j) rhs += T<R>(e<R>(j), N<R>(NormalVec<R>(deriv(0, 1, j) - deriv(1, 0, j)), phi));
  rhs = S<R>(R(-half<R>()), rhs);
  return lhs - rhs;
}

template <class R> Spinor<R> eta_commutator(const PointConfig<R>& cfg, const Spinor<R>& phi) {
  auto ec = [&](int k, const Spinor<R>& p) { return eta_c_mul<R>(cfg, e<R>(k), p); };
  Spinor<R> lhs = ec(1, ec(0, phi)) - ec(0, ec(1, phi));
  Spinor<R> rhs = S<R>(R(half<R>() * (cfg.B12.squaredNorm() - cfg.B11.dot(cfg.B22))), e1e2<R>(phi));
  rhs += S<R>(R(half<R>() * normal_bracket<R>(cfg)), n1n2<R>(phi));
  return lhs - rhs;
}

template <class R> Spinor<R> dirac_from_killing(const PointConfig<R>& cfg, const Spinor<R>& phi) {
  Spinor<R> out = Spinor<R>::Zero();
  for (int i = 0; i < 2; ++i) out += T<R>(e<R>(i), killing_rhs<R>(cfg, e<R>(i), phi));
  return out;
}

template <class R> Spinor<R> tangent_volume_of_bar(const Spinor<R>& phi) { return omega_tangent<R>(conjugate<R>(phi)); }

template <class R> Spinor<R> dirac_closed_form(const PointConfig<R>& cfg, const Spinor<R>& phi, int eps) {
  const Spinor<R> bar = conjugate<R>(phi);
  Spinor<R> out = N<R>(mean_curvature<R>(cfg), phi);
  out += S<R>(R(eps), phi);
  out += S<R>(half<R>(), I<R>(beta_mul<R>(cfg, bar)));
  out += S<R>(cfg.j12, tangent_volume_of_bar<R>(phi));
  return out;
}

namespace {

template <class R> void require_both_halves(const Spinor<R>& pp, const Spinor<R>& pm) {
  if (norm2<R>(pp) == R(0) || norm2<R>(pm) == R(0))
    throw DegenerateSpinor("recover_B needs phi^+ and phi^- both nonzero");
}

}  // namespace

template <class R>
R recover_B(const PointConfig<R>& cfg, const Spinor<R>& phi, const TangentVec<R>& X, const TangentVec<R>& Y,
            const NormalVec<R>& xi) {
  const Spinor<R> pp = positive_part<R>(phi), pm = negative_part<R>(phi);
  require_both_halves<R>(pp, pm);
  const Spinor<R> nab = killing_rhs<R>(cfg, Y, phi);
  R total(0);
  for (int sign : {+1, -1}) {
    const Spinor<R>& same = sign > 0 ? pp : pm;
    const Spinor<R>& other = sign > 0 ? pm : pp;
    const Spinor<R> nab_half = sign > 0 ? positive_part<R>(nab) : negative_part<R>(nab);
    Spinor<R> w = T<R>(Y, other) + S<R>(R(sign), I<R>(T<R>(cfg.j(Y), other) + N<R>(cfg.hmap(Y), other)));
    Spinor<R> v = T<R>(X, nab_half) + S<R>(half<R>(), T<R>(X, w));
    total += R(real(hermitian<R>(v, N<R>(xi, same)))) / norm2<R>(same);
  }
  return total;
}

template <class R>
R recover_B_printed(const PointConfig<R>& cfg, const Spinor<R>& phi, const TangentVec<R>& X, const TangentVec<R>& Y,
                    const NormalVec<R>& xi) {
  const Spinor<R> pp = positive_part<R>(phi), pm = negative_part<R>(phi);
  require_both_halves<R>(pp, pm);
  const Spinor<R> nab = killing_rhs<R>(cfg, Y, phi);
  R total(0);
  for (int sign : {+1, -1}) {
    const Spinor<R>& same = sign > 0 ? pp : pm;
    const Spinor<R>& other = sign > 0 ? pm : pp;
    const Spinor<R> nab_half = sign > 0 ? positive_part<R>(nab) : negative_part<R>(nab);
    const Spinor<R> Yo = T<R>(Y, other);
    Spinor<R> w = T<R>(X, Yo) + S<R>(R(sign), I<R>(T<R>(cfg.j(X), Yo) + N<R>(cfg.hmap(X), Yo)));
    Spinor<R> v = T<R>(X, nab_half) - S<R>(half<R>(), w);
    total += R(real(hermitian<R>(v, N<R>(xi, same)))) / norm2<R>(same);
  }
  return total;
}

template <class R>
std::pair<R, R> norm_derivative_rhs(const PointConfig<R>& cfg, const TangentVec<R>& X, const Spinor<R>& phi) {
  const Spinor<R> pp = positive_part<R>(phi), pm = negative_part<R>(phi);
  auto slot = [&](const Spinor<R>& same, const Spinor<R>& other, int sign) {
    Spinor<R> v = S<R>(R(-half<R>()), T<R>(X, other));
    v -= S<R>(R(R(sign) * half<R>()), I<R>(T<R>(cfg.j(X), other) + N<R>(cfg.hmap(X), other)));
    return R(2) * R(real(hermitian<R>(v, same)));
  };
  return {slot(pp, pm, +1), slot(pm, pp, -1)};
}

#define CPSPIN_INSTANTIATE(R)                                                                                        \
  template Spinor<R> killing_rhs<R>(const PointConfig<R>&, const TangentVec<R>&, const Spinor<R>&);                  \
  template Spinor<R> nabla_bar_rhs<R>(const PointConfig<R>&, const TangentVec<R>&, const Spinor<R>&);                \
  template std::pair<Spinor<R>, Spinor<R>> projected_rhs<R>(const PointConfig<R>&, const TangentVec<R>&,              \
                                                            const Spinor<R>&);                                       \
  template Spinor<R> a_term<R>(const PointConfig<R>&, const DerivSlots<R>&, int, Order, const Spinor<R>&);           \
  template Spinor<R> lemma_lhs<R>(const PointConfig<R>&, const DerivSlots<R>&, int, const Spinor<R>&);               \
  template Spinor<R> lemma_rhs<R>(const PointConfig<R>&, const DerivSlots<R>&, int, const Spinor<R>&);               \
  template Spinor<R> lemma_item<R>(const PointConfig<R>&, const DerivSlots<R>&, int, const Spinor<R>&);              \
  template Spinor<R> item7_printed_rhs<R>(const PointConfig<R>&, const Spinor<R>&);                                  \
  template Spinor<R> eta_c_mul<R>(const PointConfig<R>&, const TangentVec<R>&, const Spinor<R>&);                    \
  template Spinor<R> eta_differential<R>(const PointConfig<R>&, const DerivSlots<R>&, const Spinor<R>&);                     \
  template Spinor<R> eta_commutator<R>(const PointConfig<R>&, const Spinor<R>&);                                     \
  template Spinor<R> dirac_from_killing<R>(const PointConfig<R>&, const Spinor<R>&);                                 \
  template Spinor<R> dirac_closed_form<R>(const PointConfig<R>&, const Spinor<R>&, int);                             \
  template Spinor<R> tangent_volume_of_bar<R>(const Spinor<R>&);                                                     \
  template R recover_B<R>(const PointConfig<R>&, const Spinor<R>&, const TangentVec<R>&, const TangentVec<R>&,       \
                          const NormalVec<R>&);                                                                      \
  template R recover_B_printed<R>(const PointConfig<R>&, const Spinor<R>&, const TangentVec<R>&,                     \
                                  const TangentVec<R>&, const NormalVec<R>&);                                        \
  template std::pair<R, R> norm_derivative_rhs<R>(const PointConfig<R>&, const TangentVec<R>&, const Spinor<R>&);

CPSPIN_INSTANTIATE(double)
CPSPIN_INSTANTIATE(Rational)

}  // namespace cpspin
