#include "cpspin/clifford.hpp"

namespace cpspin {

Eigen::Matrix2cd gamma2(int a) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  if (a == 0)
    m << C(0), C(-1), C(1), C(0);
  else
    m << C(0), C(0, 1), C(0, 1), C(0);
  return m;
}

namespace {
Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  Eigen::Matrix4cd k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return k;
}
}  // namespace

Eigen::Matrix4cd tangent_gamma(int a) {
  Eigen::Matrix2cd om = Eigen::Matrix2cd::Zero();
  om(0, 0) = 1;
  om(1, 1) = -1;
  return kron2(gamma2(a), om);
}

Eigen::Matrix4cd normal_gamma(int b) { return kron2(Eigen::Matrix2cd::Identity(), gamma2(b)); }

template <class R> Spinor<R> tangent_mul(const TangentVec<R>& X, const Spinor<R>& phi) {
  // The sigma-bar of the twisted rule is the factor s_e below; it appears nowhere else.
  const Cx<R> up = make_cx<R>(R(-X(0)), X(1));
  const Cx<R> down = make_cx<R>(X(0), X(1));
  Spinor<R> out;
  for (int e = 0; e < 2; ++e) {
    Cx<R> a = up * phi(2 + e);
    Cx<R> b = down * phi(e);
    if (e == 1) {
      a = -a;
      b = -b;
    }
    out(e) = a;
    out(2 + e) = b;
  }
  return out;
}

template <class R> Spinor<R> normal_mul(const NormalVec<R>& xi, const Spinor<R>& phi) {
  const Cx<R> up = make_cx<R>(R(-xi(0)), xi(1));
  const Cx<R> down = make_cx<R>(xi(0), xi(1));
  Spinor<R> out;
  for (int m = 0; m < 2; ++m) {
    out(2 * m) = up * phi(2 * m + 1);
    out(2 * m + 1) = down * phi(2 * m);
  }
  return out;
}

template <class R> Spinor<R> ambient_mul(const AmbientVec<R>& v, const Spinor<R>& phi) {
  Spinor<R> a = tangent_mul<R>(v.template head<2>(), phi);
  a += normal_mul<R>(v.template tail<2>(), phi);
  return a;
}

template <class R> Spinor<R> conjugate(const Spinor<R>& phi) {
  Spinor<R> out = phi;
  out(kPM) = -phi(kPM);
  out(kMP) = -phi(kMP);
  return out;
}

template <class R> Spinor<R> positive_part(const Spinor<R>& phi) {
  Spinor<R> out = phi;
  out(kPM) = Cx<R>(0);
  out(kMP) = Cx<R>(0);
  return out;
}

template <class R> Spinor<R> negative_part(const Spinor<R>& phi) {
  Spinor<R> out = phi;
  out(kPP) = Cx<R>(0);
  out(kMM) = Cx<R>(0);
  return out;
}

template <class R> Cx<R> hermitian(const Spinor<R>& phi, const Spinor<R>& psi) {
  Cx<R> acc(0);
  for (int k = 0; k < 4; ++k) acc += phi(k) * conj(psi(k));
  return acc;
}

template <class R> R norm2(const Spinor<R>& phi) { return real(hermitian<R>(phi, phi)); }

template <class R> Spinor<R> times_i(const Spinor<R>& phi) {
  Spinor<R> out;
  for (int k = 0; k < 4; ++k) out(k) = make_cx<R>(R(-imag(phi(k))), real(phi(k)));
  return out;
}

template <class R> Spinor<R> scaled(const R& r, const Spinor<R>& phi) {
  Spinor<R> out;
  const Cx<R> c = make_cx<R>(r);
  for (int k = 0; k < 4; ++k) out(k) = c * phi(k);
  return out;
}

template <class R> Spinor<R> omega_tangent(const Spinor<R>& phi) {
  return times_i<R>(tangent_mul<R>(basis2<R>(0), tangent_mul<R>(basis2<R>(1), phi)));
}

template <class R> Spinor<R> omega_normal(const Spinor<R>& phi) {
  return times_i<R>(normal_mul<R>(basis2<R>(0), normal_mul<R>(basis2<R>(1), phi)));
}

template <class R> Spinor<R> mixed_mul(int i, int j, const Spinor<R>& phi) {
  return tangent_mul<R>(basis2<R>(i), normal_mul<R>(basis2<R>(j), phi));
}

template <class R> Spinor<R> form_action(const FormT<R>& T, const Spinor<R>& phi) {
  Spinor<R> out = scaled<R>(T.t_tangent, tangent_mul<R>(basis2<R>(0), tangent_mul<R>(basis2<R>(1), phi)));
  out += scaled<R>(T.t_normal, normal_mul<R>(basis2<R>(0), normal_mul<R>(basis2<R>(1), phi)));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (T.t_mixed(i, j) != R(0)) out += scaled<R>(T.t_mixed(i, j), mixed_mul<R>(i, j, phi));
  return out;
}

template <class R> R max_abs(const Spinor<R>& phi) {
  R m(0);
  for (int k = 0; k < 4; ++k) {
    R a = abs1<R>(phi(k));
    if (a > m) m = a;
  }
  return m;
}

#define CPSPIN_INSTANTIATE(R)                                                     \
  template Spinor<R> tangent_mul<R>(const TangentVec<R>&, const Spinor<R>&);      \
  template Spinor<R> normal_mul<R>(const NormalVec<R>&, const Spinor<R>&);        \
  template Spinor<R> ambient_mul<R>(const AmbientVec<R>&, const Spinor<R>&);      \
  template Spinor<R> conjugate<R>(const Spinor<R>&);                              \
  template Spinor<R> positive_part<R>(const Spinor<R>&);                          \
  template Spinor<R> negative_part<R>(const Spinor<R>&);                          \
  template Cx<R> hermitian<R>(const Spinor<R>&, const Spinor<R>&);                \
  template R norm2<R>(const Spinor<R>&);                                          \
  template Spinor<R> times_i<R>(const Spinor<R>&);                                \
  template Spinor<R> scaled<R>(const R&, const Spinor<R>&);                       \
  template Spinor<R> omega_tangent<R>(const Spinor<R>&);                          \
  template Spinor<R> omega_normal<R>(const Spinor<R>&);                           \
  template Spinor<R> mixed_mul<R>(int, int, const Spinor<R>&);                    \
  template Spinor<R> form_action<R>(const FormT<R>&, const Spinor<R>&);           \
  template R max_abs<R>(const Spinor<R>&);

CPSPIN_INSTANTIATE(double)
CPSPIN_INSTANTIATE(Rational)

}  // namespace cpspin
