#include <doctest.h>

#include "cpspin/clifford.hpp"
#include "cpspin/random.hpp"
#include "cpspin/structures.hpp"
#include "oracle.hpp"

using namespace cpspin;
using Q = Rational;
using SpQ = Spinor<Q>;

namespace {

SpQ basis_spinor(int k) {
  SpQ s = SpQ::Zero();
  s(k) = GaussQ(1);
  return s;
}

Eigen::Matrix4cd to_cd(const oracle::Mat& m) {
  Eigen::Matrix4cd out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out(i, j) = {to_double(m(i, j).re), to_double(m(i, j).im)};
  return out;
}

}  // namespace

TEST_CASE("vector actions match the Kronecker matrices") {
  for (int a = 0; a < 2; ++a)
    for (int k = 0; k < 4; ++k) {
      const SpQ s = basis_spinor(k);
      CHECK(tangent_mul<Q>(basis2<Q>(a), s) == SpQ(oracle::e(a) * s));
      CHECK(normal_mul<Q>(basis2<Q>(a), s) == SpQ(oracle::nu(a) * s));
    }
  for (int a = 0; a < 2; ++a) {
    CHECK((tangent_gamma(a) - to_cd(oracle::e(a))).norm() == 0.0);
    CHECK((normal_gamma(a) - to_cd(oracle::nu(a))).norm() == 0.0);
  }
}

TEST_CASE("double and rational actions agree") {
  const SpQ phi = random_spinor(3);
  Spinor<double> phid;
  for (int k = 0; k < 4; ++k) phid(k) = {to_double(phi(k).re), to_double(phi(k).im)};
  const Vec2<double> X(0.25, -1.5);
  const Spinor<double> lhs = tangent_mul<double>(X, phid);
  const SpQ rq = tangent_mul<Q>(Vec2<Q>(Q(1, 4), Q(-3, 2)), phi);
  for (int k = 0; k < 4; ++k) {
    CHECK(lhs(k).real() == doctest::Approx(to_double(rq(k).re)));
    CHECK(lhs(k).imag() == doctest::Approx(to_double(rq(k).im)));
  }
}

TEST_CASE("Clifford relation v.w + w.v = -2<v,w> on random exact vectors") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SpQ phi = random_spinor(stream_seed(seed, 0));
    const Vec2<Q> a = random_vec2(stream_seed(seed, 1)), b = random_vec2(stream_seed(seed, 2)),
                  c = random_vec2(stream_seed(seed, 3)), d = random_vec2(stream_seed(seed, 4));
    AmbientVec<Q> v, w;
    v << a(0), a(1), b(0), b(1);
    w << c(0), c(1), d(0), d(1);
    const SpQ lhs = ambient_mul<Q>(v, ambient_mul<Q>(w, phi)) + ambient_mul<Q>(w, ambient_mul<Q>(v, phi));
    CHECK(lhs == scaled<Q>(Q(-2) * v.dot(w), phi));
  }
}

TEST_CASE("volume elements and gradings") {
  const SpQ phi = random_spinor(11);
  // i e1.e2 acts as +1 on m = +, -1 on m = -
  const SpQ wt = omega_tangent<Q>(phi);
  CHECK(wt(kPP) == phi(kPP));
  CHECK(wt(kPM) == phi(kPM));
  CHECK(wt(kMP) == -phi(kMP));
  CHECK(wt(kMM) == -phi(kMM));
  const SpQ wn = omega_normal<Q>(phi);
  CHECK(wn(kPP) == phi(kPP));
  CHECK(wn(kPM) == -phi(kPM));
  // total grading: phi^+ lives on (+,+) and (-,-)
  const SpQ plus = positive_part<Q>(phi);
  CHECK(plus(kPM) == GaussQ(0));
  CHECK(plus(kMP) == GaussQ(0));
  CHECK(plus(kPP) == phi(kPP));
  CHECK(conjugate<Q>(phi) == SpQ(oracle::bar(phi)));
}

TEST_CASE("vectors act antihermitian and odd") {
  const SpQ phi = random_spinor(5), psi = random_spinor(6);
  for (int a = 0; a < 2; ++a) {
    const Vec2<Q> x = basis2<Q>(a);
    CHECK(hermitian<Q>(tangent_mul<Q>(x, phi), psi) == -hermitian<Q>(phi, tangent_mul<Q>(x, psi)));
    CHECK(hermitian<Q>(normal_mul<Q>(x, phi), psi) == -hermitian<Q>(phi, normal_mul<Q>(x, psi)));
    CHECK(conjugate<Q>(tangent_mul<Q>(x, phi)) == -tangent_mul<Q>(x, conjugate<Q>(phi)));
  }
  CHECK(hermitian<Q>(phi, psi) == oracle::herm(phi, psi));
  CHECK(norm2<Q>(phi) == oracle::herm(phi, phi).re);
}

TEST_CASE("form action is the sum of its wedge terms") {
  FormT<Q> T;
  T.t_tangent = Q(2, 3);
  T.t_normal = Q(-5);
  T.t_mixed << Q(1), Q(-1, 2), Q(3), Q(7, 4);
  const SpQ phi = random_spinor(8);
  oracle::Mat M = oracle::e(0) * oracle::e(1) * GaussQ(T.t_tangent) + oracle::nu(0) * oracle::nu(1) * GaussQ(T.t_normal);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) M += oracle::e(i) * oracle::nu(j) * GaussQ(T.t_mixed(i, j));
  CHECK(form_action(T, phi) == SpQ(M * phi));
  CHECK(mixed_mul<Q>(1, 0, phi) == SpQ(oracle::e(1) * oracle::nu(0) * phi));
}

TEST_CASE("max_abs is exact") {
  SpQ s = SpQ::Zero();
  CHECK(max_abs<Q>(s) == 0);
  s(2) = GaussQ(Q(-1, 3), Q(1, 6));
  CHECK(max_abs<Q>(s) == Q(1, 2));
}
