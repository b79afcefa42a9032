#pragma once

#include <complex>
#include <ostream>
#include <type_traits>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace cpspin {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

// a + b i with a, b rational. Closed under the four field operations.
struct GaussQ {
  Rational re{0};
  Rational im{0};

  GaussQ() = default;
  GaussQ(int a) : re(a) {}  // NOLINT: Eigen builds literals from int
  GaussQ(const Rational& a) : re(a) {}  // NOLINT
  GaussQ(Rational a, Rational b) : re(std::move(a)), im(std::move(b)) {}

  GaussQ& operator+=(const GaussQ& o) { re += o.re; im += o.im; return *this; }
  GaussQ& operator-=(const GaussQ& o) { re -= o.re; im -= o.im; return *this; }
  GaussQ& operator*=(const GaussQ& o) {
    Rational r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  GaussQ& operator/=(const GaussQ& o) {
    Rational d = o.re * o.re + o.im * o.im;
    Rational r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }
  friend GaussQ operator+(GaussQ a, const GaussQ& b) { return a += b; }
  friend GaussQ operator-(GaussQ a, const GaussQ& b) { return a -= b; }
  friend GaussQ operator*(GaussQ a, const GaussQ& b) { return a *= b; }
  friend GaussQ operator/(GaussQ a, const GaussQ& b) { return a /= b; }
  friend GaussQ operator-(const GaussQ& a) { return {-a.re, -a.im}; }
  friend bool operator==(const GaussQ& a, const GaussQ& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussQ& a, const GaussQ& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const GaussQ& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

template <class R> struct ComplexOf;
template <> struct ComplexOf<double> { using type = std::complex<double>; };
template <> struct ComplexOf<Rational> { using type = GaussQ; };

template <class R> using Cx = typename ComplexOf<R>::type;

inline Rational conj(const Rational& r) { return r; }
inline GaussQ conj(const GaussQ& z) { return {z.re, -z.im}; }
inline const Rational& real(const GaussQ& z) { return z.re; }
inline const Rational& imag(const GaussQ& z) { return z.im; }
inline double real(const std::complex<double>& z) { return z.real(); }
inline double imag(const std::complex<double>& z) { return z.imag(); }
inline std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }

template <class R> Cx<R> make_cx(const R& re, const R& im = R(0)) { return Cx<R>(re, im); }
template <class R> Cx<R> imag_unit() { return Cx<R>(R(0), R(1)); }

inline Rational abs_real(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline double abs_real(double r) { return r < 0 ? -r : r; }

// |re| + |im|, a cheap magnitude that is exact on rationals.
template <class R> R abs1(const Cx<R>& z) { return abs_real(R(real(z))) + abs_real(R(imag(z))); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(double r) { return r; }

inline bool is_zero(const Rational& r) { return r == 0; }
inline bool is_zero(const GaussQ& z) { return z.re == 0 && z.im == 0; }

template <class R> constexpr bool is_exact_v = std::is_same_v<R, Rational>;

}  // namespace cpspin

namespace Eigen {
template <> struct NumTraits<cpspin::GaussQ> : GenericNumTraits<cpspin::GaussQ> {
  using Real = cpspin::GaussQ;
  using NonInteger = cpspin::GaussQ;
  using Nested = cpspin::GaussQ;
  using Literal = cpspin::GaussQ;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
