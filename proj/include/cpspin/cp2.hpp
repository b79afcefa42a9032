#pragma once

#include <array>

#include <Eigen/Dense>

namespace cpspin {

// Affine chart {z0 != 0} of CP^2 with real coordinates x = (Re z1, Im z1, Re z2, Im z2).
struct FSChart {
  double c = 1.0;  // holomorphic sectional curvature is 4c
};

using Vec4d = Eigen::Vector4d;
using Mat4d = Eigen::Matrix4d;
// G[a](i, j) = Gamma^a_ij
using Christoffel = std::array<Mat4d, 4>;

// g = (1/c) Re h_FS,  h_FS(v, w) = (<v,w> (1+|z|^2) - (zbar.v) conj(zbar.w)) / (1+|z|^2)^2.
// With u_A = zbar.v_A for the real basis v_A, g_AB = (delta_AB r - <u_A, u_B>) / (c r^2), r = 1 + |z|^2.
template <class T> Eigen::Matrix<T, 4, 4> fs_metric_t(const Eigen::Matrix<T, 4, 1>& x, double c) {
  const T r = T(1) + x.squaredNorm();
  // real and imaginary parts of zbar.v_A
  const T ur[4] = {x(0), x(1), x(2), x(3)};
  const T ui[4] = {-x(1), x(0), -x(3), x(2)};
  Eigen::Matrix<T, 4, 4> g;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      T val = -(ur[a] * ur[b] + ui[a] * ui[b]);
      if (a == b) val += r;
      g(a, b) = val / (r * r * T(c));
    }
  return g;
}

Mat4d fs_metric(const FSChart& chart, const Vec4d& x);
// Multiplication by i in the chart; constant.
Mat4d ambient_J(const FSChart& chart, const Vec4d& x);

// Central differences of the metric.
Christoffel christoffels(const FSChart& chart, const Vec4d& x, double step = 1e-4);
// Forward-mode automatic differentiation of the metric.
Christoffel christoffels_exact(const FSChart& chart, const Vec4d& x);

// Gamma(X, Y)^a = Gamma^a_ij X^i Y^j
Vec4d contract(const Christoffel& G, const Vec4d& X, const Vec4d& Y);

// max |(nabla_k J)^a_b| with exact Christoffels, or fd ones when step > 0.
double kahler_defect(const FSChart& chart, const Vec4d& x, double step = 0.0);

// c [ <X,W><Y,Z> - <X,Z><Y,W> + <JX,W><JY,Z> - <JX,Z><JY,W> + 2 <X,JY><JZ,W> ]
template <class S>
S curvature_formula_t(const Eigen::Matrix<S, 4, 4>& g, const Eigen::Matrix<S, 4, 4>& J, const S& c,
                      const Eigen::Matrix<S, 4, 1>& X, const Eigen::Matrix<S, 4, 1>& Y, const Eigen::Matrix<S, 4, 1>& Z,
                      const Eigen::Matrix<S, 4, 1>& W) {
  auto ip = [&](const Eigen::Matrix<S, 4, 1>& a, const Eigen::Matrix<S, 4, 1>& b) { return S(a.dot(g * b)); };
  const Eigen::Matrix<S, 4, 1> JX = J * X, JY = J * Y, JZ = J * Z;
  return c * (ip(X, W) * ip(Y, Z) - ip(X, Z) * ip(Y, W) + ip(JX, W) * ip(JY, Z) - ip(JX, Z) * ip(JY, W) +
              S(2) * ip(X, JY) * ip(JZ, W));
}
double curvature_formula(const Mat4d& g, const Mat4d& J, double c, const Vec4d& X, const Vec4d& Y, const Vec4d& Z,
                         const Vec4d& W);

// R(X,Y,Z,W) = g(R(X,Y)Z, W) with R^l_ijk = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik,
// derivatives of the Christoffels by central differences. Throws if the step is lost to rounding.
double riemann_numeric(const FSChart& chart, const Vec4d& x, const Vec4d& X, const Vec4d& Y, const Vec4d& Z,
                       const Vec4d& W, double step = 1e-4);

// R(X, JX, JX, X) / |X|^4
double holomorphic_sectional_numeric(const FSChart& chart, const Vec4d& x, const Vec4d& X, double step = 1e-4);

}  // namespace cpspin
