#include "cpspin/cp2.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/AutoDiff>

namespace cpspin {

Mat4d fs_metric(const FSChart& chart, const Vec4d& x) {
  if (!(chart.c > 0)) throw std::invalid_argument("chart curvature scale must be positive");
  return fs_metric_t<double>(x, chart.c);
}

Mat4d ambient_J(const FSChart&, const Vec4d&) {
  Mat4d J = Mat4d::Zero();
  J(1, 0) = 1;
  J(0, 1) = -1;
  J(3, 2) = 1;
  J(2, 3) = -1;
  return J;
}

namespace {

// dg[k](i, j) = d_k g_ij
Christoffel from_metric_derivatives(const Mat4d& g, const std::array<Mat4d, 4>& dg) {
  const Mat4d gi = g.inverse();
  Christoffel G;
  for (int a = 0; a < 4; ++a) {
    G[a].setZero();
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0;
        for (int l = 0; l < 4; ++l) s += gi(a, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        G[a](i, j) = 0.5 * s;
      }
  }
  return G;
}

void check_step(const Vec4d& x, double step) {
  if (!(step > 0)) throw std::invalid_argument("finite-difference step must be positive");
  for (int k = 0; k < 4; ++k)
    if (x(k) + step == x(k) || x(k) - step == x(k)) throw std::domain_error("finite-difference step lost to rounding");
}

}  // namespace

Christoffel christoffels(const FSChart& chart, const Vec4d& x, double step) {
  check_step(x, step);
  std::array<Mat4d, 4> dg;
  for (int k = 0; k < 4; ++k) {
    const Vec4d d = Vec4d::Unit(k) * step;
    dg[k] = (fs_metric(chart, x + d) - fs_metric(chart, x - d)) / (2 * step);
  }
  return from_metric_derivatives(fs_metric(chart, x), dg);
}

Christoffel christoffels_exact(const FSChart& chart, const Vec4d& x) {
  using AD = Eigen::AutoDiffScalar<Eigen::Vector4d>;
  Eigen::Matrix<AD, 4, 1> xa;
  for (int k = 0; k < 4; ++k) xa(k) = AD(x(k), 4, k);
  const Eigen::Matrix<AD, 4, 4> ga = fs_metric_t<AD>(xa, chart.c);
  Mat4d g;
  std::array<Mat4d, 4> dg;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      g(i, j) = ga(i, j).value();
      for (int k = 0; k < 4; ++k) dg[k](i, j) = ga(i, j).derivatives()(k);
    }
  return from_metric_derivatives(g, dg);
}

Vec4d contract(const Christoffel& G, const Vec4d& X, const Vec4d& Y) {
  Vec4d out;
  for (int a = 0; a < 4; ++a) out(a) = X.dot(G[a] * Y);
  return out;
}

double kahler_defect(const FSChart& chart, const Vec4d& x, double step) {
  const Christoffel G = step > 0 ? christoffels(chart, x, step) : christoffels_exact(chart, x);
  const Mat4d J = ambient_J(chart, x);
  double worst = 0;
  for (int k = 0; k < 4; ++k) {
    // Gamma_k(a, m) = Gamma^a_km
    Mat4d Gk;
    for (int a = 0; a < 4; ++a) Gk.row(a) = G[a].row(k);
    worst = std::max(worst, (Gk * J - J * Gk).cwiseAbs().maxCoeff());
  }
  return worst;
}

double curvature_formula(const Mat4d& g, const Mat4d& J, double c, const Vec4d& X, const Vec4d& Y, const Vec4d& Z,
                         const Vec4d& W) {
  return curvature_formula_t<double>(g, J, c, X, Y, Z, W);
}

double riemann_numeric(const FSChart& chart, const Vec4d& x, const Vec4d& X, const Vec4d& Y, const Vec4d& Z,
                       const Vec4d& W, double step) {
  check_step(x, step);
  const Christoffel G = christoffels_exact(chart, x);
  std::array<Christoffel, 4> dG;
  for (int k = 0; k < 4; ++k) {
    const Vec4d d = Vec4d::Unit(k) * step;
    const Christoffel p = christoffels_exact(chart, x + d), m = christoffels_exact(chart, x - d);
    for (int a = 0; a < 4; ++a) dG[k][a] = (p[a] - m[a]) / (2 * step);
  }
  // (R(X,Y)Z)^l
  Vec4d RZ = Vec4d::Zero();
  for (int l = 0; l < 4; ++l)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
          const double w = X(i) * Y(j) * Z(k);
          if (w == 0) continue;
          double r = dG[i][l](j, k) - dG[j][l](i, k);
          for (int m = 0; m < 4; ++m) r += G[l](i, m) * G[m](j, k) - G[l](j, m) * G[m](i, k);
          RZ(l) += r * w;
        }
  return RZ.dot(fs_metric(chart, x) * W);
}

double holomorphic_sectional_numeric(const FSChart& chart, const Vec4d& x, const Vec4d& X, double step) {
  const Mat4d g = fs_metric(chart, x);
  const Vec4d JX = ambient_J(chart, x) * X;
  const double n2 = X.dot(g * X);
  return riemann_numeric(chart, x, X, JX, JX, X, step) / (n2 * n2);
}

}  // namespace cpspin
