#pragma once

#include <array>
#include <string>
#include <vector>

#include "cpspin/cp2.hpp"
#include "cpspin/integrability.hpp"

namespace cpspin {

enum class SurfaceKind { cp1, rp2, clifford_torus };

// Chart images, templated for automatic differentiation.
//   cp1:            (u, v, 0, 0)                          z -> (z, 0)
//   rp2:            (tan v, 0, tan u / cos v, 0)          [cos u cos v : cos u sin v : sin u]
//   clifford_torus: (cos u, sin u, cos v, sin v)          (e^{iu}, e^{iv})
template <class T> Eigen::Matrix<T, 4, 1> surface_map(SurfaceKind kind, const T& u, const T& v) {
  using std::cos;
  using std::sin;
  Eigen::Matrix<T, 4, 1> x;
  switch (kind) {
    case SurfaceKind::cp1: x << u, v, T(0.0 * u), T(0.0 * u); break;
    case SurfaceKind::rp2: x << T(sin(v) / cos(v)), T(0.0 * u), T(sin(u) / (cos(u) * cos(v))), T(0.0 * u); break;
    case SurfaceKind::clifford_torus: x << T(cos(u)), T(sin(u)), T(cos(v)), T(sin(v)); break;
  }
  return x;
}

struct SurfacePatch {
  std::string name;
  SurfaceKind kind = SurfaceKind::cp1;
  double u_min = -1, u_max = 1, v_min = -1, v_max = 1;
  int grid = 32;
  double fd_step = 1e-4;
};

// Accepts cp1, rp2, clifford_torus (or clifford-torus). Throws std::invalid_argument otherwise.
SurfacePatch builtin_surface(const std::string& name);

struct SurfaceJet {
  Vec4d x;
  Eigen::Matrix<double, 4, 2> dx;  // columns x_u, x_v
  std::array<Vec4d, 3> ddx;        // x_uu, x_uv, x_vv
  const Vec4d& second(int a, int b) const { return ddx[a + b]; }
};
SurfaceJet surface_jet(SurfaceKind kind, double u, double v);

struct AnalyzeOptions {
  bool richardson = false;
};

struct PointRecord {
  double u = 0, v = 0;
  bool degenerate = false;
  std::string note;
  double metric_condition = 0;
  double K_M = 0, K_N = 0;
  PointConfig<double> cfg;
  DerivSlots<double> deriv;
  CompatibilityResidual<double> compat;
  RelationResidual<double> relations;  // (1.1)..(1.5)
  std::array<double, 4> parallel{0, 0, 0, 0};  // (2.1)..(2.4)
  double B_norm = 0, H_norm = 0;
  double codazzi = 0;  // max over both slots
};

struct PatchAggregate {
  int points = 0;
  int degenerate = 0;
  double gauss = 0, ricci = 0, codazzi = 0;
  double relations = 0, parallel = 0;
  double B_norm = 0, H_norm = 0;
  double K_M_min = 0, K_M_max = 0, K_N_min = 0, K_N_max = 0;
  double j12_abs_min = 0, j12_abs_max = 0, t12_abs_max = 0;
  double metric_condition = 0;
};

struct PatchReport {
  std::string surface;
  int grid = 0;
  double fd_step = 0;
  bool richardson = false;
  std::vector<PointRecord> points;
  PatchAggregate agg;
};

PatchReport analyze_patch(const FSChart& chart, const SurfacePatch& patch, const AnalyzeOptions& opt = {});

// complex if |j12| stays within 1e-6 of 1, lagrangian if it stays below 1e-6.
std::string detected_case(const PatchReport& report);

}  // namespace cpspin
