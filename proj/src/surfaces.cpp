#include "cpspin/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <unsupported/Eigen/AutoDiff>

namespace cpspin {

SurfacePatch builtin_surface(const std::string& name) {
  SurfacePatch p;
  if (name == "cp1") {
    p.name = "cp1";
    p.kind = SurfaceKind::cp1;
    p.u_min = p.v_min = -1.0;
    p.u_max = p.v_max = 1.0;
  } else if (name == "rp2") {
    p.name = "rp2";
    p.kind = SurfaceKind::rp2;
    p.u_min = p.v_min = -0.6;
    p.u_max = p.v_max = 0.6;
  } else if (name == "clifford_torus" || name == "clifford-torus") {
    p.name = "clifford_torus";
    p.kind = SurfaceKind::clifford_torus;
    p.u_min = p.v_min = -3.0;
    p.u_max = p.v_max = 3.0;
  } else {
    throw std::invalid_argument("unknown surface: " + name);
  }
  return p;
}

SurfaceJet surface_jet(SurfaceKind kind, double u, double v) {
  using Inner = Eigen::AutoDiffScalar<Eigen::Vector2d>;
  using Outer = Eigen::AutoDiffScalar<Eigen::Matrix<Inner, 2, 1>>;
  Outer uo, vo;
  uo.value() = Inner(u, 2, 0);
  vo.value() = Inner(v, 2, 1);
  uo.derivatives() = Eigen::Matrix<Inner, 2, 1>(Inner(1.0, Eigen::Vector2d::Zero()), Inner(0.0, Eigen::Vector2d::Zero()));
  vo.derivatives() = Eigen::Matrix<Inner, 2, 1>(Inner(0.0, Eigen::Vector2d::Zero()), Inner(1.0, Eigen::Vector2d::Zero()));
  const Eigen::Matrix<Outer, 4, 1> X = surface_map<Outer>(kind, uo, vo);
  SurfaceJet jet;
  for (int k = 0; k < 4; ++k) {
    jet.x(k) = X(k).value().value();
    for (int a = 0; a < 2; ++a) {
      // an untouched derivative slot may come back empty
      const auto& d = X(k).derivatives();
      const Inner da = d.size() == 2 ? d(a) : Inner(0.0);
      jet.dx(k, a) = da.value();
      for (int b = a; b < 2; ++b) jet.ddx[a + b](k) = da.derivatives().size() == 2 ? da.derivatives()(b) : 0.0;
    }
  }
  return jet;
}

namespace {

using Pair = std::array<int, 2>;

Mat2<double> rot(double w) {
  Mat2<double> m;
  m << 0, -w, w, 0;
  return m;
}

struct Frame {
  bool ok = false;
  SurfaceJet jet;
  Mat4d g;
  Christoffel G;
  Vec4d e[2];
  Vec4d nu[2];
  Mat2<double> P;  // e_a = P(a,0) x_u + P(a,1) x_v
  double condition = 0;
};

double ip(const Mat4d& g, const Vec4d& a, const Vec4d& b) { return a.dot(g * b); }

Vec4d project_normal(const Mat4d& g, const Vec4d* e, Vec4d b) {
  for (int k = 0; k < 2; ++k) b -= ip(g, b, e[k]) * e[k];
  return b;
}

// Tangent frame by Gram-Schmidt on (x_u, x_v); normal frame by Gram-Schmidt on the projections of
// two chart axes, oriented so that (e1, e2, nu1, nu2) is positive in the chart.
Frame frame_at(const FSChart& chart, SurfaceKind kind, double u, double v, const Pair* pair) {
  Frame f;
  f.jet = surface_jet(kind, u, v);
  f.g = fs_metric(chart, f.jet.x);
  f.G = christoffels_exact(chart, f.jet.x);
  const Vec4d xu = f.jet.dx.col(0), xv = f.jet.dx.col(1);
  Mat2<double> gi;
  gi << ip(f.g, xu, xu), ip(f.g, xu, xv), ip(f.g, xu, xv), ip(f.g, xv, xv);
  Eigen::SelfAdjointEigenSolver<Mat2<double>> es(gi);
  const double lo = es.eigenvalues()(0), hi = es.eigenvalues()(1);
  f.condition = lo > 0 ? hi / lo : std::numeric_limits<double>::infinity();
  if (!(lo > 1e-10 * std::max(1.0, hi))) return f;
  const double n1 = std::sqrt(ip(f.g, xu, xu));
  f.e[0] = xu / n1;
  const double c12 = ip(f.g, xv, f.e[0]);
  const Vec4d w = xv - c12 * f.e[0];
  const double n2 = std::sqrt(ip(f.g, w, w));
  f.e[1] = w / n2;
  f.P << 1 / n1, 0, -c12 / (n1 * n2), 1 / n2;
  if (!pair) return f;
  for (int k = 0; k < 2; ++k) {
    Vec4d b = project_normal(f.g, f.e, Vec4d::Unit((*pair)[k]));
    for (int m = 0; m < k; ++m) b -= ip(f.g, b, f.nu[m]) * f.nu[m];
    const double nb = std::sqrt(ip(f.g, b, b));
    if (!(nb > 1e-6)) return f;
    f.nu[k] = b / nb;
  }
  Mat4d basis;
  basis << f.e[0], f.e[1], f.nu[0], f.nu[1];
  if (basis.determinant() < 0) f.nu[1] = -f.nu[1];
  f.ok = true;
  return f;
}

// Pair of chart axes whose normal projections span the best-conditioned frame at this point.
Pair choose_pair(const FSChart& chart, SurfaceKind kind, double u, double v) {
  const Frame f = frame_at(chart, kind, u, v, nullptr);
  Pair best{0, 1};
  double best_det = -1;
  Vec4d proj[4];
  for (int k = 0; k < 4; ++k) proj[k] = project_normal(f.g, f.e, Vec4d::Unit(k));
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      const double d = ip(f.g, proj[a], proj[a]) * ip(f.g, proj[b], proj[b]) - std::pow(ip(f.g, proj[a], proj[b]), 2);
      if (d > best_det) {
        best_det = d;
        best = {a, b};
      }
    }
  return best;
}

// Pointwise algebra in the frame: B components and the blocks of J.
PointConfig<double> point_config(const FSChart& chart, const Frame& f) {
  PointConfig<double> cfg;
  cfg.c = chart.c;
  const Vec4d fr[4] = {f.e[0], f.e[1], f.nu[0], f.nu[1]};
  const Mat4d J = ambient_J(chart, f.jet.x);
  Mat4<double> M;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) M(r, c) = ip(f.g, fr[r], J * fr[c]);
  cfg.j12 = M(1, 0);
  cfg.t12 = M(3, 2);
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) {
      cfg.h(k, l) = M(2 + l, k);
      cfg.s(l, k) = M(k, 2 + l);
    }
  // coordinate second fundamental form, then frame components
  Vec4d Bc[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      Bc[i][j] = f.jet.second(i, j) + contract(f.G, f.jet.dx.col(i), f.jet.dx.col(j));
  NormalVec<double> b[2][2];
  for (int a = 0; a < 2; ++a)
    for (int bb = 0; bb < 2; ++bb) {
      Vec4d w = Vec4d::Zero();
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) w += f.P(a, i) * f.P(bb, j) * Bc[i][j];
      b[a][bb] << ip(f.g, w, f.nu[0]), ip(f.g, w, f.nu[1]);
    }
  cfg.B11 = b[0][0];
  cfg.B12 = 0.5 * (b[0][1] + b[1][0]);
  cfg.B22 = b[1][1];
  const double j2 = cfg.j12 * cfg.j12;
  cfg.tag = std::abs(j2 - 1) < 1e-6 ? CaseTag::complex : (j2 < 1e-12 ? CaseTag::lagrangian : CaseTag::generic);
  return cfg;
}

// Quantities obtained by differentiation; these are what the Richardson pass extrapolates.
struct Raw {
  double K_M = 0, K_N = 0;
  DerivSlots<double> deriv;
  // nabla_{e_a} of the block matrices j, h, s, t
  std::array<Mat2<double>, 2> dj, dh, ds, dt;

  Raw combine(double wa, const Raw& o, double wb) const {
    Raw r;
    r.K_M = wa * K_M + wb * o.K_M;
    r.K_N = wa * K_N + wb * o.K_N;
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) r.deriv(a, b, c) = wa * deriv(a, b, c) + wb * o.deriv(a, b, c);
      r.dj[a] = wa * dj[a] + wb * o.dj[a];
      r.dh[a] = wa * dh[a] + wb * o.dh[a];
      r.ds[a] = wa * ds[a] + wb * o.ds[a];
      r.dt[a] = wa * dt[a] + wb * o.dt[a];
    }
    return r;
  }
};

class PointAnalyzer {
 public:
  PointAnalyzer(const FSChart& chart, SurfaceKind kind, double u, double v)
      : chart_(chart), kind_(kind), u_(u), v_(v), pair_(choose_pair(chart, kind, u, v)) {
    centre_ = frame_at(chart_, kind_, u_, v_, &pair_);
  }

  bool ok() const { return centre_.ok; }
  const Frame& centre() const { return centre_; }
  double condition() const { return centre_.condition; }

  Raw raw(double h) const {
    Raw r;
    const Mat2<double>& P = centre_.P;
    const auto th = connection(u_, v_, h, false), om = connection(u_, v_, h, true);
    r.K_M = curvature(h, false);
    r.K_N = curvature(h, true);
    // neighbour configurations for the frame-component derivatives
    PointConfig<double> cp[2], cm[2];
    for (int q = 0; q < 2; ++q) {
      cp[q] = config_at(u_ + (q == 0 ? h : 0), v_ + (q == 1 ? h : 0));
      cm[q] = config_at(u_ - (q == 0 ? h : 0), v_ - (q == 1 ? h : 0));
    }
    const PointConfig<double> cfg = point_config(chart_, centre_);
    for (int a = 0; a < 2; ++a) {
      const double tha = P(a, 0) * th[0] + P(a, 1) * th[1];
      const double oma = P(a, 0) * om[0] + P(a, 1) * om[1];
      const Mat2<double> Th = rot(tha), Om = rot(oma);
      auto along = [&](auto get) {
        using V = decltype(get(cfg));
        V d = V::Zero();
        for (int q = 0; q < 2; ++q) d += P(a, q) * (get(cp[q]) - get(cm[q])) / (2 * h);
        return d;
      };
      for (int bb = 0; bb < 2; ++bb)
        for (int k = 0; k < 2; ++k) {
          NormalVec<double> d = along([&](const PointConfig<double>& c) -> NormalVec<double> { return c.B(bb, k); });
          d += Om * cfg.B(bb, k);
          for (int m = 0; m < 2; ++m) d -= Th(m, bb) * cfg.B(m, k) + Th(m, k) * cfg.B(bb, m);
          r.deriv(a, bb, k) = d;
        }
      r.dj[a] = along([](const PointConfig<double>& c) -> Mat2<double> { return c.j_matrix(); });
      r.dt[a] = along([](const PointConfig<double>& c) -> Mat2<double> { return c.t_matrix(); });
      r.dh[a] = along([](const PointConfig<double>& c) -> Mat2<double> { return c.h_matrix(); }) + Om * cfg.h_matrix() -
                cfg.h_matrix() * Th;
      r.ds[a] = along([](const PointConfig<double>& c) -> Mat2<double> { return c.s_matrix(); }) + Th * cfg.s_matrix() -
                cfg.s_matrix() * Om;
    }
    return r;
  }

 private:
  Frame frame(double u, double v) const {
    Frame f = frame_at(chart_, kind_, u, v, &pair_);
    if (!f.ok) throw std::domain_error("degenerate frame in a difference stencil");
    return f;
  }

  PointConfig<double> config_at(double u, double v) const { return point_config(chart_, frame(u, v)); }

  // (theta_u, theta_v) with nabla e1 = theta e2, or (omega_u, omega_v) with nabla nu1 = omega nu2.
  std::array<double, 2> connection(double u, double v, double h, bool normal) const {
    const Frame f0 = frame(u, v);
    std::array<double, 2> out{};
    for (int q = 0; q < 2; ++q) {
      const Frame fp = frame(u + (q == 0 ? h : 0), v + (q == 1 ? h : 0));
      const Frame fm = frame(u - (q == 0 ? h : 0), v - (q == 1 ? h : 0));
      const Vec4d& a0 = normal ? f0.nu[0] : f0.e[0];
      const Vec4d& a1 = normal ? f0.nu[1] : f0.e[1];
      const Vec4d ap = normal ? fp.nu[0] : fp.e[0];
      const Vec4d am = normal ? fm.nu[0] : fm.e[0];
      const Vec4d d = (ap - am) / (2 * h) + contract(f0.G, f0.jet.dx.col(q), a0);
      out[q] = ip(f0.g, d, a1);
    }
    return out;
  }

  // -det(P) (d_u theta_v - d_v theta_u), likewise for omega.
  double curvature(double h, bool normal) const {
    const auto up = connection(u_ + h, v_, h, normal), um = connection(u_ - h, v_, h, normal);
    const auto vp = connection(u_, v_ + h, h, normal), vm = connection(u_, v_ - h, h, normal);
    const double d = (up[1] - um[1]) / (2 * h) - (vp[0] - vm[0]) / (2 * h);
    return -centre_.P.determinant() * d;
  }

  const FSChart& chart_;
  SurfaceKind kind_;
  double u_, v_;
  Pair pair_;
  Frame centre_;
};

double max_abs2(const Vec2<double>& v) { return v.cwiseAbs().maxCoeff(); }

}  // namespace

PatchReport analyze_patch(const FSChart& chart, const SurfacePatch& patch, const AnalyzeOptions& opt) {
  if (patch.grid < 2) throw std::invalid_argument("grid must be at least 2");
  if (!(patch.fd_step > 0)) throw std::invalid_argument("fd_step must be positive");
  PatchReport rep;
  rep.surface = patch.name;
  rep.grid = patch.grid;
  rep.fd_step = patch.fd_step;
  rep.richardson = opt.richardson;
  const double h = patch.fd_step;
  for (int iu = 0; iu < patch.grid; ++iu)
    for (int iv = 0; iv < patch.grid; ++iv) {
      PointRecord rec;
      rec.u = patch.u_min + (patch.u_max - patch.u_min) * iu / (patch.grid - 1);
      rec.v = patch.v_min + (patch.v_max - patch.v_min) * iv / (patch.grid - 1);
      try {
        PointAnalyzer pa(chart, patch.kind, rec.u, rec.v);
        rec.metric_condition = pa.condition();
        if (!pa.ok()) throw std::domain_error("degenerate induced metric or normal frame");
        Raw r = pa.raw(h);
        if (opt.richardson) r = pa.raw(h / 2).combine(4.0 / 3.0, r, -1.0 / 3.0);
        rec.cfg = point_config(chart, pa.centre());
        rec.K_M = r.K_M;
        rec.K_N = r.K_N;
        rec.deriv = r.deriv;
        rec.compat = compatibility<double>(rec.cfg, rec.deriv, rec.K_M, rec.K_N);
        rec.relations = check_relations<double>(rec.cfg);
        for (int a = 0; a < 2; ++a)
          for (int b = 0; b < 2; ++b) {
            rec.parallel[0] = std::max(rec.parallel[0], max_abs2(Vec2<double>(r.dj[a].col(b)) - nabla_j<double>(rec.cfg, a, b)));
            rec.parallel[1] = std::max(rec.parallel[1], max_abs2(Vec2<double>(r.dh[a].col(b)) - nabla_h<double>(rec.cfg, a, b)));
            rec.parallel[2] = std::max(rec.parallel[2], max_abs2(Vec2<double>(r.dt[a].col(b)) - nabla_t<double>(rec.cfg, a, b)));
            rec.parallel[3] = std::max(rec.parallel[3], max_abs2(Vec2<double>(r.ds[a].col(b)) - nabla_s<double>(rec.cfg, a, b)));
          }
        rec.B_norm = std::max({max_abs2(rec.cfg.B11), max_abs2(rec.cfg.B12), max_abs2(rec.cfg.B22)});
        rec.H_norm = mean_curvature<double>(rec.cfg).norm();
        rec.codazzi = std::max(max_abs2(rec.compat.codazzi[0]), max_abs2(rec.compat.codazzi[1]));
      } catch (const std::domain_error& e) {
        rec.degenerate = true;
        rec.note = e.what();
      }
      rep.points.push_back(rec);
    }

  PatchAggregate& ag = rep.agg;
  bool first = true;
  for (const PointRecord& p : rep.points) {
    ++ag.points;
    if (p.degenerate) {
      ++ag.degenerate;
      continue;
    }
    const double aj = std::abs(p.cfg.j12);
    if (first) {
      ag.K_M_min = ag.K_M_max = p.K_M;
      ag.K_N_min = ag.K_N_max = p.K_N;
      ag.j12_abs_min = aj;
      first = false;
    }
    ag.gauss = std::max(ag.gauss, std::abs(p.compat.gauss));
    ag.ricci = std::max(ag.ricci, std::abs(p.compat.ricci));
    ag.codazzi = std::max(ag.codazzi, p.codazzi);
    ag.relations = std::max(ag.relations, p.relations.max());
    ag.parallel = std::max(ag.parallel, *std::max_element(p.parallel.begin(), p.parallel.end()));
    ag.B_norm = std::max(ag.B_norm, p.B_norm);
    ag.H_norm = std::max(ag.H_norm, p.H_norm);
    ag.K_M_min = std::min(ag.K_M_min, p.K_M);
    ag.K_M_max = std::max(ag.K_M_max, p.K_M);
    ag.K_N_min = std::min(ag.K_N_min, p.K_N);
    ag.K_N_max = std::max(ag.K_N_max, p.K_N);
    ag.j12_abs_min = std::min(ag.j12_abs_min, aj);
    ag.j12_abs_max = std::max(ag.j12_abs_max, aj);
    ag.t12_abs_max = std::max(ag.t12_abs_max, std::abs(p.cfg.t12));
    ag.metric_condition = std::max(ag.metric_condition, p.metric_condition);
  }
  return rep;
}

std::string detected_case(const PatchReport& report) {
  if (report.agg.points == report.agg.degenerate) return "none";
  if (report.agg.j12_abs_min > 1 - 1e-6 && report.agg.j12_abs_max < 1 + 1e-6) return "complex";
  if (report.agg.j12_abs_max < 1e-6) return "lagrangian";
  return "generic";
}

}  // namespace cpspin
