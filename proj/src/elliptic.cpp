#include "wlab/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace wlab {

namespace {

constexpr double kThetaMin = 1e-6;

const int kDx[4] = {1, -1, 0, 0};
const int kDy[4] = {0, 0, 1, -1};

// Fraction of the leg from node p (inside) toward direction d at which the
// circle |x - c| = rho is crossed.
double crossing_fraction(double px, double py, double ex, double ey, double h,
                         const Subdisk& sd) {
  const double rx = px - sd.cx, ry = py - sd.cy;
  const double b = rx * ex + ry * ey;
  const double c = rx * rx + ry * ry - sd.rho * sd.rho;
  const double disc = std::max(0.0, b * b - c);
  const double t = -b + std::sqrt(disc);
  return std::clamp(t / h, kThetaMin, 1.0);
}

}  // namespace

DirichletSystem::DirichletSystem(const DiskGrid& g, const Subdisk& sd)
    : g_(&g), sd_(sd) {
  g.check_subdisk(sd);
  node2unk_.assign(g.node_count(), -1);
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i) {
      const int id = g.id(i, j);
      if (sd.strictly_inside(g.x(i), g.y(j))) {
        node2unk_[id] = static_cast<int>(nodes_.size());
        nodes_.push_back(id);
      }
    }

  const double ih2 = 1.0 / (g.h() * g.h());
  rows_.resize(nodes_.size());
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    const int id = nodes_[u];
    const int i = g.ix(id), j = g.iy(id);
    Row& row = rows_[u];
    row.node = id;
    for (int d = 0; d < 4; ++d) {
      const int ni = i + kDx[d], nj = j + kDy[d];
      Leg& leg = row.leg[d];
      if (g.in_range(ni, nj) && node2unk_[g.id(ni, nj)] >= 0) {
        leg.nbr = node2unk_[g.id(ni, nj)];
        row.diag += ih2;
        continue;
      }
      // Leg exits the disk: cut at the circle, sample data past the crossing.
      leg.theta = crossing_fraction(g.x(i), g.y(j), kDx[d], kDy[d], g.h(), sd_);
      row.diag += ih2 / leg.theta;
      if (g.in_range(ni, nj)) leg.q1 = g.id(ni, nj);
      if (g.in_range(i + 2 * kDx[d], j + 2 * kDy[d]))
        leg.q2 = g.id(i + 2 * kDx[d], j + 2 * kDy[d]);
    }
  }
}

std::vector<double> DirichletSystem::run_cg(const std::vector<double>& b,
                                            const SolverOptions& opt,
                                            SolveReport* rep) const {
  const std::size_t n = nodes_.size();
  const double ih2 = 1.0 / (g_->h() * g_->h());
  std::vector<double> x(n, 0.0), r(b), z(n), p(n), ap(n);

  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    for (std::size_t u = 0; u < n; ++u) {
      double s = rows_[u].diag * v[u];
      for (int d = 0; d < 4; ++d)
        if (rows_[u].leg[d].nbr >= 0) s -= ih2 * v[rows_[u].leg[d].nbr];
      out[u] = s;
    }
  };

  double bnorm = 0.0;
  for (double v : b) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  SolveReport rp;
  rp.tol = opt.tol;
  if (bnorm == 0.0) {
    if (rep) *rep = rp;
    return x;
  }

  const long cap = static_cast<long>(opt.max_iter_factor) * g_->n() * g_->n();
  for (std::size_t u = 0; u < n; ++u) z[u] = r[u] / rows_[u].diag;
  p = z;
  double rz = 0.0;
  for (std::size_t u = 0; u < n; ++u) rz += r[u] * z[u];

  double rel = 1.0;
  long it = 0;
  for (; it < cap; ++it) {
    apply(p, ap);
    double pap = 0.0;
    for (std::size_t u = 0; u < n; ++u) pap += p[u] * ap[u];
    const double alpha = rz / pap;
    double rr = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      x[u] += alpha * p[u];
      r[u] -= alpha * ap[u];
      rr += r[u] * r[u];
    }
    rel = std::sqrt(rr) / bnorm;
    if (rel <= opt.tol) {
      ++it;
      break;
    }
    double rz_next = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      z[u] = r[u] / rows_[u].diag;
      rz_next += r[u] * z[u];
    }
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t u = 0; u < n; ++u) p[u] = z[u] + beta * p[u];
  }
  rp.iterations = static_cast<int>(it);
  rp.final_residual = rel;
  rp.converged = rel <= opt.tol;
  if (rep) *rep = rp;
  if (!rp.converged) throw SolverFailure(rp);
  return x;
}

ScalarField DirichletSystem::solve(const ScalarField& rhs, const ScalarField& boundary,
                                   const SolverOptions& opt, SolveReport* rep) const {
  const std::size_t n = nodes_.size();
  const double ih2 = 1.0 / (g_->h() * g_->h());
  std::vector<double> b(n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    const Row& row = rows_[u];
    double s = rhs.defined(row.node) ? -rhs.at(row.node) : 0.0;  // A = -laplace
    for (int d = 0; d < 4; ++d) {
      const Leg& leg = row.leg[d];
      if (leg.nbr >= 0) continue;
      double gval = 0.0;
      if (leg.q1 >= 0 && boundary.defined(leg.q1)) {
        if (leg.q2 >= 0 && boundary.defined(leg.q2)) {
          gval = (2.0 - leg.theta) * boundary.at(leg.q1) +
                 (leg.theta - 1.0) * boundary.at(leg.q2);
        } else {
          gval = boundary.at(leg.q1);
        }
      }
      s += gval * ih2 / leg.theta;
    }
    b[u] = s;
  }
  std::vector<double> x = run_cg(b, opt, rep);
  ScalarField u(*g_, 0.0);
  for (std::size_t k = 0; k < n; ++k) u.set(nodes_[k], x[k]);
  return u;
}

PoissonResult poisson_dirichlet(const ScalarField& rhs, const ScalarField& boundary,
                                const Subdisk& sd, const SolverOptions& opt) {
  DirichletSystem sys(rhs.grid(), sd);
  SolveReport rep;
  ScalarField u = sys.solve(rhs, boundary, opt, &rep);
  return PoissonResult{std::move(u), rep};
}

VecField poisson_dirichlet_zero(const DirichletSystem& sys, const VecField& rhs, int m,
                                const SolverOptions& opt, SolveReport* rep) {
  const DiskGrid& g = sys.grid();
  ScalarField zero_bc = sample_scalar(g, [](double, double) { return 0.0; });
  VecField out(g, VecA::Zero());
  std::vector<ScalarField> sols;
  SolveReport worst{};
  for (int c = 0; c < m; ++c) {
    ScalarField rc(g, 0.0);
    for (int id = 0; id < g.node_count(); ++id)
      if (rhs.defined(id)) rc.set(id, rhs.at(id)[c]);
    SolveReport r{};
    sols.push_back(sys.solve(rc, zero_bc, opt, &r));
    if (r.iterations > worst.iterations) worst = r;
  }
  for (int id = 0; id < g.node_count(); ++id) {
    if (!sols[0].defined(id)) continue;
    VecA v = VecA::Zero();
    for (int c = 0; c < m; ++c) v[c] = sols[c].at(id);
    out.set(id, v);
  }
  if (rep) *rep = worst;
  return out;
}

MvField poisson_dirichlet_zero(const DirichletSystem& sys, const MvField& rhs,
                               const SolverOptions& opt, SolveReport* rep) {
  const DiskGrid& g = sys.grid();
  const int m = rhs.zero_value().ambient_dim();
  const std::uint32_t nblades = 1u << m;
  ScalarField zero_bc = sample_scalar(g, [](double, double) { return 0.0; });
  MvField out(g, MultiVector::zero(m));

  // Solve only blades carrying data anywhere.
  std::vector<std::uint32_t> active;
  for (std::uint32_t bl = 0; bl < nblades; ++bl) {
    bool any = false;
    for (int id = 0; id < g.node_count() && !any; ++id)
      if (rhs.defined(id) && rhs.at(id)[bl] != 0.0) any = true;
    if (any) active.push_back(bl);
  }

  std::vector<ScalarField> sols;
  SolveReport worst{};
  for (std::uint32_t bl : active) {
    ScalarField rc(g, 0.0);
    for (int id = 0; id < g.node_count(); ++id)
      if (rhs.defined(id)) rc.set(id, rhs.at(id)[bl]);
    SolveReport r{};
    sols.push_back(sys.solve(rc, zero_bc, opt, &r));
    if (r.iterations > worst.iterations) worst = r;
  }
  // Even with no active blades the zero solution is defined on the domain.
  DirichletSystem const* s = &sys;
  for (int id = 0; id < g.node_count(); ++id) {
    bool inside = s->domain().strictly_inside(g.xof(id), g.yof(id));
    if (!inside) continue;
    MultiVector v(m);
    for (std::size_t k = 0; k < active.size(); ++k)
      if (sols[k].defined(id)) v[active[k]] = sols[k].at(id);
    out.set(id, v);
  }
  if (rep) *rep = worst;
  return out;
}

// --- potential recovery -------------------------------------------------------

PotentialSystem::PotentialSystem(const DiskGrid& g, const Subdisk& sd)
    : g_(&g), sd_(sd) {
  g.check_subdisk(sd);
  node2unk_.assign(g.node_count(), -1);
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i) {
      const int id = g.id(i, j);
      if (sd.strictly_inside(g.x(i), g.y(j))) {
        node2unk_[id] = static_cast<int>(nodes_.size());
        nodes_.push_back(id);
      }
    }
  degree_.assign(nodes_.size(), 0.0);
  for (std::size_t u = 0; u < nodes_.size(); ++u) {
    const int id = nodes_[u];
    const int i = g.ix(id), j = g.iy(id);
    if (g.in_range(i + 1, j) && node2unk_[g.id(i + 1, j)] >= 0)
      edges_.push_back({static_cast<int>(u), node2unk_[g.id(i + 1, j)], true});
    if (g.in_range(i, j + 1) && node2unk_[g.id(i, j + 1)] >= 0)
      edges_.push_back({static_cast<int>(u), node2unk_[g.id(i, j + 1)], false});
  }
  for (const Edge& e : edges_) {
    degree_[e.a] += 1.0;
    degree_[e.b] += 1.0;
  }
}

ScalarField PotentialSystem::solve(const ScalarField& gx, const ScalarField& gy,
                                   const SolverOptions& opt, SolveReport* rep) const {
  const std::size_t n = nodes_.size();
  const double h = g_->h();
  const double ih2 = 1.0 / (h * h);

  std::vector<double> b(n, 0.0);
  std::vector<char> edge_on(edges_.size(), 1);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const Edge& e = edges_[k];
    const ScalarField& gc = e.xdir ? gx : gy;
    const int na = nodes_[e.a], nb = nodes_[e.b];
    if (!gc.defined(na) || !gc.defined(nb)) {
      edge_on[k] = 0;
      continue;
    }
    const double target = 0.5 * (gc.at(na) + gc.at(nb));
    b[e.a] -= target / h;
    b[e.b] += target / h;
  }

  auto apply = [&](const std::vector<double>& v, std::vector<double>& out) {
    std::fill(out.begin(), out.end(), 0.0);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
      if (!edge_on[k]) continue;
      const Edge& e = edges_[k];
      const double d = (v[e.b] - v[e.a]) * ih2;
      out[e.a] -= d;
      out[e.b] += d;
    }
  };
  auto demean = [&](std::vector<double>& v) {
    double mean = 0.0;
    for (double w : v) mean += w;
    mean /= static_cast<double>(n);
    for (double& w : v) w -= mean;
  };

  demean(b);
  std::vector<double> x(n, 0.0), r(b), z(n), p(n), ap(n);
  double bnorm = 0.0;
  for (double v : b) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  SolveReport rp;
  rp.tol = opt.tol;
  if (bnorm == 0.0) {
    if (rep) *rep = rp;
    ScalarField out(*g_, 0.0);
    for (std::size_t k = 0; k < n; ++k) out.set(nodes_[k], 0.0);
    return out;
  }

  for (std::size_t u = 0; u < n; ++u) z[u] = r[u] / (degree_[u] * ih2);
  p = z;
  double rz = 0.0;
  for (std::size_t u = 0; u < n; ++u) rz += r[u] * z[u];

  const long cap = static_cast<long>(opt.max_iter_factor) * g_->n() * g_->n();
  double rel = 1.0;
  long it = 0;
  for (; it < cap; ++it) {
    apply(p, ap);
    double pap = 0.0;
    for (std::size_t u = 0; u < n; ++u) pap += p[u] * ap[u];
    if (pap <= 0.0) break;  // numerical null-space drift
    const double alpha = rz / pap;
    double rr = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      x[u] += alpha * p[u];
      r[u] -= alpha * ap[u];
    }
    demean(r);
    for (std::size_t u = 0; u < n; ++u) rr += r[u] * r[u];
    rel = std::sqrt(rr) / bnorm;
    if (rel <= opt.tol) {
      ++it;
      break;
    }
    double rz_next = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      z[u] = r[u] / (degree_[u] * ih2);
      rz_next += r[u] * z[u];
    }
    const double beta = rz_next / rz;
    rz = rz_next;
    for (std::size_t u = 0; u < n; ++u) p[u] = z[u] + beta * p[u];
  }
  rp.iterations = static_cast<int>(it);
  rp.final_residual = rel;
  rp.converged = rel <= opt.tol;
  if (rep) *rep = rp;
  if (!rp.converged) throw SolverFailure(rp);

  demean(x);
  ScalarField out(*g_, 0.0);
  for (std::size_t k = 0; k < n; ++k) out.set(nodes_[k], x[k]);
  return out;
}

namespace {

// Reconstruction mismatch ||target_grad - grad(pot)||_{L2(sd)} via central
// differences on the recovered potential.
double recon_defect(const ScalarField& pot, const ScalarField& gx, const ScalarField& gy,
                    const Subdisk& sd) {
  ScalarField px = dx(pot), py = dy(pot);
  const DiskGrid& g = pot.grid();
  double acc = 0.0;
  const double h2 = g.h() * g.h();
  for (int id = 0; id < g.node_count(); ++id) {
    if (!px.defined(id) || !py.defined(id) || !gx.defined(id) || !gy.defined(id)) continue;
    if (!sd.contains(g.xof(id), g.yof(id))) continue;
    const double ex = px.at(id) - gx.at(id);
    const double ey = py.at(id) - gy.at(id);
    acc += (ex * ex + ey * ey) * h2;
  }
  return std::sqrt(acc);
}

double field_l2(const ScalarField& a, const ScalarField& b, const Subdisk& sd) {
  const DiskGrid& g = a.grid();
  double acc = 0.0;
  const double h2 = g.h() * g.h();
  for (int id = 0; id < g.node_count(); ++id) {
    if (!a.defined(id) || !b.defined(id)) continue;
    if (!sd.contains(g.xof(id), g.yof(id))) continue;
    acc += (a.at(id) * a.at(id) + b.at(id) * b.at(id)) * h2;
  }
  return std::sqrt(acc);
}

}  // namespace

PotentialRecovery potential_from_divfree(const PairField<double>& G, const Subdisk& sd,
                                         const SolverOptions& opt, double compat_tol) {
  const DiskGrid& g = G.grid();
  PotentialSystem sys(g, sd);
  // perp-grad(L) = G means dL/dx = G2, dL/dy = -G1.
  ScalarField gx = G.s2;
  ScalarField gy = map_field(G.s1, [](double v) { return -v; });
  SolveReport rep;
  ScalarField L = sys.solve(gx, gy, opt, &rep);

  PotentialRecovery out{std::move(L), 0.0, 0.0, 0.0, false, rep};
  ScalarField divg = divergence(G);
  double gl2 = field_l2(G.s1, G.s2, sd);
  double dl2 = 0.0;
  {
    const double h2 = g.h() * g.h();
    for (int id = 0; id < g.node_count(); ++id)
      if (divg.defined(id) && sd.contains(g.xof(id), g.yof(id)))
        dl2 += divg.at(id) * divg.at(id) * h2;
    dl2 = std::sqrt(dl2);
  }
  out.incompat = dl2;
  out.compat_warning = gl2 > 0.0 && dl2 > compat_tol * gl2;
  out.defect = recon_defect(out.pot, gx, gy, sd);
  out.defect_rel = gl2 > 0.0 ? out.defect / gl2 : 0.0;
  return out;
}

PotentialRecovery potential_from_curlfree(const PairField<double>& G, const Subdisk& sd,
                                          const SolverOptions& opt, double compat_tol) {
  const DiskGrid& g = G.grid();
  PotentialSystem sys(g, sd);
  SolveReport rep;
  ScalarField R = sys.solve(G.s1, G.s2, opt, &rep);

  PotentialRecovery out{std::move(R), 0.0, 0.0, 0.0, false, rep};
  ScalarField curl = add_fields(dx(G.s2), dy(G.s1), -1.0);
  double gl2 = field_l2(G.s1, G.s2, sd);
  double cl2 = 0.0;
  {
    const double h2 = g.h() * g.h();
    for (int id = 0; id < g.node_count(); ++id)
      if (curl.defined(id) && sd.contains(g.xof(id), g.yof(id)))
        cl2 += curl.at(id) * curl.at(id) * h2;
    cl2 = std::sqrt(cl2);
  }
  out.incompat = cl2;
  out.compat_warning = gl2 > 0.0 && cl2 > compat_tol * gl2;
  out.defect = recon_defect(out.pot, G.s1, G.s2, sd);
  out.defect_rel = gl2 > 0.0 ? out.defect / gl2 : 0.0;
  return out;
}

VecPotentialRecovery potential_from_divfree(const PairField<VecA>& G, int m,
                                            const Subdisk& sd, const SolverOptions& opt) {
  const DiskGrid& g = G.grid();
  PotentialSystem sys(g, sd);
  VecPotentialRecovery out{VecField(g, VecA::Zero()), 0.0, 0.0, false, {}};
  std::vector<ScalarField> sols;
  double defect2 = 0.0, incompat2 = 0.0;
  for (int c = 0; c < m; ++c) {
    ScalarField g1(g, 0.0), g2(g, 0.0);
    for (int id = 0; id < g.node_count(); ++id) {
      if (G.s1.defined(id)) g1.set(id, G.s1.at(id)[c]);
      if (G.s2.defined(id)) g2.set(id, G.s2.at(id)[c]);
    }
    PotentialRecovery r = potential_from_divfree(PairField<double>(g1, g2), sd, opt);
    defect2 += r.defect * r.defect;
    incompat2 += r.incompat * r.incompat;
    out.compat_warning = out.compat_warning || r.compat_warning;
    if (r.report.iterations > out.report.iterations) out.report = r.report;
    sols.push_back(std::move(r.pot));
  }
  for (int id = 0; id < g.node_count(); ++id) {
    if (!sols[0].defined(id)) continue;
    VecA v = VecA::Zero();
    for (int c = 0; c < m; ++c) v[c] = sols[c].at(id);
    out.pot.set(id, v);
  }
  out.defect = std::sqrt(defect2);
  out.incompat = std::sqrt(incompat2);
  return out;
}

MvPotentialRecovery potential_from_curlfree(const PairField<MultiVector>& G,
                                            const Subdisk& sd, const SolverOptions& opt) {
  const DiskGrid& g = G.grid();
  const int m = G.s1.zero_value().ambient_dim();
  const std::uint32_t nblades = 1u << m;
  MvPotentialRecovery out{MvField(g, MultiVector::zero(m)), 0.0, 0.0, false, {}};

  std::vector<std::uint32_t> active;
  for (std::uint32_t bl = 0; bl < nblades; ++bl) {
    bool any = false;
    for (int id = 0; id < g.node_count() && !any; ++id)
      if (G.s1.defined(id) && (G.s1.at(id)[bl] != 0.0 || G.s2.at(id)[bl] != 0.0))
        any = true;
    if (any) active.push_back(bl);
  }

  std::vector<ScalarField> sols;
  double defect2 = 0.0, incompat2 = 0.0;
  for (std::uint32_t bl : active) {
    ScalarField g1(g, 0.0), g2(g, 0.0);
    for (int id = 0; id < g.node_count(); ++id) {
      if (G.s1.defined(id)) g1.set(id, G.s1.at(id)[bl]);
      if (G.s2.defined(id)) g2.set(id, G.s2.at(id)[bl]);
    }
    PotentialRecovery r = potential_from_curlfree(PairField<double>(g1, g2), sd, opt);
    defect2 += r.defect * r.defect;
    incompat2 += r.incompat * r.incompat;
    out.compat_warning = out.compat_warning || r.compat_warning;
    if (r.report.iterations > out.report.iterations) out.report = r.report;
    sols.push_back(std::move(r.pot));
  }
  for (int id = 0; id < g.node_count(); ++id) {
    if (!sd.strictly_inside(g.xof(id), g.yof(id))) continue;
    MultiVector v(m);
    bool ok = true;
    for (std::size_t k = 0; k < active.size(); ++k) {
      if (!sols[k].defined(id)) { ok = false; break; }
      v[active[k]] = sols[k].at(id);
    }
    if (ok) out.pot.set(id, v);
  }
  out.defect = std::sqrt(defect2);
  out.incompat = std::sqrt(incompat2);
  return out;
}

// --- Wente -------------------------------------------------------------------

ScalarField jacobian_product(const ScalarField& a, const ScalarField& b) {
  // grad(a) . perp-grad(b) = da/dy db/dx - da/dx db/dy
  ScalarField ax = dx(a), ay = dy(a), bx = dx(b), by = dy(b);
  ScalarField r(a.grid(), 0.0);
  for (int id = 0; id < a.grid().node_count(); ++id)
    if (ax.defined(id) && ay.defined(id) && bx.defined(id) && by.defined(id))
      r.set(id, ay.at(id) * bx.at(id) - ax.at(id) * by.at(id));
  return r;
}

ScalarField jacobian_product(const VecField& a, const VecField& b) {
  VecField ax = dx(a), ay = dy(a), bx = dx(b), by = dy(b);
  ScalarField r(a.grid(), 0.0);
  for (int id = 0; id < a.grid().node_count(); ++id)
    if (ax.defined(id) && ay.defined(id) && bx.defined(id) && by.defined(id))
      r.set(id, ay.at(id).dot(bx.at(id)) - ax.at(id).dot(by.at(id)));
  return r;
}

namespace {

template <class FieldT>
WenteResult wente_impl(const FieldT& a, const FieldT& b, const SolverOptions& opt) {
  const DiskGrid& g = a.grid();
  const Subdisk unit{0.0, 0.0, 1.0};
  ScalarField rhs = jacobian_product(a, b);
  ScalarField zero_bc = sample_scalar(g, [](double, double) { return 0.0; });
  SolveReport rep;
  DirichletSystem sys(g, unit);
  ScalarField mu = sys.solve(rhs, zero_bc, opt, &rep);

  WenteRecord rec;
  rec.report = rep;
  rec.mu_linf = lp(mu, std::numeric_limits<double>::infinity(), unit);
  rec.grad_mu_l2 = lp(gradient(mu), 2.0, unit);
  rec.lhs = rec.mu_linf + rec.grad_mu_l2;
  rec.grad_a_l2 = lp(gradient(a), 2.0, unit);
  rec.grad_b_l2 = lp(gradient(b), 2.0, unit);
  rec.rhs_product = rec.grad_a_l2 * rec.grad_b_l2;
  rec.degenerate = rec.rhs_product < 1e-14;
  rec.ratio = rec.degenerate ? 0.0 : rec.lhs / rec.rhs_product;
  return WenteResult{std::move(mu), rec};
}

}  // namespace

WenteResult wente_solve(const ScalarField& a, const ScalarField& b,
                        const SolverOptions& opt) {
  return wente_impl(a, b, opt);
}
WenteResult wente_solve(const VecField& a, const VecField& b, const SolverOptions& opt) {
  return wente_impl(a, b, opt);
}

// --- weak lemma ----------------------------------------------------------------

WeakLemmaReport weak_lemma_check(const PairField<double>& G1, const PairField<double>& G2,
                                 const Subdisk& sd, const SolverOptions& opt) {
  WeakLemmaReport rep;
  PairField<double> G = PairField<double>(add_fields(G1.s1, G2.s1),
                                          add_fields(G1.s2, G2.s2));
  PotentialRecovery rec = potential_from_divfree(G, sd, opt);
  rep.div_defect = rec.incompat;
  rep.l_weak_l2 = weak_l2_quasinorm(rec.pot, sd).value;

  PotentialRecovery prim = potential_from_divfree(G1, sd, opt);
  rep.g1_surrogate = lp(prim.pot, 2.0, sd);
  rep.g2_l1 = lp(magnitude_field(G2), 1.0, sd);
  const double denom = rep.g1_surrogate + rep.g2_l1;
  rep.degenerate = denom < 1e-13;
  rep.ratio = rep.degenerate ? 0.0 : rep.l_weak_l2 / denom;
  return rep;
}

// --- Morrey decay probe ---------------------------------------------------------

MorreyReport morrey_decay_probe(const ScalarField& b, const ScalarField& f, double p,
                                const Subdisk& sd, const SolverOptions& opt) {
  if (!(p > 1.0 && p < 2.0))
    throw std::invalid_argument("morrey probe requires p in (1,2)");
  const DiskGrid& g = b.grid();
  DirichletSystem sys(g, sd);
  ScalarField zero_bc = sample_scalar(g, [](double, double) { return 0.0; });

  // div(b grad f) term, fixed across iterations.
  PairField<double> gf = gradient(f);
  PairField<double> bgf(zip_fields<double>(b, gf.s1, 0.0, std::multiplies<double>()),
                        zip_fields<double>(b, gf.s2, 0.0, std::multiplies<double>()));
  ScalarField fixed_rhs = divergence(bgf);

  MorreyReport rep;
  rep.s = 2.0 * p;
  ScalarField u(g, 0.0);
  const int max_picard = 50;
  double diff = 0.0;
  for (int k = 0; k < max_picard; ++k) {
    ScalarField coupling = jacobian_product(b, u);  // grad b . perp-grad u
    ScalarField rhs = add_fields(fixed_rhs, coupling);
    ScalarField next = sys.solve(rhs, zero_bc, opt, nullptr);
    double num = 0.0, den = 0.0;
    for (int id = 0; id < g.node_count(); ++id) {
      if (!next.defined(id)) continue;
      const double d = next.at(id) - (u.defined(id) ? u.at(id) : 0.0);
      num += d * d;
      den += next.at(id) * next.at(id);
    }
    u = std::move(next);
    rep.picard_iterations = k + 1;
    diff = den > 0.0 ? std::sqrt(num / den) : 0.0;
    if (den == 0.0 || diff < 1e-11) {
      rep.contracted = true;
      break;
    }
  }
  if (!rep.contracted) return rep;

  PairField<double> gu = gradient(u);
  Subdisk inner{sd.cx, sd.cy, 5.0 * sd.rho / 8.0};
  rep.grad_u_ls = lp(gu, rep.s, inner);
  rep.grad_u_weak = weak_l2_quasinorm(magnitude_field(gu), sd).value;
  rep.f_lp = lp(laplacian(f), p, sd);
  const double rho = sd.rho;
  rep.bracket = std::pow(rho, 2.0 / rep.s - 1.0) * rep.grad_u_weak +
                std::pow(rho, 2.0 / rep.s - 2.0 / p + 1.0) * rep.f_lp;
  rep.degenerate = rep.bracket < 1e-13;
  rep.ratio = rep.degenerate ? 0.0 : rep.grad_u_ls / rep.bracket;
  return rep;
}

}  // namespace wlab
