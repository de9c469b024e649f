#include "wlab/willmore.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "wlab/norms.hpp"

namespace wlab {

QField q_preset(const DiskGrid& g, const std::string& name, double a, double b) {
  if (name == "const")
    return {sample_scalar(g, [a](double, double) { return a; }),
            sample_scalar(g, [b](double, double) { return b; })};
  if (name == "linear")
    return {sample_scalar(g, [](double x, double) { return x; }),
            sample_scalar(g, [](double, double y) { return -y; })};
  if (name == "quadratic")
    return {sample_scalar(g, [](double x, double y) { return x * x - y * y; }),
            sample_scalar(g, [](double x, double y) { return -2.0 * x * y; })};
  throw std::invalid_argument("unknown q preset: " + name);
}

QField q_from_wimm(const DiskGrid& g, const std::string& path) {
  WimmData d = read_wimm(path);
  if (d.ncomp != 2) throw std::invalid_argument("q files carry 2 components");
  if (d.n != g.n()) throw std::invalid_argument("q file grid size mismatch");
  ScalarField q11(g, 0.0), q12(g, 0.0);
  for (int id = 0; id < g.node_count(); ++id) {
    q11.set(id, d.values[2 * static_cast<long>(id)]);
    q12.set(id, d.values[2 * static_cast<long>(id) + 1]);
  }
  return {std::move(q11), std::move(q12)};
}

Inhomogeneity no_inhomogeneity() { return Inhomogeneity{}; }

Inhomogeneity conformal_q_inhomogeneity(const CurvatureData& cd, const QField& q) {
  const DiskGrid& g = cd.lam.grid();
  Inhomogeneity inh;
  inh.kind = InhKind::ConformalQ;
  PairField<VecA> T(VecField(g, VecA::Zero()), VecField(g, VecA::Zero()));
  for (int id = 0; id < g.node_count(); ++id) {
    if (!cd.d1phi.defined(id) || !q.q11.defined(id) || !q.q12.defined(id)) continue;
    const double iel = 1.0 / cd.e2lam.at(id);
    const VecA p1 = cd.d1phi.at(id), p2 = cd.d2phi.at(id);
    const double q11 = q.q11.at(id), q12 = q.q12.at(id);
    // M_q = [[-q12, q11], [q11, q12]], T = -e^{-2 lam} M_q perp-grad(Phi),
    // perp-grad(Phi) = (-d2, d1).
    T.s1.set(id, VecA(-iel * (-q12 * (-p2) + q11 * p1)));
    T.s2.set(id, VecA(-iel * (q11 * (-p2) + q12 * p1)));
  }
  inh.T = std::move(T);

  // q is required divergence-free; report the discrete defect (q22 = -q11).
  ScalarField div1 = add_fields(dx(q.q11), dy(q.q12));
  ScalarField div2 = add_fields(dx(q.q12), dy(map_field(q.q11, [](double v) {
                                  return -v;
                                })));
  const Subdisk unit{0.0, 0.0, 1.0};
  const double d1n = lp(div1, 2.0, unit), d2n = lp(div2, 2.0, unit);
  const double qn = std::max(1e-30, std::hypot(lp(q.q11, 2.0, unit), lp(q.q12, 2.0, unit)));
  inh.q_div_defect = std::hypot(d1n, d2n);
  inh.q_warning = inh.q_div_defect > 0.05 * qn;
  return inh;
}

VecField unit_normal_m3(const CurvatureData& cd) {
  if (cd.m != 3) throw UnsupportedCodimension("unit normal requires m = 3");
  const DiskGrid& g = cd.lam.grid();
  VecField n(g, VecA::Zero());
  for (int id = 0; id < g.node_count(); ++id) {
    if (!cd.gauss.defined(id)) continue;
    n.set(id, mv_to_vec(hodge_star(cd.gauss.at(id))));
  }
  return n;
}

ScalarField scalar_mean_curvature_m3(const CurvatureData& cd) {
  VecField n = unit_normal_m3(cd);
  ScalarField hs(cd.lam.grid(), 0.0);
  for (int id = 0; id < cd.lam.grid().node_count(); ++id)
    if (cd.H.defined(id) && n.defined(id)) hs.set(id, cd.H.at(id).dot(n.at(id)));
  return hs;
}

Inhomogeneity helfrich_inhomogeneity(const CurvatureData& cd, double alpha,
                                     double beta, double gamma) {
  if (cd.m != 3)
    throw UnsupportedCodimension("helfrich inhomogeneity requires m = 3");
  const DiskGrid& g = cd.lam.grid();
  VecField nhat = unit_normal_m3(cd);
  Inhomogeneity inh;
  inh.kind = InhKind::Helfrich;
  VecField v(g, VecA::Zero());
  double worst = 0.0;
  for (int id = 0; id < g.node_count(); ++id) {
    if (!nhat.defined(id) || !cd.H.defined(id) || !cd.K.defined(id)) continue;
    const double hs = cd.H.at(id).dot(nhat.at(id));
    const double w = 2.0 * (beta + alpha * hs + gamma * cd.K.at(id));
    const VecA val = cd.e2lam.at(id) * w * nhat.at(id);
    v.set(id, val);
    const double vn = val.norm();
    if (vn > 1e-14) {
      const VecA tang = val - cd.pi_normal(id, val);
      worst = std::max(worst, tang.norm() / vn);
    }
  }
  inh.v = std::move(v);
  inh.v_normality = worst;
  return inh;
}

Inhomogeneity chen_inhomogeneity() {
  Inhomogeneity inh;
  inh.kind = InhKind::Chen;
  return inh;
}

Inhomogeneity custom_inhomogeneity(PairField<VecA> T, const CurvatureData& cd) {
  (void)cd;
  Inhomogeneity inh;
  inh.kind = InhKind::Custom;
  inh.T = std::move(T);
  return inh;
}

VecField classical_residual(const CurvatureData& cd, const VecField* W) {
  const DiskGrid& g = cd.lam.grid();
  VecField gx = dx(cd.H), gy = dy(cd.H);
  VecField px(g, VecA::Zero()), py(g, VecA::Zero());
  for (int id = 0; id < g.node_count(); ++id) {
    if (!gx.defined(id) || !gy.defined(id) || !cd.e1.defined(id)) continue;
    px.set(id, cd.pi_normal(id, gx.at(id)));
    py.set(id, cd.pi_normal(id, gy.at(id)));
  }
  VecField div = add_fields(dx(px), dy(py));
  VecField res(g, VecA::Zero());
  for (int id = 0; id < g.node_count(); ++id) {
    if (!div.defined(id) || !cd.H.defined(id)) continue;
    if (W && !W->defined(id)) continue;
    const double e2l = cd.e2lam.at(id);
    const VecA h = cd.H.at(id);
    const VecA lap_perp = cd.pi_normal(id, div.at(id)) / e2l;
    const VecA a11 = cd.A11.at(id), a12 = cd.A12.at(id), a22 = cd.A22.at(id);
    const VecA cubic = (a11.dot(h) * a11 + 2.0 * a12.dot(h) * a12 +
                        a22.dot(h) * a22) /
                       (e2l * e2l);
    VecA r = lap_perp + cubic - 2.0 * h.squaredNorm() * h;
    if (W) r -= W->at(id);
    res.set(id, r);
  }
  return res;
}

FluxResult divergence_flux(const CurvatureData& cd, const Inhomogeneity& inh) {
  const DiskGrid& g = cd.lam.grid();
  VecField gx = dx(cd.H), gy = dy(cd.H);
  PairField<VecA> flux(VecField(g, VecA::Zero()), VecField(g, VecA::Zero()));
  for (int id = 0; id < g.node_count(); ++id) {
    if (!gx.defined(id) || !gy.defined(id) || !cd.H.defined(id)) continue;
    if (inh.has_T() && !inh.T->defined(id)) continue;
    const double h2 = cd.H.at(id).squaredNorm();
    VecA f1 = gx.at(id) - 2.0 * cd.pi_normal(id, gx.at(id)) + h2 * cd.d1phi.at(id);
    VecA f2 = gy.at(id) - 2.0 * cd.pi_normal(id, gy.at(id)) + h2 * cd.d2phi.at(id);
    if (inh.has_T()) {
      f1 += inh.T->s1.at(id);
      f2 += inh.T->s2.at(id);
    }
    flux.s1.set(id, f1);
    flux.s2.set(id, f2);
  }
  VecField res = divergence(flux);
  if (inh.has_v()) {
    VecField out(g, VecA::Zero());
    for (int id = 0; id < g.node_count(); ++id)
      if (res.defined(id) && inh.v->defined(id))
        out.set(id, VecA(res.at(id) - inh.v->at(id)));
    res = std::move(out);
  }
  return FluxResult{std::move(flux), std::move(res)};
}

DecomposeReport t_decompose(const PairField<VecA>& T, const CurvatureData& cd) {
  const DiskGrid& g = cd.lam.grid();
  const int m = cd.m;
  DecomposeReport rep;
  for (int id = 0; id < g.node_count(); ++id) {
    if (!T.defined(id) || !cd.d1phi.defined(id) || !cd.gauss.defined(id)) continue;
    const VecA p1 = cd.d1phi.at(id), p2 = cd.d2phi.at(id);
    const double e2l = cd.e2lam.at(id);
    const VecA t1 = T.s1.at(id), t2 = T.s2.at(id);
    const double a1 = t1.dot(p1) / e2l, b1 = t1.dot(p2) / e2l;
    const double a2 = t2.dot(p1) / e2l, b2 = t2.dot(p2) / e2l;
    const VecA u1 = t1 - a1 * p1 - b1 * p2;
    const VecA u2 = t2 - a2 * p1 - b2 * p2;

    // wedge identity: grad Phi ^ T = e^{2 lam} (B1 - A2) (star n)
    //                 + d1 Phi ^ U1 + d2 Phi ^ U2
    MultiVector lhs = wedge(to_mv(m, p1), to_mv(m, t1)) +
                      wedge(to_mv(m, p2), to_mv(m, t2));
    MultiVector rhs = cd.gauss.at(id) * (e2l * (b1 - a2)) +
                      wedge(to_mv(m, p1), to_mv(m, u1)) +
                      wedge(to_mv(m, p2), to_mv(m, u2));
    rep.wedge_defect = std::max(rep.wedge_defect, (lhs - rhs).norm());

    // dot identity: grad Phi . T = e^{2 lam} (A1 + B2)
    const double dot_lhs = t1.dot(p1) + t2.dot(p2);
    rep.dot_defect =
        std::max(rep.dot_defect, std::abs(dot_lhs - e2l * (a1 + b2)));
  }
  return rep;
}

TangentialBoundReport tangential_bound_probe(const CurvatureData& cd) {
  const DiskGrid& g = cd.lam.grid();
  VecField gx = dx(cd.H), gy = dy(cd.H);
  TangentialBoundReport rep;
  double gmax = 0.0;
  for (int id = 0; id < g.node_count(); ++id)
    if (cd.grad_n_sq.defined(id) && g.interior(id))
      gmax = std::max(gmax, cd.grad_n_sq.at(id));
  rep.cutoff = 1e-6 * gmax;
  if (gmax < 1e-24) {
    rep.degenerate = true;
    return rep;
  }
  for (int id = 0; id < g.node_count(); ++id) {
    if (!g.interior(id) || !gx.defined(id) || !gy.defined(id) ||
        !cd.grad_n_sq.defined(id))
      continue;
    const double gn2 = cd.grad_n_sq.at(id);
    if (gn2 <= rep.cutoff) continue;
    const VecA tx = cd.pi_tangent(id, gx.at(id));
    const VecA ty = cd.pi_tangent(id, gy.at(id));
    const double num = std::hypot(tx.norm(), ty.norm());
    const double den = std::exp(cd.lam.at(id)) * gn2;
    rep.sup_ratio = std::max(rep.sup_ratio, num / den);
  }
  return rep;
}

ChenReport chen_probe(const CurvatureData& cd) {
  const DiskGrid& g = cd.lam.grid();
  VecField lap = laplacian(cd.H);
  ChenReport rep;
  const Subdisk half{0.0, 0.0, 0.5};
  ScalarField mag(g, 0.0);
  std::vector<double> ratios;
  double amax = 0.0;
  for (int id = 0; id < g.node_count(); ++id)
    if (cd.a_norm_g.defined(id) && g.interior(id))
      amax = std::max(amax, cd.a_norm_g.at(id));
  const double cutoff = 0.05 * amax;
  for (int id = 0; id < g.node_count(); ++id) {
    if (!lap.defined(id) || !cd.e2lam.defined(id)) continue;
    const double v = lap.at(id).norm() / cd.e2lam.at(id);
    mag.set(id, v);
    if (g.interior(id) && cd.a_norm_g.defined(id) && cd.a_norm_g.at(id) > cutoff) {
      const double a3 = std::pow(cd.a_norm_g.at(id), 3.0);
      ratios.push_back(v / a3);
    }
  }
  rep.laplace_h_l2 = lp(mag, 2.0, half);
  if (ratios.empty()) {
    rep.degenerate = true;
    return rep;
  }
  std::sort(ratios.begin(), ratios.end());
  rep.cubic_ratio_sup = ratios.back();
  rep.cubic_ratio_med = ratios[ratios.size() / 2];
  return rep;
}

}  // namespace wlab
