#include "wlab/geometry.hpp"

#include <cmath>

#include "wlab/norms.hpp"
#include "wlab/rng.hpp"

namespace wlab {

namespace {

VecA vec3(double a, double b, double c) {
  VecA v = VecA::Zero();
  v[0] = a;
  v[1] = b;
  v[2] = c;
  return v;
}
VecA vec4(double a, double b, double c, double d) {
  VecA v = VecA::Zero();
  v[0] = a;
  v[1] = b;
  v[2] = c;
  v[3] = d;
  return v;
}

AnalyticImmersion plane_analytic() {
  AnalyticImmersion a;
  a.m = 3;
  a.phi = [](double x, double y) { return vec3(x, y, 0.0); };
  a.d1 = [](double, double) { return vec3(1, 0, 0); };
  a.d2 = [](double, double) { return vec3(0, 1, 0); };
  a.d11 = a.d12 = a.d22 = [](double, double) { return VecA(VecA::Zero()); };
  return a;
}

AnalyticImmersion sphere_analytic(double R) {
  AnalyticImmersion a;
  a.m = 3;
  a.phi = [R](double x, double y) {
    const double D = 1.0 + x * x + y * y;
    return vec3(R * 2.0 * x / D, R * 2.0 * y / D, R * (x * x + y * y - 1.0) / D);
  };
  a.d1 = [R](double x, double y) {
    const double u = 1.0 / (1.0 + x * x + y * y), u2 = u * u;
    return vec3(R * (2.0 * u - 4.0 * x * x * u2), R * (-4.0 * x * y * u2),
                R * (4.0 * x * u2));
  };
  a.d2 = [R](double x, double y) {
    const double u = 1.0 / (1.0 + x * x + y * y), u2 = u * u;
    return vec3(R * (-4.0 * x * y * u2), R * (2.0 * u - 4.0 * y * y * u2),
                R * (4.0 * y * u2));
  };
  a.d11 = [R](double x, double y) {
    const double u = 1.0 / (1.0 + x * x + y * y), u2 = u * u, u3 = u2 * u;
    return vec3(R * (-12.0 * x * u2 + 16.0 * x * x * x * u3),
                R * (-4.0 * y * u2 + 16.0 * x * x * y * u3),
                R * (4.0 * u2 - 16.0 * x * x * u3));
  };
  a.d12 = [R](double x, double y) {
    const double u = 1.0 / (1.0 + x * x + y * y), u2 = u * u, u3 = u2 * u;
    return vec3(R * (-4.0 * y * u2 + 16.0 * x * x * y * u3),
                R * (-4.0 * x * u2 + 16.0 * x * y * y * u3),
                R * (-16.0 * x * y * u3));
  };
  a.d22 = [R](double x, double y) {
    const double u = 1.0 / (1.0 + x * x + y * y), u2 = u * u, u3 = u2 * u;
    return vec3(R * (-4.0 * x * u2 + 16.0 * x * y * y * u3),
                R * (-12.0 * y * u2 + 16.0 * y * y * y * u3),
                R * (4.0 * u2 - 16.0 * y * y * u3));
  };
  return a;
}

AnalyticImmersion catenoid_analytic() {
  AnalyticImmersion a;
  a.m = 3;
  a.phi = [](double x, double y) {
    return vec3(std::cosh(y) * std::cos(x), std::cosh(y) * std::sin(x), y);
  };
  a.d1 = [](double x, double y) {
    return vec3(-std::cosh(y) * std::sin(x), std::cosh(y) * std::cos(x), 0.0);
  };
  a.d2 = [](double x, double y) {
    return vec3(std::sinh(y) * std::cos(x), std::sinh(y) * std::sin(x), 1.0);
  };
  a.d11 = [](double x, double y) {
    return vec3(-std::cosh(y) * std::cos(x), -std::cosh(y) * std::sin(x), 0.0);
  };
  a.d12 = [](double x, double y) {
    return vec3(-std::sinh(y) * std::sin(x), std::sinh(y) * std::cos(x), 0.0);
  };
  a.d22 = [](double x, double y) {
    return vec3(std::cosh(y) * std::cos(x), std::cosh(y) * std::sin(x), 0.0);
  };
  return a;
}

AnalyticImmersion enneper_analytic() {
  AnalyticImmersion a;
  a.m = 3;
  a.phi = [](double x, double y) {
    return vec3(x - x * x * x / 3.0 + x * y * y, -y + y * y * y / 3.0 - y * x * x,
                x * x - y * y);
  };
  a.d1 = [](double x, double y) {
    return vec3(1.0 - x * x + y * y, -2.0 * x * y, 2.0 * x);
  };
  a.d2 = [](double x, double y) {
    return vec3(2.0 * x * y, -1.0 + y * y - x * x, -2.0 * y);
  };
  a.d11 = [](double x, double y) { return vec3(-2.0 * x, -2.0 * y, 2.0); };
  a.d12 = [](double x, double y) { return vec3(2.0 * y, -2.0 * x, 0.0); };
  a.d22 = [](double x, double y) { return vec3(2.0 * x, 2.0 * y, -2.0); };
  return a;
}

AnalyticImmersion clifford_analytic() {
  const double s = 1.0 / std::sqrt(2.0);
  AnalyticImmersion a;
  a.m = 4;
  a.phi = [s](double x, double y) {
    return vec4(s * std::cos(x), s * std::sin(x), s * std::cos(y), s * std::sin(y));
  };
  a.d1 = [s](double x, double) {
    return vec4(-s * std::sin(x), s * std::cos(x), 0.0, 0.0);
  };
  a.d2 = [s](double, double y) {
    return vec4(0.0, 0.0, -s * std::sin(y), s * std::cos(y));
  };
  a.d11 = [s](double x, double) {
    return vec4(-s * std::cos(x), -s * std::sin(x), 0.0, 0.0);
  };
  a.d12 = [](double, double) { return VecA(VecA::Zero()); };
  a.d22 = [s](double, double y) {
    return vec4(0.0, 0.0, -s * std::cos(y), -s * std::sin(y));
  };
  return a;
}

// Smooth bump with compact support: B(s) = exp(1 - 1/(1-s)) on s < 1.
struct Bump {
  static double b(double s) {
    return s < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - s)) : 0.0;
  }
  static double db(double s) {
    if (s >= 1.0) return 0.0;
    const double w = 1.0 - s;
    return -b(s) / (w * w);
  }
  static double d2b(double s) {
    if (s >= 1.0) return 0.0;
    const double w = 1.0 - s;
    return b(s) * (1.0 / (w * w * w * w) - 2.0 / (w * w * w));
  }
};

struct GraphHeight {
  // z = f(x,y), closed-form first and second derivatives.
  std::function<double(double, double)> f, fx, fy, fxx, fxy, fyy;
};

GraphHeight bump_height(double t, double support) {
  GraphHeight gh;
  const double iR2 = 1.0 / (support * support);
  auto s_of = [iR2](double x, double y) { return (x * x + y * y) * iR2; };
  gh.f = [t, s_of](double x, double y) { return t * Bump::b(s_of(x, y)); };
  gh.fx = [t, s_of, iR2](double x, double y) {
    return t * Bump::db(s_of(x, y)) * 2.0 * x * iR2;
  };
  gh.fy = [t, s_of, iR2](double x, double y) {
    return t * Bump::db(s_of(x, y)) * 2.0 * y * iR2;
  };
  gh.fxx = [t, s_of, iR2](double x, double y) {
    const double s = s_of(x, y);
    return t * (Bump::d2b(s) * 4.0 * x * x * iR2 * iR2 + Bump::db(s) * 2.0 * iR2);
  };
  gh.fxy = [t, s_of, iR2](double x, double y) {
    return t * Bump::d2b(s_of(x, y)) * 4.0 * x * y * iR2 * iR2;
  };
  gh.fyy = [t, s_of, iR2](double x, double y) {
    const double s = s_of(x, y);
    return t * (Bump::d2b(s) * 4.0 * y * y * iR2 * iR2 + Bump::db(s) * 2.0 * iR2);
  };
  return gh;
}

GraphHeight random_height(double t, std::uint64_t seed, int nbumps) {
  struct G {
    double a, px, py, iw2;
  };
  auto gs = std::make_shared<std::vector<G>>();
  Rng rng(seed);
  for (int k = 0; k < nbumps; ++k) {
    const double a = rng.uniform(0.5, 1.0);
    const double px = rng.uniform(-0.5, 0.5);
    const double py = rng.uniform(-0.5, 0.5);
    const double w = rng.uniform(0.25, 0.5);
    gs->push_back({a, px, py, 1.0 / (w * w)});
  }
  GraphHeight gh;
  gh.f = [t, gs](double x, double y) {
    double s = 0.0;
    for (const G& g : *gs)
      s += g.a * std::exp(-((x - g.px) * (x - g.px) + (y - g.py) * (y - g.py)) * g.iw2);
    return t * s;
  };
  auto accum = [gs](double x, double y, auto&& term) {
    double s = 0.0;
    for (const G& g : *gs) {
      const double dxp = x - g.px, dyp = y - g.py;
      const double e = g.a * std::exp(-(dxp * dxp + dyp * dyp) * g.iw2);
      s += term(e, dxp, dyp, g.iw2);
    }
    return s;
  };
  gh.fx = [t, accum](double x, double y) {
    return t * accum(x, y, [](double e, double dxp, double, double iw2) {
      return e * (-2.0 * dxp * iw2);
    });
  };
  gh.fy = [t, accum](double x, double y) {
    return t * accum(x, y, [](double e, double, double dyp, double iw2) {
      return e * (-2.0 * dyp * iw2);
    });
  };
  gh.fxx = [t, accum](double x, double y) {
    return t * accum(x, y, [](double e, double dxp, double, double iw2) {
      return e * (4.0 * dxp * dxp * iw2 * iw2 - 2.0 * iw2);
    });
  };
  gh.fxy = [t, accum](double x, double y) {
    return t * accum(x, y, [](double e, double dxp, double dyp, double iw2) {
      return e * (4.0 * dxp * dyp * iw2 * iw2);
    });
  };
  gh.fyy = [t, accum](double x, double y) {
    return t * accum(x, y, [](double e, double, double dyp, double iw2) {
      return e * (4.0 * dyp * dyp * iw2 * iw2 - 2.0 * iw2);
    });
  };
  return gh;
}

AnalyticImmersion graph_analytic(const GraphHeight& gh) {
  AnalyticImmersion a;
  a.m = 3;
  a.phi = [gh](double x, double y) { return vec3(x, y, gh.f(x, y)); };
  a.d1 = [gh](double x, double y) { return vec3(1.0, 0.0, gh.fx(x, y)); };
  a.d2 = [gh](double x, double y) { return vec3(0.0, 1.0, gh.fy(x, y)); };
  a.d11 = [gh](double x, double y) { return vec3(0.0, 0.0, gh.fxx(x, y)); };
  a.d12 = [gh](double x, double y) { return vec3(0.0, 0.0, gh.fxy(x, y)); };
  a.d22 = [gh](double x, double y) { return vec3(0.0, 0.0, gh.fyy(x, y)); };
  return a;
}

// Adds a graph height to the last used coordinate of a base provider.
AnalyticImmersion with_height_offset(AnalyticImmersion base, const GraphHeight& gh) {
  AnalyticImmersion a = base;
  const int last = base.m - 1;
  a.phi = [base, gh, last](double x, double y) {
    VecA v = base.phi(x, y);
    v[last] += gh.f(x, y);
    return v;
  };
  a.d1 = [base, gh, last](double x, double y) {
    VecA v = base.d1(x, y);
    v[last] += gh.fx(x, y);
    return v;
  };
  a.d2 = [base, gh, last](double x, double y) {
    VecA v = base.d2(x, y);
    v[last] += gh.fy(x, y);
    return v;
  };
  a.d11 = [base, gh, last](double x, double y) {
    VecA v = base.d11(x, y);
    v[last] += gh.fxx(x, y);
    return v;
  };
  a.d12 = [base, gh, last](double x, double y) {
    VecA v = base.d12(x, y);
    v[last] += gh.fxy(x, y);
    return v;
  };
  a.d22 = [base, gh, last](double x, double y) {
    VecA v = base.d22(x, y);
    v[last] += gh.fyy(x, y);
    return v;
  };
  return a;
}

double param(const ParamMap& p, const std::string& key, double dflt) {
  auto it = p.find(key);
  return it == p.end() ? dflt : it->second;
}

AnalyticImmersion catalog_analytic(const std::string& name, const ParamMap& params) {
  if (name == "plane") return plane_analytic();
  if (name == "sphere") return sphere_analytic(param(params, "radius", 1.0));
  if (name == "catenoid") return catenoid_analytic();
  if (name == "enneper") return enneper_analytic();
  if (name == "clifford") return clifford_analytic();
  if (name == "graph_bump")
    return graph_analytic(
        bump_height(param(params, "t", 0.1), param(params, "support", 0.8)));
  throw RejectedImmersion("unknown catalog immersion: " + name);
}

}  // namespace

const std::vector<CatalogEntry>& immersion_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"plane", "", 3, "flat reference plane z = 0"},
      {"graph_bump", "t=0.1 support=0.8", 3,
       "graph z = t * bump(r^2), compactly supported"},
      {"sphere", "radius=1", 3, "stereographic round sphere"},
      {"catenoid", "", 3, "conformal catenoid patch"},
      {"enneper", "", 3, "Enneper minimal patch"},
      {"clifford", "", 4, "Clifford torus patch in R^4"},
  };
  return entries;
}

namespace {

Immersion build_from_analytic(const AnalyticImmersion& a, const std::string& tag,
                              std::shared_ptr<const DiskGrid> grid,
                              const ImmersionLimits& lim) {
  Immersion imm{grid, a.m, tag, VecField(*grid, VecA::Zero()), a, 1.0, 0.0, true,
                0.0, false};
  const DiskGrid& g = *grid;
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      imm.phi.set(g.id(i, j), a.phi(g.x(i), g.y(j)));

  // Recorded invariants over interior nodes.
  double cmax = 1.0, defect = 0.0;
  for (int id = 0; id < g.node_count(); ++id) {
    if (!g.interior(id)) continue;
    const VecA t1 = a.d1(g.xof(id), g.yof(id));
    const VecA t2 = a.d2(g.xof(id), g.yof(id));
    const double n1 = t1.squaredNorm(), n2 = t2.squaredNorm();
    if (n1 < 1e-16 || n2 < 1e-16)
      throw RejectedImmersion("degenerate tangent at a node: " + tag);
    cmax = std::max(cmax, std::max(n1 / n2, n2 / n1));
    const double e2l = n1;
    defect = std::max(defect, std::max(std::abs(t1.dot(t2)),
                                       std::abs(std::sqrt(n1) - std::sqrt(n2))) /
                                  e2l);
  }
  imm.nondegeneracy_c = cmax;
  imm.conformal_defect = defect;
  imm.conformal_ok = defect <= lim.conformal_threshold;
  if (cmax > lim.nondegeneracy_cap)
    throw RejectedImmersion("metric nondegeneracy cap exceeded: " + tag);
  return imm;
}

void record_energy(Immersion& imm, const ImmersionLimits& lim);

}  // namespace

Immersion make_immersion(const std::string& name, const ParamMap& params,
                         std::shared_ptr<const DiskGrid> grid,
                         const ImmersionLimits& lim) {
  AnalyticImmersion a = catalog_analytic(name, params);
  std::string tag = name;
  Immersion imm = build_from_analytic(a, tag, std::move(grid), lim);
  record_energy(imm, lim);
  return imm;
}

Immersion make_perturbed_immersion(const std::string& base, const ParamMap& params,
                                   double amplitude, std::uint64_t seed,
                                   std::shared_ptr<const DiskGrid> grid,
                                   const ImmersionLimits& lim) {
  AnalyticImmersion a = catalog_analytic(base, params);
  GraphHeight gh = random_height(amplitude, seed, 3);
  AnalyticImmersion pa = with_height_offset(a, gh);
  Immersion imm = build_from_analytic(
      pa, base + "+perturb", std::move(grid), lim);
  record_energy(imm, lim);
  return imm;
}

Immersion scaled_immersion(const Immersion& imm, double c, const ImmersionLimits& lim) {
  if (!imm.analytic)
    throw RejectedImmersion("scaling requires an analytic provider");
  AnalyticImmersion a = *imm.analytic;
  AnalyticImmersion s = a;
  auto wrap = [c](std::function<VecA(double, double)> f) {
    return [c, f](double x, double y) { return VecA(c * f(x, y)); };
  };
  s.phi = wrap(a.phi);
  s.d1 = wrap(a.d1);
  s.d2 = wrap(a.d2);
  s.d11 = wrap(a.d11);
  s.d12 = wrap(a.d12);
  s.d22 = wrap(a.d22);
  Immersion out = build_from_analytic(s, imm.tag + "*scaled", imm.grid, lim);
  record_energy(out, lim);
  return out;
}

CurvatureData curvature(const Immersion& imm) {
  const DiskGrid& g = *imm.grid;
  const int m = imm.m;
  CurvatureData cd{
      m,
      ScalarField(g, 0.0),
      ScalarField(g, 0.0),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      MvField(g, MultiVector::zero(m)),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      ScalarField(g, 0.0),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      VecField(g, VecA::Zero()),
      PairField<MultiVector>(MvField(g, MultiVector::zero(m)),
                             MvField(g, MultiVector::zero(m))),
      ScalarField(g, 0.0),
      ScalarField(g, 0.0)};

  VecField d1f(g, VecA::Zero()), d2f(g, VecA::Zero());
  VecField d11f(g, VecA::Zero()), d12f(g, VecA::Zero()), d22f(g, VecA::Zero());
  if (imm.analytic) {
    const AnalyticImmersion& a = *imm.analytic;
    for (int j = 0; j < g.n(); ++j)
      for (int i = 0; i < g.n(); ++i) {
        const int id = g.id(i, j);
        const double x = g.x(i), y = g.y(j);
        d1f.set(id, a.d1(x, y));
        d2f.set(id, a.d2(x, y));
        d11f.set(id, a.d11(x, y));
        d12f.set(id, a.d12(x, y));
        d22f.set(id, a.d22(x, y));
      }
  } else {
    d1f = dx(imm.phi);
    d2f = dy(imm.phi);
    d11f = dxx(imm.phi);
    d12f = dxy(imm.phi);
    d22f = dyy(imm.phi);
  }

  for (int id = 0; id < g.node_count(); ++id) {
    if (!d1f.defined(id) || !d2f.defined(id) || !d11f.defined(id) ||
        !d12f.defined(id) || !d22f.defined(id))
      continue;
    const VecA t1 = d1f.at(id), t2 = d2f.at(id);
    const double el = t1.norm();
    if (el < 1e-8) throw SingularImmersion("degenerate metric (e^lambda < 1e-8)");
    const double lam = std::log(el);
    const double e2l = el * el;
    const VecA u1 = t1 / el;
    const VecA u2 = t2 / t2.norm();

    cd.lam.set(id, lam);
    cd.e2lam.set(id, e2l);
    cd.d1phi.set(id, t1);
    cd.d2phi.set(id, t2);
    cd.e1.set(id, u1);
    cd.e2.set(id, u2);

    MultiVector w = wedge(to_mv(m, t1), to_mv(m, t2));
    const double wn = w.norm();
    if (wn < 1e-14) throw SingularImmersion("degenerate tangent plane");
    cd.gauss.set(id, w * (1.0 / wn));

    auto pin = [&](const VecA& v) {
      return VecA(v - v.dot(u1) * u1 - v.dot(u2) * u2);
    };
    const VecA a11 = pin(d11f.at(id));
    const VecA a12 = pin(d12f.at(id));
    const VecA a22 = pin(d22f.at(id));
    cd.A11.set(id, a11);
    cd.A12.set(id, a12);
    cd.A22.set(id, a22);
    const VecA h = 0.5 / e2l * (a11 + a22);
    cd.H.set(id, h);
    cd.K.set(id, (a11.dot(a22) - a12.dot(a12)) / (e2l * e2l));
    cd.h0_11.set(id, VecA(a11 - e2l * h));
    cd.h0_12.set(id, a12);
    cd.h0_22.set(id, VecA(a22 - e2l * h));
    cd.a_norm_g.set(id,
                    std::sqrt((a11.squaredNorm() + 2.0 * a12.squaredNorm() +
                               a22.squaredNorm())) /
                        e2l);
  }

  cd.grad_gauss = PairField<MultiVector>(dx(cd.gauss), dy(cd.gauss));
  for (int id = 0; id < g.node_count(); ++id)
    if (cd.grad_gauss.defined(id)) {
      const double gx = inner(cd.grad_gauss.s1.at(id), cd.grad_gauss.s1.at(id));
      const double gy = inner(cd.grad_gauss.s2.at(id), cd.grad_gauss.s2.at(id));
      cd.grad_n_sq.set(id, gx + gy);
    }
  return cd;
}

namespace {

void record_energy(Immersion& imm, const ImmersionLimits& lim) {
  CurvatureData cd = curvature(imm);
  const DiskGrid& g = *imm.grid;
  double e = 0.0;
  const double h2 = g.h() * g.h();
  for (int id = 0; id < g.node_count(); ++id)
    if (g.interior(id) && cd.grad_n_sq.defined(id)) e += cd.grad_n_sq.at(id) * h2;
  imm.gauss_energy = e;
  imm.energy_small = e < lim.energy_small_threshold;
}

}  // namespace

ScalarField liouville_residual(const CurvatureData& cd) {
  ScalarField dl = laplacian(cd.lam);
  ScalarField r(cd.lam.grid(), 0.0);
  for (int id = 0; id < cd.lam.grid().node_count(); ++id)
    if (dl.defined(id) && cd.K.defined(id))
      r.set(id, -dl.at(id) - cd.e2lam.at(id) * cd.K.at(id));
  return r;
}

VecField immersion_laplace_defect(const Immersion& imm, const CurvatureData& cd) {
  VecField lap = laplacian(imm.phi);
  VecField r(imm.phi.grid(), VecA::Zero());
  for (int id = 0; id < imm.phi.grid().node_count(); ++id)
    if (lap.defined(id) && cd.H.defined(id))
      r.set(id, VecA(lap.at(id) - 2.0 * cd.e2lam.at(id) * cd.H.at(id)));
  return r;
}

CoulombReport coulomb_identity_check(const Immersion& imm, const CurvatureData& cd,
                                     const SolverOptions& opt) {
  CoulombReport rep;
  const DiskGrid& g = *imm.grid;
  const Subdisk unit{0.0, 0.0, 1.0};
  const Subdisk d34{0.0, 0.0, 0.75};

  ScalarField lhs = laplacian(cd.lam);
  ScalarField rhs = jacobian_product(cd.e1, cd.e2);
  ScalarField diff(g, 0.0);
  for (int id = 0; id < g.node_count(); ++id)
    if (lhs.defined(id) && rhs.defined(id)) diff.set(id, lhs.at(id) - rhs.at(id));
  rep.identity_l1 = lp(diff, 1.0, unit);

  WenteResult w = wente_solve(cd.e1, cd.e2, opt);
  rep.wente = w.record;

  ScalarField nu(g, 0.0);
  for (int id = 0; id < g.node_count(); ++id)
    if (cd.lam.defined(id) && w.mu.defined(id))
      nu.set(id, cd.lam.at(id) - w.mu.at(id));
  double mean = 0.0;
  long cnt = 0;
  for (int id = 0; id < g.node_count(); ++id)
    if (nu.defined(id) && g.interior(id) && d34.contains(g.xof(id), g.yof(id))) {
      mean += nu.at(id);
      ++cnt;
    }
  if (cnt > 0) mean /= static_cast<double>(cnt);
  double osc = 0.0;
  for (int id = 0; id < g.node_count(); ++id)
    if (nu.defined(id) && g.interior(id) && d34.contains(g.xof(id), g.yof(id)))
      osc = std::max(osc, std::abs(nu.at(id) - mean));
  rep.nu_minus_mean_linf = osc;

  rep.harnack = harnack_ratio(cd.lam, d34).value;
  {
    PairField<double> gl = gradient(cd.lam);
    rep.grad_lam_weak_l2 = weak_l2_quasinorm(magnitude_field(gl), unit).value;
  }
  rep.epsilon0_sq = imm.gauss_energy;
  rep.laplace_phi_defect_l1 = lp(immersion_laplace_defect(imm, cd), 1.0, unit);
  rep.degenerate = rep.wente.degenerate;
  return rep;
}

}  // namespace wlab
