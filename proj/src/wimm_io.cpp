#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wlab/geometry.hpp"

namespace wlab {

namespace {

struct MalformedWimm : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest decimal text that round-trips the double exactly.
std::string fmt_double(double v) {
  char buf[40];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_rows(std::ostream& out, const DiskGrid& g, int ncomp,
                const std::function<double(int, int)>& value) {
  out << "WIMM 1\n";
  out << ncomp << ' ' << g.n() << " -1 1 -1 1\n";
  for (int id = 0; id < g.node_count(); ++id) {
    for (int c = 0; c < ncomp; ++c) {
      if (c) out << ' ';
      out << fmt_double(value(id, c));
    }
    out << '\n';
  }
}

}  // namespace

void write_wimm(const std::string& path, const VecField& f, int ncomp) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_rows(out, f.grid(), ncomp, [&](int id, int c) {
    return f.defined(id) ? f.at(id)[c] : 0.0;
  });
}

void write_wimm_pair(const std::string& path, const ScalarField& c1,
                     const ScalarField& c2) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  write_rows(out, c1.grid(), 2, [&](int id, int c) {
    const ScalarField& f = c == 0 ? c1 : c2;
    return f.defined(id) ? f.at(id) : 0.0;
  });
}

WimmData read_wimm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::string magic;
  int version = 0;
  if (!(in >> magic >> version) || magic != "WIMM" || version != 1)
    throw MalformedWimm("bad WIMM header in " + path);
  WimmData d;
  double xlo, xhi, ylo, yhi;
  if (!(in >> d.ncomp >> d.n >> xlo >> xhi >> ylo >> yhi))
    throw MalformedWimm("bad WIMM size line in " + path);
  if (d.ncomp < 1 || d.ncomp > 6) throw MalformedWimm("bad component count");
  if (d.n < 33 || d.n % 2 == 0) throw MalformedWimm("grid size must be odd and >= 33");
  if (xlo != -1.0 || xhi != 1.0 || ylo != -1.0 || yhi != 1.0)
    throw MalformedWimm("WIMM files use the standard [-1,1]^2 lattice");
  const long total = static_cast<long>(d.n) * d.n * d.ncomp;
  d.values.resize(total);
  for (long k = 0; k < total; ++k)
    if (!(in >> d.values[k])) throw MalformedWimm("short WIMM payload in " + path);
  return d;
}

Immersion load_wimm_immersion(const std::string& path, const ImmersionLimits& lim) {
  WimmData d = read_wimm(path);
  if (d.ncomp < 3) throw RejectedImmersion("immersion files need at least 3 components");
  auto grid = std::make_shared<const DiskGrid>(d.n);
  Immersion imm{grid, d.ncomp, "file:" + path, VecField(*grid, VecA::Zero()),
                std::nullopt, 1.0, 0.0, true, 0.0, false};
  for (int id = 0; id < grid->node_count(); ++id) {
    VecA v = VecA::Zero();
    for (int c = 0; c < d.ncomp; ++c) v[c] = d.values[static_cast<long>(id) * d.ncomp + c];
    imm.phi.set(id, v);
  }

  // Invariants from finite differences.
  VecField d1f = dx(imm.phi), d2f = dy(imm.phi);
  double cmax = 1.0, defect = 0.0;
  for (int id = 0; id < grid->node_count(); ++id) {
    if (!grid->interior(id) || !d1f.defined(id) || !d2f.defined(id)) continue;
    const double n1 = d1f.at(id).squaredNorm(), n2 = d2f.at(id).squaredNorm();
    if (n1 < 1e-16 || n2 < 1e-16)
      throw RejectedImmersion("degenerate tangent in " + path);
    cmax = std::max(cmax, std::max(n1 / n2, n2 / n1));
    defect = std::max(defect,
                      std::max(std::abs(d1f.at(id).dot(d2f.at(id))),
                               std::abs(std::sqrt(n1) - std::sqrt(n2))) /
                          n1);
  }
  imm.nondegeneracy_c = cmax;
  imm.conformal_defect = defect;
  imm.conformal_ok = defect <= lim.conformal_threshold;
  if (cmax > lim.nondegeneracy_cap)
    throw RejectedImmersion("metric nondegeneracy cap exceeded in " + path);

  CurvatureData cd = curvature(imm);
  const DiskGrid& g = *grid;
  double e = 0.0;
  const double h2 = g.h() * g.h();
  for (int id = 0; id < g.node_count(); ++id)
    if (g.interior(id) && cd.grad_n_sq.defined(id)) e += cd.grad_n_sq.at(id) * h2;
  imm.gauss_energy = e;
  imm.energy_small = e < lim.energy_small_threshold;
  return imm;
}

}  // namespace wlab
