#include "wlab/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wlab {

namespace {

// Quadrature node set: subdisk nodes interior to the unit disk.
template <class Fn>
void for_quadrature_nodes(const ScalarField& f, const Subdisk& sd, Fn&& fn) {
  const DiskGrid& g = f.grid();
  g.check_subdisk(sd);
  for (int id = 0; id < g.node_count(); ++id) {
    if (!g.interior(id)) continue;
    if (!sd.contains(g.xof(id), g.yof(id))) continue;
    if (!f.defined(id)) continue;
    fn(f.at(id));
  }
}

}  // namespace

NormValue lp_norm(const ScalarField& absf, double p, const Subdisk& sd) {
  if (p < 1.0) throw std::invalid_argument("lp_norm requires p >= 1");
  const double h2 = absf.grid().h() * absf.grid().h();
  double acc = 0.0;
  long count = 0;
  if (std::isinf(p)) {
    for_quadrature_nodes(absf, sd, [&](double v) {
      acc = std::max(acc, std::abs(v));
      ++count;
    });
  } else {
    for_quadrature_nodes(absf, sd, [&](double v) {
      acc += std::pow(std::abs(v), p) * h2;
      ++count;
    });
    acc = std::pow(acc, 1.0 / p);
  }
  if (count == 0) throw DegenerateSubdisk("no quadrature nodes in subdisk");
  return NormValue{std::isinf(p) ? NormKind::Linf : NormKind::Lp, p, sd, acc};
}

NormValue weak_l2_quasinorm(const ScalarField& absf, const Subdisk& sd) {
  const double h2 = absf.grid().h() * absf.grid().h();
  std::vector<double> vals;
  for_quadrature_nodes(absf, sd, [&](double v) { vals.push_back(std::abs(v)); });
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  // After sorting, the measure of {|f| >= vals[k]} is (k+1) h^2; the sup over
  // levels is approached just below each distinct magnitude.
  double best = 0.0;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    if (k + 1 < vals.size() && vals[k + 1] == vals[k]) continue;
    best = std::max(best, vals[k] * std::sqrt((k + 1) * h2));
  }
  return NormValue{NormKind::WeakL2, 2.0, sd, best};
}

NormValue harnack_ratio(const ScalarField& lambda, const Subdisk& sd) {
  double emax = 0.0, eminv = 0.0;
  for_quadrature_nodes(lambda, sd, [&](double l) {
    emax = std::max(emax, std::exp(l));
    eminv = std::max(eminv, std::exp(-l));
  });
  return NormValue{NormKind::HarnackRatio, 0.0, sd, emax * eminv};
}

}  // namespace wlab
