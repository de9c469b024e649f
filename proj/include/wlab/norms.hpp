#pragma once

#include <string>

#include "wlab/field.hpp"

namespace wlab {

enum class NormKind { Lp, WeakL2, Linf, HarnackRatio };

struct NormValue {
  NormKind kind;
  double p = 0.0;  // for Lp
  Subdisk domain;
  double value = 0.0;
};

// Midpoint-rule L^p quasi-quadrature over subdisk nodes that are interior to
// the unit disk; p = inf takes the node max. Undefined nodes are skipped
// (node-sampled fields may exclude e.g. a singular origin).
NormValue lp_norm(const ScalarField& absf, double p, const Subdisk& sd);

// Marcinkiewicz weak-L2 quasinorm: sup over the sampled levels of
// t |{|f| >= t}|^{1/2} with node-count quadrature for the measure.
NormValue weak_l2_quasinorm(const ScalarField& absf, const Subdisk& sd);

// ||e^lambda||_inf ||e^{-lambda}||_inf over subdisk nodes.
NormValue harnack_ratio(const ScalarField& lambda, const Subdisk& sd);

template <class T>
NormValue lp_norm(const GridField<T>& f, double p, const Subdisk& sd) {
  return lp_norm(magnitude_field(f), p, sd);
}
template <class T>
NormValue lp_norm(const PairField<T>& f, double p, const Subdisk& sd) {
  return lp_norm(magnitude_field(f), p, sd);
}
template <class T>
NormValue weak_l2_quasinorm(const GridField<T>& f, const Subdisk& sd) {
  return weak_l2_quasinorm(magnitude_field(f), sd);
}

inline double lp(const ScalarField& absf, double p, const Subdisk& sd) {
  return lp_norm(absf, p, sd).value;
}
template <class T>
double lp(const GridField<T>& f, double p, const Subdisk& sd) {
  return lp_norm(magnitude_field(f), p, sd).value;
}
template <class T>
double lp(const PairField<T>& f, double p, const Subdisk& sd) {
  return lp_norm(magnitude_field(f), p, sd).value;
}

}  // namespace wlab
