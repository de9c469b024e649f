#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "wlab/elliptic.hpp"
#include "wlab/field.hpp"

namespace wlab {

struct RejectedImmersion : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SingularImmersion : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed-form evaluators for an immersion and its derivatives.
struct AnalyticImmersion {
  int m = 3;
  std::function<VecA(double, double)> phi, d1, d2, d11, d12, d22;
};

struct ImmersionLimits {
  double nondegeneracy_cap = 1e6;
  double conformal_threshold = 0.05;
  double energy_small_threshold = 8.0 * 3.14159265358979323846 / 3.0;
};

// Grid-sampled map Phi: D_1(0) -> R^m with conformal metadata. Samples cover
// the whole [-1,1]^2 square so stencils near the circle are well fed.
struct Immersion {
  std::shared_ptr<const DiskGrid> grid;
  int m = 3;
  std::string tag;
  VecField phi;
  std::optional<AnalyticImmersion> analytic;

  // Recorded invariants.
  double nondegeneracy_c = 1.0;
  double conformal_defect = 0.0;
  bool conformal_ok = true;
  double gauss_energy = 0.0;  // int_{D_1} |grad n|^2
  bool energy_small = false;
};

struct CatalogEntry {
  std::string name;
  std::string params;  // human-readable parameter summary
  int m = 3;
  std::string description;
};
const std::vector<CatalogEntry>& immersion_catalog();

using ParamMap = std::map<std::string, double>;

// Catalog entries: plane, graph_bump(t,support), sphere(radius), catenoid,
// enneper, clifford. Throws RejectedImmersion on unknown names or
// nondegeneracy violations.
Immersion make_immersion(const std::string& name, const ParamMap& params,
                         std::shared_ptr<const DiskGrid> grid,
                         const ImmersionLimits& lim = {});

// Seeded graph perturbation added to the last coordinate of a base entry
// (sum of Gaussian bumps with amplitude t).
Immersion make_perturbed_immersion(const std::string& base, const ParamMap& params,
                                   double amplitude, std::uint64_t seed,
                                   std::shared_ptr<const DiskGrid> grid,
                                   const ImmersionLimits& lim = {});

// Dilated copy c * Phi (analytic provider scaled as well).
Immersion scaled_immersion(const Immersion& imm, double c,
                           const ImmersionLimits& lim = {});

// Curvature apparatus in the coordinate frame of a (nearly) conformal
// immersion: lambda = log|d1 phi|, unit tangent frame, normal projection,
// second fundamental form, mean and Gauss curvature, trace-free part.
struct CurvatureData {
  int m = 3;
  ScalarField lam;    // conformal factor exponent
  ScalarField e2lam;  // e^{2 lambda}
  VecField d1phi, d2phi;
  VecField e1, e2;              // unit coordinate frame
  MvField gauss;                // unit 2-vector d1 ^ d2 / |d1 ^ d2|
  VecField A11, A12, A22;       // normal-projected Hessian
  VecField H;                   // mean curvature vector
  ScalarField K;                // Gauss curvature
  VecField h0_11, h0_12, h0_22; // trace-free second fundamental form
  PairField<MultiVector> grad_gauss;
  ScalarField grad_n_sq;        // |grad n|^2
  ScalarField a_norm_g;         // |A|_g

  VecA pi_normal(int id, const VecA& v) const {
    return v - v.dot(e1.at(id)) * e1.at(id) - v.dot(e2.at(id)) * e2.at(id);
  }
  VecA pi_tangent(int id, const VecA& v) const {
    return v.dot(e1.at(id)) * e1.at(id) + v.dot(e2.at(id)) * e2.at(id);
  }
};

CurvatureData curvature(const Immersion& imm);

// -laplace(lam) - e^{2 lam} K, small on smooth conformal entries.
ScalarField liouville_residual(const CurvatureData& cd);

// laplace(phi) - 2 e^{2 lam} H.
VecField immersion_laplace_defect(const Immersion& imm, const CurvatureData& cd);

struct CoulombReport {
  double identity_l1 = 0.0;  // ||laplace lam - grad e1 . perp-grad e2||_L1
  WenteRecord wente;
  double nu_minus_mean_linf = 0.0;  // harmonic remainder oscillation on D_{3/4}
  double harnack = 0.0;             // on D_{3/4}
  double grad_lam_weak_l2 = 0.0;
  double epsilon0_sq = 0.0;
  double laplace_phi_defect_l1 = 0.0;
  bool degenerate = false;
};

// Checks the Coulomb-frame identity for the conformal factor, splits lam into
// the Wente part and the harmonic remainder, and reports the associated
// estimate quantities.
CoulombReport coulomb_identity_check(const Immersion& imm, const CurvatureData& cd,
                                     const SolverOptions& opt = {});

// --- WIMM file format --------------------------------------------------------
//
// Text format: "WIMM 1" / "m N x_lo x_hi y_lo y_hi" / N*N rows of m reals in
// row-major node order over the standard [-1,1]^2 lattice.

struct WimmData {
  int ncomp = 0;
  int n = 0;
  std::vector<double> values;  // node-major, then component
};

void write_wimm(const std::string& path, const VecField& f, int ncomp);
void write_wimm_pair(const std::string& path, const ScalarField& c1,
                     const ScalarField& c2);
WimmData read_wimm(const std::string& path);

Immersion load_wimm_immersion(const std::string& path, const ImmersionLimits& lim = {});

}  // namespace wlab
