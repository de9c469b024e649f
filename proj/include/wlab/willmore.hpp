#pragma once

#include <optional>

#include "wlab/geometry.hpp"

namespace wlab {

struct UnsupportedCodimension : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class InhKind { None, ConformalQ, Helfrich, Chen, Custom };

// Right-hand-side data for the divergence-form problem
// div(grad H - 2 pi_n grad H + |H|^2 grad Phi + T) = v.
struct Inhomogeneity {
  InhKind kind = InhKind::None;
  std::optional<PairField<VecA>> T;
  std::optional<VecField> v;
  double q_div_defect = 0.0;   // conformal_q: divergence of q (should vanish)
  double v_normality = 0.0;    // max tangential part of v relative to |v|
  bool q_warning = false;

  bool has_T() const { return T.has_value(); }
  bool has_v() const { return v.has_value(); }
};

// Symmetric trace-free 2-form q given by its (q11, q12) components.
struct QField {
  ScalarField q11, q12;
};

// Built-in divergence-free presets: "const" (q11=a, q12=b), "linear"
// (q11=x, q12=-y), "quadratic" (q11=x^2-y^2, q12=-2xy).
QField q_preset(const DiskGrid& g, const std::string& name, double a = 1.0,
                double b = 0.5);
QField q_from_wimm(const DiskGrid& g, const std::string& path);

Inhomogeneity no_inhomogeneity();
// T = -e^{-2 lam} M_q perp-grad(Phi), v = 0.
Inhomogeneity conformal_q_inhomogeneity(const CurvatureData& cd, const QField& q);
// v = 2 e^{2 lam} (beta + alpha*Hs + gamma*K) nhat, T = 0; m = 3 only.
Inhomogeneity helfrich_inhomogeneity(const CurvatureData& cd, double alpha,
                                     double beta, double gamma);
Inhomogeneity chen_inhomogeneity();
Inhomogeneity custom_inhomogeneity(PairField<VecA> T, const CurvatureData& cd);

// Scalar mean curvature and unit normal for m = 3 (orientation nhat =
// star(star n), so the stereographic sphere of radius R has Hs = +1/R).
VecField unit_normal_m3(const CurvatureData& cd);
ScalarField scalar_mean_curvature_m3(const CurvatureData& cd);

// Delta_perp H + <A.H, A>_g - 2 |H|^2 H - W with
// Delta_perp H = e^{-2 lam} pi_n div(pi_n grad H).
VecField classical_residual(const CurvatureData& cd, const VecField* W = nullptr);

struct FluxResult {
  PairField<VecA> flux;
  VecField residual;  // div(flux) - v
};
FluxResult divergence_flux(const CurvatureData& cd, const Inhomogeneity& inh);

struct DecomposeReport {
  double wedge_defect = 0.0;  // max nodewise defect of the wedge identity
  double dot_defect = 0.0;    // max nodewise defect of the dot identity
};
// Splits T into tangential coefficients and normal parts by frame projection
// and verifies the two pointwise decomposition identities.
DecomposeReport t_decompose(const PairField<VecA>& T, const CurvatureData& cd);

struct TangentialBoundReport {
  double sup_ratio = 0.0;   // sup |pi_T grad H| / (e^lam |grad n|^2)
  double cutoff = 0.0;      // |grad n|^2 floor used for the sup
  bool degenerate = false;  // no node above the cutoff
};
TangentialBoundReport tangential_bound_probe(const CurvatureData& cd);

struct ChenReport {
  double laplace_h_l2 = 0.0;     // ||e^{-2 lam} laplace H||_{L2(D_1/2)}
  double cubic_ratio_sup = 0.0;  // sup |Delta_g H| / |A|_g^3
  double cubic_ratio_med = 0.0;
  bool degenerate = false;
};
ChenReport chen_probe(const CurvatureData& cd);

}  // namespace wlab
