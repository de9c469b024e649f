#pragma once

#include <memory>
#include <optional>

#include "wlab/field.hpp"
#include "wlab/norms.hpp"

namespace wlab {

struct SolveReport {
  int iterations = 0;
  double final_residual = 0.0;  // relative l2 residual of the linear system
  double tol = 0.0;
  bool converged = true;
};

struct SolverFailure : std::runtime_error {
  explicit SolverFailure(const SolveReport& r)
      : std::runtime_error("linear solve failed to converge"), report(r) {}
  SolveReport report;
};

struct SolverOptions {
  double tol = 1e-10;
  int max_iter_factor = 20;  // cap = factor * n_axis^2
};

// Discrete Dirichlet Laplacian on a disk domain. Unknowns are the lattice
// nodes strictly inside the circle; legs crossing the circle use
// Shortley-Weller one-sided corrections in the direction-scaled (ghost value)
// form, which keeps the system symmetric positive definite. Assembled once,
// reusable across right-hand sides.
class DirichletSystem {
 public:
  DirichletSystem(const DiskGrid& g, const Subdisk& sd);

  const DiskGrid& grid() const { return *g_; }
  const Subdisk& domain() const { return sd_; }
  int unknown_count() const { return static_cast<int>(nodes_.size()); }

  // Solves laplace(u) = rhs with u = boundary on the circle. The boundary
  // field must be defined on the band beyond each crossing; rhs must be
  // defined on the unknowns (missing entries are treated as zero).
  ScalarField solve(const ScalarField& rhs, const ScalarField& boundary,
                    const SolverOptions& opt, SolveReport* rep) const;

 private:
  struct Leg {
    int nbr = -1;       // unknown index of the neighbour, or -1 when cut
    double theta = 1.0; // leg fraction to the circle when cut
    int q1 = -1, q2 = -1;  // sample nodes past the crossing for boundary data
  };
  struct Row {
    int node = 0;
    double diag = 0.0;
    Leg leg[4];
  };

  std::vector<double> run_cg(const std::vector<double>& b, const SolverOptions& opt,
                             SolveReport* rep) const;

  const DiskGrid* g_;
  Subdisk sd_;
  std::vector<Row> rows_;
  std::vector<int> nodes_;     // unknown -> node id
  std::vector<int> node2unk_;  // node id -> unknown or -1
};

struct PoissonResult {
  ScalarField u;
  SolveReport report;
};

// laplace(u) = rhs on the subdisk, u = boundary on its circle.
PoissonResult poisson_dirichlet(const ScalarField& rhs, const ScalarField& boundary,
                                const Subdisk& sd, const SolverOptions& opt = {});

// Componentwise zero-boundary solves sharing one assembled system.
VecField poisson_dirichlet_zero(const DirichletSystem& sys, const VecField& rhs, int m,
                                const SolverOptions& opt, SolveReport* rep);
MvField poisson_dirichlet_zero(const DirichletSystem& sys, const MvField& rhs,
                               const SolverOptions& opt, SolveReport* rep);

// Least-squares potential recovery on a disk domain: minimizes the edgewise
// mismatch of grad(u) (or perp-grad) against sampled pair data. The normal
// equations form a Neumann-type graph Laplacian, solved by CG on the
// mean-zero complement; the result is mean-normalized over the domain.
class PotentialSystem {
 public:
  PotentialSystem(const DiskGrid& g, const Subdisk& sd);

  const DiskGrid& grid() const { return *g_; }
  int unknown_count() const { return static_cast<int>(nodes_.size()); }

  // Edge targets: gx along x-edges, gy along y-edges (already oriented as the
  // desired du/dx, du/dy). Values are averaged from the two edge endpoints.
  ScalarField solve(const ScalarField& gx, const ScalarField& gy,
                    const SolverOptions& opt, SolveReport* rep) const;

 private:
  struct Edge {
    int a = 0, b = 0;  // unknown indices, b is +x or +y neighbour of a
    bool xdir = true;
  };
  const DiskGrid* g_;
  Subdisk sd_;
  std::vector<Edge> edges_;
  std::vector<int> nodes_;
  std::vector<int> node2unk_;
  std::vector<double> degree_;
};

struct PotentialRecovery {
  ScalarField pot;          // mean-normalized over the domain
  double defect = 0.0;      // l2 norm of the reconstruction mismatch
  double defect_rel = 0.0;  // relative to the data l2 norm
  double incompat = 0.0;    // l2 of div (divfree mode) or curl (curlfree mode)
  bool compat_warning = false;
  SolveReport report;
};

// L with perp-grad(L) = G; requires small discrete divergence of G.
PotentialRecovery potential_from_divfree(const PairField<double>& G, const Subdisk& sd,
                                         const SolverOptions& opt = {},
                                         double compat_tol = 0.1);

// R with grad(R) = G; requires small discrete curl of G.
PotentialRecovery potential_from_curlfree(const PairField<double>& G, const Subdisk& sd,
                                          const SolverOptions& opt = {},
                                          double compat_tol = 0.1);

struct VecPotentialRecovery {
  VecField pot;
  double defect = 0.0;
  double incompat = 0.0;
  bool compat_warning = false;
  SolveReport report;
};
struct MvPotentialRecovery {
  MvField pot;
  double defect = 0.0;
  double incompat = 0.0;
  bool compat_warning = false;
  SolveReport report;
};

VecPotentialRecovery potential_from_divfree(const PairField<VecA>& G, int m,
                                            const Subdisk& sd,
                                            const SolverOptions& opt = {});
MvPotentialRecovery potential_from_curlfree(const PairField<MultiVector>& G,
                                            const Subdisk& sd,
                                            const SolverOptions& opt = {});

// Slotwise Jacobian pairing grad(a) . perp-grad(b).
ScalarField jacobian_product(const ScalarField& a, const ScalarField& b);
ScalarField jacobian_product(const VecField& a, const VecField& b);

struct WenteRecord {
  double mu_linf = 0.0;
  double grad_mu_l2 = 0.0;
  double lhs = 0.0;            // mu_linf + grad_mu_l2
  double grad_a_l2 = 0.0;
  double grad_b_l2 = 0.0;
  double rhs_product = 0.0;    // grad_a_l2 * grad_b_l2
  double ratio = 0.0;          // lhs / rhs_product (0 when degenerate)
  bool degenerate = false;
  SolveReport report;
};

struct WenteResult {
  ScalarField mu;
  WenteRecord record;
};

// laplace(mu) = grad(a) . perp-grad(b) on the unit disk, mu = 0 on the circle.
WenteResult wente_solve(const ScalarField& a, const ScalarField& b,
                        const SolverOptions& opt = {});
WenteResult wente_solve(const VecField& a, const VecField& b,
                        const SolverOptions& opt = {});

struct WeakLemmaReport {
  double l_weak_l2 = 0.0;       // ||L - mean||_{L^{2,inf}}
  double g1_surrogate = 0.0;    // L2 norm of G1's mean-zero primitive
  double g2_l1 = 0.0;
  double ratio = 0.0;
  bool degenerate = false;
  double div_defect = 0.0;      // discrete divergence of G1+G2
};

// Probe of the weak-L2 potential bound for div-free G = G1 + G2.
WeakLemmaReport weak_lemma_check(const PairField<double>& G1, const PairField<double>& G2,
                                 const Subdisk& sd, const SolverOptions& opt = {});

struct MorreyReport {
  double grad_u_ls = 0.0;       // ||grad u||_{L^s(D_{5rho/8})}
  double grad_u_weak = 0.0;     // ||grad u||_{L^{2,inf}(D_rho)}
  double f_lp = 0.0;            // ||laplace f||_{L^p(D_rho)}
  double bracket = 0.0;         // rho^{2/s-1} weak + rho^{2/s-2/p+1} f_lp
  double ratio = 0.0;
  double s = 0.0;
  int picard_iterations = 0;
  bool contracted = false;
  bool degenerate = false;
};

// Synthesizes u solving laplace(u) = grad b . perp-grad u + div(b grad f) by
// Picard iteration on the Dirichlet solver (u = 0 on the circle), then
// evaluates the interior decay estimate with s = 2p.
MorreyReport morrey_decay_probe(const ScalarField& b, const ScalarField& f, double p,
                                const Subdisk& sd, const SolverOptions& opt = {});

}  // namespace wlab
