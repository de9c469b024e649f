#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace wlab {

struct DegenerateSubdisk : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Disk D_rho(cx, cy); descriptors must stay inside the unit disk.
struct Subdisk {
  double cx = 0.0;
  double cy = 0.0;
  double rho = 1.0;

  bool inside_unit_disk(double slack = 1e-12) const {
    return std::hypot(cx, cy) + rho <= 1.0 + slack;
  }
  double dist(double x, double y) const { return std::hypot(x - cx, y - cy); }
  // Closed-disk membership used by norms and restrictions.
  bool contains(double x, double y) const {
    return dist(x, y) <= rho * (1.0 + 1e-12);
  }
  // Open-disk membership used by solvers (boundary nodes are data).
  bool strictly_inside(double x, double y) const {
    return dist(x, y) < rho * (1.0 - 1e-14);
  }
};

// Uniform node lattice over [-1,1]^2 discretizing the unit disk.
// Nodes are classified into a partition:
//   interior : |x| < 1 - h/2
//   band     : not interior, |x| <= 1 + 2h (feeds boundary data and stencils)
//   exterior : the rest of the square
class DiskGrid {
 public:
  enum class NodeClass : std::uint8_t { Interior, Band, Exterior };

  explicit DiskGrid(int n_axis);

  int n() const { return n_; }
  double h() const { return h_; }
  int node_count() const { return n_ * n_; }

  int id(int i, int j) const { return j * n_ + i; }
  int ix(int id) const { return id % n_; }
  int iy(int id) const { return id / n_; }
  double x(int i) const { return -1.0 + i * h_; }
  double y(int j) const { return -1.0 + j * h_; }
  double xof(int id) const { return x(ix(id)); }
  double yof(int id) const { return y(iy(id)); }
  double radius(int id) const { return std::hypot(xof(id), yof(id)); }

  NodeClass klass(int id) const { return klass_[id]; }
  bool interior(int id) const { return klass_[id] == NodeClass::Interior; }
  bool exterior(int id) const { return klass_[id] == NodeClass::Exterior; }

  bool in_range(int i, int j) const {
    return i >= 0 && i < n_ && j >= 0 && j < n_;
  }

  // Validates D_rho(x) subset of D_1(0) and rho >= h.
  void check_subdisk(const Subdisk& sd) const;

 private:
  int n_;
  double h_;
  std::vector<NodeClass> klass_;
};

}  // namespace wlab
