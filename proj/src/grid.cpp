#include "wlab/grid.hpp"

namespace wlab {

DiskGrid::DiskGrid(int n_axis) : n_(n_axis), h_(2.0 / (n_axis - 1)) {
  if (n_axis < 33 || n_axis % 2 == 0)
    throw std::invalid_argument("grid size must be odd and >= 33");
  klass_.resize(static_cast<std::size_t>(n_) * n_);
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      const double r = std::hypot(x(i), y(j));
      NodeClass k;
      if (r < 1.0 - 0.5 * h_)
        k = NodeClass::Interior;
      else if (r <= 1.0 + 2.0 * h_)
        k = NodeClass::Band;
      else
        k = NodeClass::Exterior;
      klass_[id(i, j)] = k;
    }
  }
}

void DiskGrid::check_subdisk(const Subdisk& sd) const {
  if (!sd.inside_unit_disk())
    throw DegenerateSubdisk("subdisk escapes the unit disk");
  if (sd.rho < h_)
    throw DegenerateSubdisk("subdisk radius below grid spacing");
}

}  // namespace wlab
