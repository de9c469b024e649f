#pragma once

#include <Eigen/Core>
#include <functional>
#include <utility>

#include "wlab/grid.hpp"
#include "wlab/multivector.hpp"

namespace wlab {

using Vec2 = Eigen::Vector2d;
// Ambient vector, first m entries used, rest zero-padded.
using VecA = Eigen::Matrix<double, 6, 1>;

inline MultiVector to_mv(int m, const VecA& v) {
  MultiVector r(m);
  for (int i = 0; i < m; ++i) r[1u << i] = v[i];
  return r;
}
inline VecA mv_to_vec(const MultiVector& a) {
  VecA v = VecA::Zero();
  for (int i = 0; i < a.ambient_dim(); ++i) v[i] = a[1u << i];
  return v;
}

// Function sampled on a DiskGrid. Nodes may be individually undefined
// (masked); differential operators propagate masks, norms skip them.
template <class T>
class GridField {
 public:
  GridField(const DiskGrid& g, T zero)
      : g_(&g), zero_(std::move(zero)),
        v_(g.node_count(), zero_), def_(g.node_count(), 0) {}

  const DiskGrid& grid() const { return *g_; }
  const T& zero_value() const { return zero_; }

  const T& at(int id) const { return v_[id]; }
  T& at(int id) { return v_[id]; }
  bool defined(int id) const { return def_[id] != 0; }
  void set(int id, T val) {
    v_[id] = std::move(val);
    def_[id] = 1;
  }
  void unset(int id) {
    v_[id] = zero_;
    def_[id] = 0;
  }

  GridField like() const { return GridField(*g_, zero_); }

 private:
  const DiskGrid* g_;
  T zero_;
  std::vector<T> v_;
  std::vector<std::uint8_t> def_;
};

using ScalarField = GridField<double>;
using VecField = GridField<VecA>;
using MvField = GridField<MultiVector>;

// R^2 (x) T valued field, stored slotwise.
template <class T>
struct PairField {
  GridField<T> s1, s2;

  PairField(GridField<T> a, GridField<T> b) : s1(std::move(a)), s2(std::move(b)) {}
  explicit PairField(const GridField<T>& proto) : s1(proto.like()), s2(proto.like()) {}

  const DiskGrid& grid() const { return s1.grid(); }
  bool defined(int id) const { return s1.defined(id) && s2.defined(id); }

  // (-s2, s1), the perp rotation.
  PairField perp() const {
    PairField r(s1.like(), s2.like());
    const int n = s1.grid().node_count();
    for (int id = 0; id < n; ++id) {
      if (!defined(id)) continue;
      r.s1.set(id, -1.0 * s2.at(id));
      r.s2.set(id, s1.at(id));
    }
    return r;
  }
};

// --- nodewise combinators ---------------------------------------------------

template <class T, class F>
GridField<T> map_field(const GridField<T>& f, F&& fn) {
  GridField<T> r = f.like();
  for (int id = 0; id < f.grid().node_count(); ++id)
    if (f.defined(id)) r.set(id, fn(f.at(id)));
  return r;
}

template <class R, class A, class B, class F>
GridField<R> zip_fields(const GridField<A>& a, const GridField<B>& b, R zero, F&& fn) {
  GridField<R> r(a.grid(), std::move(zero));
  for (int id = 0; id < a.grid().node_count(); ++id)
    if (a.defined(id) && b.defined(id)) r.set(id, fn(a.at(id), b.at(id)));
  return r;
}

template <class T>
GridField<T> add_fields(const GridField<T>& a, const GridField<T>& b, double sb = 1.0) {
  return zip_fields<T>(a, b, a.zero_value(),
                       [sb](const T& x, const T& y) { return T(x + sb * y); });
}

template <class T, class F>
GridField<T> sample_field(const DiskGrid& g, T zero, F&& fn) {
  GridField<T> r(g, std::move(zero));
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i) r.set(g.id(i, j), fn(g.x(i), g.y(j)));
  return r;
}

inline ScalarField sample_scalar(const DiskGrid& g,
                                 const std::function<double(double, double)>& fn) {
  return sample_field<double>(g, 0.0, fn);
}

// --- finite differences -----------------------------------------------------
//
// Second-order central stencils; a node's derivative is defined only when
// every stencil point is defined.

namespace detail {
template <class T>
bool have(const GridField<T>& f, int i, int j) {
  return f.grid().in_range(i, j) && f.defined(f.grid().id(i, j));
}
template <class T>
const T& val(const GridField<T>& f, int i, int j) {
  return f.at(f.grid().id(i, j));
}
}  // namespace detail

template <class T>
GridField<T> dx(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  GridField<T> r = f.like();
  const double ih2 = 1.0 / (2.0 * g.h());
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      if (detail::have(f, i + 1, j) && detail::have(f, i - 1, j))
        r.set(g.id(i, j), T((detail::val(f, i + 1, j) - detail::val(f, i - 1, j)) * ih2));
  return r;
}

template <class T>
GridField<T> dy(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  GridField<T> r = f.like();
  const double ih2 = 1.0 / (2.0 * g.h());
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      if (detail::have(f, i, j + 1) && detail::have(f, i, j - 1))
        r.set(g.id(i, j), T((detail::val(f, i, j + 1) - detail::val(f, i, j - 1)) * ih2));
  return r;
}

template <class T>
GridField<T> dxx(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  GridField<T> r = f.like();
  const double ih = 1.0 / (g.h() * g.h());
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      if (detail::have(f, i + 1, j) && detail::have(f, i, j) && detail::have(f, i - 1, j))
        r.set(g.id(i, j),
              T((detail::val(f, i + 1, j) - 2.0 * detail::val(f, i, j) +
                 detail::val(f, i - 1, j)) *
                ih));
  return r;
}

template <class T>
GridField<T> dyy(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  GridField<T> r = f.like();
  const double ih = 1.0 / (g.h() * g.h());
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      if (detail::have(f, i, j + 1) && detail::have(f, i, j) && detail::have(f, i, j - 1))
        r.set(g.id(i, j),
              T((detail::val(f, i, j + 1) - 2.0 * detail::val(f, i, j) +
                 detail::val(f, i, j - 1)) *
                ih));
  return r;
}

template <class T>
GridField<T> dxy(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  GridField<T> r = f.like();
  const double ih = 1.0 / (4.0 * g.h() * g.h());
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      if (detail::have(f, i + 1, j + 1) && detail::have(f, i - 1, j + 1) &&
          detail::have(f, i + 1, j - 1) && detail::have(f, i - 1, j - 1))
        r.set(g.id(i, j),
              T((detail::val(f, i + 1, j + 1) - detail::val(f, i - 1, j + 1) -
                 detail::val(f, i + 1, j - 1) + detail::val(f, i - 1, j - 1)) *
                ih));
  return r;
}

// 5-point Laplacian.
template <class T>
GridField<T> laplacian(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  GridField<T> r = f.like();
  const double ih = 1.0 / (g.h() * g.h());
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i)
      if (detail::have(f, i, j) && detail::have(f, i + 1, j) && detail::have(f, i - 1, j) &&
          detail::have(f, i, j + 1) && detail::have(f, i, j - 1))
        r.set(g.id(i, j),
              T((detail::val(f, i + 1, j) + detail::val(f, i - 1, j) +
                 detail::val(f, i, j + 1) + detail::val(f, i, j - 1) -
                 4.0 * detail::val(f, i, j)) *
                ih));
  return r;
}

template <class T>
PairField<T> gradient(const GridField<T>& f) {
  return PairField<T>(dx(f), dy(f));
}

// (-d2, d1)
template <class T>
PairField<T> perp_gradient(const GridField<T>& f) {
  GridField<T> gx = dx(f), gy = dy(f);
  return PairField<T>(map_field(gy, [](const T& v) { return T(-1.0 * v); }),
                      std::move(gx));
}

template <class T>
GridField<T> divergence(const PairField<T>& p) {
  return add_fields(dx(p.s1), dy(p.s2));
}

// Gradient with a second-order one-sided fallback toward the inside of the
// defined region; used for fields known only on a subdisk.
template <class T>
PairField<T> gradient_onesided(const GridField<T>& f) {
  const DiskGrid& g = f.grid();
  PairField<T> r(f.like(), f.like());
  const double ih2 = 1.0 / (2.0 * g.h());
  auto deriv = [&](int i, int j, int di, int dj, T& out) -> bool {
    if (detail::have(f, i + di, j + dj) && detail::have(f, i - di, j - dj)) {
      out = T((detail::val(f, i + di, j + dj) - detail::val(f, i - di, j - dj)) * ih2);
      return true;
    }
    if (detail::have(f, i, j) && detail::have(f, i + di, j + dj) &&
        detail::have(f, i + 2 * di, j + 2 * dj)) {
      out = T((-3.0 * detail::val(f, i, j) + 4.0 * detail::val(f, i + di, j + dj) -
               detail::val(f, i + 2 * di, j + 2 * dj)) *
              ih2);
      return true;
    }
    if (detail::have(f, i, j) && detail::have(f, i - di, j - dj) &&
        detail::have(f, i - 2 * di, j - 2 * dj)) {
      out = T((3.0 * detail::val(f, i, j) - 4.0 * detail::val(f, i - di, j - dj) +
               detail::val(f, i - 2 * di, j - 2 * dj)) *
              ih2);
      return true;
    }
    return false;
  };
  for (int j = 0; j < g.n(); ++j)
    for (int i = 0; i < g.n(); ++i) {
      T gx = f.zero_value(), gy = f.zero_value();
      if (deriv(i, j, 1, 0, gx) && deriv(i, j, 0, 1, gy)) {
        r.s1.set(g.id(i, j), gx);
        r.s2.set(g.id(i, j), gy);
      }
    }
  return r;
}

// Masks values outside the subdisk; norms thereafter see only subdisk nodes.
template <class T>
GridField<T> restrict_field(const GridField<T>& f, const Subdisk& sd) {
  f.grid().check_subdisk(sd);
  GridField<T> r = f.like();
  const DiskGrid& g = f.grid();
  for (int id = 0; id < g.node_count(); ++id)
    if (f.defined(id) && sd.contains(g.xof(id), g.yof(id))) r.set(id, f.at(id));
  return r;
}

// --- magnitudes -------------------------------------------------------------

inline double mag(double v) { return std::abs(v); }
inline double mag(const Vec2& v) { return v.norm(); }
inline double mag(const VecA& v) { return v.norm(); }
inline double mag(const MultiVector& v) { return v.norm(); }

template <class T>
ScalarField magnitude_field(const GridField<T>& f) {
  ScalarField r(f.grid(), 0.0);
  for (int id = 0; id < f.grid().node_count(); ++id)
    if (f.defined(id)) r.set(id, mag(f.at(id)));
  return r;
}

template <class T>
ScalarField magnitude_field(const PairField<T>& p) {
  ScalarField r(p.grid(), 0.0);
  for (int id = 0; id < p.grid().node_count(); ++id)
    if (p.defined(id)) r.set(id, std::hypot(mag(p.s1.at(id)), mag(p.s2.at(id))));
  return r;
}

}  // namespace wlab
