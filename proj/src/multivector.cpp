#include "wlab/multivector.hpp"

#include <bit>
#include <cmath>

namespace wlab {

namespace {

void check_same_dim(const MultiVector& a, const MultiVector& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch("ambient dimensions differ");
}

}  // namespace

MultiVector MultiVector::basis_vector(int m, int i) {
  MultiVector r(m);
  if (i < 1 || i > m) throw DimensionMismatch("basis index out of range");
  r.c_[1u << (i - 1)] = 1.0;
  return r;
}

MultiVector MultiVector::basis_blade(int m, std::initializer_list<int> idx) {
  MultiVector r(m);
  std::uint32_t mask = 0;
  int prev = 0;
  for (int i : idx) {
    if (i < 1 || i > m) throw DimensionMismatch("basis index out of range");
    if (i <= prev) throw GradeError("blade indices must be strictly increasing");
    mask |= 1u << (i - 1);
    prev = i;
  }
  r.c_[mask] = 1.0;
  return r;
}

int MultiVector::grade_of(std::uint32_t blade) { return std::popcount(blade); }

bool MultiVector::is_zero(double tol) const {
  for (double v : c_)
    if (std::abs(v) > tol) return false;
  return true;
}

int MultiVector::homogeneous_grade() const {
  int g = -1;
  for (std::uint32_t b = 0; b < c_.size(); ++b) {
    if (c_[b] == 0.0) continue;
    int gb = grade_of(b);
    if (g == -1)
      g = gb;
    else if (g != gb)
      return -1;
  }
  return g;
}

MultiVector MultiVector::grade_project(int k) const {
  MultiVector r(m_);
  for (std::uint32_t b = 0; b < c_.size(); ++b)
    if (grade_of(b) == k) r.c_[b] = c_[b];
  return r;
}

MultiVector& MultiVector::operator+=(const MultiVector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

MultiVector& MultiVector::operator-=(const MultiVector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

MultiVector& MultiVector::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

double MultiVector::norm() const { return std::sqrt(inner(*this, *this)); }

int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int parity = 0;
  std::uint32_t bb = b;
  while (bb) {
    int j = std::countr_zero(bb);
    bb &= bb - 1;
    parity ^= std::popcount(a >> (j + 1)) & 1;
  }
  return parity ? -1 : 1;
}

MultiVector wedge(const MultiVector& a, const MultiVector& b) {
  check_same_dim(a, b);
  MultiVector r(a.ambient_dim());
  const std::uint32_t n = static_cast<std::uint32_t>(a.blade_count());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (a[i] == 0.0) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (b[j] == 0.0 || (i & j)) continue;
      r[i | j] += wedge_sign(i, j) * a[i] * b[j];
    }
  }
  return r;
}

double inner(const MultiVector& a, const MultiVector& b) {
  check_same_dim(a, b);
  double s = 0.0;
  for (std::uint32_t i = 0; i < a.blade_count(); ++i) s += a[i] * b[i];
  return s;
}

MultiVector hodge_star(const MultiVector& a) {
  if (a.homogeneous_grade() == -1 && !a.is_zero())
    throw GradeError("hodge star requires a homogeneous argument");
  const int m = a.ambient_dim();
  const std::uint32_t full = (1u << m) - 1u;
  MultiVector r(m);
  for (std::uint32_t i = 0; i <= full; ++i) {
    if (a[i] == 0.0) continue;
    const std::uint32_t comp = full & ~i;
    r[comp] += wedge_sign(i, comp) * a[i];
  }
  return r;
}

MultiVector interior_mult(const MultiVector& gamma, const MultiVector& beta) {
  check_same_dim(gamma, beta);
  MultiVector r(gamma.ambient_dim());
  const std::uint32_t n = static_cast<std::uint32_t>(gamma.blade_count());
  for (std::uint32_t g = 0; g < n; ++g) {
    if (gamma[g] == 0.0) continue;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (beta[b] == 0.0) continue;
      if ((b & g) != b) continue;  // beta blade must divide gamma blade
      const std::uint32_t rest = g & ~b;
      r[rest] += wedge_sign(b, rest) * gamma[g] * beta[b];
    }
  }
  return r;
}

namespace {

// e_A . e_B by the recursion on the second factor, splitting off its
// lowest-index vector (the canonical ordered factorization has sign +1).
void bullet_blades(int m, std::uint32_t A, double coeff, std::uint32_t B,
                   MultiVector& out) {
  const int gb = std::popcount(B);
  if (gb == 0) return;  // empty recursion base
  if (gb == 1) {
    if ((B & A) != B) return;
    const std::uint32_t rest = A & ~B;
    out[rest] += wedge_sign(B, rest) * coeff;
    return;
  }
  const std::uint32_t lo = B & (~B + 1u);
  const std::uint32_t rest = B & ~lo;
  // alpha . (e_lo ^ e_rest) = (alpha . e_lo) ^ e_rest
  //                           + (-1)^{grade(rest)} (alpha . e_rest) ^ e_lo
  MultiVector t1(m), t2(m);
  bullet_blades(m, A, coeff, lo, t1);
  bullet_blades(m, A, coeff, rest, t2);
  const double s = (std::popcount(rest) % 2 == 0) ? 1.0 : -1.0;
  const std::uint32_t n = static_cast<std::uint32_t>(t1.blade_count());
  for (std::uint32_t i = 0; i < n; ++i) {
    if (t1[i] != 0.0) {
      const int ws = wedge_sign(i, rest);
      if (ws) out[i | rest] += ws * t1[i];
    }
    if (t2[i] != 0.0) {
      const int ws = wedge_sign(i, lo);
      if (ws) out[i | lo] += s * ws * t2[i];
    }
  }
}

}  // namespace

MultiVector bullet_contract(const MultiVector& alpha, const MultiVector& beta) {
  check_same_dim(alpha, beta);
  const int m = alpha.ambient_dim();
  MultiVector r(m);
  const std::uint32_t n = static_cast<std::uint32_t>(alpha.blade_count());
  for (std::uint32_t a = 0; a < n; ++a) {
    if (alpha[a] == 0.0) continue;
    for (std::uint32_t b = 1; b < n; ++b) {
      if (beta[b] == 0.0) continue;
      bullet_blades(m, a, alpha[a] * beta[b], b, r);
    }
  }
  return r;
}

}  // namespace wlab
