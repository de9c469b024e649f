#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wlab {

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct GradeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Graded exterior-algebra element over R^m, 3 <= m <= 6 (m = 2 allowed for
// internal plumbing such as 2-component tensor files).
//
// Coefficients are indexed by basis blade: bit k of the index set means the
// factor e_{k+1} is present, so blades are canonically stored with strictly
// increasing factors. Orthonormal blades form an orthonormal basis of the
// induced inner product. Sign bookkeeping is exact integer permutation
// parity; coefficients are doubles.
class MultiVector {
 public:
  explicit MultiVector(int ambient_dim)
      : m_(ambient_dim), c_(std::size_t{1} << check_dim(ambient_dim), 0.0) {}

  static MultiVector zero(int m) { return MultiVector(m); }
  static MultiVector scalar(int m, double v) {
    MultiVector r(m);
    r.c_[0] = v;
    return r;
  }
  // e_i, 1-based index.
  static MultiVector basis_vector(int m, int i);
  // e_{i1} ^ e_{i2} ^ ... for strictly increasing 1-based indices.
  static MultiVector basis_blade(int m, std::initializer_list<int> idx);

  int ambient_dim() const { return m_; }
  std::size_t blade_count() const { return c_.size(); }

  double operator[](std::uint32_t blade) const { return c_[blade]; }
  double& operator[](std::uint32_t blade) { return c_[blade]; }

  static int grade_of(std::uint32_t blade);

  bool is_zero(double tol = 0.0) const;
  // -1 when zero or mixed-grade; otherwise the common grade.
  int homogeneous_grade() const;

  MultiVector grade_project(int k) const;

  MultiVector& operator+=(const MultiVector& o);
  MultiVector& operator-=(const MultiVector& o);
  MultiVector& operator*=(double s);

  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(MultiVector a, double s) { return a *= s; }
  friend MultiVector operator*(double s, MultiVector a) { return a *= s; }
  friend MultiVector operator-(MultiVector a) { return a *= -1.0; }

  double norm() const;

 private:
  static int check_dim(int m) {
    if (m < 2 || m > 6) throw DimensionMismatch("ambient dimension must be in 2..6");
    return m;
  }
  int m_;
  std::vector<double> c_;
};

// Sign of e_A ^ e_B as a reordering of the concatenated factor list;
// 0 when the index sets overlap.
int wedge_sign(std::uint32_t a, std::uint32_t b);

MultiVector wedge(const MultiVector& a, const MultiVector& b);

// <a, b> with orthonormal blades orthonormal.
double inner(const MultiVector& a, const MultiVector& b);

// Hodge star with orientation fixed by <a ^ star(a), e_1..e_m> = |a|^2.
// Requires a homogeneous argument.
MultiVector hodge_star(const MultiVector& a);

// Interior multiplication: <gamma |_ beta, alpha> = <gamma, beta ^ alpha>.
// Blades of beta not contained in gamma contribute zero, so grade(beta) >
// grade(gamma) yields zero.
MultiVector interior_mult(const MultiVector& gamma, const MultiVector& beta);

// First-order contraction: alpha . beta = alpha |_ beta for 1-vector beta,
// extended by alpha . (beta ^ gamma) = (alpha . beta) ^ gamma
// + (-1)^{pq} (alpha . gamma) ^ beta. Grade-0 second argument yields zero.
MultiVector bullet_contract(const MultiVector& alpha, const MultiVector& beta);

}  // namespace wlab
