#pragma once

#include "cartankit/scalar.hpp"

#include <string>
#include <vector>

namespace cartan {

// Dense exact matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Matrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Scalar &operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const Scalar &operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Matrix operator*(const Matrix &o) const;
  Matrix operator+(const Matrix &o) const;
  Matrix operator-(const Matrix &o) const;
  Matrix scaled(const Scalar &s) const;
  Matrix transpose() const;
  bool operator==(const Matrix &o) const = default;
  bool is_zero() const;

  // Reduced row echelon form; returns pivot columns.
  std::vector<int> rref_inplace();
  int rank() const;
  // throws std::domain_error if singular
  Matrix inverse() const;
  // columns spanning the right kernel
  std::vector<std::vector<Scalar>> kernel() const;
  std::vector<Scalar> apply(const std::vector<Scalar> &v) const;
  Scalar trace() const;
  std::string str() const;

private:
  int r_ = 0, c_ = 0;
  std::vector<Scalar> a_;
};

Matrix commutator(const Matrix &a, const Matrix &b);

// Polynomial over Q(i), coefficients from degree 0 upward, no trailing zeros.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> c) : c_(std::move(c)) { trim(); }
  static Poly monomial(int deg, const Scalar &c = Scalar(1));
  static Poly linear_root(const Scalar &r); // t - r

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar> &coeffs() const { return c_; }
  Scalar coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : Scalar(); }
  Scalar lead() const { return c_.empty() ? Scalar() : c_.back(); }

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  bool operator==(const Poly &o) const = default;
  Poly monic() const;
  Poly derivative() const;
  // quotient and remainder
  std::pair<Poly, Poly> divmod(const Poly &d) const;
  Scalar eval(const Scalar &x) const;
  Matrix eval(const Matrix &m) const;
  std::string str() const;

private:
  void trim();
  std::vector<Scalar> c_;
};

Poly gcd(Poly a, Poly b);
Poly squarefree_part(const Poly &p);
bool is_squarefree(const Poly &p);

Poly minimal_polynomial(const Matrix &m);

struct RootSplit {
  std::vector<Scalar> roots; // distinct roots found in Q(i), sorted
  Poly rest;                 // monic cofactor without roots in Q(i)
};
// Roots of a squarefree polynomial that lie in Q(i). Candidates come from a
// floating-point root finder and are confirmed by exact evaluation.
RootSplit gaussian_rational_roots(const Poly &p);

} // namespace cartan
