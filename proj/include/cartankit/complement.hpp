#pragma once

#include "cartankit/epseq.hpp"
#include "cartankit/matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cartan {

// Dense linear functional on X (or Y), or a dense vector of X.
using Covec = std::vector<Scalar>;
using CovecSeq = EPSeq<Covec>;
using ScalarSeq = EPSeq<Scalar>;

struct ComplementDatum {
  Kind kind = Kind::GL;
  int x_dim = 0;
  int y_dim = 0; // gl/sl only
  Matrix omega;  // x_dim x y_dim, or x_dim x x_dim for so/sp
  CovecSeq lambdas;     // lambda_i, i > 0
  CovecSeq lambdas_neg; // so/sp: lambda_{-i}, i > 0
  CovecSeq mus;         // gl/sl: mu_i, i > 0

  static ComplementDatum zero(Kind k);

  bool single_space() const { return is_orthosymplectic(kind); }
  int other_dim() const { return single_space() ? x_dim : y_dim; }
  const Covec &lambda(Index i) const;
  const Covec &mu(Index i) const;
  // index after which every sequence is periodic, and a common period
  Index tail_start() const;
  Index tail_period() const;
  // throws std::invalid_argument on shape or symmetry errors
  void check() const;
  ComplementDatum normalized() const;
  bool operator==(const ComplementDatum &o) const;
};

// X_0 = {x : lambda_i(x) is almost zero}; canonical reduced basis.
std::vector<Covec> X0_basis(const ComplementDatum &d);
std::vector<Covec> Y0_basis(const ComplementDatum &d);
bool in_X0(const ComplementDatum &d, const Covec &x);
bool in_Y0(const ComplementDatum &d, const Covec &y);

// Corrected pairing; throws std::domain_error "divergent: neither argument
// almost-zero" unless one side lies in X_0 (or Y_0).
Scalar omega_tilde(const ComplementDatum &d, const Covec &x, const Covec &y);
Matrix omega_tilde_matrix(const ComplementDatum &d, const std::vector<Covec> &xs,
                          const std::vector<Covec> &ys);

bool is_nondegenerate(const ComplementDatum &d);
bool is_maximal(const ComplementDatum &d);

struct StandardInvariants {
  static constexpr long aleph0 = -1;
  Kind kind = Kind::GL;
  std::vector<long> entries; // (d,p,q,m,n) or (d,p,m)
  std::string str() const;
  bool operator==(const StandardInvariants &o) const = default;
};

StandardInvariants standard_invariants(const ComplementDatum &d);
StandardInvariants parse_invariants(Kind k, const std::string &s);
// Name of the violated inequality, or nullopt when realizable.
std::optional<std::string> realizability_violation(const StandardInvariants &inv);
// throws std::invalid_argument "unrealizable invariants: ..."
ComplementDatum build_representative(const StandardInvariants &inv);

// sigma on positive indices: head gives sigma(1..K); index K+1+r+nP maps to
// sign_r * (base_r + n*step_r). For so/sp, sigma(-i) = -sigma(i).
struct IndexClass {
  Index base = 1;
  Index step = 1;
  int sign = 1;
  bool operator==(const IndexClass &o) const = default;
};
struct IndexMap {
  std::vector<Index> head;
  std::vector<IndexClass> classes; // one per residue, so the tail period is classes.size()

  static IndexMap identity();
  Index operator()(Index i) const;
  Index period() const { return static_cast<Index>(classes.size()); }
  // nullopt when |sigma| is a bijection of the positive integers
  std::optional<std::string> bijectivity_error() const;
};

struct Certificate {
  IndexMap sigma;
  Matrix pi_x; // X -> X', columns are images of basis vectors
  Matrix pi_y; // Y -> Y' (gl/sl)
  ScalarSeq alpha;

  static Certificate identity(const ComplementDatum &d);
};

struct VerifyResult {
  bool ok = true;
  std::string clause;  // "structure", "lambda", "mu", "omega"
  std::string witness;
};

VerifyResult verify_certificate(const ComplementDatum &d1, const ComplementDatum &d2,
                                const Certificate &c);

// Values in the periodic block have multiplicity infinite.
struct ValueMultiset {
  static constexpr long infinite = -1;
  std::map<Scalar, long> mult;
  std::vector<Scalar> infinite_values() const;
  std::string str() const;
  bool operator==(const ValueMultiset &o) const = default;
};
ValueMultiset value_multiset(const ScalarSeq &s);

bool almost_equal_scalars(const ScalarSeq &a, const ScalarSeq &b);
// c with m_a(x) = m_b(c x) up to finitely many discrepancies.
std::optional<Scalar> almost_proportional(const ScalarSeq &a, const ScalarSeq &b);
bool almost_zero(const ScalarSeq &s);

// Datum of the dual system L_i = C(b_i e_1 + e_{i+2}), L^i = C(a_i e^2 + e^{i+2})
// with X = span{e_1, e_2}, Y = span{e^1, e^2}.
ComplementDatum family_datum(const ScalarSeq &a, const ScalarSeq &b);

struct BinaryInvariants {
  bool a_zero_b_nonzero = false;
  bool a_nonzero_b_zero = false;
  bool both_zero = false;
  bool operator==(const BinaryInvariants &o) const = default;
  std::string str() const;
};
BinaryInvariants binary_invariants(const ScalarSeq &a, const ScalarSeq &b);
ScalarSeq product_sequence(const ScalarSeq &a, const ScalarSeq &b);

struct SpecialDecision {
  bool equivalent = false;
  std::optional<Certificate> certificate; // family datum (a,b) -> (a',b')
  Scalar c;                               // (a_i b_i) ~ (c a'_s(i) b'_s(i))
  std::string witness;
};
// throws std::invalid_argument "not in family" when a or b is almost zero
SpecialDecision decide_equiv_special(const ScalarSeq &a, const ScalarSeq &b, const ScalarSeq &a2,
                                     const ScalarSeq &b2);

// Normal form of a (0,1,1,1,1) datum whose lambdas vanish on X_0 and mus on Y_0:
// the sequences (a, b) and a certificate datum -> family_datum(a, b).
struct FamilyForm {
  ScalarSeq a, b;
  Certificate to_family;
};
std::optional<FamilyForm> family_form(const ComplementDatum &d);

// Composes certificates where at least one side has identity sigma and alpha.
Certificate compose(const Certificate &first, const Certificate &second);
// Inverse of a certificate with identity sigma and alpha.
Certificate invert_trivial(const Certificate &c);

// Shape (dim X, dim Y, dim X_0, dim Y_0); requires dim X/X_0 = dim Y/Y_0 = 1.
struct DzShape {
  int x_dim = 2, y_dim = 2, x0_dim = 1, y0_dim = 1;
};
ComplementDatum build_Dz(const Scalar &z, DzShape shape = {});
// D_z -> D_{1/z} for the default shape
Certificate dz_inverse_certificate(const Scalar &z);
ScalarSeq dz_product_sequence(const ComplementDatum &d);

} // namespace cartan
