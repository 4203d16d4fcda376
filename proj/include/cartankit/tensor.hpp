#pragma once

#include "cartankit/sparse.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cartan {

enum class Kind { GL, SL, SO, SP };

std::string kind_name(Kind k);
// accepts "gl", "sl", "so", "sp" in any case
Kind parse_kind(const std::string &s);
// SO and SP carry a single space with a form; GL and SL pair V with V_*.
inline bool is_orthosymplectic(Kind k) { return k == Kind::SO || k == Kind::SP; }

using Index = long long;
using Vector = SVec<Index>;
using Key = std::pair<Index, Index>;

Vector basis_vector(Index i, const Scalar &c = Scalar(1));

// Pairing on basis indices. The default is the standard one for the kind;
// a custom Gram replaces it for systems built on an abstract basis.
class Gram {
public:
  virtual ~Gram() = default;
  virtual Scalar pair(Index a, Index b) const = 0;
  virtual bool legal_vector(Index a) const = 0;
  virtual bool legal_covector(Index b) const = 0;
};

class Form {
public:
  explicit Form(Kind k) : kind_(k) {}
  Form(Kind k, std::shared_ptr<const Gram> g) : kind_(k), gram_(std::move(g)) {}

  Kind kind() const { return kind_; }
  bool standard() const { return gram_ == nullptr; }
  Scalar operator()(Index a, Index b) const;
  bool legal_vector(Index a) const;
  bool legal_covector(Index b) const;
  // Same pairing, different algebra kind (gl <-> sl share a form).
  Form with_kind(Kind k) const { return Form(k, gram_); }

private:
  Kind kind_;
  std::shared_ptr<const Gram> gram_;
};

bool index_legal(Kind k, Index i);

// Finitely supported sum of c_ab e_a (x) e^b (gl/sl) or c_ab e_a (x) e_b (so/sp).
// For so/sp the coefficient matrix of an algebra element is antisymmetric
// (resp. symmetric); the lower half is stored too so products stay termwise.
struct LieElement {
  Kind kind = Kind::GL;
  SVec<Key> terms;

  LieElement() = default;
  explicit LieElement(Kind k) : kind(k) {}
  LieElement(Kind k, SVec<Key> t) : kind(k), terms(std::move(t)) {}

  static LieElement unit(Kind k, Index a, Index b, const Scalar &c = Scalar(1));
  bool is_zero() const { return terms.empty(); }
  Scalar at(Index a, Index b) const { return coeff(terms, Key{a, b}); }

  LieElement &operator+=(const LieElement &o);
  LieElement &operator-=(const LieElement &o);
  LieElement &operator*=(const Scalar &c);
  friend LieElement operator+(LieElement a, const LieElement &b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement &b) { return a -= b; }
  friend LieElement operator*(const Scalar &c, LieElement a) { return a *= c; }
  friend LieElement operator-(LieElement a) { return a *= Scalar(-1); }
  friend bool operator==(const LieElement &a, const LieElement &b) {
    return a.kind == b.kind && a.terms == b.terms;
  }

  // Canonical records: all terms for gl/sl, i<j for so, i<=j for sp.
  std::vector<std::pair<Key, Scalar>> records() const;
  static LieElement from_records(Kind k, const std::vector<std::pair<Key, Scalar>> &recs);
  std::string str() const;
};

Scalar pair(const Vector &v, const Vector &w, const Form &f);
Scalar pair(const Vector &v, const Vector &w, Kind k);

LieElement tensor(Kind k, const Vector &u, const Vector &w);
// u (x) v - v (x) u, an element of so
LieElement wedge(const Vector &u, const Vector &v);
// u (x) v + v (x) u, an element of sp
LieElement sym(const Vector &u, const Vector &v);

// (v (x) w)(v' (x) w') = <v', w> v (x) w'. gl/sl inputs give a gl result.
LieElement assoc_product(const LieElement &x, const LieElement &y, const Form &f);
LieElement assoc_product(const LieElement &x, const LieElement &y);
LieElement bracket(const LieElement &x, const LieElement &y, const Form &f);
LieElement bracket(const LieElement &x, const LieElement &y);
// (u (x) w) . v = <v, w> u
Vector act(const LieElement &x, const Vector &v, const Form &f);
Vector act(const LieElement &x, const Vector &v);

Scalar trace(const LieElement &x, const Form &f);
// sl: trace zero; so: antisymmetric; sp: symmetric; gl: always
bool in_algebra(const LieElement &x, const Form &f);

// Indices touched by either slot.
std::vector<Index> support(const LieElement &x);
std::vector<Index> support(const Vector &v);

std::string vector_str(const Vector &v);

} // namespace cartan
