#pragma once

#include "cartankit/matrix.hpp"
#include "cartankit/tensor.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cartan {

class OracleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Finite truncation: the retained basis of V (vidx) and of V_* (cidx).
// For so/sp cidx == vidx.
struct Window {
  Kind kind;
  Form form;
  std::vector<Index> vidx;
  std::vector<Index> cidx;

  Window(Kind k, Form f, std::vector<Index> v, std::vector<Index> c);
  // gl/sl: lo..hi with lo >= 1; so: lo..hi including 0; sp: lo..hi skipping 0
  static Window range(Kind k, Index lo, Index hi);
  Window without(Index i) const;

  int dim() const { return static_cast<int>(vidx.size()); }
  bool has_vector(Index i) const;
  bool has_covector(Index i) const;
  bool contains(const LieElement &x) const;
  bool contains(const Vector &v) const;
  std::string str() const;
};

// Span of Lie algebra elements in canonical echelon form.
class Subspace {
public:
  explicit Subspace(Kind k) : kind_(k) {}
  static Subspace span(Kind k, const std::vector<LieElement> &gens);

  Kind kind() const { return kind_; }
  size_t dim() const { return ech_.dim(); }
  bool insert(const LieElement &x) { return ech_.insert(x.terms); }
  bool contains(const LieElement &x) const { return ech_.contains(x.terms); }
  LieElement reduce(const LieElement &x) const { return LieElement(x.kind, ech_.reduce(x.terms)); }
  std::vector<LieElement> basis() const;
  const Echelon<Key> &echelon() const { return ech_; }
  bool contains(const Subspace &o) const;
  Subspace intersect(const Subspace &o) const;
  bool operator==(const Subspace &o) const { return kind_ == o.kind_ && ech_ == o.ech_; }

private:
  Kind kind_;
  Echelon<Key> ech_;
};

using VSubspace = Echelon<Index>;

// Basis of the ambient algebra of the window: e_a (x) e^b for gl,
// traceless combinations for sl, wedges for so, symmetric products for sp.
std::vector<LieElement> ambient_basis(const Window &w);

// Matrix of x acting on span(w.vidx); column j is x . e_{vidx[j]}.
Matrix matrix_on_window(const LieElement &x, const Window &w);

Poly minimal_polynomial(const LieElement &x, const Window &w);
bool is_semisimple(const LieElement &x, const Window &w);
bool is_nilpotent(const LieElement &x, const Window &w);

struct JordanParts {
  LieElement ss;
  LieElement nil;
};
JordanParts jordan_parts(const LieElement &x, const Window &w);

// Elements of ambient(w) commuting with every generator. Generators may
// extend beyond the window; brackets are taken in the full algebra.
Subspace centralizer_basis(const std::vector<LieElement> &gens, const Window &w);
// {x in ambient(w) : [x, s] in span(sub) for all s in sub}
Subspace normalizer_basis(const Subspace &sub, const Window &w);
// least k with C^{k+1}(sub) = 0; throws OracleError if sub is not a
// subalgebra or not nilpotent
int lcs_depth(const Subspace &sub);

struct VectorWeightSpace {
  std::vector<Scalar> weight; // one value per generator
  VSubspace space;
};
struct AdjointWeightSpace {
  std::vector<Scalar> weight;
  Subspace space;
};

// Largest subspace of span(w.vidx) stable under all generators.
VSubspace stable_vectors(const std::vector<LieElement> &gens, const Window &w);
// Largest subspace of ambient(w) stable under ad of all generators.
Subspace stable_adjoint(const std::vector<LieElement> &gens, const Window &w);

// Simultaneous eigenspaces on the stable part of the window. Throws
// OracleError "not toral" or "not split over Q(i)".
std::vector<VectorWeightSpace> weight_decomposition(const std::vector<LieElement> &gens,
                                                    const Window &w);
std::vector<AdjointWeightSpace> weight_decomposition_adjoint(const std::vector<LieElement> &gens,
                                                             const Window &w);

// Vectors of span(w.vidx) on whose cyclic span every generator is nilpotent.
VSubspace generalized_zero_space(const std::vector<LieElement> &gens, const Window &w);
// Same for ad on ambient(w).
Subspace generalized_zero_space_adjoint(const std::vector<LieElement> &gens, const Window &w);

// Minimal polynomial of a dense matrix via Krylov sequences of basis vectors.
Poly minimal_polynomial_krylov(const Matrix &m);

} // namespace cartan
