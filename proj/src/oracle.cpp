#include "cartankit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace cartan {

// ---- Window ----

Window::Window(Kind k, Form f, std::vector<Index> v, std::vector<Index> c)
    : kind(k), form(std::move(f)), vidx(std::move(v)), cidx(std::move(c)) {
  if (vidx.empty())
    throw std::invalid_argument("empty window");
  std::sort(vidx.begin(), vidx.end());
  std::sort(cidx.begin(), cidx.end());
}

Window Window::range(Kind k, Index lo, Index hi) {
  if (lo > hi)
    throw std::invalid_argument("empty window");
  if (!is_orthosymplectic(k) && lo < 1)
    throw std::invalid_argument("gl/sl windows start at index 1");
  std::vector<Index> v;
  for (Index i = lo; i <= hi; ++i)
    if (index_legal(k, i))
      v.push_back(i);
  return Window(k, Form(k), v, v);
}

Window Window::without(Index i) const {
  std::vector<Index> v, c;
  for (Index a : vidx)
    if (a != i)
      v.push_back(a);
  for (Index b : cidx)
    if (b != i)
      c.push_back(b);
  return Window(kind, form, v, c);
}

bool Window::has_vector(Index i) const { return std::binary_search(vidx.begin(), vidx.end(), i); }

bool Window::has_covector(Index i) const {
  return std::binary_search(cidx.begin(), cidx.end(), i);
}

bool Window::contains(const LieElement &x) const {
  bool single = is_orthosymplectic(kind);
  for (const auto &[k, c] : x.terms)
    if (!has_vector(k.first) || !(single ? has_vector(k.second) : has_covector(k.second)))
      return false;
  return true;
}

bool Window::contains(const Vector &v) const {
  for (const auto &[i, c] : v)
    if (!has_vector(i))
      return false;
  return true;
}

std::string Window::str() const {
  std::ostringstream os;
  os << kind_name(kind) << "[";
  for (size_t k = 0; k < vidx.size(); ++k)
    os << (k ? "," : "") << vidx[k];
  os << "]";
  return os.str();
}

// ---- Subspace ----

Subspace Subspace::span(Kind k, const std::vector<LieElement> &gens) {
  Subspace s(k);
  for (const auto &g : gens)
    s.insert(g);
  return s;
}

std::vector<LieElement> Subspace::basis() const {
  std::vector<LieElement> out;
  for (const auto &[p, row] : ech_.rows())
    out.emplace_back(kind_, row);
  return out;
}

bool Subspace::contains(const Subspace &o) const {
  for (const auto &[p, row] : o.ech_.rows())
    if (!ech_.contains(row))
      return false;
  return true;
}

namespace {

template <class K> using ActFn = std::function<SVec<K>(const LieElement &, const SVec<K> &)>;

// Combinations c with sum_j c_j images[j] = 0.
template <class K> std::vector<SVec<int>> relations(const std::vector<SVec<K>> &images, int n) {
  std::map<K, SVec<int>> eq;
  for (int j = 0; j < n; ++j)
    for (const auto &[k, v] : images[j])
      eq[k].emplace(j, v);
  std::vector<SVec<int>> rows;
  rows.reserve(eq.size());
  for (auto &[k, r] : eq)
    rows.push_back(std::move(r));
  return nullspace(rows, n);
}

template <class K> SVec<K> combine(const SVec<int> &c, const std::vector<SVec<K>> &basis) {
  SVec<K> v;
  for (const auto &[j, x] : c)
    axpy(v, x, basis[j]);
  return v;
}

template <class K> Echelon<K> intersect(const Echelon<K> &a, const Echelon<K> &b) {
  auto basis = a.basis();
  std::vector<SVec<K>> images;
  for (const auto &v : basis)
    images.push_back(b.reduce(v));
  Echelon<K> out;
  for (const auto &c : relations(images, static_cast<int>(basis.size())))
    out.insert(combine(c, basis));
  return out;
}

template <class K>
Echelon<K> stable_part(Echelon<K> m, const std::vector<LieElement> &gens, const ActFn<K> &act) {
  while (true) {
    auto basis = m.basis();
    int n = static_cast<int>(basis.size());
    if (n == 0)
      return m;
    std::map<std::pair<size_t, K>, SVec<int>> eq;
    for (size_t gi = 0; gi < gens.size(); ++gi)
      for (int j = 0; j < n; ++j)
        for (const auto &[k, v] : m.reduce(act(gens[gi], basis[j])))
          eq[{gi, k}].emplace(j, v);
    std::vector<SVec<int>> rows;
    for (auto &[k, r] : eq)
      rows.push_back(std::move(r));
    auto null = nullspace(rows, n);
    if (static_cast<int>(null.size()) == n)
      return m;
    Echelon<K> next;
    for (const auto &c : null)
      next.insert(combine(c, basis));
    m = std::move(next);
  }
}

template <class K> Echelon<K> closure(const Echelon<K> &m, const LieElement &g, const ActFn<K> &act) {
  Echelon<K> c = m;
  std::vector<SVec<K>> frontier = m.basis();
  while (!frontier.empty()) {
    std::vector<SVec<K>> next;
    for (const auto &v : frontier) {
      SVec<K> u = act(g, v);
      if (c.insert(u))
        next.push_back(std::move(u));
    }
    frontier = std::move(next);
  }
  return c;
}

// Generalized kernel of g on a g-stable space c via iterated preimages.
template <class K>
Echelon<K> generalized_kernel(const Echelon<K> &c, const LieElement &g, const ActFn<K> &act) {
  auto basis = c.basis();
  int n = static_cast<int>(basis.size());
  std::vector<SVec<K>> images;
  for (const auto &v : basis)
    images.push_back(act(g, v));
  Echelon<K> k;
  while (true) {
    std::vector<SVec<K>> red;
    for (const auto &im : images)
      red.push_back(k.reduce(im));
    Echelon<K> next;
    for (const auto &rel : relations(red, n))
      next.insert(combine(rel, basis));
    if (next.dim() == k.dim())
      return k;
    k = std::move(next);
  }
}

template <class K>
Echelon<K> generalized_zero(const Echelon<K> &m, const std::vector<LieElement> &gens,
                            const ActFn<K> &act) {
  Echelon<K> out = m;
  for (const auto &g : gens) {
    if (g.is_zero())
      continue;
    Echelon<K> c = closure(m, g, act);
    out = intersect(out, generalized_kernel(c, g, act));
  }
  return out;
}

template <class K> Matrix restricted_matrix(const Echelon<K> &s, const LieElement &g, const ActFn<K> &act) {
  const auto &rows = s.rows();
  std::vector<K> pivots;
  std::vector<const SVec<K> *> basis;
  for (const auto &[p, r] : rows) {
    pivots.push_back(p);
    basis.push_back(&r);
  }
  int d = static_cast<int>(pivots.size());
  Matrix a(d, d);
  for (int j = 0; j < d; ++j) {
    SVec<K> img = act(g, *basis[j]);
    if (!s.contains(img))
      throw OracleError("subspace not stable under generator");
    for (int i = 0; i < d; ++i)
      a(i, j) = coeff(img, pivots[i]);
  }
  return a;
}

template <class K> struct Piece {
  std::vector<Scalar> weight;
  Echelon<K> space;
};

template <class K>
std::vector<Piece<K>> decompose(const Echelon<K> &m, const std::vector<LieElement> &gens,
                                const ActFn<K> &act) {
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (!bracket(gens[a], gens[b]).is_zero())
        throw OracleError("generators do not commute");
  std::vector<Piece<K>> pieces{{{}, m}};
  for (const auto &g : gens) {
    std::vector<Piece<K>> next;
    for (auto &pc : pieces) {
      if (pc.space.dim() == 0)
        continue;
      Matrix a = restricted_matrix(pc.space, g, act);
      Poly p = minimal_polynomial_krylov(a);
      if (!is_squarefree(p))
        throw OracleError("not toral");
      RootSplit rs = gaussian_rational_roots(p);
      if (rs.rest.degree() > 0)
        throw OracleError("not split over Q(i)");
      auto basis = pc.space.basis();
      int d = a.rows();
      for (const Scalar &lam : rs.roots) {
        Matrix shifted = a - Matrix::identity(d).scaled(lam);
        Echelon<K> e;
        for (const auto &col : shifted.kernel()) {
          SVec<K> v;
          for (int j = 0; j < d; ++j)
            axpy(v, col[j], basis[j]);
          e.insert(v);
        }
        auto w = pc.weight;
        w.push_back(lam);
        next.push_back({std::move(w), std::move(e)});
      }
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece<K> &x, const Piece<K> &y) { return x.weight < y.weight; });
  return pieces;
}

ActFn<Index> vector_action(const Window &w) {
  return [&w](const LieElement &g, const Vector &v) { return act(g, v, w.form); };
}

ActFn<Key> adjoint_action(const Window &w) {
  return [&w](const LieElement &g, const SVec<Key> &x) {
    return bracket(g, LieElement(w.kind, x), w.form).terms;
  };
}

VSubspace window_vectors(const Window &w) {
  VSubspace m;
  for (Index i : w.vidx)
    m.insert(basis_vector(i));
  return m;
}

Echelon<Key> ambient_echelon(const Window &w) {
  Echelon<Key> m;
  for (const auto &b : ambient_basis(w))
    m.insert(b.terms);
  return m;
}

Subspace wrap(Kind k, const Echelon<Key> &e) {
  Subspace s(k);
  for (const auto &[p, r] : e.rows())
    s.insert(LieElement(k, r));
  return s;
}

} // namespace

Subspace Subspace::intersect(const Subspace &o) const {
  return wrap(kind_, cartan::intersect(ech_, o.ech_));
}

// ---- ambient ----

std::vector<LieElement> ambient_basis(const Window &w) {
  std::vector<LieElement> out;
  switch (w.kind) {
  case Kind::GL:
    for (Index a : w.vidx)
      for (Index b : w.cidx)
        out.push_back(LieElement::unit(Kind::GL, a, b));
    break;
  case Kind::SL: {
    std::vector<LieElement> gl;
    std::vector<Scalar> tr;
    for (Index a : w.vidx)
      for (Index b : w.cidx) {
        gl.push_back(LieElement::unit(Kind::SL, a, b));
        tr.push_back(w.form(a, b));
      }
    int piv = -1;
    for (size_t k = 0; k < gl.size(); ++k)
      if (!tr[k].is_zero()) {
        piv = static_cast<int>(k);
        break;
      }
    for (size_t k = 0; k < gl.size(); ++k) {
      if (static_cast<int>(k) == piv)
        continue;
      if (tr[k].is_zero())
        out.push_back(gl[k]);
      else
        out.push_back(gl[k] - (tr[k] / tr[piv]) * gl[piv]);
    }
    break;
  }
  case Kind::SO:
    for (size_t a = 0; a < w.vidx.size(); ++a)
      for (size_t b = a + 1; b < w.vidx.size(); ++b)
        out.push_back(wedge(basis_vector(w.vidx[a]), basis_vector(w.vidx[b])));
    break;
  case Kind::SP:
    for (size_t a = 0; a < w.vidx.size(); ++a) {
      out.push_back(LieElement::unit(Kind::SP, w.vidx[a], w.vidx[a]));
      for (size_t b = a + 1; b < w.vidx.size(); ++b)
        out.push_back(sym(basis_vector(w.vidx[a]), basis_vector(w.vidx[b])));
    }
    break;
  }
  return out;
}

// ---- single elements ----

Matrix matrix_on_window(const LieElement &x, const Window &w) {
  if (!w.contains(x))
    throw OracleError("support outside window");
  int n = w.dim();
  std::map<Index, int> pos;
  for (int k = 0; k < n; ++k)
    pos[w.vidx[k]] = k;
  Matrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (const auto &[i, c] : act(x, basis_vector(w.vidx[j]), w.form)) {
      auto it = pos.find(i);
      if (it == pos.end())
        throw OracleError("support outside window");
      m(it->second, j) = c;
    }
  return m;
}

Poly minimal_polynomial_krylov(const Matrix &a) {
  int n = a.rows();
  if (n != a.cols())
    throw std::invalid_argument("minimal polynomial of non-square matrix");
  Poly acc({Scalar(1)});
  for (int j = 0; j < n && acc.degree() < n; ++j) {
    Echelon<int> e;
    std::vector<Scalar> v(n);
    v[j] = Scalar(1);
    for (int k = 0; k <= n; ++k) {
      SVec<int> row;
      for (int i = 0; i < n; ++i)
        if (!v[i].is_zero())
          row.emplace(i, v[i]);
      row.emplace(n + k, Scalar(1));
      SVec<int> r = e.reduce(row);
      if (r.begin()->first >= n) {
        std::vector<Scalar> c(k + 1);
        for (const auto &[key, x] : r)
          c[key - n] = x;
        Poly local = Poly(std::move(c)).monic();
        acc = (acc * local).divmod(gcd(acc, local)).first.monic();
        break;
      }
      e.insert(row);
      v = a.apply(v);
    }
  }
  return acc;
}

Poly minimal_polynomial(const LieElement &x, const Window &w) {
  return minimal_polynomial_krylov(matrix_on_window(x, w));
}

bool is_semisimple(const LieElement &x, const Window &w) {
  return is_squarefree(minimal_polynomial(x, w));
}

bool is_nilpotent(const LieElement &x, const Window &w) {
  Poly p = minimal_polynomial(x, w);
  return p == Poly::monomial(p.degree());
}

JordanParts jordan_parts(const LieElement &x, const Window &w) {
  Matrix a = matrix_on_window(x, w);
  Poly p = minimal_polynomial_krylov(a);
  if (is_squarefree(p))
    return {x, LieElement(x.kind)};
  if (p == Poly::monomial(p.degree()))
    return {LieElement(x.kind), x};
  // Newton iteration for the root of the squarefree part near a.
  Poly q = squarefree_part(p);
  Poly dq = q.derivative();
  Matrix s = a;
  while (true) {
    Matrix qs = q.eval(s);
    if (qs.is_zero())
      break;
    s = s - qs * dq.eval(s).inverse();
  }
  // Express s as a combination of a, a^2, ..., a^deg.
  int n = a.rows(), deg = p.degree();
  Matrix sys(n * n, deg + 1);
  Matrix pw = a;
  for (int k = 0; k < deg; ++k) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        sys(i * n + j, k) = pw(i, j);
    pw = pw * a;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sys(i * n + j, deg) = s(i, j);
  std::vector<Scalar> sol;
  for (const auto &col : sys.kernel())
    if (!col[deg].is_zero()) {
      sol = col;
      break;
    }
  if (sol.empty())
    throw OracleError("semisimple part is not a polynomial in x");
  Scalar norm = -sol[deg].inv();
  LieElement ss(x.kind), power = x;
  for (int k = 0; k < deg; ++k) {
    if (!sol[k].is_zero()) {
      LieElement term = power;
      term.kind = x.kind;
      ss += (sol[k] * norm) * term;
    }
    if (k + 1 < deg) {
      power = assoc_product(power, x, w.form);
      power.kind = x.kind;
    }
  }
  ss.kind = x.kind;
  LieElement nil = x - ss;
  return {ss, nil};
}

// ---- subspace computations ----

Subspace centralizer_basis(const std::vector<LieElement> &gens, const Window &w) {
  auto basis = ambient_basis(w);
  int n = static_cast<int>(basis.size());
  std::map<std::pair<size_t, Key>, SVec<int>> eq;
  for (size_t gi = 0; gi < gens.size(); ++gi)
    for (int k = 0; k < n; ++k)
      for (const auto &[key, v] : bracket(basis[k], gens[gi], w.form).terms)
        eq[{gi, key}].emplace(k, v);
  std::vector<SVec<int>> rows;
  for (auto &[key, r] : eq)
    rows.push_back(std::move(r));
  Subspace out(w.kind);
  for (const auto &c : nullspace(rows, n)) {
    LieElement x(w.kind);
    for (const auto &[k, s] : c)
      x += s * basis[k];
    out.insert(x);
  }
  return out;
}

Subspace normalizer_basis(const Subspace &sub, const Window &w) {
  auto basis = ambient_basis(w);
  auto sb = sub.basis();
  int n = static_cast<int>(basis.size());
  std::map<std::pair<size_t, Key>, SVec<int>> eq;
  for (size_t si = 0; si < sb.size(); ++si)
    for (int k = 0; k < n; ++k)
      for (const auto &[key, v] : sub.echelon().reduce(bracket(basis[k], sb[si], w.form).terms))
        eq[{si, key}].emplace(k, v);
  std::vector<SVec<int>> rows;
  for (auto &[key, r] : eq)
    rows.push_back(std::move(r));
  Subspace out(w.kind);
  for (const auto &c : nullspace(rows, n)) {
    LieElement x(w.kind);
    for (const auto &[k, s] : c)
      x += s * basis[k];
    out.insert(x);
  }
  return out;
}

int lcs_depth(const Subspace &sub) {
  auto sb = sub.basis();
  for (size_t a = 0; a < sb.size(); ++a)
    for (size_t b = a + 1; b < sb.size(); ++b)
      if (!sub.contains(bracket(sb[a], sb[b])))
        throw OracleError("not a subalgebra");
  if (sb.empty())
    return 0;
  Subspace c = sub;
  int k = 1;
  while (true) {
    Subspace next(sub.kind());
    for (const auto &s : sb)
      for (const auto &y : c.basis())
        next.insert(bracket(s, y));
    if (next.dim() == 0)
      return k;
    if (next.dim() == c.dim())
      throw OracleError("not nilpotent");
    c = std::move(next);
    ++k;
  }
}

VSubspace stable_vectors(const std::vector<LieElement> &gens, const Window &w) {
  return stable_part<Index>(window_vectors(w), gens, vector_action(w));
}

Subspace stable_adjoint(const std::vector<LieElement> &gens, const Window &w) {
  return wrap(w.kind, stable_part<Key>(ambient_echelon(w), gens, adjoint_action(w)));
}

std::vector<VectorWeightSpace> weight_decomposition(const std::vector<LieElement> &gens,
                                                    const Window &w) {
  auto act = vector_action(w);
  auto pieces = decompose<Index>(stable_part<Index>(window_vectors(w), gens, act), gens, act);
  std::vector<VectorWeightSpace> out;
  for (auto &p : pieces)
    out.push_back({std::move(p.weight), std::move(p.space)});
  return out;
}

std::vector<AdjointWeightSpace> weight_decomposition_adjoint(const std::vector<LieElement> &gens,
                                                             const Window &w) {
  auto act = adjoint_action(w);
  auto pieces = decompose<Key>(stable_part<Key>(ambient_echelon(w), gens, act), gens, act);
  std::vector<AdjointWeightSpace> out;
  for (auto &p : pieces)
    out.push_back({std::move(p.weight), wrap(w.kind, p.space)});
  return out;
}

VSubspace generalized_zero_space(const std::vector<LieElement> &gens, const Window &w) {
  return generalized_zero<Index>(window_vectors(w), gens, vector_action(w));
}

Subspace generalized_zero_space_adjoint(const std::vector<LieElement> &gens, const Window &w) {
  return wrap(w.kind, generalized_zero<Key>(ambient_echelon(w), gens, adjoint_action(w)));
}

} // namespace cartan
