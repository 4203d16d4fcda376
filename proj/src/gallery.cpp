#include "cartankit/gallery.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cartan {

namespace {

Matrix unit_matrix(int n, int r, int c) {
  Matrix m(n, n);
  m(r, c) = Scalar(1);
  return m;
}

Poly poly(std::initializer_list<long> c) {
  std::vector<Scalar> v;
  for (long x : c)
    v.push_back(Scalar(x));
  return Poly(v);
}

std::string brief(const Matrix &m) {
  std::string s = m.str();
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

// Solve for X in span(basis) with [X, g] = 0 for all g; returns the solutions'
// coordinate vectors.
std::vector<SVec<int>> matrix_centralizer(const std::vector<Matrix> &basis, const std::vector<Matrix> &gens) {
  std::vector<SVec<int>> rows;
  int n = static_cast<int>(basis.size());
  for (const auto &g : gens) {
    std::vector<Matrix> imgs;
    for (const auto &b : basis)
      imgs.push_back(commutator(b, g));
    for (int r = 0; r < g.rows(); ++r)
      for (int c = 0; c < g.cols(); ++c) {
        SVec<int> row;
        for (int k = 0; k < n; ++k)
          add_term(row, k, imgs[static_cast<size_t>(k)](r, c));
        if (!row.empty())
          rows.push_back(std::move(row));
      }
  }
  return nullspace(rows, n);
}

Matrix c_matrix(Index m) {
  Matrix c(static_cast<int>(m), static_cast<int>(m));
  for (Index i = 1; i <= m; ++i)
    for (Index j = 1; j <= m; ++j)
      c(static_cast<int>(i - 1), static_cast<int>(j - 1)) = Scalar(c_coeff(i, j));
  return c;
}

Scalar d_mean(Index l, Index m) {
  Index sum = 0;
  for (Index k = 1; k <= m; ++k)
    sum += d_coeff(k, l);
  return Scalar::frac(static_cast<long>(sum), static_cast<long>(m));
}

Scalar gamma_coeff(Index i, Index l) {
  Index sum = 0;
  for (Index k = 1; k <= i; ++k)
    sum += d_coeff(k, l);
  return Scalar::frac(static_cast<long>(i * d_coeff(i + 1, l) - sum), static_cast<long>(i + 1));
}

Matrix pad(const Matrix &a, int extra_front, int extra_back) {
  int n = a.rows() + extra_front + extra_back;
  Matrix out(n, n);
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      out(r + extra_front, c + extra_front) = a(r, c);
  return out;
}

Vector dense_to_vector(const std::vector<Scalar> &v) {
  Vector out;
  for (size_t k = 0; k < v.size(); ++k)
    add_term(out, static_cast<Index>(k + 1), v[k]);
  return out;
}

std::vector<Scalar> vector_to_dense(const Vector &v, Index n) {
  std::vector<Scalar> out(static_cast<size_t>(n));
  for (const auto &[i, c] : v)
    if (i >= 1 && i <= n)
      out[static_cast<size_t>(i - 1)] = c;
  return out;
}

void window_checks(Report &r, const std::string &name, const DualSystem &s, const Window &w, bool maximal) {
  std::string tag = name + " " + w.str() + ": ";
  Subspace h(s.kind);
  try {
    h = cartan_basis_at(s, w);
  } catch (const OracleError &) {
    return;
  }
  auto rel = relevant_toral(s, w);
  r.add(tag + "cartan part equals torus centralizer", h == centralizer_basis(rel, w));
  bool commute = true, semisimple = true;
  std::vector<LieElement> inside;
  for (const auto &t : rel)
    if (w.contains(t))
      inside.push_back(t);
  for (size_t a = 0; a < inside.size(); ++a) {
    semisimple = semisimple && is_semisimple(inside[a], w);
    for (size_t b = a + 1; b < inside.size(); ++b)
      commute = commute && bracket(inside[a], inside[b], s.form).is_zero();
  }
  r.add(tag + "toral generators commute", commute);
  r.add(tag + "toral generators semisimple", semisimple);
  if (!maximal)
    return;
  try {
    int depth = lcs_depth(h);
    r.add(tag + "nilpotent of depth <= 2", depth <= 2, "depth " + std::to_string(depth));
  } catch (const OracleError &e) {
    r.add(tag + "nilpotent of depth <= 2", false, e.what());
  }
  Subspace hr = cartan_relevant(s, w);
  r.add(tag + "self-normalizing", normalizer_basis(hr, w) == h);
  r.add(tag + "equals its generalized zero space", generalized_zero_space_adjoint(hr.basis(), w) == h);
}

std::vector<Window> windows_up_to(const DualSystem &s, int max_window) {
  std::vector<Window> out;
  for (Index n = 1; n < 64; ++n) {
    Window w = window_for(s, n);
    if (w.dim() > max_window || static_cast<int>(w.cidx.size()) > max_window)
      break;
    out.push_back(w);
  }
  return out;
}

} // namespace

// ---- nonabelian so Cartan ----

Report so_nonabelian_example(Index n) {
  if (n < 5)
    throw OracleError("window too small: need N >= 5");
  Report r;
  r.command = "gallery so-nonabelian-odd";
  DualSystem s = worked_example("so-nonabelian");
  Window w = Window::range(Kind::SO, -n, n);
  r.data["window"] = w.str();

  auto bad = validate(s, n);
  r.add("duality on the first N generators", !bad,
        bad ? "(" + std::to_string(bad->i) + "," + std::to_string(bad->j) + ") -> " + bad->value.str() : "");

  Vector e0 = basis_vector(0), e1 = basis_vector(1), em2 = basis_vector(-2);
  LieElement lhs = bracket(wedge(e1, e0), wedge(em2, e0), Form(Kind::SO));
  r.add("[e_1^e_0, e_-2^e_0] = e_-2^e_1", lhs == wedge(em2, e1), lhs.str());

  Subspace expected(Kind::SO);
  for (Index i = 3; i <= n; ++i)
    expected.insert(toral_generator(s, i));
  for (const auto &x : {wedge(e0, em2), wedge(e0, e1), wedge(em2, e1)})
    expected.insert(x);
  auto rel = relevant_toral(s, w);
  Subspace z = centralizer_basis(rel, w);
  r.add("centralizer = t + wedge^2 span{e_0, e_-2, e_1}", z == expected,
        "dim " + std::to_string(z.dim()) + " vs " + std::to_string(expected.dim()));
  r.add("constructed cartan part agrees", cartan_basis_at(s, w) == expected);

  int depth = -1;
  try {
    depth = lcs_depth(z);
  } catch (const OracleError &e) {
    r.add("nilpotent of depth exactly 2", false, e.what());
  }
  if (depth >= 0)
    r.add("nilpotent of depth exactly 2", depth == 2, "depth " + std::to_string(depth));

  VSubspace v0;
  for (const auto &piece : weight_decomposition(rel, w)) {
    bool zero = std::all_of(piece.weight.begin(), piece.weight.end(), [](const Scalar &x) { return x.is_zero(); });
    if (zero)
      v0 = piece.space;
  }
  VSubspace want;
  for (const auto &v : {e0, e1, em2})
    want.insert(v);
  r.add("zero weight space V^0 = span{e_0, e_-2, e_1}", v0 == want, "dim " + std::to_string(v0.dim()));
  auto b = v0.basis();
  Matrix g(static_cast<int>(b.size()), static_cast<int>(b.size()));
  for (size_t p = 0; p < b.size(); ++p)
    for (size_t q = 0; q < b.size(); ++q)
      g(static_cast<int>(p), static_cast<int>(q)) = pair(b[p], b[q], Kind::SO);
  r.add("odd: form has rank 1 on V^0", g.rank() == 1, "rank " + std::to_string(g.rank()));
  r.add("not splitting", !is_splitting_at(s, w));
  return r;
}

// ---- gl limit ----

Matrix limit_embed(const Matrix &a) {
  if (a.rows() != a.cols() || a.rows() % 2)
    throw std::invalid_argument("level matrices are 2m x 2m");
  int m = a.rows() / 2;
  Matrix out = pad(a, 1, 1);
  out(0, 0) = a.trace() / Scalar(m);
  return out;
}

Matrix limit_B(int m) {
  Matrix b(2 * m, 2 * m);
  for (int i = 0; i < m; ++i)
    b(i, i) = Scalar(1);
  return b;
}

Matrix limit_C(int m, int sign) {
  return sign > 0 ? unit_matrix(2 * m, 0, 2 * m - 1) : unit_matrix(2 * m, 2 * m - 1, 0);
}

Report gl_limit_B_example(int n) {
  if (n < 1)
    throw std::invalid_argument("level must be at least 1");
  Report r;
  r.command = "gallery gl-limit-B";
  r.data["levels"] = n + 1;
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coef(-3, 3);
  auto random_matrix = [&](int dim) {
    Matrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        m(i, j) = Scalar(coef(rng));
    return m;
  };
  auto lift = [&](Matrix a, int from, int to) {
    for (int k = from; k < to; ++k)
      a = limit_embed(a);
    return a;
  };

  for (int m = 1; m <= n + 1; ++m) {
    int dim = 2 * m;
    std::string lv = "level " + std::to_string(m) + ": ";
    // homomorphism: exhaustive on units for small levels, sampled above
    bool hom = true;
    if (m <= 2) {
      for (int a = 0; a < dim * dim && hom; ++a)
        for (int b = 0; b < dim * dim && hom; ++b) {
          Matrix x = unit_matrix(dim, a / dim, a % dim), y = unit_matrix(dim, b / dim, b % dim);
          hom = limit_embed(commutator(x, y)) == commutator(limit_embed(x), limit_embed(y));
        }
    } else {
      for (int t = 0; t < 40 && hom; ++t) {
        Matrix x = random_matrix(dim), y = random_matrix(dim);
        hom = limit_embed(commutator(x, y)) == commutator(limit_embed(x), limit_embed(y));
      }
    }
    r.add(lv + "embedding preserves brackets", hom);
    Echelon<int> img;
    for (int a = 0; a < dim * dim; ++a) {
      Matrix e = limit_embed(unit_matrix(dim, a / dim, a % dim));
      SVec<int> v;
      for (int i = 0; i < dim + 2; ++i)
        for (int j = 0; j < dim + 2; ++j)
          add_term(v, i * (dim + 2) + j, e(i, j));
      img.insert(v);
    }
    r.add(lv + "embedding is injective", static_cast<int>(img.dim()) == dim * dim);
    r.add(lv + "B_2m embeds to B_2m+2", limit_embed(limit_B(m)) == limit_B(m + 1));

    Matrix t = limit_C(m, 1) + limit_C(m, -1);
    Poly want = m == 1 ? poly({-1, 0, 1}) : poly({0, -1, 0, 1});
    Poly got = minimal_polynomial(t);
    r.add(lv + "C_m + C_-m has squarefree minimal polynomial " + want.str(), got == want && is_squarefree(got),
          got.str());
  }

  for (int m = 1; m <= n; ++m) {
    std::string lv = "level " + std::to_string(m) + ": ";
    int dim = 2 * m;
    Matrix tp = limit_C(m + 1, 1) + limit_C(m + 1, -1), tm = limit_C(m + 1, 1) - limit_C(m + 1, -1);
    // [M + aB, C_{m+1} + C_{-(m+1)}] = a (C_{m+1} - C_{-(m+1)}) over a basis of sl_2m
    std::vector<Matrix> sl;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if (i != j)
          sl.push_back(unit_matrix(dim, i, j));
    for (int i = 0; i + 1 < dim; ++i)
      sl.push_back(unit_matrix(dim, i, i) - unit_matrix(dim, i + 1, i + 1));
    bool identity = true;
    std::string witness;
    for (const Scalar &a : {Scalar(0), Scalar(1), Scalar::frac(-3, 2), Scalar(2) + Scalar::i()}) {
      for (const auto &mm : sl) {
        Matrix x = limit_embed(mm) + limit_B(m + 1).scaled(a);
        if (!(commutator(x, tp) == tm.scaled(a))) {
          identity = false;
          witness = "a = " + a.str() + ", M = " + brief(mm);
        }
      }
    }
    r.add(lv + "[M + aB, C_m+1 + C_-(m+1)] = a(C_m+1 - C_-(m+1))", identity, witness);

    // centralizer of the images of C_k + C_-k (k <= m+1) inside the image of gl_2m is traceless
    std::vector<Matrix> basis, lifted;
    for (int a = 0; a < dim * dim; ++a) {
      basis.push_back(unit_matrix(dim, a / dim, a % dim));
      lifted.push_back(limit_embed(basis.back()));
    }
    std::vector<Matrix> gens;
    for (int k = 1; k <= m + 1; ++k)
      gens.push_back(lift(limit_C(k, 1) + limit_C(k, -1), k, m + 1));
    bool traceless = true;
    auto sols = matrix_centralizer(lifted, gens);
    for (const auto &sol : sols) {
      Scalar tr;
      for (const auto &[k, c] : sol)
        tr += c * basis[static_cast<size_t>(k)].trace();
      traceless = traceless && tr.is_zero();
    }
    r.add(lv + "centralizing elements have a = 0 (lie in sl)", traceless,
          std::to_string(sols.size()) + " solutions");
  }

  // torus elements from different levels commute at a common level
  int top = n + 1;
  std::vector<Matrix> ts;
  for (int k = 1; k <= top; ++k)
    ts.push_back(lift(limit_C(k, 1) + limit_C(k, -1), k, top));
  bool commute = true;
  for (size_t a = 0; a < ts.size(); ++a)
    for (size_t b = a + 1; b < ts.size(); ++b)
      commute = commute && commutator(ts[a], ts[b]).is_zero();
  r.add("C_m + C_-m commute across levels", commute);
  return r;
}

// ---- sl limit ----

int c_coeff(Index i, Index j) {
  if (i < 1 || j < 1)
    throw std::out_of_range("c_ij needs positive indices");
  if (i > j)
    return 0;
  if (i == 1)
    return 1;
  if (i - 1 >= 62)
    return 0;
  Index mod = Index(1) << (i - 1);
  return (j - i) % mod == 0 ? 1 : 0;
}

Vector f_vector(Index j) {
  Vector v;
  for (Index i = 1; i <= j; ++i)
    if (c_coeff(i, j))
      add_term(v, i, Scalar(1));
  return v;
}

Index p_of(Index j) {
  if (j < 2)
    throw std::out_of_range("p is defined on j >= 2");
  Vector target = f_vector(j) - basis_vector(j);
  for (Index i = 1; i < j; ++i)
    if (f_vector(i) == target)
      return i;
  throw std::logic_error("no p(j) for j = " + std::to_string(j));
}

Index d_coeff(Index k, Index l) {
  while (k > l)
    k = p_of(k);
  return k;
}

LevelElement t_at_level(Index l, Index m) {
  if (l < 1 || m < l)
    throw std::invalid_argument("need 1 <= l <= m");
  Matrix c = c_matrix(m);
  Scalar s = d_mean(l, m);
  Matrix d(static_cast<int>(m), static_cast<int>(m));
  for (Index k = 1; k <= m; ++k)
    d(static_cast<int>(k - 1), static_cast<int>(k - 1)) = Scalar(static_cast<long>(d_coeff(k, l))) - s;
  LevelElement out;
  out.a = c * d * c.inverse();
  out.z.assign(static_cast<size_t>(m), Scalar());
  out.z[static_cast<size_t>(l - 1)] = s;
  return out;
}

LevelElement embed_level(const LevelElement &x) {
  Index i = x.a.rows();
  LevelElement out;
  out.a = pad(x.a, 0, 1);
  out.z.assign(static_cast<size_t>(i + 1), Scalar());
  for (Index l = 1; l <= i; ++l) {
    const Scalar &zl = x.z[static_cast<size_t>(l - 1)];
    if (zl.is_zero())
      continue;
    Scalar unit = zl / d_mean(l, i);
    Scalar g = gamma_coeff(i, l);
    for (Index k = 0; k < i; ++k)
      out.a(static_cast<int>(k), static_cast<int>(k)) -= unit * g / Scalar(static_cast<long>(i));
    out.a(static_cast<int>(i), static_cast<int>(i)) += unit * g;
    out.z[static_cast<size_t>(l - 1)] = unit * d_mean(l, i + 1);
  }
  return out;
}

LevelElement level_bracket(const LevelElement &x, const LevelElement &y) {
  return {commutator(x.a, y.a), std::vector<Scalar>(x.z.size())};
}

Report sl_trivial_intersection_example(int j, int big_l) {
  if (j < 1 || j > 5)
    throw std::invalid_argument("j must be in 1..5");
  if (big_l < j)
    throw std::invalid_argument("L must be at least j");
  Echelon<Index> span;
  for (Index k = 1; k <= big_l - j; ++k) {
    Vector v;
    for (Index i = 1; i <= j; ++i)
      add_term(v, i, Scalar(c_coeff(i, j + k)));
    span.insert(v);
  }
  if (static_cast<int>(span.dim()) < j)
    throw std::invalid_argument("L too small to span");

  Report r;
  r.command = "gallery sl-trivial-torus";
  r.data["j"] = j;
  r.data["L"] = big_l;

  bool pj = true;
  std::string pw;
  for (Index q = 2; q <= 12; ++q) {
    Index p = p_of(q);
    int hits = 0;
    for (Index i = 1; i < q; ++i)
      hits += f_vector(i) == f_vector(q) - basis_vector(q);
    if (!(p < q && hits == 1)) {
      pj = false;
      pw = "j = " + std::to_string(q);
    }
  }
  r.add("f_j - e_j = f_p(j) with p(j) < j unique, j <= 12", pj, pw);
  r.add("f_1..f_L is a basis of V_L", c_matrix(big_l).rank() == big_l);

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coef(-2, 2);
  bool hom = true, formula = true;
  for (Index m = 1; m < std::min<Index>(big_l, 10); ++m) {
    for (int t = 0; t < 4; ++t) {
      LevelElement x{Matrix(static_cast<int>(m), static_cast<int>(m)), {}}, y = x;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          x.a(a, b) = Scalar(coef(rng));
          y.a(a, b) = Scalar(coef(rng));
        }
      Scalar tx = x.a.trace(), ty = y.a.trace();
      x.a(0, 0) -= tx;
      y.a(0, 0) -= ty;
      for (Index l = 1; l <= m; ++l) {
        x.z.push_back(Scalar(coef(rng)));
        y.z.push_back(Scalar(coef(rng)));
      }
      hom = hom && embed_level(level_bracket(x, y)) == level_bracket(embed_level(x), embed_level(y));
    }
  }
  r.add("embeddings g_i -> g_i+1 preserve brackets", hom);

  std::vector<LevelElement> at_top;
  for (Index l = 1; l <= big_l; ++l) {
    LevelElement cur = t_at_level(l, l);
    for (Index m = l; m < big_l; ++m) {
      LevelElement next = embed_level(cur);
      LevelElement want = t_at_level(l, m + 1);
      if (!(next == want))
        formula = false;
      cur = std::move(want);
    }
    at_top.push_back(cur);
  }
  r.add("explicit image of t_l in g_m matches the embeddings", formula);

  bool ss = true;
  for (Index l = 1; l <= big_l; ++l) {
    Matrix a = t_at_level(l, l).a;
    Poly mp = minimal_polynomial(a);
    Poly want = poly({1});
    std::vector<Scalar> seen;
    Scalar s = d_mean(l, l);
    for (Index k = 1; k <= l; ++k) {
      Scalar ev = Scalar(static_cast<long>(k)) - s;
      if (std::find(seen.begin(), seen.end(), ev) == seen.end()) {
        seen.push_back(ev);
        want = want * Poly::linear_root(ev);
      }
    }
    ss = ss && mp == want && is_squarefree(mp);
  }
  r.add("t_l semisimple (conjugate of diagonal plus central)", ss);

  bool commute = true;
  for (size_t a = 0; a < at_top.size(); ++a)
    for (size_t b = a + 1; b < at_top.size(); ++b)
      commute = commute && commutator(at_top[a].a, at_top[b].a).is_zero();
  r.add("[t_l, t_m] = 0 at level L", commute);

  bool eig = true;
  for (Index l = 1; l <= big_l; ++l) {
    const Matrix &a = at_top[static_cast<size_t>(l - 1)].a;
    Scalar s = d_mean(l, big_l);
    for (Index k = 1; k <= big_l; ++k) {
      auto fk = vector_to_dense(f_vector(k), big_l);
      Vector img = dense_to_vector(a.apply(fk));
      Scalar ev = Scalar(static_cast<long>(d_coeff(k, l))) - s;
      eig = eig && img == scaled(f_vector(k), ev);
    }
  }
  r.add("f_1..f_L are eigenvectors of every t_l at level L", eig);

  // upper right block of t_L with rows <= j: column k is (j+k - p(j+k)) sum_i c_{i,j+k} e_i
  bool block = true;
  const Matrix &tl = at_top.back().a;
  for (Index k = 1; k <= big_l - j; ++k) {
    Index col = j + k;
    Scalar factor(static_cast<long>(col - p_of(col)));
    for (Index i = 1; i <= j; ++i)
      block = block && tl(static_cast<int>(i - 1), static_cast<int>(col - 1)) == factor * Scalar(c_coeff(i, col));
  }
  r.add("block S_L has the stated columns", block);

  // only C = 0 in sl(V_j) commutes with all t_l at level L
  std::vector<Matrix> basis;
  for (int a = 0; a < j; ++a)
    for (int b = 0; b < j; ++b)
      if (a != b)
        basis.push_back(pad(unit_matrix(j, a, b), 0, big_l - j));
  for (int a = 0; a + 1 < j; ++a)
    basis.push_back(pad(unit_matrix(j, a, a) - unit_matrix(j, a + 1, a + 1), 0, big_l - j));
  std::vector<Matrix> gens;
  for (const auto &e : at_top)
    gens.push_back(e.a);
  auto sols = matrix_centralizer(basis, gens);
  r.add("only C = 0 in sl(V_j) centralizes the torus", sols.empty(),
        std::to_string(sols.size()) + " independent solutions");
  return r;
}

// ---- splitting ----

Report splitting_examples(Index n) {
  Report r;
  r.command = "gallery splitting";
  struct Case {
    std::string name;
    DualSystem sys;
    std::vector<long> inv;
  };
  std::vector<Case> cases = {{"so even", dual_bases(Kind::SO), {0, 0, 0}},
                             {"so odd", dual_bases(Kind::SO, true), {1, 1, 0}},
                             {"sp", dual_bases(Kind::SP), {0, 0, 0}},
                             {"gl", dual_bases(Kind::GL), {0, 0, 0, 0, 0}},
                             {"sl", dual_bases(Kind::SL), {0, 0, 0, 0, 0}}};
  for (const auto &c : cases) {
    r.add(c.name + ": duality", !validate(c.sys, n));
    bool split = true;
    for (Index k = 1; k <= n; ++k)
      split = split && is_splitting_at(c.sys, window_for(c.sys, k));
    r.add(c.name + ": splitting on all windows", split);
    StandardInvariants inv = standard_invariants(datum_from_system(c.sys));
    r.add(c.name + ": invariants " + StandardInvariants{c.sys.kind, c.inv}.str(), inv.entries == c.inv, inv.str());
  }
  return r;
}

// ---- registry ----

std::vector<std::string> gallery_ids() {
  return {"so-nonabelian-odd", "gl-limit-B", "sl-trivial-torus", "splitting"};
}

Report run_gallery(const std::string &id, std::optional<int> size) {
  if (id == "so-nonabelian-odd")
    return so_nonabelian_example(size.value_or(8));
  if (id == "gl-limit-B")
    return gl_limit_B_example(size.value_or(4));
  if (id == "sl-trivial-torus")
    return sl_trivial_intersection_example(3, size.value_or(20));
  if (id == "splitting")
    return splitting_examples(size.value_or(8));
  throw std::invalid_argument("unknown gallery id '" + id + "'");
}

std::vector<std::pair<std::string, DualSystem>> catalog_corpus(const std::vector<Kind> &kinds) {
  auto want = [&](Kind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };
  std::vector<std::pair<std::string, DualSystem>> out;
  for (Kind k : {Kind::GL, Kind::SL, Kind::SO, Kind::SP})
    if (want(k))
      out.push_back({kind_name(k) + " dual bases", dual_bases(k)});
  if (want(Kind::SO)) {
    out.push_back({"so odd dual bases", dual_bases(Kind::SO, true)});
    out.push_back({"so nonabelian", worked_example("so-nonabelian")});
  }
  for (Kind k : {Kind::GL, Kind::SL}) {
    if (!want(k))
      continue;
    for (auto e : std::vector<std::vector<long>>{{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}, {0, 0, 1, 1, 0}, {0, 1, 0, 0, 1}}) {
      StandardInvariants inv{k, e};
      auto reps = finite_class_representatives(inv);
      for (size_t r = 0; r < reps.size(); ++r)
        out.push_back({kind_name(k) + inv.str() + " rep " + std::to_string(r + 1), reps[r]});
    }
  }
  return out;
}

Report verify_theorems(const std::vector<Kind> &kinds, int max_window, std::uint64_t seed, int random_systems) {
  Report r;
  r.command = "verify-theorems";
  std::string ks;
  for (Kind k : kinds)
    ks += (ks.empty() ? "" : ",") + kind_name(k);
  r.data["kinds"] = ks;
  r.data["max_window"] = max_window;
  r.data["seed"] = seed;
  auto corpus = catalog_corpus(kinds);
  std::mt19937_64 rng(seed);
  for (Kind k : kinds) {
    size_t len = is_orthosymplectic(k) ? 3 : 5;
    for (int t = 0; t < random_systems; ++t) {
      StandardInvariants inv{k, std::vector<long>(len)};
      do {
        for (auto &e : inv.entries)
          e = static_cast<long>(rng() % 3);
      } while (realizability_violation(inv));
      ComplementDatum d = build_representative(inv);
      DualSystem s = system_from_datum(d);
      ComplementDatum back = datum_from_system(s);
      r.add("random " + kind_name(k) + inv.str() + ": datum round trip", back == d.normalized());
      corpus.push_back({"random " + kind_name(k) + inv.str(), s});
    }
  }
  for (const auto &[name, s] : corpus) {
    auto bad = validate(s, 8);
    r.add(name + ": duality", !bad);
    bool maximal = s.complement ? is_maximal(datum_from_system(s)) : false;
    for (const auto &w : windows_up_to(s, max_window))
      window_checks(r, name, s, w, maximal);
  }
  return r;
}

} // namespace cartan
