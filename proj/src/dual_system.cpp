#include "cartankit/dual_system.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace cartan {

namespace {

Vector eval_term(const Term &t, Index j, Index first) {
  Scalar c = t.coeff.at(j - first + 1);
  Vector v;
  if (c.is_zero())
    return v;
  switch (t.type) {
  case Term::Shift: return basis_vector(t.mult * j + t.off, c);
  case Term::Const: return basis_vector(t.off, c);
  case Term::Cumulative:
    for (Index m = j + t.off; m >= 1; m -= t.step)
      add_term(v, m, c);
    return v;
  }
  return v;
}

Vector eval_terms(const std::vector<Term> &ts, Index j, Index first) {
  Vector v;
  for (const auto &t : ts)
    axpy(v, Scalar(1), eval_term(t, j, first));
  return v;
}

Term shift(Index mult, Index off, ScalarSeq c = ScalarSeq::constant(Scalar(1))) {
  return Term{Term::Shift, mult, off, 1, std::move(c)};
}

Term constant_at(Index at, ScalarSeq c) { return Term{Term::Const, 0, at, 1, std::move(c)}; }

void require_gl(Kind k, const char *what) {
  if (is_orthosymplectic(k))
    throw std::invalid_argument(std::string(what) + " is defined for gl/sl only");
}

class NormalGram : public Gram {
public:
  explicit NormalGram(ComplementDatum d) : d_(std::move(d)) {}

  Scalar pair(Index a, Index b) const override {
    bool ax = a >= kComplementBase, bx = b >= kComplementBase;
    int ka = static_cast<int>(a - kComplementBase), kb = static_cast<int>(b - kComplementBase);
    if (ax && bx)
      return d_.omega(ka, kb);
    if (!d_.single_space()) {
      if (!ax && !bx)
        return a == b ? Scalar(1) : Scalar();
      if (ax)
        return d_.lambda(b)[static_cast<size_t>(ka)];
      return d_.mu(a)[static_cast<size_t>(kb)];
    }
    if (!ax && !bx) {
      if (a != -b)
        return Scalar();
      return (d_.kind == Kind::SP && a < 0) ? Scalar(-1) : Scalar(1);
    }
    if (ax)
      return d_.lambda(b)[static_cast<size_t>(ka)];
    Scalar v = d_.lambda(a)[static_cast<size_t>(kb)];
    return d_.kind == Kind::SP ? -v : v;
  }

  bool legal_vector(Index a) const override { return legal(a, d_.x_dim); }
  bool legal_covector(Index b) const override { return legal(b, d_.other_dim()); }

private:
  bool legal(Index a, int dim) const {
    if (a >= kComplementBase)
      return a - kComplementBase < dim;
    if (d_.single_space())
      return a != 0 && -a < kComplementBase;
    return a >= 1;
  }
  ComplementDatum d_;
};

Json anchor_json(const Anchor &a) { return {{"index", a.index}, {"pattern", to_json(a.pattern)}}; }

Anchor anchor_from_json(const Json &j) {
  Anchor a;
  if (!j.is_object() || !j.contains("index") || !j.at("index").is_number_integer())
    throw std::invalid_argument("bad json: anchor needs an integer index");
  a.index = j.at("index").get<Index>();
  if (j.contains("pattern"))
    a.pattern = scalar_seq_from_json(j.at("pattern"));
  return a;
}

Index max_abs_plain(const std::vector<Index> &idx) {
  Index m = 0;
  for (Index i : idx)
    if (std::llabs(i) < kComplementBase)
      m = std::max(m, std::llabs(i));
  return m;
}

VSubspace solve_perp(const std::vector<Index> &unknowns, const std::vector<Vector> &constraints,
                     bool unknowns_are_vectors, const Form &f) {
  int n = static_cast<int>(unknowns.size());
  std::vector<SVec<int>> rows;
  for (const auto &c : constraints) {
    SVec<int> r;
    for (int k = 0; k < n; ++k) {
      Vector e = basis_vector(unknowns[static_cast<size_t>(k)]);
      Scalar v = unknowns_are_vectors ? pair(e, c, f) : pair(c, e, f);
      add_term(r, k, v);
    }
    if (!r.empty())
      rows.push_back(std::move(r));
  }
  VSubspace out;
  for (const auto &sol : nullspace(rows, n)) {
    Vector v;
    for (const auto &[k, c] : sol)
      add_term(v, unknowns[static_cast<size_t>(k)], c);
    out.insert(v);
  }
  return out;
}

} // namespace

// ---- DualSystem ----

bool DualSystem::in_index_set(Index i) const {
  if (is_orthosymplectic(kind))
    return std::llabs(i) >= first;
  return i >= first;
}

Vector DualSystem::vec(Index i) const {
  if (!in_index_set(i))
    throw std::out_of_range("index outside index set: " + std::to_string(i));
  if (i > 0)
    return eval_terms(pos, i, first);
  return eval_terms(neg, -i, first);
}

Vector DualSystem::covec(Index i) const {
  if (is_orthosymplectic(kind))
    throw std::invalid_argument("covectors exist for gl/sl only");
  if (!in_index_set(i))
    throw std::out_of_range("index outside index set: " + std::to_string(i));
  return eval_terms(neg, i, first);
}

Index DualSystem::horizon() const {
  Index h = 0;
  for (const auto *ts : {&pos, &neg})
    for (const auto &t : *ts)
      h = std::max(h, std::llabs(t.off) + t.coeff.start());
  if (complement)
    for (const auto *vs : {&complement->xs, &complement->ys})
      for (const auto &v : *vs)
        h = std::max(h, max_abs_plain(support(v)));
  if (realized)
    h = std::max(h, realized->tail_start());
  return first + h + 1;
}

Index DualSystem::rule_period() const {
  Index p = 1;
  for (const auto *ts : {&pos, &neg})
    for (const auto &t : *ts) {
      p = lcm_index(p, t.coeff.length());
      if (t.type == Term::Cumulative)
        p = lcm_index(p, t.step);
    }
  if (realized)
    p = lcm_index(p, realized->tail_period());
  return p;
}

Index DualSystem::support_bound(Index i) const {
  Index j = std::llabs(i), b = 0;
  for (const auto *ts : {&pos, &neg})
    for (const auto &t : *ts)
      switch (t.type) {
      case Term::Shift: b = std::max(b, std::llabs(t.mult * j + t.off)); break;
      case Term::Const: b = std::max(b, std::llabs(t.off)); break;
      case Term::Cumulative: b = std::max(b, j + t.off); break;
      }
  return b;
}

// ---- catalog ----

DualSystem dual_bases(Kind k, bool with_zero) {
  if (with_zero && k != Kind::SO)
    throw std::invalid_argument("only so dual bases may include e_0");
  DualSystem s;
  s.kind = k;
  s.form = Form(k);
  s.pos = {shift(1, 0)};
  s.neg = {shift(is_orthosymplectic(k) ? -1 : 1, 0)};
  s.catalog = "dual-bases";
  s.params = {{"zero", with_zero}};
  s.has_zero = with_zero;
  s.complement = Complement{};
  if (with_zero)
    s.complement->xs.push_back(basis_vector(0));
  return s;
}

DualSystem shift_pattern(Kind k, Index v_shift, Index w_shift, std::optional<Anchor> v_anchor,
                         std::optional<Anchor> w_anchor) {
  require_gl(k, "shift-pattern");
  if (v_shift < 0 || w_shift < 0)
    throw std::invalid_argument("shifts must be nonnegative");
  DualSystem s;
  s.kind = k;
  s.form = Form(k);
  s.pos = {shift(1, v_shift)};
  s.neg = {shift(1, w_shift)};
  s.catalog = "shift-pattern";
  s.params = {{"v_shift", v_shift}, {"w_shift", w_shift}};
  bool anchors_low = true;
  if (v_anchor) {
    if (v_anchor->index < 1)
      throw std::invalid_argument("anchor index must be positive");
    s.pos.push_back(constant_at(v_anchor->index, v_anchor->pattern));
    s.params["v_anchor"] = anchor_json(*v_anchor);
    anchors_low = anchors_low && v_anchor->index <= w_shift;
  }
  if (w_anchor) {
    if (w_anchor->index < 1)
      throw std::invalid_argument("anchor index must be positive");
    s.neg.push_back(constant_at(w_anchor->index, w_anchor->pattern));
    s.params["w_anchor"] = anchor_json(*w_anchor);
    anchors_low = anchors_low && w_anchor->index <= v_shift;
  }
  if (v_shift == w_shift && anchors_low) {
    Complement c;
    for (Index r = 1; r <= v_shift; ++r) {
      c.xs.push_back(basis_vector(r));
      c.ys.push_back(basis_vector(r));
    }
    s.complement = c;
  }
  return s;
}

DualSystem cumulative_sum(Kind k, Index stride, const ScalarSeq &pattern, bool swap) {
  require_gl(k, "cumulative-sum");
  if (stride < 1)
    throw std::invalid_argument("stride must be positive");
  DualSystem s;
  s.kind = k;
  s.form = Form(k);
  std::vector<Term> diff = {shift(1, 0), shift(1, stride, pattern.map([](const Scalar &x) { return -x; }))};
  std::vector<Term> cum = {shift(1, 0), Term{Term::Cumulative, 0, -stride, stride, pattern}};
  s.pos = swap ? cum : diff;
  s.neg = swap ? diff : cum;
  s.catalog = "cumulative-sum";
  s.params = {{"stride", stride}, {"pattern", to_json(pattern)}, {"swap", swap}};
  Complement c;
  for (Index r = 1; r <= stride; ++r)
    if (!pattern.at(r).is_zero())
      (swap ? c.ys : c.xs).push_back(basis_vector(r));
  s.complement = c;
  return s;
}

DualSystem worked_example(const std::string &id, const Json &params) {
  DualSystem s;
  if (id == "so-nonabelian") {
    s.kind = Kind::SO;
    s.form = Form(Kind::SO);
    s.first = 3;
    s.has_zero = true;
    s.pos = {shift(1, 0), constant_at(1, ScalarSeq::constant(Scalar(1)))};
    s.neg = {shift(-1, 0), constant_at(-2, ScalarSeq::constant(Scalar(1)))};
    Complement c;
    for (Index r = -2; r <= 2; ++r)
      c.xs.push_back(basis_vector(r));
    s.complement = c;
    s.params = {{"id", id}};
  } else if (id == "ab-family") {
    ScalarSeq a = ScalarSeq::constant(Scalar(1)), b = a;
    if (params.contains("a"))
      a = scalar_seq_from_json(params.at("a"));
    if (params.contains("b"))
      b = scalar_seq_from_json(params.at("b"));
    s.kind = Kind::GL;
    s.form = Form(Kind::GL);
    s.pos = {shift(1, 2), constant_at(1, b)};
    s.neg = {shift(1, 2), constant_at(2, a)};
    s.complement = Complement{{basis_vector(1), basis_vector(2)}, {basis_vector(1), basis_vector(2)}};
    s.params = {{"id", id}, {"a", to_json(a)}, {"b", to_json(b)}};
  } else {
    throw std::invalid_argument("unknown example '" + id + "'");
  }
  s.catalog = "worked-example";
  return s;
}

DualSystem normal_form(const ComplementDatum &d) {
  d.check();
  DualSystem s;
  s.kind = d.kind;
  s.form = Form(d.kind, std::make_shared<NormalGram>(d));
  s.pos = {shift(1, 0)};
  s.neg = {shift(d.single_space() ? -1 : 1, 0)};
  s.catalog = "normal-form";
  s.params = {{"datum", to_json(d)}};
  s.realized = d;
  Complement c;
  for (int k = 0; k < d.x_dim; ++k)
    c.xs.push_back(basis_vector(kComplementBase + k));
  if (!d.single_space())
    for (int k = 0; k < d.y_dim; ++k)
      c.ys.push_back(basis_vector(kComplementBase + k));
  s.complement = c;
  return s;
}

// ---- JSON ----

Json to_json(const DualSystem &s) {
  Json j = {{"kind", kind_name(s.kind)}, {"catalog", s.catalog}, {"params", s.params}};
  if (s.complement) {
    Json xs = Json::array(), ys = Json::array();
    for (const auto &v : s.complement->xs)
      xs.push_back(to_json(v));
    for (const auto &v : s.complement->ys)
      ys.push_back(to_json(v));
    j["complement"] = {{"X", xs}, {"Y", ys}};
  }
  return j;
}

DualSystem system_from_json(const Json &j) {
  if (!j.is_object() || !j.contains("catalog") || !j.at("catalog").is_string())
    throw std::invalid_argument("bad json: system needs a catalog name");
  std::string cat = j.at("catalog").get<std::string>();
  Json p = j.value("params", Json::object());
  std::optional<Kind> kind;
  if (j.contains("kind"))
    kind = parse_kind(j.at("kind").get<std::string>());
  auto need_kind = [&]() {
    if (!kind)
      throw std::invalid_argument("bad json: system needs a kind");
    return *kind;
  };
  auto get_index = [&](const char *key, Index dflt) {
    if (!p.contains(key))
      return dflt;
    if (!p.at(key).is_number_integer())
      throw std::invalid_argument(std::string("bad json: '") + key + "' must be an integer");
    return p.at(key).get<Index>();
  };
  DualSystem s;
  if (cat == "dual-bases") {
    s = dual_bases(need_kind(), p.value("zero", false));
  } else if (cat == "shift-pattern") {
    std::optional<Anchor> va, wa;
    if (p.contains("v_anchor"))
      va = anchor_from_json(p.at("v_anchor"));
    if (p.contains("w_anchor"))
      wa = anchor_from_json(p.at("w_anchor"));
    s = shift_pattern(need_kind(), get_index("v_shift", 0), get_index("w_shift", 0), va, wa);
  } else if (cat == "cumulative-sum") {
    ScalarSeq pat = p.contains("pattern") ? scalar_seq_from_json(p.at("pattern"))
                                          : ScalarSeq::constant(Scalar(1));
    s = cumulative_sum(need_kind(), get_index("stride", 1), pat, p.value("swap", false));
  } else if (cat == "worked-example") {
    if (!p.contains("id") || !p.at("id").is_string())
      throw std::invalid_argument("bad json: worked-example needs params.id");
    s = worked_example(p.at("id").get<std::string>(), p);
  } else if (cat == "normal-form") {
    if (!p.contains("datum"))
      throw std::invalid_argument("bad json: normal-form needs params.datum");
    s = normal_form(datum_from_json(p.at("datum")));
  } else {
    throw std::invalid_argument("unknown catalog '" + cat + "'");
  }
  if (kind && *kind != s.kind) {
    bool gl_sl = !is_orthosymplectic(*kind) && !is_orthosymplectic(s.kind);
    if (!gl_sl)
      throw std::invalid_argument("kind " + kind_name(*kind) + " does not match catalog system");
    s.kind = *kind;
    s.form = s.form.with_kind(*kind);
  }
  if (j.contains("complement")) {
    const Json &c = j.at("complement");
    Complement comp;
    for (const auto &v : c.value("X", Json::array()))
      comp.xs.push_back(vector_from_json(v));
    for (const auto &v : c.value("Y", Json::array()))
      comp.ys.push_back(vector_from_json(v));
    s.complement = comp;
  }
  return s;
}

// ---- validation ----

std::optional<Violation> validate(const DualSystem &s, Index n) {
  if (n < 1)
    throw std::invalid_argument("N must be at least 1");
  std::vector<Index> idx;
  for (Index k = 0; k < n; ++k) {
    idx.push_back(s.first + k);
    if (is_orthosymplectic(s.kind))
      idx.push_back(-(s.first + k));
  }
  std::vector<Vector> vs, ws;
  for (Index i : idx) {
    vs.push_back(s.vec(i));
    ws.push_back(is_orthosymplectic(s.kind) ? vs.back() : s.covec(i));
  }
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) {
      Index i = idx[a], j = idx[b];
      Scalar expected;
      if (is_orthosymplectic(s.kind)) {
        if (j == -i)
          expected = (s.kind == Kind::SP && i < 0) ? Scalar(-1) : Scalar(1);
      } else if (i == j) {
        expected = Scalar(1);
      }
      Scalar v = pair(vs[a], ws[b], s.form);
      if (!(v == expected))
        return Violation{i, j, v, expected};
    }
  return std::nullopt;
}

LieElement toral_generator(const DualSystem &s, Index i) {
  switch (s.kind) {
  case Kind::GL: return tensor(Kind::GL, s.vec(i), s.covec(i));
  case Kind::SL:
    return tensor(Kind::SL, s.vec(i), s.covec(i)) - tensor(Kind::SL, s.vec(i + 1), s.covec(i + 1));
  case Kind::SO: return wedge(s.vec(i), s.vec(-i));
  case Kind::SP: return sym(s.vec(i), s.vec(-i));
  }
  return {};
}

// ---- windows ----

Window window_for(const DualSystem &s, Index n) {
  if (n < 1)
    throw std::invalid_argument("window needs at least one generator");
  std::set<Index> v, c;
  bool single = is_orthosymplectic(s.kind);
  for (Index k = 0; k < n; ++k) {
    Index i = s.first + k;
    for (Index a : support(s.vec(i)))
      v.insert(a);
    if (single) {
      for (Index a : support(s.vec(-i)))
        v.insert(a);
    } else {
      for (Index b : support(s.covec(i)))
        c.insert(b);
    }
  }
  if (s.complement) {
    for (const auto &x : s.complement->xs)
      for (Index a : support(x))
        v.insert(a);
    for (const auto &y : s.complement->ys)
      for (Index b : support(y))
        c.insert(b);
  }
  if (single) {
    if (s.form.standard()) {
      std::set<Index> sym_v;
      for (Index a : v) {
        sym_v.insert(a);
        sym_v.insert(-a);
      }
      if (!s.has_zero)
        sym_v.erase(0);
      v = sym_v;
    }
    c = v;
  }
  return Window(s.kind, s.form, {v.begin(), v.end()}, {c.begin(), c.end()});
}

std::vector<Index> relevant_indices(const DualSystem &s, const Window &w) {
  Index m = std::max(max_abs_plain(w.vidx), max_abs_plain(w.cidx));
  Index bound = m + s.horizon() + 2 * s.rule_period() + 2;
  std::vector<Index> out;
  for (Index i = s.first; i <= bound; ++i) {
    out.push_back(i);
    if (is_orthosymplectic(s.kind))
      out.push_back(-i);
  }
  return out;
}

std::vector<LieElement> relevant_toral(const DualSystem &s, const Window &w) {
  std::vector<LieElement> out;
  for (Index i : relevant_indices(s, w))
    if (i > 0)
      out.push_back(toral_generator(s, i));
  return out;
}

VSubspace perp_vectors(const DualSystem &s, const Window &w) {
  std::vector<Vector> cons;
  for (Index i : relevant_indices(s, w))
    cons.push_back(is_orthosymplectic(s.kind) ? s.vec(i) : s.covec(i));
  return solve_perp(w.vidx, cons, true, s.form);
}

VSubspace perp_covectors(const DualSystem &s, const Window &w) {
  require_gl(s.kind, "perp_covectors");
  std::vector<Vector> cons;
  for (Index i : relevant_indices(s, w))
    cons.push_back(s.vec(i));
  return solve_perp(w.cidx, cons, false, s.form);
}

namespace {

// A (x) B before the sl restriction
Subspace raw_block(const DualSystem &s, const Window &w) {
  auto a = perp_vectors(s, w).basis();
  Subspace out(s.kind);
  switch (s.kind) {
  case Kind::GL:
  case Kind::SL: {
    auto b = perp_covectors(s, w).basis();
    for (const auto &x : a)
      for (const auto &y : b)
        out.insert(tensor(s.kind, x, y));
    break;
  }
  case Kind::SO:
    for (size_t p = 0; p < a.size(); ++p)
      for (size_t q = p + 1; q < a.size(); ++q)
        out.insert(wedge(a[p], a[q]));
    break;
  case Kind::SP:
    for (size_t p = 0; p < a.size(); ++p)
      for (size_t q = p; q < a.size(); ++q)
        out.insert(sym(a[p], a[q]));
    break;
  }
  return out;
}

Subspace traceless_part(const Subspace &h, const Form &form) {
  auto b = h.basis();
  SVec<int> row;
  for (size_t k = 0; k < b.size(); ++k)
    add_term(row, static_cast<int>(k), trace(b[k], form));
  Subspace out(h.kind());
  for (const auto &sol : nullspace({row}, static_cast<int>(b.size()))) {
    LieElement x(h.kind());
    for (const auto &[k, c] : sol)
      x += c * b[static_cast<size_t>(k)];
    out.insert(x);
  }
  return out;
}

} // namespace

Subspace complement_block_at(const DualSystem &s, const Window &w) {
  Subspace out = raw_block(s, w);
  if (s.kind == Kind::SL)
    out = out.intersect(Subspace::span(Kind::SL, ambient_basis(w)));
  return out;
}

Subspace cartan_basis_at(const DualSystem &s, const Window &w) {
  if (s.complement) {
    for (const auto &x : s.complement->xs)
      if (!w.contains(x))
        throw OracleError("window too small: declared complement is not inside");
    for (const auto &y : s.complement->ys)
      for (Index b : support(y))
        if (!w.has_covector(b))
          throw OracleError("window too small: declared complement is not inside");
  }
  Subspace h(s.kind);
  size_t inside = 0;
  for (Index i : relevant_indices(s, w)) {
    if (i < 0)
      continue;
    LieElement t = s.kind == Kind::SL ? tensor(Kind::SL, s.vec(i), s.covec(i)) : toral_generator(s, i);
    if (w.contains(t)) {
      h.insert(t);
      ++inside;
    }
  }
  if (inside == 0)
    throw OracleError("window too small: no generator fits");
  for (const auto &b : raw_block(s, w).basis())
    h.insert(b);
  if (s.kind == Kind::SL)
    h = h.intersect(Subspace::span(Kind::SL, ambient_basis(w)));
  return h;
}

Subspace cartan_relevant(const DualSystem &s, const Window &w) {
  Subspace h(s.kind);
  if (s.kind == Kind::SL) {
    for (Index i : relevant_indices(s, w))
      if (i >= 0)
        h.insert(tensor(Kind::SL, s.vec(i), s.covec(i)));
    for (const auto &b : raw_block(s, w).basis())
      h.insert(b);
    return traceless_part(h, s.form);
  }
  for (const auto &t : relevant_toral(s, w))
    h.insert(t);
  for (const auto &b : raw_block(s, w).basis())
    h.insert(b);
  return h;
}

bool is_splitting_at(const DualSystem &s, const Window &w) {
  size_t a = perp_vectors(s, w).dim();
  switch (s.kind) {
  case Kind::GL:
  case Kind::SL: return a == 0 && perp_covectors(s, w).dim() == 0;
  case Kind::SO: return a <= 1;
  case Kind::SP: return a == 0;
  }
  return false;
}

// ---- data ----

DualSystem system_from_datum(const ComplementDatum &d) {
  d.check();
  if (!is_nondegenerate(d))
    throw std::invalid_argument("degenerate datum");
  if (d.x_dim == 0 && (d.single_space() || d.y_dim == 0))
    return dual_bases(d.kind);
  return normal_form(d);
}

ComplementDatum datum_from_system(const DualSystem &s) {
  if (!s.complement)
    throw std::invalid_argument("no declared complement");
  const auto &xs = s.complement->xs, &ys = s.complement->ys;
  ComplementDatum d;
  d.kind = s.kind;
  d.x_dim = static_cast<int>(xs.size());
  bool single = is_orthosymplectic(s.kind);
  const auto &others = single ? xs : ys;
  if (!single)
    d.y_dim = static_cast<int>(ys.size());
  d.omega = Matrix(d.x_dim, static_cast<int>(others.size()));
  for (size_t k = 0; k < xs.size(); ++k)
    for (size_t l = 0; l < others.size(); ++l)
      d.omega(static_cast<int>(k), static_cast<int>(l)) = pair(xs[k], others[l], s.form);
  Index start = s.horizon(), period = s.rule_period();
  auto against = [&](const Vector &g) {
    Covec c;
    for (const auto &x : xs)
      c.push_back(pair(x, g, s.form));
    return c;
  };
  auto sys = [&](Index k) { return s.first + k - 1; };
  if (single) {
    d.lambdas = sample_sequence<Covec>(start, period, [&](Index k) { return against(s.vec(sys(k))); });
    d.lambdas_neg =
        sample_sequence<Covec>(start, period, [&](Index k) { return against(s.vec(-sys(k))); });
  } else {
    d.lambdas = sample_sequence<Covec>(start, period, [&](Index k) { return against(s.covec(sys(k))); });
    d.mus = sample_sequence<Covec>(start, period, [&](Index k) {
      Covec c;
      Vector v = s.vec(sys(k));
      for (const auto &y : ys)
        c.push_back(pair(v, y, s.form));
      return c;
    });
  }
  d.check();
  return d.normalized();
}

std::vector<DualSystem> finite_class_representatives(const StandardInvariants &inv) {
  auto is = [&](std::vector<long> e) { return inv.entries == e; };
  ScalarSeq one = ScalarSeq::constant(Scalar(1));
  ScalarSeq alt({}, {Scalar(1), Scalar(0)});
  Kind k = inv.kind;
  if (!is_orthosymplectic(k)) {
    if (is({0, 0, 0, 0, 0}))
      return {dual_bases(k)};
    if (is({0, 0, 0, 1, 0}))
      return {cumulative_sum(k, 1, one), cumulative_sum(k, 2, alt)};
    if (is({0, 0, 0, 0, 1}))
      return {cumulative_sum(k, 1, one, true), cumulative_sum(k, 2, alt, true)};
    if (is({0, 0, 1, 1, 0}))
      return {shift_pattern(k, 1, 1, {}, Anchor{1, one}), shift_pattern(k, 1, 1, {}, Anchor{1, alt})};
    if (is({0, 1, 0, 0, 1}))
      return {shift_pattern(k, 1, 1, Anchor{1, one}), shift_pattern(k, 1, 1, Anchor{1, alt})};
  } else if (is({0, 0, 0})) {
    return {dual_bases(k)};
  } else if (k == Kind::SO && is({1, 1, 0})) {
    return {dual_bases(k, true)};
  }
  throw std::invalid_argument("not a finite-class tuple: " + inv.str());
}

} // namespace cartan
