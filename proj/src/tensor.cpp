#include "cartankit/tensor.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cartan {

std::string kind_name(Kind k) {
  switch (k) {
  case Kind::GL: return "gl";
  case Kind::SL: return "sl";
  case Kind::SO: return "so";
  case Kind::SP: return "sp";
  }
  return "?";
}

Kind parse_kind(const std::string &s) {
  std::string t;
  for (char c : s)
    t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (t == "gl") return Kind::GL;
  if (t == "sl") return Kind::SL;
  if (t == "so") return Kind::SO;
  if (t == "sp") return Kind::SP;
  throw std::invalid_argument("unknown algebra kind '" + s + "'");
}

bool index_legal(Kind k, Index i) {
  switch (k) {
  case Kind::GL:
  case Kind::SL: return i > 0;
  case Kind::SO: return true;
  case Kind::SP: return i != 0;
  }
  return false;
}

Vector basis_vector(Index i, const Scalar &c) {
  Vector v;
  if (!c.is_zero())
    v.emplace(i, c);
  return v;
}

Scalar Form::operator()(Index a, Index b) const {
  if (gram_)
    return gram_->pair(a, b);
  switch (kind_) {
  case Kind::GL:
  case Kind::SL: return a == b ? Scalar(1) : Scalar();
  case Kind::SO: return a == -b ? Scalar(1) : Scalar();
  case Kind::SP:
    if (a != -b || a == 0)
      return Scalar();
    return a > 0 ? Scalar(1) : Scalar(-1);
  }
  return Scalar();
}

bool Form::legal_vector(Index a) const {
  return gram_ ? gram_->legal_vector(a) : index_legal(kind_, a);
}

bool Form::legal_covector(Index b) const {
  return gram_ ? gram_->legal_covector(b) : index_legal(kind_, b);
}

namespace {

void check_compatible(Kind a, Kind b) {
  bool ok = (a == b) || (!is_orthosymplectic(a) && !is_orthosymplectic(b));
  if (!ok)
    throw std::invalid_argument("kind mismatch: " + kind_name(a) + " vs " + kind_name(b));
}

void check_form(Kind elem, const Form &f) { check_compatible(elem, f.kind()); }

// Standard forms pair e_a only with e_b for one partner b.
Index partner(Kind k, Index a) { return is_orthosymplectic(k) ? -a : a; }

} // namespace

LieElement LieElement::unit(Kind k, Index a, Index b, const Scalar &c) {
  LieElement x(k);
  add_term(x.terms, Key{a, b}, c);
  return x;
}

LieElement &LieElement::operator+=(const LieElement &o) {
  check_compatible(kind, o.kind);
  axpy(terms, Scalar(1), o.terms);
  return *this;
}

LieElement &LieElement::operator-=(const LieElement &o) {
  check_compatible(kind, o.kind);
  axpy(terms, Scalar(-1), o.terms);
  return *this;
}

LieElement &LieElement::operator*=(const Scalar &c) {
  if (c.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto &[k, v] : terms)
    v *= c;
  return *this;
}

std::vector<std::pair<Key, Scalar>> LieElement::records() const {
  std::vector<std::pair<Key, Scalar>> out;
  for (const auto &[k, v] : terms) {
    if (kind == Kind::SO && k.first >= k.second)
      continue;
    if (kind == Kind::SP && k.first > k.second)
      continue;
    out.emplace_back(k, v);
  }
  return out;
}

LieElement LieElement::from_records(Kind k, const std::vector<std::pair<Key, Scalar>> &recs) {
  LieElement x(k);
  for (const auto &[key, c] : recs) {
    auto [i, j] = key;
    if (k == Kind::SO) {
      if (i == j)
        throw std::invalid_argument("so record with i == j");
      add_term(x.terms, Key{i, j}, c);
      add_term(x.terms, Key{j, i}, -c);
    } else if (k == Kind::SP) {
      add_term(x.terms, Key{i, j}, c);
      if (i != j)
        add_term(x.terms, Key{j, i}, c);
    } else {
      add_term(x.terms, Key{i, j}, c);
    }
  }
  return x;
}

std::string LieElement::str() const {
  auto recs = records();
  if (recs.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  const char *sep = kind == Kind::SO ? "^" : (kind == Kind::SP ? "&" : "*");
  for (const auto &[k, c] : recs) {
    if (!first)
      os << " + ";
    first = false;
    if (!c.is_one())
      os << "(" << c << ")";
    os << "e" << k.first << sep << "e" << k.second;
  }
  return os.str();
}

std::string vector_str(const Vector &v) {
  if (v.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[i, c] : v) {
    if (!first)
      os << " + ";
    first = false;
    if (!c.is_one())
      os << "(" << c << ")";
    os << "e" << i;
  }
  return os.str();
}

Scalar pair(const Vector &v, const Vector &w, const Form &f) {
  for (const auto &[a, c] : v)
    if (!f.legal_vector(a))
      throw std::invalid_argument("index " + std::to_string(a) + " illegal for " +
                                  kind_name(f.kind()));
  for (const auto &[b, c] : w)
    if (!f.legal_covector(b))
      throw std::invalid_argument("index " + std::to_string(b) + " illegal for " +
                                  kind_name(f.kind()));
  Scalar s;
  if (f.standard()) {
    for (const auto &[a, c] : v) {
      auto it = w.find(partner(f.kind(), a));
      if (it != w.end())
        s += c * it->second * f(a, it->first);
    }
    return s;
  }
  for (const auto &[a, c] : v)
    for (const auto &[b, d] : w) {
      Scalar g = f(a, b);
      if (!g.is_zero())
        s += c * d * g;
    }
  return s;
}

Scalar pair(const Vector &v, const Vector &w, Kind k) { return pair(v, w, Form(k)); }

LieElement tensor(Kind k, const Vector &u, const Vector &w) {
  LieElement x(k);
  for (const auto &[a, c] : u)
    for (const auto &[b, d] : w)
      add_term(x.terms, Key{a, b}, c * d);
  return x;
}

LieElement wedge(const Vector &u, const Vector &v) {
  return tensor(Kind::SO, u, v) - tensor(Kind::SO, v, u);
}

LieElement sym(const Vector &u, const Vector &v) {
  return tensor(Kind::SP, u, v) + tensor(Kind::SP, v, u);
}

LieElement assoc_product(const LieElement &x, const LieElement &y, const Form &f) {
  check_compatible(x.kind, y.kind);
  check_form(x.kind, f);
  Kind rk = is_orthosymplectic(x.kind) ? x.kind : Kind::GL;
  LieElement out(rk);
  if (x.terms.empty() || y.terms.empty())
    return out;
  if (f.standard()) {
    // terms of y grouped by first index
    for (const auto &[kx, cx] : x.terms) {
      Index c = partner(f.kind(), kx.second);
      auto lo = y.terms.lower_bound(Key{c, std::numeric_limits<Index>::min()});
      for (auto it = lo; it != y.terms.end() && it->first.first == c; ++it) {
        Scalar g = f(c, kx.second);
        add_term(out.terms, Key{kx.first, it->first.second}, cx * it->second * g);
      }
    }
    return out;
  }
  for (const auto &[kx, cx] : x.terms)
    for (const auto &[ky, cy] : y.terms) {
      Scalar g = f(ky.first, kx.second);
      if (!g.is_zero())
        add_term(out.terms, Key{kx.first, ky.second}, cx * cy * g);
    }
  return out;
}

LieElement assoc_product(const LieElement &x, const LieElement &y) {
  return assoc_product(x, y, Form(x.kind));
}

LieElement bracket(const LieElement &x, const LieElement &y, const Form &f) {
  LieElement r = assoc_product(x, y, f);
  r -= assoc_product(y, x, f);
  r.kind = x.kind == y.kind ? x.kind : Kind::GL;
  return r;
}

LieElement bracket(const LieElement &x, const LieElement &y) { return bracket(x, y, Form(x.kind)); }

Vector act(const LieElement &x, const Vector &v, const Form &f) {
  check_form(x.kind, f);
  Vector out;
  for (const auto &[k, c] : x.terms) {
    Scalar p;
    if (f.standard()) {
      Index a = partner(f.kind(), k.second);
      auto it = v.find(a);
      if (it != v.end())
        p = it->second * f(a, k.second);
    } else {
      for (const auto &[a, d] : v) {
        Scalar g = f(a, k.second);
        if (!g.is_zero())
          p += d * g;
      }
    }
    add_term(out, k.first, c * p);
  }
  return out;
}

Vector act(const LieElement &x, const Vector &v) { return act(x, v, Form(x.kind)); }

Scalar trace(const LieElement &x, const Form &f) {
  Scalar s;
  for (const auto &[k, c] : x.terms) {
    Scalar g = f(k.first, k.second);
    if (!g.is_zero())
      s += c * g;
  }
  return s;
}

bool in_algebra(const LieElement &x, const Form &f) {
  switch (x.kind) {
  case Kind::GL: return true;
  case Kind::SL: return trace(x, f).is_zero();
  case Kind::SO:
    for (const auto &[k, c] : x.terms)
      if (!(x.at(k.second, k.first) == -c))
        return false;
    return true;
  case Kind::SP:
    for (const auto &[k, c] : x.terms)
      if (!(x.at(k.second, k.first) == c))
        return false;
    return true;
  }
  return false;
}

std::vector<Index> support(const LieElement &x) {
  std::set<Index> s;
  for (const auto &[k, c] : x.terms) {
    s.insert(k.first);
    s.insert(k.second);
  }
  return {s.begin(), s.end()};
}

std::vector<Index> support(const Vector &v) {
  std::vector<Index> out;
  for (const auto &[i, c] : v)
    out.push_back(i);
  return out;
}

} // namespace cartan
