#pragma once

#include "cartankit/scalar.hpp"

#include <map>
#include <vector>

namespace cartan {

// Sparse vector over an ordered key; zero entries are never stored.
template <class K> using SVec = std::map<K, Scalar>;

template <class K> void axpy(SVec<K> &dst, const Scalar &c, const SVec<K> &src) {
  if (c.is_zero())
    return;
  for (const auto &[k, v] : src) {
    auto it = dst.find(k);
    if (it == dst.end()) {
      dst.emplace(k, c * v);
    } else {
      it->second += c * v;
      if (it->second.is_zero())
        dst.erase(it);
    }
  }
}

template <class K> void add_term(SVec<K> &dst, const K &k, const Scalar &c) {
  if (c.is_zero())
    return;
  auto it = dst.find(k);
  if (it == dst.end()) {
    dst.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero())
      dst.erase(it);
  }
}

template <class K> SVec<K> scaled(const SVec<K> &v, const Scalar &c) {
  SVec<K> out;
  if (c.is_zero())
    return out;
  for (const auto &[k, x] : v)
    out.emplace(k, x * c);
  return out;
}

template <class K> SVec<K> operator+(SVec<K> a, const SVec<K> &b) {
  axpy(a, Scalar(1), b);
  return a;
}

template <class K> SVec<K> operator-(SVec<K> a, const SVec<K> &b) {
  axpy(a, Scalar(-1), b);
  return a;
}

template <class K> SVec<K> operator*(const Scalar &c, const SVec<K> &v) { return scaled(v, c); }

template <class K> Scalar coeff(const SVec<K> &v, const K &k) {
  auto it = v.find(k);
  return it == v.end() ? Scalar() : it->second;
}

// Reduced row echelon form: each row has pivot = first key, pivot coefficient 1,
// and no other row has a nonzero entry in a pivot column.
template <class K> class Echelon {
public:
  SVec<K> reduce(SVec<K> v) const {
    std::vector<std::pair<K, Scalar>> hits;
    for (const auto &[k, x] : v)
      if (rows_.count(k))
        hits.emplace_back(k, x);
    for (const auto &[k, x] : hits)
      axpy(v, -x, rows_.at(k));
    return v;
  }

  bool contains(const SVec<K> &v) const { return reduce(v).empty(); }

  // Returns true if v enlarged the span.
  bool insert(const SVec<K> &v) {
    SVec<K> r = reduce(v);
    if (r.empty())
      return false;
    K p = r.begin()->first;
    Scalar inv = r.begin()->second.inv();
    if (!inv.is_one())
      for (auto &[k, x] : r)
        x *= inv;
    for (auto &[q, row] : rows_) {
      auto it = row.find(p);
      if (it != row.end()) {
        Scalar c = it->second;
        axpy(row, -c, r);
      }
    }
    rows_.emplace(p, std::move(r));
    return true;
  }

  size_t dim() const { return rows_.size(); }
  const std::map<K, SVec<K>> &rows() const { return rows_; }
  std::vector<SVec<K>> basis() const {
    std::vector<SVec<K>> out;
    for (const auto &[p, r] : rows_)
      out.push_back(r);
    return out;
  }
  bool operator==(const Echelon &o) const { return rows_ == o.rows_; }

private:
  std::map<K, SVec<K>> rows_;
};

// Basis of {x in Q(i)^n : row . x = 0 for all rows}; unknowns are 0..n-1.
std::vector<SVec<int>> nullspace(const std::vector<SVec<int>> &rows, int n);
std::vector<SVec<int>> nullspace(const Echelon<int> &rref, int n);

} // namespace cartan
