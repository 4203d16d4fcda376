#pragma once

#include "cartankit/tensor.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace cartan {

// Eventually periodic sequence indexed from 1: entry(i) = prefix[i-1] for
// i <= |prefix|, then the period repeats.
template <class T> struct EPSeq {
  std::vector<T> prefix;
  std::vector<T> period;

  EPSeq() = default;
  EPSeq(std::vector<T> pre, std::vector<T> per) : prefix(std::move(pre)), period(std::move(per)) {
    if (period.empty())
      throw std::invalid_argument("eventually periodic sequence needs a nonempty period");
  }
  static EPSeq constant(T v) { return EPSeq({}, {std::move(v)}); }

  const T &at(Index i) const {
    if (i < 1)
      throw std::out_of_range("sequence index must be positive");
    size_t k = static_cast<size_t>(i);
    if (k <= prefix.size())
      return prefix[k - 1];
    return period[(k - prefix.size() - 1) % period.size()];
  }
  Index start() const { return static_cast<Index>(prefix.size()); }
  Index length() const { return static_cast<Index>(period.size()); }

  // Shortest period, then shortest prefix.
  EPSeq normalized() const {
    EPSeq out = *this;
    size_t n = period.size();
    for (size_t d = 1; d <= n; ++d) {
      if (n % d)
        continue;
      bool ok = true;
      for (size_t k = d; k < n && ok; ++k)
        ok = period[k] == period[k % d];
      if (ok) {
        out.period.assign(period.begin(), period.begin() + static_cast<long>(d));
        break;
      }
    }
    while (!out.prefix.empty() && out.prefix.back() == out.period.back()) {
      T last = out.period.back();
      out.period.pop_back();
      out.period.insert(out.period.begin(), last);
      out.prefix.pop_back();
    }
    return out;
  }

  template <class F> auto map(F f) const -> EPSeq<decltype(f(std::declval<T>()))> {
    EPSeq<decltype(f(std::declval<T>()))> out;
    for (const auto &x : prefix)
      out.prefix.push_back(f(x));
    for (const auto &x : period)
      out.period.push_back(f(x));
    return out;
  }

  bool operator==(const EPSeq &o) const = default;
};

inline Index lcm_index(Index a, Index b) { return std::lcm(a, b); }

template <class T> bool almost_equal(const EPSeq<T> &a, const EPSeq<T> &b) {
  Index s = std::max(a.start(), b.start());
  Index l = lcm_index(a.length(), b.length());
  for (Index i = s + 1; i <= s + l; ++i)
    if (!(a.at(i) == b.at(i)))
      return false;
  return true;
}

// Sequence built from f(i) on 1..start+length, given known eventual period.
template <class T, class F> EPSeq<T> sample_sequence(Index start, Index length, F f) {
  EPSeq<T> out;
  for (Index i = 1; i <= start; ++i)
    out.prefix.push_back(f(i));
  for (Index i = start + 1; i <= start + length; ++i)
    out.period.push_back(f(i));
  return out.normalized();
}

} // namespace cartan
