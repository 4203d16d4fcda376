#include "cartankit/sparse.hpp"

namespace cartan {

std::vector<SVec<int>> nullspace(const Echelon<int> &rref, int n) {
  std::vector<SVec<int>> out;
  const auto &rows = rref.rows();
  for (int f = 0; f < n; ++f) {
    if (rows.count(f))
      continue;
    SVec<int> x;
    x.emplace(f, Scalar(1));
    for (const auto &[p, row] : rows) {
      auto it = row.find(f);
      if (it != row.end())
        x.emplace(p, -it->second);
    }
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<SVec<int>> nullspace(const std::vector<SVec<int>> &rows, int n) {
  Echelon<int> e;
  for (const auto &r : rows) {
    e.insert(r);
    if (static_cast<int>(e.dim()) == n)
      break;
  }
  return nullspace(e, n);
}

} // namespace cartan
