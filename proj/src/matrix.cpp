#include "cartankit/matrix.hpp"
#include "cartankit/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace cartan {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::operator*(const Matrix &o) const {
  if (c_ != o.r_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix out(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Scalar &x = (*this)(i, k);
      if (x.is_zero())
        continue;
      for (int j = 0; j < o.c_; ++j) {
        const Scalar &y = o(k, j);
        if (!y.is_zero())
          out(i, j) += x * y;
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix &o) const {
  if (r_ != o.r_ || c_ != o.c_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (size_t k = 0; k < a_.size(); ++k)
    out.a_[k] += o.a_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix &o) const {
  if (r_ != o.r_ || c_ != o.c_)
    throw std::invalid_argument("matrix shape mismatch");
  Matrix out = *this;
  for (size_t k = 0; k < a_.size(); ++k)
    out.a_[k] -= o.a_[k];
  return out;
}

Matrix Matrix::scaled(const Scalar &s) const {
  Matrix out = *this;
  for (auto &x : out.a_)
    x *= s;
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      out(j, i) = (*this)(i, j);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar &x) { return x.is_zero(); });
}

std::vector<int> Matrix::rref_inplace() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < c_ && row < r_; ++col) {
    int sel = -1;
    for (int i = row; i < r_; ++i)
      if (!(*this)(i, col).is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0)
      continue;
    if (sel != row)
      for (int j = 0; j < c_; ++j)
        std::swap((*this)(sel, j), (*this)(row, j));
    Scalar inv = (*this)(row, col).inv();
    for (int j = col; j < c_; ++j)
      (*this)(row, j) *= inv;
    for (int i = 0; i < r_; ++i) {
      if (i == row)
        continue;
      Scalar f = (*this)(i, col);
      if (f.is_zero())
        continue;
      for (int j = col; j < c_; ++j)
        if (!(*this)(row, j).is_zero())
          (*this)(i, j) -= f * (*this)(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(m.rref_inplace().size());
}

Matrix Matrix::inverse() const {
  if (r_ != c_)
    throw std::invalid_argument("inverse of non-square matrix");
  int n = r_;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      aug(i, j) = (*this)(i, j);
    aug(i, n + i) = Scalar(1);
  }
  auto piv = aug.rref_inplace();
  if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1)
    throw std::domain_error("singular matrix");
  Matrix out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out(i, j) = aug(i, n + j);
  return out;
}

std::vector<std::vector<Scalar>> Matrix::kernel() const {
  Matrix m = *this;
  auto piv = m.rref_inplace();
  std::vector<bool> is_piv(c_, false);
  for (int p : piv)
    is_piv[p] = true;
  std::vector<std::vector<Scalar>> out;
  for (int f = 0; f < c_; ++f) {
    if (is_piv[f])
      continue;
    std::vector<Scalar> v(c_);
    v[f] = Scalar(1);
    for (size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -m(static_cast<int>(r), f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar> &v) const {
  std::vector<Scalar> out(r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (!(*this)(i, j).is_zero() && !v[j].is_zero())
        out[i] += (*this)(i, j) * v[j];
  return out;
}

Scalar Matrix::trace() const {
  Scalar s;
  for (int i = 0; i < std::min(r_, c_); ++i)
    s += (*this)(i, i);
  return s;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < r_; ++i) {
    os << "[";
    for (int j = 0; j < c_; ++j)
      os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

Matrix commutator(const Matrix &a, const Matrix &b) { return a * b - b * a; }

// ---- Poly ----

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

Poly Poly::monomial(int deg, const Scalar &c) {
  std::vector<Scalar> v(deg + 1);
  v[deg] = c;
  return Poly(std::move(v));
}

Poly Poly::linear_root(const Scalar &r) { return Poly({-r, Scalar(1)}); }

Poly Poly::operator+(const Poly &o) const {
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < v.size(); ++k)
    v[k] = coeff(static_cast<int>(k)) + o.coeff(static_cast<int>(k));
  return Poly(std::move(v));
}

Poly Poly::operator-(const Poly &o) const {
  std::vector<Scalar> v(std::max(c_.size(), o.c_.size()));
  for (size_t k = 0; k < v.size(); ++k)
    v[k] = coeff(static_cast<int>(k)) - o.coeff(static_cast<int>(k));
  return Poly(std::move(v));
}

Poly Poly::operator*(const Poly &o) const {
  if (is_zero() || o.is_zero())
    return Poly();
  std::vector<Scalar> v(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      v[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(v));
}

Poly Poly::monic() const {
  if (is_zero())
    return *this;
  Scalar inv = lead().inv();
  std::vector<Scalar> v = c_;
  for (auto &x : v)
    x *= inv;
  return Poly(std::move(v));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1)
    return Poly();
  std::vector<Scalar> v(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k)
    v[k - 1] = c_[k] * Scalar(static_cast<long>(k));
  return Poly(std::move(v));
}

std::pair<Poly, Poly> Poly::divmod(const Poly &d) const {
  if (d.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> r = c_;
  int dd = d.degree();
  if (degree() < dd)
    return {Poly(), *this};
  std::vector<Scalar> q(degree() - dd + 1);
  Scalar linv = d.lead().inv();
  for (int k = degree(); k >= dd; --k) {
    Scalar f = r[k] * linv;
    q[k - dd] = f;
    if (f.is_zero())
      continue;
    for (int j = 0; j <= dd; ++j)
      r[k - dd + j] -= f * d.c_[j];
  }
  r.resize(dd);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Scalar Poly::eval(const Scalar &x) const {
  Scalar s;
  for (size_t k = c_.size(); k-- > 0;)
    s = s * x + c_[k];
  return s;
}

Matrix Poly::eval(const Matrix &m) const {
  int n = m.rows();
  Matrix s(n, n);
  for (size_t k = c_.size(); k-- > 0;) {
    s = s * m;
    for (int i = 0; i < n; ++i)
      s(i, i) += c_[k];
  }
  return s;
}

std::string Poly::str() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Scalar &c = c_[k];
    if (c.is_zero())
      continue;
    bool neg = c.is_real() && sgn(c.re()) < 0;
    Scalar mag = neg ? -c : c;
    if (!first)
      os << (neg ? " - " : " + ");
    else if (neg)
      os << "-";
    first = false;
    bool unit = mag.is_one();
    if (!unit || k == 0)
      os << (mag.is_real() ? mag.str() : "(" + mag.str() + ")");
    if (k >= 1)
      os << "t";
    if (k >= 2)
      os << "^" << k;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly squarefree_part(const Poly &p) {
  if (p.degree() <= 0)
    return p.monic();
  Poly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

bool is_squarefree(const Poly &p) { return gcd(p, p.derivative()).degree() <= 0; }

Poly minimal_polynomial(const Matrix &m) {
  int n = m.rows();
  if (n != m.cols())
    throw std::invalid_argument("minimal polynomial of non-square matrix");
  if (n == 0)
    return Poly({Scalar(1)});
  // Power k is stored as its n*n entries followed by a tag column n*n + k;
  // the first power that reduces to a pure tag combination gives the relation.
  const int N = n * n;
  Echelon<int> e;
  Matrix pw = Matrix::identity(n);
  for (int k = 0; k <= n; ++k) {
    SVec<int> v;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!pw(i, j).is_zero())
          v.emplace(i * n + j, pw(i, j));
    v.emplace(N + k, Scalar(1));
    SVec<int> r = e.reduce(v);
    if (r.begin()->first >= N) {
      std::vector<Scalar> c(k + 1);
      for (const auto &[key, x] : r)
        c[key - N] = x;
      return Poly(std::move(c)).monic();
    }
    e.insert(v);
    pw = pw * m;
  }
  throw std::logic_error("minimal polynomial search exceeded degree bound");
}

namespace {

using cd = std::complex<long double>;

std::vector<cd> approximate_roots(const Poly &p) {
  int n = p.degree();
  std::vector<cd> a(n + 1);
  Poly q = p.monic();
  for (int k = 0; k <= n; ++k)
    a[k] = cd(q.coeff(k).re().get_d(), q.coeff(k).im().get_d());
  auto eval = [&](cd x) {
    cd s = 0;
    for (int k = n; k >= 0; --k)
      s = s * x + a[k];
    return s;
  };
  std::vector<cd> z(n);
  cd seed(0.4L, 0.9L);
  for (int k = 0; k < n; ++k)
    z[k] = std::pow(seed, k);
  for (int it = 0; it < 2000; ++it) {
    long double delta = 0;
    for (int k = 0; k < n; ++k) {
      cd den = 1;
      for (int j = 0; j < n; ++j)
        if (j != k)
          den *= (z[k] - z[j]);
      if (std::abs(den) == 0)
        den = cd(1e-18L, 0);
      cd step = eval(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-30L)
      break;
  }
  return z;
}

// Best rational approximation with bounded denominator (continued fractions).
mpq_class rationalize(long double x, long maxden) {
  long double v = x;
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 64; ++it) {
    long double fl = std::floor(v);
    if (std::fabs(fl) > 1e15L)
      break;
    long a = static_cast<long>(fl);
    long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > maxden)
      break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    long double frac = v - fl;
    if (frac < 1e-12L)
      break;
    v = 1.0L / frac;
  }
  mpq_class q(h1, k1 == 0 ? 1 : k1);
  q.canonicalize();
  return q;
}

} // namespace

RootSplit gaussian_rational_roots(const Poly &p) {
  RootSplit out;
  Poly rest = p.monic();
  if (rest.degree() <= 0) {
    out.rest = rest;
    return out;
  }
  for (const cd &z : approximate_roots(rest)) {
    Scalar cand(rationalize(z.real(), 1000000), rationalize(z.imag(), 1000000));
    if (rest.degree() >= 1 && rest.eval(cand).is_zero()) {
      out.roots.push_back(cand);
      rest = rest.divmod(Poly::linear_root(cand)).first;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.rest = rest.monic();
  return out;
}

} // namespace cartan
