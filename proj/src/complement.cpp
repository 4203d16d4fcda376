#include "cartankit/complement.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cartan {

namespace {

Covec zero_covec(int n) { return Covec(static_cast<size_t>(n)); }

Scalar dot(const Covec &a, const Covec &b) {
  Scalar s;
  for (size_t k = 0; k < a.size() && k < b.size(); ++k)
    s += a[k] * b[k];
  return s;
}

// row * m
Covec row_times(const Covec &row, const Matrix &m) {
  Covec out = zero_covec(m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int k = 0; k < m.rows(); ++k)
      out[static_cast<size_t>(j)] += row[static_cast<size_t>(k)] * m(k, j);
  return out;
}

std::string covec_str(const Covec &c) {
  std::string s = "(";
  for (size_t k = 0; k < c.size(); ++k)
    s += (k ? "," : "") + c[k].str();
  return s + ")";
}

Matrix outer(const Covec &a, const Covec &b) {
  Matrix m(static_cast<int>(a.size()), static_cast<int>(b.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      m(i, j) = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
  return m;
}

// Canonical basis of a span: nonzero rows of the rref.
std::vector<Covec> rref_rows(const std::vector<Covec> &vs, int n) {
  Matrix m(static_cast<int>(vs.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = vs[static_cast<size_t>(i)][static_cast<size_t>(j)];
  auto piv = m.rref_inplace();
  std::vector<Covec> out;
  for (size_t i = 0; i < piv.size(); ++i) {
    Covec r = zero_covec(n);
    for (int j = 0; j < n; ++j)
      r[static_cast<size_t>(j)] = m(static_cast<int>(i), j);
    out.push_back(r);
  }
  return out;
}

// Common kernel of the covectors, as a canonical basis.
std::vector<Covec> common_kernel(const std::vector<Covec> &rows, int n) {
  if (n == 0)
    return {};
  Matrix m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return rref_rows(m.kernel(), n);
}

Matrix rows_matrix(const std::vector<Covec> &rows, int n) {
  Matrix m(static_cast<int>(rows.size()), n);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < n; ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  return m;
}

std::vector<Covec> unit_basis(int n) {
  std::vector<Covec> out;
  for (int k = 0; k < n; ++k) {
    Covec e = zero_covec(n);
    e[static_cast<size_t>(k)] = Scalar(1);
    out.push_back(e);
  }
  return out;
}

void check_seq(const CovecSeq &s, int n, const char *what) {
  if (s.period.empty())
    throw std::invalid_argument(std::string(what) + ": empty period");
  for (const auto *part : {&s.prefix, &s.period})
    for (const auto &c : *part)
      if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument(std::string(what) + ": covector of wrong length");
}

// Contribution of index i to the correction term sum, as an X x Y matrix.
Matrix correction_term(const ComplementDatum &d, Index i) {
  if (!d.single_space())
    return outer(d.lambda(i), d.mu(i));
  Matrix a = outer(d.lambda(i), d.lambda(-i));
  Matrix b = outer(d.lambda(-i), d.lambda(i));
  return d.kind == Kind::SO ? a + b : a - b;
}

bool is_identity_map(const IndexMap &s) {
  for (size_t k = 0; k < s.head.size(); ++k)
    if (s.head[k] != static_cast<Index>(k + 1))
      return false;
  Index K = static_cast<Index>(s.head.size());
  Index P = s.period();
  for (Index r = 0; r < P; ++r) {
    const auto &c = s.classes[static_cast<size_t>(r)];
    if (c.base != K + 1 + r || c.step != P || c.sign != 1)
      return false;
  }
  return true;
}

bool all_ones(const ScalarSeq &a) {
  auto n = a.normalized();
  return n.prefix.empty() && n.period.size() == 1 && n.period[0].is_one();
}

} // namespace

// ---------------------------------------------------------------- datum

ComplementDatum ComplementDatum::zero(Kind k) {
  ComplementDatum d;
  d.kind = k;
  d.omega = Matrix(0, 0);
  d.lambdas = CovecSeq::constant({});
  if (is_orthosymplectic(k))
    d.lambdas_neg = CovecSeq::constant({});
  else
    d.mus = CovecSeq::constant({});
  return d;
}

const Covec &ComplementDatum::lambda(Index i) const {
  if (i == 0)
    throw std::out_of_range("functional index must be nonzero");
  if (i > 0)
    return lambdas.at(i);
  if (!single_space())
    throw std::out_of_range("negative functional index for gl/sl");
  return lambdas_neg.at(-i);
}

const Covec &ComplementDatum::mu(Index i) const {
  if (single_space())
    return lambda(i);
  return mus.at(i);
}

Index ComplementDatum::tail_start() const {
  Index s = lambdas.start();
  s = std::max(s, single_space() ? lambdas_neg.start() : mus.start());
  return s;
}

Index ComplementDatum::tail_period() const {
  Index p = lambdas.length();
  return lcm_index(p, single_space() ? lambdas_neg.length() : mus.length());
}

void ComplementDatum::check() const {
  if (x_dim < 0 || y_dim < 0)
    throw std::invalid_argument("negative dimension");
  int od = other_dim();
  if (omega.rows() != x_dim || omega.cols() != od)
    throw std::invalid_argument("omega has wrong shape");
  check_seq(lambdas, x_dim, "lambdas");
  if (single_space()) {
    check_seq(lambdas_neg, x_dim, "lambdas_neg");
    Matrix t = omega.transpose();
    if (kind == Kind::SO && !(t == omega))
      throw std::invalid_argument("omega must be symmetric for so");
    if (kind == Kind::SP && !(t + omega).is_zero())
      throw std::invalid_argument("omega must be antisymmetric for sp");
  } else {
    check_seq(mus, y_dim, "mus");
  }
}

ComplementDatum ComplementDatum::normalized() const {
  ComplementDatum d = *this;
  d.lambdas = lambdas.normalized();
  if (single_space()) {
    d.lambdas_neg = lambdas_neg.normalized();
    d.y_dim = 0;
  } else {
    d.mus = mus.normalized();
  }
  return d;
}

bool ComplementDatum::operator==(const ComplementDatum &o) const {
  auto a = normalized(), b = o.normalized();
  return a.kind == b.kind && a.x_dim == b.x_dim && a.y_dim == b.y_dim && a.omega == b.omega &&
         a.lambdas == b.lambdas && a.lambdas_neg == b.lambdas_neg && a.mus == b.mus;
}

// ---------------------------------------------------------------- X_0, omega tilde

std::vector<Covec> X0_basis(const ComplementDatum &d) {
  std::vector<Covec> rows = d.lambdas.period;
  if (d.single_space())
    rows.insert(rows.end(), d.lambdas_neg.period.begin(), d.lambdas_neg.period.end());
  return common_kernel(rows, d.x_dim);
}

std::vector<Covec> Y0_basis(const ComplementDatum &d) {
  if (d.single_space())
    return X0_basis(d);
  return common_kernel(d.mus.period, d.y_dim);
}

bool in_X0(const ComplementDatum &d, const Covec &x) {
  for (const auto &c : d.lambdas.period)
    if (!dot(c, x).is_zero())
      return false;
  if (d.single_space())
    for (const auto &c : d.lambdas_neg.period)
      if (!dot(c, x).is_zero())
        return false;
  return true;
}

bool in_Y0(const ComplementDatum &d, const Covec &y) {
  if (d.single_space())
    return in_X0(d, y);
  for (const auto &c : d.mus.period)
    if (!dot(c, y).is_zero())
      return false;
  return true;
}

Scalar omega_tilde(const ComplementDatum &d, const Covec &x, const Covec &y) {
  if (!in_X0(d, x) && !in_Y0(d, y))
    throw std::domain_error("divergent: neither argument almost-zero");
  Scalar s = dot(x, d.omega.apply(y));
  for (Index i = 1; i <= d.tail_start(); ++i) {
    if (d.single_space()) {
      Scalar a = dot(d.lambda(i), x) * dot(d.lambda(-i), y);
      Scalar b = dot(d.lambda(-i), x) * dot(d.lambda(i), y);
      s -= d.kind == Kind::SO ? a + b : a - b;
    } else {
      s -= dot(d.lambda(i), x) * dot(d.mu(i), y);
    }
  }
  return s;
}

Matrix omega_tilde_matrix(const ComplementDatum &d, const std::vector<Covec> &xs,
                          const std::vector<Covec> &ys) {
  Matrix m(static_cast<int>(xs.size()), static_cast<int>(ys.size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      m(i, j) = omega_tilde(d, xs[static_cast<size_t>(i)], ys[static_cast<size_t>(j)]);
  return m;
}

bool is_nondegenerate(const ComplementDatum &d) {
  auto x0 = X0_basis(d);
  if (omega_tilde_matrix(d, x0, unit_basis(d.other_dim())).rank() != static_cast<int>(x0.size()))
    return false;
  if (d.single_space())
    return true;
  auto y0 = Y0_basis(d);
  return omega_tilde_matrix(d, unit_basis(d.x_dim), y0).rank() == static_cast<int>(y0.size());
}

bool is_maximal(const ComplementDatum &d) {
  int r = omega_tilde_matrix(d, X0_basis(d), Y0_basis(d)).rank();
  return d.kind == Kind::SO ? r <= 1 : r == 0;
}

// ---------------------------------------------------------------- invariants

std::string StandardInvariants::str() const {
  std::string s = "(";
  for (size_t k = 0; k < entries.size(); ++k) {
    if (k)
      s += ",";
    s += entries[k] == aleph0 ? "aleph0" : std::to_string(entries[k]);
  }
  return s + ")";
}

StandardInvariants standard_invariants(const ComplementDatum &d) {
  auto x0 = X0_basis(d);
  auto y0 = Y0_basis(d);
  long rank = omega_tilde_matrix(d, x0, y0).rank();
  long p = static_cast<long>(x0.size());
  StandardInvariants inv;
  inv.kind = d.kind;
  if (d.single_space()) {
    inv.entries = {rank, p, d.x_dim - p};
  } else {
    long q = static_cast<long>(y0.size());
    inv.entries = {rank, p, q, d.x_dim - p, d.y_dim - q};
  }
  return inv;
}

StandardInvariants parse_invariants(Kind k, const std::string &s) {
  StandardInvariants inv;
  inv.kind = k;
  std::string cur;
  auto flush = [&] {
    if (cur.empty())
      throw std::invalid_argument("malformed invariant tuple: " + s);
    if (cur == "aleph0" || cur == "inf")
      inv.entries.push_back(StandardInvariants::aleph0);
    else {
      size_t used = 0;
      long v = std::stol(cur, &used);
      if (used != cur.size() || v < 0)
        throw std::invalid_argument("malformed invariant tuple: " + s);
      inv.entries.push_back(v);
    }
    cur.clear();
  };
  for (char ch : s) {
    if (ch == '(' || ch == ')' || ch == ' ')
      continue;
    if (ch == ',')
      flush();
    else
      cur += ch;
  }
  flush();
  size_t want = is_orthosymplectic(k) ? 3 : 5;
  if (inv.entries.size() != want)
    throw std::invalid_argument("expected " + std::to_string(want) + " invariants for " +
                                kind_name(k));
  return inv;
}

std::optional<std::string> realizability_violation(const StandardInvariants &inv) {
  size_t want = is_orthosymplectic(inv.kind) ? 3 : 5;
  if (inv.entries.size() != want)
    return "wrong number of entries";
  for (long e : inv.entries) {
    if (e == StandardInvariants::aleph0)
      return "infinite entries unsupported";
    if (e < 0)
      return "entries must be nonnegative";
  }
  long d = inv.entries[0], p = inv.entries[1];
  if (p - d < 0)
    return "0 <= p-d";
  if (is_orthosymplectic(inv.kind)) {
    long m = inv.entries[2];
    if (p - d > m)
      return "p-d <= m";
    if (inv.kind == Kind::SP && d % 2)
      return "d must be even";
    return std::nullopt;
  }
  long q = inv.entries[2], m = inv.entries[3], n = inv.entries[4];
  if (p - d > n)
    return "p-d <= n";
  if (q - d < 0)
    return "0 <= q-d";
  if (q - d > m)
    return "q-d <= m";
  return std::nullopt;
}

namespace {

// Basis {x_{-p},...,x_{-1}, x_1,...,x_m} in that order.
int neg_pos(int p, int j) { return p - j; } // x_{-j}
int pos_pos(int p, int k) { return p + k - 1; } // x_k

// lambda_i = x*_r with r = i mod m in 1..m
CovecSeq mod_functionals(int p, int m, bool negate_index) {
  int n = p + m;
  if (m == 0)
    return CovecSeq::constant(zero_covec(n));
  std::vector<Covec> per;
  for (int i = 1; i <= m; ++i) {
    int idx = negate_index ? -i : i;
    int r = ((idx % m) + m) % m;
    if (r == 0)
      r = m;
    Covec c = zero_covec(n);
    c[static_cast<size_t>(pos_pos(p, r))] = Scalar(1);
    per.push_back(c);
  }
  return CovecSeq({}, per);
}

} // namespace

ComplementDatum build_representative(const StandardInvariants &inv) {
  if (auto v = realizability_violation(inv))
    throw std::invalid_argument("unrealizable invariants: " + *v);
  ComplementDatum out;
  out.kind = inv.kind;
  int d = static_cast<int>(inv.entries[0]);
  int p = static_cast<int>(inv.entries[1]);
  if (is_orthosymplectic(inv.kind)) {
    int m = static_cast<int>(inv.entries[2]);
    out.x_dim = p + m;
    out.omega = Matrix(out.x_dim, out.x_dim);
    if (inv.kind == Kind::SO) {
      for (int j = 0; j < d; ++j)
        out.omega(j, j) = Scalar(1);
      for (int j = 1; j <= p - d; ++j) {
        out.omega(neg_pos(p, j), pos_pos(p, j)) = Scalar(1);
        out.omega(pos_pos(p, j), neg_pos(p, j)) = Scalar(1);
      }
    } else {
      for (int j = 0; j < d / 2; ++j) {
        out.omega(2 * j, 2 * j + 1) = Scalar(1);
        out.omega(2 * j + 1, 2 * j) = Scalar(-1);
      }
      for (int j = 1; j <= p - d; ++j) {
        out.omega(neg_pos(p, j), pos_pos(p, j)) = Scalar(1);
        out.omega(pos_pos(p, j), neg_pos(p, j)) = Scalar(-1);
      }
    }
    out.lambdas = mod_functionals(p, m, false);
    out.lambdas_neg = mod_functionals(p, m, true);
    return out;
  }
  int q = static_cast<int>(inv.entries[2]);
  int m = static_cast<int>(inv.entries[3]);
  int n = static_cast<int>(inv.entries[4]);
  out.x_dim = p + m;
  out.y_dim = q + n;
  out.omega = Matrix(out.x_dim, out.y_dim);
  for (int j = 0; j < d; ++j)
    out.omega(j, j) = Scalar(1); // x_{-p+j}, y_{-q+j}
  for (int j = 1; j <= p - d; ++j)
    out.omega(neg_pos(p, j), pos_pos(q, j)) = Scalar(1);
  for (int j = 1; j <= q - d; ++j)
    out.omega(pos_pos(p, j), neg_pos(q, j)) = Scalar(1);
  out.lambdas = mod_functionals(p, m, false);
  out.mus = mod_functionals(q, n, false);
  return out;
}

// ---------------------------------------------------------------- certificates

IndexMap IndexMap::identity() {
  IndexMap m;
  m.classes.push_back({1, 1, 1});
  return m;
}

Index IndexMap::operator()(Index i) const {
  if (i == 0)
    throw std::out_of_range("index map is defined on nonzero integers");
  if (i < 0)
    return -(*this)(-i);
  Index K = static_cast<Index>(head.size());
  if (i <= K)
    return head[static_cast<size_t>(i - 1)];
  if (classes.empty())
    throw std::logic_error("index map has no tail");
  Index off = i - K - 1;
  Index P = period();
  const auto &c = classes[static_cast<size_t>(off % P)];
  return c.sign * (c.base + (off / P) * c.step);
}

std::optional<std::string> IndexMap::bijectivity_error() const {
  if (classes.empty())
    return "empty tail";
  Index top = 0, L = 1;
  for (Index h : head) {
    if (h == 0)
      return "head maps to 0";
    top = std::max(top, h < 0 ? -h : h);
  }
  for (const auto &c : classes) {
    if (c.base < 1 || c.step < 1)
      return "tail progression must have positive base and step";
    if (c.sign != 1 && c.sign != -1)
      return "tail sign must be +-1";
    top = std::max(top, c.base);
    L = lcm_index(L, c.step);
    if (L > 1'000'000)
      return "tail steps too large to check";
  }
  Index B = top + L;
  std::vector<int> hits(static_cast<size_t>(B + 1), 0);
  for (Index h : head)
    ++hits[static_cast<size_t>(h < 0 ? -h : h)];
  for (const auto &c : classes)
    for (Index v = c.base; v <= B; v += c.step)
      ++hits[static_cast<size_t>(v)];
  for (Index v = 1; v <= B; ++v) {
    if (hits[static_cast<size_t>(v)] == 0)
      return "value " + std::to_string(v) + " is not hit";
    if (hits[static_cast<size_t>(v)] > 1)
      return "value " + std::to_string(v) + " is hit more than once";
  }
  return std::nullopt;
}

Certificate Certificate::identity(const ComplementDatum &d) {
  Certificate c;
  c.sigma = IndexMap::identity();
  c.pi_x = Matrix::identity(d.x_dim);
  c.pi_y = Matrix::identity(d.single_space() ? 0 : d.y_dim);
  c.alpha = ScalarSeq::constant(Scalar(1));
  return c;
}

namespace {

// alpha_i for i in Z\{0}
Scalar alpha_at(const ComplementDatum &d1, const Certificate &c, Index i) {
  if (i > 0)
    return c.alpha.at(i);
  Scalar a = c.alpha.at(-i).inv();
  if (d1.kind == Kind::SP && c.sigma(-i) < 0)
    a = -a;
  return a;
}

} // namespace

VerifyResult verify_certificate(const ComplementDatum &d1, const ComplementDatum &d2,
                                const Certificate &c) {
  auto fail = [](std::string clause, std::string w) {
    return VerifyResult{false, std::move(clause), std::move(w)};
  };
  bool ss = d1.single_space();
  if (d1.kind != d2.kind)
    return fail("structure", "kinds differ");
  if (d1.x_dim != d2.x_dim || d1.other_dim() != d2.other_dim())
    return fail("structure", "dimensions differ");
  if (c.pi_x.rows() != d2.x_dim || c.pi_x.cols() != d1.x_dim || c.pi_x.rank() != d1.x_dim)
    return fail("structure", "pi_X is not an isomorphism");
  if (!ss &&
      (c.pi_y.rows() != d2.y_dim || c.pi_y.cols() != d1.y_dim || c.pi_y.rank() != d1.y_dim))
    return fail("structure", "pi_Y is not an isomorphism");
  if (auto e = c.sigma.bijectivity_error())
    return fail("structure", "sigma: " + *e);
  if (!ss) {
    for (Index h : c.sigma.head)
      if (h < 0)
        return fail("structure", "sigma must be positive for gl/sl");
    for (const auto &cl : c.sigma.classes)
      if (cl.sign < 0)
        return fail("structure", "sigma must be positive for gl/sl");
  }
  if (c.alpha.period.empty())
    return fail("structure", "alpha has empty period");
  for (const auto *part : {&c.alpha.prefix, &c.alpha.period})
    for (const auto &a : *part)
      if (a.is_zero())
        return fail("structure", "alpha has a zero entry");

  Index K = static_cast<Index>(c.sigma.head.size());
  Index P = c.sigma.period();
  Index S0 = K + P * (d2.tail_start() + 1) + std::max(d1.tail_start(), c.alpha.start()) + 1;
  Index T = lcm_index(lcm_index(P * d2.tail_period(), d1.tail_period()), c.alpha.length());

  auto lam2 = [&](Index j) { return row_times(d2.lambda(j), c.pi_x); };
  auto mu2 = [&](Index j) {
    return ss ? row_times(d2.lambda(j), c.pi_x) : row_times(d2.mu(j), c.pi_y);
  };
  auto scale = [](Covec v, const Scalar &s) {
    for (auto &x : v)
      x *= s;
    return v;
  };

  for (Index i = S0 + 1; i <= S0 + T; ++i) {
    for (Index sgn_i : {Index(1), Index(-1)}) {
      if (sgn_i < 0 && !ss)
        continue;
      Index ii = sgn_i * i;
      Covec lhs = d1.lambda(ii);
      Covec rhs = scale(lam2(c.sigma(ii)), alpha_at(d1, c, ii));
      if (lhs != rhs)
        return fail("lambda", "i=" + std::to_string(ii) + ": " + covec_str(lhs) + " vs " +
                                  covec_str(rhs));
    }
    if (!ss) {
      Covec lhs = d1.mu(i);
      Covec rhs = scale(mu2(c.sigma(i)), c.alpha.at(i).inv());
      if (lhs != rhs)
        return fail("mu", "i=" + std::to_string(i) + ": " + covec_str(lhs) + " vs " +
                              covec_str(rhs));
    }
  }

  // omega - pi^* omega' - sum_i (term_i - pulled back term'_{sigma(i)}) must vanish
  auto pulled_term = [&](Index i) {
    if (!ss)
      return outer(lam2(c.sigma(i)), mu2(c.sigma(i)));
    Index j = c.sigma(i);
    if (j < 0)
      j = -j;
    Matrix a = outer(lam2(j), lam2(-j));
    Matrix b = outer(lam2(-j), lam2(j));
    return d1.kind == Kind::SO ? a + b : a - b;
  };
  const Matrix &pi_other = ss ? c.pi_x : c.pi_y;
  Matrix total = d1.omega - c.pi_x.transpose() * d2.omega * pi_other;
  for (Index i = 1; i <= S0 + T; ++i) {
    Matrix t = correction_term(d1, i) - pulled_term(i);
    if (i > S0 && !t.is_zero())
      return fail("omega", "correction term at i=" + std::to_string(i) + " does not vanish");
    total = total - t;
  }
  if (!total.is_zero())
    return fail("omega", "omega~ - pi^*omega~' = " + total.str());
  return {};
}

// ---------------------------------------------------------------- multisets

std::vector<Scalar> ValueMultiset::infinite_values() const {
  std::vector<Scalar> out;
  for (const auto &[v, m] : mult)
    if (m == infinite)
      out.push_back(v);
  return out;
}

std::string ValueMultiset::str() const {
  std::string s = "{";
  bool first = true;
  for (const auto &[v, m] : mult) {
    s += (first ? "" : ", ") + v.str() + ":" + (m == infinite ? "inf" : std::to_string(m));
    first = false;
  }
  return s + "}";
}

ValueMultiset value_multiset(const ScalarSeq &s) {
  ValueMultiset out;
  for (const auto &v : s.period)
    out.mult[v] = ValueMultiset::infinite;
  for (const auto &v : s.prefix) {
    auto it = out.mult.find(v);
    if (it == out.mult.end())
      out.mult[v] = 1;
    else if (it->second != ValueMultiset::infinite)
      ++it->second;
  }
  return out;
}

bool almost_equal_scalars(const ScalarSeq &a, const ScalarSeq &b) { return almost_equal(a, b); }

bool almost_zero(const ScalarSeq &s) {
  return std::all_of(s.period.begin(), s.period.end(), [](const Scalar &v) { return v.is_zero(); });
}

std::optional<Scalar> almost_proportional(const ScalarSeq &a, const ScalarSeq &b) {
  auto A = value_multiset(a).infinite_values();
  auto B = value_multiset(b).infinite_values();
  std::set<Scalar> target(B.begin(), B.end());
  if (A.size() != B.size())
    return std::nullopt;
  std::set<Scalar> candidates;
  for (const auto &v : A)
    for (const auto &w : B)
      if (!v.is_zero() && !w.is_zero())
        candidates.insert(w / v);
  if (candidates.empty())
    candidates.insert(Scalar(1));
  for (const auto &c : candidates) {
    std::set<Scalar> img;
    for (const auto &v : A)
      img.insert(c * v);
    if (img == target)
      return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- special family

ComplementDatum family_datum(const ScalarSeq &a, const ScalarSeq &b) {
  ComplementDatum d;
  d.kind = Kind::GL;
  d.x_dim = 2;
  d.y_dim = 2;
  d.omega = Matrix::identity(2);
  d.lambdas = a.map([](const Scalar &v) { return Covec{Scalar(), v}; });
  d.mus = b.map([](const Scalar &v) { return Covec{v, Scalar()}; });
  return d;
}

std::string BinaryInvariants::str() const {
  auto yn = [](bool v) { return v ? "yes" : "no"; };
  return std::string("a=0,b!=0: ") + yn(a_zero_b_nonzero) + "; a!=0,b=0: " + yn(a_nonzero_b_zero) +
         "; a=b=0: " + yn(both_zero);
}

namespace {

// Merged periodic block of two sequences: entries at N+1..N+P.
struct MergedBlock {
  Index start = 0, period = 1;
};
MergedBlock merged(const ScalarSeq &a, const ScalarSeq &b) {
  return {std::max(a.start(), b.start()), lcm_index(a.length(), b.length())};
}

int pair_type(const Scalar &a, const Scalar &b) {
  return (a.is_zero() ? 2 : 0) + (b.is_zero() ? 1 : 0);
}

} // namespace

BinaryInvariants binary_invariants(const ScalarSeq &a, const ScalarSeq &b) {
  BinaryInvariants out;
  auto m = merged(a, b);
  for (Index i = m.start + 1; i <= m.start + m.period; ++i) {
    switch (pair_type(a.at(i), b.at(i))) {
    case 2: out.a_zero_b_nonzero = true; break;
    case 1: out.a_nonzero_b_zero = true; break;
    case 3: out.both_zero = true; break;
    default: break;
    }
  }
  return out;
}

ScalarSeq product_sequence(const ScalarSeq &a, const ScalarSeq &b) {
  auto m = merged(a, b);
  return sample_sequence<Scalar>(m.start, m.period, [&](Index i) { return a.at(i) * b.at(i); });
}

SpecialDecision decide_equiv_special(const ScalarSeq &a, const ScalarSeq &b, const ScalarSeq &a2,
                                     const ScalarSeq &b2) {
  for (const auto *s : {&a, &b, &a2, &b2})
    if (almost_zero(*s))
      throw std::invalid_argument("not in family");
  SpecialDecision out;
  if (a.normalized() == a2.normalized() && b.normalized() == b2.normalized()) {
    out.equivalent = true;
    out.c = Scalar(1);
    out.certificate = Certificate::identity(family_datum(a, b));
    return out;
  }
  auto bi = binary_invariants(a, b), bi2 = binary_invariants(a2, b2);
  if (!(bi == bi2)) {
    out.witness = "binary invariants differ: [" + bi.str() + "] vs [" + bi2.str() + "]";
    return out;
  }
  ScalarSeq prod = product_sequence(a, b), prod2 = product_sequence(a2, b2);
  // prefer c = 1 when it works so that equal value sets keep values fixed
  std::optional<Scalar> cap;
  {
    auto A = value_multiset(prod).infinite_values(), B = value_multiset(prod2).infinite_values();
    if (A == B)
      cap = Scalar(1);
    else
      cap = almost_proportional(prod, prod2);
  }
  if (!cap) {
    out.witness = "value multisets of a_i*b_i are not proportional: " +
                  value_multiset(prod).str() + " vs " + value_multiset(prod2).str();
    return out;
  }
  Scalar c = cap->inv(); // a_i b_i ~ c a'_s b'_s

  auto m1 = merged(a, b), m2 = merged(a2, b2);
  Index N0 = std::max(m1.start, m2.start);
  Index P = m1.period, P2 = m2.period;
  using KeyT = std::pair<int, Scalar>;
  auto key1 = [&](Index i) { return KeyT{pair_type(a.at(i), b.at(i)), a.at(i) * b.at(i)}; };
  auto key2 = [&](Index j) {
    return KeyT{pair_type(a2.at(j), b2.at(j)), c * a2.at(j) * b2.at(j)};
  };
  std::map<KeyT, Index> u1, u2;
  for (Index s = 0; s < P; ++s)
    ++u1[key1(N0 + 1 + s)];
  for (Index s = 0; s < P2; ++s)
    ++u2[key2(N0 + 1 + s)];
  Index U = 1;
  for (const auto &[k, n] : u2)
    U = lcm_index(U, n);
  for (const auto &[k, n] : u1)
    if (!u2.count(k))
      throw std::logic_error("key without partner in special-family matching");

  // codomain sub-progressions per key, sorted by base
  Index Pdom = P * U;
  std::map<KeyT, std::vector<IndexClass>> targets;
  for (Index s = 0; s < P2; ++s) {
    KeyT k = key2(N0 + 1 + s);
    Index w = u1[k] * U / u2[k];
    for (Index t = 0; t < w; ++t)
      targets[k].push_back({N0 + 1 + s + t * P2, w * P2, 1});
  }
  for (auto &[k, v] : targets)
    std::sort(v.begin(), v.end(), [](const IndexClass &x, const IndexClass &y) {
      return x.base < y.base;
    });
  std::map<KeyT, size_t> used;
  Certificate cert;
  for (Index i = 1; i <= N0; ++i)
    cert.sigma.head.push_back(i);
  std::vector<Scalar> alpha_prefix(static_cast<size_t>(N0), Scalar(1)), alpha_period;
  for (Index r = 0; r < Pdom; ++r) {
    Index i = N0 + 1 + r;
    KeyT k = key1(i);
    const IndexClass &cl = targets[k].at(used[k]++);
    cert.sigma.classes.push_back(cl);
    Index j = cl.base;
    Scalar al(1);
    switch (k.first) {
    case 0:
    case 1: al = a.at(i) / (c * a2.at(j)); break;
    case 2: al = b2.at(j) / b.at(i); break;
    default: break;
    }
    alpha_period.push_back(al);
  }
  cert.alpha = ScalarSeq(alpha_prefix, alpha_period).normalized();
  Scalar gamma;
  for (Index i = 1; i <= N0; ++i)
    gamma += c * a2.at(i) * b2.at(i) - a.at(i) * b.at(i);
  gamma = gamma / c;
  cert.pi_x = Matrix::identity(2);
  cert.pi_x(1, 1) = c;
  cert.pi_y = Matrix::identity(2);
  cert.pi_y(1, 0) = gamma;
  cert.pi_y(1, 1) = c.inv();

  auto vr = verify_certificate(family_datum(a, b), family_datum(a2, b2), cert);
  if (!vr.ok)
    throw std::logic_error("constructed certificate failed (" + vr.clause + "): " + vr.witness);
  out.equivalent = true;
  out.c = c;
  out.certificate = cert;
  return out;
}

std::optional<FamilyForm> family_form(const ComplementDatum &d) {
  if (d.single_space())
    return std::nullopt;
  auto inv = standard_invariants(d);
  if (inv.entries != std::vector<long>{0, 1, 1, 1, 1})
    return std::nullopt;
  Covec x0 = X0_basis(d).at(0), y0 = Y0_basis(d).at(0);
  for (const auto *part : {&d.lambdas.prefix, &d.lambdas.period})
    for (const auto &l : *part)
      if (!dot(l, x0).is_zero())
        return std::nullopt;
  for (const auto *part : {&d.mus.prefix, &d.mus.period})
    for (const auto &m : *part)
      if (!dot(m, y0).is_zero())
        return std::nullopt;
  auto om = [&](const Covec &x, const Covec &y) { return dot(x, d.omega.apply(y)); };
  std::optional<Covec> x, y;
  for (const auto &e : unit_basis(2)) {
    if (!x && !om(e, y0).is_zero()) {
      Scalar s = om(e, y0).inv();
      x = Covec{e[0] * s, e[1] * s};
    }
    if (!y && !om(x0, e).is_zero()) {
      Scalar s = om(x0, e).inv();
      y = Covec{e[0] * s, e[1] * s};
    }
  }
  if (!x || !y)
    return std::nullopt;
  Scalar beta = -om(*x, *y);
  for (size_t k = 0; k < 2; ++k)
    (*x)[k] += beta * x0[k];

  FamilyForm out;
  out.a = d.lambdas.map([&](const Covec &l) { return dot(l, *x); }).normalized();
  out.b = d.mus.map([&](const Covec &m) { return dot(m, *y); }).normalized();
  Matrix bx(2, 2), by(2, 2);
  for (int k = 0; k < 2; ++k) {
    bx(k, 0) = x0[static_cast<size_t>(k)];
    bx(k, 1) = (*x)[static_cast<size_t>(k)];
    by(k, 0) = (*y)[static_cast<size_t>(k)];
    by(k, 1) = y0[static_cast<size_t>(k)];
  }
  out.to_family.sigma = IndexMap::identity();
  out.to_family.alpha = ScalarSeq::constant(Scalar(1));
  out.to_family.pi_x = bx.inverse();
  out.to_family.pi_y = by.inverse();
  return out;
}

Certificate compose(const Certificate &first, const Certificate &second) {
  Certificate out;
  if (is_identity_map(first.sigma) && all_ones(first.alpha)) {
    out.sigma = second.sigma;
    out.alpha = second.alpha;
  } else if (is_identity_map(second.sigma) && all_ones(second.alpha)) {
    out.sigma = first.sigma;
    out.alpha = first.alpha;
  } else {
    throw std::invalid_argument("compose needs one certificate with trivial index map");
  }
  out.pi_x = second.pi_x * first.pi_x;
  out.pi_y = second.pi_y * first.pi_y;
  return out;
}

Certificate invert_trivial(const Certificate &c) {
  if (!is_identity_map(c.sigma) || !all_ones(c.alpha))
    throw std::invalid_argument("only certificates with trivial index map can be inverted");
  Certificate out = c;
  out.pi_x = c.pi_x.inverse();
  if (c.pi_y.rows() > 0)
    out.pi_y = c.pi_y.inverse();
  return out;
}

// ---------------------------------------------------------------- D_z

ComplementDatum build_Dz(const Scalar &z, DzShape shape) {
  if (z.is_zero() || z.is_one())
    throw std::invalid_argument("z must not be 0 or 1");
  if (shape.x0_dim < 0 || shape.x0_dim > 1 || shape.y0_dim < 0 || shape.y0_dim > 1 ||
      shape.x_dim != shape.x0_dim + 1 || shape.y_dim != shape.y0_dim + 1)
    throw std::invalid_argument(
        "D_z shape needs dim X/X_0 = dim Y/Y_0 = 1 and dim X_0, dim Y_0 <= 1");
  ComplementDatum d;
  d.kind = Kind::GL;
  d.x_dim = shape.x_dim;
  d.y_dim = shape.y_dim;
  d.omega = Matrix(d.x_dim, d.y_dim);
  // X = [x0?, x], Y = [y, y0?]
  int xi = shape.x0_dim, yi = 0;
  if (shape.x0_dim)
    d.omega(0, yi) = Scalar(1);
  if (shape.y0_dim)
    d.omega(xi, 1) = Scalar(1);
  Covec lam = zero_covec(d.x_dim);
  lam[static_cast<size_t>(xi)] = Scalar(1);
  d.lambdas = CovecSeq::constant(lam);
  Covec m1 = zero_covec(d.y_dim), mz = zero_covec(d.y_dim);
  m1[0] = Scalar(1);
  mz[0] = z;
  d.mus = CovecSeq({}, {m1, mz});
  return d;
}

Certificate dz_inverse_certificate(const Scalar &z) {
  Certificate c;
  c.sigma.classes = {{2, 2, 1}, {1, 2, 1}};
  c.alpha = ScalarSeq::constant(Scalar(1));
  c.pi_x = Matrix::identity(2);
  c.pi_x(0, 0) = z.inv();
  c.pi_y = Matrix::identity(2);
  c.pi_y(0, 0) = z;
  return c;
}

ScalarSeq dz_product_sequence(const ComplementDatum &d) {
  if (d.single_space())
    throw std::invalid_argument("product sequence needs a gl/sl datum");
  auto pick = [](const std::vector<Covec> &sub, int n) -> Covec {
    Matrix m = rows_matrix(sub, n);
    for (const auto &e : unit_basis(n)) {
      auto rows = sub;
      rows.push_back(e);
      if (rows_matrix(rows, n).rank() > m.rank())
        return e;
    }
    throw std::invalid_argument("X_0 is all of X");
  };
  Covec x = pick(X0_basis(d), d.x_dim), y = pick(Y0_basis(d), d.y_dim);
  return sample_sequence<Scalar>(d.tail_start(), d.tail_period(), [&](Index i) {
    return dot(d.lambda(i), x) * dot(d.mu(i), y);
  });
}

} // namespace cartan
