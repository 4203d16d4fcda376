#include "cartankit/complement.hpp"

#include <doctest.h>

#include <functional>
#include <random>
#include <set>

using namespace cartan;

namespace {

Covec cv(std::initializer_list<long> xs) {
  Covec out;
  for (long x : xs)
    out.push_back(Scalar(x));
  return out;
}

ScalarSeq seq(std::initializer_list<long> pre, std::initializer_list<long> per) {
  std::vector<Scalar> a, b;
  for (long x : pre)
    a.push_back(Scalar(x));
  for (long x : per)
    b.push_back(Scalar(x));
  return ScalarSeq(a, b);
}

Scalar dotp(const Covec &a, const Covec &b) {
  Scalar s;
  for (size_t k = 0; k < a.size(); ++k)
    s += a[k] * b[k];
  return s;
}

// Invariants by brute force: sample the functionals on a long range, take X_0
// as the common kernel of the samples past a cutoff, and evaluate the
// corrected pairing as a truncated sum.
std::vector<long> brute_invariants(const ComplementDatum &d) {
  const Index cutoff = 40, top = 120;
  auto kernel_of = [&](auto fn, int n) {
    Matrix m(static_cast<int>(top - cutoff) * (d.single_space() ? 2 : 1), n);
    int row = 0;
    for (Index i = cutoff + 1; i <= top; ++i)
      for (const Covec &c : fn(i)) {
        for (int j = 0; j < n; ++j)
          m(row, j) = c[static_cast<size_t>(j)];
        ++row;
      }
    return m.kernel();
  };
  auto x0 = kernel_of(
      [&](Index i) {
        std::vector<Covec> out{d.lambda(i)};
        if (d.single_space())
          out.push_back(d.lambda(-i));
        return out;
      },
      d.x_dim);
  auto y0 = d.single_space() ? x0
                             : kernel_of([&](Index i) { return std::vector<Covec>{d.mu(i)}; },
                                         d.y_dim);
  Matrix w(static_cast<int>(x0.size()), static_cast<int>(y0.size()));
  for (int a = 0; a < w.rows(); ++a)
    for (int b = 0; b < w.cols(); ++b) {
      const Covec &x = x0[static_cast<size_t>(a)], &y = y0[static_cast<size_t>(b)];
      Scalar s = dotp(x, d.omega.apply(y));
      for (Index i = 1; i <= top; ++i) {
        if (d.single_space()) {
          Scalar p = dotp(d.lambda(i), x) * dotp(d.lambda(-i), y);
          Scalar q = dotp(d.lambda(-i), x) * dotp(d.lambda(i), y);
          s -= d.kind == Kind::SO ? p + q : p - q;
        } else {
          s -= dotp(d.lambda(i), x) * dotp(d.mu(i), y);
        }
      }
      w(a, b) = s;
    }
  long p = static_cast<long>(x0.size());
  if (d.single_space())
    return {w.rank(), p, d.x_dim - p};
  long q = static_cast<long>(y0.size());
  return {w.rank(), p, q, d.x_dim - p, d.y_dim - q};
}

bool legal_by_hand(Kind k, const std::vector<long> &t) {
  if (is_orthosymplectic(k)) {
    long d = t[0], p = t[1], m = t[2];
    return p >= d && p - d <= m && (k != Kind::SP || d % 2 == 0);
  }
  long d = t[0], p = t[1], q = t[2], m = t[3], n = t[4];
  return p >= d && q >= d && p - d <= n && q - d <= m;
}

std::vector<std::vector<long>> all_tuples(size_t len, long top) {
  std::vector<std::vector<long>> out{{}};
  for (size_t k = 0; k < len; ++k) {
    std::vector<std::vector<long>> next;
    for (auto &t : out)
      for (long v = 0; v <= top; ++v) {
        auto u = t;
        u.push_back(v);
        next.push_back(u);
      }
    out = next;
  }
  return out;
}

// Infinitely recurring values of a scalar sequence, by sampling.
std::set<Scalar> recurring(const std::function<Scalar(Index)> &f) {
  std::set<Scalar> out;
  for (Index i = 60; i <= 200; ++i)
    out.insert(f(i));
  return out;
}

} // namespace

TEST_CASE("eventually periodic sequences normalize and compare") {
  auto s = seq({5, 1, 2}, {1, 2, 1, 2});
  auto n = s.normalized();
  CHECK(n.prefix == std::vector<Scalar>{Scalar(5)});
  CHECK(n.period == std::vector<Scalar>{Scalar(1), Scalar(2)});
  for (Index i = 1; i <= 20; ++i)
    CHECK(s.at(i) == n.at(i));
  auto t = seq({7}, {1, 2});
  CHECK(almost_equal_scalars(s, t));
  CHECK_FALSE(almost_equal_scalars(s, seq({}, {3, 1})));
  CHECK_THROWS_AS(ScalarSeq({}, {}), std::invalid_argument);
}

TEST_CASE("zero datum") {
  for (Kind k : {Kind::GL, Kind::SL, Kind::SO, Kind::SP}) {
    auto d = ComplementDatum::zero(k);
    d.check();
    CHECK(is_nondegenerate(d));
    CHECK(is_maximal(d));
    auto inv = standard_invariants(d);
    CHECK(inv.entries == std::vector<long>(is_orthosymplectic(k) ? 3 : 5, 0));
  }
  CHECK(standard_invariants(ComplementDatum::zero(Kind::GL)).str() == "(0,0,0,0,0)");
}

TEST_CASE("almost-zero subspace") {
  ComplementDatum d;
  d.kind = Kind::GL;
  d.x_dim = 2;
  d.y_dim = 0;
  d.omega = Matrix(2, 0);
  d.mus = CovecSeq::constant({});
  SUBCASE("all functionals zero") {
    d.lambdas = CovecSeq::constant(cv({0, 0}));
    CHECK(X0_basis(d).size() == 2);
  }
  SUBCASE("prefix-only functionals") {
    d.lambdas = CovecSeq({cv({1, 0}), cv({3, 4})}, {cv({0, 0})});
    CHECK(X0_basis(d).size() == 2);
  }
  SUBCASE("builder representative (0,1,0,1,1)") {
    auto r = build_representative(parse_invariants(Kind::GL, "(0,1,0,1,1)"));
    auto x0 = X0_basis(r);
    REQUIRE(x0.size() == 1);
    CHECK(x0[0] == cv({1, 0})); // x_{-1}
  }
}

TEST_CASE("corrected pairing") {
  auto d = family_datum(seq({3, 0}, {1}), seq({2, 5}, {1, 0}));
  // x0 = e_1 in X_0, y0 = e^2 in Y_0
  Covec x0 = cv({1, 0}), x = cv({0, 1}), y = cv({1, 0}), y0 = cv({0, 1});
  CHECK(omega_tilde(d, x0, y) == Scalar(1));
  CHECK(omega_tilde(d, x0, y0) == Scalar(0));
  CHECK(omega_tilde(d, x, y0) == Scalar(1));
  CHECK_THROWS_WITH_AS(omega_tilde(d, x, y), "divergent: neither argument almost-zero",
                       std::domain_error);
  // a datum whose functionals do not vanish on X_0 in the prefix
  ComplementDatum e = d;
  e.lambdas = CovecSeq({cv({2, 1}), cv({1, 1})}, {cv({0, 1})});
  e.mus = CovecSeq({cv({3, 0}), cv({1, 7})}, {cv({1, 0})});
  // hand expansion: omega(x0,y) - lambda_1(x0) mu_1(y) - lambda_2(x0) mu_2(y)
  CHECK(omega_tilde(e, x0, y) == Scalar(1 - 2 * 3 - 1 * 1));
  CHECK(omega_tilde(e, x0, y0) == Scalar(0 - 2 * 0 - 1 * 7));
}

TEST_CASE("builder round trip and realizability scan") {
  for (Kind k : {Kind::GL, Kind::SL, Kind::SO, Kind::SP}) {
    size_t len = is_orthosymplectic(k) ? 3 : 5;
    for (const auto &t : all_tuples(len, 3)) {
      StandardInvariants inv{k, t};
      bool legal = legal_by_hand(k, t);
      CHECK(!realizability_violation(inv).has_value() == legal);
      if (!legal) {
        CHECK_THROWS_AS(build_representative(inv), std::invalid_argument);
        continue;
      }
      auto d = build_representative(inv);
      d.check();
      CHECK(standard_invariants(d).entries == t);
      CHECK(is_nondegenerate(d));
      bool max_expected = k == Kind::SO ? t[0] <= 1 : t[0] == 0;
      CHECK(is_maximal(d) == max_expected);
    }
  }
}

TEST_CASE("builder agrees with brute-force invariants") {
  for (Kind k : {Kind::GL, Kind::SO, Kind::SP}) {
    size_t len = is_orthosymplectic(k) ? 3 : 5;
    for (const auto &t : all_tuples(len, 2)) {
      if (!legal_by_hand(k, t))
        continue;
      auto d = build_representative({k, t});
      CHECK(brute_invariants(d) == t);
    }
  }
}

TEST_CASE("builder rejection messages") {
  CHECK_THROWS_WITH(build_representative(parse_invariants(Kind::SP, "(1,1,1)")),
                    "unrealizable invariants: d must be even");
  CHECK_THROWS_WITH(build_representative(parse_invariants(Kind::GL, "(0,2,0,0,1)")),
                    "unrealizable invariants: p-d <= n");
  CHECK_THROWS_WITH(build_representative(parse_invariants(Kind::GL, "(1,0,1,1,1)")),
                    "unrealizable invariants: 0 <= p-d");
  CHECK_THROWS_WITH(build_representative(parse_invariants(Kind::SO, "(0,2,1)")),
                    "unrealizable invariants: p-d <= m");
  CHECK_THROWS_WITH(build_representative({Kind::GL, {0, -1, 0, 0, 0}}),
                    "unrealizable invariants: infinite entries unsupported");
  CHECK(build_representative(parse_invariants(Kind::GL, "(0,0,0,0,0)")) ==
        ComplementDatum::zero(Kind::GL));
  CHECK(standard_invariants(build_representative(parse_invariants(Kind::SO, "1,1,0"))).str() ==
        "(1,1,0)");
  CHECK_THROWS(parse_invariants(Kind::SO, "(1,1)"));
}

TEST_CASE("index maps") {
  CHECK_FALSE(IndexMap::identity().bijectivity_error());
  IndexMap swap;
  swap.classes = {{2, 2, 1}, {1, 2, 1}};
  CHECK_FALSE(swap.bijectivity_error());
  CHECK(swap(1) == 2);
  CHECK(swap(2) == 1);
  CHECK(swap(7) == 8);
  CHECK(swap(-3) == -4);
  IndexMap bad;
  bad.classes = {{1, 2, 1}, {1, 2, 1}};
  CHECK(bad.bijectivity_error().has_value());
  IndexMap gap;
  gap.head = {5};
  gap.classes = {{1, 1, 1}};
  CHECK(gap.bijectivity_error().has_value());
  IndexMap shifted;
  shifted.head = {3, 1};
  shifted.classes = {{2, 3, 1}, {4, 3, -1}, {6, 3, 1}};
  CHECK_FALSE(shifted.bijectivity_error());
}

TEST_CASE("identity certificates verify") {
  for (Kind k : {Kind::GL, Kind::SO, Kind::SP})
    for (const auto &t : all_tuples(is_orthosymplectic(k) ? 3 : 5, 2)) {
      if (!legal_by_hand(k, t))
        continue;
      auto d = build_representative({k, t});
      CHECK(verify_certificate(d, d, Certificate::identity(d)).ok);
    }
  auto f = family_datum(seq({0, 4}, {1, 0, 2}), seq({1}, {3, 1}));
  CHECK(verify_certificate(f, f, Certificate::identity(f)).ok);
}

TEST_CASE("certificate clauses") {
  auto d2 = build_Dz(Scalar(2)), d3 = build_Dz(Scalar(3));
  auto r = verify_certificate(d2, d3, Certificate::identity(d2));
  CHECK_FALSE(r.ok);
  CHECK(r.clause == "mu");
  CHECK(r.witness.find("i=") != std::string::npos);
  Certificate c = Certificate::identity(d2);
  c.alpha = seq({0}, {1}); // zero constant
  CHECK(verify_certificate(d2, d2, c).clause == "structure");
  c = Certificate::identity(d2);
  c.pi_x(1, 1) = Scalar(2);
  CHECK(verify_certificate(d2, d2, c).clause == "lambda");
  // change omega only: caught by the last clause
  auto e = d2;
  e.omega(0, 1) = Scalar(5);
  CHECK(verify_certificate(d2, e, Certificate::identity(d2)).clause == "omega");
}

TEST_CASE("so certificate with sign flip") {
  // lambda_{±i} recur with swapped roles under sigma(i) = -i
  auto d = build_representative(parse_invariants(Kind::SO, "(0,1,3)"));
  ComplementDatum e = d;
  std::swap(e.lambdas, e.lambdas_neg);
  Certificate c = Certificate::identity(d);
  c.sigma.classes = {{1, 1, -1}};
  CHECK(verify_certificate(d, e, c).ok);
  CHECK_FALSE(verify_certificate(d, e, Certificate::identity(d)).ok);
}

TEST_CASE("value multisets and proportionality") {
  auto z = Scalar(7);
  ScalarSeq s({Scalar(4), Scalar(1)}, {Scalar(1), z});
  auto m = value_multiset(s);
  CHECK(m.mult.at(Scalar(1)) == ValueMultiset::infinite);
  CHECK(m.mult.at(Scalar(4)) == 1);
  CHECK(m.str() == "{1:inf, 4:1, 7:inf}");
  ScalarSeq t({}, {Scalar(1), z.inv()});
  auto c = almost_proportional(s, t);
  REQUIRE(c);
  CHECK(*c == z.inv());
  CHECK_FALSE(almost_proportional(seq({}, {1, 2}), seq({}, {1, 3})));
  CHECK(*almost_proportional(seq({}, {0}), seq({9}, {0})) == Scalar(1));
  CHECK_FALSE(almost_proportional(seq({}, {0, 1}), seq({}, {1, 2})));
  CHECK(*almost_proportional(seq({}, {1, 2}), seq({}, {2, 4})) == Scalar(2));
}

TEST_CASE("almost proportionality is an equivalence relation") {
  std::mt19937 rng(11);
  auto rand_seq = [&] {
    std::uniform_int_distribution<int> len(1, 4), val(-2, 3), pre(0, 2);
    std::vector<Scalar> a, b;
    int np = pre(rng), nl = len(rng);
    for (int k = 0; k < np; ++k)
      a.push_back(Scalar(val(rng)));
    for (int k = 0; k < nl; ++k)
      b.push_back(Scalar(val(rng)));
    return ScalarSeq(a, b);
  };
  for (int trial = 0; trial < 200; ++trial) {
    auto a = rand_seq();
    std::uniform_int_distribution<int> sc(1, 4);
    Scalar k = Scalar::frac(sc(rng), sc(rng));
    auto b = a.map([&](const Scalar &v) { return v * k; });
    b.prefix.push_back(Scalar(99));
    auto c = a.map([&](const Scalar &v) { return v * k * Scalar(3); });
    REQUIRE(almost_proportional(a, a));
    auto ab = almost_proportional(a, b);
    auto ba = almost_proportional(b, a);
    REQUIRE(ab);
    REQUIRE(ba);
    auto bc = almost_proportional(b, c);
    REQUIRE(bc);
    auto ac = almost_proportional(a, c);
    REQUIRE(ac);
    auto other = rand_seq();
    CHECK(almost_proportional(a, other).has_value() == almost_proportional(other, a).has_value());
  }
}

TEST_CASE("D_z family") {
  for (long zz : {2, 3, 5}) {
    Scalar z(zz);
    auto d = build_Dz(z);
    d.check();
    CHECK(is_nondegenerate(d));
    CHECK(is_maximal(d));
    CHECK(standard_invariants(d).str() == "(0,1,1,1,1)");
    auto prod = dz_product_sequence(d);
    auto m = value_multiset(prod);
    CHECK(m.str() == "{1:inf, " + std::to_string(zz) + ":inf}");
    auto dinv = build_Dz(z.inv());
    auto r = verify_certificate(d, dinv, dz_inverse_certificate(z));
    CHECK(r.ok);
    auto c = almost_proportional(prod, dz_product_sequence(dinv));
    REQUIRE(c);
    CHECK(*c == z.inv());
  }
  CHECK_THROWS_AS(build_Dz(Scalar(1)), std::invalid_argument);
  CHECK_THROWS_AS(build_Dz(Scalar(0)), std::invalid_argument);
  for (auto shape : {DzShape{1, 1, 0, 0}, DzShape{2, 1, 1, 0}, DzShape{1, 2, 0, 1}}) {
    auto d = build_Dz(Scalar(2), shape);
    d.check();
    CHECK(is_nondegenerate(d));
    CHECK(is_maximal(d));
    CHECK(value_multiset(dz_product_sequence(d)).str() == "{1:inf, 2:inf}");
  }
  CHECK_THROWS_AS(build_Dz(Scalar(2), DzShape{3, 2, 2, 1}), std::invalid_argument);
}

TEST_CASE("special family decisions") {
  SUBCASE("self") {
    auto a = seq({2}, {1, 3}), b = seq({}, {1, 0});
    auto r = decide_equiv_special(a, b, a, b);
    CHECK(r.equivalent);
    REQUIRE(r.certificate);
    auto f = family_datum(a, b);
    CHECK(verify_certificate(f, f, *r.certificate).ok);
    CHECK(r.certificate->sigma.head.empty());
  }
  SUBCASE("products (1,2) vs (2,4)") {
    auto r = decide_equiv_special(seq({}, {1}), seq({}, {1, 2}), seq({}, {1}), seq({}, {2, 4}));
    CHECK(r.equivalent);
    CHECK(r.c == Scalar::frac(1, 2)); // a_i b_i = c a'_s b'_s
    REQUIRE(r.certificate);
    CHECK(verify_certificate(family_datum(seq({}, {1}), seq({}, {1, 2})),
                             family_datum(seq({}, {1}), seq({}, {2, 4})), *r.certificate)
              .ok);
  }
  SUBCASE("binary invariant mismatch") {
    auto r = decide_equiv_special(seq({}, {1}), seq({}, {1}), seq({}, {1, 0}), seq({}, {1}));
    CHECK_FALSE(r.equivalent);
    CHECK(r.witness.find("binary invariants differ") != std::string::npos);
    auto bi = binary_invariants(seq({}, {1, 0}), seq({}, {1}));
    CHECK(bi.a_zero_b_nonzero);
  }
  SUBCASE("z twist") {
    auto r = decide_equiv_special(seq({}, {1}), seq({}, {1, 2}), seq({}, {1}), seq({}, {1, 3}));
    CHECK_FALSE(r.equivalent);
    CHECK(r.witness.find("not proportional") != std::string::npos);
  }
  SUBCASE("not in family") {
    CHECK_THROWS_WITH(
        decide_equiv_special(seq({1}, {0}), seq({}, {1}), seq({}, {1}), seq({}, {1})),
        "not in family");
  }
}

TEST_CASE("special family agrees with independent multisets") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> len(1, 3), val(-1, 2), pre(0, 2), sc(1, 3);
  auto rand_seq = [&] {
    std::vector<Scalar> a, b;
    int np = pre(rng), nl = len(rng);
    for (int k = 0; k < np; ++k)
      a.push_back(Scalar(val(rng)));
    for (int k = 0; k < nl; ++k)
      b.push_back(Scalar(val(rng)));
    if (std::all_of(b.begin(), b.end(), [](const Scalar &v) { return v.is_zero(); }))
      b[0] = Scalar(1);
    return ScalarSeq(a, b);
  };
  int equivalent = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto a = rand_seq(), b = rand_seq();
    ScalarSeq a2, b2;
    if (trial % 2) {
      // twist: scale a, shift all indices by one, rotate both periods together
      Scalar k = Scalar::frac(sc(rng), sc(rng));
      a2 = a.map([&](const Scalar &v) { return v * k; });
      b2 = b;
      a2.prefix.insert(a2.prefix.begin(), Scalar(3));
      b2.prefix.insert(b2.prefix.begin(), Scalar(0));
      if (a2.period.size() == b2.period.size() && a2.prefix.size() == b2.prefix.size()) {
        std::rotate(a2.period.begin(), a2.period.begin() + 1, a2.period.end());
        std::rotate(b2.period.begin(), b2.period.begin() + 1, b2.period.end());
      }
    } else {
      a2 = rand_seq();
      b2 = rand_seq();
    }
    auto r = decide_equiv_special(a, b, a2, b2);
    // independent recomputation from sampled tails
    auto types = [](const ScalarSeq &x, const ScalarSeq &y) {
      std::set<int> out;
      for (Index i = 60; i <= 200; ++i)
        out.insert((x.at(i).is_zero() ? 2 : 0) + (y.at(i).is_zero() ? 1 : 0));
      out.erase(0);
      return out;
    };
    auto v1 = recurring([&](Index i) { return a.at(i) * b.at(i); });
    auto v2 = recurring([&](Index i) { return a2.at(i) * b2.at(i); });
    bool prop = false;
    for (const auto &p : v1)
      for (const auto &q : v2) {
        if (p.is_zero() || q.is_zero())
          continue;
        std::set<Scalar> img;
        for (const auto &v : v1)
          img.insert(v * (q / p));
        prop = prop || img == v2;
      }
    if (v1 == std::set<Scalar>{Scalar(0)} && v2 == v1)
      prop = true;
    bool expect = types(a, b) == types(a2, b2) && prop;
    CHECK(r.equivalent == expect);
    if (r.equivalent) {
      ++equivalent;
      REQUIRE(r.certificate);
      CHECK(verify_certificate(family_datum(a, b), family_datum(a2, b2), *r.certificate).ok);
    }
  }
  CHECK(equivalent >= 150);
}

TEST_CASE("family normal form") {
  // a (0,1,1,1,1) datum in a skewed basis
  ComplementDatum d;
  d.kind = Kind::GL;
  d.x_dim = 2;
  d.y_dim = 2;
  d.omega = Matrix(2, 2);
  d.omega(0, 0) = Scalar(2);
  d.omega(0, 1) = Scalar(1);
  d.omega(1, 0) = Scalar(3);
  d.omega(1, 1) = Scalar(1);
  // X_0 = span(1,-1) on X; functionals (t,t) vanish there
  d.lambdas = CovecSeq({cv({4, 4})}, {cv({1, 1}), cv({2, 2})});
  // Y_0 = span(0,1) on Y
  d.mus = CovecSeq({}, {cv({1, 0}), cv({0, 0}), cv({3, 0})});
  REQUIRE(standard_invariants(d).str() == "(0,1,1,1,1)");
  auto ff = family_form(d);
  REQUIRE(ff);
  CHECK(verify_certificate(d, family_datum(ff->a, ff->b), ff->to_family).ok);
  auto back = invert_trivial(ff->to_family);
  CHECK(verify_certificate(family_datum(ff->a, ff->b), d, back).ok);
  // composing with a family certificate relates d to another family member
  auto r = decide_equiv_special(ff->a, ff->b, ff->a.map([](const Scalar &v) { return v * 2; }),
                                ff->b);
  REQUIRE(r.equivalent);
  auto total = compose(ff->to_family, *r.certificate);
  CHECK(verify_certificate(
            d, family_datum(ff->a.map([](const Scalar &v) { return v * 2; }), ff->b), total)
            .ok);
  // functionals not vanishing on X_0 in the prefix: no normal form
  d.lambdas.prefix = {cv({4, 0})};
  CHECK_FALSE(family_form(d));
}
