// Acceptance suite: one PASS/FAIL line per criterion.
#include "cartankit/gallery.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>

using namespace cartan;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      note = what;
    }
  }
};

// Failed checks of a report, first few only.
std::string first_failures(const Report &r, size_t limit = 3) {
  std::string out;
  size_t n = 0;
  for (const auto &c : r.checks)
    if (c.status != Status::Pass && n++ < limit)
      out += (out.empty() ? "" : "; ") + c.name + (c.witness.empty() ? "" : " [" + c.witness + "]");
  return out;
}

std::vector<Kind> all_kinds() { return {Kind::GL, Kind::SL, Kind::SO, Kind::SP}; }

bool name_has(const Check &c, const std::string &s) { return c.name.find(s) != std::string::npos; }

// ---- 1 ----
Outcome bracket_identity() {
  Outcome o;
  Vector e0 = basis_vector(0), e1 = basis_vector(1), em2 = basis_vector(-2);
  Form f(Kind::SO);
  auto start = Clock::now();
  LieElement lhs = bracket(wedge(e1, e0), wedge(em2, e0), f);
  bool equal = lhs == wedge(em2, e1);
  double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  o.require(equal, "got " + lhs.str());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f ms", ms);
  o.require(ms < 1.0, std::string("too slow: ") + buf);
  if (o.ok)
    o.note = buf;
  return o;
}

// ---- 2, 3 ----
// Corpus run shared by criteria 2 and 3.
const Report &corpus_report() {
  static const Report r = verify_theorems(all_kinds(), 16, 1, 0);
  return r;
}

Outcome cartan_vs_centralizer() {
  Outcome o;
  const Report &r = corpus_report();
  size_t n = 0;
  for (const auto &c : r.checks)
    if (name_has(c, "cartan part equals torus centralizer")) {
      ++n;
      o.require(c.status == Status::Pass, c.name);
    }
  o.require(n >= 50, "only " + std::to_string(n) + " windows checked");
  if (o.ok)
    o.note = std::to_string(n) + " windows";
  return o;
}

Outcome depth_theorem() {
  Outcome o;
  const Report &r = corpus_report();
  size_t depth = 0, norm = 0, gz = 0;
  for (const auto &c : r.checks) {
    bool d = name_has(c, "depth <= 2"), nn = name_has(c, "self-normalizing"), g = name_has(c, "generalized zero");
    depth += d;
    norm += nn;
    gz += g;
    if (d || nn || g)
      o.require(c.status == Status::Pass, c.name + " [" + c.witness + "]");
  }
  o.require(depth > 0 && norm > 0 && gz > 0, "corpus produced no depth checks");
  Report so = so_nonabelian_example(8);
  for (const auto &c : so.checks)
    if (name_has(c, "depth exactly 2") || name_has(c, "V^0") || name_has(c, "rank 1"))
      o.require(c.status == Status::Pass, "so example: " + c.name + " [" + c.witness + "]");
  if (o.ok)
    o.note = std::to_string(depth) + " truncations (corpus computed under 2)";
  return o;
}

// ---- 4 ----
bool corollary_inequalities(Kind k, const std::vector<long> &t) {
  if (is_orthosymplectic(k)) {
    long d = t[0], p = t[1], m = t[2];
    return 0 <= p - d && p - d <= m && (k != Kind::SP || d % 2 == 0);
  }
  long d = t[0], p = t[1], q = t[2], m = t[3], n = t[4];
  return 0 <= p - d && p - d <= n && 0 <= q - d && q - d <= m;
}

Outcome realizability_scan() {
  Outcome o;
  auto start = Clock::now();
  size_t built = 0, total = 0;
  for (Kind k : all_kinds()) {
    size_t len = is_orthosymplectic(k) ? 3 : 5;
    std::vector<long> t(len, 0);
    while (true) {
      ++total;
      StandardInvariants inv{k, t};
      bool want = corollary_inequalities(k, t);
      bool got = true;
      ComplementDatum d;
      try {
        d = build_representative(inv);
      } catch (const std::invalid_argument &) {
        got = false;
      }
      o.require(got == want, kind_name(k) + inv.str() + (want ? " rejected" : " accepted"));
      if (got) {
        ++built;
        o.require(standard_invariants(d) == inv, kind_name(k) + inv.str() + " does not round trip");
      }
      size_t pos = 0;
      while (pos < len && ++t[pos] > 3)
        t[pos++] = 0;
      if (pos == len)
        break;
    }
  }
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(s < 10.0, "took " + std::to_string(s) + " s");
  if (o.ok)
    o.note = std::to_string(built) + "/" + std::to_string(total) + " realizable";
  return o;
}

// ---- 5 ----
bool zero_infinitely_often(const CovecSeq &s) {
  for (const auto &c : s.period)
    for (const auto &x : c)
      if (x.is_zero())
        return true;
  return false;
}

Outcome finite_classes() {
  Outcome o;
  struct Case {
    Kind k;
    std::vector<long> e;
    size_t classes;
  };
  std::vector<Case> cases = {{Kind::GL, {0, 0, 0, 0, 0}, 1}, {Kind::GL, {0, 0, 0, 1, 0}, 2},
                             {Kind::GL, {0, 0, 1, 1, 0}, 2}, {Kind::SO, {0, 0, 0}, 1},
                             {Kind::SO, {1, 1, 0}, 1},       {Kind::SP, {0, 0, 0}, 1}};
  for (const auto &c : cases) {
    StandardInvariants inv{c.k, c.e};
    std::string tag = kind_name(c.k) + inv.str();
    auto reps = finite_class_representatives(inv);
    o.require(reps.size() == c.classes, tag + ": wrong number of representatives");
    std::vector<bool> binary;
    for (const auto &s : reps) {
      auto bad = validate(s, 12);
      o.require(!bad, tag + ": duality fails");
      ComplementDatum d = datum_from_system(s);
      o.require(standard_invariants(d) == inv, tag + ": invariants " + standard_invariants(d).str());
      if (c.classes == 2)
        binary.push_back(zero_infinitely_often(c.e[3] > 0 ? d.lambdas : d.mus));
    }
    if (c.classes == 2 && binary.size() == 2)
      o.require(binary[0] != binary[1], tag + ": representatives share the binary invariant");
  }
  return o;
}

// ---- 6 ----
std::set<Scalar> recurring_products(const ScalarSeq &a, const ScalarSeq &b) {
  std::set<Scalar> out;
  for (Index i = 60; i <= 200; ++i)
    out.insert(a.at(i) * b.at(i));
  return out;
}

bool sets_proportional(const std::set<Scalar> &s1, const std::set<Scalar> &s2) {
  if (s1 == s2)
    return true;
  for (const auto &p : s1)
    for (const auto &q : s2) {
      if (p.is_zero() || q.is_zero())
        continue;
      std::set<Scalar> img;
      for (const auto &v : s1)
        img.insert(v * (q / p));
      if (img == s2)
        return true;
    }
  return false;
}

Outcome special_family() {
  Outcome o;
  std::mt19937 rng(606);
  std::uniform_int_distribution<int> val(1, 4), len(1, 3), pre(0, 2);
  auto rand_seq = [&] {
    std::vector<Scalar> a, b;
    for (int k = pre(rng); k > 0; --k)
      a.push_back(Scalar(val(rng)));
    for (int k = len(rng); k > 0; --k)
      b.push_back(Scalar(val(rng)));
    return ScalarSeq(a, b);
  };
  int twists = 0, ztwists = 0;
  for (int trial = 0; trial < 60; ++trial) {
    ScalarSeq a = rand_seq(), b = rand_seq();
    // scalar twist on both sides, then every index shifted by one
    Scalar s = Scalar(val(rng)), t = Scalar::frac(1, val(rng));
    ScalarSeq a2 = a.map([&](const Scalar &v) { return v * s; }), b2 = b.map([&](const Scalar &v) { return v * t; });
    a2.prefix.insert(a2.prefix.begin(), Scalar(7));
    b2.prefix.insert(b2.prefix.begin(), Scalar(5));
    auto r = decide_equiv_special(a, b, a2, b2);
    o.require(r.equivalent && r.certificate, "twist not recognized");
    if (r.certificate)
      o.require(verify_certificate(family_datum(a, b), family_datum(a2, b2), *r.certificate).ok,
                "twist certificate rejected");
    ++twists;

    // z-twist: multiply b by z on every other index of the period
    Scalar z(val(rng) + 1);
    std::vector<Scalar> per;
    for (const auto &v : b.period) {
      per.push_back(v);
      per.push_back(v * z);
    }
    ScalarSeq bz(b.prefix, per);
    std::vector<Scalar> aper;
    for (const auto &v : a.period) {
      aper.push_back(v);
      aper.push_back(v);
    }
    ScalarSeq az(a.prefix, aper);
    bool independent = sets_proportional(recurring_products(a, b), recurring_products(az, bz));
    auto rz = decide_equiv_special(a, b, az, bz);
    o.require(rz.equivalent == independent, "z-twist decision disagrees with sampled multisets");
    if (!independent) {
      ++ztwists;
      o.require(!almost_proportional(product_sequence(a, b), product_sequence(az, bz)),
                "z-twist multisets proportional");
    }
  }
  o.require(ztwists >= 10, "too few inequivalent z-twists");
  for (long zz : {2, 3, 5}) {
    Scalar z(zz);
    auto r = verify_certificate(build_Dz(z), build_Dz(z.inv()), dz_inverse_certificate(z));
    o.require(r.ok, "D_" + z.str() + " certificate: " + r.clause + " " + r.witness);
  }
  auto f2 = family_form(build_Dz(Scalar(2))), f3 = family_form(build_Dz(Scalar(3)));
  o.require(f2 && f3, "D_z not in the special family");
  if (f2 && f3) {
    auto r = decide_equiv_special(f2->a, f2->b, f3->a, f3->b);
    o.require(!r.equivalent, "D_2 and D_3 declared equivalent");
    o.require(!sets_proportional(recurring_products(f2->a, f2->b), recurring_products(f3->a, f3->b)),
              "D_2 and D_3 multisets proportional");
  }
  if (o.ok)
    o.note = std::to_string(twists) + " twists, " + std::to_string(ztwists) + " separated z-twists";
  return o;
}

// ---- 7 ----
Outcome galleries() {
  Outcome o;
  Report b = gl_limit_B_example(4);
  o.require(b.ok(), "gl limit: " + first_failures(b));
  Report c = sl_trivial_intersection_example(3, 20);
  o.require(c.ok(), "sl example: " + first_failures(c));
  bool pj = false, null = false;
  for (const auto &ch : c.checks) {
    pj = pj || name_has(ch, "f_j - e_j = f_p(j)");
    null = null || name_has(ch, "only C = 0");
  }
  o.require(pj && null, "sl example is missing a check");
  return o;
}

// ---- 8 ----
LieElement random_in_window(const Window &w, std::mt19937 &rng) {
  auto basis = ambient_basis(w);
  std::uniform_int_distribution<size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> val(-2, 2), count(1, 6);
  LieElement x(w.kind);
  for (int t = count(rng); t > 0; --t)
    x += Scalar(val(rng), val(rng)) * basis[pick(rng)];
  return x;
}

Window small_window(Kind k) {
  switch (k) {
  case Kind::GL:
  case Kind::SL: return Window::range(k, 1, 8);
  case Kind::SO: return Window::range(k, -3, 3);
  case Kind::SP: return Window::range(k, -4, 4);
  }
  return Window::range(k, 1, 8);
}

Outcome oracle_self_tests() {
  Outcome o;
  std::mt19937 rng(808);
  size_t jordan = 0, triples = 0;
  for (Kind k : all_kinds()) {
    Window w = small_window(k);
    o.require(w.vidx.size() <= 8, "window too large");
    for (int t = 0; t < 200; ++t) {
      LieElement x = random_in_window(w, rng);
      JordanParts j = jordan_parts(x, w);
      bool good = j.ss + j.nil == x && bracket(j.ss, j.nil, w.form).is_zero() && is_semisimple(j.ss, w) &&
                  is_nilpotent(j.nil, w) && in_algebra(j.ss, w.form) && in_algebra(j.nil, w.form);
      o.require(good, kind_name(k) + ": jordan postcondition fails on " + x.str());
      ++jordan;
    }
  }
  for (int t = 0; t < 500; ++t) {
    Kind k = all_kinds()[static_cast<size_t>(t % 4)];
    Window w = small_window(k);
    LieElement x = random_in_window(w, rng), y = random_in_window(w, rng), z = random_in_window(w, rng);
    LieElement jac = bracket(x, bracket(y, z, w.form), w.form) + bracket(y, bracket(z, x, w.form), w.form) +
                     bracket(z, bracket(x, y, w.form), w.form);
    o.require(jac.is_zero(), kind_name(k) + ": jacobi fails");
    // trace form invariance: tr([x,y] z) = tr(x [y,z])
    Scalar lhs = trace(assoc_product(bracket(x, y, w.form), z, w.form), w.form);
    Scalar rhs = trace(assoc_product(x, bracket(y, z, w.form), w.form), w.form);
    o.require(lhs == rhs, kind_name(k) + ": trace form not invariant");
    if (is_orthosymplectic(k)) {
      std::uniform_int_distribution<size_t> pick(0, w.vidx.size() - 1);
      Vector u = basis_vector(w.vidx[pick(rng)]) + Scalar(2) * basis_vector(w.vidx[pick(rng)]);
      Vector v = basis_vector(w.vidx[pick(rng)]) - basis_vector(w.vidx[pick(rng)]);
      o.require((pair(act(x, u), v, k) + pair(u, act(x, v), k)).is_zero(), kind_name(k) + ": form not invariant");
    }
    ++triples;
  }
  if (o.ok)
    o.note = std::to_string(jordan) + " jordan cases, " + std::to_string(triples) + " triples";
  return o;
}

} // namespace

int main() {
  struct Criterion {
    const char *name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"so bracket identity [e1^e0, e-2^e0] = e-2^e1 in under 1 ms", bracket_identity},
      {"catalog cartan parts equal torus centralizers (windows <= 16)", cartan_vs_centralizer},
      {"depth <= 2, self-normalizing, generalized zero space; so example depth 2, dim V^0 = 3", depth_theorem},
      {"realizability scan over entries <= 3 in under 10 s", realizability_scan},
      {"finite-class representatives", finite_classes},
      {"special-family equivalence and D_z certificates", special_family},
      {"gl limit and sl trivial-torus galleries", galleries},
      {"oracle self-tests: jordan, jacobi, form invariance", oracle_self_tests},
  };
  int failed = 0, idx = 0;
  for (const auto &c : criteria) {
    ++idx;
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(Clock::now() - start).count();
    failed += !o.ok;
    std::printf("[%s] %d. %s (%.3fs)%s%s\n", o.ok ? "PASS" : "FAIL", idx, c.name, s, o.note.empty() ? "" : ": ",
                o.note.c_str());
  }
  std::printf("%d/%zu criteria passed\n", idx - failed, criteria.size());
  return failed ? 1 : 0;
}
