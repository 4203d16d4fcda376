#include "cartankit/gallery.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cartan;

namespace {

// Bad input: printed on stderr, exit 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json load_json(const std::string &path, std::string &raw) {
  raw = slurp(path);
  try {
    return Json::parse(raw);
  } catch (const Json::parse_error &e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

template <class F> auto parse_with(const std::string &path, F f) {
  try {
    return f();
  } catch (const InputError &) {
    throw;
  } catch (const std::exception &e) {
    throw InputError(path + ": " + e.what());
  }
}

// A datum file, or a system file with a declared complement.
ComplementDatum load_datum(const std::string &path, std::string &raw) {
  Json j = load_json(path, raw);
  return parse_with(path, [&] {
    if (j.is_object() && j.contains("catalog"))
      return datum_from_system(system_from_json(j));
    ComplementDatum d = datum_from_json(j);
    d.check();
    return d;
  });
}

std::vector<Kind> parse_kinds(const std::string &list) {
  std::vector<Kind> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(parse_kind(item));
  if (out.empty())
    throw InputError("no kinds given");
  return out;
}

std::optional<int> env_cap() {
  const char *v = std::getenv("CARTANKIT_MAX_WINDOW");
  if (!v || !*v)
    return std::nullopt;
  try {
    return std::stoi(v);
  } catch (const std::exception &) {
    throw InputError("CARTANKIT_MAX_WINDOW is not an integer");
  }
}

std::string violation_text(const Violation &v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ") pairs to " + v.value.str() + ", expected " +
         v.expected.str();
}

Report cmd_validate(const std::string &file, Index n) {
  std::string raw;
  Json j = load_json(file, raw);
  DualSystem s = parse_with(file, [&] { return system_from_json(j); });
  Report r;
  r.command = "validate";
  r.digest = digest_of(raw + "|N=" + std::to_string(n));
  r.data["catalog"] = s.catalog;
  r.data["N"] = n;
  auto bad = validate(s, n);
  r.add("pairings of the first " + std::to_string(n) + " generators are delta", !bad, bad ? violation_text(*bad) : "");
  return r;
}

Report cmd_invariants(const std::string &file) {
  std::string raw;
  ComplementDatum d = load_datum(file, raw);
  Report r;
  r.command = "invariants";
  r.digest = digest_of(raw);
  StandardInvariants inv = standard_invariants(d);
  r.data["kind"] = kind_name(d.kind);
  r.data["invariants"] = inv.str();
  r.data["nondegenerate"] = is_nondegenerate(d);
  r.data["maximal"] = is_maximal(d);
  auto bad = realizability_violation(inv);
  r.add("tuple satisfies the realizability inequalities", !bad, bad.value_or(""));
  return r;
}

Report cmd_equiv(const std::string &f1, const std::string &f2, const std::string &cert_file) {
  std::string raw1, raw2, raw3;
  ComplementDatum d1 = load_datum(f1, raw1), d2 = load_datum(f2, raw2);
  Report r;
  r.command = "equiv";
  if (!cert_file.empty()) {
    Json j = load_json(cert_file, raw3);
    Certificate c = parse_with(cert_file, [&] { return certificate_from_json(j); });
    r.digest = digest_of(raw1 + "|" + raw2 + "|" + raw3);
    VerifyResult v = verify_certificate(d1, d2, c);
    r.data["verdict"] = v.ok ? "equivalent" : "not certified";
    r.add("certificate verifies", v.ok, v.ok ? "" : v.clause + ": " + v.witness);
    return r;
  }
  r.digest = digest_of(raw1 + "|" + raw2);
  auto ff1 = family_form(d1), ff2 = family_form(d2);
  if (!ff1 || !ff2)
    throw InputError("undecidable without certificate");
  SpecialDecision dec;
  try {
    dec = decide_equiv_special(ff1->a, ff1->b, ff2->a, ff2->b);
  } catch (const std::invalid_argument &) {
    throw InputError("undecidable without certificate");
  }
  r.data["verdict"] = dec.equivalent ? "equivalent" : "inequivalent";
  if (dec.equivalent) {
    Certificate total = compose(compose(ff1->to_family, *dec.certificate), invert_trivial(ff2->to_family));
    VerifyResult v = verify_certificate(d1, d2, total);
    r.data["certificate"] = to_json(total);
    r.add("composed certificate verifies", v.ok, v.ok ? "" : v.clause + ": " + v.witness);
  } else {
    ScalarSeq p1 = product_sequence(ff1->a, ff1->b), p2 = product_sequence(ff2->a, ff2->b);
    bool binary = binary_invariants(ff1->a, ff1->b) != binary_invariants(ff2->a, ff2->b);
    bool separated = binary || !almost_proportional(p1, p2);
    r.data["witness"] = dec.witness;
    r.add("multisets of a_i b_i are not almost proportional", separated,
          value_multiset(p1).str() + " vs " + value_multiset(p2).str());
  }
  return r;
}

Report cmd_build(const std::string &kind, const std::string &tuple, const std::string &out) {
  Kind k = parse_with("kind", [&] { return parse_kind(kind); });
  StandardInvariants inv = parse_with("tuple", [&] { return parse_invariants(k, tuple); });
  Report r;
  r.command = "build";
  r.digest = digest_of(kind + "|" + tuple);
  r.data["invariants"] = inv.str();
  if (auto bad = realizability_violation(inv)) {
    r.add("tuple is realizable", false, *bad);
    return r;
  }
  ComplementDatum d = build_representative(inv);
  StandardInvariants back = standard_invariants(d);
  r.add("representative has the requested invariants", back == inv, back.str());
  r.add("representative is nondegenerate", is_nondegenerate(d));
  Json dj = to_json(d);
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f)
      throw InputError("cannot write " + out);
    f << dj.dump(2) << "\n";
  } else {
    r.data["datum"] = dj;
  }
  return r;
}

Report cmd_gallery(const std::string &id, std::optional<int> size) {
  auto ids = gallery_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    std::string known;
    for (const auto &i : ids)
      known += " " + i;
    throw InputError("unknown gallery id '" + id + "'; known:" + known);
  }
  Report r = parse_with(id, [&] { return run_gallery(id, size); });
  r.digest = digest_of(id + "|" + (size ? std::to_string(*size) : ""));
  return r;
}

Report cmd_verify(const std::string &kinds, int max_window, std::uint64_t seed) {
  std::vector<Kind> ks = parse_with("kinds", [&] { return parse_kinds(kinds); });
  if (auto cap = env_cap())
    max_window = std::min(max_window, *cap);
  Report r = verify_theorems(ks, max_window, seed);
  r.digest = digest_of(kinds + "|" + std::to_string(max_window) + "|" + std::to_string(seed));
  return r;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Cartan subalgebras of finitary Lie algebras: construction and verification"};
  app.require_subcommand(1);
  bool as_json = false, timing = false;
  app.add_flag("--json", as_json, "Emit the report as JSON");
  app.add_flag("--timing", timing, "Include wall-clock time in the report");

  std::string file, file2, cert, kind, tuple, out, id, kinds = "gl,sl,so,sp";
  Index n = 20;
  std::optional<int> size;
  int max_window = 8;
  std::uint64_t seed = 1;

  auto *val = app.add_subcommand("validate", "Check the duality relations of a system file");
  val->add_option("file", file, "System JSON")->required();
  val->add_option("--N", n, "Number of generators to check")->check(CLI::PositiveNumber);

  auto *inv = app.add_subcommand("invariants", "Standard invariants of a datum (or system) file");
  inv->add_option("file", file, "Datum JSON")->required();

  auto *eq = app.add_subcommand("equiv", "Decide or certify equivalence of two data");
  eq->add_option("first", file, "Datum JSON")->required();
  eq->add_option("second", file2, "Datum JSON")->required();
  eq->add_option("--certificate", cert, "Certificate JSON");

  auto *bld = app.add_subcommand("build", "Build a representative datum for standard invariants");
  bld->add_option("kind", kind, "gl, sl, so or sp")->required();
  bld->add_option("tuple", tuple, "e.g. (0,1,1,1,1)")->required();
  bld->add_option("--out", out, "Write the datum JSON here");

  auto *gal = app.add_subcommand("gallery", "Run a worked example");
  gal->add_option("id", id, "Gallery id")->required();
  gal->add_option("--size", size, "Window or level size");

  auto *ver = app.add_subcommand("verify-theorems", "Structure checks over the catalog and random systems");
  ver->add_option("--kinds", kinds, "Comma separated kinds");
  ver->add_option("--max-window", max_window, "Largest window dimension")->check(CLI::PositiveNumber);
  ver->add_option("--seed", seed, "Seed for the random systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return 2;
  }

  auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    if (*val)
      r = cmd_validate(file, n);
    else if (*inv)
      r = cmd_invariants(file);
    else if (*eq)
      r = cmd_equiv(file, file2, cert);
    else if (*bld)
      r = cmd_build(kind, tuple, out);
    else if (*gal)
      r = cmd_gallery(id, size);
    else
      r = cmd_verify(kinds, max_window, seed);
  } catch (const InputError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (timing)
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (as_json)
    std::cout << r.to_json().dump(2) << "\n";
  else
    std::cout << r.text();
  return r.ok() ? 0 : 1;
}
