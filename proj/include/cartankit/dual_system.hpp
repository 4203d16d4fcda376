#pragma once

#include "cartankit/complement.hpp"
#include "cartankit/json_io.hpp"
#include "cartankit/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cartan {

// One summand of a generator rule, evaluated at position j >= first with
// k = j - first + 1 selecting the coefficient.
//   Shift:      coeff(k) e_{mult*j + off}
//   Const:      coeff(k) e_{off}
//   Cumulative: coeff(k) * sum of e_m over 1 <= m <= j+off, m = j+off mod step
struct Term {
  enum Type { Shift, Const, Cumulative };
  Type type = Shift;
  Index mult = 1;
  Index off = 0;
  Index step = 1;
  ScalarSeq coeff = ScalarSeq::constant(Scalar(1));
};

struct Complement {
  std::vector<Vector> xs; // in V
  std::vector<Vector> ys; // in V_* (gl/sl only)
};

// Rule-described (self-)dual system. gl/sl: v_j from `pos`, v^j from `neg`,
// j >= first. so/sp: v_j from `pos` and v_{-j} from `neg`, j >= first.
struct DualSystem {
  Kind kind = Kind::GL;
  Form form{Kind::GL};
  Index first = 1;
  std::vector<Term> pos, neg;
  std::string catalog;
  Json params;
  std::optional<Complement> complement;
  bool has_zero = false; // so with standard form: e_0 present in V
  std::optional<ComplementDatum> realized; // normal-form systems

  // throws std::out_of_range "index outside index set"
  Vector vec(Index i) const;
  Vector covec(Index i) const; // gl/sl
  bool in_index_set(Index i) const;
  // Bounds on the index after which all rule data is periodic, and a common period.
  Index horizon() const;
  Index rule_period() const;
  // max |basis index| touched by generator i
  Index support_bound(Index i) const;
};

// Catalog entries. Throws std::invalid_argument on bad parameters.
DualSystem dual_bases(Kind k, bool with_zero = false);
// gl/sl: v_i = e_{i+vs} (+ pattern e_anchor), v^i = e^{i+ws} (+ pattern e^anchor)
struct Anchor {
  Index index = 1;
  ScalarSeq pattern = ScalarSeq::constant(Scalar(1));
};
DualSystem shift_pattern(Kind k, Index v_shift, Index w_shift, std::optional<Anchor> v_anchor = {},
                         std::optional<Anchor> w_anchor = {});
// gl/sl: L_i = e_i - c(i) e_{i+s}, L^i = e^i + c(i) sum_{k<i, k=i mod s} e^k; swap exchanges V and V_*.
DualSystem cumulative_sum(Kind k, Index stride, const ScalarSeq &pattern, bool swap = false);
// "so-nonabelian": v_{+-i} = (e_i + e_1), (e_{-i} + e_{-2}) for i >= 3.
// "ab-family": L_i = C(b_i e_1 + e_{i+2}), L^i = C(a_i e^2 + e^{i+2}).
DualSystem worked_example(const std::string &id, const Json &params = Json::object());
// Abstract basis realizing the datum: v_i plus X (and Y) at indices kComplementBase + k.
constexpr Index kComplementBase = Index(1) << 30;
DualSystem normal_form(const ComplementDatum &d);

DualSystem system_from_json(const Json &j);
Json to_json(const DualSystem &s);

struct Violation {
  Index i = 0, j = 0;
  Scalar value;
  Scalar expected;
};
// First pair (i, j) of system indices among the first N whose pairing is wrong.
std::optional<Violation> validate(const DualSystem &s, Index n);

// gl: v_i (x) v^i; sl: v_i (x) v^i - v_{i+1} (x) v^{i+1}; so: v_i ^ v_{-i}; sp: v_i & v_{-i}
LieElement toral_generator(const DualSystem &s, Index i);

// Support of the first n generators plus the declared complement.
Window window_for(const DualSystem &s, Index n);
// Every generator whose support meets the window, plus enough periodic tail.
std::vector<Index> relevant_indices(const DualSystem &s, const Window &w);
// Toral generators relevant to the window (for centralizer checks).
std::vector<LieElement> relevant_toral(const DualSystem &s, const Window &w);

// (sum L^i)^perp inside the window (A) and (sum L_j)^perp (B, gl/sl).
VSubspace perp_vectors(const DualSystem &s, const Window &w);
VSubspace perp_covectors(const DualSystem &s, const Window &w);

// Toral generators inside the window plus A (x) B, wedge^2 A or Sym^2 A.
// throws OracleError "window too small"
Subspace cartan_basis_at(const DualSystem &s, const Window &w);
Subspace complement_block_at(const DualSystem &s, const Window &w);
// Relevant toral generators (which may reach outside the window) plus the block;
// the truncation that normalizer and generalized-zero checks are run against.
Subspace cartan_relevant(const DualSystem &s, const Window &w);
bool is_splitting_at(const DualSystem &s, const Window &w);

// throws std::invalid_argument "degenerate datum"
DualSystem system_from_datum(const ComplementDatum &d);
// throws std::invalid_argument "no declared complement"
ComplementDatum datum_from_system(const DualSystem &s);

// Representatives of each class for standard invariants with finitely many
// classes; throws std::invalid_argument "not a finite-class tuple".
std::vector<DualSystem> finite_class_representatives(const StandardInvariants &inv);

} // namespace cartan
