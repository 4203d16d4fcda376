#pragma once

#include "cartankit/dual_system.hpp"
#include "cartankit/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cartan {

// ---- nonabelian so Cartan ----

// Window {-N..N}; throws OracleError "window too small" for N < 5.
Report so_nonabelian_example(Index n = 8);

// ---- direct limit of gl_2n with trace-corrected embeddings ----

// level m lives in gl_{2m}; A -> diag(tr(A)/m, A, 0)
Matrix limit_embed(const Matrix &a);
Matrix limit_B(int m);          // diag(I_m, 0_m)
Matrix limit_C(int m, int sign); // corner unit: upper right (+1) or lower left (-1)
Report gl_limit_B_example(int n = 4);

// ---- sl direct limit whose torus meets sl trivially ----

int c_coeff(Index i, Index j); // 1 iff j = i mod 2^(i-1)
Vector f_vector(Index j);
Index p_of(Index j);           // f_j - e_j = f_{p(j)}
Index d_coeff(Index k, Index l);

// element of g_i = sl(V_i) + C^i; z[l-1] is the x_l coordinate
struct LevelElement {
  Matrix a;
  std::vector<Scalar> z;
  bool operator==(const LevelElement &o) const = default;
};
LevelElement t_at_level(Index l, Index m); // image of t_l in g_m, m >= l
LevelElement embed_level(const LevelElement &x);
LevelElement level_bracket(const LevelElement &x, const LevelElement &y);
// throws std::invalid_argument "L too small to span"
Report sl_trivial_intersection_example(int j = 3, int big_l = 20);

// ---- splitting Cartans from unions of finite ones ----

Report splitting_examples(Index n = 8);

// ---- registry ----

std::vector<std::string> gallery_ids();
// throws std::invalid_argument "unknown gallery id"
Report run_gallery(const std::string &id, std::optional<int> size = {});

// Catalog systems used by the theorem suite: dual bases, the so example and
// every finite-class representative, restricted to the given kinds.
std::vector<std::pair<std::string, DualSystem>> catalog_corpus(const std::vector<Kind> &kinds);

// Cartan part vs centralizer and depth checks on every corpus system for windows up to max_window,
// plus seeded random normal-form systems.
Report verify_theorems(const std::vector<Kind> &kinds, int max_window, std::uint64_t seed,
                       int random_systems = 3);

} // namespace cartan
