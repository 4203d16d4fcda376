#include "cartankit/gallery.hpp"

#include <doctest.h>

using namespace cartan;

namespace {

std::string failures(const Report &r) {
  std::string out;
  for (const auto &c : r.checks)
    if (c.status != Status::Pass)
      out += c.name + " [" + c.witness + "]\n";
  return out;
}

} // namespace

TEST_CASE("c_ij pattern and p(j)") {
  CHECK(c_coeff(1, 7) == 1);
  CHECK(c_coeff(2, 6) == 1);
  CHECK(c_coeff(2, 7) == 0);
  CHECK(c_coeff(3, 7) == 1);
  CHECK(c_coeff(3, 5) == 0);
  CHECK(c_coeff(4, 12) == 1);
  CHECK(c_coeff(4, 8) == 0);
  CHECK(c_coeff(5, 3) == 0);
  // hand-computed from the supports of f_j
  std::vector<std::pair<Index, Index>> p = {{2, 1}, {3, 1}, {4, 2}, {5, 1}, {6, 2}, {7, 3}, {8, 2}, {12, 4}};
  for (auto [j, want] : p)
    CHECK(p_of(j) == want);
  CHECK(d_coeff(7, 3) == 3);
  CHECK(d_coeff(7, 2) == 1);
  CHECK(d_coeff(12, 3) == 2);
  CHECK(d_coeff(2, 5) == 2);
}

TEST_CASE("trace-corrected embedding") {
  Matrix a(2, 2);
  a(0, 0) = Scalar(3);
  a(1, 0) = Scalar(1);
  Matrix b = limit_embed(a);
  CHECK(b.rows() == 4);
  CHECK(b(0, 0) == Scalar(3));
  CHECK(b(1, 1) == Scalar(3));
  CHECK(b(2, 1) == Scalar(1));
  CHECK(b(3, 3).is_zero());
  CHECK_THROWS_AS(limit_embed(Matrix(3, 3)), std::invalid_argument);
  CHECK(limit_embed(limit_B(2)) == limit_B(3));
}

TEST_CASE("level elements") {
  LevelElement t = t_at_level(2, 2);
  CHECK(t.a.trace().is_zero());
  CHECK(embed_level(t) == t_at_level(2, 3));
  CHECK_THROWS_AS(t_at_level(3, 2), std::invalid_argument);
}

TEST_CASE("gallery entries pass") {
  for (const auto &id : gallery_ids()) {
    CAPTURE(id);
    Report r = run_gallery(id);
    CHECK_MESSAGE(r.ok(), failures(r));
    CHECK(!r.checks.empty());
  }
}

TEST_CASE("gallery sizes and rejections") {
  CHECK(so_nonabelian_example(5).ok());
  CHECK_THROWS_AS(so_nonabelian_example(4), OracleError);
  CHECK_THROWS_WITH(sl_trivial_intersection_example(5, 12), "L too small to span");
  CHECK(sl_trivial_intersection_example(5, 21).ok());
  CHECK(gl_limit_B_example(1).ok());
  CHECK_THROWS_AS(run_gallery("nope"), std::invalid_argument);
}

TEST_CASE("reports are deterministic") {
  Report a = run_gallery("splitting", 6), b = run_gallery("splitting", 6);
  CHECK(a.text() == b.text());
  CHECK(a.to_json().dump() == b.to_json().dump());
  CHECK(a.text().find("OK (") != std::string::npos);
}

TEST_CASE("theorem suite on small windows") {
  Report r = verify_theorems({Kind::GL, Kind::SL, Kind::SO, Kind::SP}, 8, 7, 2);
  CHECK_MESSAGE(r.ok(), failures(r));
  CHECK(r.checks.size() > 50);
  Report again = verify_theorems({Kind::SO}, 6, 7, 2);
  CHECK(again.text() == verify_theorems({Kind::SO}, 6, 7, 2).text());
}
