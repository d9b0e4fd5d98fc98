#include <doctest.h>

#include "chowbg/errors.hpp"
#include "chowbg/presentations.hpp"
#include "oracles.hpp"

using namespace chowbg;

namespace {

std::vector<oracle::Histogram> table_histograms(const std::vector<TableRow>& rows) {
  std::vector<oracle::Histogram> out;
  for (const auto& r : rows)
    out.push_back(oracle::histogram(r));
  return out;
}

// c_1..c_n with 2 c_i = 0 for i odd
std::vector<oracle::Histogram> orthogonal_oracle(int n, int bound) {
  std::vector<int> degrees;
  std::vector<std::int64_t> coefficients;
  for (int i = 1; i <= n; ++i) {
    degrees.push_back(i);
    coefficients.push_back(i % 2 ? 2 : 0);
  }
  return oracle::monomial_table(degrees, coefficients, bound);
}

std::vector<std::int64_t> ranks(const std::vector<TableRow>& rows) {
  std::vector<std::int64_t> out;
  for (const auto& r : rows)
    out.push_back(r.free_rank);
  return out;
}

} // namespace

TEST_CASE("O(n) matches monomial enumeration") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    auto rows = additive_table_from_presentation(
        catalog_presentation(GroupExpr::orthogonal(n)), 12);
    REQUIRE(rows.size() == 13);
    CHECK(table_histograms(rows) == orthogonal_oracle(n, 12));
    for (const auto& r : rows)
      for (const auto& t : r.torsion)
        CHECK(t == 2);
  }
}

TEST_CASE("O(3) spot values") {
  auto rows = additive_table_from_presentation(
      catalog_presentation(GroupExpr::orthogonal(3)), 4);
  CHECK(rows[0] == TableRow{0, 1, {}});
  CHECK(rows[1] == TableRow{1, 0, {2}});
  CHECK(rows[2] == TableRow{2, 1, {2}});
  CHECK(rows[3] == TableRow{3, 0, {2, 2, 2}});
}

TEST_CASE("GL and Sp are torsion free with the expected series") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    auto gl = additive_table_from_presentation(
        catalog_presentation(GroupExpr::gl(n)), 12);
    auto sp = additive_table_from_presentation(
        catalog_presentation(GroupExpr::symplectic(2 * n)), 12);
    std::vector<int> gl_deg, sp_deg;
    for (int i = 1; i <= n; ++i) {
      gl_deg.push_back(i);
      sp_deg.push_back(2 * i);
    }
    CHECK(ranks(gl) == oracle::hilbert_series(gl_deg, 12));
    CHECK(ranks(sp) == oracle::hilbert_series(sp_deg, 12));
    for (const auto& r : gl)
      CHECK(r.torsion.empty());
    for (const auto& r : sp)
      CHECK(r.torsion.empty());
  }
  auto gl2 = additive_table_from_presentation(catalog_presentation(GroupExpr::gl(2)), 2);
  CHECK(gl2[2].free_rank == 2);
  CHECK(catalog_presentation(GroupExpr::gm()) == catalog_presentation(GroupExpr::gl(1)));
}

TEST_CASE("SO(2n+1) generators and torsion") {
  auto p = catalog_presentation(GroupExpr::special_orthogonal(5));
  REQUIRE(p.generators.size() == 4);
  CHECK(p.generators.front().degree == 2);
  CHECK(p.generators.back().degree == 5);
  for (const auto& r : p.torsion_relations) {
    CHECK(r.coefficient == 2);
    CHECK((r.generator == "c3" || r.generator == "c5"));
  }
  CHECK(p.torsion_relations.size() == 2);
  auto rows = additive_table_from_presentation(p, 10);
  CHECK(table_histograms(rows) ==
        oracle::monomial_table({2, 3, 4, 5}, {0, 2, 0, 2}, 10));
}

TEST_CASE("rejections") {
  auto g2 = catalog_presentation(GroupExpr::g2());
  CHECK(g2.completeness == RingPresentation::Completeness::GeneratorsOnly);
  CHECK(g2.generators.size() == 7);
  CHECK_THROWS_AS(additive_table_from_presentation(g2, 4), UnsupportedError);
  CHECK_THROWS_AS(catalog_presentation(GroupExpr::special_orthogonal(6)),
                  UnsupportedError);
  CHECK_THROWS_AS(catalog_presentation(GroupExpr::symmetric(3)), UnsupportedError);
  CHECK_THROWS_AS(catalog_presentation(parse_group_expr("GL(2) x Gm")),
                  UnsupportedError);

  RingPresentation bad;
  bad.generators = {{"a", 1}, {"a", 2}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad.generators = {{"a", 0}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad.generators = {{"a", 1}};
  bad.torsion_relations = {{2, "b"}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad.torsion_relations = {{1, "a"}};
  CHECK_THROWS_AS(bad.validate(), DomainError);
}

TEST_CASE("mixed torsion orders take the gcd") {
  RingPresentation p;
  p.generators = {{"a", 1}, {"b", 1}, {"c", 2}};
  p.torsion_relations = {{4, "a"}, {6, "b"}};
  auto rows = additive_table_from_presentation(p, 6);
  CHECK(table_histograms(rows) == oracle::monomial_table({1, 1, 2}, {4, 6, 0}, 6));
}

TEST_CASE("text form") {
  auto s = to_string(catalog_presentation(GroupExpr::orthogonal(2)));
  CHECK(s.find("c1") != std::string::npos);
  CHECK(s.find("2c1") != std::string::npos);
}
