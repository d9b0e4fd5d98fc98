#include <doctest.h>

#include <thread>

#include "chowbg/errors.hpp"
#include "chowbg/models.hpp"
#include "oracles.hpp"

using namespace chowbg;

namespace {

const FieldDescriptor kC = FieldDescriptor::complex();

oracle::Histogram h(const ChowTable& t, int degree) {
  return oracle::histogram(t.row(degree));
}

// Rows of Z[x]/(p x) through the bound.
void check_cyclic_rows(const ChowTable& t, std::int64_t p) {
  CHECK(h(t, 0) == oracle::Histogram{{0, 1}});
  for (int d = 1; d <= t.bound; ++d) {
    CAPTURE(d);
    CHECK(h(t, d) == oracle::Histogram{{p, 1}});
  }
}

} // namespace

TEST_CASE("Z/p over C and over Q") {
  check_cyclic_rows(chow_model(GroupExpr::cyclic(5), kC, 12), 5);
  auto q = chow_model(GroupExpr::cyclic(5), FieldDescriptor::rationals(), 12);
  for (int d = 1; d <= 12; ++d) {
    CAPTURE(d);
    if (d % 4 == 0)
      CHECK(h(q, d) == oracle::Histogram{{5, 1}});
    else
      CHECK(h(q, d).empty());
  }
  CHECK(q.provenance == std::set<Provenance>{Provenance::Exact});
  auto qmu = chow_model(GroupExpr::cyclic(5), parse_field("Q(mu_3)"), 8);
  CHECK(qmu.provenance.contains(Provenance::ExtrapolatedField));
  CHECK_THROWS_AS(chow_model(GroupExpr::cyclic(5), FieldDescriptor::finite(5), 4),
                  UnsupportedError);
}

TEST_CASE("products follow Kunneth") {
  auto t = chow_model(parse_group_expr("Z/2 x Gm"), kC, 4);
  CHECK(h(t, 1) == oracle::Histogram{{0, 1}, {2, 1}});
  auto ab = chow_model(parse_group_expr("Z/4 x Z/2"), kC, 3);
  CHECK(h(ab, 1) == oracle::Histogram{{2, 1}, {4, 1}});
  auto coprime = chow_model(parse_group_expr("Z/2 x Z/3"), kC, 4);
  CHECK(h(coprime, 2) == oracle::Histogram{{2, 1}, {3, 1}});
  CHECK(coprime.rows == chow_model(GroupExpr::cyclic(6), kC, 4).rows);
}

TEST_CASE("classical groups") {
  auto o3 = chow_model(GroupExpr::orthogonal(3), kC, 3);
  CHECK(o3.row(2) == TableRow{2, 1, {2}});
  CHECK_THROWS_AS(chow_model(GroupExpr::orthogonal(3), FieldDescriptor::finite(2), 3),
                  UnsupportedError);
  CHECK_THROWS_AS(chow_model(GroupExpr::special_orthogonal(6), kC, 3),
                  UnsupportedError);
  CHECK_THROWS_AS(chow_model(GroupExpr::g2(), kC, 3), UnsupportedError);
  auto sp = chow_model(GroupExpr::symplectic(4), kC, 6);
  CHECK(h(sp, 4) == oracle::Histogram{{0, 2}});
}

TEST_CASE("wreath products") {
  for (std::int64_t p : {2, 3, 5}) {
    CAPTURE(p);
    auto trivial = chow_model(GroupExpr::trivial(), kC, 10);
    auto w = chow_wreath(p, trivial);
    CHECK(w.bound == 10);
    check_cyclic_rows(w, p);
    CHECK(w.group == GroupExpr::wreath(p, GroupExpr::trivial()));
  }
  auto d8 = chow_model(parse_group_expr("wr(2, Z/2)"), kC, 4);
  CHECK(h(d8, 1) == oracle::Histogram{{2, 2}});
  CHECK(h(d8, 2) == oracle::Histogram{{2, 2}, {4, 1}});
  CHECK(chow_model(parse_group_expr("wr(2, wr(2, 1))"), kC, 4) ==
        [&] {
          auto t = chow_wreath(2, chow_model(GroupExpr::wreath(2, GroupExpr::trivial()),
                                             kC, 4));
          return t;
        }());
  CHECK_THROWS_AS(chow_model(parse_group_expr("wr(3, 1)"), FieldDescriptor::rationals(), 4),
                  UnsupportedError);
  CHECK_THROWS_AS(chow_model(parse_group_expr("wr(2, O(2))"), kC, 4),
                  UnsupportedError);
  CHECK_THROWS_AS(chow_wreath(2, chow_model(GroupExpr::cyclic(2), kC, 4,
                                            Localization::at_prime(2))),
                  DomainError);
}

TEST_CASE("symmetric groups localized at p") {
  auto s3 = chow_symmetric_local(3, 3, kC, 12);
  for (int d = 1; d <= 12; ++d) {
    CAPTURE(d);
    CHECK(h(s3, d) == (d % 2 == 0 ? oracle::Histogram{{3, 1}} : oracle::Histogram{}));
  }
  auto s2 = chow_symmetric_local(2, 2, kC, 6);
  for (int d = 1; d <= 6; ++d)
    CHECK(h(s2, d) == oracle::Histogram{{2, 1}});
  auto s5 = chow_symmetric_local(5, 3, kC, 8);
  CHECK(h(s5, 4) == oracle::Histogram{{3, 1}});
  CHECK(h(s5, 3).empty());
  auto small = chow_symmetric_local(4, 5, kC, 8);
  for (int d = 1; d <= 8; ++d)
    CHECK(small.row(d).torsion.empty());
  CHECK_THROWS_AS(chow_symmetric_local(6, 3, kC, 4), UnsupportedError);
  CHECK_THROWS_AS(chow_symmetric_local(3, 3, FieldDescriptor::finite(3), 4),
                  UnsupportedError);

  for (std::int64_t p : {3, 5, 7})
    for (std::int64_t n = p; n < 2 * p; ++n) {
      auto ref = chow_symmetric_local(n, p, kC, 20).rows;
      for (const auto& r : ref)
        if (r.degree % (p - 1) != 0)
          CHECK((r.free_rank == 0 && r.torsion.empty()));
      const std::string mu = "(mu_" + std::to_string(p) + ")";
      for (const std::string& field : {"Q" + mu, "F_2" + mu, "F_11" + mu}) {
        if (field == "F_" + std::to_string(p) + mu)
          continue;
        CAPTURE(field);
        CHECK(chow_symmetric_local(n, p, parse_field(field), 20).rows == ref);
      }
    }
}

TEST_CASE("integral symmetric groups") {
  auto s3 = chow_integral_symmetric(3, 4);
  CHECK(h(s3, 1) == oracle::Histogram{{2, 1}});
  CHECK(h(s3, 2) == oracle::Histogram{{2, 1}, {3, 1}});
  CHECK(h(s3, 3) == oracle::Histogram{{2, 1}});
  CHECK(h(s3, 4) == oracle::Histogram{{2, 1}, {3, 1}});
  CHECK(render_row(s3.row(2)) == "Z/2 ⊕ Z/3");
  check_cyclic_rows(chow_integral_symmetric(2, 6), 2);
  auto s1 = chow_integral_symmetric(1, 3);
  for (int d = 1; d <= 3; ++d)
    CHECK(h(s1, d).empty());
  CHECK(chow_model(GroupExpr::symmetric(3), kC, 4) == s3);
  CHECK_THROWS_AS(chow_integral_symmetric(4, 4), UnsupportedError);
}

TEST_CASE("Sylow upper bounds") {
  auto b42 = chow_symmetric_sylow_bound(4, 2, 4);
  CHECK(b42.provenance == std::set<Provenance>{Provenance::UpperBound});
  CHECK(h(b42, 1) == oracle::Histogram{{2, 2}});
  auto b33 = chow_symmetric_sylow_bound(3, 3, 6);
  check_cyclic_rows(b33, 3);
  auto b62 = chow_symmetric_sylow_bound(6, 2, 2);
  CHECK(h(b62, 1) == oracle::Histogram{{2, 3}});

  // the local table is a summand of the Sylow table
  for (std::int64_t p : {2, 3, 5})
    for (std::int64_t n = 1; n < 2 * p; ++n) {
      auto local = chow_symmetric_local(n, p, kC, 8);
      auto upper = chow_symmetric_sylow_bound(n, p, 8);
      for (int d = 0; d <= 8; ++d) {
        auto a = h(local, d);
        auto b = h(upper, d);
        for (auto [order, mult] : a)
          CHECK(b[order] >= mult);
      }
    }
}

TEST_CASE("CH^1 is the character group") {
  const char* groups[] = {"Z/4 x Z/2", "Z/6", "wr(2, Z/2)", "wr(3, 1)",
                          "S_2", "S_3", "wr(2, wr(2, 1))", "Z/3 x Z/9"};
  for (const char* text : groups) {
    CAPTURE(text);
    auto g = parse_group_expr(text);
    auto row = chow_model(g, kC, 1).row(1);
    oracle::Histogram expected;
    for (auto n : abelianization(g))
      for (auto [order, mult] : oracle::histogram(TableRow{1, 0, {n}}))
        expected[order] += mult;
    CHECK(oracle::histogram(row) == expected);
  }
}

TEST_CASE("mod 2 series of S_2 and S_3") {
  for (std::int64_t n : {2, 3}) {
    auto t = chow_model(GroupExpr::symmetric(n), kC, 10, Localization::mod_p(2));
    for (int d = 0; d <= 10; ++d) {
      CAPTURE(d);
      CHECK(h(t, d) == oracle::Histogram{{2, 1}});
    }
  }
}

TEST_CASE("localizations") {
  auto g = parse_group_expr("Z/6 x GL(1)");
  auto at3 = chow_model(g, kC, 3, Localization::at_prime(3));
  CHECK(h(at3, 1) == oracle::Histogram{{0, 1}, {3, 1}});
  CHECK(at3.localization == Localization::at_prime(3));
  auto mod2 = chow_model(g, kC, 3, Localization::mod_p(2));
  CHECK(h(mod2, 1) == oracle::Histogram{{2, 2}});
  CHECK_THROWS_AS(chow_model(g, kC, 3, Localization::at_prime(4)), DomainError);
  CHECK_THROWS_AS(chow_model(g, kC, -1), DomainError);
}

TEST_CASE("cache is safe under concurrent use") {
  ChowModelCache cache;
  const char* groups[] = {"O(4)", "wr(2, Z/2)", "Z/5", "GL(3)"};
  std::vector<std::thread> threads;
  std::vector<std::vector<ChowTable>> seen(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int round = 0; round < 20; ++round)
        for (const char* text : groups)
          seen[static_cast<std::size_t>(t)].push_back(
              cache.get(parse_group_expr(text), kC, 6));
    });
  for (auto& th : threads)
    th.join();
  CHECK(cache.size() == 4);
  for (const auto& v : seen) {
    REQUIRE(v.size() == 80);
    for (std::size_t i = 0; i < v.size(); ++i)
      CHECK(v[i] == chow_model(parse_group_expr(groups[i % 4]), kC, 6));
  }
}
