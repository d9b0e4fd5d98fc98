#include <doctest.h>

#include <algorithm>

#include "chowbg/chow_table.hpp"
#include "chowbg/errors.hpp"
#include "chowbg/fields.hpp"
#include "chowbg/models.hpp"
#include "oracles.hpp"

using namespace chowbg;

TEST_CASE("field descriptors parse") {
  CHECK(parse_field("C") == FieldDescriptor::complex());
  CHECK(parse_field("Qbar").kind == FieldDescriptor::Kind::AlgebraicallyClosed);
  CHECK(parse_field("Q") == FieldDescriptor::rationals());
  auto qmu = parse_field("Q(mu_5)");
  CHECK(qmu.kind == FieldDescriptor::Kind::CyclotomicExtension);
  CHECK(qmu.adjoined == std::vector<std::int64_t>{5});
  CHECK(qmu.name == "Q(mu_5)");
  CHECK(parse_field("F_7").characteristic == 7);
  CHECK(parse_field("F_2(mu_7)").name == "F_2(mu_7)");
  CHECK_THROWS_AS(parse_field("F_6"), ParseError);
  CHECK_THROWS_AS(parse_field("R"), ParseError);
  CHECK_THROWS_AS(parse_field("Q(mu_5"), ParseError);
  CHECK_THROWS_AS(parse_field("Cx"), ParseError);
}

TEST_CASE("cyclotomic order") {
  CHECK(cyclotomic_order(FieldDescriptor::rationals(), 5) == 4);
  CHECK(cyclotomic_order(FieldDescriptor::complex(), 7) == 1);
  CHECK(cyclotomic_order(FieldDescriptor::finite(2), 7) == 3);
  CHECK(cyclotomic_order(parse_field("Q(mu_7)"), 7) == 1);
  CHECK(cyclotomic_order(parse_field("Q(mu_3)"), 7) == 6);
  CHECK(cyclotomic_order(parse_field("F_2(mu_7)"), 7) == 1);
  // F_2(mu_3) = F_4 and 4 has order 3 modulo 7
  CHECK(cyclotomic_order(parse_field("F_2(mu_3)"), 7) == 3);
  // F_3(mu_4) = F_9 and 9 = 2 has order 3 modulo 7
  CHECK(cyclotomic_order(parse_field("F_3(mu_4)"), 7) == 3);
  CHECK(cyclotomic_order(FieldDescriptor::finite(11), 5) == 1);
  CHECK(cyclotomic_order(FieldDescriptor::rationals(), 2) == 1);
  CHECK_THROWS_AS(cyclotomic_order(FieldDescriptor::finite(5), 5), DomainError);
  for (std::int64_t p : {3, 5, 7, 11, 13})
    for (std::int64_t l : {2, 3, 5, 7, 11, 13, 17, 19}) {
      if (l == p)
        continue;
      CHECK((p - 1) % cyclotomic_order(FieldDescriptor::finite(l), p) == 0);
    }
}

TEST_CASE("roots of unity") {
  CHECK(contains_roots_of_unity(FieldDescriptor::rationals(), 2));
  CHECK_FALSE(contains_roots_of_unity(FieldDescriptor::rationals(), 4));
  CHECK(contains_roots_of_unity(parse_field("Q(mu_3)"), 6));
  CHECK(contains_roots_of_unity(FieldDescriptor::finite(7), 3));
  CHECK_FALSE(contains_roots_of_unity(FieldDescriptor::finite(7), 7));
  CHECK_FALSE(contains_roots_of_unity(FieldDescriptor::finite(7), 4));
  CHECK(contains_roots_of_unity(parse_field("F_7(mu_4)"), 8));
}

TEST_CASE("galois fixed exponent") {
  CHECK(galois_fixed_exponent(5, 3).is_zero());
  CHECK(galois_fixed_exponent(5, 4).ker_exponent == 1);
  CHECK(galois_fixed_exponent(3, 6).ker_exponent == 2);
  CHECK(to_string(galois_fixed_exponent(5, 4)) == "ker 5^1");
  CHECK(to_string(galois_fixed_exponent(5, 3)) == "0");
  CHECK_THROWS_AS(galois_fixed_exponent(4, 3), DomainError);
  CHECK_THROWS_AS(galois_fixed_exponent(3, 0), DomainError);
  for (std::int64_t p : {2, 3, 5, 7})
    for (std::int64_t i = 1; i <= 50; ++i) {
      const auto spec = galois_fixed_exponent(p, i);
      CHECK(spec.is_zero() == (i % (p - 1) != 0));
      CHECK(spec.ker_exponent == oracle::galois_exponent_by_search(p, i));
    }
}

TEST_CASE("cyclotomic invariants of B(Z/p)") {
  auto table = chow_model(GroupExpr::cyclic(5), FieldDescriptor::complex(), 16);
  auto degrees_present = [](const ChowTable& t) {
    std::vector<int> out;
    for (const auto& r : t.rows)
      if (r.free_rank || !r.torsion.empty())
        out.push_back(r.degree);
    return out;
  };
  CHECK(degrees_present(apply_cyclotomic_invariants(table, 4)) ==
        oracle::invariant_degrees(5, 4, 16));
  CHECK(degrees_present(apply_cyclotomic_invariants(table, 2)) ==
        oracle::invariant_degrees(5, 2, 16));
  CHECK(apply_cyclotomic_invariants(table, 1) == table);
  CHECK_THROWS_AS(apply_cyclotomic_invariants(table, 3), DomainError);
  auto not_bzp = chow_model(GroupExpr::gl(1), FieldDescriptor::complex(), 4);
  CHECK_THROWS_AS(apply_cyclotomic_invariants(not_bzp, 1), DomainError);

  // composing with t' | t only removes rows
  auto seven = chow_model(GroupExpr::cyclic(7), FieldDescriptor::complex(), 30);
  auto by2 = degrees_present(apply_cyclotomic_invariants(seven, 2));
  auto by6 = degrees_present(apply_cyclotomic_invariants(
      apply_cyclotomic_invariants(seven, 2), 6));
  for (int d : by6)
    CHECK(std::find(by2.begin(), by2.end(), d) != by2.end());
}
