#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chowbg/chow_table.hpp"
#include "chowbg/group_expr.hpp"

namespace chowbg {

/// Polynomial ring on graded generators modulo relations m * g = 0.
struct RingPresentation {
  enum class Completeness { Exact, GeneratorsOnly };

  struct Generator {
    std::string name;
    int degree = 1;
    friend bool operator==(const Generator&, const Generator&) = default;
  };
  struct TorsionRelation {
    std::int64_t coefficient = 2;
    std::string generator;
    friend bool operator==(const TorsionRelation&,
                           const TorsionRelation&) = default;
  };

  std::vector<Generator> generators;
  std::vector<TorsionRelation> torsion_relations;
  Completeness completeness = Completeness::Exact;

  /// Throws DomainError on degrees < 1, coefficients < 2, duplicate or
  /// unknown generator names.
  void validate() const;

  friend bool operator==(const RingPresentation&,
                         const RingPresentation&) = default;
};

/// Presentations of CH*BG for GL(n), Gm, O(n), Sp(2n), SO(2n+1) and the
/// generators of CH*BG_2. Products, finite groups and SO(2n) are rejected.
RingPresentation catalog_presentation(const GroupExpr& g);

/// Per-degree additive structure for degrees 0..bound, by enumerating
/// monomials. A monomial is free iff it involves no torsion generator;
/// otherwise its order is the gcd of the coefficients of the torsion
/// generators it involves.
std::vector<TableRow> additive_table_from_presentation(const RingPresentation& p,
                                                       int bound);

std::string to_string(const RingPresentation& p);

} // namespace chowbg
