#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chowbg/fields.hpp"
#include "chowbg/graded.hpp"
#include "chowbg/group_expr.hpp"

namespace chowbg {

struct Localization {
  enum class Kind { Integral, AtPrime, ModP };
  Kind kind = Kind::Integral;
  std::int64_t prime = 0; // unused for Integral

  static Localization integral() { return {}; }
  static Localization at_prime(std::int64_t p) { return {Kind::AtPrime, p}; }
  static Localization mod_p(std::int64_t p) { return {Kind::ModP, p}; }

  friend auto operator<=>(const Localization&, const Localization&) = default;
};

std::string to_string(const Localization& loc);

enum class Provenance { Exact, UpperBound, ExtrapolatedField };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Additive structure of CH^i BG for i = 0..bound. For ModP tables each row
/// lists one Z/p per F_p-dimension of CH^i tensor Z/p.
struct ChowTable {
  GroupExpr group;
  FieldDescriptor field;
  Localization localization;
  int bound = 0;
  std::vector<TableRow> rows;
  std::set<Provenance> provenance;

  const TableRow& row(int degree) const;

  friend bool operator==(const ChowTable&, const ChowTable&) = default;
};

/// "Z^r + (Z/2)^a + Z/4 + ..." with the direct-sum sign; "0" when trivial.
std::string render_row(const TableRow& row);

} // namespace chowbg
