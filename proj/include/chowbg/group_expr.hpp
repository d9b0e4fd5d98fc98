#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chowbg {

/// Expression tree for the groups of the catalog.
///
/// Grammar (whitespace-insensitive):
///   expr := term { "x" term }
///   term := "1" | "Z/" int | "Gm" | "GL(" int ")" | "O(" int ")"
///         | "SO(" int ")" | "Sp(" int ")" | "G2" | "S_" int
///         | "wr(" prime "," expr ")" | "(" expr ")"
///
/// Products associate to the left. A product of two finite abelian operands
/// is folded into one FiniteAbelian node keeping the written factor order.
struct GroupExpr {
  enum class Kind {
    Trivial,
    Cyclic,        // params = {n}
    FiniteAbelian, // params = factors as written
    Gm,
    GL,        // params = {n}
    O,         // params = {n}
    SO,        // params = {n}
    Sp,        // params = {2n}, the size of the matrices
    G2,
    Symmetric, // params = {n}
    Wreath,    // params = {p}, children = {inner}
    Product,   // children = {left, right}
  };

  Kind kind = Kind::Trivial;
  std::vector<std::int64_t> params;
  std::vector<GroupExpr> children;

  static GroupExpr trivial() { return {}; }
  static GroupExpr cyclic(std::int64_t n);
  static GroupExpr finite_abelian(std::vector<std::int64_t> factors);
  static GroupExpr gm();
  static GroupExpr gl(std::int64_t n);
  static GroupExpr orthogonal(std::int64_t n);
  static GroupExpr special_orthogonal(std::int64_t n);
  static GroupExpr symplectic(std::int64_t size);
  static GroupExpr g2();
  static GroupExpr symmetric(std::int64_t n);
  static GroupExpr wreath(std::int64_t p, GroupExpr inner);
  static GroupExpr product(GroupExpr left, GroupExpr right);

  std::int64_t param() const { return params.at(0); }
  bool is_finite() const;
  bool is_finite_abelian() const {
    return kind == Kind::Cyclic || kind == Kind::FiniteAbelian;
  }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

GroupExpr parse_group_expr(std::string_view text);

/// Canonical text form; parse_group_expr(to_string(g)) == g for every g the
/// parser can produce.
std::string to_string(const GroupExpr& g);

/// Dimension as an algebraic group; finite groups have dimension 0.
std::int64_t group_dimension(const GroupExpr& g);

/// dim H - dim G for the catalog embedding of G into H, a product of
/// general linear groups: O(n), SO(n) in GL(n); Sp(2n) in GL(2n); G2 in
/// GL(7). CH*BG is generated as a CH*BH-module in degrees up to this bound.
std::int64_t generator_bound(const GroupExpr& g);

/// Shape of the p-Sylow subgroup of S_n: one wreath tower of height i per
/// unit of the base-p digit in position i.
struct SylowProfile {
  std::int64_t prime = 2;
  std::vector<unsigned> digits;  // base-p digits of n, least significant first
  std::vector<unsigned> heights; // sorted; digit d at position i gives d copies of i

  std::int64_t reconstruct() const;
};

SylowProfile sylow_profile(std::int64_t n, std::int64_t p);

/// Sylow subgroup as a group expression: product of iterated wreath towers
/// wr(p, wr(p, ... 1)), height-zero factors omitted.
GroupExpr sylow_subgroup(const SylowProfile& profile);

/// Invariant factors of the abelianization of a finite group, largest
/// first; each entry is a multiple of the next.
std::vector<std::int64_t> abelianization(const GroupExpr& g);

/// Invariant factors (largest first) of the abelian group with the given
/// cyclic factors.
std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> cyclic);

} // namespace chowbg
