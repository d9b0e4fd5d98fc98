#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace chowbg {

/// Provenance of a cyclic summand: how it was produced from named
/// generators by tensor products and the cyclic-power operations.
/// Immutable; copies share structure.
class Label {
public:
  enum class Kind { Generator, Tensor, Gamma, Alpha };

  static Label generator(std::string name);
  static Label tensor(std::vector<Label> parts);
  static Label gamma(Label inner);
  /// alpha^j(inner); `target_degree` is the degree j of the result.
  static Label alpha(Label inner, int target_degree);

  Kind kind() const;
  const std::string& name() const;
  const std::vector<Label>& children() const;
  int target_degree() const;

  std::string to_string() const;

  friend std::strong_ordering operator<=>(const Label& a, const Label& b);
  friend bool operator==(const Label& a, const Label& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

private:
  struct Node;
  explicit Label(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// One cyclic factor Z/order placed in a single degree. order == 0 means Z.
struct CyclicSummand {
  mpz_class order;
  int degree = 0;
  Label label = Label::generator("e");

  bool is_free() const { return order == 0; }
};

/// Canonical order: degree, then order (Z first), then label.
std::strong_ordering compare(const CyclicSummand& a, const CyclicSummand& b);
bool operator==(const CyclicSummand& a, const CyclicSummand& b);

/// Grading direction. Codim groups are indexed by codimension. Dim groups
/// are indexed by dimension inside an ambient variety of dimension
/// `ambient`; an absent ambient means the stable limit, where summands are
/// recorded by codimension exactly as in Codim.
struct Grading {
  enum class Mode { Codim, Dim };
  Mode mode = Mode::Codim;
  std::optional<int> ambient;

  static Grading codim() { return {Mode::Codim, std::nullopt}; }
  static Grading dim(int ambient) { return {Mode::Dim, ambient}; }
  static Grading dim_infinite() { return {Mode::Dim, std::nullopt}; }

  bool is_codim_like() const { return mode == Mode::Codim || !ambient; }
  friend bool operator==(const Grading&, const Grading&) = default;
};

/// One row of an additive table: CH^degree = Z^free_rank plus cyclic
/// torsion of prime-power orders, sorted by (prime, exponent).
struct TableRow {
  int degree = 0;
  std::int64_t free_rank = 0;
  std::vector<mpz_class> torsion;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::vector<mpz_class> sorted_torsion(std::vector<mpz_class> torsion);

/// A finitely generated graded abelian group given as a list of cyclic
/// summands, authoritative only inside a window of degrees.
///
/// For Codim grading with bound D the window is codegrees 0..D. For Dim
/// grading with ambient d the window is dimensions d-D..d (clamped at 0).
/// Summands may not lie outside the window; queries outside it throw.
class GradedAbelianGroup {
public:
  GradedAbelianGroup(Grading grading, int valid_through,
                     std::vector<CyclicSummand> summands = {});

  static GradedAbelianGroup codim(int valid_through,
                                  std::vector<CyclicSummand> summands = {}) {
    return {Grading::codim(), valid_through, std::move(summands)};
  }
  /// Z in codegree 0: the Chow ring of a point.
  static GradedAbelianGroup point(int valid_through);

  const Grading& grading() const { return grading_; }
  int valid_through() const { return valid_through_; }
  const std::vector<CyclicSummand>& summands() const { return summands_; }

  /// Lowest and highest authoritative degree.
  int window_low() const;
  int window_high() const;
  bool in_window(int degree) const;

  /// True if every order is 0 or a prime power and the list is sorted.
  bool is_normalized() const;

  std::vector<CyclicSummand> summands_in_degree(int degree) const;

  friend bool operator==(const GradedAbelianGroup&,
                         const GradedAbelianGroup&) = default;

private:
  Grading grading_;
  int valid_through_;
  std::vector<CyclicSummand> summands_;
};

/// Splits composite orders into prime powers (CRT), drops trivial
/// summands, sorts canonically. Idempotent.
GradedAbelianGroup normalize(const GradedAbelianGroup& a);

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a,
                              const GradedAbelianGroup& b);

/// Kunneth product of Codim groups: each pair of summands of orders a, b in
/// degrees i, j gives Z/gcd(a, b) in degree i + j. No Tor term.
GradedAbelianGroup tensor(const GradedAbelianGroup& a,
                          const GradedAbelianGroup& b);

/// Keeps free summands and p-power torsion.
GradedAbelianGroup localize(const GradedAbelianGroup& a, std::int64_t p);

/// Dimension of A_degree tensor Z/p over F_p.
std::int64_t mod_p_dimension(const GradedAbelianGroup& a, std::int64_t p,
                             int degree);

/// Re-indexes a Dim group with finite ambient by codimension.
GradedAbelianGroup to_codim(const GradedAbelianGroup& a);

/// Keeps only summands whose degree is divisible by t (degree 0 always).
GradedAbelianGroup keep_degrees_divisible_by(const GradedAbelianGroup& a,
                                             std::int64_t t);

/// Per-degree rows for degrees 0..valid_through.
std::vector<TableRow> to_table(const GradedAbelianGroup& a);

/// Inverse of to_table up to labels: generators are named by degree.
GradedAbelianGroup from_table(const std::vector<TableRow>& rows, int bound);

} // namespace chowbg
