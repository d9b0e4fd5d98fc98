#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chowbg {

struct ChowTable;

/// Base field, described only through the data the Chow computations use:
/// the characteristic and which roots of unity it contains.
struct FieldDescriptor {
  enum class Kind { AlgebraicallyClosed, PrimeField, CyclotomicExtension };

  std::int64_t characteristic = 0; // 0 or a prime l
  Kind kind = Kind::AlgebraicallyClosed;
  std::vector<std::int64_t> adjoined; // m for each adjoined mu_m
  std::string name = "C";

  static FieldDescriptor complex();
  static FieldDescriptor algebraic_closure_of_q();
  static FieldDescriptor rationals();
  static FieldDescriptor finite(std::int64_t l);
  /// Q(mu_m) when l == 0, otherwise F_l(mu_m).
  static FieldDescriptor cyclotomic(std::int64_t l, std::int64_t m);

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;
};

/// Accepts "C", "Qbar", "Q", "Q(mu_m)", "F_l", "F_l(mu_m)".
FieldDescriptor parse_field(std::string_view text);

/// True if k contains all n-th roots of unity (n >= 1, char k not dividing n).
bool contains_roots_of_unity(const FieldDescriptor& k, std::int64_t n);

/// Order t of the image of the mod-p cyclotomic character of k; t divides
/// p - 1. Throws if char k = p.
std::int64_t cyclotomic_order(const FieldDescriptor& k, std::int64_t p);

/// Whether descending from a mu_p field to k is covered by the transfer
/// argument for Q, Q(mu_p) and finite fields; other descriptors are
/// extrapolations.
bool cyclotomic_descent_proved(const FieldDescriptor& k, std::int64_t p);

/// Galois-fixed part of H^{2i}(BG, Z_p(i)) over Q: zero unless (p-1) | i,
/// otherwise the kernel of p^c with c = v_p(i / (p-1)) + 1.
struct GaloisFixedSpec {
  std::int64_t prime = 2;
  std::int64_t degree = 0;
  /// 0 encodes the Zero case.
  unsigned ker_exponent = 0;

  bool is_zero() const { return ker_exponent == 0; }
  friend bool operator==(const GaloisFixedSpec&, const GaloisFixedSpec&) = default;
};

GaloisFixedSpec galois_fixed_exponent(std::int64_t p, std::int64_t i);

std::string to_string(const GaloisFixedSpec& spec);

/// Restricts a table of B(Z/p) over a field containing mu_p to the
/// invariants of a cyclotomic image of order t: (Z/p)^* acts on degree i by
/// w -> w^i, so row i survives iff t | i. Degree 0 is always kept.
/// Throws unless t divides p - 1.
ChowTable apply_cyclotomic_invariants(const ChowTable& table, std::int64_t t);

} // namespace chowbg
