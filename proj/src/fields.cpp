#include "chowbg/fields.hpp"

#include <cctype>
#include <numeric>

#include "chowbg/arith.hpp"
#include "chowbg/chow_table.hpp"
#include "chowbg/errors.hpp"

namespace chowbg {

FieldDescriptor FieldDescriptor::complex() {
  return {0, Kind::AlgebraicallyClosed, {}, "C"};
}

FieldDescriptor FieldDescriptor::algebraic_closure_of_q() {
  return {0, Kind::AlgebraicallyClosed, {}, "Qbar"};
}

FieldDescriptor FieldDescriptor::rationals() {
  return {0, Kind::PrimeField, {}, "Q"};
}

FieldDescriptor FieldDescriptor::finite(std::int64_t l) {
  if (!arith::is_prime(l))
    throw DomainError("F_" + std::to_string(l) + ": l must be prime");
  return {l, Kind::PrimeField, {}, "F_" + std::to_string(l)};
}

FieldDescriptor FieldDescriptor::cyclotomic(std::int64_t l, std::int64_t m) {
  if (m < 1)
    throw DomainError("mu_m needs m >= 1");
  FieldDescriptor base = l == 0 ? rationals() : finite(l);
  base.kind = Kind::CyclotomicExtension;
  base.adjoined = {m};
  base.name += "(mu_" + std::to_string(m) + ")";
  return base;
}

namespace {

class FieldParser {
public:
  explicit FieldParser(std::string_view text) : text_(text) {}

  FieldDescriptor parse() {
    FieldDescriptor k;
    const std::size_t at = pos_;
    if (accept("Qbar")) {
      k = FieldDescriptor::algebraic_closure_of_q();
    } else if (accept("Q")) {
      k = cyclotomic_suffix(0);
    } else if (accept("C")) {
      k = FieldDescriptor::complex();
    } else if (accept("F_")) {
      auto l = integer();
      if (!arith::is_prime(l))
        throw ParseError("F_l needs a prime l", at);
      k = cyclotomic_suffix(l);
    } else {
      throw ParseError("unknown field descriptor", pos_);
    }
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input in field", pos_);
    return k;
  }

private:
  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::int64_t integer() {
    const std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > 1'000'000'000'000LL)
        throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_++] - '0');
    }
    if (pos_ == start)
      throw ParseError("expected integer", pos_);
    return v;
  }

  FieldDescriptor cyclotomic_suffix(std::int64_t l) {
    if (!accept("(mu_"))
      return l == 0 ? FieldDescriptor::rationals() : FieldDescriptor::finite(l);
    const std::size_t at = pos_;
    auto m = integer();
    if (m < 1)
      throw ParseError("mu_m needs m >= 1", at);
    if (!accept(")"))
      throw ParseError("expected ')'", pos_);
    return FieldDescriptor::cyclotomic(l, m);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t lcm_of(const std::vector<std::int64_t>& ms) {
  std::int64_t acc = 1;
  for (auto m : ms)
    acc = std::lcm(acc, m);
  return acc;
}

// Removes the l-part of m: mu_m in characteristic l equals mu_{m'}.
std::int64_t prime_to(std::int64_t m, std::int64_t l) {
  if (l == 0)
    return m;
  while (m % l == 0)
    m /= l;
  return m;
}

// Degree f of F_l(mu_M) over F_l.
std::int64_t residue_degree(const FieldDescriptor& k) {
  if (k.kind != FieldDescriptor::Kind::CyclotomicExtension)
    return 1;
  const auto m = prime_to(lcm_of(k.adjoined), k.characteristic);
  return m <= 2 ? 1 : arith::multiplicative_order(k.characteristic, m);
}

} // namespace

FieldDescriptor parse_field(std::string_view text) {
  return FieldParser(text).parse();
}

bool contains_roots_of_unity(const FieldDescriptor& k, std::int64_t n) {
  if (n < 1)
    throw DomainError("contains_roots_of_unity: n must be positive");
  if (n == 1)
    return true;
  if (k.characteristic != 0 && n % k.characteristic == 0)
    return false;
  switch (k.kind) {
  case FieldDescriptor::Kind::AlgebraicallyClosed:
    return true;
  case FieldDescriptor::Kind::PrimeField:
    return k.characteristic == 0 ? 2 % n == 0 : (k.characteristic - 1) % n == 0;
  case FieldDescriptor::Kind::CyclotomicExtension:
    if (k.characteristic == 0)
      return std::lcm<std::int64_t>(2, lcm_of(k.adjoined)) % n == 0;
    return residue_degree(k) % arith::multiplicative_order(k.characteristic, n) ==
           0;
  }
  return false;
}

std::int64_t cyclotomic_order(const FieldDescriptor& k, std::int64_t p) {
  if (!arith::is_prime(p))
    throw DomainError("cyclotomic_order: " + std::to_string(p) +
                      " is not prime");
  if (k.characteristic == p)
    throw DomainError("cyclotomic_order: characteristic of " + k.name +
                      " equals p = " + std::to_string(p));
  if (p == 2 || contains_roots_of_unity(k, p))
    return 1;
  if (k.characteristic == 0) {
    // Q(mu_M) with p not dividing M is linearly disjoint from Q(mu_p).
    return p - 1;
  }
  const auto order_l = arith::multiplicative_order(k.characteristic, p);
  return order_l / std::gcd(order_l, residue_degree(k));
}

bool cyclotomic_descent_proved(const FieldDescriptor& k, std::int64_t p) {
  if (k.characteristic != 0)
    return true;
  if (k.kind != FieldDescriptor::Kind::CyclotomicExtension)
    return true;
  return contains_roots_of_unity(k, p);
}

GaloisFixedSpec galois_fixed_exponent(std::int64_t p, std::int64_t i) {
  if (!arith::is_prime(p))
    throw DomainError("galois_fixed_exponent: " + std::to_string(p) +
                      " is not prime");
  if (i < 1)
    throw DomainError("galois_fixed_exponent: degree must be positive");
  GaloisFixedSpec out{p, i, 0};
  if (i % (p - 1) != 0)
    return out;
  out.ker_exponent = arith::valuation(i / (p - 1), p) + 1;
  return out;
}

std::string to_string(const GaloisFixedSpec& spec) {
  if (spec.is_zero())
    return "0";
  return "ker " + std::to_string(spec.prime) + "^" +
         std::to_string(spec.ker_exponent);
}

ChowTable apply_cyclotomic_invariants(const ChowTable& table, std::int64_t t) {
  const auto& g = table.group;
  const bool is_bzp =
      (g.kind == GroupExpr::Kind::Cyclic && arith::is_prime(g.param())) ||
      (g.kind == GroupExpr::Kind::Wreath &&
       g.children[0].kind == GroupExpr::Kind::Trivial);
  if (!is_bzp)
    throw DomainError("apply_cyclotomic_invariants: table is not of B(Z/p)");
  const std::int64_t p = g.param();
  if (t < 1 || (p - 1) % t != 0)
    throw DomainError("apply_cyclotomic_invariants: t = " + std::to_string(t) +
                      " does not divide p - 1 = " + std::to_string(p - 1));
  ChowTable out = table;
  for (auto& row : out.rows) {
    if (row.degree != 0 && row.degree % t != 0) {
      row.free_rank = 0;
      row.torsion.clear();
    }
  }
  return out;
}

} // namespace chowbg
