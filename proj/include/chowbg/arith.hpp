#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace chowbg {

/// Integer helpers shared by the graded and field modules.
namespace arith {

bool is_prime(std::int64_t n);
bool is_prime(const mpz_class& n);

/// Prime factorization as (prime, exponent) pairs sorted by prime.
/// Requires n >= 1; factor(1) is empty.
std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n);

/// gcd with the convention that 0 stands for an infinite cyclic group:
/// gcd(0, x) = x, gcd(0, 0) = 0.
mpz_class order_gcd(const mpz_class& a, const mpz_class& b);

/// If n = p^k with k >= 1 returns (p, k); otherwise (0, 0).
std::pair<mpz_class, unsigned> prime_power_decompose(const mpz_class& n);

/// p-adic valuation of n > 0.
unsigned valuation(std::int64_t n, std::int64_t p);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1, m >= 2.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

std::int64_t ipow(std::int64_t base, unsigned exp);

} // namespace arith
} // namespace chowbg
