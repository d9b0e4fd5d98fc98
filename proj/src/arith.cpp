#include "chowbg/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chowbg/errors.hpp"

namespace chowbg::arith {

bool is_prime(std::int64_t n) {
  if (n < 2)
    return false;
  if (n < 4)
    return true;
  if (n % 2 == 0)
    return false;
  return is_prime(mpz_class(static_cast<long>(n)));
}

bool is_prime(const mpz_class& n) {
  if (n < 2)
    return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

// Brent's variant of Pollard rho. n is odd, composite, not a prime power
// of a small prime.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const mpz_class& v) {
      mpz_class out = v * v + c;
      mpz_mod(out.get_mpz_t(), out.get_mpz_t(), n.get_mpz_t());
      return out;
    };
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i)
        y = f(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          mpz_class diff = abs(x - y);
          q = (q * diff) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        mpz_class diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n)
      return g;
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  mpz_class root;
  // Perfect powers make rho slow; peel them first.
  for (unsigned k = 2; mpz_sizeinbase(n.get_mpz_t(), 2) >= k; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::map<mpz_class, unsigned> sub;
      factor_into(root, sub);
      for (auto& [p, e] : sub)
        out[p] += e * k;
      return;
    }
  }
  mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factor(const mpz_class& n) {
  if (n < 1)
    throw DomainError("factor: argument must be positive");
  std::map<mpz_class, unsigned> acc;
  mpz_class rest = n;
  for (unsigned long p = 2; p < 10000 && rest > 1; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++acc[mpz_class(p)];
      rest /= p;
    }
    if (rest > 1 && mpz_class(p) * p > rest) {
      ++acc[rest];
      rest = 1;
    }
  }
  factor_into(rest, acc);
  return {acc.begin(), acc.end()};
}

mpz_class order_gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::pair<mpz_class, unsigned> prime_power_decompose(const mpz_class& n) {
  if (n < 2)
    return {0, 0};
  auto f = factor(n);
  if (f.size() != 1)
    return {0, 0};
  return f.front();
}

unsigned valuation(std::int64_t n, std::int64_t p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m < 2 || std::gcd(a, m) != 1)
    throw DomainError("multiplicative_order: need gcd(a, m) = 1 and m >= 2");
  const std::int64_t base = ((a % m) + m) % m;
  std::int64_t x = base;
  std::int64_t k = 1;
  while (x != 1) {
    x = static_cast<std::int64_t>((static_cast<__int128>(x) * base) % m);
    ++k;
  }
  return k;
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
  std::int64_t r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

} // namespace chowbg::arith
