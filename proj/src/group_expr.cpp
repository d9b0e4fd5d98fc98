#include "chowbg/group_expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>

#include "chowbg/arith.hpp"
#include "chowbg/errors.hpp"

namespace chowbg {

namespace {

void require_positive(std::int64_t n, const char* what) {
  if (n < 1)
    throw DomainError(std::string(what) + ": argument must be at least 1");
}

} // namespace

GroupExpr GroupExpr::cyclic(std::int64_t n) {
  require_positive(n, "Z/n");
  return {Kind::Cyclic, {n}, {}};
}

GroupExpr GroupExpr::finite_abelian(std::vector<std::int64_t> factors) {
  if (factors.empty())
    throw DomainError("finite abelian group needs at least one factor");
  for (auto f : factors)
    require_positive(f, "Z/n");
  return {Kind::FiniteAbelian, std::move(factors), {}};
}

GroupExpr GroupExpr::gm() { return {Kind::Gm, {}, {}}; }

GroupExpr GroupExpr::gl(std::int64_t n) {
  require_positive(n, "GL");
  return {Kind::GL, {n}, {}};
}

GroupExpr GroupExpr::orthogonal(std::int64_t n) {
  require_positive(n, "O");
  return {Kind::O, {n}, {}};
}

GroupExpr GroupExpr::special_orthogonal(std::int64_t n) {
  require_positive(n, "SO");
  return {Kind::SO, {n}, {}};
}

GroupExpr GroupExpr::symplectic(std::int64_t size) {
  require_positive(size, "Sp");
  if (size % 2 != 0)
    throw DomainError("Sp(" + std::to_string(size) + "): size must be even");
  return {Kind::Sp, {size}, {}};
}

GroupExpr GroupExpr::g2() { return {Kind::G2, {}, {}}; }

GroupExpr GroupExpr::symmetric(std::int64_t n) {
  require_positive(n, "S_n");
  return {Kind::Symmetric, {n}, {}};
}

GroupExpr GroupExpr::wreath(std::int64_t p, GroupExpr inner) {
  if (!arith::is_prime(p))
    throw DomainError("wr(" + std::to_string(p) + ", ...): p must be prime");
  return {Kind::Wreath, {p}, {std::move(inner)}};
}

GroupExpr GroupExpr::product(GroupExpr left, GroupExpr right) {
  return {Kind::Product, {}, {std::move(left), std::move(right)}};
}

bool GroupExpr::is_finite() const {
  switch (kind) {
  case Kind::Trivial:
  case Kind::Cyclic:
  case Kind::FiniteAbelian:
  case Kind::Symmetric:
    return true;
  case Kind::Wreath:
    return children[0].is_finite();
  case Kind::Product:
    return children[0].is_finite() && children[1].is_finite();
  default:
    return false;
  }
}

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr g = expr();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected trailing input");
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token))
      fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const int digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::int64_t>::max() - digit) / 10) {
        pos_ = start;
        fail("integer too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start)
      fail("expected integer");
    return value;
  }

  // Runs a node constructor, reporting domain errors at `at`.
  template <class F>
  GroupExpr build(std::size_t at, F&& make) {
    try {
      return make();
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at);
    }
  }

  GroupExpr expr() {
    GroupExpr left = term();
    for (;;) {
      skip_ws();
      // "x" is the product sign; no term starts with 'x'.
      if (pos_ < text_.size() && text_[pos_] == 'x') {
        ++pos_;
        GroupExpr right = term();
        left = combine(std::move(left), std::move(right));
      } else {
        return left;
      }
    }
  }

  static GroupExpr combine(GroupExpr left, GroupExpr right) {
    if (left.is_finite_abelian() && right.is_finite_abelian()) {
      auto factors = left.params;
      factors.insert(factors.end(), right.params.begin(), right.params.end());
      return GroupExpr::finite_abelian(std::move(factors));
    }
    return GroupExpr::product(std::move(left), std::move(right));
  }

  std::int64_t parenthesized_int() {
    expect("(");
    auto n = integer();
    expect(")");
    return n;
  }

  GroupExpr term() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept("Z/")) {
      auto n = integer();
      return build(at, [&] { return GroupExpr::cyclic(n); });
    }
    if (accept("Gm"))
      return GroupExpr::gm();
    if (accept("GL")) {
      auto n = parenthesized_int();
      return build(at, [&] { return GroupExpr::gl(n); });
    }
    if (accept("G2"))
      return GroupExpr::g2();
    if (accept("O")) {
      auto n = parenthesized_int();
      return build(at, [&] { return GroupExpr::orthogonal(n); });
    }
    if (accept("SO")) {
      auto n = parenthesized_int();
      return build(at, [&] { return GroupExpr::special_orthogonal(n); });
    }
    if (accept("Sp")) {
      auto n = parenthesized_int();
      return build(at, [&] { return GroupExpr::symplectic(n); });
    }
    if (accept("S_")) {
      auto n = integer();
      return build(at, [&] { return GroupExpr::symmetric(n); });
    }
    if (accept("wr")) {
      expect("(");
      skip_ws();
      const std::size_t prime_at = pos_;
      auto p = integer();
      if (!arith::is_prime(p)) {
        pos_ = prime_at;
        fail("wreath index " + std::to_string(p) + " is not prime");
      }
      expect(",");
      GroupExpr inner = expr();
      expect(")");
      return GroupExpr::wreath(p, std::move(inner));
    }
    if (accept("(")) {
      GroupExpr g = expr();
      expect(")");
      return g;
    }
    if (accept("1"))
      return GroupExpr::trivial();
    fail("expected a group term");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool needs_parens_as_right_operand(const GroupExpr& g) {
  return g.kind == GroupExpr::Kind::Product ||
         g.kind == GroupExpr::Kind::FiniteAbelian;
}

} // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  auto call = [&](const char* name) {
    return std::string(name) + "(" + std::to_string(g.param()) + ")";
  };
  switch (g.kind) {
  case K::Trivial:
    return "1";
  case K::Cyclic:
    return "Z/" + std::to_string(g.param());
  case K::FiniteAbelian: {
    std::string out;
    for (std::size_t i = 0; i < g.params.size(); ++i) {
      if (i)
        out += " x ";
      out += "Z/" + std::to_string(g.params[i]);
    }
    return out;
  }
  case K::Gm:
    return "Gm";
  case K::GL:
    return call("GL");
  case K::O:
    return call("O");
  case K::SO:
    return call("SO");
  case K::Sp:
    return call("Sp");
  case K::G2:
    return "G2";
  case K::Symmetric:
    return "S_" + std::to_string(g.param());
  case K::Wreath:
    return "wr(" + std::to_string(g.param()) + ", " +
           to_string(g.children[0]) + ")";
  case K::Product: {
    const auto& l = g.children[0];
    const auto& r = g.children[1];
    std::string right = to_string(r);
    if (needs_parens_as_right_operand(r))
      right = "(" + right + ")";
    return to_string(l) + " x " + right;
  }
  }
  return {};
}

std::int64_t group_dimension(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  switch (g.kind) {
  case K::Gm:
    return 1;
  case K::GL:
    return g.param() * g.param();
  case K::O:
  case K::SO:
    return g.param() * (g.param() - 1) / 2;
  case K::Sp: {
    const auto n = g.param() / 2;
    return n * (2 * n + 1);
  }
  case K::G2:
    return 14;
  case K::Wreath:
    return g.param() * group_dimension(g.children[0]);
  case K::Product:
    return group_dimension(g.children[0]) + group_dimension(g.children[1]);
  default:
    return 0;
  }
}

std::int64_t generator_bound(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  switch (g.kind) {
  case K::Gm:
  case K::GL:
    return 0;
  case K::O:
  case K::SO:
    return g.param() * g.param() - group_dimension(g);
  case K::Sp:
    return g.param() * g.param() - group_dimension(g);
  case K::G2:
    return 49 - group_dimension(g);
  case K::Product:
    return generator_bound(g.children[0]) + generator_bound(g.children[1]);
  default:
    throw UnsupportedError("generator bound needs an embedding of " +
                           to_string(g) + " into general linear groups");
  }
}

std::int64_t SylowProfile::reconstruct() const {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < digits.size(); ++i)
    n += static_cast<std::int64_t>(digits[i]) *
         arith::ipow(prime, static_cast<unsigned>(i));
  return n;
}

SylowProfile sylow_profile(std::int64_t n, std::int64_t p) {
  if (n < 1)
    throw DomainError("sylow_profile: n must be at least 1");
  if (!arith::is_prime(p))
    throw DomainError("sylow_profile: " + std::to_string(p) + " is not prime");
  SylowProfile out;
  out.prime = p;
  unsigned position = 0;
  for (std::int64_t rest = n; rest > 0; rest /= p, ++position) {
    const auto digit = static_cast<unsigned>(rest % p);
    out.digits.push_back(digit);
    for (unsigned k = 0; k < digit; ++k)
      out.heights.push_back(position);
  }
  return out;
}

GroupExpr sylow_subgroup(const SylowProfile& profile) {
  std::optional<GroupExpr> acc;
  for (unsigned h : profile.heights) {
    if (h == 0)
      continue;
    GroupExpr tower = GroupExpr::trivial();
    for (unsigned k = 0; k < h; ++k)
      tower = GroupExpr::wreath(profile.prime, std::move(tower));
    acc = acc ? GroupExpr::product(std::move(*acc), std::move(tower))
              : std::move(tower);
  }
  return acc ? *acc : GroupExpr::trivial();
}

std::vector<std::int64_t> invariant_factors(std::vector<std::int64_t> cyclic) {
  // Primary decomposition, then recombine the largest powers of each prime.
  std::map<std::int64_t, std::vector<std::int64_t>> by_prime;
  for (auto c : cyclic) {
    if (c < 1)
      throw DomainError("invariant_factors: orders must be positive");
    for (const auto& [p, e] : arith::factor(mpz_class(static_cast<long>(c))))
      by_prime[p.get_si()].push_back(arith::ipow(p.get_si(), e));
  }
  std::size_t length = 0;
  for (auto& [p, powers] : by_prime) {
    std::sort(powers.begin(), powers.end(), std::greater<>());
    length = std::max(length, powers.size());
  }
  std::vector<std::int64_t> out(length, 1);
  for (const auto& [p, powers] : by_prime)
    for (std::size_t i = 0; i < powers.size(); ++i)
      out[i] *= powers[i];
  return out;
}

std::vector<std::int64_t> abelianization(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  std::vector<std::int64_t> factors;
  switch (g.kind) {
  case K::Trivial:
    return {};
  case K::Cyclic:
  case K::FiniteAbelian:
    factors = g.params;
    break;
  case K::Symmetric:
    if (g.param() >= 2)
      factors = {2};
    break;
  case K::Wreath:
    // (G^p x| Z/p)^ab = Z/p x G^ab
    factors = abelianization(g.children[0]);
    factors.push_back(g.param());
    break;
  case K::Product:
    factors = abelianization(g.children[0]);
    for (auto f : abelianization(g.children[1]))
      factors.push_back(f);
    break;
  default:
    throw DomainError("abelianization: " + to_string(g) + " is not finite");
  }
  return invariant_factors(std::move(factors));
}

} // namespace chowbg
