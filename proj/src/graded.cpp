#include "chowbg/graded.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "chowbg/arith.hpp"
#include "chowbg/errors.hpp"

namespace chowbg {

struct Label::Node {
  Kind kind;
  std::string name;
  std::vector<Label> children;
  int target_degree = 0;
};

Label Label::generator(std::string name) {
  return Label(std::make_shared<const Node>(
      Node{Kind::Generator, std::move(name), {}, 0}));
}

Label Label::tensor(std::vector<Label> parts) {
  return Label(
      std::make_shared<const Node>(Node{Kind::Tensor, {}, std::move(parts), 0}));
}

Label Label::gamma(Label inner) {
  return Label(std::make_shared<const Node>(
      Node{Kind::Gamma, {}, {std::move(inner)}, 0}));
}

Label Label::alpha(Label inner, int target_degree) {
  return Label(std::make_shared<const Node>(
      Node{Kind::Alpha, {}, {std::move(inner)}, target_degree}));
}

Label::Kind Label::kind() const { return node_->kind; }
const std::string& Label::name() const { return node_->name; }
const std::vector<Label>& Label::children() const { return node_->children; }
int Label::target_degree() const { return node_->target_degree; }

std::string Label::to_string() const {
  switch (kind()) {
  case Kind::Generator:
    return name();
  case Kind::Tensor: {
    std::string out = "(";
    for (std::size_t i = 0; i < children().size(); ++i) {
      if (i)
        out += "*";
      out += children()[i].to_string();
    }
    return out + ")";
  }
  case Kind::Gamma:
    return "gamma(" + children().front().to_string() + ")";
  case Kind::Alpha:
    return "alpha" + std::to_string(target_degree()) + "(" +
           children().front().to_string() + ")";
  }
  return {};
}

std::strong_ordering operator<=>(const Label& a, const Label& b) {
  if (a.node_ == b.node_)
    return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0)
    return c;
  if (auto c = a.name().compare(b.name()) <=> 0; c != 0)
    return c;
  if (auto c = a.target_degree() <=> b.target_degree(); c != 0)
    return c;
  const auto& ca = a.children();
  const auto& cb = b.children();
  for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i)
    if (auto c = ca[i] <=> cb[i]; c != 0)
      return c;
  return ca.size() <=> cb.size();
}

namespace {

std::strong_ordering compare_orders(const mpz_class& a, const mpz_class& b) {
  // Z sorts before every finite order.
  if (a == 0 || b == 0)
    return (a != 0) <=> (b != 0);
  return cmp(a, b) <=> 0;
}

// (prime, exponent) key for torsion orders in tables.
bool torsion_less(const mpz_class& a, const mpz_class& b) {
  auto [pa, ea] = arith::prime_power_decompose(a);
  auto [pb, eb] = arith::prime_power_decompose(b);
  if (pa != pb)
    return pa < pb;
  return ea < eb;
}

} // namespace

std::strong_ordering compare(const CyclicSummand& a, const CyclicSummand& b) {
  if (auto c = a.degree <=> b.degree; c != 0)
    return c;
  if (auto c = compare_orders(a.order, b.order); c != 0)
    return c;
  return a.label <=> b.label;
}

bool operator==(const CyclicSummand& a, const CyclicSummand& b) {
  return compare(a, b) == std::strong_ordering::equal;
}

std::vector<mpz_class> sorted_torsion(std::vector<mpz_class> torsion) {
  std::sort(torsion.begin(), torsion.end(), torsion_less);
  return torsion;
}

GradedAbelianGroup::GradedAbelianGroup(Grading grading, int valid_through,
                                       std::vector<CyclicSummand> summands)
    : grading_(grading), valid_through_(valid_through),
      summands_(std::move(summands)) {
  if (valid_through_ < 0)
    throw DomainError("validity bound must be nonnegative");
  if (grading_.mode == Grading::Mode::Dim && grading_.ambient) {
    if (*grading_.ambient < 0)
      throw DomainError("ambient dimension must be nonnegative");
    valid_through_ = std::min(valid_through_, *grading_.ambient);
  }
  for (const auto& s : summands_) {
    if (s.order < 0)
      throw DomainError("summand order must be nonnegative");
    if (!in_window(s.degree))
      throw DomainError("summand degree " + std::to_string(s.degree) +
                        " outside authoritative window");
  }
}

GradedAbelianGroup GradedAbelianGroup::point(int valid_through) {
  return codim(valid_through, {{0, 0, Label::generator("pt")}});
}

int GradedAbelianGroup::window_low() const {
  if (grading_.is_codim_like())
    return 0;
  return *grading_.ambient - valid_through_;
}

int GradedAbelianGroup::window_high() const {
  if (grading_.is_codim_like())
    return valid_through_;
  return *grading_.ambient;
}

bool GradedAbelianGroup::in_window(int degree) const {
  return degree >= window_low() && degree <= window_high();
}

bool GradedAbelianGroup::is_normalized() const {
  for (const auto& s : summands_) {
    if (s.order == 1)
      return false;
    if (s.order != 0 && arith::prime_power_decompose(s.order).second == 0)
      return false;
  }
  return std::is_sorted(summands_.begin(), summands_.end(),
                        [](const auto& a, const auto& b) {
                          return compare(a, b) < 0;
                        });
}

std::vector<CyclicSummand>
GradedAbelianGroup::summands_in_degree(int degree) const {
  if (!in_window(degree))
    throw DomainError("degree " + std::to_string(degree) +
                      " outside authoritative window");
  std::vector<CyclicSummand> out;
  for (const auto& s : summands_)
    if (s.degree == degree)
      out.push_back(s);
  return out;
}

GradedAbelianGroup normalize(const GradedAbelianGroup& a) {
  std::vector<CyclicSummand> out;
  out.reserve(a.summands().size());
  for (const auto& s : a.summands()) {
    if (s.order == 1)
      continue;
    if (s.order == 0) {
      out.push_back(s);
      continue;
    }
    auto [p, k] = arith::prime_power_decompose(s.order);
    if (k > 0) {
      out.push_back(s);
      continue;
    }
    for (const auto& [prime, exp] : arith::factor(s.order)) {
      mpz_class q;
      mpz_pow_ui(q.get_mpz_t(), prime.get_mpz_t(), exp);
      out.push_back({q, s.degree, s.label});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return compare(x, y) < 0; });
  return {a.grading(), a.valid_through(), std::move(out)};
}

GradedAbelianGroup direct_sum(const GradedAbelianGroup& a,
                              const GradedAbelianGroup& b) {
  if (!(a.grading() == b.grading()))
    throw DomainError("direct_sum: grading mismatch");
  const int bound = std::min(a.valid_through(), b.valid_through());
  GradedAbelianGroup probe(a.grading(), bound);
  std::vector<CyclicSummand> all;
  for (const auto* g : {&a, &b})
    for (const auto& s : g->summands())
      if (probe.in_window(s.degree))
        all.push_back(s);
  return normalize({a.grading(), bound, std::move(all)});
}

GradedAbelianGroup tensor(const GradedAbelianGroup& a,
                          const GradedAbelianGroup& b) {
  if (a.grading().mode != Grading::Mode::Codim ||
      b.grading().mode != Grading::Mode::Codim)
    throw DomainError("tensor: both arguments must be codimension graded");
  const int bound = std::min(a.valid_through(), b.valid_through());
  const auto na = normalize(a);
  const auto nb = normalize(b);
  std::vector<CyclicSummand> out;
  for (const auto& x : na.summands()) {
    if (x.degree > bound)
      break;
    for (const auto& y : nb.summands()) {
      const int degree = x.degree + y.degree;
      if (degree > bound)
        break;
      mpz_class g = arith::order_gcd(x.order, y.order);
      if (g == 1)
        continue;
      out.push_back({g, degree, Label::tensor({x.label, y.label})});
    }
  }
  return normalize(GradedAbelianGroup::codim(bound, std::move(out)));
}

GradedAbelianGroup localize(const GradedAbelianGroup& a, std::int64_t p) {
  if (!arith::is_prime(p))
    throw DomainError("localize: " + std::to_string(p) + " is not prime");
  const auto n = normalize(a);
  std::vector<CyclicSummand> out;
  for (const auto& s : n.summands()) {
    if (s.order == 0 || arith::prime_power_decompose(s.order).first == p)
      out.push_back(s);
  }
  return {n.grading(), n.valid_through(), std::move(out)};
}

std::int64_t mod_p_dimension(const GradedAbelianGroup& a, std::int64_t p,
                             int degree) {
  if (!arith::is_prime(p))
    throw DomainError("mod_p_dimension: " + std::to_string(p) +
                      " is not prime");
  std::int64_t count = 0;
  for (const auto& s : a.summands_in_degree(degree)) {
    if (s.order == 0 || mpz_divisible_ui_p(s.order.get_mpz_t(),
                                           static_cast<unsigned long>(p)))
      ++count;
  }
  return count;
}

GradedAbelianGroup to_codim(const GradedAbelianGroup& a) {
  if (a.grading().is_codim_like())
    return GradedAbelianGroup::codim(a.valid_through(), a.summands());
  const int ambient = *a.grading().ambient;
  std::vector<CyclicSummand> out = a.summands();
  for (auto& s : out)
    s.degree = ambient - s.degree;
  return normalize(GradedAbelianGroup::codim(a.valid_through(), std::move(out)));
}

GradedAbelianGroup keep_degrees_divisible_by(const GradedAbelianGroup& a,
                                             std::int64_t t) {
  if (t < 1)
    throw DomainError("degree filter needs t >= 1");
  std::vector<CyclicSummand> out;
  for (const auto& s : a.summands())
    if (s.degree % t == 0)
      out.push_back(s);
  return {a.grading(), a.valid_through(), std::move(out)};
}

std::vector<TableRow> to_table(const GradedAbelianGroup& a) {
  if (!a.grading().is_codim_like())
    throw DomainError(
        "to_table: dimension-graded group with finite ambient; use to_codim");
  const auto n = normalize(a);
  std::vector<TableRow> rows(static_cast<std::size_t>(n.valid_through()) + 1);
  for (int d = 0; d <= n.valid_through(); ++d)
    rows[static_cast<std::size_t>(d)].degree = d;
  for (const auto& s : n.summands()) {
    auto& row = rows[static_cast<std::size_t>(s.degree)];
    if (s.order == 0)
      ++row.free_rank;
    else
      row.torsion.push_back(s.order);
  }
  for (auto& row : rows)
    row.torsion = sorted_torsion(std::move(row.torsion));
  return rows;
}

GradedAbelianGroup from_table(const std::vector<TableRow>& rows, int bound) {
  std::vector<CyclicSummand> out;
  for (const auto& row : rows) {
    if (row.degree > bound)
      continue;
    int k = 0;
    auto name = [&] {
      return "g" + std::to_string(row.degree) + "_" + std::to_string(k++);
    };
    for (std::int64_t i = 0; i < row.free_rank; ++i)
      out.push_back({0, row.degree, Label::generator(name())});
    for (const auto& t : row.torsion)
      out.push_back({t, row.degree, Label::generator(name())});
  }
  return normalize(GradedAbelianGroup::codim(bound, std::move(out)));
}

} // namespace chowbg
