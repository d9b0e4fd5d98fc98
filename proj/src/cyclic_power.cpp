#include "chowbg/cyclic_power.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "chowbg/arith.hpp"
#include "chowbg/errors.hpp"

namespace chowbg {

namespace {

struct Entry {
  int codeg;
  mpz_class order;
  Label label;
  std::size_t index; // position in normalize(a).summands()
  bool in_s;
};

void check_prime(std::int64_t p) {
  if (!arith::is_prime(p))
    throw DomainError("cyclic power: " + std::to_string(p) + " is not prime");
}

void check_normalized(const GradedAbelianGroup& a) {
  if (!a.is_normalized())
    throw DomainError("cyclic power: input must be normalized");
}

bool is_p_primary(const mpz_class& order, std::int64_t p) {
  if (order == 0)
    return true;
  return arith::prime_power_decompose(order).first == p;
}

// Summands re-indexed by codimension. `ambient` is empty in the stable limit.
std::vector<Entry> entries_of(const GradedAbelianGroup& a, std::int64_t p,
                              std::optional<int> ambient) {
  std::vector<Entry> out;
  const auto& s = a.summands();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int codeg = ambient ? *ambient - s[i].degree : s[i].degree;
    const bool positive_dim = !ambient || s[i].degree > 0;
    out.push_back({codeg, s[i].order, s[i].label, i,
                   positive_dim && is_p_primary(s[i].order, p)});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Entry& x, const Entry& y) { return x.codeg < y.codeg; });
  return out;
}

bool is_least_rotation(const std::vector<std::size_t>& t) {
  const std::size_t n = t.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto a = t[(k + r) % n];
      const auto b = t[k];
      if (a < b)
        return false;
      if (a > b)
        break;
    }
  }
  return true;
}

// Visits every orbit representative whose total codegree is <= bound.
template <class Visit>
void for_each_orbit(const std::vector<Entry>& entries, std::int64_t p,
                    std::int64_t bound, Visit&& visit) {
  if (entries.empty())
    return;
  const auto width = static_cast<std::size_t>(p);
  const std::int64_t min_codeg = entries.front().codeg;
  std::vector<std::size_t> pos(width);   // positions into entries
  std::vector<std::size_t> tuple(width); // original indices
  auto rec = [&](auto&& self, std::size_t k, std::int64_t sum) -> void {
    if (k == width) {
      const bool constant =
          std::all_of(pos.begin(), pos.end(),
                      [&](std::size_t q) { return q == pos.front(); });
      if (constant && entries[pos.front()].in_s)
        return;
      if (!is_least_rotation(tuple))
        return;
      visit(pos);
      return;
    }
    const auto rest = static_cast<std::int64_t>(width - k - 1);
    for (std::size_t q = 0; q < entries.size(); ++q) {
      const std::int64_t next = sum + entries[q].codeg;
      if (next + rest * min_codeg > bound)
        break;
      pos[k] = q;
      tuple[k] = entries[q].index;
      self(self, k + 1, next);
    }
  };
  rec(rec, 0, 0);
}

// Core computation in codegrees. Output degrees are codegrees relative to
// the ambient p * d (or the stable limit).
std::vector<CyclicSummand> cyclic_power_codegrees(
    const std::vector<Entry>& entries, std::int64_t p,
    std::optional<int> ambient, int out_bound) {
  std::vector<CyclicSummand> out;
  for_each_orbit(entries, p, out_bound, [&](const std::vector<std::size_t>& pos) {
    mpz_class g = entries[pos.front()].order;
    int codeg = 0;
    std::vector<Label> labels;
    for (auto q : pos) {
      g = arith::order_gcd(g, entries[q].order);
      codeg += entries[q].codeg;
      labels.push_back(entries[q].label);
    }
    if (g == 1)
      return;
    out.push_back({g, codeg, Label::tensor(std::move(labels))});
  });

  for (const auto& e : entries) {
    if (!e.in_s)
      continue;
    const std::int64_t gamma_codeg = p * e.codeg;
    if (gamma_codeg <= out_bound)
      out.push_back({e.order * static_cast<long>(p),
                     static_cast<int>(gamma_codeg), Label::gamma(e.label)});
    std::int64_t last = out_bound;
    if (ambient)
      last = std::min<std::int64_t>(last, (p - 1) * *ambient + e.codeg - 1);
    for (std::int64_t t = gamma_codeg + 1; t <= last; ++t) {
      const int target =
          ambient ? static_cast<int>(p * *ambient - t) : static_cast<int>(t);
      out.push_back({static_cast<long>(p), static_cast<int>(t),
                     Label::alpha(e.label, target)});
    }
  }
  return out;
}

} // namespace

std::vector<std::size_t> s_members(const GradedAbelianGroup& a,
                                   std::int64_t p) {
  check_prime(p);
  const auto n = normalize(a);
  std::optional<int> ambient;
  if (!n.grading().is_codim_like())
    ambient = n.grading().ambient;
  std::vector<std::size_t> out;
  for (const auto& e : entries_of(n, p, ambient))
    if (e.in_s)
      out.push_back(e.index);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>>
tensor_orbit_representatives(const GradedAbelianGroup& a, std::int64_t p) {
  check_prime(p);
  const auto n = normalize(a);
  std::optional<int> ambient;
  if (!n.grading().is_codim_like())
    ambient = n.grading().ambient;
  const auto entries = entries_of(n, p, ambient);
  std::vector<std::vector<std::size_t>> out;
  for_each_orbit(entries, p, std::numeric_limits<std::int64_t>::max() / 4,
                 [&](const std::vector<std::size_t>& pos) {
                   std::vector<std::size_t> t;
                   for (auto q : pos)
                     t.push_back(entries[q].index);
                   out.push_back(std::move(t));
                 });
  return out;
}

GradedAbelianGroup cyclic_power_dim(const GradedAbelianGroup& a,
                                    std::int64_t p) {
  check_prime(p);
  check_normalized(a);
  if (a.grading().mode != Grading::Mode::Dim || !a.grading().ambient)
    throw DomainError(
        "cyclic_power_dim: input must be dimension graded with finite ambient");
  const int d = *a.grading().ambient;
  const int out_ambient = static_cast<int>(p * d);
  const int out_bound = a.valid_through() >= d ? out_ambient : a.valid_through();
  auto summands =
      cyclic_power_codegrees(entries_of(a, p, d), p, d, out_bound);
  for (auto& s : summands)
    s.degree = out_ambient - s.degree;
  return normalize(
      {Grading::dim(out_ambient), out_bound, std::move(summands)});
}

GradedAbelianGroup cyclic_power_codim(const GradedAbelianGroup& a,
                                      std::int64_t p) {
  check_prime(p);
  check_normalized(a);
  if (!a.grading().is_codim_like())
    throw DomainError("cyclic_power_codim: input must be codimension graded");
  auto summands = cyclic_power_codegrees(entries_of(a, p, std::nullopt), p,
                                         std::nullopt, a.valid_through());
  return normalize({a.grading(), a.valid_through(), std::move(summands)});
}

std::uint64_t rotation_orbit_summary(std::uint64_t n, std::int64_t p,
                                     std::uint64_t s) {
  check_prime(p);
  if (s > n)
    throw DomainError("rotation_orbit_summary: s must not exceed n");
  unsigned __int128 power = 1;
  for (std::int64_t i = 0; i < p; ++i) {
    power *= n;
    if (power > std::numeric_limits<std::uint64_t>::max())
      throw DomainError("rotation_orbit_summary: count overflows");
  }
  const unsigned __int128 total =
      (power + static_cast<unsigned __int128>(p - 1) * n) /
      static_cast<unsigned __int128>(p);
  return static_cast<std::uint64_t>(total) - s;
}

} // namespace chowbg
