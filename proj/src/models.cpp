#include "chowbg/models.hpp"

#include <mutex>

#include "chowbg/arith.hpp"
#include "chowbg/cyclic_power.hpp"
#include "chowbg/errors.hpp"
#include "chowbg/presentations.hpp"

namespace chowbg {

namespace {

struct Model {
  GradedAbelianGroup group;
  std::set<Provenance> flags;
};

std::string prime_str(std::int64_t p) { return std::to_string(p); }

void require_char_coprime(const FieldDescriptor& k, std::int64_t order,
                          const GroupExpr& g) {
  if (k.characteristic != 0 && order % k.characteristic == 0)
    throw UnsupportedError("characteristic of " + k.name + " divides the order of " +
                           to_string(g));
}

// Z[x]/(n x): Z in degree 0, Z/n in every positive degree.
GradedAbelianGroup cyclic_group_model(std::int64_t n, int bound) {
  std::vector<CyclicSummand> s{{0, 0, Label::generator("1")}};
  if (n > 1)
    for (int d = 1; d <= bound; ++d)
      s.push_back({static_cast<long>(n), d,
                   Label::generator("x^" + std::to_string(d))});
  return normalize(GradedAbelianGroup::codim(bound, std::move(s)));
}

GradedAbelianGroup presentation_model(const GroupExpr& g, int bound) {
  return from_table(
      additive_table_from_presentation(catalog_presentation(g), bound), bound);
}

// Groups whose classifying spaces are approximated by varieties cut into
// open subsets of affine spaces with split-injective cycle maps, which is
// what the cyclic-power functor needs.
bool admits_cyclic_power(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  switch (g.kind) {
  case K::Trivial:
  case K::Cyclic:
  case K::FiniteAbelian:
  case K::Gm:
  case K::GL:
    return true;
  case K::Wreath:
    return admits_cyclic_power(g.children[0]);
  case K::Product:
    return admits_cyclic_power(g.children[0]) &&
           admits_cyclic_power(g.children[1]);
  default:
    return false;
  }
}

void require_mu_p(const FieldDescriptor& k, std::int64_t p) {
  if (k.characteristic == p)
    throw UnsupportedError("wreath product at p = " + prime_str(p) +
                           " over a field of characteristic " + prime_str(p));
  if (!contains_roots_of_unity(k, p))
    throw UnsupportedError("wreath products at p = " + prime_str(p) +
                           " are only computed over fields containing mu_" +
                           prime_str(p) + "; " + k.name + " does not");
}

Model symmetric_local_model(std::int64_t n, std::int64_t p,
                            const FieldDescriptor& k, int bound) {
  if (!arith::is_prime(p))
    throw DomainError(prime_str(p) + " is not prime");
  if (n < 1)
    throw DomainError("S_n needs n >= 1");
  if (k.characteristic == p)
    throw UnsupportedError("CH*(BS_n)_(p) over a field of characteristic p");
  if (n < p)
    return {GradedAbelianGroup::point(bound), {Provenance::Exact}};
  if (n >= 2 * p)
    throw UnsupportedError(
        "CH*(BS_" + std::to_string(n) + ")_(" + prime_str(p) +
        ") needs stable elements for a Sylow subgroup larger than Z/" +
        prime_str(p) + "; only n < 2p is computed");
  // Sylow subgroup Z/p with Weyl group (Z/p)^*: invariants of Z/p[x] under
  // scalar multiplication are the degrees divisible by p - 1.
  return {keep_degrees_divisible_by(cyclic_group_model(p, bound), p - 1),
          {Provenance::Exact}};
}

Model integral_symmetric_model(std::int64_t n, int bound,
                               const FieldDescriptor& k) {
  if (n < 1)
    throw DomainError("S_n needs n >= 1");
  if (n > 3)
    throw UnsupportedError("integral CH*(BS_" + std::to_string(n) +
                           ") needs the 2-local part for a dihedral Sylow "
                           "subgroup; only n <= 3 is computed integrally");
  std::vector<CyclicSummand> s{{0, 0, Label::generator("1")}};
  for (std::int64_t p = 2; p <= n; ++p) {
    if (!arith::is_prime(p))
      continue;
    const auto local = symmetric_local_model(n, p, k, bound);
    for (const auto& x : local.group.summands())
      if (x.degree > 0)
        s.push_back(x);
  }
  return {normalize(GradedAbelianGroup::codim(bound, std::move(s))),
          {Provenance::Exact}};
}

Model wreath_model(std::int64_t p, const Model& inner) {
  if (!inner.flags.contains(Provenance::Exact) ||
      inner.flags.contains(Provenance::UpperBound) ||
      inner.flags.contains(Provenance::ExtrapolatedField))
    throw UnsupportedError("wreath product needs an exact inner table");
  return {cyclic_power_codim(normalize(inner.group), p), {Provenance::Exact}};
}

Model integral_model(const GroupExpr& g, const FieldDescriptor& k, int bound,
                     bool top_level) {
  using K = GroupExpr::Kind;
  switch (g.kind) {
  case K::Trivial:
    return {GradedAbelianGroup::point(bound), {Provenance::Exact}};
  case K::Cyclic:
  case K::FiniteAbelian: {
    if (g.params.size() == 1) {
      const auto n = g.params.front();
      require_char_coprime(k, n, g);
      if (contains_roots_of_unity(k, n))
        return {cyclic_group_model(n, bound), {Provenance::Exact}};
      if (top_level && arith::is_prime(n)) {
        const auto t = cyclotomic_order(k, n);
        Model m{keep_degrees_divisible_by(cyclic_group_model(n, bound), t),
                {Provenance::Exact}};
        if (!cyclotomic_descent_proved(k, n))
          m.flags.insert(Provenance::ExtrapolatedField);
        return m;
      }
      throw UnsupportedError(to_string(g) + " over " + k.name +
                             ": the field lacks mu_" + std::to_string(n) +
                             " and only a bare Z/p descends by invariants");
    }
    auto acc = GradedAbelianGroup::point(bound);
    for (auto n : g.params) {
      require_char_coprime(k, n, g);
      if (!contains_roots_of_unity(k, n))
        throw UnsupportedError(to_string(g) + " over " + k.name +
                               ": the field lacks mu_" + std::to_string(n));
      acc = tensor(acc, cyclic_group_model(n, bound));
    }
    return {acc, {Provenance::Exact}};
  }
  case K::Gm:
  case K::GL:
  case K::Sp:
    return {presentation_model(g, bound), {Provenance::Exact}};
  case K::O:
  case K::SO:
    if (k.characteristic == 2)
      throw UnsupportedError("orthogonal groups in characteristic 2");
    return {presentation_model(g, bound), {Provenance::Exact}};
  case K::G2:
    throw UnsupportedError(
        "CH*BG2 is only known to be generated by c1..c7; no table");
  case K::Symmetric:
    return integral_symmetric_model(g.param(), bound, k);
  case K::Wreath: {
    const auto p = g.param();
    require_mu_p(k, p);
    if (!admits_cyclic_power(g.children[0]))
      throw UnsupportedError("wreath products are computed only over "
                             "abelian, GL and iterated wreath factors, not " +
                             to_string(g.children[0]));
    return wreath_model(p, integral_model(g.children[0], k, bound, false));
  }
  case K::Product: {
    auto a = integral_model(g.children[0], k, bound, false);
    auto b = integral_model(g.children[1], k, bound, false);
    Model m{tensor(a.group, b.group), a.flags};
    m.flags.insert(b.flags.begin(), b.flags.end());
    return m;
  }
  }
  throw UnsupportedError("unknown group node");
}

Model local_model(const GroupExpr& g, const FieldDescriptor& k, int bound,
                  std::int64_t p, bool top_level) {
  switch (g.kind) {
  case GroupExpr::Kind::Symmetric:
    return symmetric_local_model(g.param(), p, k, bound);
  case GroupExpr::Kind::Product: {
    auto a = local_model(g.children[0], k, bound, p, false);
    auto b = local_model(g.children[1], k, bound, p, false);
    Model m{tensor(a.group, b.group), a.flags};
    m.flags.insert(b.flags.begin(), b.flags.end());
    return m;
  }
  default: {
    auto m = integral_model(g, k, bound, top_level);
    m.group = localize(m.group, p);
    return m;
  }
  }
}

// One Z/p per F_p-dimension.
GradedAbelianGroup reduce_mod_p(const GradedAbelianGroup& a, std::int64_t p) {
  std::vector<CyclicSummand> out;
  for (const auto& s : a.summands())
    if (s.order == 0 || mpz_divisible_ui_p(s.order.get_mpz_t(),
                                           static_cast<unsigned long>(p)))
      out.push_back({static_cast<long>(p), s.degree, s.label});
  return normalize(GradedAbelianGroup::codim(a.valid_through(), std::move(out)));
}

ChowTable make_table(const GroupExpr& g, const FieldDescriptor& k,
                     Localization loc, const Model& m) {
  ChowTable t;
  t.group = g;
  t.field = k;
  t.localization = loc;
  t.bound = m.group.valid_through();
  t.rows = to_table(m.group);
  t.provenance = m.flags;
  return t;
}

void require_bound(int bound) {
  if (bound < 0)
    throw DomainError("bound must be nonnegative");
}

} // namespace

ChowTable chow_model(const GroupExpr& g, const FieldDescriptor& k, int bound,
                     Localization loc) {
  require_bound(bound);
  switch (loc.kind) {
  case Localization::Kind::Integral:
    return make_table(g, k, loc, integral_model(g, k, bound, true));
  case Localization::Kind::AtPrime:
  case Localization::Kind::ModP: {
    if (!arith::is_prime(loc.prime))
      throw DomainError(prime_str(loc.prime) + " is not prime");
    auto m = local_model(g, k, bound, loc.prime, true);
    if (loc.kind == Localization::Kind::ModP)
      m.group = reduce_mod_p(m.group, loc.prime);
    return make_table(g, k, loc, m);
  }
  }
  throw DomainError("unknown localization");
}

ChowTable chow_wreath(std::int64_t p, const ChowTable& inner) {
  if (!arith::is_prime(p))
    throw DomainError(prime_str(p) + " is not prime");
  if (inner.localization.kind != Localization::Kind::Integral)
    throw DomainError("chow_wreath needs an integral inner table");
  require_mu_p(inner.field, p);
  if (!admits_cyclic_power(inner.group))
    throw UnsupportedError("wreath products are computed only over abelian, "
                           "GL and iterated wreath factors, not " +
                           to_string(inner.group));
  Model m{from_table(inner.rows, inner.bound), inner.provenance};
  auto out = wreath_model(p, m);
  return make_table(GroupExpr::wreath(p, inner.group), inner.field,
                    Localization::integral(), out);
}

ChowTable chow_symmetric_local(std::int64_t n, std::int64_t p,
                               const FieldDescriptor& k, int bound) {
  require_bound(bound);
  return make_table(GroupExpr::symmetric(n), k, Localization::at_prime(p),
                    symmetric_local_model(n, p, k, bound));
}

ChowTable chow_symmetric_sylow_bound(std::int64_t n, std::int64_t p,
                                     int bound) {
  require_bound(bound);
  const auto k = FieldDescriptor::complex();
  const auto sylow = sylow_subgroup(sylow_profile(n, p));
  Model m = integral_model(sylow, k, bound, true);
  m.flags = {Provenance::UpperBound};
  return make_table(GroupExpr::symmetric(n), k, Localization::at_prime(p), m);
}

ChowTable chow_integral_symmetric(std::int64_t n, int bound,
                                  const FieldDescriptor& k) {
  require_bound(bound);
  return make_table(GroupExpr::symmetric(n), k, Localization::integral(),
                    integral_symmetric_model(n, bound, k));
}

ChowTable ChowModelCache::get(const GroupExpr& g, const FieldDescriptor& k,
                              int bound, Localization loc) {
  const std::string key = to_string(g) + "|" + k.name + "|" + to_string(loc) +
                          "|" + std::to_string(bound);
  {
    std::shared_lock lock(mutex_);
    if (auto it = tables_.find(key); it != tables_.end())
      return it->second;
  }
  ChowTable table = chow_model(g, k, bound, loc);
  std::unique_lock lock(mutex_);
  return tables_.emplace(key, std::move(table)).first->second;
}

std::size_t ChowModelCache::size() const {
  std::shared_lock lock(mutex_);
  return tables_.size();
}

} // namespace chowbg
