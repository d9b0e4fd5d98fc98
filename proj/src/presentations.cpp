#include "chowbg/presentations.hpp"

#include <map>
#include <numeric>
#include <set>

#include "chowbg/arith.hpp"
#include "chowbg/errors.hpp"

namespace chowbg {

void RingPresentation::validate() const {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.degree < 1)
      throw DomainError("generator " + g.name + " must have positive degree");
    if (!names.insert(g.name).second)
      throw DomainError("duplicate generator " + g.name);
  }
  for (const auto& r : torsion_relations) {
    if (r.coefficient < 2)
      throw DomainError("relation coefficient must be at least 2");
    if (!names.contains(r.generator))
      throw DomainError("relation on unknown generator " + r.generator);
  }
}

namespace {

RingPresentation chern_classes(std::int64_t from, std::int64_t to,
                               std::int64_t step, bool odd_are_2_torsion) {
  RingPresentation p;
  for (auto i = from; i <= to; i += step) {
    const std::string name = "c" + std::to_string(i);
    p.generators.push_back({name, static_cast<int>(i)});
    if (odd_are_2_torsion && i % 2 == 1)
      p.torsion_relations.push_back({2, name});
  }
  return p;
}

} // namespace

RingPresentation catalog_presentation(const GroupExpr& g) {
  using K = GroupExpr::Kind;
  switch (g.kind) {
  case K::Gm:
    return chern_classes(1, 1, 1, false);
  case K::GL:
    return chern_classes(1, g.param(), 1, false);
  case K::O:
    return chern_classes(1, g.param(), 1, true);
  case K::Sp:
    return chern_classes(2, g.param(), 2, false);
  case K::SO:
    if (g.param() % 2 == 0)
      throw UnsupportedError(
          "CH*BSO(2n) is not determined by coefficient relations; only "
          "SO(2n+1) has a known presentation here");
    return chern_classes(2, g.param(), 1, true);
  case K::G2: {
    auto p = chern_classes(1, 7, 1, false);
    p.completeness = RingPresentation::Completeness::GeneratorsOnly;
    return p;
  }
  default:
    throw UnsupportedError("no catalog presentation for " + to_string(g));
  }
}

std::vector<TableRow> additive_table_from_presentation(const RingPresentation& p,
                                                       int bound) {
  p.validate();
  if (p.completeness != RingPresentation::Completeness::Exact)
    throw UnsupportedError(
        "presentation lists generators only; relations are not known");
  if (bound < 0)
    throw DomainError("bound must be nonnegative");

  std::map<std::string, std::int64_t> coefficient;
  for (const auto& r : p.torsion_relations) {
    auto& c = coefficient[r.generator];
    c = std::gcd(c, r.coefficient);
  }

  // counts[d][order]: monomials of degree d with the given additive order
  // (0 for free). Generators are added one at a time.
  using Counts = std::vector<std::map<std::int64_t, mpz_class>>;
  Counts counts(static_cast<std::size_t>(bound) + 1);
  counts[0][0] = 1;
  for (const auto& gen : p.generators) {
    const auto it = coefficient.find(gen.name);
    const std::int64_t m = it == coefficient.end() ? 0 : it->second;
    Counts next = counts;
    for (int d = 0; d <= bound; ++d) {
      for (const auto& [order, n] : counts[static_cast<std::size_t>(d)]) {
        const std::int64_t new_order = m == 0 ? order : std::gcd(order, m);
        for (int e = 1; d + e * gen.degree <= bound; ++e)
          next[static_cast<std::size_t>(d + e * gen.degree)][new_order] += n;
      }
    }
    counts = std::move(next);
  }

  std::vector<TableRow> rows;
  for (int d = 0; d <= bound; ++d) {
    TableRow row{d, 0, {}};
    for (const auto& [order, n] : counts[static_cast<std::size_t>(d)]) {
      if (order == 0) {
        row.free_rank += n.get_si();
        continue;
      }
      if (order == 1)
        continue;
      for (const auto& [prime, exp] : arith::factor(mpz_class(static_cast<long>(order)))) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), prime.get_mpz_t(), exp);
        for (mpz_class k = 0; k < n; ++k)
          row.torsion.push_back(q);
      }
    }
    row.torsion = sorted_torsion(std::move(row.torsion));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(const RingPresentation& p) {
  std::string out = "Z[";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    if (i)
      out += ", ";
    out += p.generators[i].name;
  }
  out += "]";
  if (!p.torsion_relations.empty()) {
    out += "/(";
    for (std::size_t i = 0; i < p.torsion_relations.size(); ++i) {
      if (i)
        out += ", ";
      out += std::to_string(p.torsion_relations[i].coefficient) +
             p.torsion_relations[i].generator;
    }
    out += ")";
  }
  if (p.completeness == RingPresentation::Completeness::GeneratorsOnly)
    out += " (generators only)";
  return out;
}

} // namespace chowbg
