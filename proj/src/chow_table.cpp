#include "chowbg/chow_table.hpp"

#include "chowbg/errors.hpp"

namespace chowbg {

std::string to_string(const Localization& loc) {
  switch (loc.kind) {
  case Localization::Kind::Integral:
    return "integral";
  case Localization::Kind::AtPrime:
    return "at-prime(" + std::to_string(loc.prime) + ")";
  case Localization::Kind::ModP:
    return "mod-p(" + std::to_string(loc.prime) + ")";
  }
  return {};
}

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::Exact:
    return "exact";
  case Provenance::UpperBound:
    return "upper-bound";
  case Provenance::ExtrapolatedField:
    return "extrapolated-field";
  }
  return {};
}

Provenance provenance_from_string(const std::string& s) {
  if (s == "exact")
    return Provenance::Exact;
  if (s == "upper-bound")
    return Provenance::UpperBound;
  if (s == "extrapolated-field")
    return Provenance::ExtrapolatedField;
  throw DomainError("unknown provenance flag '" + s + "'");
}

const TableRow& ChowTable::row(int degree) const {
  if (degree < 0 || degree > bound)
    throw DomainError("degree " + std::to_string(degree) +
                      " outside table bound " + std::to_string(bound));
  return rows.at(static_cast<std::size_t>(degree));
}

std::string render_row(const TableRow& row) {
  std::vector<std::string> terms;
  if (row.free_rank == 1)
    terms.push_back("Z");
  else if (row.free_rank > 1)
    terms.push_back("Z^" + std::to_string(row.free_rank));
  const auto torsion = sorted_torsion(row.torsion);
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i])
      ++j;
    const std::string base = "Z/" + torsion[i].get_str();
    terms.push_back(j - i == 1 ? base
                               : "(" + base + ")^" + std::to_string(j - i));
    i = j;
  }
  if (terms.empty())
    return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i)
    out += " ⊕ " + terms[i];
  return out;
}

} // namespace chowbg
