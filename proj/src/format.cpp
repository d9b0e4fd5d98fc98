#include "chowbg/format.hpp"

#include <sstream>

#include "chowbg/arith.hpp"
#include "chowbg/errors.hpp"

namespace chowbg {

namespace {

struct TorsionEntry {
  mpz_class prime;
  unsigned exponent;
  std::int64_t multiplicity;
};

std::vector<TorsionEntry> group_torsion(const std::vector<mpz_class>& torsion) {
  std::vector<TorsionEntry> out;
  for (const auto& t : sorted_torsion(torsion)) {
    auto [p, e] = arith::prime_power_decompose(t);
    if (e == 0)
      throw DomainError("torsion order " + t.get_str() + " is not a prime power");
    if (!out.empty() && out.back().prime == p && out.back().exponent == e)
      ++out.back().multiplicity;
    else
      out.push_back({p, e, 1});
  }
  return out;
}

nlohmann::ordered_json integer_json(const mpz_class& v) {
  if (v.fits_slong_p())
    return v.get_si();
  return v.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_string())
    return mpz_class(j.get<std::string>());
  return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

} // namespace

nlohmann::ordered_json to_json(const ChowTable& table) {
  nlohmann::ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["group"] = to_string(table.group);
  j["field"] = {{"char", table.field.characteristic},
                {"name", table.field.name}};
  nlohmann::ordered_json loc;
  switch (table.localization.kind) {
  case Localization::Kind::Integral:
    loc["kind"] = "integral";
    break;
  case Localization::Kind::AtPrime:
    loc["kind"] = "at-prime";
    loc["prime"] = table.localization.prime;
    break;
  case Localization::Kind::ModP:
    loc["kind"] = "mod-p";
    loc["prime"] = table.localization.prime;
    break;
  }
  j["localization"] = loc;
  j["bound"] = table.bound;
  auto degrees = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto torsion = nlohmann::ordered_json::array();
    for (const auto& e : group_torsion(row.torsion))
      torsion.push_back({{"prime", integer_json(e.prime)},
                         {"exponent", e.exponent},
                         {"multiplicity", e.multiplicity}});
    degrees.push_back({{"degree", row.degree},
                       {"free_rank", row.free_rank},
                       {"torsion", torsion}});
  }
  j["degrees"] = degrees;
  auto flags = nlohmann::ordered_json::array();
  for (auto p : table.provenance)
    flags.push_back(to_string(p));
  j["provenance"] = flags;
  return j;
}

ChowTable table_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<int>() != kJsonSchemaVersion)
      throw DomainError("unsupported table schema version");
    ChowTable t;
    t.group = parse_group_expr(j.at("group").get<std::string>());
    t.field = parse_field(j.at("field").at("name").get<std::string>());
    if (t.field.characteristic != j.at("field").at("char").get<std::int64_t>())
      throw DomainError("field characteristic does not match its name");
    const auto kind = j.at("localization").at("kind").get<std::string>();
    if (kind == "integral")
      t.localization = Localization::integral();
    else if (kind == "at-prime")
      t.localization =
          Localization::at_prime(j.at("localization").at("prime").get<std::int64_t>());
    else if (kind == "mod-p")
      t.localization =
          Localization::mod_p(j.at("localization").at("prime").get<std::int64_t>());
    else
      throw DomainError("unknown localization '" + kind + "'");
    t.bound = j.at("bound").get<int>();
    for (const auto& d : j.at("degrees")) {
      TableRow row;
      row.degree = d.at("degree").get<int>();
      row.free_rank = d.at("free_rank").get<std::int64_t>();
      for (const auto& e : d.at("torsion")) {
        mpz_class q;
        const mpz_class p = integer_from_json(e.at("prime"));
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), e.at("exponent").get<unsigned>());
        for (std::int64_t k = 0; k < e.at("multiplicity").get<std::int64_t>(); ++k)
          row.torsion.push_back(q);
      }
      row.torsion = sorted_torsion(std::move(row.torsion));
      t.rows.push_back(std::move(row));
    }
    for (const auto& f : j.at("provenance"))
      t.provenance.insert(provenance_from_string(f.get<std::string>()));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed table JSON: ") + e.what());
  }
}

std::string render_text(const ChowTable& table) {
  std::ostringstream out;
  out << "group: " << to_string(table.group) << "\n";
  out << "field: " << table.field.name << " (char " << table.field.characteristic
      << ")\n";
  out << "localization: " << to_string(table.localization) << "\n";
  out << "bound: " << table.bound << "\n";
  out << "provenance:";
  for (auto p : table.provenance)
    out << " " << to_string(p);
  out << "\n";
  for (const auto& row : table.rows)
    out << "CH^" << row.degree << " = " << render_row(row) << "\n";
  return out.str();
}

} // namespace chowbg
