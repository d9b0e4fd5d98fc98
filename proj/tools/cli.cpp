#include "cli.hpp"

#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chowbg/errors.hpp"
#include "chowbg/fields.hpp"
#include "chowbg/format.hpp"
#include "chowbg/graded.hpp"
#include "chowbg/group_expr.hpp"
#include "chowbg/models.hpp"
#include "chowbg/presentations.hpp"

namespace chowbg::cli {

namespace {

struct Options {
  std::string group;
  int max_degree = 10;
  std::optional<std::int64_t> prime;
  std::optional<std::int64_t> mod;
  std::optional<std::int64_t> degree;
  std::string field = "C";
  std::string format = "table";
};

bool json_format(const Options& o) { return o.format == "json"; }

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

Localization localization_of(const Options& o) {
  if (o.prime && o.mod)
    throw DomainError("--prime and --mod are mutually exclusive");
  if (o.prime)
    return Localization::at_prime(*o.prime);
  if (o.mod)
    return Localization::mod_p(*o.mod);
  return Localization::integral();
}

std::string describe(const Options& o) {
  const auto g = parse_group_expr(o.group);
  const auto k = parse_field(o.field);
  const auto table = chow_model(g, k, o.max_degree, localization_of(o));
  return json_format(o) ? dump(to_json(table)) : render_text(table);
}

std::string series(const Options& o) {
  const auto g = parse_group_expr(o.group);
  const auto k = parse_field(o.field);
  if (o.prime)
    throw DomainError("series takes --mod p, not --prime");
  std::vector<std::int64_t> coefficients;
  if (o.mod) {
    const auto table =
        chow_model(g, k, o.max_degree, Localization::at_prime(*o.mod));
    const auto graded = from_table(table.rows, table.bound);
    for (int d = 0; d <= table.bound; ++d)
      coefficients.push_back(mod_p_dimension(graded, *o.mod, d));
  } else {
    for (const auto& row : chow_model(g, k, o.max_degree).rows)
      coefficients.push_back(row.free_rank);
  }
  if (json_format(o)) {
    nlohmann::ordered_json j;
    j["schema"] = kJsonSchemaVersion;
    j["group"] = to_string(g);
    j["field"] = {{"char", k.characteristic}, {"name", k.name}};
    j["kind"] = o.mod ? "mod-p-dimension" : "free-rank";
    if (o.mod)
      j["prime"] = *o.mod;
    j["coefficients"] = coefficients;
    return dump(j);
  }
  std::ostringstream out;
  out << (o.mod ? "dim_F" + std::to_string(*o.mod) + " CH^i ⊗ Z/" +
                      std::to_string(*o.mod)
                : std::string("rank CH^i"))
      << " for " << to_string(g) << ", i = 0.." << o.max_degree << ":\n";
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    out << (i ? " " : "") << coefficients[i];
  out << "\n";
  return out.str();
}

std::string presentation(const Options& o) {
  const auto g = parse_group_expr(o.group);
  const auto p = catalog_presentation(g);
  const bool exact = p.completeness == RingPresentation::Completeness::Exact;
  if (json_format(o)) {
    nlohmann::ordered_json j;
    j["schema"] = kJsonSchemaVersion;
    j["group"] = to_string(g);
    auto gens = nlohmann::ordered_json::array();
    for (const auto& gen : p.generators)
      gens.push_back({{"name", gen.name}, {"degree", gen.degree}});
    j["generators"] = gens;
    auto rels = nlohmann::ordered_json::array();
    for (const auto& r : p.torsion_relations)
      rels.push_back({{"coefficient", r.coefficient}, {"generator", r.generator}});
    j["torsion_relations"] = rels;
    j["completeness"] = exact ? "exact" : "generators-only";
    return dump(j);
  }
  return "CH*B" + to_string(g) + " = " + to_string(p) + "\n";
}

std::string galois(const Options& o) {
  if (!o.prime || !o.degree)
    throw DomainError("galois-exponent needs --prime and --degree");
  const auto spec = galois_fixed_exponent(*o.prime, *o.degree);
  if (json_format(o)) {
    nlohmann::ordered_json j;
    j["schema"] = kJsonSchemaVersion;
    j["prime"] = spec.prime;
    j["degree"] = spec.degree;
    if (spec.is_zero())
      j["result"] = "zero";
    else
      j["result"] = {{"ker_exponent", spec.ker_exponent}};
    return dump(j);
  }
  return to_string(spec) + "\n";
}

std::string bound(const Options& o) {
  const auto g = parse_group_expr(o.group);
  const auto b = generator_bound(g);
  if (json_format(o)) {
    nlohmann::ordered_json j;
    j["schema"] = kJsonSchemaVersion;
    j["group"] = to_string(g);
    j["generator_bound"] = b;
    return dump(j);
  }
  return std::to_string(b) + "\n";
}

std::string sylow(const Options& o) {
  if (!o.prime)
    throw DomainError("sylow needs --prime");
  const auto g = parse_group_expr(o.group);
  if (g.kind != GroupExpr::Kind::Symmetric)
    throw DomainError("sylow expects a symmetric group S_n");
  const auto profile = sylow_profile(g.param(), *o.prime);
  const auto table = chow_symmetric_sylow_bound(g.param(), *o.prime, o.max_degree);
  const auto subgroup = sylow_subgroup(profile);
  if (json_format(o)) {
    nlohmann::ordered_json j;
    j["schema"] = kJsonSchemaVersion;
    j["group"] = to_string(g);
    j["prime"] = profile.prime;
    j["digits"] = profile.digits;
    j["heights"] = profile.heights;
    j["sylow_subgroup"] = to_string(subgroup);
    j["table"] = to_json(table);
    return dump(j);
  }
  std::ostringstream out;
  out << "sylow subgroup: " << to_string(subgroup) << "\n";
  out << "wreath heights:";
  for (auto h : profile.heights)
    out << " " << h;
  out << "\n" << render_text(table);
  return out.str();
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Chow rings of classifying spaces"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool with_group) {
    if (with_group)
      sub->add_option("group", o.group, "group expression, e.g. \"O(3)\"")
          ->required();
    sub->add_option("--format", o.format, "table or json")
        ->check(CLI::IsMember({"table", "json"}));
  };
  auto add_table_flags = [&](CLI::App* sub) {
    sub->add_option("--max-degree", o.max_degree, "highest codegree")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--field", o.field, "C, Qbar, Q, Q(mu_m), F_l, F_l(mu_m)");
  };

  auto* describe_cmd = app.add_subcommand("describe", "additive table of CH*BG");
  add_common(describe_cmd, true);
  add_table_flags(describe_cmd);
  describe_cmd->add_option("--prime", o.prime, "localize at p");
  describe_cmd->add_option("--mod", o.mod, "reduce mod p");

  auto* series_cmd = app.add_subcommand("series", "rank or mod-p dimension series");
  add_common(series_cmd, true);
  add_table_flags(series_cmd);
  series_cmd->add_option("--mod", o.mod, "F_p dimensions of CH* tensor Z/p");
  series_cmd->add_option("--prime", o.prime);

  auto* pres_cmd = app.add_subcommand("presentation", "ring presentation");
  add_common(pres_cmd, true);

  auto* galois_cmd =
      app.add_subcommand("galois-exponent", "Galois-fixed part over Q");
  add_common(galois_cmd, false);
  galois_cmd->add_option("--prime", o.prime)->required();
  galois_cmd->add_option("--degree", o.degree)->required();

  auto* bound_cmd = app.add_subcommand("bound", "generator degree bound");
  add_common(bound_cmd, true);

  auto* sylow_cmd = app.add_subcommand("sylow", "Sylow subgroup of S_n");
  add_common(sylow_cmd, true);
  sylow_cmd->add_option("--prime", o.prime)->required();
  sylow_cmd->add_option("--max-degree", o.max_degree)
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }

  try {
    std::string text;
    if (describe_cmd->parsed())
      text = describe(o);
    else if (series_cmd->parsed())
      text = series(o);
    else if (pres_cmd->parsed())
      text = presentation(o);
    else if (galois_cmd->parsed())
      text = galois(o);
    else if (bound_cmd->parsed())
      text = bound(o);
    else
      text = sylow(o);
    out << text;
    return kOk;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParseError;
  }
}

} // namespace chowbg::cli
