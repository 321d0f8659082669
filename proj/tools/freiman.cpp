// Command-line front end: analyze, power, hvec, borel, hibi, veronese,
// census, verify.  Exit codes: 0 success / verified, 1 verification
// mismatch, 2 usage or input error, 3 resource limit.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "freiman/census.hpp"
#include "freiman/classify.hpp"
#include "freiman/errors.hpp"
#include "freiman/families.hpp"
#include "freiman/ideal.hpp"
#include "freiman/invariants.hpp"
#include "freiman/io.hpp"
#include "freiman/version.hpp"

namespace {

using Json = nlohmann::ordered_json;
using namespace freiman;

struct CommonFlags {
  bool json = false;
};

void emit(const CommonFlags& flags, const std::string& json_text,
          const std::string& human_text) {
  std::cout << (flags.json ? json_text + "\n" : human_text);
}

AnalyzeOutput analyze_ideal(const MonomialIdeal& ideal, bool echo) {
  AnalyzeOutput out;
  out.report = delta(ideal);
  if (ideal.ambient() <= 64 && height(ideal) == ideal.ambient())
    out.classification = classify_max_height(ideal);
  if (echo) out.echo = ideal;
  return out;
}

std::vector<Exponent> parse_bounds(const std::string& text) {
  std::vector<Exponent> bounds;
  std::string entry;
  std::istringstream is(text);
  while (std::getline(is, entry, ',')) {
    try {
      size_t used = 0;
      bounds.push_back(std::stoll(entry, &used));
      if (used != entry.size()) throw std::invalid_argument(entry);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad --bounds entry '" + entry + "'");
    }
  }
  return bounds;
}

Ranges parse_ranges(const std::string& text) {
  Ranges ranges;
  std::istringstream is(text);
  std::string item;
  auto bound = [](const std::string& s) -> std::variant<std::int64_t, std::string> {
    if (!s.empty() && (std::isdigit(static_cast<unsigned char>(s[0])) || s[0] == '-'))
      return std::stoll(s);
    return s;
  };
  while (std::getline(is, item, ',')) {
    std::erase_if(item, [](unsigned char c) { return std::isspace(c); });
    auto eq = item.find('=');
    auto dots = item.find("..");
    if (eq == std::string::npos || dots == std::string::npos || dots < eq)
      throw std::invalid_argument("range syntax is name=lo..hi, got '" + item + "'");
    RangeSpec spec;
    spec.name = item.substr(0, eq);
    spec.lo = bound(item.substr(eq + 1, dots - eq - 1));
    spec.hi = bound(item.substr(dots + 2));
    ranges.push_back(spec);
  }
  return ranges;
}

int run(int argc, char** argv) {
  CLI::App app{"exact invariants of equigenerated monomial ideals"};
  app.set_version_flag("--version", std::string("freiman ") + kVersion +
                                        " (format " +
                                        std::to_string(kFormatVersion) + ")");
  app.require_subcommand(1);

  // analyze ---------------------------------------------------------------
  std::string analyze_file;
  std::optional<int> analyze_vars;
  bool analyze_echo = false;
  CommonFlags analyze_flags;
  auto* analyze_cmd = app.add_subcommand("analyze", "Freiman report for an ideal file");
  analyze_cmd->add_option("file", analyze_file, "ideal file")->required();
  analyze_cmd->add_option("--vars", analyze_vars, "ambient variable count override");
  analyze_cmd->add_flag("--echo", analyze_echo, "include the parsed generators");
  analyze_cmd->add_flag("--json", analyze_flags.json, "JSON output");

  // power -----------------------------------------------------------------
  std::string power_file;
  std::optional<int> power_vars;
  std::int64_t power_k = 0;
  CommonFlags power_flags;
  auto* power_cmd = app.add_subcommand("power", "generators of I^k");
  power_cmd->add_option("file", power_file, "ideal file")->required();
  power_cmd->add_option("-k", power_k, "exponent k >= 1")->required();
  power_cmd->add_option("--vars", power_vars, "ambient variable count override");
  power_cmd->add_flag("--json", power_flags.json, "JSON output");

  // hvec ------------------------------------------------------------------
  std::string hvec_file;
  std::optional<int> hvec_vars;
  int hvec_len = 0;
  CommonFlags hvec_flags;
  auto* hvec_cmd = app.add_subcommand("hvec", "h-vector prefix of the fiber cone");
  hvec_cmd->add_option("file", hvec_file, "ideal file")->required();
  hvec_cmd->add_option("-K", hvec_len, "prefix length K >= 0")->required();
  hvec_cmd->add_option("--vars", hvec_vars, "ambient variable count override");
  hvec_cmd->add_flag("--json", hvec_flags.json, "JSON output");

  // borel -----------------------------------------------------------------
  std::string borel_monomial;
  std::optional<int> borel_vars;
  CommonFlags borel_flags;
  auto* borel_cmd = app.add_subcommand("borel", "principal Borel ideal B(u)");
  borel_cmd->add_option("monomial", borel_monomial, "Borel generator, e.g. 'x2*x3'")
      ->required();
  borel_cmd->add_option("-n", borel_vars, "ambient variable count");
  borel_cmd->add_flag("--json", borel_flags.json, "JSON output");

  // hibi ------------------------------------------------------------------
  std::string hibi_file;
  CommonFlags hibi_flags;
  auto* hibi_cmd = app.add_subcommand("hibi", "Hibi ideal of a poset file");
  hibi_cmd->add_option("file", hibi_file, "poset file")->required();
  hibi_cmd->add_flag("--json", hibi_flags.json, "JSON output");

  // veronese ----------------------------------------------------------------
  int veronese_n = 0;
  std::int64_t veronese_d = 0;
  std::string veronese_bounds;
  CommonFlags veronese_flags;
  auto* veronese_cmd = app.add_subcommand("veronese", "ideal of Veronese type");
  veronese_cmd->add_option("-n", veronese_n, "number of variables")->required();
  veronese_cmd->add_option("-d", veronese_d, "generator degree")->required();
  veronese_cmd->add_option("--bounds", veronese_bounds,
                           "comma-separated exponent bounds (default: d,...,d)");
  veronese_cmd->add_flag("--json", veronese_flags.json, "JSON output");

  // census ------------------------------------------------------------------
  int census_n = 0;
  std::int64_t census_d = 0;
  CensusOptions census_opts;
  CommonFlags census_flags;
  auto* census_cmd = app.add_subcommand("census", "Freiman census at (n, d)");
  census_cmd->add_option("-n", census_n, "number of variables")->required();
  census_cmd->add_option("-d", census_d, "generator degree")->required();
  census_cmd->add_flag("--height-max", census_opts.filter.height_max,
                       "only ideals of height n");
  census_cmd->add_flag("--up-to-symmetry", census_opts.filter.up_to_symmetry,
                       "one representative per relabeling orbit");
  census_cmd->add_flag("--primitive-only", census_opts.filter.primitive_only,
                       "skip proper pseudo-Frobenius powers");
  census_cmd->add_option("--jobs", census_opts.jobs, "worker threads");
  census_cmd->add_option("--cap", census_opts.filter.cap, "enumeration cap");
  census_cmd->add_option("--witnesses", census_opts.max_witnesses,
                         "witnesses kept per verdict");
  census_cmd->add_flag("--json", census_flags.json, "JSON output");

  // verify ------------------------------------------------------------------
  std::string verify_id;
  std::string verify_range;
  bool verify_list = false;
  CommonFlags verify_flags;
  auto* verify_cmd = app.add_subcommand("verify", "check a classification result");
  verify_cmd->add_option("theorem", verify_id, "theorem identifier");
  verify_cmd->add_option("--range", verify_range, "overrides, e.g. i=1..6,n=i..6");
  verify_cmd->add_flag("--list", verify_list, "list known theorem identifiers");
  verify_cmd->add_flag("--json", verify_flags.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      MonomialIdeal ideal = parse_ideal_file(analyze_file, analyze_vars);
      AnalyzeOutput out = analyze_ideal(ideal, analyze_echo);
      emit(analyze_flags, to_json(out), to_human(out));
    } else if (*power_cmd) {
      MonomialIdeal ideal = parse_ideal_file(power_file, power_vars);
      MonomialIdeal result = ideal_power(ideal, power_k);
      Json j;
      j["n"] = result.ambient();
      j["k"] = power_k;
      if (auto deg = result.equigenerated_degree()) j["degree"] = *deg;
      j["mu"] = result.mu();
      Json gens = Json::array();
      for (const Monomial& g : result.generators()) gens.push_back(g.exponents());
      j["generators"] = gens;
      std::ostringstream human;
      human << "mu(I^" << power_k << ") = " << result.mu() << "\n"
            << generators_listing(result);
      emit(power_flags, j.dump(2), human.str());
    } else if (*hvec_cmd) {
      MonomialIdeal ideal = parse_ideal_file(hvec_file, hvec_vars);
      AnalyzeOutput out = analyze_ideal(ideal, false);
      out.h = h_vector_prefix(ideal, hvec_len);
      emit(hvec_flags, to_json(out), to_human(out));
    } else if (*borel_cmd) {
      Monomial u = parse_monomial(borel_monomial, borel_vars);
      MonomialIdeal ideal = principal_borel(u);
      AnalyzeOutput out = analyze_ideal(ideal, true);
      emit(borel_flags, to_json(out), to_human(out));
    } else if (*hibi_cmd) {
      Poset poset = parse_poset_file(hibi_file);
      MonomialIdeal ideal = hibi_ideal(poset);
      HibiVerdict predicate = hibi_freiman_predicate(poset);
      AnalyzeOutput out;
      out.report = delta(ideal);
      if (predicate.freiman != out.report.freiman)
        throw std::logic_error("hibi predicate disagrees with delta");
      Json j = Json::parse(to_json(out));
      j["poset"] = {{"size", poset.size()}, {"rank", poset.rank()}};
      j["predicate"] = {{"freiman", predicate.freiman},
                        {"witness", predicate.witness
                                        ? Json(*predicate.witness + 1)
                                        : Json(nullptr)}};
      std::ostringstream human;
      human << to_human(out) << "poset size " << poset.size() << ", rank "
            << poset.rank() << "\n"
            << "chain minus a point: " << (predicate.freiman ? "yes" : "no");
      if (predicate.witness) human << " (remove element " << *predicate.witness + 1 << ")";
      human << "\n";
      emit(hibi_flags, j.dump(2), human.str());
    } else if (*veronese_cmd) {
      std::vector<Exponent> bounds =
          veronese_bounds.empty()
              ? std::vector<Exponent>(static_cast<size_t>(veronese_n), veronese_d)
              : parse_bounds(veronese_bounds);
      VeroneseSpec spec(veronese_n, veronese_d, bounds);
      MonomialIdeal ideal = veronese_type(spec);
      AnalyzeOutput out = analyze_ideal(ideal, false);
      Json j = Json::parse(to_json(out));
      std::ostringstream human;
      human << to_human(out);
      const bool squarefree =
          std::all_of(bounds.begin(), bounds.end(), [](Exponent a) { return a == 1; });
      const bool top_minus_one =
          veronese_d >= 2 && std::all_of(bounds.begin(), bounds.end(),
                                         [&](Exponent a) { return a == veronese_d - 1; });
      Json formulas;
      if (squarefree) {
        BigInt mu2 = squarefree_veronese_mu2(veronese_n, static_cast<int>(veronese_d));
        formulas["mu2"] = to_int64(mu2);
        human << "mu2 formula = " << mu2 << "\n";
      }
      if (top_minus_one) {
        BigInt e = katzman_multiplicity(spec);
        formulas["multiplicity"] = to_int64(e);
        human << "multiplicity = " << e << "\n";
        if (veronese_n >= 2) {
          BigInt f = veronese_topminus1_f(veronese_n, static_cast<int>(veronese_d));
          formulas["minimal_multiplicity_gap"] = to_int64(f);
          human << "minimal multiplicity gap = " << f << "\n";
        }
      }
      if (!formulas.is_null()) j["formulas"] = formulas;
      emit(veronese_flags, j.dump(2), human.str());
    } else if (*census_cmd) {
      CensusReport report = freiman_census(census_n, census_d, census_opts);
      emit(census_flags, to_json(report), to_human(report));
    } else if (*verify_cmd) {
      if (verify_list) {
        for (const std::string& id : verify_theorem_ids()) std::cout << id << "\n";
        return 0;
      }
      if (verify_id.empty())
        throw std::invalid_argument("verify needs a theorem id (or --list)");
      Ranges ranges = verify_range.empty() ? Ranges{} : parse_ranges(verify_range);
      VerifyReport report = verify_theorem(verify_id, ranges);
      emit(verify_flags, to_json(report), to_human(report));
      return report.pass ? 0 : 1;
    }
    return 0;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
