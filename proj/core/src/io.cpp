#include "freiman/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freiman/errors.hpp"
#include "freiman/version.hpp"

namespace freiman {

namespace {

using Json = nlohmann::ordered_json;

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

std::int64_t parse_int(const std::string& token, int line, const char* what) {
  try {
    size_t used = 0;
    long long v = std::stoll(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, std::string("expected ") + what + ", got '" + token + "'");
  }
}

/// One parsed monomial, before the ambient width is known: either sparse
/// variable factors or an explicit exponent vector.
struct RawMonomial {
  int line = 0;
  std::vector<std::pair<int, Exponent>> factors;  // (0-based index, exponent)
  std::optional<std::vector<Exponent>> bracket;
};

RawMonomial parse_raw_monomial(const std::string& text, int line) {
  RawMonomial raw;
  raw.line = line;
  std::string body = strip_comment(text);

  auto first = body.find_first_not_of(" \t\r");
  if (first != std::string::npos && body[first] == '[') {
    auto close = body.find(']');
    if (close == std::string::npos)
      throw ParseError(line, "unterminated '[' exponent vector");
    if (!blank(body.substr(close + 1)))
      throw ParseError(line, "trailing text after ']'");
    std::vector<Exponent> exps;
    std::string inner = body.substr(first + 1, close - first - 1);
    std::istringstream is(inner);
    std::string entry;
    while (std::getline(is, entry, ',')) {
      std::string t;
      for (char c : entry)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
      if (t.empty()) throw ParseError(line, "empty entry in exponent vector");
      Exponent e = parse_int(t, line, "a non-negative exponent");
      if (e < 0) throw ParseError(line, "negative exponent in vector");
      exps.push_back(e);
    }
    if (exps.empty()) throw ParseError(line, "empty exponent vector");
    raw.bracket = std::move(exps);
    return raw;
  }

  // Token form: factors x<k>[^<e>] separated by '*' or whitespace.
  std::string norm = body;
  for (char& c : norm)
    if (c == '*') c = ' ';
  std::istringstream is(norm);
  std::string token;
  while (is >> token) {
    if (token[0] != 'x')
      throw ParseError(line, "expected variable token 'x<k>', got '" + token + "'");
    auto caret = token.find('^');
    std::string idx_part = token.substr(1, caret == std::string::npos
                                               ? std::string::npos
                                               : caret - 1);
    std::int64_t index = parse_int(idx_part, line, "a variable index");
    if (index < 1) throw ParseError(line, "variable indices are 1-based");
    Exponent exp = 1;
    if (caret != std::string::npos) {
      exp = parse_int(token.substr(caret + 1), line, "an exponent");
      if (exp < 1) throw ParseError(line, "exponents must be positive");
    }
    raw.factors.emplace_back(static_cast<int>(index) - 1, exp);
  }
  return raw;
}

Monomial materialize(const RawMonomial& raw, int ambient_n) {
  if (raw.bracket) {
    if (static_cast<int>(raw.bracket->size()) > ambient_n)
      throw ParseError(raw.line, "exponent vector longer than the ambient count");
    std::vector<Exponent> v = *raw.bracket;
    v.resize(static_cast<size_t>(ambient_n), 0);
    return Monomial(std::move(v));
  }
  std::vector<Exponent> v(static_cast<size_t>(ambient_n), 0);
  for (auto [idx, exp] : raw.factors) {
    if (idx >= ambient_n)
      throw ParseError(raw.line, "variable index exceeds the ambient count");
    v[static_cast<size_t>(idx)] = checked_add(v[static_cast<size_t>(idx)], exp);
  }
  return Monomial(std::move(v));
}

int infer_ambient(const std::vector<RawMonomial>& raws) {
  int n = 0;
  for (const RawMonomial& raw : raws) {
    if (raw.bracket)
      n = std::max(n, static_cast<int>(raw.bracket->size()));
    else
      for (auto [idx, exp] : raw.factors) n = std::max(n, idx + 1);
  }
  return n;
}

}  // namespace

Monomial parse_monomial(const std::string& text, std::optional<int> ambient_n) {
  RawMonomial raw = parse_raw_monomial(text, 1);
  if (!raw.bracket && raw.factors.empty())
    throw ParseError(1, "empty monomial");
  const int n = ambient_n.value_or(infer_ambient({raw}));
  if (n < 1) throw ParseError(1, "no variables");
  return materialize(raw, n);
}

MonomialIdeal parse_ideal(std::istream& in, std::optional<int> ambient_n) {
  std::vector<RawMonomial> raws;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(strip_comment(line))) continue;
    raws.push_back(parse_raw_monomial(line, line_no));
  }
  if (raws.empty()) throw ParseError(line_no, "no generators in input");
  const int n = ambient_n.value_or(infer_ambient(raws));
  if (n < 1) throw ParseError(1, "no variables in input");
  std::vector<Monomial> gens;
  gens.reserve(raws.size());
  for (const RawMonomial& raw : raws) gens.push_back(materialize(raw, n));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

MonomialIdeal parse_ideal_file(const std::string& path, std::optional<int> ambient_n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_ideal(in, ambient_n);
}

Poset parse_poset(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::optional<int> elements;
  std::vector<std::pair<int, int>> relations;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = strip_comment(line);
    if (blank(body)) continue;
    if (!elements) {
      std::istringstream is(body);
      std::string keyword;
      is >> keyword;
      std::string count;
      is >> count;
      std::string rest;
      if (keyword != "elements:" || !(is >> rest ? false : true))
        throw ParseError(line_no, "expected 'elements: <k>' header");
      std::int64_t k = parse_int(count, line_no, "an element count");
      if (k < 1) throw ParseError(line_no, "poset must have at least one element");
      elements = static_cast<int>(k);
      continue;
    }
    std::string norm;
    for (char c : body) norm += (c == '<') ? ' ' : c;
    std::istringstream is(norm);
    std::string p, q, rest;
    if (!(is >> p >> q) || (is >> rest) || body.find('<') == std::string::npos)
      throw ParseError(line_no, "expected relation 'p < q'");
    std::int64_t pi = parse_int(p, line_no, "an element label");
    std::int64_t qi = parse_int(q, line_no, "an element label");
    if (pi < 1 || pi > *elements || qi < 1 || qi > *elements)
      throw ParseError(line_no, "element label out of range");
    relations.emplace_back(static_cast<int>(pi) - 1, static_cast<int>(qi) - 1);
  }
  if (!elements) throw ParseError(line_no, "missing 'elements: <k>' header");
  try {
    return Poset(*elements, relations);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Poset parse_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_poset(in);
}

// --- serialization --------------------------------------------------------

namespace {

Json generators_json(const MonomialIdeal& ideal) {
  Json arr = Json::array();
  for (const Monomial& g : ideal.generators()) arr.push_back(g.exponents());
  return arr;
}

Json report_json(const FreimanReport& rep) {
  Json j;
  j["n"] = rep.ambient;
  j["degree"] = rep.degree;
  j["mu"] = rep.mu;
  j["mu2"] = rep.mu2;
  j["spread"] = rep.spread;
  j["delta"] = rep.delta;
  j["freiman"] = rep.freiman;
  return j;
}

Json classification_json(const MaxHeightVerdict& verdict) {
  Json j;
  j["freiman"] = verdict.freiman;
  j["primitive_q"] = verdict.primitive_q;
  if (verdict.form) {
    j["form"] = to_string(*verdict.form);
    if (*verdict.form == NormalForm::MixedBlock) {
      j["r"] = verdict.block_size;
      j["block_degree"] = verdict.block_degree;
    }
    Json relabeling = Json::array();
    for (int v : verdict.relabeling) relabeling.push_back(v + 1);
    j["relabeling"] = relabeling;
  } else {
    j["form"] = nullptr;
  }
  return j;
}

Json analyze_json(const AnalyzeOutput& out) {
  Json j = report_json(out.report);
  if (out.h) j["h"] = out.h->values;
  if (out.classification) j["classification"] = classification_json(*out.classification);
  if (out.echo) j["generators"] = generators_json(*out.echo);
  return j;
}

Json witness_json(const CensusWitness& w) {
  Json j;
  j["ordinal"] = w.ordinal;
  j["generators"] = generators_json(w.ideal);
  j["report"] = report_json(w.report);
  return j;
}

Json census_json(const CensusReport& rep) {
  Json j;
  j["n"] = rep.n;
  j["d"] = rep.d;
  j["filters"] = {{"height_max", rep.filter.height_max},
                  {"up_to_symmetry", rep.filter.up_to_symmetry},
                  {"primitive_only", rep.filter.primitive_only}};
  j["total"] = rep.total;
  j["freiman"] = rep.freiman_count;
  Json fw = Json::array(), nw = Json::array();
  for (const CensusWitness& w : rep.freiman_witnesses) fw.push_back(witness_json(w));
  for (const CensusWitness& w : rep.non_freiman_witnesses) nw.push_back(witness_json(w));
  j["witnesses"] = {{"freiman", fw}, {"non_freiman", nw}};
  return j;
}

Json verify_json(const VerifyReport& rep) {
  Json j;
  j["theorem"] = rep.theorem;
  j["kind"] = rep.conjecture ? "conjecture" : "theorem";
  j["ranges"] = rep.ranges_desc;
  j["tuples_checked"] = rep.tuples_checked;
  j["pass"] = rep.pass;
  if (rep.counterexample) {
    Json ce;
    Json params;
    for (const auto& [k, v] : rep.counterexample->params) params[k] = v;
    ce["params"] = params;
    ce["expected"] = rep.counterexample->expected;
    ce["actual"] = rep.counterexample->actual;
    j["counterexample"] = ce;
  }
  return j;
}

}  // namespace

std::string to_json(const AnalyzeOutput& out, int indent) {
  return analyze_json(out).dump(indent);
}

std::string to_json(const CensusReport& report, int indent) {
  return census_json(report).dump(indent);
}

std::string to_json(const VerifyReport& report, int indent) {
  return verify_json(report).dump(indent);
}

std::string to_human(const AnalyzeOutput& out) {
  const FreimanReport& r = out.report;
  std::ostringstream os;
  os << "n       = " << r.ambient << '\n'
     << "degree  = " << r.degree << '\n'
     << "mu      = " << r.mu << '\n'
     << "mu2     = " << r.mu2 << '\n'
     << "spread  = " << r.spread << '\n'
     << "delta   = " << r.delta << '\n'
     << "freiman = " << (r.freiman ? "yes" : "no") << '\n';
  if (out.h) {
    os << "h       = [";
    for (size_t i = 0; i < out.h->values.size(); ++i) {
      if (i) os << ", ";
      os << out.h->values[i];
    }
    os << "]\n";
  }
  if (out.classification) {
    const MaxHeightVerdict& v = *out.classification;
    os << "classification: ";
    if (!v.form) {
      os << "not Freiman (primitive q = " << v.primitive_q << ")\n";
    } else {
      os << to_string(*v.form);
      if (*v.form == NormalForm::MixedBlock)
        os << " r=" << v.block_size << " degree=" << v.block_degree;
      os << " (primitive q = " << v.primitive_q << ")\n";
    }
  }
  if (out.echo) os << "generators:\n" << generators_listing(*out.echo);
  return os.str();
}

std::string to_human(const CensusReport& rep) {
  std::ostringstream os;
  os << "census n=" << rep.n << " d=" << rep.d;
  if (rep.filter.height_max) os << " [height-max]";
  if (rep.filter.up_to_symmetry) os << " [up-to-symmetry]";
  if (rep.filter.primitive_only) os << " [primitive-only]";
  os << '\n'
     << "total   = " << rep.total << '\n'
     << "freiman = " << rep.freiman_count << '\n';
  auto list = [&os](const char* label, const std::vector<CensusWitness>& ws) {
    os << label << ":\n";
    for (const CensusWitness& w : ws)
      os << "  " << w.ideal.str() << "  (delta = " << w.report.delta << ")\n";
  };
  list("freiman witnesses", rep.freiman_witnesses);
  list("non-freiman witnesses", rep.non_freiman_witnesses);
  return os.str();
}

std::string to_human(const VerifyReport& rep) {
  std::ostringstream os;
  os << (rep.conjecture ? "conjecture " : "theorem ") << rep.theorem << " ["
     << rep.ranges_desc << "]: " << (rep.pass ? "PASS" : "FAIL") << " ("
     << rep.tuples_checked << " tuples)";
  if (rep.counterexample) {
    os << "\ncounterexample:";
    for (const auto& [k, v] : rep.counterexample->params) os << ' ' << k << '=' << v;
    os << "\n  expected: " << rep.counterexample->expected
       << "\n  actual:   " << rep.counterexample->actual;
  }
  os << '\n';
  return os.str();
}

std::string generators_listing(const MonomialIdeal& ideal) {
  std::ostringstream os;
  for (const Monomial& g : ideal.generators()) os << g.str() << '\n';
  return os.str();
}

}  // namespace freiman
