#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "freiman/census.hpp"
#include "freiman/classify.hpp"
#include "freiman/families.hpp"
#include "freiman/ideal.hpp"
#include "freiman/invariants.hpp"
#include "freiman/poset.hpp"

namespace freiman {

// --- parsing ------------------------------------------------------------
//
// Ideal files: one monomial per line, '#' starts a comment.  A monomial
// is either a product of variable tokens `x<k>` with optional `^<e>`,
// separated by '*' or whitespace (e.g. `x1^2 x3`), or a raw exponent
// vector `[2,0,1]`.  The ambient variable count is the largest index
// seen unless overridden.
//
// Poset files: a line `elements: k`, then relations `p < q` with
// 1-based labels.

Monomial parse_monomial(const std::string& text, std::optional<int> ambient_n);
MonomialIdeal parse_ideal(std::istream& in, std::optional<int> ambient_n);
MonomialIdeal parse_ideal_file(const std::string& path, std::optional<int> ambient_n);
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);

// --- reports ------------------------------------------------------------
//
// JSON serializations are schema-stable: fixed key order, no volatile
// fields, so repeated runs are byte-identical.

struct AnalyzeOutput {
  FreimanReport report;
  std::optional<HVectorPrefix> h;            // filled by `hvec`
  std::optional<MaxHeightVerdict> classification;  // filled when height = n
  std::optional<MonomialIdeal> echo;         // filled by --echo
};

std::string to_json(const AnalyzeOutput& out, int indent = 2);
std::string to_json(const CensusReport& report, int indent = 2);
std::string to_json(const VerifyReport& report, int indent = 2);

std::string to_human(const AnalyzeOutput& out);
std::string to_human(const CensusReport& report);
std::string to_human(const VerifyReport& report);

/// Generators rendered one per line in the file grammar, for --echo
/// round trips and the `power`/`borel` commands.
std::string generators_listing(const MonomialIdeal& ideal);

}  // namespace freiman
