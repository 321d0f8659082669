#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "freiman/ideal.hpp"
#include "freiman/invariants.hpp"
#include "freiman/poset.hpp"

namespace freiman {

struct EnumerateOptions {
  bool height_max = false;     // force all pure powers x_i^d into every ideal
  bool up_to_symmetry = false; // one representative per variable-relabeling orbit
  bool primitive_only = false; // skip proper pseudo-Frobenius powers
  std::uint64_t cap = std::uint64_t{1} << 20;
};

/// Number of subsets the enumeration at (n, d) must visit (before any
/// symmetry or primitivity filtering).
std::uint64_t enumeration_size(int n, Exponent d, const EnumerateOptions& opts);

/// Every equigenerated ideal at (n, d) passing the filters, in canonical
/// order (ascending subset bitmask over the canonical degree-d monomial
/// list).  The callback receives the ideal and its enumeration ordinal.
/// Throws ResourceLimit when the subset count exceeds opts.cap.
void enumerate_equigenerated(
    int n, Exponent d, const EnumerateOptions& opts,
    const std::function<void(const MonomialIdeal&, std::uint64_t)>& fn);

std::vector<MonomialIdeal> list_equigenerated(int n, Exponent d,
                                              const EnumerateOptions& opts);

/// The canonical representative of the relabeling orbit: the
/// lexicographically least generator sequence over all variable
/// permutations.
MonomialIdeal relabel_canonical_form(const MonomialIdeal& ideal);

struct CensusWitness {
  std::uint64_t ordinal = 0;
  MonomialIdeal ideal;
  FreimanReport report;
};

struct CensusOptions {
  EnumerateOptions filter;
  int jobs = 1;
  int max_witnesses = 4;  // per verdict kind
};

struct CensusReport {
  int n = 0;
  Exponent d = 0;
  EnumerateOptions filter;
  std::uint64_t total = 0;
  std::uint64_t freiman_count = 0;
  std::vector<CensusWitness> freiman_witnesses;
  std::vector<CensusWitness> non_freiman_witnesses;
};

/// delta over every enumerated ideal; height-n ideals additionally run
/// the structural classifier and any disagreement with the delta verdict
/// is a hard error.  The report is deterministic and independent of the
/// worker count.
CensusReport freiman_census(int n, Exponent d, const CensusOptions& opts);

/// All labeled posets on {0..size-1}, by incremental extension over
/// element pairs with transitivity pruning.  Sizes 0..5 give
/// 1, 1, 3, 19, 219, 4231.
std::vector<Poset> enumerate_labeled_posets(int size);

/// One named parameter range, inclusive.  A bound is either a constant
/// or the name of an earlier parameter (e.g. n = i..6).
struct RangeSpec {
  std::string name;
  std::variant<std::int64_t, std::string> lo;
  std::variant<std::int64_t, std::string> hi;
};

using Ranges = std::vector<RangeSpec>;

struct Counterexample {
  std::map<std::string, std::int64_t> params;
  std::string expected;
  std::string actual;
};

struct VerifyReport {
  std::string theorem;
  std::string ranges_desc;
  std::uint64_t tuples_checked = 0;
  bool pass = false;
  bool conjecture = false;  // evidence gathering, not a proved statement
  std::optional<Counterexample> counterexample;
};

/// Known theorem identifiers, in the order `verify --list` reports them.
std::vector<std::string> verify_theorem_ids();

/// Check one classification result exhaustively over its parameter
/// ranges: closed-form / structural verdict versus brute-force delta.
/// Unknown ids throw std::invalid_argument.  The ranges argument
/// overrides the per-theorem defaults by name.
VerifyReport verify_theorem(const std::string& id, const Ranges& overrides = {});

}  // namespace freiman
