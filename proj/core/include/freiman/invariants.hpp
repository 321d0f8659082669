#pragma once

#include <cstdint>
#include <vector>

#include "freiman/ideal.hpp"
#include "freiman/numeric.hpp"

namespace freiman {

/// The invariants entering the Freiman inequality
///   mu(I^2) >= l*mu(I) - C(l,2)
/// together with the defect delta = mu2 - spread*mu + C(spread,2).
/// delta >= 0 always holds for equigenerated monomial ideals; a negative
/// value is a fatal internal error, never a property of the input.
struct FreimanReport {
  int ambient = 0;
  Exponent degree = 0;
  std::int64_t mu = 0;
  std::int64_t mu2 = 0;
  std::int64_t spread = 0;
  std::int64_t delta = 0;
  bool freiman = false;
};

/// Leading coefficients h_0..h_K of the fiber-cone Hilbert series
/// numerator, recovered from the mu(I^k) sequence.  h_0 = 1,
/// h_1 = mu - spread, h_2 = delta.
struct HVectorPrefix {
  std::int64_t spread = 0;
  std::vector<std::int64_t> values;
};

/// Analytic spread: rank over Q of the matrix of generator exponent
/// vectors.  Valid for equigenerated ideals only; throws
/// UnsupportedInput otherwise.
int analytic_spread(const MonomialIdeal& ideal);

/// spread*mu - C(spread,2), the lower bound on mu(I^2).
/// Throws std::invalid_argument if spread > mu.
BigInt freiman_lower_bound(std::int64_t mu, std::int64_t spread);

/// Full report for an equigenerated ideal.  Computes mu(I^2) exactly and
/// asserts the Freiman inequality.
FreimanReport delta(const MonomialIdeal& ideal);

/// h_0..h_K via the alternating binomial transform of mu(I^0..I^K).
HVectorPrefix h_vector_prefix(const MonomialIdeal& ideal, int prefix_len);

/// C(spread+k-2, k-1)*mu - (k-1)*C(spread+k-2, k): the value mu(I^k)
/// takes exactly when the ideal is Freiman (and its fiber cone
/// Cohen-Macaulay).
BigInt power_count_formula(std::int64_t spread, std::int64_t mu, std::int64_t k);

/// Does mu(I^k) match power_count_formula for this k >= 2?
bool power_formula_holds(const MonomialIdeal& ideal, std::int64_t k);

/// Single reduction step: is I^2 = J*I as ideals?  Requires J ⊆ I.
bool reduction_step_test(const MonomialIdeal& ideal, const MonomialIdeal& sub);

/// e + spread - 1 - mu; zero exactly when the fiber cone has minimal
/// multiplicity, given its multiplicity e from an external source.
BigInt minimal_multiplicity_gap(const BigInt& mu, const BigInt& spread,
                                const BigInt& e);

}  // namespace freiman
