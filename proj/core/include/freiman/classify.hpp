#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "freiman/ideal.hpp"
#include "freiman/numeric.hpp"

namespace freiman {

enum class NormalForm {
  PurePowers,   // (x_1^d, ..., x_n^d) with d >= 2; a primitive root never
                // takes this shape (its exponent gcd would be d), so the
                // classifier reports such ideals as MaximalIdeal with q = d
  MixedBlock,   // (x_1..x_r)^d + (x_{r+1}^d, ..., x_n^d), r >= 2
  MaximalIdeal  // (x_1, ..., x_n)
};

/// Outcome of classifying an equigenerated height-n ideal.  The Freiman
/// verdict comes from the reduction-step criterion I^2 = (x_1^d..x_n^d)I;
/// the structural form is matched on the primitive pseudo-Frobenius root
/// and must exist whenever the verdict is positive.
struct MaxHeightVerdict {
  bool freiman = false;
  Exponent primitive_q = 1;
  std::optional<NormalForm> form;
  int block_size = 0;            // r, for MixedBlock
  Exponent block_degree = 0;     // generator degree of the primitive root
  std::vector<int> relabeling;   // permutation: position -> original variable
};

const char* to_string(NormalForm form);

/// Requires an equigenerated ideal of height n in n variables (i.e. one
/// containing every pure power x_i^d); throws std::invalid_argument when
/// the height is smaller and UnsupportedInput when not equigenerated.
/// Throws std::logic_error if the reduction verdict and the structural
/// matcher disagree (they are provably equivalent).
MaxHeightVerdict classify_max_height(const MonomialIdeal& ideal);

struct ProductVerdict {
  bool freiman = false;
  std::string reason;
};

/// Is I*J Freiman, for I, J equigenerated of height n in the same n >= 3
/// variables?  Never for n >= 4; for n = 3 exactly when both factors are
/// the same pure-power triple.  n <= 2 is refused (no classification).
ProductVerdict product_freiman_max_height(const MonomialIdeal& a,
                                          const MonomialIdeal& b);

/// When is (x^a, y^a)^r * (x^b, y^b)^s again of the form (x^c, y^c)^t?
/// Requires a <= b.  Answer: exactly when a | b and r >= b/a - 1, in
/// which case c = a and t = r + (b/a)*s.
std::optional<std::pair<Exponent, std::int64_t>> two_var_power_product(
    Exponent a, std::int64_t r, Exponent b, std::int64_t s);

}  // namespace freiman
