#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freiman/ideal.hpp"
#include "freiman/numeric.hpp"
#include "freiman/poset.hpp"

namespace freiman {

/// Smallest strongly stable ideal containing the seeds: the fixpoint of
/// the exchange moves u -> x_i * (u / x_j) for j in supp(u), i < j.
/// Seeds of mixed degrees are accepted; the result is minimalized.
MonomialIdeal borel_closure(int ambient_n, std::vector<Monomial> seeds);

/// Principal Borel ideal B(u).
MonomialIdeal principal_borel(const Monomial& u);

/// Closed form for delta(B(x_i * x_n)) in n variables:
///   (i-1)(i-2)/24 * [6n^2 - 2n(4i+3) + 3i(i+1)]
/// (always an integer).  Zero exactly when n <= 3 or i <= 2.
BigInt borel_deg2_delta(int i, int n);

/// Closed form for delta(B(x_2^a2 * x_3^a3)) in 3 variables:
///   a2*(a3-1) + C(a3-1, 2).
/// Zero exactly when a3 = 1, or a3 = 2 and a2 = 0.
BigInt borel_3vars_delta(std::int64_t a2, std::int64_t a3);

/// The squarefree ideal in 2|P| variables with one degree-|P| generator
/// per downset D of P: x over D, y over its complement.  Variable
/// layout: x_p = p, y_p = |P| + p (0-based).
MonomialIdeal hibi_ideal(const Poset& poset);

struct HibiVerdict {
  bool freiman = false;
  std::optional<int> witness;  // an element whose removal leaves a chain
};

/// Does some element's removal leave a chain?  Evaluates both that test
/// and the equivalent rank(P) >= |P|-2 criterion and throws
/// std::logic_error if they ever disagree.
HibiVerdict hibi_freiman_predicate(const Poset& poset);

/// Parameters of an ideal of Veronese type: all degree-d monomials in n
/// variables with exponents bounded by a (componentwise).
struct VeroneseSpec {
  int n;
  Exponent d;
  std::vector<Exponent> bounds;  // non-decreasing, 1 <= a_i <= d, sum > d

  /// Throws std::invalid_argument when the constraints fail.
  VeroneseSpec(int n, Exponent d, std::vector<Exponent> bounds);

  static VeroneseSpec squarefree(int n, Exponent d);  // a_i = 1
  static VeroneseSpec unbounded(int n, Exponent d);   // a_i = d
  static VeroneseSpec top_minus_one(int n, Exponent d);  // a_i = d-1
};

MonomialIdeal veronese_type(const VeroneseSpec& spec);

/// mu(I_{n,d}^2) for the squarefree Veronese ideal:
///   sum_i C(n, 2i) * C(n-2i, d-i).
/// Requires 1 <= d <= n-1.
BigInt squarefree_veronese_mu2(int n, int d);

/// Katzman's inclusion-exclusion formula for the fiber-cone
/// multiplicity:  sum over S with sum_{i in S} a_i < d of
/// (-1)^|S| (d - sum_{i in S} a_i)^{n-1}.
BigInt katzman_multiplicity(const VeroneseSpec& spec);

/// f(n,d) = d^{n-1} - C(n+d-1, d) + n - 1: the minimal-multiplicity gap
/// of I_{a,d} with a_i = d-1.  Zero exactly when n = 2, or n = 3, d = 2.
BigInt veronese_topminus1_f(int n, int d);

/// delta((x_1..x_n)^m) in closed form:
///   C(n+2m-1, 2m) - n*C(n+m-1, m) + C(n, 2).
BigInt maxideal_power_delta(int n, std::int64_t m);

/// (x_1..x_n)^m as an ideal.
MonomialIdeal maximal_ideal_power(int n, Exponent m);

}  // namespace freiman
