#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "freiman/monomial.hpp"

namespace freiman {

/// A monomial ideal, held as its unique minimal generating set in
/// canonical order.  Immutable; equal ideals compare equal as sequences.
/// The unit and zero ideals are not representable: construction rejects
/// empty input and the monomial 1.
class MonomialIdeal {
 public:
  /// Canonical constructor: drops duplicates and divisibility-dominated
  /// generators, sorts the survivors.  Idempotent.
  static MonomialIdeal minimalize(int ambient_n, std::vector<Monomial> raw);

  int ambient() const { return ambient_n_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::int64_t mu() const { return static_cast<std::int64_t>(gens_.size()); }

  /// Common generator degree, if all generators share one.
  std::optional<Exponent> equigenerated_degree() const { return equi_degree_; }
  bool is_equigenerated() const { return equi_degree_.has_value(); }

  /// Ideal membership: is m divisible by some generator?
  bool contains(const Monomial& m) const;
  /// Ideal inclusion: other ⊆ this.
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& rhs) const {
    return ambient_n_ == rhs.ambient_n_ && gens_ == rhs.gens_;
  }

  std::string str() const;

 private:
  MonomialIdeal(int ambient_n, std::vector<Monomial> canonical_gens);

  int ambient_n_;
  std::vector<Monomial> gens_;
  std::optional<Exponent> equi_degree_;
};

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal);

/// Minimalized ideal generated by all pairwise products of generators.
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^k by iterated products; k >= 1.
MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::int64_t k);

/// I^[q]: every generator raised to the q-th power.  Preserves the
/// generator count (scaling is injective and divisibility-preserving).
MonomialIdeal pseudo_frobenius_power(const MonomialIdeal& ideal, Exponent q);

struct PrimitiveRoot {
  MonomialIdeal root;
  Exponent q;  // gcd of all generator exponents; root^[q] reproduces the input
};

/// The unique ideal L and maximal q with L^[q] = I; q = 1 means I is not
/// a proper pseudo-Frobenius power of anything.
PrimitiveRoot frobenius_primitive_root(const MonomialIdeal& ideal);

/// Height = size of a smallest set of variables meeting every
/// generator's support, found by exhaustive search in increasing
/// cardinality.  Requires ambient() <= 64.
int height(const MonomialIdeal& ideal);

/// The ideal in one more variable obtained by appending x_{n+1}^d to the
/// generators.
MonomialIdeal extend_with_pure_power(const MonomialIdeal& ideal, Exponent d);

}  // namespace freiman
