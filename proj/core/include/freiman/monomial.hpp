#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "freiman/numeric.hpp"

namespace freiman {

/// A monomial in a fixed number of variables, stored as its exponent
/// vector.  Immutable after construction.  The ambient variable count is
/// the vector length; the total degree is always the exponent sum.
class Monomial {
 public:
  /// Throws std::invalid_argument on negative exponents or empty vector.
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(int ambient_n);
  static Monomial variable(int ambient_n, int index);
  static Monomial pure_power(int ambient_n, int index, Exponent e);

  int ambient() const { return static_cast<int>(exps_.size()); }
  Exponent degree() const { return degree_; }
  Exponent operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  bool is_one() const { return degree_ == 0; }

  /// Indices (0-based) of variables with nonzero exponent.
  std::vector<int> support() const;
  /// Support as a bitmask; requires ambient() <= 64.
  std::uint64_t support_mask() const;
  /// Largest 1-based variable index dividing the monomial; 0 for 1.
  int max_var() const;

  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;
  /// Componentwise scaling by q >= 0 (the q-th power).
  Monomial pow(Exponent q) const;
  /// Exact quotient; caller must ensure rhs.divides(*this).
  Monomial divide_by(const Monomial& rhs) const;

  bool operator==(const Monomial& rhs) const = default;

  /// Canonical order: total degree ascending, then exponent vectors in
  /// descending lexicographic order, so that e.g. x1^2 < x1*x2 < x2^2.
  /// Equal ideals get identical generator sequences under this order.
  bool operator<(const Monomial& rhs) const;

  /// "x1^2*x3" style rendering; "1" for the trivial monomial.
  std::string str() const;

 private:
  std::vector<Exponent> exps_;
  Exponent degree_;
};

std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace freiman
