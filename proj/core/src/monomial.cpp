#include "freiman/monomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace freiman {

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  if (exps_.empty())
    throw std::invalid_argument("monomial needs at least one variable");
  degree_ = 0;
  for (Exponent e : exps_) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    degree_ = checked_add(degree_, e);
  }
}

Monomial Monomial::one(int ambient_n) {
  return Monomial(std::vector<Exponent>(static_cast<size_t>(ambient_n), 0));
}

Monomial Monomial::variable(int ambient_n, int index) {
  return pure_power(ambient_n, index, 1);
}

Monomial Monomial::pure_power(int ambient_n, int index, Exponent e) {
  if (index < 0 || index >= ambient_n)
    throw std::invalid_argument("variable index out of range");
  std::vector<Exponent> v(static_cast<size_t>(ambient_n), 0);
  v[static_cast<size_t>(index)] = e;
  return Monomial(std::move(v));
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[static_cast<size_t>(i)] != 0) s.push_back(i);
  return s;
}

std::uint64_t Monomial::support_mask() const {
  if (ambient() > 64)
    throw std::invalid_argument("support_mask limited to 64 variables");
  std::uint64_t m = 0;
  for (int i = 0; i < ambient(); ++i)
    if (exps_[static_cast<size_t>(i)] != 0) m |= std::uint64_t{1} << i;
  return m;
}

int Monomial::max_var() const {
  for (int i = ambient() - 1; i >= 0; --i)
    if (exps_[static_cast<size_t>(i)] != 0) return i + 1;
  return 0;
}

bool Monomial::divides(const Monomial& other) const {
  if (ambient() != other.ambient()) return false;
  for (size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  if (ambient() != rhs.ambient())
    throw std::invalid_argument("ambient mismatch in monomial product");
  std::vector<Exponent> v(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i)
    v[i] = checked_add(exps_[i], rhs.exps_[i]);
  return Monomial(std::move(v));
}

Monomial Monomial::pow(Exponent q) const {
  if (q < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Exponent> v(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) v[i] = checked_mul(exps_[i], q);
  return Monomial(std::move(v));
}

Monomial Monomial::divide_by(const Monomial& rhs) const {
  if (!rhs.divides(*this))
    throw std::invalid_argument("inexact monomial division");
  std::vector<Exponent> v(exps_.size());
  for (size_t i = 0; i < exps_.size(); ++i) v[i] = exps_[i] - rhs.exps_[i];
  return Monomial(std::move(v));
}

bool Monomial::operator<(const Monomial& rhs) const {
  if (degree_ != rhs.degree_) return degree_ < rhs.degree_;
  return rhs.exps_ < exps_;  // descending lex within a degree
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < ambient(); ++i) {
    Exponent e = exps_[static_cast<size_t>(i)];
    if (e == 0) continue;
    if (!first) os << '*';
    os << 'x' << i + 1;
    if (e > 1) os << '^' << e;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) {
  return os << m.str();
}

}  // namespace freiman
