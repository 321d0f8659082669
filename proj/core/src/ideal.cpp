#include "freiman/ideal.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace freiman {

MonomialIdeal::MonomialIdeal(int ambient_n, std::vector<Monomial> canonical_gens)
    : ambient_n_(ambient_n), gens_(std::move(canonical_gens)) {
  const Exponent d = gens_.front().degree();
  bool equi = true;
  for (const Monomial& g : gens_) equi = equi && g.degree() == d;
  if (equi) equi_degree_ = d;
}

MonomialIdeal MonomialIdeal::minimalize(int ambient_n, std::vector<Monomial> raw) {
  if (ambient_n <= 0) throw std::invalid_argument("ambient count must be positive");
  if (raw.empty()) throw std::invalid_argument("no generators given");
  for (const Monomial& m : raw) {
    if (m.ambient() != ambient_n)
      throw std::invalid_argument("generator ambient mismatch");
    if (m.is_one())
      throw std::invalid_argument("the unit ideal is not representable");
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  bool equigen = raw.front().degree() == raw.back().degree();
  if (!equigen) {
    // Monomials of equal degree never strictly divide one another, so
    // only strictly smaller degrees can dominate.
    std::vector<Monomial> kept;
    kept.reserve(raw.size());
    for (const Monomial& m : raw) {
      bool dominated = false;
      for (const Monomial& k : kept) {
        if (k.degree() >= m.degree()) break;  // kept is degree-sorted
        if (k.divides(m)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(m);
    }
    raw = std::move(kept);
  }
  return MonomialIdeal(ambient_n, std::move(raw));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  if (ambient_n_ != other.ambient_n_) return false;
  for (const Monomial& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MonomialIdeal& ideal) {
  return os << ideal.str();
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("ideal product needs a common ambient ring");
  std::vector<Monomial> products;
  products.reserve(a.generators().size() * b.generators().size());
  for (const Monomial& u : a.generators())
    for (const Monomial& v : b.generators()) products.push_back(u * v);
  return MonomialIdeal::minimalize(a.ambient(), std::move(products));
}

MonomialIdeal ideal_power(const MonomialIdeal& ideal, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("ideal power needs k >= 1");
  MonomialIdeal result = ideal;
  for (std::int64_t i = 1; i < k; ++i) result = ideal_product(result, ideal);
  return result;
}

MonomialIdeal pseudo_frobenius_power(const MonomialIdeal& ideal, Exponent q) {
  if (q < 1) throw std::invalid_argument("pseudo-Frobenius power needs q >= 1");
  std::vector<Monomial> scaled;
  scaled.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) scaled.push_back(g.pow(q));
  return MonomialIdeal::minimalize(ideal.ambient(), std::move(scaled));
}

PrimitiveRoot frobenius_primitive_root(const MonomialIdeal& ideal) {
  Exponent g = 0;
  for (const Monomial& m : ideal.generators())
    for (Exponent e : m.exponents()) g = std::gcd(g, e);
  // g >= 1: generators are never the unit monomial.
  std::vector<Monomial> root;
  root.reserve(ideal.generators().size());
  for (const Monomial& m : ideal.generators()) {
    std::vector<Exponent> v = m.exponents();
    for (Exponent& e : v) e /= g;
    root.emplace_back(std::move(v));
  }
  return {MonomialIdeal::minimalize(ideal.ambient(), std::move(root)), g};
}

int height(const MonomialIdeal& ideal) {
  const int n = ideal.ambient();
  if (n > 64) throw std::invalid_argument("height limited to 64 variables");
  std::vector<std::uint64_t> supports;
  supports.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators())
    supports.push_back(g.support_mask());

  // Smallest hitting set by increasing cardinality (exhaustive; exact).
  for (int c = 1; c <= n; ++c) {
    std::vector<int> idx(static_cast<size_t>(c));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::uint64_t mask = 0;
      for (int i : idx) mask |= std::uint64_t{1} << i;
      bool hits = true;
      for (std::uint64_t s : supports) hits = hits && (s & mask);
      if (hits) return c;
      // next c-combination of {0..n-1}
      int i = c - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == n - c + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < c; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw std::logic_error("no hitting set found");  // unreachable: gens nonempty
}

MonomialIdeal extend_with_pure_power(const MonomialIdeal& ideal, Exponent d) {
  if (d < 1) throw std::invalid_argument("pure power degree must be positive");
  const int n = ideal.ambient();
  std::vector<Monomial> gens;
  gens.reserve(ideal.generators().size() + 1);
  for (const Monomial& g : ideal.generators()) {
    std::vector<Exponent> v = g.exponents();
    v.push_back(0);
    gens.emplace_back(std::move(v));
  }
  gens.push_back(Monomial::pure_power(n + 1, n, d));
  return MonomialIdeal::minimalize(n + 1, std::move(gens));
}

}  // namespace freiman
