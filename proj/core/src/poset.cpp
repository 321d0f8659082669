#include "freiman/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace freiman {

Poset::Poset(int size, const std::vector<std::pair<int, int>>& relations)
    : size_(size), lt_(static_cast<size_t>(size) * static_cast<size_t>(size), 0) {
  if (size <= 0) throw std::invalid_argument("poset must be non-empty");
  auto at = [this](int p, int q) -> char& {
    return lt_[static_cast<size_t>(p * size_ + q)];
  };
  for (auto [p, q] : relations) {
    if (p < 0 || p >= size || q < 0 || q >= size)
      throw std::invalid_argument("poset relation label out of range");
    if (p == q) throw std::invalid_argument("poset relation p < p is cyclic");
    at(p, q) = 1;
  }
  // Warshall closure, then reject cycles.
  for (int k = 0; k < size; ++k)
    for (int p = 0; p < size; ++p)
      if (at(p, k))
        for (int q = 0; q < size; ++q)
          if (at(k, q)) at(p, q) = 1;
  for (int p = 0; p < size; ++p)
    if (at(p, p)) throw std::invalid_argument("poset relations contain a cycle");
}

Poset Poset::chain(int size) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < size; ++i) rel.emplace_back(i, i + 1);
  return Poset(size, rel);
}

Poset Poset::antichain(int size) { return Poset(size, {}); }

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> cov;
  for (int p = 0; p < size_; ++p)
    for (int q = 0; q < size_; ++q) {
      if (!less(p, q)) continue;
      bool direct = true;
      for (int r = 0; r < size_ && direct; ++r)
        if (less(p, r) && less(r, q)) direct = false;
      if (direct) cov.emplace_back(p, q);
    }
  return cov;
}

int Poset::rank() const {
  // Longest chain in covers; DP over the closure works equally well.
  std::vector<int> best(static_cast<size_t>(size_), -1);
  int overall = 0;
  // Elements can be processed in any order with memoization.
  auto longest = [&](auto&& self, int p) -> int {
    int& b = best[static_cast<size_t>(p)];
    if (b >= 0) return b;
    b = 0;
    for (int q = 0; q < size_; ++q)
      if (less(p, q)) b = std::max(b, 1 + self(self, q));
    return b;
  };
  for (int p = 0; p < size_; ++p) overall = std::max(overall, longest(longest, p));
  return overall;
}

bool Poset::is_chain() const {
  for (int p = 0; p < size_; ++p)
    for (int q = p + 1; q < size_; ++q)
      if (!comparable(p, q)) return false;
  return true;
}

bool Poset::is_chain_without(int p) const {
  for (int a = 0; a < size_; ++a) {
    if (a == p) continue;
    for (int b = a + 1; b < size_; ++b) {
      if (b == p) continue;
      if (!comparable(a, b)) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> poset_downsets(const Poset& poset) {
  const int k = poset.size();
  if (k > 31) throw std::invalid_argument("downset enumeration limited to 31 elements");
  std::vector<std::uint32_t> lower(static_cast<size_t>(k), 0);
  for (int q = 0; q < k; ++q)
    for (int p = 0; p < k; ++p)
      if (poset.less(p, q)) lower[static_cast<size_t>(q)] |= std::uint32_t{1} << p;

  std::vector<std::uint32_t> out;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    bool closed = true;
    for (int q = 0; q < k && closed; ++q)
      if ((mask >> q) & 1)
        closed = (lower[static_cast<size_t>(q)] & ~mask) == 0;
    if (closed) out.push_back(mask);
  }
  return out;
}

}  // namespace freiman
