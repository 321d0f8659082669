#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace freiman {

/// A finite strict partial order on elements 0..size-1.  Input is any
/// set of relations; the transitive closure is taken internally and
/// cyclic input is rejected.  Covers are recovered by transitive
/// reduction of the closure.
class Poset {
 public:
  /// relations: pairs (p, q) meaning p < q, 0-based.
  /// Throws std::invalid_argument on out-of-range labels or cycles.
  Poset(int size, const std::vector<std::pair<int, int>>& relations);

  static Poset chain(int size);
  static Poset antichain(int size);

  int size() const { return size_; }
  bool less(int p, int q) const { return lt_[static_cast<size_t>(p * size_ + q)]; }
  bool comparable(int p, int q) const { return less(p, q) || less(q, p); }

  /// Cover relations (transitively reduced), in lexicographic order.
  std::vector<std::pair<int, int>> covers() const;

  /// Longest chain length, counted in covers: rank(chain of k) = k-1,
  /// rank(antichain) = 0.
  int rank() const;

  bool is_chain() const;
  /// Is the induced subposet on all elements except p totally ordered?
  bool is_chain_without(int p) const;

  bool operator==(const Poset& rhs) const = default;

 private:
  int size_;
  std::vector<char> lt_;  // row-major strict order matrix
};

/// All downward-closed subsets as bitmasks, ascending; includes 0 and
/// the full set.  Requires size <= 31.
std::vector<std::uint32_t> poset_downsets(const Poset& poset);

}  // namespace freiman
