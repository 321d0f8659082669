// Test-only oracle: brute-force invariants computed from raw exponent
// vectors with none of the library's ideal machinery, so the two routes
// stay independent.  Rank uses rational Gaussian elimination rather than
// the library's integer Bareiss elimination.
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Vec = std::vector<long long>;
using Rational = boost::multiprecision::cpp_rational;

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline bool divides(const Vec& a, const Vec& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::set<Vec> minimalize(const std::set<Vec>& gens) {
  std::set<Vec> out;
  for (const Vec& g : gens) {
    bool dominated = false;
    for (const Vec& h : gens)
      if (h != g && divides(h, g)) dominated = true;
    if (!dominated) out.insert(g);
  }
  return out;
}

inline std::set<Vec> product(const std::set<Vec>& a, const std::set<Vec>& b) {
  std::set<Vec> out;
  for (const Vec& u : a)
    for (const Vec& v : b) out.insert(add(u, v));
  return minimalize(out);
}

inline std::set<Vec> power(const std::set<Vec>& gens, int k) {
  std::set<Vec> r = gens;
  for (int i = 1; i < k; ++i) r = product(r, gens);
  return r;
}

inline long long mu_power(const std::set<Vec>& gens, int k) {
  return static_cast<long long>(power(gens, k).size());
}

inline int rank_rational(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  int rank = 0;
  for (size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    size_t pivot = rows.size();
    for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r)
      if (rows[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(rank) || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[static_cast<size_t>(rank)][c];
      for (size_t cc = 0; cc < cols; ++cc)
        rows[r][cc] -= f * rows[static_cast<size_t>(rank)][cc];
    }
    ++rank;
  }
  return rank;
}

inline int spread(const std::set<Vec>& gens) {
  std::vector<std::vector<Rational>> rows;
  for (const Vec& g : gens) rows.emplace_back(g.begin(), g.end());
  return rank_rational(std::move(rows));
}

inline long long choose2(long long x) { return x * (x - 1) / 2; }

inline long long delta(const std::set<Vec>& gens) {
  const long long mu = static_cast<long long>(gens.size());
  const long long mu2 = mu_power(gens, 2);
  const long long l = spread(gens);
  return mu2 - l * mu + choose2(l);
}

/// All exponent vectors of length n with entry sum d.
inline std::vector<Vec> degree_slice(int n, long long d) {
  std::vector<Vec> out;
  Vec current(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, long long remaining) -> void {
    if (pos + 1 == n) {
      current[static_cast<size_t>(pos)] = remaining;
      out.push_back(current);
      return;
    }
    for (long long e = remaining; e >= 0; --e) {
      current[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, remaining - e);
    }
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace oracle
