#pragma once

#include <initializer_list>
#include <random>
#include <set>
#include <vector>

#include "freiman/ideal.hpp"
#include "oracle.hpp"

namespace helpers {

inline freiman::Monomial mono(std::vector<freiman::Exponent> exps) {
  return freiman::Monomial(std::move(exps));
}

inline freiman::MonomialIdeal ideal(
    std::initializer_list<std::vector<freiman::Exponent>> gens) {
  std::vector<freiman::Monomial> ms;
  int n = 0;
  for (const auto& v : gens) {
    n = static_cast<int>(v.size());
    ms.emplace_back(v);
  }
  return freiman::MonomialIdeal::minimalize(n, std::move(ms));
}

inline std::set<oracle::Vec> to_oracle(const freiman::MonomialIdeal& ideal) {
  std::set<oracle::Vec> gens;
  for (const freiman::Monomial& g : ideal.generators())
    gens.insert(oracle::Vec(g.exponents().begin(), g.exponents().end()));
  return gens;
}

/// Random equigenerated ideal: a non-empty subset of the degree-d slice.
inline freiman::MonomialIdeal random_equigenerated(std::mt19937_64& rng, int n,
                                                   long long d) {
  const auto slice = oracle::degree_slice(n, d);
  std::vector<freiman::Monomial> gens;
  while (gens.empty()) {
    for (const auto& v : slice)
      if (rng() % 3 == 0)
        gens.emplace_back(std::vector<freiman::Exponent>(v.begin(), v.end()));
  }
  return freiman::MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace helpers
