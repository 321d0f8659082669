// Acceptance suite: one pass/fail line per criterion, exit 0 only when
// everything holds.  Expected values are pinned; nothing is tuned at run
// time.

#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "freiman/census.hpp"
#include "freiman/classify.hpp"
#include "freiman/families.hpp"
#include "freiman/ideal.hpp"
#include "freiman/invariants.hpp"
#include "freiman/io.hpp"
#include "helpers.hpp"

using namespace freiman;

namespace {

int failures = 0;

struct Criterion {
  std::ostringstream log;
  bool ok = true;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      log << "\n    failed: " << what;
    }
  }
};

void criterion(int number, const std::string& title,
               const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.log << "\n    exception: " << e.what();
  }
  std::cout << (c.ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": "
            << title << c.log.str() << "\n";
  if (!c.ok) ++failures;
}

MonomialIdeal pure_powers(int n, Exponent d) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Monomial::pure_power(n, i, d));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

std::vector<MonomialIdeal> height_census(int n, Exponent d) {
  EnumerateOptions opts;
  opts.height_max = true;
  return list_equigenerated(n, d, opts);
}

void criterion_worked_examples(Criterion& c) {
  FreimanReport square = delta(maximal_ideal_power(3, 2));
  c.require(square.delta == 0 && square.freiman, "(x,y,z)^2 is Freiman");

  FreimanReport j = delta(helpers::ideal(
      {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}, {1, 0, 1}}));
  c.require(j.delta == 1, "delta(J) = 1");
  c.require(j.mu2 == 13, "mu(J^2) = 13");
  c.require(j.spread == 3, "spread(J) = 3");
  c.require(j.mu == 5 && !j.freiman, "J is not Freiman");
}

void criterion_maxideal_powers(Criterion& c) {
  for (std::int64_t m = 1; m <= 8; ++m)
    c.require(maxideal_power_delta(3, m) == BigInt(m - 1) * (m - 2) / 2,
              "closed form at (3, " + std::to_string(m) + ")");
  for (std::int64_t m = 1; m <= 4; ++m)
    c.require(maxideal_power_delta(3, m) ==
                  BigInt(delta(maximal_ideal_power(3, m)).delta),
              "brute force at (3, " + std::to_string(m) + ")");
  for (int n = 1; n <= 4; ++n)
    for (std::int64_t m = 1; m <= 4; ++m) {
      const bool expected = m == 1 || n <= 2 || (n == 3 && m == 2);
      c.require(delta(maximal_ideal_power(n, m)).freiman == expected,
                "verdict at (" + std::to_string(n) + ", " + std::to_string(m) + ")");
    }
}

void criterion_maxheight_equivalence(Criterion& c) {
  std::uint64_t seen_32 = 0;
  for (auto [n, d] : std::vector<std::pair<int, Exponent>>{{2, 2}, {2, 3}, {3, 2}}) {
    for (const MonomialIdeal& ideal : height_census(n, d)) {
      const bool by_delta = delta(ideal).freiman;
      const bool by_reduction = reduction_step_test(ideal, pure_powers(n, d));
      const MaxHeightVerdict verdict = classify_max_height(ideal);
      c.require(by_delta == by_reduction && by_reduction == verdict.freiman,
                "three-way agreement on " + ideal.str());
      if (n == 3 && d == 2) ++seen_32;
    }
  }
  c.require(seen_32 == 8, "eight height-3 ideals at (3,2)");
}

void criterion_borel_closed_forms(Criterion& c) {
  std::uint64_t tuples = 0;
  for (int n = 1; n <= 6; ++n)
    for (int i = 1; i <= n; ++i) {
      std::vector<Exponent> u(static_cast<size_t>(n), 0);
      u[static_cast<size_t>(i - 1)] += 1;
      u[static_cast<size_t>(n - 1)] += 1;
      const std::int64_t brute = delta(principal_borel(Monomial(u))).delta;
      c.require(borel_deg2_delta(i, n) == BigInt(brute),
                "deg-2 closed form at i=" + std::to_string(i) +
                    ", n=" + std::to_string(n));
      const bool expected = n <= 3 || i <= 2;
      c.require((brute == 0) == expected,
                "deg-2 Freiman set at i=" + std::to_string(i) +
                    ", n=" + std::to_string(n));
      ++tuples;
    }
  c.require(tuples == 21, "21 degree-2 tuples");

  for (std::int64_t a2 = 0; a2 <= 3; ++a2)
    for (std::int64_t a3 = 1; a3 <= 4; ++a3) {
      const std::int64_t brute =
          delta(principal_borel(Monomial({0, a2, a3}))).delta;
      c.require(borel_3vars_delta(a2, a3) == BigInt(brute),
                "3-variable closed form at a2=" + std::to_string(a2) +
                    ", a3=" + std::to_string(a3));
      const bool expected = a3 == 1 || (a3 == 2 && a2 == 0);
      c.require((brute == 0) == expected,
                "3-variable Freiman set at a2=" + std::to_string(a2) +
                    ", a3=" + std::to_string(a3));
    }
}

void criterion_hibi(Criterion& c) {
  std::uint64_t checked = 0;
  for (int size = 1; size <= 4; ++size)
    for (const Poset& poset : enumerate_labeled_posets(size)) {
      const HibiVerdict predicate = hibi_freiman_predicate(poset);
      const FreimanReport rep = delta(hibi_ideal(poset));
      c.require(predicate.freiman == rep.freiman,
                "predicate vs delta on a size-" + std::to_string(size) + " poset");
      c.require(rep.spread == size + 1, "spread = |P| + 1");
      ++checked;
    }
  c.require(checked == 242, "242 labeled posets up to size 4");

  // size 5: the predicate cross-checks the chain test against the rank
  // criterion internally and throws on any disagreement.
  std::uint64_t size5 = 0;
  for (const Poset& poset : enumerate_labeled_posets(5)) {
    hibi_freiman_predicate(poset);
    ++size5;
  }
  c.require(size5 == 4231, "4231 labeled posets of size 5");
}

void criterion_squarefree_veronese(Criterion& c) {
  for (int n = 2; n <= 7; ++n)
    for (int d = 1; d < n; ++d) {
      MonomialIdeal ideal = veronese_type(VeroneseSpec::squarefree(n, d));
      FreimanReport rep = delta(ideal);
      c.require(BigInt(rep.mu) == binomial(n, d),
                "mu = C(n,d) at (" + std::to_string(n) + "," + std::to_string(d) + ")");
      c.require(squarefree_veronese_mu2(n, d) == BigInt(rep.mu2),
                "mu2 formula at (" + std::to_string(n) + "," + std::to_string(d) + ")");
      c.require(rep.freiman == (d == 1 || d == n - 1),
                "Freiman exactly at d in {1, n-1}, (" + std::to_string(n) + "," +
                    std::to_string(d) + ")");
    }
  c.require(delta(veronese_type(VeroneseSpec::squarefree(4, 2))).delta == 1,
            "delta(I_{4,2}) = 1");
}

void criterion_veronese_topminus1(Criterion& c) {
  for (int n = 2; n <= 5; ++n)
    for (int d = 2; d <= 5; ++d) {
      if (n * (d - 1) <= d) continue;
      c.require(katzman_multiplicity(VeroneseSpec::top_minus_one(n, d)) ==
                    int_pow(BigInt(d), n - 1) - n,
                "katzman simplification at (" + std::to_string(n) + "," +
                    std::to_string(d) + ")");
    }
  for (int n = 2; n <= 6; ++n)
    for (int d = 2; d <= 6; ++d) {
      const bool zero = veronese_topminus1_f(n, d) == 0;
      const bool expected = n == 2 || (n == 3 && d == 2);
      c.require(zero == expected, "f zero-set at (" + std::to_string(n) + "," +
                                      std::to_string(d) + ")");
    }
  for (auto [n, d] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    MonomialIdeal ideal = veronese_type(VeroneseSpec::top_minus_one(n, d));
    HVectorPrefix h = h_vector_prefix(ideal, 6);
    std::int64_t sum = 0;
    for (std::int64_t v : h.values) sum += v;
    c.require(BigInt(sum) == katzman_multiplicity(VeroneseSpec::top_minus_one(n, d)),
              "h-prefix sum equals the multiplicity at (" + std::to_string(n) +
                  "," + std::to_string(d) + ")");
  }
}

void criterion_power_formula(Criterion& c) {
  for (auto [n, d] : std::vector<std::pair<int, Exponent>>{{2, 2}, {2, 3}, {3, 2}})
    for (const MonomialIdeal& ideal : height_census(n, d)) {
      FreimanReport rep = delta(ideal);
      if (!rep.freiman) continue;
      for (std::int64_t k = 2; k <= 4; ++k)
        c.require(BigInt(ideal_power(ideal, k).mu()) ==
                      power_count_formula(rep.spread, rep.mu, k),
                  "power formula k=" + std::to_string(k) + " on " + ideal.str());
    }
}

void criterion_property_suites(Criterion& c) {
  std::mt19937_64 rng(20260809);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const long long d = 1 + static_cast<long long>(rng() % 3);
    FreimanReport rep = delta(helpers::random_equigenerated(rng, n, d));
    c.require(rep.delta >= 0, "Freiman inequality on trial " + std::to_string(trial));
  }

  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const long long d = 1 + static_cast<long long>(rng() % 3);
    MonomialIdeal ideal = helpers::random_equigenerated(rng, n, d);
    FreimanReport rep = delta(ideal);
    for (Exponent q = 2; q <= 3; ++q) {
      FreimanReport scaled = delta(pseudo_frobenius_power(ideal, q));
      c.require(scaled.delta == rep.delta && scaled.spread == rep.spread,
                "pseudo-Frobenius invariance on trial " + std::to_string(trial));
    }
    FreimanReport extended = delta(extend_with_pure_power(ideal, d));
    c.require(extended.freiman == rep.freiman,
              "pure-power extension invariance on trial " + std::to_string(trial));
  }

  auto xy_power = [](Exponent e, std::int64_t k) {
    return ideal_power(MonomialIdeal::minimalize(
                           2, {Monomial::pure_power(2, 0, e),
                               Monomial::pure_power(2, 1, e)}),
                       k);
  };
  for (Exponent a = 1; a <= 4; ++a)
    for (Exponent b = a; b <= 4; ++b)
      for (std::int64_t r = 1; r <= 4; ++r)
        for (std::int64_t s = 1; s <= 4; ++s) {
          MonomialIdeal prod = ideal_product(xy_power(a, r), xy_power(b, s));
          auto predicted = two_var_power_product(a, r, b, s);
          const std::int64_t t = prod.mu() - 1;
          const Exponent total = a * r + b * s;
          const bool brute =
              t >= 1 && total % t == 0 && prod == xy_power(total / t, t);
          std::ostringstream tuple;
          tuple << "(a,r,b,s)=(" << a << ',' << r << ',' << b << ',' << s << ')';
          if (predicted) {
            c.require(brute && prod == xy_power(predicted->first, predicted->second),
                      "two-variable product at " + tuple.str());
          } else {
            c.require(!brute, "two-variable non-product at " + tuple.str());
          }
        }
}

void criterion_determinism(Criterion& c) {
  for (bool height : {false, true}) {
    CensusOptions serial;
    serial.filter.height_max = height;
    serial.jobs = 1;
    CensusOptions parallel = serial;
    parallel.jobs = 4;
    c.require(to_json(freiman_census(3, 2, serial)) ==
                  to_json(freiman_census(3, 2, parallel)),
              std::string("byte-identical census JSON, height_max=") +
                  (height ? "on" : "off"));
  }
}

}  // namespace

int main() {
  criterion(1, "worked examples reproduce exactly", criterion_worked_examples);
  criterion(2, "powers of the maximal ideal", criterion_maxideal_powers);
  criterion(3, "maximal-height equivalence (delta = reduction = classifier)",
            criterion_maxheight_equivalence);
  criterion(4, "Borel closed forms match brute force", criterion_borel_closed_forms);
  criterion(5, "Hibi predicate matches brute force; spread = |P|+1",
            criterion_hibi);
  criterion(6, "squarefree Veronese counts and verdicts",
            criterion_squarefree_veronese);
  criterion(7, "Veronese with bounds d-1: multiplicity and gap",
            criterion_veronese_topminus1);
  criterion(8, "power-count formula on Freiman census ideals",
            criterion_power_formula);
  criterion(9, "property suites (inequality, invariances, products)",
            criterion_property_suites);
  criterion(10, "census determinism across worker counts", criterion_determinism);

  if (failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << failures << " criterion(s) failed\n";
  return 1;
}
