#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "freiman/classify.hpp"
#include "freiman/errors.hpp"
#include "freiman/families.hpp"
#include "freiman/invariants.hpp"
#include "helpers.hpp"

using namespace freiman;
using helpers::ideal;
using helpers::mono;

namespace {

MonomialIdeal block_plus_pure(int n, int r, Exponent d) {
  std::vector<Monomial> vars;
  for (int i = 0; i < r; ++i) vars.push_back(Monomial::variable(n, i));
  std::vector<Monomial> gens =
      ideal_power(MonomialIdeal::minimalize(n, std::move(vars)), d).generators();
  for (int j = r; j < n; ++j) gens.push_back(Monomial::pure_power(n, j, d));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace

TEST_CASE("classifier on the normal forms") {
  MaxHeightVerdict v = classify_max_height(block_plus_pure(4, 3, 2));
  CHECK(v.freiman);
  CHECK(v.form == NormalForm::MixedBlock);
  CHECK(v.block_size == 3);
  CHECK(v.block_degree == 2);
  CHECK(v.primitive_q == 1);

  MaxHeightVerdict w = classify_max_height(block_plus_pure(3, 2, 3));
  CHECK(w.freiman);
  CHECK(w.form == NormalForm::MixedBlock);
  CHECK(w.block_size == 2);
  CHECK(w.block_degree == 3);

  MaxHeightVerdict cube = classify_max_height(maximal_ideal_power(3, 3));
  CHECK_FALSE(cube.freiman);
  CHECK_FALSE(cube.form.has_value());

  // pure cubes are the third pseudo-Frobenius power of the maximal ideal
  MaxHeightVerdict pure = classify_max_height(
      ideal({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}}));
  CHECK(pure.freiman);
  CHECK(pure.form == NormalForm::MaximalIdeal);
  CHECK(pure.primitive_q == 3);

  MaxHeightVerdict max = classify_max_height(ideal({{1, 0}, {0, 1}}));
  CHECK(max.freiman);
  CHECK(max.form == NormalForm::MaximalIdeal);
}

TEST_CASE("classifier sees through pseudo-Frobenius powers") {
  MaxHeightVerdict v =
      classify_max_height(pseudo_frobenius_power(maximal_ideal_power(2, 2), 2));
  CHECK(v.freiman);
  CHECK(v.primitive_q == 2);
  CHECK(v.form == NormalForm::MixedBlock);
  CHECK(v.block_size == 2);
  CHECK(v.block_degree == 2);
}

TEST_CASE("classifier relabels scrambled blocks") {
  // block {x2, x4} in four variables
  MonomialIdeal scrambled = ideal({{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0},
                                   {0, 0, 0, 2}, {0, 1, 0, 1}});
  MaxHeightVerdict v = classify_max_height(scrambled);
  CHECK(v.freiman);
  CHECK(v.form == NormalForm::MixedBlock);
  CHECK(v.block_size == 2);
  CHECK(v.relabeling == std::vector<int>{1, 3, 0, 2});
}

TEST_CASE("classifier input contract") {
  CHECK_THROWS_AS(classify_max_height(ideal({{1, 1, 0}, {1, 0, 1}})),
                  std::invalid_argument);  // height 1 < 3
  CHECK_THROWS_AS(classify_max_height(ideal({{2, 0}, {0, 3}})), UnsupportedInput);
}

TEST_CASE("classifier agrees with delta across a small census") {
  for (Exponent d = 2; d <= 3; ++d) {
    const auto slice = oracle::degree_slice(3, d);
    // all height-3 ideals: pure powers plus any subset of the rest
    std::vector<Monomial> pure, mixed;
    for (const auto& v : slice) {
      Monomial m{std::vector<Exponent>(v.begin(), v.end())};
      (m.support().size() == 1 ? pure : mixed).push_back(m);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << mixed.size()); ++mask) {
      std::vector<Monomial> gens = pure;
      for (size_t i = 0; i < mixed.size(); ++i)
        if ((mask >> i) & 1) gens.push_back(mixed[i]);
      MonomialIdeal ideal_ = MonomialIdeal::minimalize(3, std::move(gens));
      CHECK(classify_max_height(ideal_).freiman == delta(ideal_).freiman);
    }
  }
}

TEST_CASE("product classification") {
  MonomialIdeal pure_d = ideal({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  ProductVerdict same = product_freiman_max_height(pure_d, pure_d);
  CHECK(same.freiman);
  CHECK(delta(ideal_product(pure_d, pure_d)).freiman);

  MonomialIdeal pure_2 = ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  MonomialIdeal pure_1 = ideal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  ProductVerdict diff = product_freiman_max_height(pure_2, pure_1);
  CHECK_FALSE(diff.freiman);
  CHECK_FALSE(delta(ideal_product(pure_2, pure_1)).freiman);

  MonomialIdeal mixed = ideal({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {1, 1, 0}});
  CHECK_FALSE(product_freiman_max_height(mixed, pure_2).freiman);
  CHECK_FALSE(delta(ideal_product(mixed, pure_2)).freiman);

  MonomialIdeal four = ideal({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK_FALSE(product_freiman_max_height(four, four).freiman);
  CHECK_FALSE(delta(ideal_product(four, four)).freiman);

  CHECK_THROWS_AS(product_freiman_max_height(ideal({{1, 0}, {0, 1}}),
                                             ideal({{1, 0}, {0, 1}})),
                  UnsupportedInput);
  CHECK_THROWS_AS(product_freiman_max_height(pure_2, ideal({{1, 1, 0}, {1, 0, 1},
                                                            {0, 1, 1}})),
                  std::invalid_argument);  // height 2 factor
}

TEST_CASE("two-variable power products") {
  auto r1 = two_var_power_product(1, 2, 2, 1);
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::pair<Exponent, std::int64_t>{1, 4});

  CHECK_FALSE(two_var_power_product(1, 1, 3, 1).has_value());

  auto r3 = two_var_power_product(3, 2, 3, 4);
  REQUIRE(r3.has_value());
  CHECK(*r3 == std::pair<Exponent, std::int64_t>{3, 6});

  CHECK_THROWS_AS(two_var_power_product(3, 1, 2, 1), std::invalid_argument);

  SUBCASE("matches the brute-force product shape") {
    auto xy_power = [](Exponent e, std::int64_t k) {
      return ideal_power(ideal({{e, 0}, {0, e}}), k);
    };
    for (Exponent a = 1; a <= 3; ++a)
      for (Exponent b = a; b <= 3; ++b)
        for (std::int64_t r = 1; r <= 3; ++r)
          for (std::int64_t s = 1; s <= 3; ++s) {
            MonomialIdeal prod = ideal_product(xy_power(a, r), xy_power(b, s));
            auto predicted = two_var_power_product(a, r, b, s);
            // the shape (x^c, y^c)^t forces t = mu - 1 and c*t = ar + bs
            const std::int64_t t = prod.mu() - 1;
            const Exponent total = a * r + b * s;
            const bool matches_some =
                t >= 1 && total % t == 0 && prod == xy_power(total / t, t);
            if (predicted) {
              CHECK(matches_some);
              CHECK(prod == xy_power(predicted->first, predicted->second));
            } else {
              CHECK_FALSE(matches_some);
            }
          }
  }
}
