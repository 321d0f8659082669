#include "freiman/classify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "freiman/errors.hpp"
#include "freiman/invariants.hpp"

namespace freiman {

const char* to_string(NormalForm form) {
  switch (form) {
    case NormalForm::PurePowers: return "pure-powers";
    case NormalForm::MixedBlock: return "mixed-block";
    case NormalForm::MaximalIdeal: return "maximal-ideal";
  }
  return "?";
}

namespace {

MonomialIdeal pure_powers(int n, Exponent d) {
  std::vector<Monomial> gens;
  for (int i = 0; i < n; ++i) gens.push_back(Monomial::pure_power(n, i, d));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

bool is_pure_power_set(const MonomialIdeal& ideal) {
  for (const Monomial& g : ideal.generators())
    if (g.support().size() != 1) return false;
  return true;
}

/// (x_i : i in block)^d + (x_j^d : j outside), in ambient n.
MonomialIdeal block_normal_form(int n, const std::vector<int>& block, Exponent d) {
  std::vector<Monomial> vars;
  for (int i : block) vars.push_back(Monomial::variable(n, i));
  MonomialIdeal blk = ideal_power(MonomialIdeal::minimalize(n, std::move(vars)), d);
  std::vector<Monomial> gens = blk.generators();
  for (int j = 0; j < n; ++j)
    if (std::find(block.begin(), block.end(), j) == block.end())
      gens.push_back(Monomial::pure_power(n, j, d));
  return MonomialIdeal::minimalize(n, std::move(gens));
}

}  // namespace

MaxHeightVerdict classify_max_height(const MonomialIdeal& ideal) {
  auto deg = ideal.equigenerated_degree();
  if (!deg)
    throw UnsupportedInput("max-height classification requires an equigenerated ideal");
  const int n = ideal.ambient();
  if (height(ideal) != n)
    throw std::invalid_argument("max-height classification requires height(I) = n");

  MaxHeightVerdict verdict;
  verdict.freiman = reduction_step_test(ideal, pure_powers(n, *deg));

  PrimitiveRoot primitive = frobenius_primitive_root(ideal);
  verdict.primitive_q = primitive.q;
  if (!verdict.freiman) return verdict;

  const MonomialIdeal& root = primitive.root;
  const Exponent root_deg = *deg / primitive.q;
  verdict.block_degree = root_deg;

  std::vector<int> block;
  {
    std::set<int> vars;
    for (const Monomial& g : root.generators()) {
      auto supp = g.support();
      if (supp.size() >= 2) vars.insert(supp.begin(), supp.end());
    }
    block.assign(vars.begin(), vars.end());
  }

  if (block.empty()) {
    // A primitive root without mixed generators is forced down to the
    // maximal ideal: pure d-th powers have exponent gcd d.
    if (root_deg != 1 || root.mu() != n)
      throw std::logic_error("height-n Freiman ideal without mixed generators "
                             "is not the maximal ideal: " + root.str());
    verdict.form = NormalForm::MaximalIdeal;
    verdict.block_size = n;
  } else {
    // The mixed generators force the block; within the block the normal
    // form is symmetric, so one relabeling decides the match.
    if (root != block_normal_form(n, block, root_deg)) {
      std::ostringstream os;
      os << "Freiman height-n ideal does not match its normal form: "
         << root.str();
      throw std::logic_error(os.str());
    }
    verdict.form = NormalForm::MixedBlock;
    verdict.block_size = static_cast<int>(block.size());
    const int r = verdict.block_size;
    if ((root_deg == 2 && r > 3) || (root_deg >= 3 && r > 2)) {
      std::ostringstream os;
      os << "normal form outside the classified range: r=" << r
         << " d=" << root_deg << " for " << root.str();
      throw std::logic_error(os.str());
    }
  }

  // position -> original variable: block first, then the rest.
  verdict.relabeling.assign(block.begin(), block.end());
  for (int j = 0; j < n; ++j)
    if (std::find(block.begin(), block.end(), j) == block.end())
      verdict.relabeling.push_back(j);
  return verdict;
}

ProductVerdict product_freiman_max_height(const MonomialIdeal& a,
                                          const MonomialIdeal& b) {
  if (a.ambient() != b.ambient())
    throw std::invalid_argument("product classification needs a common ambient ring");
  const int n = a.ambient();
  if (n <= 2)
    throw UnsupportedInput("no product classification in two variables");
  auto da = a.equigenerated_degree(), db = b.equigenerated_degree();
  if (!da || !db)
    throw UnsupportedInput("product classification requires equigenerated factors");
  if (height(a) != n || height(b) != n)
    throw std::invalid_argument("product classification requires height-n factors");

  if (n >= 4)
    return {false, "products of height-n ideals in n >= 4 variables are never Freiman"};

  const bool pure = is_pure_power_set(a) && is_pure_power_set(b);
  if (pure && *da == *db) {
    std::ostringstream os;
    os << "both factors equal the pure-power triple of degree " << *da;
    return {true, os.str()};
  }
  if (!pure)
    return {false, "a factor has a generator supported on two or more variables"};
  return {false, "the pure-power factors have different degrees"};
}

std::optional<std::pair<Exponent, std::int64_t>> two_var_power_product(
    Exponent a, std::int64_t r, Exponent b, std::int64_t s) {
  if (a < 1 || b < 1 || r < 1 || s < 1)
    throw std::invalid_argument("two_var_power_product needs positive arguments");
  if (a > b) throw std::invalid_argument("two_var_power_product requires a <= b");
  if (b % a != 0) return std::nullopt;
  const Exponent k = b / a;
  if (r < k - 1) return std::nullopt;
  return std::make_pair(a, r + k * s);
}

}  // namespace freiman
