#include "freiman/invariants.hpp"

#include <sstream>
#include <stdexcept>

#include "freiman/errors.hpp"

namespace freiman {

namespace {

Exponent require_equigenerated(const MonomialIdeal& ideal, const char* op) {
  auto d = ideal.equigenerated_degree();
  if (!d) {
    std::ostringstream os;
    os << op << " requires an equigenerated ideal; " << ideal.str()
       << " has mixed generator degrees";
    throw UnsupportedInput(os.str());
  }
  return *d;
}

}  // namespace

int analytic_spread(const MonomialIdeal& ideal) {
  require_equigenerated(ideal, "analytic spread");
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) {
    std::vector<BigInt> row;
    row.reserve(static_cast<size_t>(ideal.ambient()));
    for (Exponent e : g.exponents()) row.emplace_back(e);
    rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(rows));
}

BigInt freiman_lower_bound(std::int64_t mu, std::int64_t spread) {
  if (spread > mu)
    throw std::invalid_argument("spread exceeds mu (l(I) <= mu(I) must hold)");
  return BigInt(spread) * mu - binomial(spread, 2);
}

FreimanReport delta(const MonomialIdeal& ideal) {
  FreimanReport rep;
  rep.ambient = ideal.ambient();
  rep.degree = require_equigenerated(ideal, "delta");
  rep.mu = ideal.mu();
  rep.mu2 = ideal_power(ideal, 2).mu();
  rep.spread = analytic_spread(ideal);
  rep.delta = to_int64(rep.mu2 - freiman_lower_bound(rep.mu, rep.spread));
  rep.freiman = rep.delta == 0;
  if (rep.delta < 0) {
    std::ostringstream os;
    os << "Freiman inequality violated for " << ideal.str() << ": mu=" << rep.mu
       << " mu2=" << rep.mu2 << " spread=" << rep.spread
       << " delta=" << rep.delta;
    throw std::logic_error(os.str());
  }
  return rep;
}

HVectorPrefix h_vector_prefix(const MonomialIdeal& ideal, int prefix_len) {
  if (prefix_len < 0) throw std::invalid_argument("negative h-vector prefix");
  require_equigenerated(ideal, "h-vector");
  const std::int64_t spread = analytic_spread(ideal);

  std::vector<BigInt> mus;  // mu(I^0), mu(I^1), ...
  mus.emplace_back(1);
  MonomialIdeal power = ideal;
  for (int k = 1; k <= prefix_len; ++k) {
    if (k > 1) power = ideal_product(power, ideal);
    mus.emplace_back(power.mu());
  }

  HVectorPrefix h;
  h.spread = spread;
  h.values.reserve(static_cast<size_t>(prefix_len) + 1);
  for (int k = 0; k <= prefix_len; ++k) {
    BigInt hk = 0;
    for (int j = 0; j <= k; ++j) {
      BigInt term = binomial(spread, j) * mus[static_cast<size_t>(k - j)];
      hk += (j % 2 == 0) ? term : -term;
    }
    h.values.push_back(to_int64(hk));
  }
  return h;
}

BigInt power_count_formula(std::int64_t spread, std::int64_t mu, std::int64_t k) {
  if (k < 1) throw std::invalid_argument("power count formula needs k >= 1");
  return binomial(spread + k - 2, k - 1) * mu -
         BigInt(k - 1) * binomial(spread + k - 2, k);
}

bool power_formula_holds(const MonomialIdeal& ideal, std::int64_t k) {
  if (k < 2) throw std::invalid_argument("power formula test needs k >= 2");
  require_equigenerated(ideal, "power formula test");
  const std::int64_t spread = analytic_spread(ideal);
  return BigInt(ideal_power(ideal, k).mu()) ==
         power_count_formula(spread, ideal.mu(), k);
}

bool reduction_step_test(const MonomialIdeal& ideal, const MonomialIdeal& sub) {
  if (ideal.ambient() != sub.ambient())
    throw std::invalid_argument("reduction test needs a common ambient ring");
  if (!ideal.contains(sub))
    throw std::invalid_argument("reduction test requires J contained in I");
  const MonomialIdeal square = ideal_power(ideal, 2);
  const MonomialIdeal step = ideal_product(sub, ideal);
  return step.contains(square) && square.contains(step);
}

BigInt minimal_multiplicity_gap(const BigInt& mu, const BigInt& spread,
                                const BigInt& e) {
  if (mu <= 0 || spread <= 0 || e <= 0)
    throw std::invalid_argument("minimal multiplicity gap needs positive inputs");
  return e + spread - 1 - mu;
}

}  // namespace freiman
