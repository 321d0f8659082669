#include "freiman/families.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "freiman/invariants.hpp"

namespace freiman {

MonomialIdeal borel_closure(int ambient_n, std::vector<Monomial> seeds) {
  if (seeds.empty()) throw std::invalid_argument("borel closure needs seeds");
  for (const Monomial& s : seeds)
    if (s.ambient() != ambient_n)
      throw std::invalid_argument("seed ambient mismatch");

  // Exchange moves x_i*(u/x_j), i < j, keep degree fixed; the index
  // vector strictly drops in each move, so the worklist terminates.
  std::set<std::vector<Exponent>> seen;
  std::vector<Monomial> work = seeds;
  for (const Monomial& s : seeds) seen.insert(s.exponents());
  while (!work.empty()) {
    Monomial u = work.back();
    work.pop_back();
    for (int j = 0; j < ambient_n; ++j) {
      if (u[j] == 0) continue;
      for (int i = 0; i < j; ++i) {
        std::vector<Exponent> v = u.exponents();
        --v[static_cast<size_t>(j)];
        ++v[static_cast<size_t>(i)];
        if (seen.insert(v).second) work.emplace_back(v);
      }
    }
  }
  std::vector<Monomial> gens;
  gens.reserve(seen.size());
  for (const auto& v : seen) gens.emplace_back(v);
  return MonomialIdeal::minimalize(ambient_n, std::move(gens));
}

MonomialIdeal principal_borel(const Monomial& u) {
  return borel_closure(u.ambient(), {u});
}

BigInt borel_deg2_delta(int i, int n) {
  if (i < 1 || i > n) throw std::invalid_argument("borel_deg2_delta needs 1 <= i <= n");
  BigInt num = BigInt(i - 1) * (i - 2) *
               (BigInt(6) * n * n - BigInt(2) * n * (4 * i + 3) +
                BigInt(3) * i * (i + 1));
  BigInt q = num / 24;
  if (q * 24 != num) throw std::logic_error("borel_deg2_delta: non-integral value");
  return q;
}

BigInt borel_3vars_delta(std::int64_t a2, std::int64_t a3) {
  if (a2 < 0 || a3 < 1)
    throw std::invalid_argument("borel_3vars_delta needs a2 >= 0, a3 >= 1");
  return BigInt(a2) * (a3 - 1) + binomial(a3 - 1, 2);
}

MonomialIdeal hibi_ideal(const Poset& poset) {
  const int k = poset.size();
  std::vector<Monomial> gens;
  for (std::uint32_t downset : poset_downsets(poset)) {
    std::vector<Exponent> v(static_cast<size_t>(2 * k), 0);
    for (int p = 0; p < k; ++p) {
      if ((downset >> p) & 1)
        v[static_cast<size_t>(p)] = 1;  // x block
      else
        v[static_cast<size_t>(k + p)] = 1;  // y block
    }
    gens.emplace_back(std::move(v));
  }
  return MonomialIdeal::minimalize(2 * k, std::move(gens));
}

HibiVerdict hibi_freiman_predicate(const Poset& poset) {
  HibiVerdict verdict;
  for (int p = 0; p < poset.size(); ++p) {
    if (poset.is_chain_without(p)) {
      verdict.freiman = true;
      verdict.witness = p;
      break;
    }
  }
  const bool by_rank = poset.rank() >= poset.size() - 2;
  if (by_rank != verdict.freiman) {
    std::ostringstream os;
    os << "hibi criteria disagree on a " << poset.size()
       << "-element poset: chain-minus-a-point=" << verdict.freiman
       << " rank-criterion=" << by_rank;
    throw std::logic_error(os.str());
  }
  return verdict;
}

VeroneseSpec::VeroneseSpec(int n_, Exponent d_, std::vector<Exponent> bounds_)
    : n(n_), d(d_), bounds(std::move(bounds_)) {
  if (n <= 0 || d <= 0) throw std::invalid_argument("veronese needs n, d >= 1");
  if (static_cast<int>(bounds.size()) != n)
    throw std::invalid_argument("veronese needs one bound per variable");
  Exponent sum = 0;
  for (size_t i = 0; i < bounds.size(); ++i) {
    if (bounds[i] < 1 || bounds[i] > d)
      throw std::invalid_argument("veronese bounds must lie in [1, d]");
    if (i > 0 && bounds[i] < bounds[i - 1])
      throw std::invalid_argument("veronese bounds must be non-decreasing");
    sum = checked_add(sum, bounds[i]);
  }
  if (sum <= d)
    throw std::invalid_argument("veronese bounds must sum to more than d");
}

VeroneseSpec VeroneseSpec::squarefree(int n, Exponent d) {
  return VeroneseSpec(n, d, std::vector<Exponent>(static_cast<size_t>(n), 1));
}

VeroneseSpec VeroneseSpec::unbounded(int n, Exponent d) {
  return VeroneseSpec(n, d, std::vector<Exponent>(static_cast<size_t>(n), d));
}

VeroneseSpec VeroneseSpec::top_minus_one(int n, Exponent d) {
  return VeroneseSpec(n, d, std::vector<Exponent>(static_cast<size_t>(n), d - 1));
}

namespace {

void enumerate_bounded(const VeroneseSpec& spec, size_t pos, Exponent remaining,
                       std::vector<Exponent>& current,
                       std::vector<Monomial>& out) {
  if (pos + 1 == current.size()) {
    if (remaining <= spec.bounds[pos]) {
      current[pos] = remaining;
      out.emplace_back(current);
    }
    return;
  }
  const Exponent top = std::min(spec.bounds[pos], remaining);
  for (Exponent e = top; e >= 0; --e) {
    current[pos] = e;
    enumerate_bounded(spec, pos + 1, remaining - e, current, out);
  }
}

}  // namespace

MonomialIdeal veronese_type(const VeroneseSpec& spec) {
  std::vector<Monomial> gens;
  std::vector<Exponent> current(static_cast<size_t>(spec.n), 0);
  enumerate_bounded(spec, 0, spec.d, current, gens);
  if (gens.empty())
    throw std::invalid_argument("veronese spec admits no monomials");
  return MonomialIdeal::minimalize(spec.n, std::move(gens));
}

BigInt squarefree_veronese_mu2(int n, int d) {
  if (d < 1 || d >= n)
    throw std::invalid_argument("squarefree veronese needs 1 <= d <= n-1");
  BigInt total = 0;
  for (int i = 0; i <= d; ++i)
    total += binomial(n, 2 * i) * binomial(n - 2 * i, d - i);
  return total;
}

BigInt katzman_multiplicity(const VeroneseSpec& spec) {
  if (spec.n > 63) throw std::invalid_argument("katzman limited to 63 variables");
  BigInt total = 0;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << spec.n); ++subset) {
    Exponent sum = 0;
    int size = 0;
    for (int i = 0; i < spec.n; ++i)
      if ((subset >> i) & 1) {
        sum += spec.bounds[static_cast<size_t>(i)];
        ++size;
      }
    if (sum >= spec.d) continue;
    BigInt term = int_pow(BigInt(spec.d - sum), spec.n - 1);
    total += (size % 2 == 0) ? term : -term;
  }
  return total;
}

BigInt veronese_topminus1_f(int n, int d) {
  if (n < 2 || d < 2) throw std::invalid_argument("f(n,d) needs n, d >= 2");
  return int_pow(BigInt(d), n - 1) - binomial(n + d - 1, d) + n - 1;
}

BigInt maxideal_power_delta(int n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("maxideal delta needs n, m >= 1");
  return binomial(n + 2 * m - 1, 2 * m) - BigInt(n) * binomial(n + m - 1, m) +
         binomial(n, 2);
}

MonomialIdeal maximal_ideal_power(int n, Exponent m) {
  if (m < 1) throw std::invalid_argument("maximal ideal power needs m >= 1");
  std::vector<Monomial> vars;
  for (int i = 0; i < n; ++i) vars.push_back(Monomial::variable(n, i));
  return ideal_power(MonomialIdeal::minimalize(n, std::move(vars)), m);
}

}  // namespace freiman
