#include "galrep/census.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

#include "galrep/modarith.hpp"
#include "galrep/modpoly.hpp"

namespace galrep {

std::string format_ratio(std::uint64_t U, std::uint64_t L, std::uint64_t p) {
  if (L > U) throw std::invalid_argument("format_ratio: L > U");
  std::uint64_t v = (U - L) * 1000000 / (p * p);
  if (v == 0) return "0";
  std::string digits = std::to_string(v);
  digits.insert(0, 6 - digits.size(), '0');
  while (digits.back() == '0') digits.pop_back();
  return "0." + digits;
}

Census::Census(CharpolyCache& cache, CensusOptions opt)
    : cache_(cache), opt_(std::move(opt)) {
  if (opt_.r_max < 3) throw std::invalid_argument("Census: r_max must be >= 3");
  if (opt_.ell_candidates.empty())
    throw std::invalid_argument("Census: need at least one ell candidate");
}

std::uint64_t Census::u_bound(std::uint64_t p) {
  if (p < 5 || !is_prime(p)) throw std::invalid_argument("u_bound: need a prime >= 5");
  std::uint64_t total = 0;
  for (unsigned k = 4; k <= p + 1; k += 2) total += dim_cusp(k);
  return (p - 1) * total;
}

std::optional<std::pair<unsigned, unsigned>> Census::find_p_good(std::uint64_t p,
                                                                 unsigned k) {
  unsigned n = dim_cusp(k);
  if (n == 0) throw std::invalid_argument("find_p_good: empty cusp space");
  for (unsigned r = 2; r < opt_.r_max; ++r) {
    auto h = cache_.hecke_charpoly(k, r);
    unsigned f = distinct_root_count(reduce_scaled(*h, p, 1));
    // A squarefree reduction already forces disc(h_r) != 0 and nu = 0; the
    // exact discriminant is only needed once congruences are present.
    if (f == n) return std::make_pair(r, f);
    auto disc = cache_.hecke_charpoly_disc(k, r);
    if (*disc == 0) continue;
    unsigned nu = padic_valuation(*disc, p);
    if (nu >= n) continue;  // bound n - nu degenerate
    if (f < n - nu)
      throw std::logic_error("find_p_good: f < n - nu contradicts the theorem");
    if (f == n - nu) return std::make_pair(r, f);
  }
  return std::nullopt;
}

namespace {

std::vector<std::uint64_t> nonresidue_primes(std::uint64_t p, unsigned count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t l = 2; out.size() < count; l = next_prime(l)) {
    if (l % p == 0) continue;
    if (!is_quadratic_residue(l, p)) out.push_back(l);
  }
  return out;
}

}  // namespace

std::pair<unsigned, bool> Census::e_count_fallback(std::uint64_t p, unsigned k) {
  if (p % 4 != 3 || 2 * static_cast<std::uint64_t>(k) != p + 1)
    throw std::invalid_argument("e_count_fallback: need p = 3 mod 4 and k = (p+1)/2");
  unsigned n = dim_cusp(k);
  unsigned h = class_number_neg_p(p);
  unsigned dihedral = (h - 1) / 2;
  unsigned best = 0;
  for (std::uint64_t l : nonresidue_primes(p, 3)) {
    ModPoly f = reduce_scaled(*cache_.hecke_charpoly(k, static_cast<unsigned>(l)), p, 1);
    unsigned zero_mult = zero_root_multiplicity(f);
    if (zero_mult < dihedral)
      throw std::logic_error(
          "e_count_fallback: charpoly not divisible by x^((h-1)/2)");
    unsigned nonzero_roots = distinct_root_count(f) - (zero_mult > 0 ? 1 : 0);
    best = std::max(best, nonzero_roots + dihedral);
    if (best == n) break;
  }
  return {best, best == n};
}

Census::TameBounds Census::tame_bounds(std::uint64_t p, unsigned k) {
  if (k % 2 != 0 || k < 4 || k > p + 1)
    throw std::invalid_argument("tame_bounds: need even 4 <= k <= p+1");
  TameBounds tb;
  if (dim_cusp(k) == 0) return tb;
  auto record = [&tb](std::uint64_t l) {
    if (std::find(tb.ells.begin(), tb.ells.end(), l) == tb.ells.end())
      tb.ells.push_back(l);
  };
  auto bound_side = [&](unsigned companion, unsigned scale_exp, bool self_paired) {
    if (dim_cusp(companion) == 0) return 0u;
    std::vector<std::uint64_t> ells =
        self_paired ? std::vector<std::uint64_t>{smallest_nonresidue(p)}
                    : opt_.ell_candidates;
    unsigned best = dim_cusp(k);
    for (std::uint64_t l : ells) {
      if (l == p) continue;
      auto h = cache_.hecke_charpoly(k, static_cast<unsigned>(l));
      auto j = cache_.hecke_charpoly(companion, static_cast<unsigned>(l));
      unsigned e = linking_number(*h, *j, p, 1, powmod(l % p, scale_exp, p));
      best = std::min(best, e);
      record(l);
    }
    if (self_paired) {
      // At its own companion weight the twist involution acts on the tame
      // set with only the dihedral eigensystems fixed, so the count is
      // dihedral + even (split side, k = (p+1)/2) or plain even (irr side,
      // k = (p+3)/2); an odd excess in the linking number is unreachable.
      unsigned fixed =
          p % 4 == 3 && 2 * static_cast<std::uint64_t>(k) == p + 1
              ? (class_number_neg_p(p) - 1) / 2
              : 0;
      if (best < fixed)
        throw std::logic_error("tame_bounds: linking number below the dihedral count");
      best = fixed + 2 * ((best - fixed) / 2);
    }
    return best;
  };
  tb.split = bound_side(static_cast<unsigned>(p + 1 - k), k - 1,
                        2 * static_cast<std::uint64_t>(k) == p + 1);
  tb.irr = bound_side(static_cast<unsigned>(p + 3 - k), k - 2,
                      2 * static_cast<std::uint64_t>(k) == p + 3);
  return tb;
}

WeightReport Census::weight_census(std::uint64_t p, unsigned k,
                                   const BernoulliTable& bt) {
  if (k % 2 != 0 || k < 4 || k > p + 1)
    throw std::invalid_argument("weight_census: need even 4 <= k <= p+1");
  WeightReport w;
  w.p = p;
  w.k = k;
  w.n_k = dim_cusp(k);
  w.e_exact = true;  // vacuously, for the empty space
  if (p % 4 == 3 && 2 * static_cast<std::uint64_t>(k) == p + 1)
    w.dihedral = (class_number_neg_p(p) - 1) / 2;
  if (w.n_k == 0) return w;

  w.eis = static_cast<unsigned>(eisenstein_count(p, k, bt));

  if (auto good = find_p_good(p, k)) {
    w.p_good_r = good->first;
    w.e_count = good->second;
    w.e_exact = true;
    if (w.n_k - w.e_count >= 3)
      std::cerr << "WARNING: congruence rarity violated at (p=" << p << ", k=" << k
                << "): n_k - |E| = " << (w.n_k - w.e_count) << "\n";
  } else if (p % 4 == 3 && 2 * static_cast<std::uint64_t>(k) == p + 1) {
    auto [count, exact] = e_count_fallback(p, k);
    w.e_count = count;
    w.e_exact = exact;
  } else {
    // Last resort: any single reduced charpoly gives a valid lower bound.
    w.e_count = distinct_root_count(reduce_scaled(*cache_.hecke_charpoly(k, 2), p, 1));
    w.e_exact = false;
  }
  // The Eisenstein system is itself an element of E(p,k).
  w.e_count = std::max(w.e_count, w.eis);

  TameBounds tb = tame_bounds(p, k);
  w.ells_used = tb.ells;
  unsigned cap = w.n_k - w.eis;
  w.split_bound = std::min(tb.split, cap);
  w.irr_bound = std::min(tb.irr, cap - w.split_bound);
  return w;
}

WeightReport Census::weight_census(std::uint64_t p, unsigned k) {
  return weight_census(p, k, BernoulliTable(p));
}

Census::PrimeResult Census::prime_census(std::uint64_t p) {
  if (p < 11 || !is_prime(p))
    throw std::invalid_argument("prime_census: need a prime >= 11");
  BernoulliTable bt(p);
  PrimeResult res;
  std::uint64_t s2 = 0;
  bool exact = true;
  for (unsigned k = 12; k <= p + 1; k += 2) {
    if (dim_cusp(k) == 0) continue;
    WeightReport w = weight_census(p, k, bt);
    std::int64_t term = 2 * static_cast<std::int64_t>(w.e_count) - 2 * w.eis -
                        w.split_bound - w.irr_bound;
    if (term > 0) s2 += static_cast<std::uint64_t>(term);
    exact = exact && w.e_exact && w.irr_bound == 0 && w.split_bound == w.dihedral;
    res.weights.push_back(std::move(w));
  }
  res.row.p = p;
  res.row.U = u_bound(p);
  res.row.L = (p - 1) * s2 / 2;
  res.row.exact = exact;
  res.row.ratio = format_ratio(res.row.U, res.row.L, p);
  if (res.row.L > res.row.U)
    throw std::logic_error("prime_census: lower bound exceeds upper bound");
  return res;
}

}  // namespace galrep
