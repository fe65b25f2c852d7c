#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "galrep/charpoly_cache.hpp"
#include "galrep/numth.hpp"

namespace galrep {

/// Everything the census records about one (p, k) pair.
struct WeightReport {
  std::uint64_t p = 0;
  unsigned k = 0;
  unsigned n_k = 0;      // dim of the weight-k cusp space
  unsigned e_count = 0;  // |E(p,k)| when e_exact, otherwise a lower bound
  bool e_exact = false;
  std::optional<unsigned> p_good_r;  // the r that certified exactness
  unsigned eis = 0;                  // |E^Eis(p,k)|, 0 or 1
  unsigned split_bound = 0;          // clamped upper bound for |E^{p-split}|
  unsigned irr_bound = 0;            // clamped upper bound for |E^{p-irr}|
  unsigned dihedral = 0;             // (h-1)/2 at the dihedral weight
  std::vector<std::uint64_t> ells_used;
};

struct PrimeCensusRow {
  std::uint64_t p = 0;
  std::uint64_t L = 0;
  std::uint64_t U = 0;
  bool exact = false;  // the published table's * flag: L is provably R(p)
  std::string ratio;   // truncate_6((U-L)/p^2), trailing zeros stripped
};

struct CensusOptions {
  unsigned r_max = 20;                          // p-good search tries 1 < r < r_max
  std::vector<std::uint64_t> ell_candidates{2, 3};  // tame-bound primes
};

// (U-L)/p^2 truncated (toward zero) to 6 decimals, then trailing zeros
// stripped; "0" when U = L. Matches the table formatting bit for bit.
std::string format_ratio(std::uint64_t U, std::uint64_t L, std::uint64_t p);

class Census {
 public:
  explicit Census(CharpolyCache& cache, CensusOptions opt = {});

  // Eq.-(3) bound: (p-1) * sum of dim M^0_k over even 4 <= k <= p+1.
  static std::uint64_t u_bound(std::uint64_t p);

  /// Searches r = 2, 3, ... < r_max for a p-good Hecke operator on M^0_k:
  /// skips r with vanishing discriminant, and returns (r, f) for the first r
  /// with f = n_k - nu_p(disc h_r), which pins |E(p,k)| = f exactly.
  std::optional<std::pair<unsigned, unsigned>> find_p_good(std::uint64_t p, unsigned k);

  /// Dihedral fallback at k = (p+1)/2, p = 3 mod 4: counts distinct nonzero
  /// roots of the reduced charpoly of T_l for non-residue primes l, plus the
  /// (h-1)/2 dihedral systems hiding in the zero root. Returns (lower bound,
  /// exact flag); exact iff the bound reaches n_k.
  std::pair<unsigned, bool> e_count_fallback(std::uint64_t p, unsigned k);

  struct TameBounds {
    unsigned split = 0;  // unclamped
    unsigned irr = 0;    // unclamped
    std::vector<std::uint64_t> ells;
  };
  /// Linking-number bounds on the tame subsets at weight k: companions
  /// p+1-k (split, scale l^(k-1)) and p+3-k (irr, scale l^(k-2)), minimized
  /// over the candidate primes. At the self-paired weights (p+1)/2 and
  /// (p+3)/2 the candidate is the smallest non-residue mod p instead, since
  /// a residue l would reduce both charpolys identically and return the
  /// worthless bound n_k.
  TameBounds tame_bounds(std::uint64_t p, unsigned k);

  WeightReport weight_census(std::uint64_t p, unsigned k, const BernoulliTable& bt);
  WeightReport weight_census(std::uint64_t p, unsigned k);

  struct PrimeResult {
    PrimeCensusRow row;
    std::vector<WeightReport> weights;  // the nonempty weights, ascending k
  };
  PrimeResult prime_census(std::uint64_t p);

  const CensusOptions& options() const { return opt_; }

 private:
  CharpolyCache& cache_;
  CensusOptions opt_;
};

}  // namespace galrep
