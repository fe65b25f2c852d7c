#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace galrep {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);
// Least prime > n.
std::uint64_t next_prime(std::uint64_t n);
// Largest prime < n; n must be > 2.
std::uint64_t prev_prime(std::uint64_t n);

// Euler criterion; a must not be divisible by p.
bool is_quadratic_residue(std::uint64_t a, std::uint64_t p);

// Least prime l with (l|p) = -1.
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// Bernoulli numbers b_k mod p for even 2 <= k <= p-3. All these b_k are
/// p-integral (von Staudt-Clausen: the denominator of b_k is divisible by p
/// only when (p-1) | k), so the residues are well defined.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::uint64_t p);  // p >= 7

  std::uint64_t p() const { return p_; }
  // k even, 2 <= k <= p-3.
  std::uint64_t at(unsigned k) const;

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> values_;  // index (k-2)/2
};

BernoulliTable bernoulli_mod_p(std::uint64_t p);

// Exact b_k by the defining recurrence sum_{j<=m} C(m+1,j) b_j = 0.
// Results are memoized; k beyond `bound` is rejected.
mpq_class bernoulli_exact(unsigned k, unsigned bound = 400);

// 1 iff the weight-k cusp space mod p carries the Eisenstein eigensystem,
// i.e. dim M^0_k > 0 and p divides the numerator of b_k. Handles the edge
// weights k = p-1 (never, von Staudt-Clausen pole) and k = p+1 (never, by
// the Kummer congruence b_{p+1}/(p+1) = b_2/2 mod p).
int eisenstein_count(std::uint64_t p, unsigned k, const BernoulliTable& table);

// h(-p) for p = 3 mod 4, p > 3, by counting reduced primitive forms
// (a, b, c) of discriminant -p.
unsigned class_number_neg_p(std::uint64_t p);

}  // namespace galrep
