#include "galrep/numth.hpp"

#include <mutex>
#include <stdexcept>

#include "galrep/modarith.hpp"
#include "galrep/qseries.hpp"

namespace galrep {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                          19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n < 2) return 2;
  std::uint64_t c = n + 1;
  if (c % 2 == 0) {
    if (c == 2) return 2;
    ++c;
  }
  while (!is_prime(c)) c += 2;
  return c;
}

std::uint64_t prev_prime(std::uint64_t n) {
  if (n <= 2) throw std::invalid_argument("prev_prime: no prime below");
  std::uint64_t c = n - 1;
  if (c % 2 == 0) --c;
  if (c < 3) return 2;
  while (c >= 3 && !is_prime(c)) c -= 2;
  return c >= 3 ? c : 2;
}

bool is_quadratic_residue(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("is_quadratic_residue: p | a");
  return powmod(a, (p - 1) / 2, p) == 1;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("smallest_nonresidue: p must be an odd prime");
  for (std::uint64_t l = 2;; l = next_prime(l)) {
    if (l % p == 0) continue;
    if (!is_quadratic_residue(l, p)) return l;
  }
}

BernoulliTable::BernoulliTable(std::uint64_t p) : p_(p) {
  if (p < 7 || !is_prime(p))
    throw std::invalid_argument("BernoulliTable: p must be a prime >= 7");
  // (e^x - 1)/x truncated at degree p-3, then inverted as a power series;
  // b_k = k! * [x^k] of the inverse. Factorials up to (p-2)! are units.
  std::size_t n = static_cast<std::size_t>(p - 3);
  std::vector<std::uint64_t> fact(n + 2);
  fact[0] = 1;
  for (std::size_t i = 1; i <= n + 1; ++i) fact[i] = mulmod(fact[i - 1], i % p, p);
  std::vector<std::uint64_t> a(n + 1);  // a[i] = 1/(i+1)!
  for (std::size_t i = 0; i <= n; ++i) a[i] = invmod(fact[i + 1], p);
  std::vector<std::uint64_t> b(n + 1);
  b[0] = 1;  // a[0] = 1
  for (std::size_t i = 1; i <= n; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc = addmod(acc, mulmod(a[j], b[i - j], p), p);
    b[i] = acc == 0 ? 0 : p - acc;
  }
  values_.resize(n / 2);
  for (unsigned k = 2; k <= n; k += 2) values_[(k - 2) / 2] = mulmod(fact[k], b[k], p);
}

std::uint64_t BernoulliTable::at(unsigned k) const {
  if (k < 2 || k % 2 != 0 || k > p_ - 3)
    throw std::invalid_argument("BernoulliTable::at: need even 2 <= k <= p-3");
  return values_[(k - 2) / 2];
}

BernoulliTable bernoulli_mod_p(std::uint64_t p) { return BernoulliTable(p); }

mpq_class bernoulli_exact(unsigned k, unsigned bound) {
  if (k > bound) throw std::invalid_argument("bernoulli_exact: k exceeds bound");
  static std::mutex mu;
  static std::vector<mpq_class> table;  // table[m] = b_m
  std::lock_guard<std::mutex> lock(mu);
  if (table.empty()) table.emplace_back(1);
  for (unsigned m = table.size(); m <= k; ++m) {
    mpq_class acc(0);
    mpz_class binom;
    for (unsigned j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), m + 1, j);
      acc += mpq_class(binom) * table[j];
    }
    mpq_class bm = -acc / mpq_class(m + 1);
    bm.canonicalize();
    table.push_back(bm);
  }
  return table[k];
}

int eisenstein_count(std::uint64_t p, unsigned k, const BernoulliTable& table) {
  if (table.p() != p) throw std::invalid_argument("eisenstein_count: table/p mismatch");
  if (k % 2 != 0 || k < 4 || k > p + 1)
    throw std::invalid_argument("eisenstein_count: need even 4 <= k <= p+1");
  if (dim_cusp(k) == 0) return 0;
  if (k == p - 1 || k == p + 1) return 0;
  return table.at(k) == 0 ? 1 : 0;
}

unsigned class_number_neg_p(std::uint64_t p) {
  if (p % 4 != 3 || p <= 3 || !is_prime(p))
    throw std::invalid_argument("class_number_neg_p: p must be a prime = 3 mod 4, p > 3");
  // Reduced forms (a, b, c): b^2 - 4ac = -p, |b| <= a <= c, with b >= 0
  // whenever |b| = a or a = c. b = -a is excluded by normalizing b into
  // (-a, a]. Primitivity is automatic for prime discriminant.
  unsigned count = 0;
  for (std::uint64_t a = 1; 3 * a * a <= p; ++a) {
    for (std::int64_t b = -static_cast<std::int64_t>(a) + 1;
         b <= static_cast<std::int64_t>(a); ++b) {
      std::uint64_t b2 = static_cast<std::uint64_t>(b * b);
      if ((b2 + p) % (4 * a) != 0) continue;
      std::uint64_t c = (b2 + p) / (4 * a);
      if (c < a) continue;
      if (a == c && b < 0) continue;
      ++count;
    }
  }
  return count;
}

}  // namespace galrep
