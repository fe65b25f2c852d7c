#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "galrep/intpoly.hpp"
#include "galrep/qseries.hpp"

namespace galrep {

/// Cache of Hecke characteristic polynomials keyed by (weight k, operator
/// index n). The entries are characteristic-zero objects, reused across all
/// primes p. Optionally backed by a directory of text files, one per key:
///   line 1: "k n"
///   line 2: degree
///   line 3: space-separated coefficients, constant term first
/// Files are written atomically (temp file + rename).
///
/// Thread safety: concurrent readers are fine; on a miss the polynomial is
/// computed outside the lock and inserted if still absent, so duplicated
/// work is possible but torn values are not.
class CharpolyCache {
 public:
  explicit CharpolyCache(std::filesystem::path dir = {});

  std::shared_ptr<const IntPoly> hecke_charpoly(unsigned k, unsigned n);

  // Discriminant of hecke_charpoly(k, n), memoized under the same key.
  std::shared_ptr<const mpz_class> hecke_charpoly_disc(unsigned k, unsigned n);

  // Precompute all keys with even 12 <= k <= k_max, 2 <= n < r_max and
  // nonempty cusp space; returns the number of cache files written.
  std::size_t warm(unsigned k_max, unsigned r_max);

  const std::filesystem::path& directory() const { return dir_; }

 private:
  std::shared_ptr<const MillerBasis> basis_at_least(unsigned k, std::size_t prec);

  std::mutex mu_;
  std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const IntPoly>> polys_;
  std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const mpz_class>> discs_;
  std::mutex basis_mu_;
  std::map<unsigned, std::shared_ptr<const MillerBasis>> bases_;
  std::filesystem::path dir_;
};

std::filesystem::path charpoly_cache_filename(const std::filesystem::path& dir,
                                              unsigned k, unsigned n);
void write_charpoly_file(const std::filesystem::path& file, unsigned k,
                         unsigned n, const IntPoly& poly);
std::optional<IntPoly> read_charpoly_file(const std::filesystem::path& file,
                                          unsigned k, unsigned n);

}  // namespace galrep
