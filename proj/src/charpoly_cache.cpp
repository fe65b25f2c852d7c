#include "galrep/charpoly_cache.hpp"

#include <atomic>
#include <fstream>
#include <stdexcept>
#include <string>

#include <unistd.h>

namespace galrep {

namespace fs = std::filesystem;

CharpolyCache::CharpolyCache(fs::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) fs::create_directories(dir_);
}

std::shared_ptr<const MillerBasis> CharpolyCache::basis_at_least(unsigned k,
                                                                 std::size_t prec) {
  std::size_t build = prec;
  {
    std::lock_guard<std::mutex> lock(basis_mu_);
    auto it = bases_.find(k);
    if (it != bases_.end()) {
      if (it->second->prec() >= prec) return it->second;
      // Regrow with headroom so a deep p-good scan does not rebuild the
      // basis once per operator index.
      build = std::max(prec, it->second->prec() * 3 / 2);
    }
  }
  auto fresh = std::make_shared<const MillerBasis>(miller_basis(k, build));
  std::lock_guard<std::mutex> lock(basis_mu_);
  auto& slot = bases_[k];
  if (!slot || slot->prec() < fresh->prec()) slot = fresh;
  return slot;
}

std::shared_ptr<const IntPoly> CharpolyCache::hecke_charpoly(unsigned k, unsigned n) {
  const auto key = std::make_pair(k, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = polys_.find(key);
    if (it != polys_.end()) return it->second;
  }

  std::shared_ptr<const IntPoly> computed;
  if (!dir_.empty()) {
    if (auto fromdisk = read_charpoly_file(charpoly_cache_filename(dir_, k, n), k, n))
      computed = std::make_shared<const IntPoly>(std::move(*fromdisk));
  }
  bool fresh = !computed;
  if (fresh) {
    unsigned d = dim_cusp(k);
    IntPoly hp = d == 0 ? IntPoly::one()
                        : charpoly(hecke_matrix(
                              *basis_at_least(k, static_cast<std::size_t>(d) * n + 1), n));
    computed = std::make_shared<const IntPoly>(std::move(hp));
  }

  std::shared_ptr<const IntPoly> winner;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = polys_.emplace(key, computed);
    winner = it->second;
    fresh = fresh && inserted;
  }
  if (fresh && !dir_.empty()) {
    auto file = charpoly_cache_filename(dir_, k, n);
    if (!fs::exists(file)) write_charpoly_file(file, k, n, *winner);
  }
  return winner;
}

std::shared_ptr<const mpz_class> CharpolyCache::hecke_charpoly_disc(unsigned k, unsigned n) {
  const auto key = std::make_pair(k, n);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = discs_.find(key);
    if (it != discs_.end()) return it->second;
  }
  auto poly = hecke_charpoly(k, n);
  auto d = std::make_shared<const mpz_class>(discriminant(*poly));
  std::lock_guard<std::mutex> lock(mu_);
  return discs_.emplace(key, d).first->second;
}

std::size_t CharpolyCache::warm(unsigned k_max, unsigned r_max) {
  std::size_t written = 0;
  for (unsigned k = 12; k <= k_max; k += 2) {
    if (dim_cusp(k) == 0) continue;
    for (unsigned n = 2; n < r_max; ++n) {
      if (dir_.empty()) {
        hecke_charpoly(k, n);
        continue;
      }
      auto file = charpoly_cache_filename(dir_, k, n);
      if (fs::exists(file)) continue;
      auto poly = hecke_charpoly(k, n);
      if (!fs::exists(file)) write_charpoly_file(file, k, n, *poly);
      ++written;
    }
  }
  return written;
}

fs::path charpoly_cache_filename(const fs::path& dir, unsigned k, unsigned n) {
  return dir / ("charpoly_k" + std::to_string(k) + "_n" + std::to_string(n) + ".txt");
}

void write_charpoly_file(const fs::path& file, unsigned k, unsigned n,
                         const IntPoly& poly) {
  static std::atomic<unsigned> counter{0};
  fs::path tmp = file;
  tmp += ".tmp." + std::to_string(::getpid()) + "." +
         std::to_string(counter.fetch_add(1));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << k << " " << n << "\n" << poly.degree() << "\n";
    for (int i = 0; i <= poly.degree(); ++i) {
      if (i) out << " ";
      out << poly.coeff(i).get_str();
    }
    out << "\n";
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, file);
}

std::optional<IntPoly> read_charpoly_file(const fs::path& file, unsigned k, unsigned n) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  unsigned fk = 0, fn = 0;
  long deg = 0;
  if (!(in >> fk >> fn >> deg)) return std::nullopt;
  if (fk != k || fn != n || deg < 0)
    throw std::runtime_error("cache file " + file.string() + " has wrong header");
  std::vector<mpz_class> coeffs(deg + 1);
  std::string tok;
  for (long i = 0; i <= deg; ++i) {
    if (!(in >> tok)) throw std::runtime_error("cache file " + file.string() + " truncated");
    coeffs[i] = mpz_class(tok);
  }
  IntPoly p(std::move(coeffs));
  if (p.degree() != deg)
    throw std::runtime_error("cache file " + file.string() + " has zero leading term");
  return p;
}

}  // namespace galrep
