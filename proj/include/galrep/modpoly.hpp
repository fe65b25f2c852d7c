#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "galrep/intpoly.hpp"

namespace galrep {

/// Polynomial over F_p, coefficients in [0, p) from the constant term up.
/// The zero polynomial is the empty vector (degree() == -1).
class ModPoly {
 public:
  ModPoly() : p_(2) {}
  ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static ModPoly zero(std::uint64_t p) { return ModPoly(p, {}); }
  static ModPoly one(std::uint64_t p) { return ModPoly(p, {1}); }

  std::uint64_t p() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::uint64_t coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : 0;
  }
  const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

  ModPoly monic() const;
  ModPoly derivative() const;

  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  // Euclidean division; remainder degree < divisor degree.
  static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator/(const ModPoly& a, const ModPoly& b);  // exact or truncating
  friend ModPoly operator%(const ModPoly& a, const ModPoly& b);

  bool operator==(const ModPoly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

// Monic gcd by the Euclidean algorithm, normalizing each remainder.
ModPoly gcd(ModPoly a, ModPoly b);

/// Mod-p charpoly of s*T from the charpoly h of T: the coefficient of
/// x^(n-i) is s^i * c_{n-i} mod p. s = 1 is plain reduction; h must be monic.
ModPoly reduce_scaled(const IntPoly& h, std::uint64_t p, std::uint64_t s);

/// Squarefree decomposition in characteristic p (Yun's method with explicit
/// extraction of p-th powers): returns pairwise coprime monic squarefree
/// factors with multiplicities, f = lc * prod a_i^{m_i}.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f);

// Number of distinct roots of f in an algebraic closure of F_p, i.e. the
// degree of the radical of f. Zero polynomial rejected.
unsigned distinct_root_count(const ModPoly& f);

// deg gcd of the two scaled reductions; the gcd with the constant 1
// (charpoly of an empty space) has degree 0.
unsigned linking_number(const IntPoly& h, const IntPoly& j, std::uint64_t p,
                        std::uint64_t s_h, std::uint64_t s_j);

// Largest m with x^m | f; f nonzero.
unsigned zero_root_multiplicity(const ModPoly& f);

}  // namespace galrep
