#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "galrep/qseries.hpp"

namespace galrep {

/// Integer polynomial, coefficients from the constant term up. The zero
/// polynomial is the empty coefficient vector (degree() == -1 sentinel).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly zero() { return IntPoly(); }
  static IntPoly one() { return IntPoly({mpz_class(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const mpz_class& coeff(std::size_t i) const { return coeffs_[i]; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  IntPoly derivative() const;
  mpz_class eval(const mpz_class& x) const;

  bool operator==(const IntPoly& o) const { return coeffs_ == o.coeffs_; }

  std::string str() const;  // "x^2 - 1080*x - 20468736"

 private:
  std::vector<mpz_class> coeffs_;
};

/// Square matrix of big integers; 0 x 0 is allowed.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), e_(dim * dim) {}

  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const mpz_class& at(std::size_t i, std::size_t j) const { return e_[i * dim_ + j]; }
  mpz_class& at(std::size_t i, std::size_t j) { return e_[i * dim_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  IntMatrix& operator*=(const mpz_class& c);

  bool is_zero() const;
  bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

 private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> e_;
};

// Matrix of T_n on the echelon basis of M^0_k: row i holds the coefficients
// of q^1..q^d in T_n(f_i), which are the coordinates of T_n f_i. The basis
// must have prec >= dim * n.
IntMatrix hecke_matrix(const MillerBasis& basis, unsigned n);
// Convenience overload building the basis at the minimal precision d*n + 1.
// Returns the 0 x 0 matrix when dim_cusp(k) = 0.
IntMatrix hecke_matrix(unsigned k, unsigned n);

/// Exact characteristic polynomial, computed modulo machine-word primes
/// drawn descending from just below 2^63 until their product exceeds twice
/// the coefficient bound B = (ceil(sqrt(d)) * max|M_ij| + 1)^d, then lifted
/// by CRT with symmetric representatives. `prime_skip` selects a disjoint
/// prime set (test hook for the CRT cross-check).
IntPoly charpoly(const IntMatrix& m, std::size_t prime_skip = 0);

// Res(f, g) via determinants of the Sylvester matrix modulo word-size
// primes, with the Hadamard row-norm bound; same CRT scheme as charpoly.
mpz_class resultant(const IntPoly& f, const IntPoly& g, std::size_t prime_skip = 0);

// disc(h) = (-1)^(n(n-1)/2) Res(h, h') for monic h; degree <= 1 gives 1.
mpz_class discriminant(const IntPoly& h, std::size_t prime_skip = 0);

// Largest e with p^e | n; n = 0 rejected.
unsigned padic_valuation(const mpz_class& n, std::uint64_t p);

// The i-th member (0-based) of the fixed descending sequence of CRT primes.
std::uint64_t crt_prime(std::size_t i);

}  // namespace galrep
