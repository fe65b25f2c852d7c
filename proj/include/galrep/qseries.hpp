#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

namespace galrep {

/// Truncated integer q-expansion: coefficients of q^0 .. q^prec.
/// Products truncate to the minimum precision of the operands and never
/// read past either operand's precision.
class QSeries {
 public:
  QSeries() : coeffs_(1) {}
  explicit QSeries(std::size_t prec) : coeffs_(prec + 1) {}

  std::size_t prec() const { return coeffs_.size() - 1; }
  const mpz_class& operator[](std::size_t i) const { return coeffs_[i]; }
  mpz_class& operator[](std::size_t i) { return coeffs_[i]; }

  QSeries truncated(std::size_t prec) const;

  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);

  QSeries& operator*=(const mpz_class& c);
  QSeries pow(unsigned e) const;

  // Divides every coefficient by d, throwing if any division is inexact.
  QSeries divexact(const mpz_class& d) const;

  bool operator==(const QSeries& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<mpz_class> coeffs_;
};

// dim M^0_k for SL_2(Z): 0 for k < 12 or k = 14, otherwise
// floor(k/12) - 1 if k = 2 mod 12, else floor(k/12). Odd k rejected.
unsigned dim_cusp(unsigned k);

// E4 or E6, normalized to constant term 1.
QSeries eisenstein_series(unsigned weight, std::size_t prec);

// The discriminant cusp form, computed as (E4^3 - E6^2)/1728.
QSeries delta(std::size_t prec);

/// Echelonized integral basis of the weight-k cusp space: forms[i] has
/// q-expansion q^(i+1) + O(q^(d+1)) with integer coefficients throughout.
struct MillerBasis {
  unsigned weight = 0;
  std::size_t dim = 0;
  std::vector<QSeries> forms;

  std::size_t prec() const { return forms.empty() ? 0 : forms[0].prec(); }
};

MillerBasis miller_basis(unsigned k, std::size_t prec);

}  // namespace galrep
