#include "galrep/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace galrep {

QSeries QSeries::truncated(std::size_t prec) const {
  QSeries r(std::min(prec, this->prec()));
  for (std::size_t i = 0; i <= r.prec(); ++i) r[i] = coeffs_[i];
  return r;
}

QSeries operator+(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.prec(), b.prec()));
  for (std::size_t i = 0; i <= r.prec(); ++i) r[i] = a[i] + b[i];
  return r;
}

QSeries operator-(const QSeries& a, const QSeries& b) {
  QSeries r(std::min(a.prec(), b.prec()));
  for (std::size_t i = 0; i <= r.prec(); ++i) r[i] = a[i] - b[i];
  return r;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  std::size_t n = std::min(a.prec(), b.prec());
  QSeries r(n);
  mpz_class t;
  for (std::size_t i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (b[j] == 0) continue;
      t = a[i] * b[j];
      r[i + j] += t;
    }
  }
  return r;
}

QSeries& QSeries::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries r(prec());
  r[0] = 1;
  QSeries base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

QSeries QSeries::divexact(const mpz_class& d) const {
  QSeries r(prec());
  for (std::size_t i = 0; i <= prec(); ++i) {
    if (!mpz_divisible_p(coeffs_[i].get_mpz_t(), d.get_mpz_t()))
      throw std::logic_error("QSeries::divexact: inexact division");
    mpz_divexact(r[i].get_mpz_t(), coeffs_[i].get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

unsigned dim_cusp(unsigned k) {
  if (k % 2 != 0) throw std::invalid_argument("dim_cusp: odd weight");
  if (k < 12 || k == 14) return 0;
  return k % 12 == 2 ? k / 12 - 1 : k / 12;
}

QSeries eisenstein_series(unsigned weight, std::size_t prec) {
  if (weight != 4 && weight != 6)
    throw std::invalid_argument("eisenstein_series: weight must be 4 or 6");
  QSeries r(prec);
  r[0] = 1;
  if (prec == 0) return r;
  // sigma_{weight-1} by sieving over divisors.
  std::vector<mpz_class> sigma(prec + 1);
  mpz_class dk;
  for (std::size_t d = 1; d <= prec; ++d) {
    mpz_ui_pow_ui(dk.get_mpz_t(), d, weight - 1);
    for (std::size_t m = d; m <= prec; m += d) sigma[m] += dk;
  }
  mpz_class c = weight == 4 ? 240 : -504;
  for (std::size_t n = 1; n <= prec; ++n) r[n] = c * sigma[n];
  return r;
}

QSeries delta(std::size_t prec) {
  QSeries e4 = eisenstein_series(4, prec);
  QSeries e6 = eisenstein_series(6, prec);
  return (e4.pow(3) - e6.pow(2)).divexact(1728);
}

MillerBasis miller_basis(unsigned k, std::size_t prec) {
  unsigned d = dim_cusp(k);
  if (d < 1) throw std::invalid_argument("miller_basis: empty cusp space");
  if (prec < d + 1) throw std::invalid_argument("miller_basis: prec too small");

  QSeries e4 = eisenstein_series(4, prec);
  QSeries e6 = eisenstein_series(6, prec);
  QSeries dlt = delta(prec);

  // Monomials Delta^j E4^a E6^b of weight k, j = 1..d; the q-order of the
  // j-th monomial is exactly j, so they are triangular in the columns
  // q^1..q^d and the echelonization below only ever divides by units.
  // Power tables keep this to one series product per step.
  std::vector<unsigned> a_of(d + 1), b_of(d + 1);
  unsigned a_max = 0;
  for (unsigned j = 1; j <= d; ++j) {
    unsigned w = k - 12 * j;
    b_of[j] = (w % 4 == 0) ? 0 : 1;
    a_of[j] = (w - 6 * b_of[j]) / 4;
    if (4 * a_of[j] + 6 * b_of[j] != w)
      throw std::logic_error("miller_basis: bad monomial exponents");
    a_max = std::max(a_max, a_of[j]);
  }
  std::vector<QSeries> e4_pow(a_max + 1);
  e4_pow[0] = QSeries(prec);
  e4_pow[0][0] = 1;
  for (unsigned a = 1; a <= a_max; ++a) e4_pow[a] = e4_pow[a - 1] * e4;

  std::vector<std::vector<mpq_class>> rows(d);
  QSeries delta_j = dlt;
  for (unsigned j = 1; j <= d; ++j) {
    if (j > 1) delta_j = delta_j * dlt;
    QSeries m = delta_j * e4_pow[a_of[j]];
    if (b_of[j]) m = m * e6;
    rows[j - 1].resize(prec + 1);
    for (std::size_t i = 0; i <= prec; ++i) rows[j - 1][i] = mpq_class(m[i]);
  }

  // Reduced echelon form over exact rationals with pivots at q^1..q^d.
  for (unsigned c = 1; c <= d; ++c) {
    auto& pivot = rows[c - 1];
    if (pivot[c] == 0)
      throw std::runtime_error(
          "miller_basis: monomials linearly dependent at weight " +
          std::to_string(k));
    if (pivot[c] != 1) {
      mpq_class inv = 1 / pivot[c];
      for (auto& x : pivot) x *= inv;
    }
    for (unsigned r = 1; r <= d; ++r) {
      if (r == c || rows[r - 1][c] == 0) continue;
      mpq_class f = rows[r - 1][c];
      for (std::size_t i = 0; i <= prec; ++i) rows[r - 1][i] -= f * pivot[i];
    }
  }

  MillerBasis basis;
  basis.weight = k;
  basis.dim = d;
  basis.forms.reserve(d);
  for (unsigned r = 1; r <= d; ++r) {
    QSeries f(prec);
    for (std::size_t i = 0; i <= prec; ++i) {
      if (rows[r - 1][i].get_den() != 1)
        throw std::logic_error("miller_basis: non-integral echelon basis");
      f[i] = rows[r - 1][i].get_num();
    }
    if (f[0] != 0) throw std::logic_error("miller_basis: non-cuspidal form");
    for (unsigned c = 1; c <= d; ++c)
      if (f[c] != (r == c ? 1 : 0))
        throw std::logic_error("miller_basis: echelon property violated");
    basis.forms.push_back(std::move(f));
  }
  return basis;
}

}  // namespace galrep
