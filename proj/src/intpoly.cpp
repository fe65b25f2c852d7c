#include "galrep/intpoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "galrep/modarith.hpp"
#include "galrep/numth.hpp"

namespace galrep {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return IntPoly();
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
  return r;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    mpz_class a = coeffs_[i];
    if (s.empty()) {
      if (a < 0) { s += "-"; a = -a; }
    } else {
      s += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) s += a.get_str();
    if (i > 0) {
      if (a != 1) s += "*";
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("IntMatrix: dim mismatch");
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("IntMatrix: dim mismatch");
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("IntMatrix: dim mismatch");
  IntMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

IntMatrix& IntMatrix::operator*=(const mpz_class& c) {
  for (auto& x : e_) x *= c;
  return *this;
}

bool IntMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const mpz_class& x) { return x == 0; });
}

IntMatrix hecke_matrix(const MillerBasis& basis, unsigned n) {
  if (n == 0) throw std::invalid_argument("hecke_matrix: n >= 1 required");
  std::size_t d = basis.dim;
  if (basis.prec() < d * n)
    throw std::invalid_argument("hecke_matrix: basis precision too small");
  IntMatrix m(d);
  mpz_class ek;  // e^(k-1)
  for (std::size_t i = 0; i < d; ++i) {
    const QSeries& f = basis.forms[i];
    for (std::size_t j = 1; j <= d; ++j) {
      // a_j(T_n f) = sum over e | gcd(n, j) of e^(k-1) a_{nj/e^2}(f)
      mpz_class a = 0;
      std::uint64_t g = std::gcd<std::uint64_t>(n, j);
      for (std::uint64_t e = 1; e <= g; ++e) {
        if (g % e != 0) continue;
        mpz_ui_pow_ui(ek.get_mpz_t(), e, basis.weight - 1);
        a += ek * f[static_cast<std::size_t>(n) * j / (e * e)];
      }
      m.at(i, j - 1) = a;
    }
  }
  return m;
}

IntMatrix hecke_matrix(unsigned k, unsigned n) {
  unsigned d = dim_cusp(k);
  if (d == 0) return IntMatrix(0);
  return hecke_matrix(miller_basis(k, static_cast<std::size_t>(d) * n + 1), n);
}

std::uint64_t crt_prime(std::size_t i) {
  static std::mutex mu;
  static std::vector<std::uint64_t> primes;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= i) {
    std::uint64_t q = primes.empty() ? prev_prime(std::uint64_t(1) << 63)
                                     : prev_prime(primes.back());
    primes.push_back(q);
  }
  return primes[i];
}

namespace {

// Symmetric-lift CRT accumulator over a growing set of word-size primes.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t count) : x_(count), modulus_(1) {}

  void add(std::uint64_t q, const std::vector<std::uint64_t>& residues) {
    std::uint64_t m_mod_q = mpz_fdiv_ui(modulus_.get_mpz_t(), q);
    std::uint64_t m_inv = invmod(m_mod_q, q);
    for (std::size_t i = 0; i < x_.size(); ++i) {
      std::uint64_t xi = mpz_fdiv_ui(x_[i].get_mpz_t(), q);
      std::uint64_t t = mulmod(submod(residues[i] % q, xi, q), m_inv, q);
      x_[i] += modulus_ * t;
    }
    modulus_ *= q;
  }

  const mpz_class& modulus() const { return modulus_; }

  std::vector<mpz_class> lift() const {
    std::vector<mpz_class> r = x_;
    for (auto& v : r)
      if (2 * v > modulus_) v -= modulus_;
    return r;
  }

 private:
  std::vector<mpz_class> x_;
  mpz_class modulus_;
};

// Charpoly of a reduced matrix over F_q: reduction to upper Hessenberg form
// by similarity transformations, then the standard recurrence on leading
// principal minors.
std::vector<std::uint64_t> charpoly_mod(std::vector<std::uint64_t> a,
                                        std::size_t d, std::uint64_t q) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return a[i * d + j];
  };
  for (std::size_t j = 0; j + 2 < d; ++j) {
    std::size_t piv = j + 1;
    while (piv < d && at(piv, j) == 0) ++piv;
    if (piv == d) continue;
    if (piv != j + 1) {
      for (std::size_t c = 0; c < d; ++c) std::swap(at(piv, c), at(j + 1, c));
      for (std::size_t r = 0; r < d; ++r) std::swap(at(r, piv), at(r, j + 1));
    }
    std::uint64_t inv = invmod(at(j + 1, j), q);
    for (std::size_t i = j + 2; i < d; ++i) {
      if (at(i, j) == 0) continue;
      std::uint64_t m = mulmod(at(i, j), inv, q);
      for (std::size_t c = 0; c < d; ++c)
        at(i, c) = submod(at(i, c), mulmod(m, at(j + 1, c), q), q);
      for (std::size_t r = 0; r < d; ++r)
        at(r, j + 1) = addmod(at(r, j + 1), mulmod(m, at(r, i), q), q);
    }
  }
  // p_m = (x - H[m-1][m-1]) p_{m-1}
  //       - sum_{i>=1} H[m-1-i][m-1] (prod of i subdiagonal terms) p_{m-1-i}
  std::vector<std::vector<std::uint64_t>> p(d + 1);
  p[0] = {1};
  for (std::size_t m = 1; m <= d; ++m) {
    p[m].assign(m + 1, 0);
    for (std::size_t t = 0; t < m; ++t) {
      p[m][t + 1] = addmod(p[m][t + 1], p[m - 1][t], q);
      p[m][t] = submod(p[m][t], mulmod(at(m - 1, m - 1), p[m - 1][t], q), q);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = mulmod(prod, at(m - i, m - i - 1), q);
      if (prod == 0) break;
      std::uint64_t coef = mulmod(at(m - 1 - i, m - 1), prod, q);
      if (coef == 0) continue;
      for (std::size_t t = 0; t <= m - 1 - i; ++t)
        p[m][t] = submod(p[m][t], mulmod(coef, p[m - 1 - i][t], q), q);
    }
  }
  return p[d];
}

std::uint64_t det_mod(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t q) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& {
    return a[i * n + j];
  };
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(at(piv, j), at(c, j));
      det = det == 0 ? 0 : q - det;
    }
    det = mulmod(det, at(c, c), q);
    std::uint64_t inv = invmod(at(c, c), q);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (at(i, c) == 0) continue;
      std::uint64_t m = mulmod(at(i, c), inv, q);
      for (std::size_t j = c; j < n; ++j)
        at(i, j) = submod(at(i, j), mulmod(m, at(c, j), q), q);
    }
  }
  return det;
}

std::uint64_t mpz_mod_u64(const mpz_class& v, std::uint64_t q) {
  // mpz_fdiv_ui takes an unsigned long, which is 64-bit here.
  return mpz_fdiv_ui(v.get_mpz_t(), q);
}

}  // namespace

IntPoly charpoly(const IntMatrix& m, std::size_t prime_skip) {
  std::size_t d = m.dim();
  if (d == 0) return IntPoly::one();
  mpz_class maxabs = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mpz_class a = abs(m.at(i, j));
      if (a > maxabs) maxabs = a;
    }
  // B = (ceil(sqrt(d)) * max|entry| + 1)^d, crude but safe.
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), mpz_class(d).get_mpz_t());
  if (s * s < static_cast<long>(d)) s += 1;
  mpz_class bound;
  mpz_class base = s * maxabs + 1;
  mpz_pow_ui(bound.get_mpz_t(), base.get_mpz_t(), d);
  bound *= 2;

  CrtAccumulator crt(d + 1);
  std::vector<std::uint64_t> reduced(d * d);
  for (std::size_t idx = prime_skip; crt.modulus() <= bound; ++idx) {
    std::uint64_t q = crt_prime(idx);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        reduced[i * d + j] = mpz_mod_u64(m.at(i, j), q);
    crt.add(q, charpoly_mod(std::move(reduced), d, q));
    reduced.assign(d * d, 0);
  }
  IntPoly result(crt.lift());
  if (!result.is_monic() || result.degree() != static_cast<int>(d))
    throw std::logic_error("charpoly: lift is not monic of the right degree");
  return result;
}

mpz_class resultant(const IntPoly& f, const IntPoly& g, std::size_t prime_skip) {
  if (f.is_zero() || g.is_zero()) return 0;
  std::size_t m = f.degree(), n = g.degree();
  if (m == 0 && n == 0) return 1;
  std::size_t dim = m + n;

  // Hadamard bound: product of the Euclidean row norms of the Sylvester
  // matrix (n shifted copies of f's coefficients, m of g's), rounded up.
  mpz_class norm2_f = 0, norm2_g = 0;
  for (std::size_t i = 0; i <= m; ++i) norm2_f += f.coeff(i) * f.coeff(i);
  for (std::size_t i = 0; i <= n; ++i) norm2_g += g.coeff(i) * g.coeff(i);
  mpz_class root_f, root_g, bound, pw;
  mpz_sqrt(root_f.get_mpz_t(), norm2_f.get_mpz_t());
  mpz_sqrt(root_g.get_mpz_t(), norm2_g.get_mpz_t());
  root_f += 1;
  root_g += 1;
  mpz_pow_ui(bound.get_mpz_t(), root_f.get_mpz_t(), n);
  mpz_pow_ui(pw.get_mpz_t(), root_g.get_mpz_t(), m);
  bound *= pw;
  bound *= 2;

  // Only the 2(m + n) distinct coefficients are reduced per prime; the
  // Sylvester matrix is assembled from the residues.
  CrtAccumulator crt(1);
  std::vector<std::uint64_t> fr(m + 1), gr(n + 1), syl(dim * dim);
  for (std::size_t idx = prime_skip; crt.modulus() <= bound; ++idx) {
    std::uint64_t q = crt_prime(idx);
    for (std::size_t i = 0; i <= m; ++i) fr[i] = mpz_mod_u64(f.coeff(i), q);
    for (std::size_t i = 0; i <= n; ++i) gr[i] = mpz_mod_u64(g.coeff(i), q);
    syl.assign(dim * dim, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t i = 0; i <= m; ++i) syl[r * dim + r + i] = fr[m - i];
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t i = 0; i <= n; ++i) syl[(n + r) * dim + r + i] = gr[n - i];
    crt.add(q, {det_mod(syl, dim, q)});
  }
  return crt.lift()[0];
}

mpz_class discriminant(const IntPoly& h, std::size_t prime_skip) {
  if (!h.is_monic()) throw std::invalid_argument("discriminant: poly must be monic");
  int n = h.degree();
  if (n <= 1) return 1;
  mpz_class res = resultant(h, h.derivative(), prime_skip);
  return (static_cast<long>(n) * (n - 1) / 2) % 2 == 0 ? res : -res;
}

unsigned padic_valuation(const mpz_class& n, std::uint64_t p) {
  if (n == 0) throw std::invalid_argument("padic_valuation: zero input");
  mpz_class rest, pz = mpz_class(static_cast<unsigned long>(p));
  return static_cast<unsigned>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

}  // namespace galrep
