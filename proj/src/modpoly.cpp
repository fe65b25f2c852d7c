#include "galrep/modpoly.hpp"

#include <stdexcept>

#include "galrep/modarith.hpp"

namespace galrep {

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  if (p < 2) throw std::invalid_argument("ModPoly: modulus must be >= 2");
  for (auto& c : coeffs_) c %= p_;
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  std::uint64_t lc = coeffs_.back();
  if (lc == 1) return *this;
  std::uint64_t inv = invmod(lc, p_);
  std::vector<std::uint64_t> c(coeffs_);
  for (auto& x : c) x = mulmod(x, inv, p_);
  return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const {
  if (coeffs_.size() <= 1) return zero(p_);
  std::vector<std::uint64_t> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d[i - 1] = mulmod(coeffs_[i], i % p_, p_);
  return ModPoly(p_, std::move(d));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("ModPoly: modulus mismatch");
  if (a.is_zero() || b.is_zero()) return ModPoly::zero(a.p_);
  std::vector<std::uint64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      c[i + j] = addmod(c[i + j], mulmod(a.coeffs_[i], b.coeffs_[j], a.p_), a.p_);
  }
  return ModPoly(a.p_, std::move(c));
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& a, const ModPoly& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("ModPoly: modulus mismatch");
  if (b.is_zero()) throw std::invalid_argument("ModPoly: division by zero");
  std::uint64_t p = a.p_;
  if (a.degree() < b.degree()) return {zero(p), a};
  std::vector<std::uint64_t> rem(a.coeffs_);
  std::size_t db = b.coeffs_.size() - 1;
  std::vector<std::uint64_t> quot(rem.size() - db, 0);
  std::uint64_t lc_inv = invmod(b.coeffs_.back(), p);
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i] == 0) continue;
    std::uint64_t q = mulmod(rem[i], lc_inv, p);
    quot[i - db] = q;
    for (std::size_t j = 0; j <= db; ++j)
      rem[i - db + j] = submod(rem[i - db + j], mulmod(q, b.coeffs_[j], p), p);
  }
  return {ModPoly(p, std::move(quot)), ModPoly(p, std::move(rem))};
}

ModPoly operator/(const ModPoly& a, const ModPoly& b) { return ModPoly::divmod(a, b).first; }
ModPoly operator%(const ModPoly& a, const ModPoly& b) { return ModPoly::divmod(a, b).second; }

ModPoly gcd(ModPoly a, ModPoly b) {
  if (a.p() != b.p()) throw std::invalid_argument("ModPoly: modulus mismatch");
  a = a.monic();
  b = b.monic();
  while (!b.is_zero()) {
    ModPoly r = (a % b).monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly reduce_scaled(const IntPoly& h, std::uint64_t p, std::uint64_t s) {
  if (!h.is_monic()) throw std::invalid_argument("reduce_scaled: poly must be monic");
  std::size_t n = h.degree();
  s %= p;
  std::vector<std::uint64_t> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    std::uint64_t cj = mpz_fdiv_ui(h.coeff(j).get_mpz_t(), p);
    c[j] = mulmod(powmod(s, n - j, p), cj, p);
  }
  return ModPoly(p, std::move(c));
}

namespace {

// f(x) = g(x^p) -> g; over F_p the coefficients carry over unchanged.
ModPoly pth_root(const ModPoly& f) {
  std::uint64_t p = f.p();
  std::vector<std::uint64_t> c(f.degree() / p + 1, 0);
  for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); ++i) {
    if (f.coeff(i) == 0) continue;
    if (i % p != 0) throw std::logic_error("pth_root: not a polynomial in x^p");
    c[i / p] = f.coeff(i);
  }
  return ModPoly(p, std::move(c));
}

void sqfree_rec(const ModPoly& f, unsigned mult,
                std::vector<std::pair<ModPoly, unsigned>>& out) {
  if (f.degree() <= 0) return;
  std::uint64_t p = f.p();
  ModPoly fp = f.derivative();
  if (fp.is_zero()) {
    sqfree_rec(pth_root(f), mult * static_cast<unsigned>(p), out);
    return;
  }
  ModPoly c = gcd(f, fp);
  ModPoly w = f / c;
  unsigned i = 1;
  while (w.degree() > 0) {
    ModPoly y = gcd(w, c);
    ModPoly z = w / y;
    if (z.degree() > 0) out.emplace_back(z, mult * i);
    w = std::move(y);
    c = c / w;
    ++i;
  }
  if (c.degree() > 0) sqfree_rec(pth_root(c), mult * static_cast<unsigned>(p), out);
}

}  // namespace

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  std::vector<std::pair<ModPoly, unsigned>> out;
  sqfree_rec(f.monic(), 1, out);
  return out;
}

unsigned distinct_root_count(const ModPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("distinct_root_count: zero polynomial");
  unsigned total = 0;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    (void)mult;
    total += static_cast<unsigned>(part.degree());
  }
  return total;
}

unsigned linking_number(const IntPoly& h, const IntPoly& j, std::uint64_t p,
                        std::uint64_t s_h, std::uint64_t s_j) {
  ModPoly a = reduce_scaled(h, p, s_h);
  ModPoly b = reduce_scaled(j, p, s_j);
  return static_cast<unsigned>(gcd(a, b).degree());
}

unsigned zero_root_multiplicity(const ModPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero_root_multiplicity: zero polynomial");
  unsigned m = 0;
  while (f.coeff(m) == 0) ++m;
  return m;
}

}  // namespace galrep
