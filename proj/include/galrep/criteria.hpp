#pragma once

#include <cstdint>

#include "galrep/intpoly.hpp"

namespace galrep {

/// The order Z[x]/(h) inside its etale rational algebra: h monic and
/// squarefree over Q, so the discriminant is nonzero.
struct MonogenicOrder {
  IntPoly h;
  unsigned n;       // degree
  mpz_class disc;   // discriminant(h), nonzero

  explicit MonogenicOrder(IntPoly poly);
};

// Number of distinct F_p-bar valued points of Spec Z[x]/(h), i.e. the number
// of distinct roots of h mod p.
unsigned fp_points(const IntPoly& h, std::uint64_t p);

/// The discriminant-valuation criterion: f = fp_points, nu = nu_p(disc h),
/// good iff f = n - nu (which certifies f_p of the ambient ring and that p
/// does not divide the index of Z[x]/(h) in its integral closure), auto iff
/// nu <= 1 (then good holds automatically).
struct OrderCriterion {
  unsigned f = 0;
  unsigned nu = 0;
  bool good = false;
  bool automatic = false;
};

OrderCriterion order_criterion(const IntPoly& h, std::uint64_t p);

}  // namespace galrep
