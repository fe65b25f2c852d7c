#include "galrep/criteria.hpp"

#include <stdexcept>

#include "galrep/modpoly.hpp"

namespace galrep {

MonogenicOrder::MonogenicOrder(IntPoly poly) : h(std::move(poly)) {
  if (!h.is_monic()) throw std::invalid_argument("MonogenicOrder: h must be monic");
  n = static_cast<unsigned>(h.degree());
  disc = discriminant(h);
  if (disc == 0)
    throw std::invalid_argument("MonogenicOrder: h must be squarefree over Q");
}

unsigned fp_points(const IntPoly& h, std::uint64_t p) {
  if (!h.is_monic()) throw std::invalid_argument("fp_points: h must be monic");
  if (h.degree() == 0) return 0;
  return distinct_root_count(reduce_scaled(h, p, 1));
}

OrderCriterion order_criterion(const IntPoly& h, std::uint64_t p) {
  MonogenicOrder order(h);  // rejects zero discriminant
  OrderCriterion c;
  c.f = fp_points(h, p);
  c.nu = padic_valuation(order.disc, p);
  c.good = c.nu <= order.n && c.f == order.n - c.nu;
  c.automatic = c.nu <= 1;
  if (c.automatic && !c.good)
    throw std::logic_error("order_criterion: nu <= 1 must imply the equality");
  return c;
}

}  // namespace galrep
