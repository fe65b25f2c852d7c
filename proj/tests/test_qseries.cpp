#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galrep/qseries.hpp"
#include "oracles.hpp"

using galrep::delta;
using galrep::dim_cusp;
using galrep::eisenstein_series;
using galrep::miller_basis;
using galrep::QSeries;

TEST_CASE("cusp space dimensions") {
  CHECK(dim_cusp(2) == 0);
  CHECK(dim_cusp(12) == 1);
  CHECK(dim_cusp(14) == 0);
  CHECK(dim_cusp(24) == 2);
  CHECK(dim_cusp(26) == 1);
  CHECK(dim_cusp(0) == 0);
  CHECK(dim_cusp(108) == 9);
  CHECK(dim_cusp(114) == 9);
  CHECK_THROWS_AS(dim_cusp(13), std::invalid_argument);
}

TEST_CASE("Eisenstein series expansions") {
  QSeries e4 = eisenstein_series(4, 3);
  CHECK(e4[0] == 1);
  CHECK(e4[1] == 240);
  CHECK(e4[2] == 2160);  // 240 * sigma_3(2) = 240 * 9
  CHECK(e4[3] == 6720);  // 240 * 28

  QSeries e6 = eisenstein_series(6, 2);
  CHECK(e6[0] == 1);
  CHECK(e6[1] == -504);
  CHECK(e6[2] == -16632);  // -504 * 33

  QSeries c = eisenstein_series(4, 0);
  CHECK(c.prec() == 0);
  CHECK(c[0] == 1);

  CHECK_THROWS_AS(eisenstein_series(8, 5), std::invalid_argument);
}

TEST_CASE("delta expansion and normalization") {
  QSeries d = delta(5);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  CHECK(d[4] == -1472);
  CHECK(d[5] == 4830);

  QSeries d1 = delta(1);
  CHECK(d1[0] == 0);
  CHECK(d1[1] == 1);
}

TEST_CASE("delta agrees with the eta product") {
  const std::size_t prec = 40;
  QSeries d = delta(prec);
  auto eta = oracles::eta_delta(prec);
  for (std::size_t i = 0; i <= prec; ++i) CHECK(d[i] == eta[i]);
}

TEST_CASE("series products truncate to the minimum precision") {
  QSeries a = eisenstein_series(4, 10);
  QSeries b = eisenstein_series(6, 7);
  CHECK((a * b).prec() == 7);
  CHECK((a + b).prec() == 7);
}

TEST_CASE("miller basis examples") {
  auto b12 = miller_basis(12, 9);
  CHECK(b12.dim == 1);
  CHECK(b12.forms[0] == delta(9));

  auto b24 = miller_basis(24, 9);
  CHECK(b24.dim == 2);
  for (unsigned i = 1; i <= 2; ++i)
    for (unsigned j = 1; j <= 2; ++j)
      CHECK(b24.forms[i - 1][j] == (i == j ? 1 : 0));

  auto b16 = miller_basis(16, 5);
  CHECK(b16.dim == 1);
  CHECK(b16.forms[0][0] == 0);
  CHECK(b16.forms[0][1] == 1);

  CHECK_THROWS_AS(miller_basis(10, 5), std::invalid_argument);
  CHECK_THROWS_AS(miller_basis(24, 2), std::invalid_argument);
}

TEST_CASE("miller basis dimensions and echelon identity for 12 <= k <= 60") {
  for (unsigned k = 12; k <= 60; k += 2) {
    unsigned d = dim_cusp(k);
    if (d == 0) continue;
    auto basis = miller_basis(k, 2 * d + 1);
    CHECK(basis.dim == d);
    for (unsigned i = 1; i <= d; ++i) {
      CHECK(basis.forms[i - 1][0] == 0);
      for (unsigned j = 1; j <= d; ++j)
        CHECK(basis.forms[i - 1][j] == (i == j ? 1 : 0));
    }
  }
}

TEST_CASE("weight 10 has no cusp forms") {
  // E4*E6 is a weight-10 form; with dim M^0_10 = 0 the echelon reduction
  // against the empty basis is the identity, and the product is visibly
  // non-cuspidal.
  CHECK(dim_cusp(10) == 0);
  QSeries f = eisenstein_series(4, 8) * eisenstein_series(6, 8);
  CHECK(f[0] == 1);
}
