#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "galrep/census.hpp"
#include "galrep/reference_table.hpp"

using galrep::Census;
using galrep::CharpolyCache;
using galrep::format_ratio;
using galrep::WeightReport;

namespace {

Census make_census() {
  static CharpolyCache cache;
  return Census(cache);
}

}  // namespace

TEST_CASE("upper bound from the dimension sum") {
  CHECK(Census::u_bound(11) == 10);
  CHECK(Census::u_bound(13) == 12);
  CHECK(Census::u_bound(23) == 154);
  CHECK(Census::u_bound(29) == 336);
  CHECK(Census::u_bound(19) == 72);
  CHECK(Census::u_bound(31) == 420);
  CHECK_THROWS_AS(Census::u_bound(4), std::invalid_argument);
}

TEST_CASE("ratio formatting truncates and strips") {
  CHECK(format_ratio(154, 143, 23) == "0.020793");
  CHECK(format_ratio(420, 405, 31) == "0.015608");
  CHECK(format_ratio(6912, 6840, 73) == "0.01351");  // 0.0135109... -> strip
  CHECK(format_ratio(10, 10, 11) == "0");
  CHECK(format_ratio(3538, 3393, 59) == "0.041654");
}

TEST_CASE("p-good search") {
  Census census = make_census();
  auto good = census.find_p_good(23, 12);
  REQUIRE(good.has_value());
  CHECK(good->first == 2);
  CHECK(good->second == 1);

  auto good24 = census.find_p_good(23, 24);
  REQUIRE(good24.has_value());
  CHECK(good24->first == 2);
  CHECK(good24->second == 2);

  // every one-dimensional weight is certified by the linear charpoly of T_2
  for (std::uint64_t p : {11ull, 13ull, 17ull}) {
    auto g = census.find_p_good(p, 12);
    REQUIRE(g.has_value());
    CHECK(g->first == 2);
    CHECK(g->second == 1);
  }
  CHECK_THROWS_AS(census.find_p_good(23, 8), std::invalid_argument);
}

TEST_CASE("dihedral fallback on a solvable case") {
  Census census = make_census();
  // p = 23, k = 12: h(-23) = 3, smallest non-residue 5, charpoly of T_5
  // reduces to x; one zero root supplies the (h-1)/2 = 1 dihedral system.
  auto [count, exact] = census.e_count_fallback(23, 12);
  CHECK(count == 1);
  CHECK(exact);
  CHECK_THROWS_AS(census.e_count_fallback(23, 14), std::invalid_argument);
  CHECK_THROWS_AS(census.e_count_fallback(13, 7), std::invalid_argument);
}

TEST_CASE("tame bounds") {
  Census census = make_census();
  auto tb = census.tame_bounds(23, 12);
  CHECK(tb.split == 1);
  CHECK(tb.irr == 0);
  REQUIRE(tb.ells.size() == 1);
  CHECK(tb.ells[0] == 5);  // self-paired weight uses the non-residue

  auto tb11 = census.tame_bounds(11, 12);
  CHECK(tb11.split == 0);
  CHECK(tb11.irr == 0);

  auto tb16 = census.tame_bounds(23, 16);
  CHECK(tb16.split == 0);
  CHECK(tb16.irr == 0);
}

TEST_CASE("weight census at p = 23 matches the hand derivation") {
  Census census = make_census();
  galrep::BernoulliTable bt(23);

  WeightReport w12 = census.weight_census(23, 12, bt);
  CHECK(w12.n_k == 1);
  CHECK(w12.e_count == 1);
  CHECK(w12.e_exact);
  REQUIRE(w12.p_good_r.has_value());
  CHECK(*w12.p_good_r == 2);
  CHECK(w12.eis == 0);
  CHECK(w12.split_bound == 1);
  CHECK(w12.irr_bound == 0);
  CHECK(w12.dihedral == 1);

  for (unsigned k : {16u, 18u, 20u, 22u}) {
    WeightReport w = census.weight_census(23, k, bt);
    CHECK(w.n_k == 1);
    CHECK(w.e_count == 1);
    CHECK(w.e_exact);
    CHECK(w.eis == 0);
    CHECK(w.split_bound == 0);
    CHECK(w.irr_bound == 0);
    CHECK(w.dihedral == 0);
  }

  WeightReport w24 = census.weight_census(23, 24, bt);
  CHECK(w24.n_k == 2);
  CHECK(w24.e_count == 2);
  CHECK(w24.e_exact);
  CHECK(w24.split_bound == 0);
  CHECK(w24.irr_bound == 0);
}

TEST_CASE("weight census handles empty weights") {
  Census census = make_census();
  WeightReport w = census.weight_census(23, 14);
  CHECK(w.n_k == 0);
  CHECK(w.e_count == 0);
  CHECK(w.e_exact);
  CHECK(w.eis == 0);
  CHECK(w.split_bound == 0);
  CHECK(w.dihedral == 0);
}

TEST_CASE("prime census rows") {
  Census census = make_census();

  auto r11 = census.prime_census(11);
  CHECK(r11.row.L == 10);
  CHECK(r11.row.U == 10);
  CHECK(r11.row.exact);
  CHECK(r11.row.ratio == "0");

  auto r13 = census.prime_census(13);
  CHECK(r13.row.L == 12);
  CHECK(r13.row.U == 12);
  CHECK(r13.row.exact);

  auto r23 = census.prime_census(23);
  CHECK(r23.row.L == 143);
  CHECK(r23.row.U == 154);
  CHECK(r23.row.exact);
  CHECK(r23.row.ratio == "0.020793");
  // S2 = 13 from the weight terms
  std::int64_t s2 = 0;
  for (const auto& w : r23.weights)
    s2 += std::max<std::int64_t>(
        0, 2 * static_cast<std::int64_t>(w.e_count) - 2 * w.eis - w.split_bound -
               w.irr_bound);
  CHECK(s2 == 13);

  CHECK_THROWS_AS(census.prime_census(7), std::invalid_argument);
  CHECK_THROWS_AS(census.prime_census(25), std::invalid_argument);
}

TEST_CASE("weight report invariants over small primes") {
  Census census = make_census();
  for (std::uint64_t p : {11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    auto res = census.prime_census(p);
    CHECK(res.row.L <= res.row.U);
    for (const auto& w : res.weights) {
      CHECK(w.e_count <= w.n_k);
      CHECK(w.eis <= std::min(1u, w.e_count));
      CHECK(w.split_bound + w.irr_bound <= w.n_k - w.eis);
      CHECK(w.split_bound >= w.dihedral);
      if (w.dihedral > 0) {
        CHECK(p % 4 == 3);
        CHECK(2 * static_cast<std::uint64_t>(w.k) == p + 1);
      }
    }
  }
}

TEST_CASE("twist pairing symmetry of the split bound") {
  // With the same ell on both sides, the linking number of (k, p+1-k)
  // matches that of (p+1-k, k): the scales multiply to l^(p-1) = 1.
  static CharpolyCache cache;
  for (std::uint64_t p : {37ull, 59ull}) {
    for (std::uint64_t l : {2ull, 3ull}) {
      Census census(cache, {20, {l}});
      for (unsigned k = 12; k <= p + 1; k += 2) {
        unsigned kc = static_cast<unsigned>(p + 1 - k);
        if (galrep::dim_cusp(k) == 0 || kc < 12 || galrep::dim_cusp(kc) == 0)
          continue;
        if (2 * static_cast<std::uint64_t>(k) == p + 1 ||
            2 * static_cast<std::uint64_t>(kc) == p + 1)
          continue;  // self-paired weights switch to the non-residue rule
        CHECK(census.tame_bounds(p, k).split == census.tame_bounds(p, kc).split);
      }
    }
  }
}

TEST_CASE("the first of the eight dihedral pairs: (491, 246)") {
  Census census = make_census();
  // No T_r with r < 20 is 491-good on the 20-dimensional space M^0_246.
  CHECK_FALSE(census.find_p_good(491, 246).has_value());
  // The dihedral fallback still pins the exact count |E| = n_k.
  auto [count, exact] = census.e_count_fallback(491, 246);
  CHECK(count == galrep::dim_cusp(246));
  CHECK(exact);
  galrep::BernoulliTable bt(491);
  WeightReport w = census.weight_census(491, 246, bt);
  CHECK(w.n_k == 20);
  CHECK(w.e_count == 20);
  CHECK(w.e_exact);
  CHECK_FALSE(w.p_good_r.has_value());
  CHECK(w.dihedral == (galrep::class_number_neg_p(491) - 1) / 2);
  CHECK(w.split_bound >= w.dihedral);
}

TEST_CASE("last-resort lower bound when the p-good search is cut off") {
  // (67, 56) needs r = 3; with r_max = 3 only r = 2 is tried, the weight is
  // not the dihedral one, and the census falls back to the unconditional
  // distinct-root lower bound.
  static CharpolyCache cache;
  Census full(cache);
  Census restricted(cache, {3, {2, 3}});
  galrep::BernoulliTable bt(67);

  auto good = full.find_p_good(67, 56);
  REQUIRE(good.has_value());
  CHECK(good->first == 3);
  CHECK_FALSE(restricted.find_p_good(67, 56).has_value());

  WeightReport w = restricted.weight_census(67, 56, bt);
  CHECK_FALSE(w.e_exact);
  CHECK_FALSE(w.p_good_r.has_value());
  CHECK(w.e_count >= 1);
  CHECK(w.e_count <= w.n_k);
  CHECK(w.e_count <= full.weight_census(67, 56, bt).e_count);

  // the weaker configuration can only lower L
  CHECK(restricted.prime_census(67).row.L <= full.prime_census(67).row.L);
}

TEST_CASE("parity refinement at the self-paired weights") {
  Census census = make_census();
  // p = 349, k = (p+3)/2 = 176: the linking number for the irr side is 1,
  // but eigensystems irreducible at p pair up under the twist involution
  // with no fixed points, so the certified bound drops to 0.
  auto tb349 = census.tame_bounds(349, 176);
  CHECK(tb349.irr == 0);
  // p = 431, k = (p+1)/2 = 216: linking number 11 against 10 dihedral
  // systems; the non-dihedral split systems pair up, so 11 tightens to 10.
  auto tb431 = census.tame_bounds(431, 216);
  CHECK(tb431.split == 10);
  CHECK((galrep::class_number_neg_p(431) - 1) / 2 == 10);

  // published rows that hinge on the refinement
  auto r349 = census.prime_census(349);
  CHECK(r349.row.L == 857472);
  CHECK(r349.row.U == 857820);
  CHECK(r349.row.exact);
  CHECK(r349.row.ratio == "0.002857");
}

TEST_CASE("larger candidate sets never lower L") {
  static CharpolyCache cache;
  Census baseline(cache, {20, {2, 3}});
  Census wider(cache, {20, {2, 3, 5, 7}});
  for (std::uint64_t p : {59ull, 107ull}) {
    auto a = baseline.prime_census(p);
    auto b = wider.prime_census(p);
    CHECK(b.row.L >= a.row.L);
    CHECK(b.row.U == a.row.U);
  }
}

TEST_CASE("Ramanujan congruence at p = 691") {
  Census census = make_census();
  WeightReport w = census.weight_census(691, 12);
  CHECK(w.eis == 1);
  CHECK(w.n_k == 1);
  CHECK(w.e_count == 1);
}

TEST_CASE("reference table self-check and annotations") {
  const auto& table = galrep::reference_table();
  CHECK(table.size() == 299);
  CHECK(table.front().p == 11);
  CHECK(table.back().p == 1999);
  const galrep::ReferenceRow* r23 = galrep::reference_row(23);
  REQUIRE(r23 != nullptr);
  CHECK(r23->L == 143);
  CHECK(r23->U == 154);
  CHECK(r23->star);
  CHECK(r23->ratio == "0.020793");
  CHECK(galrep::reference_row(24) == nullptr);
  CHECK(galrep::is_annotated_discrepancy(19));
  CHECK(galrep::is_annotated_discrepancy(103));
  CHECK_FALSE(galrep::is_annotated_discrepancy(23));
  CHECK_FALSE(galrep::is_annotated_discrepancy(59));
}
