#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hkc/errors.hpp"
#include "hkc/hodge.hpp"

using namespace hkc;

namespace {

HodgeDiamond k3_surface() {
  return HodgeDiamond::from_upper_rows({{1}, {0, 0}, {1, 20, 1}});
}

}  // namespace

TEST_CASE("diamond construction enforces both symmetries") {
  HodgeDiamond k3 = k3_surface();
  CHECK(k3.dim() == 2);
  CHECK(k3.h(1, 1) == 20);
  CHECK(k3.h(2, 0) == 1);
  CHECK(k3.h(0, 2) == 1);
  CHECK(k3.betti() == std::vector<long long>{1, 0, 22, 0, 1});
  CHECK(k3.euler_characteristic() == 24);

  // conjugation symmetry violated
  CHECK_THROWS_AS(HodgeDiamond(1, {{1, 2}, {3, 1}}), Error);
  // duality violated: h(0,0) != h(1,1)
  CHECK_THROWS_AS(HodgeDiamond(1, {{1, 0}, {0, 2}}), Error);
  // negative entry
  CHECK_THROWS_AS(HodgeDiamond::from_upper_rows({{-1}}), Error);
  // ragged shape
  CHECK_THROWS_AS(HodgeDiamond(1, {{1}, {0, 0}}), Error);
}

TEST_CASE("point diamond and text round-trip") {
  CHECK(HodgeDiamond::point().dim() == 0);
  CHECK(HodgeDiamond::point().euler_characteristic() == 1);

  HodgeDiamond k3 = k3_surface();
  CHECK(HodgeDiamond::parse_text(k3.pyramid_text()) == k3);
  CHECK(HodgeDiamond::parse_text("1\n0 0\n1 20 1") == k3);
  CHECK_THROWS_AS(HodgeDiamond::parse_text("1\n0"), Error);
  CHECK_THROWS_AS(HodgeDiamond::parse_text("1\n0 x"), Error);
  CHECK_THROWS_AS(HodgeDiamond::parse_text(""), Error);
}

TEST_CASE("built-in fourfold and its resolution") {
  const HodgeDiamond& p0 = HodgeDiamond::prymian_P0();
  CHECK(p0.dim() == 4);
  CHECK(p0.h(1, 1) == 14);
  CHECK(p0.h(2, 2) == 148);
  CHECK(p0.h(2, 0) == 1);
  CHECK(p0.h(4, 0) == 1);
  CHECK(p0.h(1, 0) == 0);
  CHECK(p0.euler_characteristic() == 212);

  const HodgeDiamond& res = HodgeDiamond::prymian_P0_resolved();
  CHECK(res.h(1, 1) == 42);
  CHECK(res.h(2, 2) == 176);
  CHECK(res.h(3, 3) == 42);
  CHECK(blow_up_opc4_points(p0, 28) == res);
}

TEST_CASE("blow-up of isolated quotient points touches only the middle column") {
  HodgeDiamond p0 = HodgeDiamond::prymian_P0();
  HodgeDiamond up = blow_up_opc4_points(p0, 3);
  CHECK(up.h(1, 1) == 17);
  CHECK(up.h(2, 2) == 151);
  CHECK(up.h(3, 3) == 17);
  CHECK(up.h(2, 0) == p0.h(2, 0));
  CHECK(up.euler_characteristic() == p0.euler_characteristic() + 3 * 3);
  CHECK(blow_up_opc4_points(p0, 0) == p0);
  CHECK_THROWS_AS(blow_up_opc4_points(p0, -1), Error);
  CHECK_THROWS_AS(blow_up_opc4_points(k3_surface(), 1), Error);
  try {
    blow_up_opc4_points(k3_surface(), 1);
  } catch (const Error& e) {
    CHECK(e.code() == errc::wrong_dimension);
  }
}

TEST_CASE("hochschild support windows are validated") {
  CHECK_NOTHROW(HochschildNumbers(HochschildVariant::homology, 2, {{-2, 1}, {0, 22}, {2, 1}}));
  CHECK_NOTHROW(HochschildNumbers(HochschildVariant::cohomology, 2, {{0, 1}, {4, 1}}));
  CHECK_THROWS_AS(HochschildNumbers(HochschildVariant::homology, 2, {{3, 1}}), Error);
  CHECK_THROWS_AS(HochschildNumbers(HochschildVariant::cohomology, 2, {{-1, 1}}), Error);
  CHECK_THROWS_AS(HochschildNumbers(HochschildVariant::cohomology, 2, {{5, 1}}), Error);
  CHECK_THROWS_AS(HochschildNumbers(HochschildVariant::homology, 2, {{0, -3}}), Error);

  HochschildNumbers hh(HochschildVariant::homology, 2, {{-2, 1}, {-1, 0}, {0, 22}, {2, 1}});
  CHECK(hh.table().size() == 3);  // the zero entry is dropped
  CHECK(hh.at(-1) == 0);
  CHECK(hh.euler() == 24);
}

TEST_CASE("HKR collapse of the K3 diamond") {
  HochschildNumbers hh = hkr_homology(k3_surface());
  CHECK(hh.variant() == HochschildVariant::homology);
  CHECK(hh.at(-2) == 1);
  CHECK(hh.at(0) == 22);
  CHECK(hh.at(2) == 1);
  CHECK(hh.at(1) == 0);
  CHECK(hh.euler() == 24);
}

TEST_CASE("HKR of the resolved fourfold feeds the decomposition pipeline") {
  HochschildNumbers hh = hkr_homology(HodgeDiamond::prymian_P0_resolved());
  CHECK(hh.table() ==
        std::map<int, long long>{{-4, 1}, {-2, 16}, {0, 262}, {2, 16}, {4, 1}});

  HochschildNumbers cut = sod_subtract_exceptional(hh, 56);
  CHECK(cut.at(0) == 206);
  CHECK(cut.at(2) == 16);

  HochschildNumbers coh = serre_shift_cohomology(cut, 4);
  CHECK(coh.variant() == HochschildVariant::cohomology);
  CHECK(coh.table() ==
        std::map<int, long long>{{0, 1}, {2, 16}, {4, 206}, {6, 16}, {8, 1}});

  auto betti = hk4_betti_from_hochschild(coh);
  CHECK(betti == std::array<long long, 9>{1, 0, 16, 0, 206, 0, 16, 0, 1});
}

TEST_CASE("HKR of a blow-up adds three classes to the middle column") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    HodgeDiamond d = testutil::random_diamond(rng, 4);
    for (long long m : {1LL, 5LL}) {
      HochschildNumbers base = hkr_homology(d);
      HochschildNumbers up = hkr_homology(blow_up_opc4_points(d, m));
      for (int k = -4; k <= 4; ++k)
        CHECK(up.at(k) == base.at(k) + (k == 0 ? 3 * m : 0));
    }
  }
}

TEST_CASE("decomposition subtraction refuses to go negative") {
  HochschildNumbers hh(HochschildVariant::homology, 2, {{0, 5}});
  CHECK(sod_subtract_exceptional(hh, 5).at(0) == 0);
  CHECK_THROWS_AS(sod_subtract_exceptional(hh, 6), Error);
  try {
    sod_subtract_exceptional(hh, 6);
  } catch (const Error& e) {
    CHECK(e.code() == errc::negative_dimension);
  }
  HochschildNumbers coh(HochschildVariant::cohomology, 2, {{0, 5}});
  CHECK_THROWS_AS(sod_subtract_exceptional(coh, 1), Error);
}

TEST_CASE("serre regrading sends the homology window onto [0, 2d]") {
  HochschildNumbers hh(HochschildVariant::homology, 3, {{-3, 2}, {0, 7}, {3, 2}});
  HochschildNumbers coh = serre_shift_cohomology(hh, 3);
  CHECK(coh.at(0) == 2);
  CHECK(coh.at(3) == 7);
  CHECK(coh.at(6) == 2);
  CHECK(coh.euler() == hh.euler() * (3 % 2 == 0 ? 1 : -1));
  CHECK_THROWS_AS(serre_shift_cohomology(coh, 3), Error);
}

TEST_CASE("betti-number constraint in exact rationals") {
  // K3 as a 2-Calabi-Yau category: r = 1, hh^0 = hh^4 = 1, hh^2 = 22
  HochschildNumbers k3(HochschildVariant::cohomology, 2, {{0, 1}, {2, 22}, {4, 1}});
  SalamonCheck sc = salamon_check(k3, 1);
  CHECK(sc.holds);
  CHECK(sc.lhs == mpq_class(11));
  CHECK(sc.rhs == mpq_class(11));

  HochschildNumbers good(HochschildVariant::cohomology, 4,
                         {{0, 1}, {2, 16}, {4, 206}, {6, 16}, {8, 1}});
  SalamonCheck sg = salamon_check(good, 2);
  CHECK(sg.holds);
  CHECK(sg.lhs == mpq_class(206));
  CHECK(sg.rhs == mpq_class(206));

  HochschildNumbers skewed(HochschildVariant::cohomology, 4,
                           {{0, 1}, {2, 17}, {4, 206}, {6, 17}, {8, 1}});
  SalamonCheck sk = salamon_check(skewed, 2);
  CHECK(!sk.holds);
  CHECK(sk.lhs == mpq_class(216));
  CHECK(sk.rhs == mpq_class(206));

  // homology input or a support wider than [0, 4r] is refused
  HochschildNumbers hom(HochschildVariant::homology, 4, {{0, 1}});
  CHECK_THROWS_AS(salamon_check(hom, 2), Error);
  HochschildNumbers wide(HochschildVariant::cohomology, 4, {{0, 1}, {8, 1}});
  CHECK_THROWS_AS(salamon_check(wide, 1), Error);
}

TEST_CASE("second betti admissibility in both readings") {
  for (long long b2 = 0; b2 <= 7; ++b2) {
    CHECK(guan_b2_admissible(b2, GuanMode::strict));
    CHECK(guan_b2_admissible(b2, GuanMode::inclusive));
  }
  CHECK(!guan_b2_admissible(8, GuanMode::strict));
  CHECK(guan_b2_admissible(8, GuanMode::inclusive));
  for (long long b2 : {9LL, 16LL, 22LL, 24LL, 100LL}) {
    CHECK(!guan_b2_admissible(b2, GuanMode::strict));
    CHECK(!guan_b2_admissible(b2, GuanMode::inclusive));
  }
  CHECK(guan_b2_admissible(23, GuanMode::strict));
  CHECK(guan_b2_admissible(23, GuanMode::inclusive));
}

TEST_CASE("betti extraction validates palindromy and the odd part") {
  HochschildNumbers odd(HochschildVariant::cohomology, 4,
                        {{0, 1}, {1, 2}, {4, 5}, {7, 2}, {8, 1}});
  CHECK_THROWS_AS(hk4_betti_from_hochschild(odd), Error);

  HochschildNumbers lopsided(HochschildVariant::cohomology, 4, {{0, 1}, {8, 2}});
  CHECK_THROWS_AS(hk4_betti_from_hochschild(lopsided), Error);
  try {
    hk4_betti_from_hochschild(lopsided);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_palindromic);
  }

  HochschildNumbers hom(HochschildVariant::homology, 4, {{0, 1}});
  CHECK_THROWS_AS(hk4_betti_from_hochschild(hom), Error);
  HochschildNumbers wrong_d(HochschildVariant::cohomology, 3, {{0, 1}, {6, 1}});
  CHECK_THROWS_AS(hk4_betti_from_hochschild(wrong_d), Error);
}

TEST_CASE("random diamonds keep euler characteristics consistent through HKR") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t d = 1 + rng() % 4;
    HodgeDiamond dia = testutil::random_diamond(rng, d);
    HochschildNumbers hh = hkr_homology(dia);
    long long total = 0;
    for (auto [k, v] : hh.table()) total += v;
    long long hodge_total = 0;
    for (std::size_t p = 0; p <= d; ++p)
      for (std::size_t q = 0; q <= d; ++q) hodge_total += dia.h(p, q);
    CHECK(total == hodge_total);
    // signs: (-1)^k over q-p = k matches (-1)^(p+q) since k = q - p
    CHECK(hh.euler() == dia.euler_characteristic());
  }
}
