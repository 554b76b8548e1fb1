#include <doctest.h>

#include "clifftwist/monomial.hpp"
#include "test_util.hpp"

using namespace clifftwist;

namespace {
Mask e(std::initializer_list<int> ix) {
  Mask m = 0;
  for (int i : ix) m |= Mask{1} << (i - 1);
  return m;
}
}  // namespace

TEST_CASE("gray_inverse is the prefix parity map") {
  CHECK(gray_inverse(0, 5) == 0);
  // a = (1,0,0): prefix parities (1,1,1)
  CHECK(gray_inverse(e({1}), 3) == e({1, 2, 3}));
  // a = (1,1,0): prefix sums (1,2,2) mod 2 = (1,0,0)
  CHECK(gray_inverse(e({1, 2}), 3) == e({1}));
  CHECK(gray_inverse(e({2}), 3) == e({2, 3}));
}

TEST_CASE("monomial products on generators") {
  const Signature cl20 = make_signature(2, 0);
  const Signature cl01 = make_signature(0, 1);

  CHECK(monomial_product(e({1}), e({1}), cl20) == SignedMask{+1, 0});
  CHECK(monomial_product(e({1}), e({1}), cl01) == SignedMask{-1, 0});
  CHECK(monomial_product(e({1}), e({2}), cl20) == SignedMask{+1, e({1, 2})});
  CHECK(monomial_product(e({2}), e({1}), cl20) == SignedMask{-1, e({1, 2})});
}

TEST_CASE("e13 and e24 commute in Cl(2,2)") {
  const Signature sig = make_signature(2, 2);
  const auto ab = monomial_product(e({1, 3}), e({2, 4}), sig);
  const auto ba = monomial_product(e({2, 4}), e({1, 3}), sig);
  CHECK(ab == ba);
  CHECK(ab == testutil::product_by_swaps(e({1, 3}), e({2, 4}), sig));
}

TEST_CASE("square signs") {
  CHECK(monomial_square_sign(0, make_signature(1, 2)) == +1);
  CHECK(monomial_square_sign(e({1, 3}), make_signature(1, 2)) == +1);
  CHECK(monomial_square_sign(e({1, 2}), make_signature(2, 0)) == -1);
  CHECK(monomial_square_sign(e({2}), make_signature(1, 2)) == -1);
}

TEST_CASE("monomial inverse undoes the monomial") {
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; p + q <= 5 && q <= 3; ++q) {
      const Signature sig = make_signature(p, q);
      for (Mask m : all_monomials_sorted(sig.n())) {
        const SignedMask inv = monomial_inverse(m, sig);
        const SignedMask prod = monomial_product(inv.mask, m, sig);
        CHECK(prod.mask == 0);
        CHECK(prod.sign * inv.sign == +1);
      }
    }
  }
}

TEST_CASE("walsh product agrees with the swap-count oracle") {
  testutil::Rng rng(2024);
  for (int p = 0; p <= 4; ++p) {
    for (int q = 0; q <= 4; ++q) {
      const Signature sig = make_signature(p, q);
      for (int t = 0; t < 200; ++t) {
        const Mask a = rng.mask(sig.n());
        const Mask b = rng.mask(sig.n());
        CHECK(monomial_product(a, b, sig) == testutil::product_by_swaps(a, b, sig));
      }
    }
  }
}

TEST_CASE("product sign is a 2-cocycle") {
  auto gamma = [](Mask a, Mask b, const Signature& sig) {
    return monomial_product(a, b, sig).sign;
  };
  for (const Signature sig : {make_signature(2, 1), make_signature(0, 4)}) {
    for (Mask a : all_monomials_sorted(sig.n()))
      for (Mask b : all_monomials_sorted(sig.n()))
        for (Mask c : all_monomials_sorted(sig.n()))
          CHECK(gamma(a, b, sig) * gamma(a ^ b, c, sig) ==
                gamma(b, c, sig) * gamma(a, b ^ c, sig));
  }
}

TEST_CASE("canonical order: grade first, then lexicographic index lists") {
  CHECK(monomial_less(0, e({1})));
  CHECK(monomial_less(e({3}), e({1, 2})));
  CHECK(monomial_less(e({1, 2}), e({1, 3})));
  CHECK(monomial_less(e({1, 4}), e({2, 3})));  // e14 before e23
  CHECK(!monomial_less(e({2, 3}), e({1, 4})));
  CHECK(!monomial_less(e({1}), e({1})));

  const auto sorted = all_monomials_sorted(3);
  const std::vector<Mask> expect = {0,         e({1}),    e({2}),    e({3}),
                                    e({1, 2}), e({1, 3}), e({2, 3}), e({1, 2, 3})};
  CHECK(sorted == expect);
}

TEST_CASE("monomial names") {
  CHECK(monomial_name(0, 4) == "1");
  CHECK(monomial_name(e({1, 3}), 4) == "e13");
  CHECK(monomial_name(e({2, 10}), 12) == "e{2,10}");
}
