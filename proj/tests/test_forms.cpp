#include <doctest.h>

#include "clifftwist/classify.hpp"
#include "oracle_data.hpp"
#include "test_util.hpp"

using namespace clifftwist;

namespace {
Mask e(std::initializer_list<int> ix) {
  Mask m = 0;
  for (int i : ix) m |= Mask{1} << (i - 1);
  return m;
}

Multivector random_spinor(const CliData& cd, testutil::Rng& rng) {
  Multivector psi = rng.multivector(cd.sig) * cd.f.value;
  if (!cd.simple) psi = psi + rng.multivector(cd.sig) * cd.fhat;
  return psi;
}
}  // namespace

TEST_CASE("tp of the idempotent with itself is 1") {
  for (const Signature sig :
       {make_signature(1, 1), make_signature(2, 2), make_signature(1, 3)}) {
    const CliData cd = make_clidata(sig);
    const KElement one = tp_product(cd.f.value, cd.f.value, cd);
    CHECK(one.a[0] == 1);
    for (std::size_t i = 1; i < one.a.size(); ++i) CHECK(is_zero(one.a[i]));
  }
}

TEST_CASE("tp Gram is the identity in every signature up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    for (int p = 0; p <= n; ++p) {
      const CliData cd = make_clidata(make_signature(p, n - p));
      const GramForm g = gram(cd, ProductKind::tp);
      CHECK(g.conj == ConjKind::k_conjugation);
      for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j)
          CHECK(g.at(i, j) == (i == j ? k_one(cd.kstruct) : k_zero(cd.kstruct)));
    }
  }
}

TEST_CASE("find_s golden monomials") {
  {
    const CliData cd = make_clidata(make_signature(2, 2));
    const auto s1 = find_s(cd, InvolutionKind::reversion_kind);
    const auto s2 = find_s(cd, InvolutionKind::conjugation_kind);
    REQUIRE(s1.has_value());
    REQUIRE(s2.has_value());
    CHECK(s1->mask == e({1, 2}));
    CHECK(s2->mask == e({1, 2}));
  }
  {
    const CliData cd = make_clidata(make_signature(1, 2));
    const auto s1 = find_s(cd, InvolutionKind::reversion_kind);
    REQUIRE(s1.has_value());
    CHECK(s1->mask == e({1}));
  }
  {
    // beta+ vanishes identically on the semisimple Cl(2,1).
    const CliData cd = make_clidata(make_signature(2, 1));
    CHECK(!find_s(cd, InvolutionKind::reversion_kind).has_value());
    CHECK(find_s(cd, InvolutionKind::conjugation_kind).has_value());
  }
  {
    // beta- vanishes identically on the semisimple Cl(1,4).
    const CliData cd = make_clidata(make_signature(1, 4));
    CHECK(find_s(cd, InvolutionKind::reversion_kind).has_value());
    CHECK(!find_s(cd, InvolutionKind::conjugation_kind).has_value());
  }
}

TEST_CASE("beta Gram matrices match the published displays") {
  {
    // Cl(1,2): beta+ = [[0,1],[1,0]] with conjugation, beta- = [[0,1],[-1,0]]
    // without.
    const CliData cd = make_clidata(make_signature(1, 2));
    const GramForm gp = gram(cd, ProductKind::beta_plus);
    CHECK(gp.conj == ConjKind::k_conjugation);
    CHECK(gp.at(0, 0) == k_zero(cd.kstruct));
    CHECK(gp.at(0, 1) == k_one(cd.kstruct));
    CHECK(gp.at(1, 0) == k_one(cd.kstruct));
    CHECK(gp.at(1, 1) == k_zero(cd.kstruct));

    const GramForm gm = gram(cd, ProductKind::beta_minus);
    CHECK(gm.conj == ConjKind::none);
    CHECK(gm.at(0, 1) == k_one(cd.kstruct));
    CHECK(gm.at(1, 0) == k_neg(k_one(cd.kstruct)));
  }
  {
    // Cl(2,2): beta+ Gram has the antidiagonal +-1 pattern of the display.
    const CliData cd = make_clidata(make_signature(2, 2));
    const GramForm gp = gram(cd, ProductKind::beta_plus);
    const auto val = [&](int i, int j) { return gp.at(i, j).a[0]; };
    CHECK(val(0, 3) == -1);
    CHECK(val(1, 2) == -1);
    CHECK(val(2, 1) == 1);
    CHECK(val(3, 0) == 1);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i + j != 3) CHECK(is_zero(val(i, j)));
  }
  {
    // Cl(1,3): beta+ = [[0,1],[1,0]] quaternionic Hermitian; beta- =
    // [[0,1],[-1,0]] under the star anti-involution.
    const CliData cd = make_clidata(make_signature(1, 3));
    const GramForm gp = gram(cd, ProductKind::beta_plus);
    CHECK(gp.conj == ConjKind::k_conjugation);
    CHECK(gp.at(0, 1) == k_one(cd.kstruct));
    CHECK(gp.at(1, 0) == k_one(cd.kstruct));
    const GramForm gm = gram(cd, ProductKind::beta_minus);
    CHECK(gm.conj == ConjKind::nonstandard);
    CHECK(gm.at(0, 1) == k_one(cd.kstruct));
    CHECK(gm.at(1, 0) == k_neg(k_one(cd.kstruct)));
  }
}

TEST_CASE("coordinate expansions reproduce the published polynomials") {
  for (const auto& oracle : testutil::coordinate_oracles()) {
    CAPTURE(oracle.p);
    CAPTURE(oracle.q);
    CAPTURE(static_cast<int>(oracle.kind));
    CHECK(testutil::coordinate_oracle_holds(oracle));
  }
}

TEST_CASE("classification of tp forms") {
  auto name_of = [](int p, int q) {
    const CliData cd = make_clidata(make_signature(p, q));
    return classify(gram(cd, ProductKind::tp), cd).name;
  };
  CHECK(name_of(2, 2) == "O(4)");
  CHECK(name_of(0, 5) == "U(4)");
  CHECK(name_of(1, 3) == "Sp(2)");
  CHECK(name_of(2, 1) == "2O(2)");
  CHECK(name_of(1, 4) == "2Sp(2)");
  CHECK(name_of(0, 0) == "O(1)");
}

TEST_CASE("classification of beta forms on the published examples") {
  auto group_of = [](int p, int q, ProductKind kind) {
    const CliData cd = make_clidata(make_signature(p, q));
    return classify(gram(cd, kind), cd);
  };
  CHECK(group_of(1, 2, ProductKind::beta_plus).name == "U(1,1)");
  CHECK(group_of(1, 2, ProductKind::beta_minus).name == "Sp(2,C)");
  CHECK(group_of(2, 2, ProductKind::beta_plus).name == "Sp(4,R)");
  CHECK(group_of(2, 2, ProductKind::beta_minus).name == "Sp(4,R)");

  const GroupName bp13 = group_of(1, 3, ProductKind::beta_plus);
  CHECK(bp13.name == "UH(1,1)");
  CHECK(bp13.lounesto_alias == "Sp(2,2)");
  CHECK(!bp13.nonstandard_conj);

  const GroupName bm13 = group_of(1, 3, ProductKind::beta_minus);
  CHECK(bm13.name == "UH(1,1)");
  CHECK(bm13.nonstandard_conj);

  CHECK(group_of(2, 1, ProductKind::beta_plus).name == "2GL(2,R)");
  CHECK(group_of(2, 1, ProductKind::beta_minus).name == "2Sp(2,R)");
  CHECK(group_of(1, 4, ProductKind::beta_plus).name == "2UH(1,1)");
  CHECK(group_of(1, 4, ProductKind::beta_minus).name == "2GL(2,H)");
}

TEST_CASE("hermitian exchange law") {
  testutil::Rng rng(55);
  for (const Signature sig :
       {make_signature(2, 2), make_signature(1, 2), make_signature(1, 3),
        make_signature(1, 4)}) {
    const CliData cd = make_clidata(sig);
    for (int t = 0; t < 12; ++t) {
      const Multivector psi = random_spinor(cd, rng);
      const Multivector phi = random_spinor(cd, rng);
      CHECK(tp_product(psi, phi, cd) == k_conjugate(tp_product(phi, psi, cd)));
    }
  }
}

TEST_CASE("K sesquilinearity of tp") {
  testutil::Rng rng(56);
  for (const Signature sig :
       {make_signature(1, 2), make_signature(1, 3), make_signature(2, 1)}) {
    const CliData cd = make_clidata(sig);
    for (int t = 0; t < 10; ++t) {
      const Multivector psi = random_spinor(cd, rng);
      const Multivector phi = random_spinor(cd, rng);
      KElement lam = k_zero(cd.kstruct), mu = k_zero(cd.kstruct);
      for (int l = 0; l < cd.kstruct.dim; ++l) {
        lam.a[l] = rng.rational();
        mu.a[l] = rng.rational();
        if (!cd.simple) {
          lam.b[l] = rng.rational();
          mu.b[l] = rng.rational();
        }
      }
      const Multivector psil = psi * k_to_multivector(lam, cd);
      const Multivector phim = phi * k_to_multivector(mu, cd);
      const KElement lhs = tp_product(psil, phim, cd);
      const KElement rhs = k_mul(
          cd.kstruct, k_conjugate(lam),
          k_mul(cd.kstruct, tp_product(psi, phi, cd), mu));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("tp coincides with beta+ on Cl(p,0) and beta- on Cl(0,q)") {
  testutil::Rng rng(57);
  for (int n = 0; n <= 5; ++n) {
    {
      const CliData cd = make_clidata(make_signature(n, 0));
      for (int t = 0; t < 8; ++t) {
        const Multivector psi = random_spinor(cd, rng);
        const Multivector phi = random_spinor(cd, rng);
        CHECK(tp_product(psi, phi, cd) ==
              beta_product(psi, phi, cd, ProductKind::beta_plus));
      }
    }
    {
      const CliData cd = make_clidata(make_signature(0, n));
      for (int t = 0; t < 8; ++t) {
        const Multivector psi = random_spinor(cd, rng);
        const Multivector phi = random_spinor(cd, rng);
        CHECK(tp_product(psi, phi, cd) ==
              beta_product(psi, phi, cd, ProductKind::beta_minus));
      }
    }
  }
}

TEST_CASE("vee group elements preserve the tp Gram") {
  const CliData cd = make_clidata(make_signature(1, 2));
  std::vector<Multivector> basis;
  for (Mask m : cd.data7)
    basis.push_back(Multivector::basis(cd.sig, m) * cd.f.value);
  const GroupSubset vg = vee_group(cd.sig);
  for (const auto& g : vg.elements()) {
    const Multivector gv = to_multivector(g, cd.sig);
    for (int i = 0; i < cd.N; ++i) {
      for (int j = 0; j < cd.N; ++j) {
        const KElement entry = tp_product(gv * basis[i], gv * basis[j], cd);
        CHECK(entry == (i == j ? k_one(cd.kstruct) : k_zero(cd.kstruct)));
      }
    }
  }
}
