#include "clifftwist/verify.hpp"

#include <random>

#include "clifftwist/forms.hpp"

namespace clifftwist {

namespace {

struct GroupContext {
  CliData cd;
  GroupSubset g;
  GroupSubset gf;
  GroupSubset t;
  GroupSubset kf;
  GroupSubset pm1;  // {+-1}
};

GroupContext build_context(const Signature& sig) {
  CliData cd = make_clidata(sig);
  GroupSubset g = vee_group(sig);
  GroupSubset gf = stabilizer(cd.f);
  GroupSubset t = idempotent_group(cd.f);
  GroupSubset kf = field_group(cd.f, cd.data6);
  GroupSubset pm1(sig, GroupKind::custom,
                  {VeeElement{0, +1}, VeeElement{0, -1}});
  return GroupContext{std::move(cd), std::move(g), std::move(gf), std::move(t),
                      std::move(kf), std::move(pm1)};
}

void add_clause(VerifyReport& r, std::string id, std::string label, bool pass,
                std::string detail = {}) {
  r.clauses.push_back(
      ClauseCheck{std::move(id), std::move(label), pass, std::move(detail)});
}

// Quotient A/B with {+-1} <= B <= A: every square and every commutator must
// land in B, which makes the quotient an elementary abelian 2-group; equal
// orders then pin the isomorphism type.
bool elementary_abelian_quotient(const GroupSubset& a, const GroupSubset& b) {
  const Signature& sig = a.sig();
  for (const auto& x : a.elements()) {
    if (!b.contains(vee_mul(x, x, sig))) return false;
    for (const auto& y : a.elements()) {
      const VeeElement comm =
          vee_mul(vee_mul(x, y, sig),
                  vee_mul(vee_inverse(x, sig), vee_inverse(y, sig), sig), sig);
      if (!b.contains(comm)) return false;
    }
  }
  return true;
}

int span_rank(const Signature& sig, const std::vector<Multivector>& vecs) {
  RowEchelon span(std::size_t{1} << sig.n());
  for (const auto& v : vecs)
    if (!v.is_zero()) span.add(to_dense(v));
  return static_cast<int>(span.rank());
}

std::string order_detail(const GroupContext& c) {
  return "|G|=" + std::to_string(c.g.order()) +
         " |G(f)|=" + std::to_string(c.gf.order()) +
         " |T(f)|=" + std::to_string(c.t.order()) +
         " |K(f)|=" + std::to_string(c.kf.order());
}

}  // namespace

VerifyReport verify_main_theorem(const Signature& sig) {
  const GroupContext c = build_context(sig);
  VerifyReport r{sig, {}};

  bool commute = true;
  for (const auto& x : c.t.elements())
    for (const auto& y : c.kf.elements())
      if (!(vee_mul(x, y, sig) == vee_mul(y, x, sig))) commute = false;
  add_clause(r, "i", "elements of T(f) and K(f) commute", commute);

  add_clause(r, "ii", "T(f) and K(f) intersect in {+-1}",
             intersection(c.t, c.kf) == c.pm1);

  const bool prod = product_set(c.t, c.kf) == c.gf && product_set(c.kf, c.t) == c.gf;
  add_clause(r, "iii", "G(f) = T(f) K(f) = K(f) T(f)", prod);

  add_clause(r, "iv", "|G(f)| = |T(f)||K(f)|/2",
             2 * c.gf.order() == c.t.order() * c.kf.order(), order_detail(c));

  add_clause(r, "v", "G(f), T(f), K(f) are normal in G",
             c.gf.is_normal_in(c.g) && c.t.is_normal_in(c.g) &&
                 c.kf.is_normal_in(c.g));

  const bool vi_orders = c.gf.order() * 2 == c.kf.order() * c.t.order();
  const bool vi_structure = elementary_abelian_quotient(c.gf, c.kf) &&
                            elementary_abelian_quotient(c.t, c.pm1) &&
                            elementary_abelian_quotient(c.gf, c.t) &&
                            elementary_abelian_quotient(c.kf, c.pm1);
  add_clause(r, "vi", "G(f)/K(f) ~ T(f)/{+-1} and G(f)/T(f) ~ K(f)/{+-1}",
             vi_orders && vi_structure,
             "orders " + std::to_string(c.gf.order() / c.kf.order()) + "=" +
                 std::to_string(c.t.order() / 2) + ", " +
                 std::to_string(c.gf.order() / c.t.order()) + "=" +
                 std::to_string(c.kf.order() / 2));

  // (vii): the third-isomorphism identity on orders plus the span of K. The
  // data6 monomials form a transversal of T(f) in G(f) (distinct cosets,
  // full count) whose images span the corner f Cl f.
  std::vector<Multivector> k_images;
  for (Mask m : c.cd.data6)
    k_images.push_back(Multivector::basis(sig, m) * c.cd.f.value);
  const int dim_k = ideal_corner_dimension(c.cd.f);
  bool vii_transversal =
      c.cd.data6.size() * c.t.order() == c.gf.order();
  for (std::size_t i = 0; i < c.cd.data6.size() && vii_transversal; ++i) {
    if (!c.gf.contains(VeeElement{c.cd.data6[i], +1})) vii_transversal = false;
    for (std::size_t j = i + 1; j < c.cd.data6.size(); ++j)
      if (c.t.contains(VeeElement{c.cd.data6[i] ^ c.cd.data6[j], +1}))
        vii_transversal = false;
  }
  const bool vii_span = span_rank(sig, k_images) == dim_k &&
                        dim_k == k_dim(c.cd.cls) &&
                        static_cast<int>(c.cd.data6.size()) == dim_k;
  add_clause(r, "vii", "transversal of T(f) in G(f) spans K over R modulo f",
             vii_transversal && vii_span, "dim K = " + std::to_string(dim_k));

  // (viii): the transversal of G(f) in G spans S over K modulo f.
  const int dim_s = left_ideal_dimension(c.cd.f.value);
  const bool viii_span =
      span_rank(sig, c.cd.spinor_basis) == dim_s &&
      static_cast<int>(c.cd.spinor_basis.size()) == dim_s;
  add_clause(r, "viii", "transversal of G(f) in G spans S over K modulo f",
             viii_span, "dim_R S = " + std::to_string(dim_s));

  // (ix): quotient order identity and the real span of S.
  const bool ix_orders =
      c.g.order() / c.t.order() ==
      (c.gf.order() / c.t.order()) * (c.g.order() / c.gf.order());
  std::vector<Multivector> s_images;
  for (Mask m : c.cd.data5)
    s_images.push_back(Multivector::basis(sig, m) * c.cd.f.value);
  const bool ix_span = span_rank(sig, s_images) == dim_s &&
                       static_cast<int>(c.cd.data5.size()) == dim_s;
  add_clause(r, "ix", "|G/T| = |G(f)/T||G/G(f)|; transversal of T(f) spans S over R",
             ix_orders && ix_span);

  add_clause(r, "x", "G(f) is the centralizer of T(f) in G",
             centralizer(c.t, c.g) == c.gf);

  return r;
}

VerifyReport normal_series_check(const Signature& sig) {
  const GroupContext c = build_context(sig);
  VerifyReport r{sig, {}};

  // The vee group is abelian for n <= 1, so its commutator subgroup is then
  // trivial; the series below still uses {+-1} as the G' slot.
  const GroupSubset comm = commutator_subgroup(c.g);
  const GroupSubset trivial(sig, GroupKind::custom, {VeeElement{0, +1}});
  const bool comm_ok = sig.n() <= 1 ? comm == trivial : comm == c.pm1;
  add_clause(r, "series-0", "commutator subgroup of G is {+-1} (trivial for n <= 1)",
             comm_ok);

  const GroupSubset one(sig, GroupKind::custom, {VeeElement{0, +1}});
  auto chain_ok = [&](const GroupSubset& mid) {
    return c.g.contains_subgroup(c.gf) && c.gf.contains_subgroup(mid) &&
           mid.contains_subgroup(c.pm1) && c.pm1.contains_subgroup(one) &&
           c.gf.is_normal_in(c.g) && mid.is_normal_in(c.gf) &&
           c.pm1.is_normal_in(mid) && one.is_normal_in(c.pm1);
  };
  add_clause(r, "series-T", "G >= G(f) >= T(f) >= {+-1} >= {1}, each normal",
             chain_ok(c.t));
  add_clause(r, "series-K", "G >= G(f) >= K(f) >= {+-1} >= {1}, each normal",
             chain_ok(c.kf));
  return r;
}

VerifyReport verify_signature(const Signature& sig, std::uint64_t seed) {
  VerifyReport r = verify_main_theorem(sig);
  {
    const VerifyReport series = normal_series_check(sig);
    r.clauses.insert(r.clauses.end(), series.clauses.begin(), series.clauses.end());
  }

  const GroupContext c = build_context(sig);
  add_clause(r, "counts", "|data5| = |data6| |data7|",
             c.cd.data5.size() == c.cd.data6.size() * c.cd.data7.size(),
             std::to_string(c.cd.data5.size()) + " = " +
                 std::to_string(c.cd.data6.size()) + " * " +
                 std::to_string(c.cd.data7.size()));

  const bool orders_ok =
      c.g.order() == (std::uint64_t{1} << (1 + sig.n())) &&
      c.gf.order() == stabilizer_order_expected(sig) &&
      c.t.order() == (std::uint64_t{1} << (1 + idempotent_k(sig))) &&
      c.kf.order() == field_group_order_expected(sig);
  add_clause(r, "orders", "group orders match the closed formulas", orders_ok,
             order_detail(c));

  // Star oracle: the twisted-group-ring star map equals transposition on
  // every basis monomial and on seeded random elements.
  bool star_ok = true;
  for (Mask m : all_monomials_sorted(sig.n())) {
    const Multivector b = Multivector::basis(sig, m);
    if (!(star(b) == transposition(b))) star_ok = false;
  }
  std::mt19937_64 rng(seed ^ (std::uint64_t(sig.p) << 16) ^ sig.q);
  std::uniform_int_distribution<std::uint64_t> mask_dist(
      0, (std::uint64_t{1} << sig.n()) - 1);
  std::uniform_int_distribution<int> coeff(-9, 9);
  auto random_mv = [&] {
    Multivector u(sig);
    for (int t = 0; t < 6; ++t) {
      int cnum = coeff(rng);
      if (cnum == 0) cnum = 1;
      u.accumulate(static_cast<Mask>(mask_dist(rng)), Rational(cnum, 2));
    }
    return u;
  };
  for (int t = 0; t < 25; ++t) {
    const Multivector u = random_mv();
    if (!(star(u) == transposition(u))) star_ok = false;
  }
  add_clause(r, "star", "star map equals transposition (twisted ring view)",
             star_ok);

  bool dagger_ok = true;
  for (int i = 1; i <= sig.n(); ++i)
    if (!dagger_check(Multivector::generator(sig, i), c.cd)) dagger_ok = false;
  for (int t = 0; t < 10; ++t)
    if (!dagger_check(random_mv(), c.cd)) dagger_ok = false;
  add_clause(r, "dagger", "[T_eps(u)] is the (conjugate) transpose of [u]",
             dagger_ok);

  return r;
}

}  // namespace clifftwist
