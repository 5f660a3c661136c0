#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mrdkit;

namespace {

FieldPtr gf81() { return FieldCtx::build(3, 1, 4); }
FieldPtr gf243() { return FieldCtx::build(3, 1, 5); }

std::set<SupportSet> as_set(const std::vector<SupportSet>& v) { return {v.begin(), v.end()}; }

Elem first_eligible(const FieldPtr& F, unsigned k) {
    for (Elem e = 1; e < F->size(); ++e)
        if (norm_condition(FamilyParams::twisted(F, k, 1, 0, e))) return e;
    return 0;
}

} // namespace

TEST(Supports, Universal) {
    const auto F = FieldCtx::build(3, 1, 7);
    const Elem eta = first_eligible(F, 3);
    EXPECT_EQ(universal_support(gtg_construct(FamilyParams::twisted(F, 3, 2, 1, eta))), (SupportSet{0, 2, 4, 6}));
    EXPECT_EQ(universal_support(gg_construct(F, 3, 2)), (SupportSet{0, 2, 4}));
    EXPECT_EQ(universal_support(LinCode(F, {})), SupportSet{});
}

TEST(Supports, Canonical) {
    const auto F = gf243();
    const Elem eta = first_eligible(F, 2);
    EXPECT_EQ(as_set(canonical_supports(FamilyParams::twisted(F, 2, 1, 0, 0))), (std::set<SupportSet>{{0}, {1}}));
    EXPECT_EQ(as_set(canonical_supports(FamilyParams::twisted(F, 2, 1, 0, eta))), (std::set<SupportSet>{{1}, {0, 2}}));
    const auto G = FieldCtx::build(3, 1, 7);
    EXPECT_EQ(as_set(canonical_supports(FamilyParams::twisted(G, 3, 2, 0, first_eligible(G, 3)))),
              (std::set<SupportSet>{{2}, {4}, {0, 6}}));
}

TEST(Supports, IndependentSupportChecks) {
    const auto F = FieldCtx::build(3, 1, 2);
    std::vector<LinPoly> gens;
    for (Elem b : F->basis()) {
        gens.emplace_back(F, std::vector<Elem>{b, F->frobenius_q(b, 1)});
        gens.emplace_back(F, std::vector<Elem>{0, b});
    }
    const auto code = LinCode::span(F, gens);
    EXPECT_TRUE(check_independent_support(code, {1}, {{1, {1, 0}}}));
    EXPECT_TRUE(check_independent_support(code, {0, 1}, {{0, {1, 0}}, {1, {1, 1}}}));

    const auto G = gf81();
    const auto p = FamilyParams::twisted(G, 2, 1, 3, first_eligible(G, 2));
    EXPECT_TRUE(check_independent_support(gtg_construct(p), {0, 2}, {{0, {1, 0}}, {2, {p.eta, 3}}}));
    EXPECT_FALSE(check_independent_support(gtg_construct(p), {0, 2}, {{0, {1, 0}}, {2, {p.eta, 2}}}));
    EXPECT_THROW(check_independent_support(code, {0, 1}, {{0, {1, 0}}}), Error);
}

TEST(SetPower, Examples) {
    EXPECT_EQ(set_power({1, 2}, {0, 1}, 4), (SupportSet{1, 3}));
    EXPECT_EQ(set_power({1, 4}, {1, 3}, 5), (SupportSet{0, 4}));
    EXPECT_EQ(set_power({3}, {0, 2, 5}, 7), (SupportSet{3, 5, 1}));
}

TEST(SetPower, MatchesCounting) {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 200; ++t) {
        const unsigned n = 3 + rng() % 8;
        SupportSet A, B;
        for (unsigned i = 0; i < n; ++i) {
            if (rng() % 2) A.insert(i);
            if (rng() % 3 == 0) B.insert(i);
        }
        std::map<unsigned, int> hits;
        for (auto a : A)
            for (auto b : B) ++hits[(a + b) % n];
        SupportSet want;
        for (auto [s, c] : hits)
            if (c == 1) want.insert(s);
        EXPECT_EQ(set_power(A, B, n), want);
    }
}

TEST(Filter, RawExamples) {
    const unsigned n = 5;
    const auto F = gf243();
    const auto T1 = canonical_supports(FamilyParams::gabidulin(F, 2, 1));
    EXPECT_TRUE(support_filter(T1, universal_support(gg_construct(F, 2, 2)), n).inequivalent);
    const auto all = support_filter({{0}}, {0, 1, 2, 3, 4}, n);
    EXPECT_FALSE(all.inequivalent);
    EXPECT_EQ(all.candidates.size(), 31u);
}

TEST(Filter, BothNonzeroAtNFive) {
    const auto F = gf243();
    const Elem eta = first_eligible(F, 2);
    const auto v = support_filter(FamilyParams::twisted(F, 2, 1, 0, eta), FamilyParams::twisted(F, 2, 2, 3, eta));
    EXPECT_FALSE(v.inequivalent);
    EXPECT_NE(std::find(v.candidates.begin(), v.candidates.end(), SupportSet{4, 1, 3}), v.candidates.end());
}

TEST(Filter, NeverRejectsEquivalentPairs) {
    const auto F = gf81();
    const Elem eta = first_eligible(F, 2);
    const auto a = FamilyParams::twisted(F, 2, 1, 1, eta);
    EXPECT_FALSE(support_filter(a, a).inequivalent);
    EXPECT_FALSE(support_filter(a, FamilyParams::twisted(F, 2, 3, 3, eta)).inequivalent);
}

TEST(MonomialSearch, Examples) {
    const auto F = gf81();
    const Elem eta = first_eligible(F, 2);
    const auto p = FamilyParams::twisted(F, 2, 1, 1, eta);
    const auto self = monomial_search(p, p);
    ASSERT_TRUE(self);
    EXPECT_EQ(*self, (MonomialWitness{1, 1, 0, 0, 0}));
    for (unsigned h = 0; h < 4; ++h)
        EXPECT_FALSE(monomial_search(FamilyParams::gabidulin(F, 2, 1), FamilyParams::twisted(F, 2, 1, h, eta)));
}

TEST(MonomialSearch, FrobeniusOfEta) {
    const auto F = gf81();
    for (Elem eta : {Elem{2}, Elem{7}, Elem{41}}) {
        const auto a = FamilyParams::twisted(F, 2, 1, 1, eta);
        if (!norm_condition(a)) continue;
        const auto b = FamilyParams::twisted(F, 2, 1, 1, F->frobenius_q(eta, 1));
        const auto ca = gtg_construct(a), cb = gtg_construct(b);
        EXPECT_TRUE(verify_witness(ca, cb, to_equiv(F, MonomialWitness{1, 1, 1, 0, 0})));
        EXPECT_TRUE(monomial_search(ca, cb));
        EXPECT_TRUE(thm_equiv_predicate(a, b));
    }
}

TEST(MonomialSearch, PartnersVerify) {
    const auto F = gf81();
    const Elem eta = first_eligible(F, 1);
    for (unsigned k = 1; k < 4; ++k)
        for (unsigned h = 0; h < 4; ++h) {
            const auto p = FamilyParams::twisted(F, k, 3, h, eta);
            if (!norm_condition(p)) continue;
            const auto code = gtg_construct(p);
            const auto dual = delsarte_dual(code), partner = construct(dual_partner(p));
            const auto w = monomial_search(dual, partner);
            ASSERT_TRUE(w);
            EXPECT_TRUE(verify_witness(dual, partner, to_equiv(F, *w)));
            const auto adj = adjoint_code(code), apartner = construct(adjoint_partner(p));
            const auto w2 = monomial_search(adj, apartner);
            ASSERT_TRUE(w2);
            EXPECT_TRUE(verify_witness(adj, apartner, to_equiv(F, *w2)));
        }
}

TEST(Predicate, Examples) {
    const auto F = gf81();
    const Elem eta = first_eligible(F, 2);
    const auto a = FamilyParams::twisted(F, 2, 1, 1, eta);
    EXPECT_TRUE(thm_equiv_predicate(a, a));
    const auto G = gf243();
    const Elem e5 = first_eligible(G, 2);
    EXPECT_FALSE(thm_equiv_predicate(FamilyParams::twisted(G, 2, 1, 0, e5), FamilyParams::twisted(G, 2, 2, 0, e5)));
    try {
        thm_equiv_predicate(FamilyParams::twisted(F, 1, 1, 0, eta), FamilyParams::twisted(F, 1, 1, 0, eta));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::OutOfTheoremRange);
    }
}

TEST(Witness, IdentityAndRankInvariance) {
    const auto F = gf81();
    const auto code = gtg_construct(FamilyParams::twisted(F, 2, 1, 1, first_eligible(F, 2)));
    const EquivWitness id{LinPoly::identity(F), LinPoly::identity(F), 0};
    EXPECT_TRUE(verify_witness(code, code, id));
    std::mt19937_64 rng(41);
    const EquivWitness w{oracle::random_permutation(F, rng), oracle::random_permutation(F, rng), 2};
    std::vector<LinPoly> img;
    for (const auto& f : code.basis()) img.push_back(apply_witness(w, f));
    const auto other = LinCode::span(F, img);
    EXPECT_TRUE(verify_witness(code, other, w));
    EXPECT_EQ(rank_distribution(code), rank_distribution(other));
    EXPECT_THROW(verify_witness(code, other, EquivWitness{LinPoly::zero(F), LinPoly::identity(F), 0}), Error);
}

TEST(Automorphisms, GroupStructure) {
    for (const auto& F : {FieldCtx::build(2, 1, 3), FieldCtx::build(3, 1, 2)}) {
        const auto autos = monomial_automorphisms(gg_construct(F, 1, 1));
        const std::set<MonomialWitness> set(autos.begin(), autos.end());
        EXPECT_TRUE(set.count(MonomialWitness{1, 1, 0, 0, 0}));
        for (const auto& a : autos)
            for (const auto& b : autos) ASSERT_TRUE(set.count(compose_witness(*F, a, b)));
    }
    EXPECT_EQ(monomial_automorphisms(gg_construct(FieldCtx::build(2, 1, 3), 1, 1)).size(), 441u);
}

TEST(Automorphisms, GabidulinStabilizedByAllMonomials) {
    const auto F = FieldCtx::build(2, 1, 4);
    const auto code = gg_construct(F, 2, 1);
    std::mt19937_64 rng(51);
    for (int t = 0; t < 200; ++t) {
        const MonomialWitness w{1 + static_cast<Elem>(rng() % 15), 1 + static_cast<Elem>(rng() % 15),
                                static_cast<unsigned>(rng() % 4), static_cast<unsigned>(rng() % 4), 0};
        EXPECT_TRUE(verify_witness(code, code, to_equiv(F, w)));
    }
}

TEST(Oracle, GLOrderAndEnumeration) {
    EXPECT_EQ(gl_order(3, 2), 168u);
    EXPECT_EQ(gl_order(2, 3), 48u);
    std::uint64_t count = 0;
    for_each_invertible(*FieldCtx::build(2, 1, 3), [&](const MatrixGFq& m) {
        EXPECT_EQ(linalg::rank(FieldCtx::build(2, 1, 3)->sub(), m), 3u);
        ++count;
        return true;
    });
    EXPECT_EQ(count, 168u);
}

TEST(Oracle, PlantAndRecover) {
    const auto F = FieldCtx::build(2, 1, 4);
    const auto code = gg_construct(F, 2, 1);
    std::mt19937_64 rng(61);
    for (int t = 0; t < 3; ++t) {
        const EquivWitness planted{oracle::random_permutation(F, rng), oracle::random_permutation(F, rng),
                                   static_cast<unsigned>(rng() % 4)};
        std::vector<LinPoly> img;
        for (const auto& f : code.basis()) img.push_back(apply_witness(planted, f));
        const auto target = LinCode::span(F, img);
        const auto w = exhaustive_oracle(code, target);
        ASSERT_TRUE(w);
        EXPECT_TRUE(verify_witness(code, target, *w));
    }
}

TEST(Oracle, SameCodeAndBudget) {
    const auto F = FieldCtx::build(2, 1, 3);
    const auto code = gg_construct(F, 2, 1);
    EXPECT_TRUE(exhaustive_oracle(code, code));
    OracleOptions tight;
    tight.budget = 100;
    try {
        exhaustive_oracle(code, code, tight);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::BudgetExceeded);
    }
}

TEST(Oracle, AgreesWithMonomialSearchOnSmallField) {
    // At q = 4, n = 2 every pair of k = 1 codes is decided both ways.
    const auto F = FieldCtx::build(2, 2, 2);
    std::vector<FamilyParams> ps;
    for (Elem eta = 0; eta < 16; ++eta)
        if (norm_condition(FamilyParams::twisted(F, 1, 1, 0, eta))) ps.push_back(FamilyParams::twisted(F, 1, 1, 0, eta));
    for (const auto& a : ps)
        for (const auto& b : ps) {
            const auto ca = construct(a), cb = construct(b);
            if (monomial_search(ca, cb)) {
                const auto w = exhaustive_oracle(ca, cb);
                ASSERT_TRUE(w);
                EXPECT_TRUE(verify_witness(ca, cb, *w));
            }
        }
}

TEST(Oracle, CollectAllMatchesNaiveCount) {
    const auto F = FieldCtx::build(2, 1, 3);
    std::vector<LinPoly> perms;
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b)
            for (Elem c = 0; c < 8; ++c) {
                LinPoly f(F, {a, b, c});
                if (oracle::rank_by_kernel(f) == 3) perms.push_back(f);
            }
    ASSERT_EQ(perms.size(), 168u);
    for (const auto& [c1, c2] : {std::pair{gg_construct(F, 1, 1), gg_construct(F, 1, 2)},
                                  std::pair{gg_construct(F, 2, 1), gg_construct(F, 2, 1)}}) {
        std::size_t naive = 0;
        for (const auto& L1 : perms)
            for (const auto& L2 : perms)
                for (unsigned rho = 0; rho < 3; ++rho) naive += verify_witness(c1, c2, EquivWitness{L1, L2, rho});
        OracleOptions all;
        all.collect_all = true;
        const auto found = exhaustive_oracle_all(c1, c2, all);
        EXPECT_EQ(found.size(), naive);
        for (const auto& w : found) EXPECT_TRUE(verify_witness(c1, c2, w));
    }
}
