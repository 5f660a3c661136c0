// Randomized property checks with fixed seeds.
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mrdkit;

namespace {

struct Gen {
    std::mt19937_64 rng;
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    std::uint64_t below(std::uint64_t n) { return rng() % n; }

    FieldPtr field() {
        static const std::vector<std::array<unsigned, 3>> shapes{
            {2, 1, 3}, {2, 1, 4}, {2, 2, 2}, {2, 2, 3}, {3, 1, 2}, {3, 1, 3}, {3, 1, 4}, {5, 1, 2}, {5, 1, 3}, {7, 1, 2}, {3, 2, 2}};
        const auto& s = shapes[below(shapes.size())];
        return FieldCtx::build(s[0], s[1], s[2]);
    }

    Elem elem(const FieldCtx& F) { return below(F.size()); }
    Elem nonzero(const FieldCtx& F) { return 1 + below(F.size() - 1); }

    unsigned coprime(unsigned n) {
        for (;;) {
            const unsigned s = 1 + static_cast<unsigned>(below(n));
            if (std::gcd(s, n) == 1) return s % n == 0 ? 1 : s;
        }
    }

    FamilyParams eligible(const FieldPtr& F, unsigned k) {
        for (;;) {
            const Elem eta = below(3) == 0 ? 0 : nonzero(*F);
            auto p = FamilyParams::twisted(F, k, coprime(F->n()), static_cast<unsigned>(below(F->n())), eta);
            if (norm_condition(p)) return p;
        }
    }
};

unsigned oracle_min_rank(const LinCode& code) {
    unsigned best = code.ctx()->n();
    for (const auto& f : enumerate_codewords(code))
        if (!f.is_zero()) best = std::min(best, oracle::rank_by_kernel(f));
    return best;
}

} // namespace

TEST(Property, FieldAxioms) {
    Gen g(101);
    for (int t = 0; t < 40; ++t) {
        const auto F = g.field();
        for (int i = 0; i < 50; ++i) {
            const Elem a = g.elem(*F), b = g.elem(*F), c = g.elem(*F);
            ASSERT_EQ(F->mul(a, F->add(b, c)), F->add(F->mul(a, b), F->mul(a, c)));
            ASSERT_EQ(F->add(a, F->neg(a)), 0u);
            if (a) {
                ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
            }
            const long long j = static_cast<long long>(g.below(F->d()));
            ASSERT_EQ(F->frobenius_p(F->add(a, b), j), F->add(F->frobenius_p(a, j), F->frobenius_p(b, j)));
            ASSERT_EQ(F->frobenius_p(F->mul(a, b), j), F->mul(F->frobenius_p(a, j), F->frobenius_p(b, j)));
            ASSERT_EQ(F->rel_norm(F->mul(a, b)), F->mul(F->rel_norm(a), F->rel_norm(b)));
            ASSERT_EQ(F->rel_trace(F->add(a, b)), F->add(F->rel_trace(a), F->rel_trace(b)));
        }
    }
}

TEST(Property, NormIdentityAnyCoprimeStep) {
    Gen g(102);
    for (int t = 0; t < 30; ++t) {
        const auto F = g.field();
        const unsigned s = g.coprime(F->n());
        const Elem a = g.nonzero(*F);
        Elem prod = 1;
        for (unsigned i = 0; i < F->n(); ++i) prod = F->mul(prod, F->frobenius_q(a, static_cast<long long>(s) * i));
        EXPECT_EQ(prod, F->rel_norm(a));
    }
}

TEST(Property, EligibleCodesAreMrd) {
    Gen g(103);
    for (int t = 0; t < 25; ++t) {
        const auto F = g.field();
        if (F->size() > 1000) continue;
        const unsigned k = 1 + static_cast<unsigned>(g.below(F->n() - 1));
        if (F->q() == 2) { // no nonzero scalar is eligible over GF(2)
            const auto code = gg_construct(F, k, g.coprime(F->n()));
            EXPECT_EQ(oracle_min_rank(code), F->n() - k + 1);
            continue;
        }
        const auto p = g.eligible(F, k);
        const auto code = gtg_construct(p);
        const auto r = is_mrd(code);
        EXPECT_TRUE(r.mrd) << text::format_code(p);
        const auto size = checked_pow(F->q(), code.dim());
        if (size && *size <= 20000) {
            EXPECT_EQ(r.min_dist, oracle_min_rank(code));
        }
        EXPECT_TRUE(is_mrd(delsarte_dual(code)).mrd);
    }
}

TEST(Property, CodesAreClosedUnderAddition) {
    Gen g(104);
    for (int t = 0; t < 30; ++t) {
        const auto F = g.field();
        const unsigned k = 1 + static_cast<unsigned>(g.below(F->n() - 1));
        const auto code = construct(FamilyParams::twisted(F, k, g.coprime(F->n()), 0, g.elem(*F)));
        EXPECT_EQ(code.dim(), static_cast<std::size_t>(F->n()) * k);
        LinPoly acc = LinPoly::zero(F);
        for (const auto& b : code.basis()) {
            const auto coef = F->embed(static_cast<SubElem>(g.below(F->q())));
            acc = acc + b.scaled(coef);
        }
        EXPECT_TRUE(code.contains(acc));
    }
}

TEST(Property, WitnessTransportKeepsRanks) {
    Gen g(105);
    for (int t = 0; t < 10; ++t) {
        const auto F = FieldCtx::build(3, 1, 3);
        const auto code = gtg_construct(g.eligible(F, 1 + static_cast<unsigned>(g.below(2))));
        const EquivWitness w{oracle::random_permutation(F, g.rng), oracle::random_permutation(F, g.rng),
                             static_cast<unsigned>(g.below(F->d()))};
        std::vector<LinPoly> img;
        for (const auto& f : code.basis()) img.push_back(apply_witness(w, f));
        const auto other = LinCode::span(F, img);
        EXPECT_EQ(other.dim(), code.dim());
        EXPECT_TRUE(verify_witness(code, other, w));
        EXPECT_EQ(rank_distribution(code), rank_distribution(other));
    }
}

TEST(Property, MonomialTransportIsFound) {
    Gen g(106);
    const auto F = FieldCtx::build(3, 1, 4);
    for (int t = 0; t < 20; ++t) {
        const auto p = g.eligible(F, 2);
        const auto code = gtg_construct(p);
        const MonomialWitness w{g.nonzero(*F), g.nonzero(*F), static_cast<unsigned>(g.below(4)),
                                static_cast<unsigned>(g.below(4)), static_cast<unsigned>(g.below(4))};
        std::vector<LinPoly> img;
        for (const auto& f : code.basis()) img.push_back(apply_witness(to_equiv(F, w), f));
        const auto other = LinCode::span(F, img);
        const auto found = monomial_search(code, other);
        ASSERT_TRUE(found);
        EXPECT_TRUE(verify_witness(code, other, to_equiv(F, *found)));
    }
}

TEST(Property, PredicateSymmetricAndFilterSound) {
    Gen g(107);
    const auto F = FieldCtx::build(3, 1, 4);
    for (int t = 0; t < 300; ++t) {
        const auto a = g.eligible(F, 2), b = g.eligible(F, 2);
        const bool ab = thm_equiv_predicate(a, b);
        EXPECT_EQ(ab, thm_equiv_predicate(b, a));
        if (ab) {
            EXPECT_FALSE(support_filter(a, b).inequivalent);
        }
        EXPECT_EQ(ab, monomial_search(a, b).has_value());
    }
}

TEST(Property, DualAndAdjointCommuteWithPartners) {
    Gen g(108);
    for (int t = 0; t < 20; ++t) {
        const auto F = FieldCtx::build(3, 1, 3);
        const auto p = g.eligible(F, 1 + static_cast<unsigned>(g.below(2)));
        const auto code = gtg_construct(p);
        EXPECT_TRUE(same_span(delsarte_dual(delsarte_dual(code)), code));
        EXPECT_TRUE(same_span(adjoint_code(adjoint_code(code)), code));
        EXPECT_TRUE(same_span(delsarte_dual(code), dual_closed_form(p)));
    }
}
