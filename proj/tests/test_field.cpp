#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mrdkit;

namespace {

FieldPtr gf4() { return FieldCtx::build(2, 1, 2); }
FieldPtr gf8() { return FieldCtx::build(2, 1, 3); }
FieldPtr gf9() { return FieldCtx::build(3, 1, 2); }

constexpr Elem kOmega = 2; // class of x in GF(4)
constexpr Elem kX9 = 3;    // class of x in GF(9)

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::BadParams;
}

} // namespace

TEST(FieldBuild, CanonicalModulusGF8) {
    EXPECT_EQ(gf8()->modulus(), (poly::Poly{1, 1, 0, 1}));
}

TEST(FieldBuild, CanonicalModulusGF9) {
    EXPECT_EQ(gf9()->modulus(), (poly::Poly{1, 0, 1}));
}

TEST(FieldBuild, CanonicalModulusMatchesScan) {
    for (auto [p, d] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        oracle::Digits first;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            auto f = oracle::to_digits(idx, p, d);
            f.push_back(1);
            if (oracle::irreducible(f, p)) {
                first = f;
                break;
            }
        }
        const auto F = FieldCtx::build(p, 1, d);
        EXPECT_EQ(F->modulus(), poly::Poly(first.begin(), first.end())) << "p=" << p << " d=" << d;
    }
}

TEST(FieldBuild, ReducibleModulusRejected) {
    EXPECT_EQ(kind_of([] { FieldCtx::build(2, 1, 3, poly::Poly{0, 0, 1, 1}); }), ErrorKind::ReducibleModulus);
}

TEST(FieldBuild, InvalidInputs) {
    EXPECT_EQ(kind_of([] { FieldCtx::build(4, 1, 2); }), ErrorKind::NonPrime);
    EXPECT_EQ(kind_of([] { FieldCtx::build(2, 1, 3, poly::Poly{1, 1, 1}); }), ErrorKind::DegreeMismatch);
    EXPECT_EQ(kind_of([] { FieldCtx::build(3, 1, 40); }), ErrorKind::TooLarge);
}

TEST(FieldArith, GF4Examples) {
    const auto F = gf4();
    EXPECT_EQ(F->mul(kOmega, kOmega), kOmega ^ 1);
    EXPECT_EQ(F->frobenius_p(kOmega, 1), 3u);
    EXPECT_EQ(F->rel_trace(kOmega), 1u);
    EXPECT_EQ(F->rel_norm(kOmega), 1u);
    EXPECT_FALSE(F->in_subfield(kOmega, 1));
}

TEST(FieldArith, GF9Examples) {
    const auto F = gf9();
    const Elem x1 = kX9 + 1;
    EXPECT_EQ(F->pow(x1, 8), 1u);
    EXPECT_EQ(F->gf().element_order(x1), 8u);
    EXPECT_EQ(F->rel_norm(x1), 2u);
    EXPECT_TRUE(F->in_subfield(2, 1));
    EXPECT_EQ(F->generator(), x1);
}

TEST(FieldArith, GF8TraceOfOne) { EXPECT_EQ(gf8()->rel_trace(1), 1u); }

TEST(FieldArith, MulMatchesSchoolbook) {
    for (const auto& F : {gf8(), gf9(), FieldCtx::build(2, 2, 2), FieldCtx::build(3, 1, 4), FieldCtx::build(5, 1, 3)})
        for (Elem a = 0; a < F->size(); a += 3)
            for (Elem b = 0; b < F->size(); b += 5) ASSERT_EQ(F->mul(a, b), oracle::mul(*F, a, b));
}

TEST(FieldArith, LargeFieldWithoutTables) {
    const auto F = FieldCtx::build(2, 1, 20);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        const Elem a = rng() % F->size(), b = rng() % F->size();
        ASSERT_EQ(F->mul(a, b), oracle::mul(*F, a, b));
        if (a) {
            ASSERT_EQ(F->mul(a, F->inv(a)), 1u);
        }
    }
}

TEST(FieldArith, Identities) {
    for (const auto& F : {gf4(), gf8(), gf9(), FieldCtx::build(2, 2, 3)}) {
        for (Elem a = 0; a < F->size(); ++a) {
            EXPECT_EQ(F->add(a, 0), a);
            EXPECT_EQ(F->frobenius_p(a, 0), a);
            for (unsigned j = 0; j <= F->d(); ++j) EXPECT_EQ(F->frobenius_p(F->frobenius_p(a, j), F->d() - j), a);
            EXPECT_TRUE(F->in_gfq(F->rel_trace(a)));
            EXPECT_TRUE(F->in_gfq(F->rel_norm(a)));
        }
        EXPECT_EQ(F->rel_trace(0), 0u);
        EXPECT_EQ(F->rel_norm(1), 1u);
        EXPECT_TRUE(F->in_subfield(0, 1));
    }
}

TEST(FieldArith, InverseOfZero) {
    EXPECT_EQ(kind_of([] { gf9()->inv(0); }), ErrorKind::ZeroInverse);
}

TEST(FieldArith, SubfieldDegreeMustDivide) {
    EXPECT_EQ(kind_of([] { gf8()->in_subfield(3, 2); }), ErrorKind::NonDivisorDegree);
}

TEST(FieldCoords, RoundTripAndBasis) {
    for (const auto& F : {gf8(), gf9(), FieldCtx::build(2, 2, 3), FieldCtx::build(3, 1, 4)}) {
        for (unsigned j = 0; j < F->n(); ++j) EXPECT_EQ(F->basis()[j], F->pow(F->generator(), j));
        for (Elem a = 0; a < F->size(); ++a) {
            const auto c = F->coords(a);
            ASSERT_EQ(c.size(), F->n());
            EXPECT_EQ(F->from_coords(c), a);
        }
    }
}

TEST(FieldCoords, EmbedRestrict) {
    const auto F = FieldCtx::build(2, 2, 3);
    for (SubElem s = 0; s < F->q(); ++s) {
        const Elem a = F->embed(s);
        EXPECT_TRUE(F->in_gfq(a));
        EXPECT_EQ(F->restrict(a), s);
    }
}

TEST(FieldElemApi, ContextMismatch) {
    const FieldElem a(gf9(), 4), b(gf8(), 3);
    EXPECT_EQ(kind_of([&] { (void)(a + b); }), ErrorKind::ContextMismatch);
    EXPECT_EQ((a * a.inv()).index(), 1u);
    EXPECT_EQ(elem_arith(ArithOp::Pow, a, 8).index(), 1u);
}
