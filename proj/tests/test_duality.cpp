#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace mrdkit;

namespace {

FieldPtr gf8() { return FieldCtx::build(2, 1, 3); }
FieldPtr gf81() { return FieldCtx::build(3, 1, 4); }

// b(f, g) straight from the definition, with the trace as a sum of conjugates.
Elem oracle_form(const LinPoly& f, const LinPoly& g) {
    const auto& F = *f.ctx();
    Elem s = 0;
    for (unsigned i = 0; i < F.n(); ++i) s = oracle::add(F, s, oracle::mul(F, f[i], g[i]));
    Elem t = 0, c = s;
    for (unsigned i = 0; i < F.n(); ++i) {
        t = oracle::add(F, t, c);
        c = oracle::pow(F, c, F.q());
    }
    return t;
}

std::vector<FamilyParams> suite() {
    const auto F = gf81();
    std::vector<FamilyParams> out;
    for (unsigned k = 1; k < 4; ++k)
        for (unsigned s : {1u, 3u})
            for (unsigned h = 0; h < 4; ++h)
                for (Elem eta : {Elem{0}, Elem{2}, Elem{7}, Elem{41}})
                    if (norm_condition(FamilyParams::twisted(F, k, s, h, eta))) out.push_back(FamilyParams::twisted(F, k, s, h, eta));
    return out;
}

} // namespace

TEST(Form, Examples) {
    const auto F = gf8();
    const auto X = LinPoly::identity(F);
    EXPECT_EQ(form_b(X, LinPoly::zero(F)), 0u);
    EXPECT_EQ(form_b(X, X), 1u);
    EXPECT_EQ(form_b(X, LinPoly::monomial(F, 1, 1)), 0u);
}

TEST(Form, MatchesDefinition) {
    std::mt19937_64 rng(21);
    for (const auto& F : {gf8(), FieldCtx::build(3, 1, 2), FieldCtx::build(2, 2, 3)})
        for (int t = 0; t < 100; ++t) {
            const auto f = oracle::random_poly(F, rng), g = oracle::random_poly(F, rng);
            EXPECT_EQ(form_b(f, g), oracle_form(f, g));
        }
}

TEST(Dual, ZeroCodeIsEverything) {
    const auto F = gf8();
    EXPECT_EQ(delsarte_dual(LinCode(F, {})).dim(), 9u);
}

TEST(Dual, GabidulinHighBlocks) {
    const auto F = gf81();
    for (unsigned k = 1; k < 4; ++k)
        for (unsigned s : {1u, 3u}) {
            std::vector<LinPoly> gens;
            for (unsigned i = k; i < 4; ++i)
                for (Elem b : F->basis()) gens.push_back(LinPoly::monomial(F, b, static_cast<long long>(i) * s));
            const auto dual = delsarte_dual(gg_construct(F, k, s));
            EXPECT_EQ(dual.dim(), 4u * (4 - k));
            EXPECT_TRUE(same_span(dual, LinCode::span(F, gens)));
        }
}

TEST(Dual, AnnihilatesUnderForm) {
    for (const auto& p : suite()) {
        const auto code = gtg_construct(p);
        const auto dual = delsarte_dual(code);
        for (const auto& f : code.basis())
            for (const auto& g : dual.basis()) ASSERT_EQ(oracle_form(f, g), 0u);
    }
}

TEST(Dual, ClosedFormAndInvolution) {
    for (const auto& p : suite()) {
        const auto code = gtg_construct(p);
        const auto dual = delsarte_dual(code);
        EXPECT_EQ(dual.dim(), 4u * (4 - p.k));
        EXPECT_TRUE(same_span(dual, dual_closed_form(p)));
        EXPECT_TRUE(same_span(delsarte_dual(dual), code));
    }
}

TEST(Adjoint, CodeInvolutionAndScalars) {
    const auto F = gf81();
    for (const auto& p : suite()) {
        const auto code = gtg_construct(p);
        EXPECT_TRUE(same_span(adjoint_code(adjoint_code(code)), code));
    }
    EXPECT_TRUE(same_span(adjoint_code(scalar_code(F)), scalar_code(F)));
}

TEST(Adjoint, GabidulinSupportReflects) {
    const auto F = gf81();
    for (unsigned k = 1; k < 4; ++k)
        for (unsigned s : {1u, 3u}) {
            SupportSet want;
            for (unsigned i = 0; i < k; ++i) want.insert((4 * 4 - i * s) % 4);
            EXPECT_EQ(universal_support(adjoint_code(gg_construct(F, k, s))), want);
        }
}

TEST(Partners, Shapes) {
    const auto F = gf81();
    const auto p = FamilyParams::twisted(F, 2, 1, 1, 7);
    const auto d = dual_partner(p);
    EXPECT_EQ(d.k, 2u);
    EXPECT_EQ(d.h, 3u);
    EXPECT_EQ(d.eta, F->neg(F->frobenius_q(7, 4 - 2)));
    const auto a = adjoint_partner(p);
    EXPECT_EQ(a.eta, F->inv(7));
    EXPECT_EQ(a.h, 1u);
}
