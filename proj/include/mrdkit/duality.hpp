#ifndef MRDKIT_DUALITY_HPP
#define MRDKIT_DUALITY_HPP

#include "mrdkit/codes.hpp"

namespace mrdkit {

/// Tr(sum f_i g_i); the result lies in GF(q).
inline Elem form_b(const LinPoly& f, const LinPoly& g) {
    require_same(*f.ctx(), *g.ctx());
    const auto& F = *f.ctx();
    Elem acc = 0;
    for (unsigned i = 0; i < f.n(); ++i)
        if (f[i] && g[i]) acc = F.add(acc, F.mul(f[i], g[i]));
    return F.rel_trace(acc);
}

/// Gram matrix of form_b in coefficient coordinates: block diagonal with the trace Gram of beta.
inline linalg::Matrix<SubElem> form_gram(const FieldCtx& F) {
    const unsigned n = F.n();
    const std::size_t N = static_cast<std::size_t>(n) * n;
    linalg::Matrix<SubElem> G(N, N);
    const auto& T = F.trace_gram();
    for (unsigned blk = 0; blk < n; ++blk)
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b) G(blk * n + a, blk * n + b) = T(a, b);
    return G;
}

inline LinCode delsarte_dual(const LinCode& code) {
    const auto& ctx = code.ctx();
    const auto& F = *ctx;
    const unsigned n = F.n();
    const std::size_t N = static_cast<std::size_t>(n) * n;
    const auto& T = F.trace_gram();
    const auto& S = F.sub();
    // Row r = coords(basis_r) * G.
    linalg::Matrix<SubElem> A(code.dim(), N);
    for (std::size_t r = 0; r < code.dim(); ++r) {
        const auto v = coeff_coords(code.basis()[r]);
        for (unsigned blk = 0; blk < n; ++blk)
            for (unsigned b = 0; b < n; ++b) {
                Elem acc = 0;
                for (unsigned a = 0; a < n; ++a)
                    if (v[blk * n + a]) acc = S.add(acc, S.mul(v[blk * n + a], T(a, b)));
                A(r, blk * n + b) = static_cast<SubElem>(acc);
            }
    }
    std::vector<LinPoly> basis;
    if (code.dim() == 0) {
        for (unsigned i = 0; i < n; ++i)
            for (auto b : F.basis()) basis.push_back(LinPoly::monomial(ctx, b, i));
    } else {
        const auto ns = linalg::nullspace(S, A);
        for (std::size_t r = 0; r < ns.rows; ++r) {
            const auto row = ns.row(r);
            basis.push_back(from_coeff_coords(ctx, row));
        }
    }
    return LinCode(ctx, std::move(basis));
}

/// Closed-form dual of H_{k,s}(eta, h) (or of G_{k,s} when eta = 0).
inline LinCode dual_closed_form(const FamilyParams& p) {
    const auto& ctx = p.ctx;
    const auto& F = *ctx;
    const unsigned n = F.n();
    std::vector<LinPoly> basis;
    const bool twisted = p.family == Family::Twisted && p.eta != 0;
    if (twisted) {
        const Elem minus_inv = F.neg(F.inv(p.eta));
        for (auto b : F.basis())
            basis.push_back(LinPoly::monomial(ctx, b, 0) +
                            LinPoly::monomial(ctx, F.mul(minus_inv, F.frobenius_q(b, p.h)), p.sk()));
    }
    for (unsigned i = twisted ? p.k + 1 : p.k; i < n; ++i)
        for (auto b : F.basis()) basis.push_back(LinPoly::monomial(ctx, b, static_cast<long long>(p.s) * i));
    return LinCode(ctx, std::move(basis));
}

inline LinCode adjoint_code(const LinCode& code) {
    std::vector<LinPoly> basis;
    basis.reserve(code.dim());
    for (const auto& f : code.basis()) basis.push_back(adjoint(f));
    return LinCode(code.ctx(), std::move(basis));
}

/// Parameters of the family member equivalent to the Delsarte dual:
/// (n-k, s, -eta^(q^(n-ks)), n-h).
inline FamilyParams dual_partner(const FamilyParams& p) {
    const auto& F = *p.ctx;
    const unsigned n = F.n();
    if (p.family == Family::Gabidulin || p.eta == 0) return FamilyParams::gabidulin(p.ctx, n - p.k, p.s);
    const Elem eta = F.neg(F.frobenius_q(p.eta, static_cast<long long>(n) - p.sk()));
    return FamilyParams::twisted(p.ctx, n - p.k, p.s, static_cast<long long>(n) - p.h, eta);
}

/// Parameters of the family member equivalent to the adjoint code: (k, s, 1/eta, sk-h).
inline FamilyParams adjoint_partner(const FamilyParams& p) {
    const auto& F = *p.ctx;
    if (p.family == Family::Gabidulin || p.eta == 0) return FamilyParams::gabidulin(p.ctx, p.k, p.s);
    return FamilyParams::twisted(p.ctx, p.k, p.s, static_cast<long long>(p.sk()) - p.h, F.inv(p.eta));
}

} // namespace mrdkit

#endif // MRDKIT_DUALITY_HPP
