#ifndef MRDKIT_LINPOLY_HPP
#define MRDKIT_LINPOLY_HPP

// q-polynomials sum_{i<n} a_i X^(q^i) over GF(q^n), taken modulo X^(q^n) - X.

#include "mrdkit/field.hpp"

#include <utility>
#include <vector>

namespace mrdkit {

using MatrixGFq = linalg::Matrix<SubElem>;

class LinPoly {
public:
    LinPoly() = default;

    LinPoly(FieldPtr ctx, std::vector<Elem> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        require(c_.size() == ctx_->n(), ErrorKind::DegreeMismatch,
                "a q-polynomial needs exactly n coefficients");
        for (auto a : c_) require(a < ctx_->size(), ErrorKind::BadParams, "coefficient out of range");
    }

    static LinPoly zero(FieldPtr ctx) {
        const unsigned n = ctx->n();
        return LinPoly(std::move(ctx), std::vector<Elem>(n, 0));
    }

    /// a * X^(q^i), i taken mod n.
    static LinPoly monomial(FieldPtr ctx, Elem a, long long i) {
        std::vector<Elem> c(ctx->n(), 0);
        c[pmod(i, ctx->n())] = a;
        return LinPoly(std::move(ctx), std::move(c));
    }

    static LinPoly identity(FieldPtr ctx) { return monomial(std::move(ctx), 1, 0); }

    const FieldPtr& ctx() const noexcept { return ctx_; }
    unsigned n() const noexcept { return static_cast<unsigned>(c_.size()); }
    Elem operator[](std::size_t i) const { return c_[i]; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept {
        for (auto a : c_)
            if (a) return false;
        return true;
    }

    std::vector<unsigned> support() const {
        std::vector<unsigned> s;
        for (unsigned i = 0; i < n(); ++i)
            if (c_[i]) s.push_back(i);
        return s;
    }

    LinPoly operator+(const LinPoly& o) const {
        require_same(*ctx_, *o.ctx_);
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_->add(c_[i], o.c_[i]);
        return LinPoly(ctx_, std::move(r));
    }

    LinPoly operator-(const LinPoly& o) const {
        require_same(*ctx_, *o.ctx_);
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_->sub(c_[i], o.c_[i]);
        return LinPoly(ctx_, std::move(r));
    }

    /// Multiplies every coefficient by a big-field scalar (left multiplication by aX).
    LinPoly scaled(Elem a) const {
        std::vector<Elem> r(c_.size());
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = ctx_->mul(a, c_[i]);
        return LinPoly(ctx_, std::move(r));
    }

    bool operator==(const LinPoly& o) const {
        return c_ == o.c_ && (ctx_ == o.ctx_ || (ctx_ && o.ctx_ && ctx_->same_as(*o.ctx_)));
    }

private:
    FieldPtr ctx_;
    std::vector<Elem> c_;
};

inline Elem evaluate(const LinPoly& f, Elem v) {
    const auto& F = *f.ctx();
    Elem r = 0;
    for (unsigned i = 0; i < f.n(); ++i)
        if (f[i]) r = F.add(r, F.mul(f[i], F.frobenius_q(v, i)));
    return r;
}

inline FieldElem evaluate(const LinPoly& f, const FieldElem& v) {
    require_same(*f.ctx(), *v.ctx());
    return FieldElem(f.ctx(), evaluate(f, v.index()));
}

/// f o g.
inline LinPoly compose(const LinPoly& f, const LinPoly& g) {
    require_same(*f.ctx(), *g.ctx());
    const auto& F = *f.ctx();
    const unsigned n = f.n();
    std::vector<Elem> h(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (!f[i]) continue;
        for (unsigned j = 0; j < n; ++j) {
            if (!g[j]) continue;
            const unsigned l = (i + j) % n;
            h[l] = F.add(h[l], F.mul(f[i], F.frobenius_q(g[j], i)));
        }
    }
    return LinPoly(f.ctx(), std::move(h));
}

inline LinPoly adjoint(const LinPoly& f) {
    const auto& F = *f.ctx();
    const unsigned n = f.n();
    std::vector<Elem> r(n);
    for (unsigned i = 0; i < n; ++i) r[i] = F.frobenius_q(f[(n - i) % n], i);
    return LinPoly(f.ctx(), std::move(r));
}

/// a -> a^(p^j) applied to every coefficient.
inline LinPoly coeff_frobenius(const LinPoly& f, long long j) {
    const auto& F = *f.ctx();
    std::vector<Elem> r(f.n());
    for (unsigned i = 0; i < f.n(); ++i) r[i] = F.frobenius_p(f[i], j);
    return LinPoly(f.ctx(), std::move(r));
}

/// Column j = GF(q)-coordinates of f(beta_j).
inline MatrixGFq to_matrix(const LinPoly& f) {
    const auto& F = *f.ctx();
    const unsigned n = f.n();
    MatrixGFq m(n, n);
    std::vector<SubElem> col(n);
    for (unsigned j = 0; j < n; ++j) {
        F.coords_into(evaluate(f, F.basis()[j]), col.data());
        for (unsigned i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

/// Inverse of to_matrix: solves a * W = y with W the Moore matrix of beta.
inline LinPoly matrix_to_linpoly(const FieldPtr& ctx, const MatrixGFq& m) {
    const unsigned n = ctx->n();
    require(m.rows == n && m.cols == n, ErrorKind::DegreeMismatch, "matrix must be n x n");
    std::vector<Elem> y(n);
    std::vector<SubElem> col(n);
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) {
            require(m(i, j) < ctx->q(), ErrorKind::BadParams, "matrix entry is not a GF(q) code");
            col[i] = m(i, j);
        }
        y[j] = ctx->from_coords(col);
    }
    const auto& winv = ctx->moore_inverse();
    std::vector<Elem> a(n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (y[j]) a[i] = ctx->add(a[i], ctx->mul(y[j], winv(j, i)));
    return LinPoly(ctx, std::move(a));
}

struct RankKernel {
    unsigned rank;
    unsigned kernel_dim;
    bool operator==(const RankKernel&) const = default;
};

inline RankKernel rank_kernel(const LinPoly& f) {
    const auto r = static_cast<unsigned>(linalg::rank(f.ctx()->sub(), to_matrix(f)));
    return {r, f.n() - r};
}

inline unsigned rank_of(const LinPoly& f) { return rank_kernel(f).rank; }

inline LinPoly invert(const LinPoly& f) {
    auto inv = linalg::inverse(f.ctx()->sub(), to_matrix(f));
    require(inv.has_value(), ErrorKind::SingularMap, "q-polynomial is not a permutation");
    return matrix_to_linpoly(f.ctx(), *inv);
}

/// Coefficient coordinates: n blocks, block i = GF(q)-coordinates of a_i.
inline std::vector<SubElem> coeff_coords(const LinPoly& f) {
    const unsigned n = f.n();
    std::vector<SubElem> v(static_cast<std::size_t>(n) * n);
    for (unsigned i = 0; i < n; ++i) f.ctx()->coords_into(f[i], v.data() + static_cast<std::size_t>(i) * n);
    return v;
}

inline LinPoly from_coeff_coords(const FieldPtr& ctx, std::span<const SubElem> v) {
    const unsigned n = ctx->n();
    require(v.size() == static_cast<std::size_t>(n) * n, ErrorKind::DegreeMismatch, "need n^2 coordinates");
    std::vector<Elem> c(n);
    for (unsigned i = 0; i < n; ++i) c[i] = ctx->from_coords(v.subspan(static_cast<std::size_t>(i) * n, n));
    return LinPoly(ctx, std::move(c));
}

} // namespace mrdkit

#endif // MRDKIT_LINPOLY_HPP
