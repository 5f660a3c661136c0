#ifndef MRDKIT_FIELD_HPP
#define MRDKIT_FIELD_HPP

// GF(p) <= GF(q) <= GF(q^n) with q = p^e, realized as one extension GF(p^d),
// d = e*n, in which GF(q) is a marked subfield.
//
// GF(q) elements ("sub" elements) are encoded as integers 0..q-1 whose base-p
// digits are coordinates over {zeta^0, ..., zeta^(e-1)}, zeta being the
// generator of GF(q)^*; for e = 1 the code is the prime-field value itself.
// GF(q)-coordinates of big-field elements are taken in the basis
// beta_j = g^j (j < n) where g is the stored generator.

#include "mrdkit/arith.hpp"
#include "mrdkit/error.hpp"
#include "mrdkit/gf.hpp"
#include "mrdkit/linalg.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace mrdkit {

using SubElem = std::uint32_t;
using FieldPtr = std::shared_ptr<const class FieldCtx>;

class FieldCtx {
public:
    static constexpr unsigned kMaxDegree = 32;
    static constexpr std::uint64_t kMaxSubfield = std::uint64_t{1} << 16;
    static constexpr std::uint64_t kCoordCacheLimit = std::uint64_t{1} << 16;

    /// First monic irreducible of degree d over GF(p) in the order of the
    /// integer with base-p digits (c_0, ..., c_{d-1}).
    static poly::Poly canonical_modulus(std::uint64_t p, unsigned d) {
        const std::uint64_t count = *checked_pow(p, d);
        for (std::uint64_t v = 0; v < count; ++v) {
            poly::Poly f(d + 1, 0);
            std::uint64_t t = v;
            for (unsigned i = 0; i < d; ++i) {
                f[i] = t % p;
                t /= p;
            }
            f[d] = 1;
            if (poly::is_irreducible(f, p)) return f;
        }
        fail(ErrorKind::ReducibleModulus, "no irreducible polynomial found");
    }

    static FieldPtr build(std::uint64_t p, unsigned e, unsigned n,
                          std::optional<poly::Poly> modulus = std::nullopt) {
        require(is_prime(p), ErrorKind::NonPrime, std::to_string(p) + " is not prime");
        require(e >= 1 && n >= 1, ErrorKind::BadParams, "e and n must be positive");
        const unsigned d = e * n;
        require(d <= kMaxDegree, ErrorKind::TooLarge, "extension degree above 32");
        const auto size = checked_pow(p, d);
        require(size && *size <= GF::kMaxSize, ErrorKind::TooLarge, "field order exceeds 2^32");
        const auto qsize = *checked_pow(p, e);
        require(qsize <= kMaxSubfield, ErrorKind::TooLarge, "subfield order exceeds 2^16");
        poly::Poly m;
        if (modulus) {
            m = *modulus;
            require(m.size() == d + 1, ErrorKind::DegreeMismatch,
                    "modulus must have degree " + std::to_string(d));
            for (auto c : m) require(c < p, ErrorKind::BadParams, "modulus digit out of range");
            require(m.back() == 1, ErrorKind::BadParams, "modulus must be monic");
            require(poly::is_irreducible(m, p), ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
        } else {
            m = canonical_modulus(p, d);
        }
        return FieldPtr(new FieldCtx(p, e, n, std::move(m)));
    }

    // -- structure ----------------------------------------------------------
    std::uint64_t p() const noexcept { return big_.p(); }
    unsigned e() const noexcept { return e_; }
    unsigned n() const noexcept { return n_; }
    unsigned d() const noexcept { return e_ * n_; }
    std::uint64_t q() const noexcept { return sub_.size(); }
    std::uint64_t size() const noexcept { return big_.size(); }
    const poly::Poly& modulus() const noexcept { return big_.modulus(); }
    Elem generator() const noexcept { return big_.generator(); }
    const GF& gf() const noexcept { return big_; }
    const GF& sub() const noexcept { return sub_; }
    const GF& prime() const noexcept { return prime_; }

    bool same_as(const FieldCtx& o) const noexcept {
        return this == &o || (p() == o.p() && e_ == o.e_ && n_ == o.n_ && modulus() == o.modulus());
    }

    // -- arithmetic (delegates) ---------------------------------------------
    Elem add(Elem a, Elem b) const { return big_.add(a, b); }
    Elem sub(Elem a, Elem b) const { return big_.sub(a, b); }
    Elem neg(Elem a) const { return big_.neg(a); }
    Elem mul(Elem a, Elem b) const { return big_.mul(a, b); }
    Elem inv(Elem a) const { return big_.inv(a); }
    Elem div(Elem a, Elem b) const { return big_.div(a, b); }
    Elem pow(Elem a, std::uint64_t k) const { return big_.pow(a, k); }

    /// a^(p^j), j taken mod d.
    Elem frobenius_p(Elem a, long long j) const { return big_.frob(a, j); }
    /// a^(q^i), i taken mod n.
    Elem frobenius_q(Elem a, long long i) const { return big_.frob(a, pmod(i, n_) * e_); }

    Elem rel_trace(Elem a) const {
        Elem t = 0;
        for (unsigned i = 0; i < n_; ++i) t = add(t, frobenius_q(a, i));
        return t;
    }

    Elem rel_norm(Elem a) const {
        if (a == 0) return 0;
        return pow(a, (big_.size() - 1) / (sub_.size() - 1));
    }

    /// a^(p^sub_e) == a.
    bool in_subfield(Elem a, unsigned sub_e) const {
        require(sub_e >= 1 && d() % sub_e == 0, ErrorKind::NonDivisorDegree,
                std::to_string(sub_e) + " does not divide " + std::to_string(d()));
        return frobenius_p(a, sub_e) == a;
    }

    bool in_gfq(Elem a) const { return frobenius_p(a, e_) == a; }

    /// Generator of the subfield GF(p^sub_e) (sub_e | d).
    Elem subfield_generator(unsigned sub_e) const {
        require(sub_e >= 1 && d() % sub_e == 0, ErrorKind::NonDivisorDegree, "subfield degree must divide d");
        const std::uint64_t sz = *checked_pow(p(), sub_e);
        return big_.exp((big_.size() - 1) / (sz - 1));
    }

    /// -1 as an element (equals 1 in characteristic 2).
    Elem minus_one() const { return neg(1); }

    // -- GF(q) embedding ----------------------------------------------------
    Elem embed(SubElem s) const { return embed_.at(s); }

    SubElem restrict(Elem a) const {
        auto it = restrict_.find(a);
        require(it != restrict_.end(), ErrorKind::BadParams, "element is not in GF(q)");
        return it->second;
    }

    // -- GF(q)-coordinates in the basis beta --------------------------------
    const std::vector<Elem>& basis() const noexcept { return basis_; }

    void coords_into(Elem a, SubElem* out) const {
        if (!coord_cache_.empty()) {
            const SubElem* src = &coord_cache_[a * n_];
            for (unsigned j = 0; j < n_; ++j) out[j] = src[j];
            return;
        }
        compute_coords(a, out);
    }

    std::vector<SubElem> coords(Elem a) const {
        std::vector<SubElem> v(n_);
        coords_into(a, v.data());
        return v;
    }

    Elem from_coords(std::span<const SubElem> v) const {
        Elem a = 0;
        for (unsigned j = 0; j < n_; ++j)
            if (v[j]) a = add(a, mul(embed(v[j]), basis_[j]));
        return a;
    }

    /// Tr(beta_a * beta_b) as GF(q) codes (symmetric n x n).
    const linalg::Matrix<SubElem>& trace_gram() const noexcept { return trace_gram_; }

    /// Inverse of the Moore matrix W(i, j) = beta_j^(q^i).
    const linalg::Matrix<Elem>& moore_inverse() const noexcept { return moore_inv_; }

private:
    FieldCtx(std::uint64_t p, unsigned e, unsigned n, poly::Poly modulus)
        : e_(e), n_(n), big_(p, e * n, std::move(modulus)), prime_(p, 1, poly::Poly{0, 1}),
          sub_(p, e, subfield_minpoly(big_, e)) {
        const unsigned d = e * n;
        const Elem zeta = big_.exp((big_.size() - 1) / (sub_.size() - 1));

        std::vector<Elem> zeta_pows(e, 1);
        for (unsigned l = 1; l < e; ++l) zeta_pows[l] = big_.mul(zeta_pows[l - 1], zeta);
        embed_.resize(sub_.size());
        for (SubElem s = 0; s < sub_.size(); ++s) {
            Elem v = 0;
            std::uint64_t t = s;
            for (unsigned l = 0; l < e; ++l) {
                const std::uint64_t digit = t % p;
                t /= p;
                if (digit) v = big_.add(v, big_.mul(digit, zeta_pows[l]));
            }
            embed_[s] = v;
            restrict_.emplace(v, s);
        }

        basis_.resize(n);
        for (unsigned j = 0; j < n; ++j) basis_[j] = big_.exp(j);

        // Column (j, l) holds the GF(p)-digits of beta_j * zeta^l.
        linalg::Matrix<std::uint64_t> change(d, d);
        for (unsigned j = 0; j < n; ++j)
            for (unsigned l = 0; l < e; ++l) {
                const auto dg = big_.digits(big_.mul(basis_[j], zeta_pows[l]));
                for (unsigned r = 0; r < d; ++r) change(r, j * e + l) = dg[r];
            }
        auto inv = linalg::inverse(prime_, change);
        require(inv.has_value(), ErrorKind::BadParams, "power basis is not a GF(q)-basis");
        digits_to_coords_ = std::move(*inv);

        if (big_.size() <= kCoordCacheLimit) {
            coord_cache_.resize(big_.size() * n);
            for (Elem a = 0; a < big_.size(); ++a) compute_coords(a, &coord_cache_[a * n]);
        }

        trace_gram_ = linalg::Matrix<SubElem>(n, n);
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = 0; b < n; ++b)
                trace_gram_(a, b) = restrict(rel_trace(big_.mul(basis_[a], basis_[b])));

        linalg::Matrix<Elem> moore(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) moore(i, j) = frobenius_q(basis_[j], i);
        auto minv = linalg::inverse(big_, moore);
        require(minv.has_value(), ErrorKind::BadParams, "Moore matrix of the basis is singular");
        moore_inv_ = std::move(*minv);
    }

    // Minimal polynomial of zeta = g^((p^d-1)/(p^e-1)) over GF(p).
    static poly::Poly subfield_minpoly(const GF& big, unsigned e) {
        const std::uint64_t q = *checked_pow(big.p(), e);
        const Elem zeta = big.exp((big.size() - 1) / (q - 1));
        // prod_{i<e} (X - zeta^(p^i)), coefficients in the big field.
        std::vector<Elem> c{1};
        for (unsigned i = 0; i < e; ++i) {
            const Elem root = big.frob(zeta, i);
            std::vector<Elem> next(c.size() + 1, 0);
            for (std::size_t k = 0; k < c.size(); ++k) {
                next[k + 1] = big.add(next[k + 1], c[k]);
                next[k] = big.sub(next[k], big.mul(c[k], root));
            }
            c = std::move(next);
        }
        poly::Poly out(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            require(c[k] < big.p(), ErrorKind::BadParams, "minimal polynomial left GF(p)");
            out[k] = c[k];
        }
        return out;
    }

    void compute_coords(Elem a, SubElem* out) const {
        const auto dg = big_.digits(a);
        const unsigned n = n_, e = e_;
        const std::uint64_t p = big_.p();
        for (unsigned j = 0; j < n; ++j) {
            std::uint64_t code = 0, scale = 1;
            for (unsigned l = 0; l < e; ++l) {
                const std::size_t row = j * e + l;
                std::uint64_t acc = 0;
                for (std::size_t r = 0; r < dg.size(); ++r)
                    if (dg[r]) acc = (acc + mulmod(digits_to_coords_(row, r), dg[r], p)) % p;
                code += acc * scale;
                scale *= p;
            }
            out[j] = static_cast<SubElem>(code);
        }
    }

    unsigned e_, n_;
    GF big_;
    GF prime_;
    GF sub_;
    std::vector<Elem> embed_;
    std::unordered_map<Elem, SubElem> restrict_;
    std::vector<Elem> basis_;
    linalg::Matrix<std::uint64_t> digits_to_coords_;
    std::vector<SubElem> coord_cache_;
    linalg::Matrix<SubElem> trace_gram_;
    linalg::Matrix<Elem> moore_inv_;
};

inline void require_same(const FieldCtx& a, const FieldCtx& b) {
    require(a.same_as(b), ErrorKind::ContextMismatch, "operands belong to different fields");
}

/// An element bound to its field; arithmetic checks that both sides share a context.
class FieldElem {
public:
    FieldElem(FieldPtr ctx, Elem v) : ctx_(std::move(ctx)), v_(v) {
        require(v_ < ctx_->size(), ErrorKind::BadParams, "element index out of range");
    }

    static FieldElem from_digits(FieldPtr ctx, std::span<const std::uint64_t> digits) {
        require(digits.size() == ctx->d(), ErrorKind::DegreeMismatch, "digit count must equal d");
        for (auto x : digits) require(x < ctx->p(), ErrorKind::BadParams, "digit out of range");
        const Elem v = ctx->gf().from_digits(digits);
        return FieldElem(std::move(ctx), v);
    }

    const FieldPtr& ctx() const noexcept { return ctx_; }
    Elem index() const noexcept { return v_; }
    std::vector<std::uint64_t> digits() const { return ctx_->gf().digits(v_); }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElem operator+(const FieldElem& o) const { return bin(o, ctx_->add(v_, o.v_)); }
    FieldElem operator-(const FieldElem& o) const { return bin(o, ctx_->sub(v_, o.v_)); }
    FieldElem operator*(const FieldElem& o) const { return bin(o, ctx_->mul(v_, o.v_)); }
    FieldElem operator/(const FieldElem& o) const {
        require_same(*ctx_, *o.ctx_);
        return FieldElem(ctx_, ctx_->div(v_, o.v_));
    }
    FieldElem inv() const { return FieldElem(ctx_, ctx_->inv(v_)); }
    FieldElem pow(std::uint64_t k) const { return FieldElem(ctx_, ctx_->pow(v_, k)); }

    bool operator==(const FieldElem& o) const { return ctx_->same_as(*o.ctx_) && v_ == o.v_; }

private:
    FieldElem bin(const FieldElem& o, Elem r) const {
        require_same(*ctx_, *o.ctx_);
        return FieldElem(ctx_, r);
    }

    FieldPtr ctx_;
    Elem v_;
};

enum class ArithOp { Add, Sub, Mul, Inv, Pow };

/// Single entry point for element arithmetic; `b` is ignored for Inv and
/// must be given as an exponent for Pow.
inline FieldElem elem_arith(ArithOp op, const FieldElem& a, const FieldElem& b) {
    switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Inv: return a.inv();
    case ArithOp::Pow: break;
    }
    fail(ErrorKind::BadParams, "pow takes an integer exponent");
}

inline FieldElem elem_arith(ArithOp op, const FieldElem& a, std::uint64_t k) {
    require(op == ArithOp::Pow, ErrorKind::BadParams, "integer operand is only valid for pow");
    return a.pow(k);
}

} // namespace mrdkit

#endif // MRDKIT_FIELD_HPP
