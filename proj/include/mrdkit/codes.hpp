#ifndef MRDKIT_CODES_HPP
#define MRDKIT_CODES_HPP

#include "mrdkit/linpoly.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

namespace mrdkit {

enum class Family { Generic, Gabidulin, Twisted };

inline const char* family_name(Family f) {
    switch (f) {
    case Family::Gabidulin: return "gg";
    case Family::Twisted: return "gtg";
    case Family::Generic: break;
    }
    return "generic";
}

/// Parameters of G_{k,s} (family gg) or H_{k,s}(eta, h) (family gtg).
/// s and h are stored reduced mod n.
struct FamilyParams {
    FieldPtr ctx;
    Family family = Family::Twisted;
    unsigned k = 1;
    unsigned s = 1;
    unsigned h = 0;
    Elem eta = 0;

    static FamilyParams gabidulin(FieldPtr ctx, unsigned k, long long s) {
        FamilyParams p{ctx, Family::Gabidulin, k, static_cast<unsigned>(pmod(s, ctx->n())), 0, 0};
        p.validate(s);
        return p;
    }

    static FamilyParams twisted(FieldPtr ctx, unsigned k, long long s, long long h, Elem eta) {
        const unsigned n = ctx->n();
        FamilyParams p{ctx, Family::Twisted, k, static_cast<unsigned>(pmod(s, n)),
                       static_cast<unsigned>(pmod(h, n)), eta};
        p.validate(s);
        return p;
    }

    unsigned n() const { return ctx->n(); }

    /// Twist exponent index s*k mod n.
    unsigned sk() const { return static_cast<unsigned>((static_cast<std::uint64_t>(s) * k) % n()); }

    bool operator==(const FamilyParams& o) const {
        return ctx->same_as(*o.ctx) && family == o.family && k == o.k && s == o.s && h == o.h && eta == o.eta;
    }

private:
    void validate(long long raw_s) const {
        const unsigned n = ctx->n();
        require(k >= 1 && k < n, ErrorKind::BadParams, "1 <= k < n violated (k=" + std::to_string(k) + ")");
        require(std::gcd(static_cast<long long>(n), raw_s < 0 ? -raw_s : raw_s) == 1, ErrorKind::BadParams,
                "gcd(s,n)=1 violated");
        require(eta < ctx->size(), ErrorKind::BadParams, "eta out of range");
    }
};

/// N(eta) != (-1)^{nk}, evaluated in GF(q); eta = 0 always passes.
inline bool norm_condition(const FamilyParams& p) {
    if (p.eta == 0) return true;
    const auto& F = *p.ctx;
    const Elem target = ((static_cast<std::uint64_t>(F.n()) * p.k) % 2 == 0) ? 1 : F.minus_one();
    return F.rel_norm(p.eta) != target;
}

class LinCode;

namespace detail {

// Parity check data for a code: H has (n^2 - dim) rows over the coefficient
// coordinates, and syndromes of single monomials a X^(q^j) are tabulated
// when the table is small.
class Syndromes {
public:
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

    Syndromes(const FieldPtr& ctx, const std::vector<LinPoly>& basis) : ctx_(ctx), n_(ctx->n()) {
        const std::size_t N = static_cast<std::size_t>(n_) * n_;
        linalg::Matrix<SubElem> b(0, N);
        b.cols = N;
        for (const auto& f : basis) b.append_row(coeff_coords(f));
        if (basis.empty()) {
            h_ = linalg::Matrix<SubElem>::identity(N);
        } else {
            h_ = linalg::nullspace(ctx->sub(), b);
        }
        m_ = h_.rows;
        const std::uint64_t entries = ctx->size() * n_ * std::max<std::size_t>(m_, 1);
        if (entries <= kTableLimit && m_ > 0) {
            table_.resize(ctx->size() * n_ * m_);
            std::vector<SubElem> co(n_);
            for (unsigned j = 0; j < n_; ++j)
                for (Elem a = 0; a < ctx->size(); ++a) {
                    ctx->coords_into(a, co.data());
                    direct(j, co.data(), &table_[(j * ctx->size() + a) * m_]);
                }
        }
    }

    std::size_t rows() const noexcept { return m_; }
    const linalg::Matrix<SubElem>& parity() const noexcept { return h_; }

    /// out += syndrome(a X^(q^j)).
    void accumulate(unsigned j, Elem a, SubElem* out) const {
        if (a == 0 || m_ == 0) return;
        const auto& S = ctx_->sub();
        if (!table_.empty()) {
            const SubElem* src = &table_[(j * ctx_->size() + a) * m_];
            for (std::size_t r = 0; r < m_; ++r)
                if (src[r]) out[r] = static_cast<SubElem>(S.add(out[r], src[r]));
            return;
        }
        std::vector<SubElem> co(n_), tmp(m_, 0);
        ctx_->coords_into(a, co.data());
        direct(j, co.data(), tmp.data());
        for (std::size_t r = 0; r < m_; ++r)
            if (tmp[r]) out[r] = static_cast<SubElem>(S.add(out[r], tmp[r]));
    }

    bool contains(const LinPoly& f) const {
        if (m_ == 0) return true;
        std::vector<SubElem> syn(m_, 0);
        for (unsigned j = 0; j < n_; ++j) accumulate(j, f[j], syn.data());
        for (auto x : syn)
            if (x) return false;
        return true;
    }

private:
    void direct(unsigned j, const SubElem* co, SubElem* out) const {
        const auto& S = ctx_->sub();
        for (std::size_t r = 0; r < m_; ++r) {
            Elem acc = 0;
            for (unsigned t = 0; t < n_; ++t)
                if (co[t]) acc = S.add(acc, S.mul(h_(r, j * n_ + t), co[t]));
            out[r] = static_cast<SubElem>(acc);
        }
    }

    FieldPtr ctx_;
    unsigned n_;
    linalg::Matrix<SubElem> h_;
    std::size_t m_ = 0;
    std::vector<SubElem> table_;
};

struct CodeCache {
    std::once_flag once;
    std::unique_ptr<Syndromes> syn;
};

} // namespace detail

/// GF(q)-linear span of q-polynomials, stored by an independent basis.
class LinCode {
public:
    LinCode(FieldPtr ctx, std::vector<LinPoly> basis, std::optional<FamilyParams> family = std::nullopt)
        : ctx_(std::move(ctx)), basis_(std::move(basis)), family_(std::move(family)),
          cache_(std::make_shared<detail::CodeCache>()) {
        const unsigned n = ctx_->n();
        linalg::Echelon<GF, SubElem> ech(ctx_->sub(), static_cast<std::size_t>(n) * n);
        for (const auto& f : basis_) {
            require_same(*ctx_, *f.ctx());
            require(ech.insert(coeff_coords(f)), ErrorKind::BadParams, "basis is not GF(q)-independent");
        }
    }

    /// Span of arbitrary generators; dependent ones are dropped.
    static LinCode span(const FieldPtr& ctx, const std::vector<LinPoly>& gens,
                        std::optional<FamilyParams> family = std::nullopt) {
        const unsigned n = ctx->n();
        linalg::Echelon<GF, SubElem> ech(ctx->sub(), static_cast<std::size_t>(n) * n);
        std::vector<LinPoly> basis;
        for (const auto& f : gens) {
            require_same(*ctx, *f.ctx());
            if (ech.insert(coeff_coords(f))) basis.push_back(f);
        }
        return LinCode(ctx, std::move(basis), std::move(family));
    }

    const FieldPtr& ctx() const noexcept { return ctx_; }
    const std::vector<LinPoly>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    const std::optional<FamilyParams>& family() const noexcept { return family_; }

    const detail::Syndromes& syndromes() const {
        std::call_once(cache_->once, [this] { cache_->syn = std::make_unique<detail::Syndromes>(ctx_, basis_); });
        return *cache_->syn;
    }

    bool contains(const LinPoly& f) const {
        require_same(*ctx_, *f.ctx());
        return syndromes().contains(f);
    }

private:
    FieldPtr ctx_;
    std::vector<LinPoly> basis_;
    std::optional<FamilyParams> family_;
    std::shared_ptr<detail::CodeCache> cache_;
};

inline bool membership(const LinCode& code, const LinPoly& f) { return code.contains(f); }

/// Equal spans, decided by mutual containment of bases.
inline bool same_span(const LinCode& a, const LinCode& b) {
    if (!a.ctx()->same_as(*b.ctx()) || a.dim() != b.dim()) return false;
    for (const auto& f : a.basis())
        if (!b.contains(f)) return false;
    for (const auto& f : b.basis())
        if (!a.contains(f)) return false;
    return true;
}

// -- constructions -----------------------------------------------------------

inline LinCode construct(const FamilyParams& p) {
    const auto& ctx = p.ctx;
    const auto& beta = ctx->basis();
    std::vector<LinPoly> basis;
    if (p.family == Family::Gabidulin) {
        for (unsigned i = 0; i < p.k; ++i)
            for (auto b : beta) basis.push_back(LinPoly::monomial(ctx, b, static_cast<long long>(p.s) * i));
    } else {
        for (auto b : beta) {
            auto f = LinPoly::monomial(ctx, b, 0);
            if (p.eta) f = f + LinPoly::monomial(ctx, ctx->mul(p.eta, ctx->frobenius_q(b, p.h)), p.sk());
            basis.push_back(f);
        }
        for (unsigned i = 1; i < p.k; ++i)
            for (auto b : beta) basis.push_back(LinPoly::monomial(ctx, b, static_cast<long long>(p.s) * i));
    }
    return LinCode(ctx, std::move(basis), p);
}

inline LinCode gg_construct(const FieldPtr& ctx, unsigned k, long long s) {
    return construct(FamilyParams::gabidulin(ctx, k, s));
}

inline LinCode gtg_construct(const FamilyParams& p) {
    require(p.family == Family::Twisted, ErrorKind::BadParams, "expected twisted family parameters");
    return construct(p);
}

/// {a X : a in GF(q^n)}.
inline LinCode scalar_code(const FieldPtr& ctx) {
    std::vector<LinPoly> basis;
    for (auto b : ctx->basis()) basis.push_back(LinPoly::monomial(ctx, b, 0));
    return LinCode(ctx, std::move(basis));
}

// -- enumeration ---------------------------------------------------------------

inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 26;

inline std::uint64_t code_size_checked(const LinCode& code, std::uint64_t guard) {
    const auto sz = checked_pow(code.ctx()->q(), code.dim());
    require(sz && *sz <= guard, ErrorKind::TooLarge,
            "code has q^" + std::to_string(code.dim()) + " codewords, above the enumeration guard");
    return *sz;
}

/// Visits every codeword exactly once (GF(q) odometer over the basis).
inline void for_each_codeword(const LinCode& code, const std::function<void(const LinPoly&)>& fn,
                              std::uint64_t guard = kDefaultGuard) {
    code_size_checked(code, guard);
    const auto& F = *code.ctx();
    const unsigned n = F.n();
    const std::size_t D = code.dim();
    std::vector<SubElem> digit(D, 0);
    std::vector<Elem> cur(n, 0);
    fn(LinPoly(code.ctx(), cur));
    const SubElem q = static_cast<SubElem>(F.q());
    for (;;) {
        std::size_t j = 0;
        while (j < D && digit[j] == q - 1) {
            digit[j] = 0;
            ++j;
        }
        if (j == D) break;
        // digit j goes from v to v+1; lower digits reset from q-1 to 0.
        for (std::size_t t = 0; t < j; ++t) {
            const Elem lam = F.embed(q - 1);
            for (unsigned i = 0; i < n; ++i) cur[i] = F.sub(cur[i], F.mul(lam, code.basis()[t][i]));
        }
        const Elem old = F.embed(digit[j]);
        ++digit[j];
        const Elem nw = F.embed(digit[j]);
        const Elem delta = F.sub(nw, old);
        for (unsigned i = 0; i < n; ++i) cur[i] = F.add(cur[i], F.mul(delta, code.basis()[j][i]));
        fn(LinPoly(code.ctx(), cur));
    }
}

inline std::vector<LinPoly> enumerate_codewords(const LinCode& code, std::uint64_t guard = kDefaultGuard) {
    std::vector<LinPoly> out;
    for_each_codeword(code, [&](const LinPoly& f) { out.push_back(f); }, guard);
    return out;
}

using RankDistribution = std::map<unsigned, std::uint64_t>;

namespace detail {

// Rank histogram by enumerating GF(p)-combinations of the code's GF(p)-basis
// as n x n matrices over GF(q) with 8-bit tables. Only words whose highest
// nonzero digit is 1 are visited; each stands for its p-1 GF(p)-multiples.
class FastRanker {
public:
    static bool supported(const FieldCtx& F) { return F.q() <= 256 && F.n() <= 16; }

    explicit FastRanker(const FieldCtx& F) : n_(F.n()), q_(static_cast<unsigned>(F.q())) {
        const auto& S = F.sub();
        add_.resize(q_ * q_);
        mul_.resize(q_ * q_);
        inv_.resize(q_);
        for (unsigned a = 0; a < q_; ++a) {
            inv_[a] = a ? static_cast<std::uint8_t>(S.inv(a)) : 0;
            for (unsigned b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<std::uint8_t>(S.add(a, b));
                mul_[a * q_ + b] = static_cast<std::uint8_t>(S.mul(a, b));
            }
        }
    }

    unsigned rank(std::array<std::uint8_t, 256> m) const {
        const unsigned n = n_;
        unsigned r = 0;
        for (unsigned c = 0; c < n && r < n; ++c) {
            unsigned piv = r;
            while (piv < n && m[piv * 16 + c] == 0) ++piv;
            if (piv == n) continue;
            if (piv != r)
                for (unsigned j = c; j < n; ++j) std::swap(m[piv * 16 + j], m[r * 16 + j]);
            const std::uint8_t* mrow = &m[r * 16];
            const std::uint8_t s = inv_[mrow[c]];
            for (unsigned i = r + 1; i < n; ++i) {
                const std::uint8_t x = m[i * 16 + c];
                if (!x) continue;
                // row_i -= (x/pivot) * row_r
                const std::uint8_t f = mul_[x * q_ + s];
                const std::uint8_t nf = neg(f);
                for (unsigned j = c; j < n; ++j)
                    m[i * 16 + j] = add_[m[i * 16 + j] * q_ + mul_[nf * q_ + mrow[j]]];
            }
            ++r;
        }
        return r;
    }

    RankDistribution histogram(const FieldCtx& F, const std::vector<LinPoly>& gens_q) const {
        // GF(p)-generators zeta^l b_i.
        std::vector<std::array<std::uint8_t, 256>> gens;
        const unsigned e = F.e();
        for (const auto& b : gens_q)
            for (unsigned l = 0; l < e; ++l) {
                const SubElem unit = static_cast<SubElem>(*checked_pow(F.p(), l));
                const auto M = to_matrix(b.scaled(F.embed(unit)));
                std::array<std::uint8_t, 256> g{};
                for (unsigned i = 0; i < n_; ++i)
                    for (unsigned j = 0; j < n_; ++j) g[i * 16 + j] = static_cast<std::uint8_t>(M(i, j));
                gens.push_back(g);
            }
        const std::uint64_t p = F.p();
        RankDistribution hist;
        hist[0] = 1;
        std::vector<std::uint64_t> local(n_ + 1, 0);
        const std::size_t D = gens.size();
        std::vector<std::uint8_t> digit(D, 0);
        for (std::size_t top = 0; top < D; ++top) {
            auto cur = gens[top];
            std::fill(digit.begin(), digit.begin() + static_cast<std::ptrdiff_t>(top), 0);
            ++local[rank(cur)];
            for (;;) {
                std::size_t j = 0;
                bool done = false;
                while (digit[j] == p - 1) {
                    digit[j] = 0;
                    add_into(cur, gens[j]);
                    if (++j == top) {
                        done = true;
                        break;
                    }
                }
                if (done || top == 0) break;
                ++digit[j];
                add_into(cur, gens[j]);
                ++local[rank(cur)];
            }
        }
        for (unsigned r = 0; r <= n_; ++r)
            if (local[r]) hist[r] += local[r] * (p - 1);
        return hist;
    }

private:
    std::uint8_t neg(std::uint8_t a) const {
        for (unsigned b = 0; b < q_; ++b)
            if (add_[a * q_ + b] == 0) return static_cast<std::uint8_t>(b);
        return 0;
    }

    void add_into(std::array<std::uint8_t, 256>& cur, const std::array<std::uint8_t, 256>& g) const {
        for (unsigned i = 0; i < n_; ++i)
            for (unsigned j = 0; j < n_; ++j) {
                auto& x = cur[i * 16 + j];
                x = add_[x * q_ + g[i * 16 + j]];
            }
    }

    unsigned n_, q_;
    std::vector<std::uint8_t> add_, mul_, inv_;
};

} // namespace detail

inline RankDistribution rank_distribution(const LinCode& code, std::uint64_t guard = kDefaultGuard) {
    code_size_checked(code, guard);
    const auto& F = *code.ctx();
    if (code.dim() == 0) return {{0u, 1u}};
    if (detail::FastRanker::supported(F)) return detail::FastRanker(F).histogram(F, code.basis());
    RankDistribution hist;
    for_each_codeword(code, [&](const LinPoly& f) { ++hist[rank_of(f)]; }, guard);
    return hist;
}

struct MrdResult {
    unsigned min_dist;
    bool mrd;
};

inline MrdResult is_mrd(const LinCode& code, std::uint64_t guard = kDefaultGuard) {
    const unsigned n = code.ctx()->n();
    require(code.dim() > 0, ErrorKind::BadParams, "the zero code has no minimum distance");
    require(code.dim() % n == 0, ErrorKind::NonIntegralK,
            "dimension " + std::to_string(code.dim()) + " is not a multiple of n");
    const auto k = static_cast<unsigned>(code.dim() / n);
    const auto hist = rank_distribution(code, guard);
    unsigned dmin = n;
    for (const auto& [r, c] : hist)
        if (r > 0 && c > 0) {
            dmin = r;
            break;
        }
    return {dmin, dmin == n - k + 1};
}

/// q^(max(m,n) * (min(m,n) - d + 1)).
inline std::uint64_t singleton_bound(unsigned m, unsigned n, unsigned d, std::uint64_t q) {
    require(d >= 1 && d <= std::min(m, n), ErrorKind::BadParams, "need 1 <= d <= min(m,n)");
    const auto v = checked_pow(q, static_cast<std::uint64_t>(std::max(m, n)) * (std::min(m, n) - d + 1));
    require(v.has_value(), ErrorKind::TooLarge, "Singleton bound overflows 64 bits");
    return *v;
}

// -- matrix export ----------------------------------------------------------

inline void check_anchors(const FieldCtx& F, const std::vector<Elem>& anchors) {
    linalg::Echelon<GF, SubElem> ech(F.sub(), F.n());
    for (auto a : anchors)
        require(ech.insert(F.coords(a)), ErrorKind::DependentAnchors, "anchors are GF(q)-dependent");
}

/// m x n matrix whose row i is the coordinate vector of f(alpha_i).
inline MatrixGFq export_matrix(const LinPoly& f, const std::vector<Elem>& anchors) {
    const auto& F = *f.ctx();
    MatrixGFq m(anchors.size(), F.n());
    for (std::size_t i = 0; i < anchors.size(); ++i)
        F.coords_into(evaluate(f, anchors[i]), &m.data[i * F.n()]);
    return m;
}

inline void matrix_export(const LinCode& code, const std::vector<Elem>& anchors,
                          const std::function<void(const MatrixGFq&)>& fn, std::uint64_t guard = kDefaultGuard) {
    check_anchors(*code.ctx(), anchors);
    for_each_codeword(code, [&](const LinPoly& f) { fn(export_matrix(f, anchors)); }, guard);
}

// -- subspace restriction probe ----------------------------------------------

struct ProbeReport {
    unsigned trials = 0;
    unsigned max_dim = 0;
    unsigned delta = 0;
    bool pass() const { return max_dim <= delta; }
};

/// Random GF(p^m)-subspaces U of GF(p^{mn})^l of dimension delta, intersected
/// with GF(p^n)^l over GF(p). Half of the spanning vectors are drawn from
/// GF(p^n)^l so that nontrivial intersections actually occur.
inline ProbeReport restriction_probe(std::uint64_t p, unsigned m, unsigned n, unsigned l, unsigned delta,
                                     unsigned trials, std::uint64_t seed) {
    require(m >= 1 && n >= 1 && l >= 1, ErrorKind::BadParams, "m, n, l must be positive");
    require(std::gcd(m, n) == 1, ErrorKind::BadParams, "gcd(m,n)=1 violated");
    require(delta <= l, ErrorKind::BadParams, "delta <= l violated");
    const auto ctx = FieldCtx::build(p, m, n);
    const auto& F = *ctx;
    const unsigned d = m * n;
    const Elem zeta = F.subfield_generator(m);
    const Elem omega = F.subfield_generator(n);
    const GF& P = F.prime();
    const std::size_t width = static_cast<std::size_t>(d) * l;

    auto flatten = [&](const std::vector<Elem>& v) {
        std::vector<std::uint64_t> out;
        out.reserve(width);
        for (auto x : v) {
            const auto dg = F.gf().digits(x);
            out.insert(out.end(), dg.begin(), dg.end());
        }
        return out;
    };

    // GF(p)-spanning set of GF(p^n)^l.
    std::vector<std::vector<std::uint64_t>> wrows;
    for (unsigned i = 0; i < l; ++i)
        for (unsigned t = 0; t < n; ++t) {
            std::vector<Elem> v(l, 0);
            v[i] = F.pow(omega, t);
            wrows.push_back(flatten(v));
        }

    linalg::Echelon<GF, std::uint64_t> W(P, width);
    for (const auto& r : wrows) W.insert(r);
    const std::size_t rank_w = W.rank();

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> any(0, F.size() - 1);
    const std::uint64_t small = *checked_pow(p, n);
    std::uniform_int_distribution<std::uint64_t> in_small(0, small - 1);
    std::bernoulli_distribution coin(0.5);

    ProbeReport rep;
    rep.delta = delta;
    for (unsigned trial = 0; trial < trials; ++trial) {
        linalg::Echelon<GF, std::uint64_t> U(P, width);
        while (U.rank() < static_cast<std::size_t>(m) * delta) {
            std::vector<Elem> u(l);
            const bool restricted = coin(rng);
            for (auto& x : u) {
                if (!restricted) {
                    x = any(rng);
                    continue;
                }
                const std::uint64_t t = in_small(rng);
                x = t + 1 == small ? 0 : F.pow(omega, t);
            }
            linalg::Echelon<GF, std::uint64_t> trial_U = U;
            bool ok = true;
            for (unsigned t = 0; t < m && ok; ++t) {
                std::vector<Elem> v(l);
                const Elem z = F.pow(zeta, t);
                for (unsigned i = 0; i < l; ++i) v[i] = F.mul(z, u[i]);
                ok = trial_U.insert(flatten(v));
            }
            if (!ok) continue; // dependent over GF(p^m): redraw
            U = std::move(trial_U);
        }
        linalg::Echelon<GF, std::uint64_t> sum = U;
        for (const auto& r : wrows) sum.insert(r);
        const auto inter = static_cast<unsigned>(U.rank() + rank_w - sum.rank());
        rep.max_dim = std::max(rep.max_dim, inter);
        ++rep.trials;
    }
    return rep;
}

} // namespace mrdkit

#endif // MRDKIT_CODES_HPP
