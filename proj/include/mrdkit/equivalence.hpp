#ifndef MRDKIT_EQUIVALENCE_HPP
#define MRDKIT_EQUIVALENCE_HPP

#include "mrdkit/duality.hpp"

#include <algorithm>
#include <set>

namespace mrdkit {

using SupportSet = std::set<unsigned>;

inline SupportSet universal_support(const LinCode& code) {
    SupportSet s;
    for (const auto& f : code.basis())
        for (auto i : f.support()) s.insert(i);
    return s;
}

/// Residues k with exactly one (i, j) in A x B such that i + j = k (mod n).
inline SupportSet set_power(const SupportSet& A, const SupportSet& B, unsigned n) {
    std::vector<unsigned> hits(n, 0);
    for (auto i : A)
        for (auto j : B) ++hits[(i + j) % n];
    SupportSet out;
    for (unsigned k = 0; k < n; ++k)
        if (hits[k] == 1) out.insert(k);
    return out;
}

/// Independent supports of G_{k,s} / H_{k,s}(eta, h) used for the filter.
inline std::vector<SupportSet> canonical_supports(const FamilyParams& p) {
    const unsigned n = p.n();
    std::vector<SupportSet> out;
    const bool twisted = p.family == Family::Twisted && p.eta != 0;
    for (unsigned i = twisted ? 1 : 0; i < p.k; ++i) out.push_back({static_cast<unsigned>((std::uint64_t{p.s} * i) % n)});
    if (twisted) out.push_back({0u, p.sk()});
    return out;
}

/// Monomial-type map a -> gamma * a^(q^e).
struct MonomialMap {
    Elem gamma;
    long long e;
};

inline bool check_independent_support(const LinCode& code, const SupportSet& B,
                                       const std::map<unsigned, MonomialMap>& witnesses) {
    const auto& F = *code.ctx();
    require(witnesses.size() == B.size(), ErrorKind::BadWitnessShape, "one witness map per support index required");
    for (auto i : B) {
        require(i < F.n(), ErrorKind::BadWitnessShape, "support index out of range");
        require(witnesses.count(i) == 1, ErrorKind::BadWitnessShape,
                "missing witness map for index " + std::to_string(i));
    }
    for (const auto& [i, w] : witnesses)
        if (w.gamma == 0) return false;
    for (auto b : F.basis()) {
        std::vector<Elem> c(F.n(), 0);
        for (const auto& [i, w] : witnesses) c[i] = F.mul(w.gamma, F.frobenius_q(b, w.e));
        if (!code.contains(LinPoly(code.ctx(), std::move(c)))) return false;
    }
    return true;
}

struct FilterVerdict {
    bool inequivalent = false;
    std::vector<SupportSet> candidates;
};

inline constexpr unsigned kFilterMaxN = 24;

inline FilterVerdict support_filter(const std::vector<SupportSet>& T1, const SupportSet& S2, unsigned n) {
    require(n >= 1 && n <= kFilterMaxN, ErrorKind::TooLarge, "support filter limited to n <= 24");
    FilterVerdict v;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        SupportSet A;
        for (unsigned i = 0; i < n; ++i)
            if (mask >> i & 1) A.insert(i);
        bool ok = true;
        for (const auto& B : T1) {
            for (auto k : set_power(A, B, n))
                if (!S2.count(k)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) v.candidates.push_back(std::move(A));
    }
    v.inequivalent = v.candidates.empty();
    return v;
}

/// Filter verdict between two family members. Besides the direct direction it
/// tries the reverse direction and the pair of dual partners; any empty scan
/// is a proof of inequivalence. Candidates are reported from the direct scan.
inline FilterVerdict support_filter(const FamilyParams& a, const FamilyParams& b) {
    require_same(*a.ctx, *b.ctx);
    const unsigned n = a.n();
    const auto direct = support_filter(canonical_supports(a), universal_support(construct(b)), n);
    if (direct.inequivalent) return direct;
    if (a.k != b.k) return {true, {}};
    if (support_filter(canonical_supports(b), universal_support(construct(a)), n).inequivalent) return {true, {}};
    const auto da = dual_partner(a), db = dual_partner(b);
    if (support_filter(canonical_supports(da), universal_support(construct(db)), n).inequivalent ||
        support_filter(canonical_supports(db), universal_support(construct(da)), n).inequivalent)
        return {true, {}};
    return direct;
}

// -- witnesses -----------------------------------------------------------------

struct EquivWitness {
    LinPoly L1;
    LinPoly L2;
    unsigned rho = 0; ///< coefficients are mapped by a -> a^(p^rho)
};

/// L1 = c X^(q^r), L2 = d X^(q^(shift - r)), coefficients raised to p^rho.
/// The classical shape has shift = 0.
struct MonomialWitness {
    Elem c = 1;
    Elem d = 1;
    unsigned r = 0;
    unsigned rho = 0;
    unsigned shift = 0;
    bool operator==(const MonomialWitness&) const = default;
    auto operator<=>(const MonomialWitness&) const = default;
};

inline EquivWitness to_equiv(const FieldPtr& ctx, const MonomialWitness& w) {
    return {LinPoly::monomial(ctx, w.c, w.r),
            LinPoly::monomial(ctx, w.d, static_cast<long long>(w.shift) - static_cast<long long>(w.r)), w.rho};
}

inline LinPoly apply_witness(const EquivWitness& w, const LinPoly& f) {
    return compose(w.L1, compose(coeff_frobenius(f, w.rho), w.L2));
}

inline bool verify_witness(const LinCode& c1, const LinCode& c2, const EquivWitness& w) {
    require_same(*c1.ctx(), *c2.ctx());
    const unsigned n = c1.ctx()->n();
    require(rank_of(w.L1) == n && rank_of(w.L2) == n, ErrorKind::SingularWitness,
            "witness maps must be permutations");
    if (c1.dim() != c2.dim()) return false;
    for (const auto& f : c1.basis())
        if (!c2.contains(apply_witness(w, f))) return false;
    return true;
}

// -- monomial search -------------------------------------------------------

struct SearchOptions {
    bool strict_rho = false; ///< rho in [0, e) instead of [0, e*n)
    std::uint64_t max_field = std::uint64_t{1} << 20;
};

namespace detail {

inline unsigned rho_range(const FieldCtx& F, bool strict) { return strict ? F.e() : F.e() * F.n(); }

/// Smallest element of each GF(q)^*-orbit of GF(q^n)^*.
inline std::vector<Elem> class_reps(const FieldCtx& F) {
    std::vector<char> seen(F.size(), 0);
    std::vector<Elem> reps;
    std::vector<Elem> units;
    for (SubElem s = 1; s < F.q(); ++s) units.push_back(F.embed(s));
    for (Elem d = 1; d < F.size(); ++d) {
        if (seen[d]) continue;
        reps.push_back(d);
        for (auto u : units) seen[F.mul(u, d)] = 1;
    }
    return reps;
}

/// Nonzero elements of the GF(q)-span of `rows` (coordinate vectors), smallest first.
inline Elem min_nonzero_in_span(const FieldCtx& F, const linalg::Matrix<SubElem>& rows) {
    const std::size_t dim = rows.rows;
    const SubElem q = static_cast<SubElem>(F.q());
    std::vector<SubElem> digit(dim, 0);
    Elem best = 0;
    std::vector<SubElem> v(F.n());
    for (;;) {
        std::size_t j = 0;
        while (j < dim && digit[j] == q - 1) digit[j++] = 0;
        if (j == dim) break;
        ++digit[j];
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t r = 0; r < dim; ++r)
            if (digit[r])
                for (unsigned t = 0; t < F.n(); ++t)
                    v[t] = static_cast<SubElem>(F.sub().add(v[t], F.sub().mul(digit[r], rows(r, t))));
        const Elem c = F.from_coords(v);
        if (c && (best == 0 || c < best)) best = c;
    }
    return best;
}

/// Shifts sigma with S1 + sigma = S2.
inline std::vector<unsigned> matching_shifts(const SupportSet& S1, const SupportSet& S2, unsigned n) {
    std::vector<unsigned> out;
    if (S1.size() != S2.size()) return out;
    for (unsigned sg = 0; sg < n; ++sg) {
        bool ok = true;
        for (auto i : S1)
            if (!S2.count((i + sg) % n)) {
                ok = false;
                break;
            }
        if (ok) out.push_back(sg);
    }
    return out;
}

// Given (rho, r, shift, d), the c in GF(q^n) for which every image of a basis
// element of C1 lies in C2 form a GF(q)-subspace; returns a basis of it
// (rows of coordinates), or an empty matrix.
class CSolver {
public:
    CSolver(const LinCode& c1, const LinCode& c2) : c1_(c1), c2_(c2), F_(*c1.ctx()) {}

    void set_frame(unsigned rho, unsigned r, unsigned shift) {
        r_ = r;
        shift_ = shift;
        const unsigned n = F_.n();
        twisted_.clear();
        for (const auto& f : c1_.basis()) {
            std::vector<std::pair<unsigned, Elem>> terms;
            for (unsigned i = 0; i < n; ++i)
                if (f[i]) terms.emplace_back(i, F_.frobenius_p(f[i], static_cast<long long>(rho) + F_.e() * r));
            twisted_.push_back(std::move(terms));
        }
    }

    linalg::Matrix<SubElem> solve(Elem d) const {
        const unsigned n = F_.n();
        const auto& syn = c2_.syndromes();
        const std::size_t m = syn.rows();
        const auto& beta = F_.basis();
        linalg::Echelon<GF, SubElem> cons(F_.sub(), n);
        std::vector<SubElem> block(m * n);
        std::vector<Elem> dpow(n);
        for (unsigned i = 0; i < n; ++i) dpow[i] = F_.frobenius_q(d, static_cast<long long>(i) + r_);
        linalg::Matrix<SubElem> A(0, n);
        A.cols = n;
        for (const auto& terms : twisted_) {
            std::fill(block.begin(), block.end(), 0);
            for (const auto& [i, a] : terms) {
                const Elem w = F_.mul(dpow[i], a);
                const unsigned pos = (i + shift_) % n;
                for (unsigned t = 0; t < n; ++t) syn.accumulate(pos, F_.mul(beta[t], w), &block[t * m]);
            }
            for (std::size_t row = 0; row < m; ++row) {
                std::vector<SubElem> v(n);
                bool nz = false;
                for (unsigned t = 0; t < n; ++t) {
                    v[t] = block[t * m + row];
                    nz |= v[t] != 0;
                }
                if (!nz || !cons.insert(v)) continue;
                A.append_row(v);
                if (cons.rank() == n) return {};
            }
        }
        if (A.rows == 0) return linalg::Matrix<SubElem>::identity(n);
        return linalg::nullspace(F_.sub(), A);
    }

private:
    const LinCode& c1_;
    const LinCode& c2_;
    const FieldCtx& F_;
    unsigned r_ = 0, shift_ = 0;
    std::vector<std::vector<std::pair<unsigned, Elem>>> twisted_;
};

template <class Visit>
void monomial_scan(const LinCode& c1, const LinCode& c2, const SearchOptions& opt, Visit&& visit) {
    require_same(*c1.ctx(), *c2.ctx());
    const auto& F = *c1.ctx();
    require(F.size() <= opt.max_field, ErrorKind::TooLarge, "monomial search limited to small fields");
    if (c1.dim() != c2.dim()) return;
    const unsigned n = F.n();
    const auto shifts = matching_shifts(universal_support(c1), universal_support(c2), n);
    if (shifts.empty()) return;
    const auto reps = class_reps(F);
    CSolver solver(c1, c2);
    for (unsigned rho = 0; rho < rho_range(F, opt.strict_rho); ++rho)
        for (unsigned r = 0; r < n; ++r)
            for (auto sg : shifts) {
                solver.set_frame(rho, r, sg);
                if (!visit(rho, r, sg, reps, solver)) return;
            }
}

} // namespace detail

/// First monomial witness in (rho, r, shift, c, d) order, if any.
inline std::optional<MonomialWitness> monomial_search(const LinCode& c1, const LinCode& c2,
                                                      const SearchOptions& opt = {}) {
    std::optional<MonomialWitness> found;
    detail::monomial_scan(c1, c2, opt, [&](unsigned rho, unsigned r, unsigned sg, const std::vector<Elem>& reps,
                                           const detail::CSolver& solver) {
        for (auto d : reps) {
            const auto space = solver.solve(d);
            if (space.rows == 0) continue;
            const Elem c = detail::min_nonzero_in_span(*c1.ctx(), space);
            if (!found || c < found->c) found = MonomialWitness{c, d, r, rho, sg};
        }
        return !found.has_value();
    });
    return found;
}

inline std::optional<MonomialWitness> monomial_search(const FamilyParams& a, const FamilyParams& b,
                                                      const SearchOptions& opt = {}) {
    require_same(*a.ctx, *b.ctx);
    return monomial_search(construct(a), construct(b), opt);
}

/// Normal form: d is the smallest element of its GF(q)^*-class (c absorbs the scalar).
inline MonomialWitness normalize(const FieldCtx& F, MonomialWitness w) {
    Elem best = w.d;
    Elem lam_best = 1;
    for (SubElem s = 1; s < F.q(); ++s) {
        const Elem lam = F.embed(s);
        const Elem cand = F.mul(lam, w.d);
        if (cand < best) {
            best = cand;
            lam_best = lam;
        }
    }
    w.d = best;
    w.c = F.div(w.c, lam_best);
    return w;
}

/// Witness of "apply a, then b".
inline MonomialWitness compose_witness(const FieldCtx& F, const MonomialWitness& a, const MonomialWitness& b) {
    const unsigned n = F.n(), en = F.e() * F.n();
    const long long r2a = pmod(static_cast<long long>(a.shift) - a.r, n);
    MonomialWitness w;
    w.r = (a.r + b.r) % n;
    w.shift = (a.shift + b.shift) % n;
    w.rho = (a.rho + b.rho) % en;
    w.c = F.mul(b.c, F.frobenius_p(a.c, static_cast<long long>(b.rho) + static_cast<long long>(F.e()) * b.r));
    w.d = F.mul(F.frobenius_p(a.d, b.rho), F.frobenius_q(b.d, r2a));
    return normalize(F, w);
}

/// All monomial maps fixing the code, in normal form, extended rho range.
inline std::vector<MonomialWitness> monomial_automorphisms(const LinCode& code, const SearchOptions& opt = {}) {
    std::vector<MonomialWitness> out;
    const auto& F = *code.ctx();
    detail::monomial_scan(code, code, opt, [&](unsigned rho, unsigned r, unsigned sg, const std::vector<Elem>& reps,
                                               const detail::CSolver& solver) {
        for (auto d : reps) {
            const auto space = solver.solve(d);
            const std::size_t dim = space.rows;
            if (dim == 0) continue;
            std::vector<SubElem> digit(dim, 0), v(F.n());
            const SubElem q = static_cast<SubElem>(F.q());
            for (;;) {
                std::size_t j = 0;
                while (j < dim && digit[j] == q - 1) digit[j++] = 0;
                if (j == dim) break;
                ++digit[j];
                std::fill(v.begin(), v.end(), 0);
                for (std::size_t row = 0; row < dim; ++row)
                    if (digit[row])
                        for (unsigned t = 0; t < F.n(); ++t)
                            v[t] = static_cast<SubElem>(F.sub().add(v[t], F.sub().mul(digit[row], space(row, t))));
                out.push_back(MonomialWitness{F.from_coords(v), d, r, rho, sg});
            }
        }
        return true;
    });
    std::sort(out.begin(), out.end(), [](const MonomialWitness& x, const MonomialWitness& y) {
        return std::tie(x.rho, x.r, x.shift, x.c, x.d) < std::tie(y.rho, y.r, y.shift, y.c, y.d);
    });
    return out;
}

inline std::vector<MonomialWitness> monomial_automorphisms(const FamilyParams& p, const SearchOptions& opt = {}) {
    return monomial_automorphisms(construct(p), opt);
}

// -- classification predicate ----------------------------------------------------

namespace detail {

// Image of x -> x^E on GF(q^n)^*, E given as a difference of p-powers p^a - p^b.
inline std::vector<char> power_image(const FieldCtx& F, long long a_exp, long long b_exp) {
    std::vector<char> in(F.size(), 0);
    for (Elem x = 1; x < F.size(); ++x) in[F.div(F.frobenius_p(x, a_exp), F.frobenius_p(x, b_exp))] = 1;
    return in;
}

// exists x in X, y in Y with x * y = target
inline bool product_hits(const FieldCtx& F, const std::vector<char>& X, const std::vector<char>& Y, Elem target) {
    for (Elem x = 1; x < F.size(); ++x)
        if (X[x] && Y[F.div(target, x)]) return true;
    return false;
}

} // namespace detail

/// Classification of H_{k,s}(eta, g) vs H_{k,t}(theta, h) for 2 <= k <= n-2.
/// The existential over (c, d, r, rho) is decided by scanning the images of
/// c -> c^(q^h - 1) and d -> d^(q^(r+h) - q^(r+sk)) separately.
inline bool thm_equiv_predicate(const FamilyParams& a, const FamilyParams& b, const SearchOptions& opt = {}) {
    require_same(*a.ctx, *b.ctx);
    const auto& F = *a.ctx;
    const unsigned n = F.n();
    require(a.k >= 2 && a.k + 2 <= n && b.k >= 2 && b.k + 2 <= n, ErrorKind::OutOfTheoremRange,
            "classification needs 2 <= k <= n-2");
    require(norm_condition(a) && norm_condition(b), ErrorKind::OutOfTheoremRange,
            "classification needs the norm condition on both scalars");
    require(F.size() <= opt.max_field, ErrorKind::TooLarge, "predicate scan limited to small fields");
    if (a.k != b.k) return false;
    const Elem eta = a.family == Family::Twisted ? a.eta : 0;
    const Elem theta = b.family == Family::Twisted ? b.eta : 0;
    const unsigned s = a.s, t = b.s, k = a.k;
    const bool same = s == t, opposite = s == (n - t) % n;
    if (eta == 0 && theta == 0) return same || opposite;
    if (eta == 0 || theta == 0) return false;
    const long long e = F.e();
    const long long sk = a.sk();
    (void)k;
    if (same) {
        if (a.h != b.h) return false;
        const long long h = b.h;
        // theta * c^(q^h - 1) * d^(q^(r+h) - q^(r+sk)) = eta^(rho q^r)
        const auto X = detail::power_image(F, e * h, 0);
        for (unsigned r = 0; r < n; ++r) {
            const auto Y = detail::power_image(F, e * (r + h), e * (r + sk));
            for (unsigned rho = 0; rho < detail::rho_range(F, opt.strict_rho); ++rho) {
                const Elem target = F.div(F.frobenius_p(eta, rho + e * r), theta);
                if (detail::product_hits(F, X, Y, target)) return true;
            }
        }
        return false;
    }
    if (opposite) {
        if (a.h != (n - b.h) % n) return false;
        const long long g = a.h;
        // c^(q^g - 1) * d^(q^(r+g) - q^(r+sk)) = eta^(rho q^r) * theta^(q^sk)
        const auto X = detail::power_image(F, e * g, 0);
        const Elem th = F.frobenius_q(theta, sk);
        for (unsigned r = 0; r < n; ++r) {
            const auto Y = detail::power_image(F, e * (r + g), e * (r + sk));
            for (unsigned rho = 0; rho < detail::rho_range(F, opt.strict_rho); ++rho) {
                const Elem target = F.mul(F.frobenius_p(eta, rho + e * r), th);
                if (detail::product_hits(F, X, Y, target)) return true;
            }
        }
        return false;
    }
    return false;
}

// -- exhaustive oracle ---------------------------------------------------------

struct OracleOptions {
    std::uint64_t budget = 100000;
    bool strict_rho = false;
    bool collect_all = false; ///< keep every witness instead of stopping at the first
};

inline constexpr std::uint64_t kExtendedBudget = 10000000;

/// |GL(n, q)|, or nullopt on overflow.
inline std::optional<std::uint64_t> gl_order(unsigned n, std::uint64_t q) {
    const auto qn = checked_pow(q, n);
    if (!qn) return std::nullopt;
    unsigned __int128 acc = 1;
    std::uint64_t qi = 1;
    for (unsigned i = 0; i < n; ++i) {
        acc *= (*qn - qi);
        if (acc > ~std::uint64_t{0}) return std::nullopt;
        qi *= q;
    }
    return static_cast<std::uint64_t>(acc);
}

/// Visits invertible n x n matrices over GF(q) column by column; stops when fn returns false.
inline void for_each_invertible(const FieldCtx& F, const std::function<bool(const MatrixGFq&)>& fn) {
    const unsigned n = F.n();
    const std::uint64_t q = F.q();
    const std::uint64_t total = *checked_pow(q, n);
    const auto& S = F.sub();
    auto vec_of = [&](std::uint64_t idx) {
        std::vector<SubElem> v(n);
        for (unsigned i = 0; i < n; ++i) {
            v[i] = static_cast<SubElem>(idx % q);
            idx /= q;
        }
        return v;
    };
    auto idx_of = [&](const std::vector<SubElem>& v) {
        std::uint64_t idx = 0;
        for (unsigned i = n; i-- > 0;) idx = idx * q + v[i];
        return idx;
    };
    MatrixGFq M(n, n);
    std::vector<std::vector<char>> span(n + 1, std::vector<char>(total, 0));
    span[0][0] = 1;
    bool stop = false;
    std::function<void(unsigned)> rec = [&](unsigned col) {
        if (stop) return;
        if (col == n) {
            if (!fn(M)) stop = true;
            return;
        }
        for (std::uint64_t vi = 1; vi < total && !stop; ++vi) {
            if (span[col][vi]) continue;
            const auto v = vec_of(vi);
            for (unsigned i = 0; i < n; ++i) M(i, col) = v[i];
            // span[col+1] = span[col] + GF(q) v
            auto& nxt = span[col + 1];
            std::fill(nxt.begin(), nxt.end(), 0);
            for (std::uint64_t w = 0; w < total; ++w) {
                if (!span[col][w]) continue;
                const auto wv = vec_of(w);
                for (SubElem lam = 0; lam < q; ++lam) {
                    std::vector<SubElem> u(n);
                    for (unsigned i = 0; i < n; ++i) u[i] = static_cast<SubElem>(S.add(wv[i], S.mul(lam, v[i])));
                    nxt[idx_of(u)] = 1;
                }
            }
            rec(col + 1);
        }
    };
    rec(0);
}

namespace detail {

// Membership of n x n matrices in the matrix view of a code.
class MatrixCode {
public:
    explicit MatrixCode(const LinCode& code) : F_(*code.ctx()) {
        const unsigned n = F_.n();
        linalg::Matrix<SubElem> B(0, n * n);
        B.cols = n * n;
        for (const auto& f : code.basis()) B.append_row(to_matrix(f).data);
        h_ = code.dim() == 0 ? linalg::Matrix<SubElem>::identity(n * n) : linalg::nullspace(F_.sub(), B);
    }

    std::vector<SubElem> syndrome(const MatrixGFq& M) const {
        const auto& S = F_.sub();
        std::vector<SubElem> out(h_.rows, 0);
        for (std::size_t r = 0; r < h_.rows; ++r) {
            Elem acc = 0;
            for (std::size_t j = 0; j < M.data.size(); ++j)
                if (M.data[j] && h_(r, j)) acc = S.add(acc, S.mul(h_(r, j), M.data[j]));
            out[r] = static_cast<SubElem>(acc);
        }
        return out;
    }

    bool contains(const MatrixGFq& M) const {
        for (auto x : syndrome(M))
            if (x) return false;
        return true;
    }

private:
    const FieldCtx& F_;
    linalg::Matrix<SubElem> h_;
};

} // namespace detail

/// Exhaustive search over (L1, L2, rho). Returns every witness found (at most
/// one unless collect_all is set).
inline std::vector<EquivWitness> exhaustive_oracle_all(const LinCode& c1, const LinCode& c2,
                                                       const OracleOptions& opt = {}) {
    require_same(*c1.ctx(), *c2.ctx());
    const auto& ctx = c1.ctx();
    const auto& F = *ctx;
    const unsigned n = F.n();
    const auto gl = gl_order(n, F.q());
    require(gl && *gl <= opt.budget, ErrorKind::BudgetExceeded,
            "|GL(n,q)| exceeds the oracle budget " + std::to_string(opt.budget));
    std::vector<EquivWitness> found;
    if (c1.dim() != c2.dim()) return found;
    const auto& S = F.sub();
    const detail::MatrixCode target(c2);
    const unsigned rhos = detail::rho_range(F, opt.strict_rho);

    std::optional<LinPoly> f0;
    for_each_codeword(c1, [&](const LinPoly& f) {
        if (!f0 && rank_of(f) == n) f0 = f;
    }, opt.budget * 1000);

    // L1 is sought as G * U^-1 with U the image of f0, so G ranges over C2.
    // Without a full-rank f0, G ranges over all matrices.
    std::vector<MatrixGFq> vars;
    if (f0) {
        for (const auto& g : c2.basis()) vars.push_back(to_matrix(g));
    } else {
        for (unsigned i = 0; i < n * n; ++i) {
            MatrixGFq E(n, n);
            E.data[i] = 1;
            vars.push_back(std::move(E));
        }
    }
    constexpr std::uint64_t kMaxSolutionSpace = std::uint64_t{1} << 20;

    for_each_invertible(F, [&](const MatrixGFq& M2) {
        const LinPoly L2 = matrix_to_linpoly(ctx, M2);
        for (unsigned rho = 0; rho < rhos; ++rho) {
            MatrixGFq Uinv = MatrixGFq::identity(n);
            if (f0) Uinv = *linalg::inverse(S, to_matrix(compose(coeff_frobenius(*f0, rho), L2)));
            // G must send every image U^-1 (f o L2) into C2; each image cuts the candidate space.
            std::vector<MatrixGFq> cand = vars;
            for (const auto& f : c1.basis()) {
                if (cand.empty()) break;
                const auto P = linalg::multiply(S, Uinv, to_matrix(compose(coeff_frobenius(f, rho), L2)));
                std::vector<std::vector<SubElem>> syn;
                for (const auto& G : cand) syn.push_back(target.syndrome(linalg::multiply(S, G, P)));
                const std::size_t rows = syn.front().size();
                linalg::Matrix<SubElem> A(rows, cand.size());
                for (std::size_t k = 0; k < cand.size(); ++k)
                    for (std::size_t r = 0; r < rows; ++r) A(r, k) = syn[k][r];
                const auto ker = linalg::nullspace(S, A);
                std::vector<MatrixGFq> next;
                for (std::size_t t = 0; t < ker.rows; ++t) {
                    MatrixGFq G(n, n);
                    for (std::size_t k = 0; k < cand.size(); ++k) {
                        const auto y = ker(t, k);
                        if (!y) continue;
                        for (std::size_t j = 0; j < G.data.size(); ++j)
                            G.data[j] = static_cast<SubElem>(S.add(G.data[j], S.mul(y, cand[k].data[j])));
                    }
                    next.push_back(std::move(G));
                }
                cand = std::move(next);
            }
            if (cand.empty()) continue;
            const auto count = checked_pow(F.q(), cand.size());
            require(count && *count <= kMaxSolutionSpace, ErrorKind::BudgetExceeded,
                    "oracle solution space too large to enumerate");
            std::vector<SubElem> x(cand.size(), 0);
            for (std::uint64_t idx = 1; idx < *count; ++idx) {
                for (std::size_t i = 0; i < x.size(); ++i) {
                    if (++x[i] < F.q()) break;
                    x[i] = 0;
                }
                MatrixGFq G(n, n);
                for (std::size_t k = 0; k < cand.size(); ++k)
                    if (x[k])
                        for (std::size_t j = 0; j < G.data.size(); ++j)
                            G.data[j] = static_cast<SubElem>(S.add(G.data[j], S.mul(x[k], cand[k].data[j])));
                if (linalg::rank(S, G) != n) continue;
                found.push_back({matrix_to_linpoly(ctx, linalg::multiply(S, G, Uinv)), L2, rho});
                if (!opt.collect_all) return false;
            }
        }
        return true;
    });
    return found;
}

inline std::optional<EquivWitness> exhaustive_oracle(const LinCode& c1, const LinCode& c2,
                                                     const OracleOptions& opt = {}) {
    auto o = opt;
    o.collect_all = false;
    auto all = exhaustive_oracle_all(c1, c2, o);
    if (all.empty()) return std::nullopt;
    return all.front();
}

/// Reads a monomial back from a q-polynomial with a single nonzero coefficient.
inline std::optional<std::pair<Elem, unsigned>> as_monomial(const LinPoly& f) {
    const auto s = f.support();
    if (s.size() != 1) return std::nullopt;
    return std::make_pair(f[s[0]], s[0]);
}

} // namespace mrdkit

#endif // MRDKIT_EQUIVALENCE_HPP
