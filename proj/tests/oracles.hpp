// Independent reference computations used by the test suites. Nothing here
// calls into the library's arithmetic beyond reading the modulus.
#ifndef MRDKIT_TESTS_ORACLES_HPP
#define MRDKIT_TESTS_ORACLES_HPP

#include "mrdkit/mrdkit.hpp"

#include <random>

namespace oracle {

using Digits = std::vector<std::uint64_t>;

inline Digits to_digits(std::uint64_t v, std::uint64_t p, unsigned d) {
    Digits out(d);
    for (unsigned i = 0; i < d; ++i, v /= p) out[i] = v % p;
    return out;
}

inline std::uint64_t from_digits(const Digits& dg, std::uint64_t p) {
    std::uint64_t v = 0;
    for (std::size_t i = dg.size(); i-- > 0;) v = v * p + dg[i];
    return v;
}

// Schoolbook product of digit vectors reduced by a monic modulus.
inline Digits polymulmod(const Digits& a, const Digits& b, const Digits& mod, std::uint64_t p) {
    const std::size_t d = mod.size() - 1;
    Digits prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t i = prod.size(); i-- > d;) {
        const auto c = prod[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) prod[i - d + j] = (prod[i - d + j] + (p - c) * mod[j]) % p;
    }
    prod.resize(d);
    return prod;
}

inline std::uint64_t mul(const mrdkit::FieldCtx& F, std::uint64_t a, std::uint64_t b) {
    const auto& m = F.modulus();
    const Digits mod(m.begin(), m.end());
    return from_digits(polymulmod(to_digits(a, F.p(), F.d()), to_digits(b, F.p(), F.d()), mod, F.p()), F.p());
}

inline std::uint64_t pow(const mrdkit::FieldCtx& F, std::uint64_t a, std::uint64_t k) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(F, r, a);
    return r;
}

inline std::uint64_t add(const mrdkit::FieldCtx& F, std::uint64_t a, std::uint64_t b) {
    auto x = to_digits(a, F.p(), F.d()), y = to_digits(b, F.p(), F.d());
    for (unsigned i = 0; i < F.d(); ++i) x[i] = (x[i] + y[i]) % F.p();
    return from_digits(x, F.p());
}

// Irreducibility by trial division against every monic polynomial of degree <= d/2.
inline bool irreducible(const Digits& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    for (std::size_t dg = 1; 2 * dg <= d; ++dg) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < dg; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Digits g = to_digits(idx, p, static_cast<unsigned>(dg));
            g.push_back(1);
            Digits r = f;
            for (std::size_t i = r.size(); i-- > dg;) {
                const auto c = r[i];
                if (c == 0) continue;
                for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = (r[i - dg + j] + (p - c) * g[j]) % p;
            }
            bool zero = true;
            for (std::size_t i = 0; i < dg; ++i) zero = zero && r[i] == 0;
            if (zero) return false;
        }
    }
    return true;
}

// Evaluate sum a_i v^{q^i} with the oracle multiplication.
inline std::uint64_t apply(const mrdkit::LinPoly& f, std::uint64_t v) {
    const auto& F = *f.ctx();
    std::uint64_t acc = 0, vq = v;
    for (unsigned i = 0; i < f.n(); ++i) {
        acc = add(F, acc, mul(F, f[i], vq));
        vq = pow(F, vq, F.q());
    }
    return acc;
}

// Rank of the GF(q)-linear map from the size of its kernel.
inline unsigned rank_by_kernel(const mrdkit::LinPoly& f) {
    const auto& F = *f.ctx();
    std::uint64_t kernel = 0;
    for (std::uint64_t v = 0; v < F.size(); ++v) kernel += apply(f, v) == 0;
    unsigned dim = 0;
    while (kernel > 1) kernel /= F.q(), ++dim;
    return F.n() - dim;
}

inline mrdkit::LinPoly random_poly(const mrdkit::FieldPtr& F, std::mt19937_64& rng) {
    std::vector<mrdkit::Elem> c(F->n());
    for (auto& x : c) x = rng() % F->size();
    return mrdkit::LinPoly(F, c);
}

inline mrdkit::LinPoly random_permutation(const mrdkit::FieldPtr& F, std::mt19937_64& rng) {
    for (;;) {
        auto f = random_poly(F, rng);
        if (rank_by_kernel(f) == F->n()) return f;
    }
}

} // namespace oracle

#endif
