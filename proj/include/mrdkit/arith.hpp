#ifndef MRDKIT_ARITH_HPP
#define MRDKIT_ARITH_HPP

// Integer helpers and dense polynomials over a prime field GF(p).

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace mrdkit {

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t f = 2; f * f <= v; ++f)
        if (v % f == 0) return false;
    return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= v; ++f) {
        if (v % f) continue;
        out.push_back(f);
        while (v % f == 0) v /= f;
    }
    if (v > 1) out.push_back(v);
    return out;
}

/// base^exp, or nullopt if the result does not fit in 64 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) return std::nullopt;
        r *= base;
    }
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

/// Non-negative residue of v modulo m.
inline long long pmod(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

namespace poly {

// Coefficients ascending; an empty vector is the zero polynomial.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t inv_mod_p(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

inline Poly sub(Poly a, const Poly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    trim(r);
    return r;
}

inline Poly rem(Poly a, const Poly& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        const std::size_t shift = a.size() - 1 - dm;
        const std::uint64_t f = mulmod(a.back(), lead_inv, p);
        for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - mulmod(f, m[i], p)) % p;
        trim(a);
    }
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly r{1};
    base = rem(base, m, p);
    while (e) {
        if (e & 1) r = rem(mul(r, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Ben-Or test: f of degree d is irreducible iff gcd(X^{p^i} - X, f) = 1 for i <= d/2.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    Poly xp = x;
    for (std::size_t i = 1; i <= d / 2; ++i) {
        xp = powmod(xp, p, f, p);
        Poly g = gcd(f, sub(xp, x, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace poly
} // namespace mrdkit

#endif // MRDKIT_ARITH_HPP
