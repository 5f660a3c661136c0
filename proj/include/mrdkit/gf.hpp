#ifndef MRDKIT_GF_HPP
#define MRDKIT_GF_HPP

// Arithmetic engine for GF(p^d) = GF(p)[x]/(m(x)).
//
// Elements are integer indices sum_i digit_i * p^i over the power basis
// {1, x, ..., x^(d-1)}. Fields up to kTableLimit elements use exp/log and Zech
// tables; very small fields (<= kFullTableLimit) also get dense add/mul tables.
// Larger fields fall back to schoolbook polynomial arithmetic.

#include "mrdkit/arith.hpp"
#include "mrdkit/error.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace mrdkit {

using Elem = std::uint64_t;

class GF {
public:
    static constexpr std::uint64_t kMaxSize = std::uint64_t{1} << 32;
    static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 18;
    static constexpr std::uint64_t kFullTableLimit = 256;

    /// `modulus` must be monic, of degree d, irreducible over GF(p); callers validate.
    GF(std::uint64_t p, unsigned d, poly::Poly modulus)
        : p_(p), d_(d), modulus_(std::move(modulus)) {
        auto sz = checked_pow(p, d);
        require(sz && *sz <= kMaxSize, ErrorKind::TooLarge, "field order exceeds 2^32");
        size_ = *sz;
        order_ = size_ - 1;
        ppow_.resize(d_);
        std::uint64_t pj = 1;
        for (unsigned j = 0; j < d_; ++j) {
            ppow_[j] = pj;
            pj *= p_;
        }
        generator_ = find_generator();
        if (size_ <= kTableLimit) build_tables();
    }

    std::uint64_t p() const noexcept { return p_; }
    unsigned degree() const noexcept { return d_; }
    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t order() const noexcept { return order_; }
    const poly::Poly& modulus() const noexcept { return modulus_; }
    Elem generator() const noexcept { return generator_; }
    bool tabulated() const noexcept { return !exp_.empty(); }
    bool has_full_tables() const noexcept { return !add_tab_.empty(); }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_tab_.empty()) return add_tab_[a * size_ + b];
        if (tabulated()) {
            if (a == 0) return b;
            if (b == 0) return a;
            const std::uint64_t la = log_[a], lb = log_[b];
            const std::uint64_t z = zech_[(lb + order_ - la) % order_];
            if (z == kNoLog) return 0;
            return exp_[(la + z) % order_];
        }
        return digitwise(a, b, false);
    }

    Elem neg(Elem a) const {
        if (p_ == 2 || a == 0) return a;
        if (tabulated()) return exp_[(log_[a] + order_ / 2) % order_];
        return digitwise(0, a, true);
    }

    Elem sub(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        return add(a, neg(b));
    }

    Elem mul(Elem a, Elem b) const {
        if (!mul_tab_.empty()) return mul_tab_[a * size_ + b];
        if (a == 0 || b == 0) return 0;
        if (tabulated()) {
            std::uint64_t s = log_[a] + log_[b];
            if (s >= order_) s -= order_;
            return exp_[s];
        }
        return slow_mul(a, b);
    }

    Elem inv(Elem a) const {
        require(a != 0, ErrorKind::ZeroInverse, "inverse of zero");
        if (tabulated()) return exp_[(order_ - log_[a]) % order_];
        return pow(a, order_ - 1);
    }

    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    Elem pow(Elem a, std::uint64_t e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        if (tabulated()) return exp_[mulmod(log_[a], e % order_, order_)];
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    /// a^(p^j), j taken mod d.
    Elem frob(Elem a, long long j) const {
        const auto jj = static_cast<std::size_t>(pmod(j, d_));
        if (jj == 0 || a == 0) return a;
        if (tabulated()) return exp_[mulmod(log_[a], ppow_[jj] % order_, order_)];
        return pow(a, ppow_[jj]);
    }

    /// Discrete logarithm to the stored generator; tabulated fields only.
    std::uint64_t log(Elem a) const {
        require(a != 0, ErrorKind::ZeroInverse, "log of zero");
        require(tabulated(), ErrorKind::TooLarge, "discrete log needs a tabulated field");
        return log_[a];
    }

    /// generator^i.
    Elem exp(std::uint64_t i) const {
        if (tabulated()) return exp_[i % order_];
        return pow(generator_, i);
    }

    std::vector<std::uint64_t> digits(Elem a) const {
        std::vector<std::uint64_t> out(d_);
        for (unsigned i = 0; i < d_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    Elem from_digits(std::span<const std::uint64_t> dg) const {
        Elem a = 0;
        for (std::size_t i = dg.size(); i-- > 0;) a = a * p_ + dg[i] % p_;
        return a;
    }

    /// Multiplicative order of a nonzero element.
    std::uint64_t element_order(Elem a) const {
        require(a != 0, ErrorKind::ZeroInverse, "order of zero");
        std::uint64_t ord = order_;
        for (auto r : prime_factors(order_))
            while (ord % r == 0 && pow(a, ord / r) == 1) ord /= r;
        return ord;
    }

    const std::uint32_t* add_table() const noexcept { return add_tab_.data(); }
    const std::uint32_t* mul_table() const noexcept { return mul_tab_.data(); }

private:
    static constexpr std::uint64_t kNoLog = ~std::uint64_t{0};

    Elem digitwise(Elem a, Elem b, bool subtract) const {
        Elem r = 0, scale = 1;
        for (unsigned i = 0; i < d_; ++i) {
            const std::uint64_t x = a % p_, y = b % p_;
            r += ((subtract ? x + p_ - y : x + y) % p_) * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    Elem slow_mul(Elem a, Elem b) const {
        poly::Poly pa = digits(a), pb = digits(b);
        poly::trim(pa);
        poly::trim(pb);
        poly::Poly r = poly::rem(poly::mul(pa, pb, p_), modulus_, p_);
        r.resize(d_, 0);
        return from_digits(r);
    }

    Elem slow_pow(Elem a, std::uint64_t e) const {
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // Smallest index whose order is p^d - 1.
    Elem find_generator() const {
        if (order_ == 1) return 1;
        const auto factors = prime_factors(order_);
        for (Elem a = 1; a < size_; ++a) {
            bool primitive = true;
            for (auto r : factors)
                if (slow_pow(a, order_ / r) == 1) {
                    primitive = false;
                    break;
                }
            if (primitive) return a;
        }
        fail(ErrorKind::ReducibleModulus, "no primitive element found");
    }

    void build_tables() {
        exp_.assign(order_, 0);
        log_.assign(size_, kNoLog);
        Elem cur = 1;
        for (std::uint64_t i = 0; i < order_; ++i) {
            exp_[i] = cur;
            log_[cur] = i;
            cur = slow_mul(cur, generator_);
        }
        zech_.assign(order_, kNoLog);
        for (std::uint64_t i = 0; i < order_; ++i) {
            const Elem v = exp_[i];
            const std::uint64_t d0 = v % p_;
            const Elem w = v - d0 + (d0 + 1) % p_;
            zech_[i] = w == 0 ? kNoLog : log_[w];
        }
        if (size_ <= kFullTableLimit) {
            std::vector<std::uint32_t> at(size_ * size_), mt(size_ * size_);
            for (Elem a = 0; a < size_; ++a)
                for (Elem b = 0; b < size_; ++b) {
                    at[a * size_ + b] = static_cast<std::uint32_t>(add(a, b));
                    mt[a * size_ + b] = static_cast<std::uint32_t>(mul(a, b));
                }
            add_tab_ = std::move(at);
            mul_tab_ = std::move(mt);
        }
    }

    std::uint64_t p_;
    unsigned d_;
    poly::Poly modulus_;
    std::uint64_t size_ = 0, order_ = 0;
    std::vector<std::uint64_t> ppow_;
    Elem generator_ = 1;
    std::vector<std::uint64_t> exp_, log_, zech_;
    std::vector<std::uint32_t> add_tab_, mul_tab_;
};

} // namespace mrdkit

#endif // MRDKIT_GF_HPP
