#ifndef MRDKIT_TEXT_HPP
#define MRDKIT_TEXT_HPP

// Line formats:
//   field p=<int> e=<int> n=<int> [mod=c0,c1,...,cd]
//   code family=<gg|gtg> p= e= n= k= s= [h=] [eta=<elem>] [mod=...]
//   lp <elem>,<elem>,...            (n literals, X^(q^i) coefficient first)
// Element literals are idx:<int> or gen^<int>.

#include "mrdkit/codes.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>

namespace mrdkit::text {

struct Token {
    std::string key;   ///< empty for bare words
    std::string value; ///< the word itself for bare words
    std::size_t column = 0; ///< 1-based
};

inline Error parse_error(std::size_t line, std::size_t col, const std::string& what) {
    return Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

/// Whitespace-separated words; double quotes group (and are stripped).
inline std::vector<Token> tokenize(std::string_view s, std::size_t line = 1) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size()) break;
        Token t;
        t.column = i + 1;
        std::string word;
        bool quoted = false;
        while (i < s.size() && (quoted || !std::isspace(static_cast<unsigned char>(s[i])))) {
            if (s[i] == '"') {
                quoted = !quoted;
                ++i;
                continue;
            }
            word += s[i++];
        }
        if (quoted) throw parse_error(line, t.column, "unterminated quote");
        const auto eq = word.find('=');
        if (eq != std::string::npos && eq > 0 && word.rfind("--", 0) != 0) {
            t.key = word.substr(0, eq);
            t.value = word.substr(eq + 1);
        } else {
            t.value = word;
        }
        out.push_back(std::move(t));
    }
    return out;
}

inline std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    if (s.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::optional<long long> parse_int(std::string_view s) {
    long long v = 0;
    if (s.empty()) return std::nullopt;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// -- elements ------------------------------------------------------------------

inline std::string format_elem(Elem a) { return "idx:" + std::to_string(a); }

/// Throws BadParams on malformed or out-of-range literals.
inline Elem parse_elem(const FieldCtx& F, std::string_view s) {
    if (s.rfind("idx:", 0) == 0) {
        const auto v = parse_uint(s.substr(4));
        require(v.has_value(), ErrorKind::BadParams, "malformed element literal '" + std::string(s) + "'");
        require(*v < F.size(), ErrorKind::BadParams, "element index " + std::to_string(*v) + " out of range");
        return *v;
    }
    if (s.rfind("gen^", 0) == 0) {
        const auto v = parse_uint(s.substr(4));
        require(v.has_value(), ErrorKind::BadParams, "malformed element literal '" + std::string(s) + "'");
        return F.pow(F.generator(), *v % F.gf().order());
    }
    fail(ErrorKind::BadParams, "element literal must be idx:<int> or gen^<int>, got '" + std::string(s) + "'");
}

// -- fields --------------------------------------------------------------------

struct FieldSpec {
    std::uint64_t p = 0;
    unsigned e = 1;
    unsigned n = 0;
    std::optional<poly::Poly> modulus;
};

inline std::string format_modulus(const poly::Poly& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

inline std::string format_field(const FieldCtx& F) {
    return "field p=" + std::to_string(F.p()) + " e=" + std::to_string(F.e()) + " n=" + std::to_string(F.n()) +
           " mod=" + format_modulus(F.modulus());
}

inline poly::Poly parse_modulus(std::string_view s) {
    poly::Poly m;
    for (const auto& part : split(s, ',')) {
        const auto v = parse_uint(part);
        require(v.has_value(), ErrorKind::BadParams, "malformed modulus digit '" + part + "'");
        m.push_back(*v);
    }
    return m;
}

inline FieldPtr build(const FieldSpec& fs) { return FieldCtx::build(fs.p, fs.e, fs.n, fs.modulus); }

// -- q-polynomials ------------------------------------------------------------------

inline std::string format_lp(const LinPoly& f) {
    std::string s = "lp ";
    for (unsigned i = 0; i < f.n(); ++i) {
        if (i) s += ',';
        s += format_elem(f[i]);
    }
    return s;
}

inline LinPoly parse_lp(const FieldPtr& ctx, std::string_view line) {
    auto body = line;
    if (body.rfind("lp ", 0) == 0) body.remove_prefix(3);
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
    std::vector<Elem> c;
    for (const auto& part : split(body, ',')) c.push_back(parse_elem(*ctx, part));
    require(c.size() == ctx->n(), ErrorKind::DegreeMismatch, "lp needs exactly n coefficients");
    return LinPoly(ctx, std::move(c));
}

// -- code specs -------------------------------------------------------------------

inline std::string format_code(const FamilyParams& p) {
    const auto& F = *p.ctx;
    std::string s = "code family=" + std::string(family_name(p.family)) + " p=" + std::to_string(F.p()) +
                    " e=" + std::to_string(F.e()) + " n=" + std::to_string(F.n()) + " k=" + std::to_string(p.k) +
                    " s=" + std::to_string(p.s);
    if (p.family == Family::Twisted) s += " h=" + std::to_string(p.h) + " eta=" + format_elem(p.eta);
    return s;
}

inline std::string format_set(const std::set<unsigned>& s) {
    std::string out = "{";
    bool first = true;
    for (auto x : s) {
        if (!first) out += ',';
        out += std::to_string(x);
        first = false;
    }
    return out + "}";
}

} // namespace mrdkit::text

#endif // MRDKIT_TEXT_HPP
