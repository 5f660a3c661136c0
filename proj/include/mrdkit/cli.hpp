#ifndef MRDKIT_CLI_HPP
#define MRDKIT_CLI_HPP

#include "mrdkit/acceptance.hpp"
#include "mrdkit/equivalence.hpp"
#include "mrdkit/text.hpp"

#include <fstream>
#include <iostream>

namespace mrdkit::cli {

enum Exit : int { kOk = 0, kViolated = 1, kGuarded = 2, kInputError = 3 };

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"field",  "construct",      "verify-mrd",    "rankdist",
                                                "dual",   "adjoint",        "equiv",         "support-filter",
                                                "automorphisms", "export", "probe", "selftest"};
    return names;
}

inline bool is_subcommand(const std::string& s) {
    const auto& v = subcommands();
    return std::find(v.begin(), v.end(), s) != v.end();
}

struct CommandSpec {
    std::string subcommand;
    std::map<std::string, std::string> options;
    std::set<std::string> flags;
    FieldPtr field;                          ///< field of the (first) code, or of `field`
    std::optional<FamilyParams> code;        ///< single-code subcommands
    std::optional<FamilyParams> left, right; ///< equiv, support-filter
    std::vector<Elem> anchors;               ///< export
};

namespace detail {

struct RawLine {
    std::size_t line;
    std::vector<text::Token> tokens;
};

inline const std::set<std::string> kCodeKeys{"family", "p", "e", "n", "k", "s", "h", "eta", "mod"};

inline std::set<std::string> allowed_keys(const std::string& sub) {
    if (sub == "field") return {"p", "e", "n", "mod"};
    if (sub == "equiv") return {"left", "right", "mode"};
    if (sub == "support-filter") return {"left", "right"};
    if (sub == "probe") return {"p", "m", "n", "l", "delta", "trials", "seed"};
    if (sub == "selftest") return {};
    auto keys = kCodeKeys;
    if (sub == "export") keys.insert("anchors");
    return keys;
}

inline std::set<std::string> allowed_flags(const std::string& sub) {
    if (sub == "equiv") return {"--extended", "--strict-rho"};
    if (sub == "automorphisms") return {"--extended"};
    return {"--extended"};
}

struct Violations {
    std::vector<std::string> items;
    void add(std::string s) { items.push_back(std::move(s)); }
    void raise() const {
        if (items.empty()) return;
        std::string msg;
        for (std::size_t i = 0; i < items.size(); ++i) msg += (i ? "; " : "") + items[i];
        throw Error(ErrorKind::ConstraintError, msg);
    }
};

// key=value map of a line, checking keys against `allowed`.
inline std::map<std::string, std::string> keyvals(const RawLine& l, std::size_t first,
                                                  const std::set<std::string>& allowed, std::set<std::string>* flags,
                                                  const std::set<std::string>& allowed_flags_) {
    std::map<std::string, std::string> kv;
    for (std::size_t i = first; i < l.tokens.size(); ++i) {
        const auto& t = l.tokens[i];
        if (t.key.empty()) {
            if (flags && allowed_flags_.count(t.value)) {
                flags->insert(t.value);
                continue;
            }
            throw text::parse_error(l.line, t.column, "unexpected word '" + t.value + "'");
        }
        if (!allowed.count(t.key)) throw text::parse_error(l.line, t.column, "unknown option '" + t.key + "'");
        if (kv.count(t.key)) throw text::parse_error(l.line, t.column, "duplicate option '" + t.key + "'");
        kv[t.key] = t.value;
    }
    return kv;
}

inline std::uint64_t need_uint(const std::map<std::string, std::string>& kv, const std::string& key,
                               std::size_t line, Violations& v, std::optional<std::uint64_t> dflt = std::nullopt) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (dflt) return *dflt;
        v.add("missing option " + key + " (line " + std::to_string(line) + ")");
        return 0;
    }
    const auto x = text::parse_uint(it->second);
    if (!x) throw text::parse_error(line, 1, "option " + key + " expects a non-negative integer, got '" + it->second + "'");
    return *x;
}

inline long long need_int(const std::map<std::string, std::string>& kv, const std::string& key, std::size_t line,
                          Violations& v, std::optional<long long> dflt = std::nullopt) {
    auto it = kv.find(key);
    if (it == kv.end()) {
        if (dflt) return *dflt;
        v.add("missing option " + key + " (line " + std::to_string(line) + ")");
        return 0;
    }
    const auto x = text::parse_int(it->second);
    if (!x) throw text::parse_error(line, 1, "option " + key + " expects an integer, got '" + it->second + "'");
    return *x;
}

// Validates a field description, collecting violations; returns the built field or null.
inline FieldPtr resolve_field(const std::map<std::string, std::string>& kv, std::size_t line,
                              const std::optional<poly::Poly>& fallback_mod, Violations& v) {
    const auto before = v.items.size();
    const auto p = need_uint(kv, "p", line, v);
    const auto e = need_uint(kv, "e", line, v, 1);
    const auto n = need_uint(kv, "n", line, v);
    if (v.items.size() != before) return nullptr;
    if (!is_prime(p)) v.add("p=" + std::to_string(p) + " is not prime");
    if (e < 1) v.add("e >= 1 violated");
    if (n < 1) v.add("n >= 1 violated");
    if (e * n > FieldCtx::kMaxDegree) v.add("extension degree e*n <= 32 violated");
    std::optional<poly::Poly> mod = fallback_mod;
    if (auto it = kv.find("mod"); it != kv.end()) {
        try {
            mod = text::parse_modulus(it->second);
        } catch (const Error&) {
            throw text::parse_error(line, 1, "malformed modulus '" + it->second + "'");
        }
    }
    if (mod && mod->size() != e * n + 1)
        v.add("modulus must have degree e*n = " + std::to_string(e * n));
    if (v.items.size() != before) return nullptr;
    try {
        return FieldCtx::build(p, static_cast<unsigned>(e), static_cast<unsigned>(n), mod);
    } catch (const Error& err) {
        v.add(err.what());
        return nullptr;
    }
}

inline std::optional<FamilyParams> resolve_code(const std::map<std::string, std::string>& kv, std::size_t line,
                                                const std::optional<text::FieldSpec>& field_line, Violations& v,
                                                FieldPtr* field_out) {
    const auto before = v.items.size();
    std::optional<poly::Poly> fallback;
    if (field_line && kv.count("p") && kv.count("n")) {
        const auto p = text::parse_uint(kv.at("p"));
        const auto n = text::parse_uint(kv.at("n"));
        const auto e = kv.count("e") ? text::parse_uint(kv.at("e")) : std::optional<std::uint64_t>(1);
        if (p && n && e && *p == field_line->p && *n == field_line->n && *e == field_line->e)
            fallback = field_line->modulus;
    }
    auto famit = kv.find("family");
    Family fam = Family::Twisted;
    if (famit == kv.end()) {
        v.add("missing option family (line " + std::to_string(line) + ")");
    } else if (famit->second == "gg") {
        fam = Family::Gabidulin;
    } else if (famit->second != "gtg") {
        v.add("family must be gg or gtg, got '" + famit->second + "'");
    }
    auto ctx = resolve_field(kv, line, fallback, v);
    const auto k = need_uint(kv, "k", line, v);
    const auto s = need_int(kv, "s", line, v);
    const auto h = need_int(kv, "h", line, v, 0);
    if (fam == Family::Gabidulin && (kv.count("eta") || kv.count("h")))
        v.add("family gg takes no h or eta");
    if (!ctx) return std::nullopt;
    const unsigned n = ctx->n();
    if (k < 1 || k >= n) v.add("1 <= k < n violated (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    if (std::gcd(static_cast<long long>(n), s < 0 ? -s : s) != 1)
        v.add("gcd(s,n)=1 violated (s=" + std::to_string(s) + ", n=" + std::to_string(n) + ")");
    Elem eta = 0;
    if (auto it = kv.find("eta"); it != kv.end()) {
        try {
            eta = text::parse_elem(*ctx, it->second);
        } catch (const Error& err) {
            v.add(std::string("eta: ") + err.what());
        }
    }
    if (v.items.size() != before) return std::nullopt;
    if (field_out && !*field_out) *field_out = ctx;
    if (fam == Family::Gabidulin) return FamilyParams::gabidulin(ctx, static_cast<unsigned>(k), s);
    return FamilyParams::twisted(ctx, static_cast<unsigned>(k), s, h, eta);
}

inline std::vector<RawLine> split_lines(const std::vector<std::string>& lines) {
    std::vector<RawLine> out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string_view s = lines[i];
        std::size_t a = 0;
        while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
        if (a == s.size() || s[a] == '#') continue;
        auto toks = text::tokenize(s, i + 1);
        out.push_back({i + 1, std::move(toks)});
    }
    return out;
}

} // namespace detail

/// Parses and validates a spec. Lines: an optional command line, optional
/// `field` and `code` lines, `lp` listings (ignored) and # comments. Without
/// a command line a spec holding a code line means `construct`.
inline CommandSpec parse_spec(const std::vector<std::string>& lines) {
    using namespace detail;
    const auto raw = split_lines(lines);
    std::optional<RawLine> command;
    std::optional<RawLine> field_line;
    std::vector<RawLine> code_lines;
    for (const auto& l : raw) {
        const auto& head = l.tokens.front();
        if (!head.key.empty()) throw text::parse_error(l.line, head.column, "line must start with a keyword");
        if (head.value == "field") {
            if (field_line) throw text::parse_error(l.line, 1, "more than one field line");
            field_line = l;
        } else if (head.value == "code") {
            code_lines.push_back(l);
        } else if (head.value == "lp") {
            continue;
        } else if (is_subcommand(head.value)) {
            if (command) throw text::parse_error(l.line, 1, "more than one command line");
            command = l;
        } else {
            throw text::parse_error(l.line, head.column, "unknown line kind '" + head.value + "'");
        }
    }
    CommandSpec spec;
    if (command) spec.subcommand = command->tokens.front().value;
    else if (!code_lines.empty()) spec.subcommand = "construct";
    else if (field_line) spec.subcommand = "field";
    else throw text::parse_error(1, 1, "no command given");

    Violations v;
    std::optional<text::FieldSpec> fspec;
    std::map<std::string, std::string> field_kv;
    if (field_line) {
        field_kv = keyvals(*field_line, 1, {"p", "e", "n", "mod"}, nullptr, {});
        auto ctx = resolve_field(field_kv, field_line->line, std::nullopt, v);
        if (ctx) fspec = text::FieldSpec{ctx->p(), ctx->e(), ctx->n(), ctx->modulus()};
    }
    if (command)
        spec.options = keyvals(*command, 1, allowed_keys(spec.subcommand), &spec.flags, allowed_flags(spec.subcommand));

    const auto& sub = spec.subcommand;
    auto code_from_lines = [&](std::size_t idx) -> std::optional<FamilyParams> {
        const auto& l = code_lines.at(idx);
        const auto kv = keyvals(l, 1, kCodeKeys, nullptr, {});
        return resolve_code(kv, l.line, fspec, v, &spec.field);
    };

    if (sub == "field") {
        if (command && !spec.options.empty()) {
            spec.field = resolve_field(spec.options, command->line, fspec ? fspec->modulus : std::nullopt, v);
        } else if (field_line) {
            spec.field = resolve_field(field_kv, field_line->line, std::nullopt, v);
        } else {
            v.add("field needs p, e, n");
        }
    } else if (sub == "equiv" || sub == "support-filter") {
        const std::size_t line = command ? command->line : 1;
        auto side = [&](const std::string& key, std::size_t idx) -> std::optional<FamilyParams> {
            if (spec.options.count(key)) {
                RawLine inner{line, text::tokenize(spec.options.at(key), line)};
                if (!inner.tokens.empty() && inner.tokens.front().key.empty() && inner.tokens.front().value == "code")
                    inner.tokens.erase(inner.tokens.begin());
                const auto kv = keyvals(inner, 0, kCodeKeys, nullptr, {});
                return resolve_code(kv, line, fspec, v, &spec.field);
            }
            if (code_lines.size() > idx) return code_from_lines(idx);
            v.add("missing " + key + " code");
            return std::nullopt;
        };
        spec.left = side("left", 0);
        spec.right = side("right", spec.options.count("left") ? 0 : 1);
        if (spec.left && spec.right && !spec.left->ctx->same_as(*spec.right->ctx))
            v.add("left and right codes must live in the same field");
        if (auto it = spec.options.find("mode"); it != spec.options.end()) {
            static const std::set<std::string> modes{"monomial", "filter", "oracle", "auto"};
            if (!modes.count(it->second)) v.add("mode must be monomial, filter, oracle or auto");
        }
    } else if (sub == "probe") {
        const std::size_t line = command->line;
        need_uint(spec.options, "p", line, v);
        need_uint(spec.options, "m", line, v);
        need_uint(spec.options, "n", line, v);
        need_uint(spec.options, "l", line, v);
        need_uint(spec.options, "delta", line, v);
        need_uint(spec.options, "trials", line, v);
        need_uint(spec.options, "seed", line, v);
        if (v.items.empty()) {
            const auto m = std::stoull(spec.options.at("m")), n = std::stoull(spec.options.at("n"));
            if (!is_prime(std::stoull(spec.options.at("p")))) v.add("p is not prime");
            if (std::gcd(m, n) != 1) v.add("gcd(m,n)=1 violated");
            if (std::stoull(spec.options.at("delta")) > std::stoull(spec.options.at("l"))) v.add("delta <= l violated");
            if (m * n > FieldCtx::kMaxDegree) v.add("extension degree m*n <= 32 violated");
        }
    } else if (sub == "selftest") {
        // no options
    } else {
        std::map<std::string, std::string> inline_kv = spec.options;
        inline_kv.erase("anchors");
        if (!inline_kv.empty()) {
            spec.code = resolve_code(inline_kv, command->line, fspec, v, &spec.field);
        } else if (!code_lines.empty()) {
            if (code_lines.size() > 1) v.add(sub + " takes exactly one code");
            spec.code = code_from_lines(0);
        } else {
            v.add(sub + " needs a code (inline options or a code line)");
        }
        if (sub == "export") {
            auto it = spec.options.find("anchors");
            if (it == spec.options.end()) {
                v.add("export needs anchors=<elem>,<elem>,...");
            } else if (spec.field) {
                for (const auto& part : text::split(it->second, ',')) {
                    try {
                        spec.anchors.push_back(text::parse_elem(*spec.field, part));
                    } catch (const Error& err) {
                        v.add(std::string("anchors: ") + err.what());
                    }
                }
                if (v.items.empty()) {
                    try {
                        check_anchors(*spec.field, spec.anchors);
                    } catch (const Error& err) {
                        v.add(err.what());
                    }
                }
            }
        }
    }
    v.raise();
    return spec;
}

struct Report {
    std::vector<std::string> lines;
    int status = kOk;

    std::string str() const {
        std::string s;
        for (const auto& l : lines) s += l + "\n";
        return s;
    }
};

namespace detail {

inline std::string witness_text(const MonomialWitness& w) {
    return "c=" + text::format_elem(w.c) + " d=" + text::format_elem(w.d) + " r=" + std::to_string(w.r) +
           " rho=" + std::to_string(w.rho) + " shift=" + std::to_string(w.shift);
}

inline std::string witness_text(const EquivWitness& w) {
    return "L1=" + text::format_lp(w.L1) + " L2=" + text::format_lp(w.L2) + " rho=" + std::to_string(w.rho);
}

inline std::string candidates_text(const std::vector<SupportSet>& c) {
    std::string s = "candidates";
    for (const auto& A : c) s += " " + text::format_set(A);
    return s;
}

inline void header(Report& rep, const FamilyParams& p) {
    rep.lines.push_back(text::format_field(*p.ctx));
    rep.lines.push_back(text::format_code(p));
}

inline void listing(Report& rep, const LinCode& code) {
    for (const auto& f : code.basis()) rep.lines.push_back(text::format_lp(f));
}

inline constexpr std::uint64_t kExtendedGuard = std::uint64_t{1} << 34;

} // namespace detail

inline Report run(const CommandSpec& spec) {
    using namespace detail;
    Report rep;
    const bool extended = spec.flags.count("--extended") > 0;
    const std::uint64_t guard = extended ? kExtendedGuard : kDefaultGuard;
    const auto& sub = spec.subcommand;

    if (sub == "field") {
        const auto& F = *spec.field;
        rep.lines.push_back(text::format_field(F));
        rep.lines.push_back("# generator = " + text::format_elem(F.generator()));
        rep.lines.push_back("# q = " + std::to_string(F.q()) + ", q^n = " + std::to_string(F.size()));
        std::string b = "# basis =";
        for (auto x : F.basis()) b += " " + text::format_elem(x);
        rep.lines.push_back(b);
        return rep;
    }
    if (sub == "construct") {
        const auto& p = *spec.code;
        const auto code = construct(p);
        header(rep, p);
        rep.lines.push_back("# dim = " + std::to_string(code.dim()));
        rep.lines.push_back(std::string("# norm condition: ") + (norm_condition(p) ? "true" : "false"));
        listing(rep, code);
        return rep;
    }
    if (sub == "verify-mrd") {
        const auto& p = *spec.code;
        header(rep, p);
        const auto r = is_mrd(construct(p), guard);
        rep.lines.push_back(std::string("MRD: ") + (r.mrd ? "true" : "false") + ", d = " + std::to_string(r.min_dist));
        rep.status = r.mrd ? kOk : kViolated;
        return rep;
    }
    if (sub == "rankdist") {
        const auto& p = *spec.code;
        header(rep, p);
        for (const auto& [r, c] : rank_distribution(construct(p), guard))
            rep.lines.push_back("rank " + std::to_string(r) + ": " + std::to_string(c));
        return rep;
    }
    if (sub == "dual" || sub == "adjoint") {
        const auto& p = *spec.code;
        const auto code = construct(p);
        header(rep, p);
        const bool dual = sub == "dual";
        const auto out = dual ? delsarte_dual(code) : adjoint_code(code);
        rep.lines.push_back("# " + sub + " dim = " + std::to_string(out.dim()));
        if (dual)
            rep.lines.push_back(std::string("# closed form agrees: ") +
                                (same_span(out, dual_closed_form(p)) ? "true" : "false"));
        const auto partner = dual ? dual_partner(p) : adjoint_partner(p);
        rep.lines.push_back("# partner " + text::format_code(partner));
        listing(rep, out);
        return rep;
    }
    if (sub == "equiv" || sub == "support-filter") {
        const auto& a = *spec.left;
        const auto& b = *spec.right;
        rep.lines.push_back(text::format_field(*a.ctx));
        rep.lines.push_back("# left " + text::format_code(a));
        rep.lines.push_back("# right " + text::format_code(b));
        std::string mode = sub == "support-filter" ? "filter" : "auto";
        if (auto it = spec.options.find("mode"); it != spec.options.end()) mode = it->second;
        SearchOptions so;
        so.strict_rho = spec.flags.count("--strict-rho") > 0;
        OracleOptions oo;
        oo.strict_rho = so.strict_rho;
        oo.budget = extended ? kExtendedBudget : oo.budget;
        const auto c1 = construct(a), c2 = construct(b);
        if (mode == "monomial" || mode == "auto") {
            if (auto w = monomial_search(c1, c2, so)) {
                rep.lines.push_back("EQUIVALENT(" + witness_text(*w) + ")");
                return rep;
            }
            if (mode == "monomial") {
                rep.lines.push_back("INCONCLUSIVE(no monomial witness)");
                return rep;
            }
        }
        FilterVerdict fv;
        if (mode == "filter" || mode == "auto") {
            fv = support_filter(a, b);
            if (fv.inequivalent) {
                rep.lines.push_back("INEQUIVALENT(filter-proof)");
                return rep;
            }
            if (mode == "filter") {
                rep.lines.push_back("INCONCLUSIVE(" + candidates_text(fv.candidates) + ")");
                return rep;
            }
        }
        const auto gl = gl_order(a.ctx->n(), a.ctx->q());
        if (mode == "auto" && !(gl && *gl <= oo.budget)) {
            rep.lines.push_back("INCONCLUSIVE(" + candidates_text(fv.candidates) + ")");
            return rep;
        }
        if (auto w = exhaustive_oracle(c1, c2, oo)) rep.lines.push_back("EQUIVALENT(" + witness_text(*w) + ")");
        else rep.lines.push_back("INEQUIVALENT(oracle-exhausted)");
        return rep;
    }
    if (sub == "automorphisms") {
        const auto& p = *spec.code;
        header(rep, p);
        const auto autos = monomial_automorphisms(construct(p));
        rep.lines.push_back("# monomial automorphisms = " + std::to_string(autos.size()));
        for (const auto& w : autos) rep.lines.push_back(witness_text(w));
        return rep;
    }
    if (sub == "export") {
        const auto& p = *spec.code;
        header(rep, p);
        std::string a = "anchors";
        for (std::size_t i = 0; i < spec.anchors.size(); ++i) a += (i ? "," : " ") + text::format_elem(spec.anchors[i]);
        rep.lines.push_back(a);
        matrix_export(construct(p), spec.anchors, [&](const MatrixGFq& m) {
            rep.lines.emplace_back();
            for (std::size_t i = 0; i < m.rows; ++i) {
                std::string row;
                for (std::size_t j = 0; j < m.cols; ++j) row += (j ? " " : "") + std::to_string(m(i, j));
                rep.lines.push_back(row);
            }
        }, guard);
        return rep;
    }
    if (sub == "probe") {
        auto get = [&](const char* k) { return std::stoull(spec.options.at(k)); };
        const auto r = restriction_probe(get("p"), static_cast<unsigned>(get("m")), static_cast<unsigned>(get("n")),
                                         static_cast<unsigned>(get("l")), static_cast<unsigned>(get("delta")),
                                         static_cast<unsigned>(get("trials")), get("seed"));
        rep.lines.push_back("max intersection dim = " + std::to_string(r.max_dim) + " (trials " +
                            std::to_string(r.trials) + ", delta " + std::to_string(r.delta) + ")");
        rep.lines.push_back(r.pass() ? "PASS" : "FAIL");
        rep.status = r.pass() ? kOk : kViolated;
        return rep;
    }
    if (sub == "selftest") {
        bool ok = true;
        acceptance::run_all(extended, [&](const acceptance::Outcome& o) {
            rep.lines.push_back(acceptance::format(o));
            ok = ok && (o.skipped || o.pass);
        });
        rep.status = ok ? kOk : kViolated;
        return rep;
    }
    fail(ErrorKind::ParseError, "unknown subcommand " + sub);
}

inline int exit_code_for(ErrorKind k) {
    switch (k) {
    case ErrorKind::TooLarge:
    case ErrorKind::BudgetExceeded:
    case ErrorKind::NoFullRankWord: return kGuarded;
    default: return kInputError;
    }
}

/// argv-level entry point. `spec=<file|inline>` appends file lines (or the
/// inline text as a code line) to the command.
inline int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    if (argc < 2) {
        err << "usage: mrdkit <subcommand> [key=value ...] [--extended]\n  subcommands:";
        for (const auto& s : subcommands()) err << ' ' << s;
        err << "\n";
        return kInputError;
    }
    std::string cmd = argv[1];
    std::vector<std::string> extra;
    for (int i = 2; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("spec=", 0) == 0) {
            const auto val = a.substr(5);
            std::ifstream in(val);
            if (in) {
                for (std::string line; std::getline(in, line);) extra.push_back(line);
            } else {
                extra.push_back(val.rfind("code ", 0) == 0 || val.rfind("field ", 0) == 0 ? val : "code " + val);
            }
            continue;
        }
        const auto eq = a.find('=');
        if (eq != std::string::npos && a.find_first_of(" \t", eq) != std::string::npos)
            a = a.substr(0, eq + 1) + "\"" + a.substr(eq + 1) + "\"";
        cmd += " " + a;
    }
    std::vector<std::string> lines{cmd};
    lines.insert(lines.end(), extra.begin(), extra.end());
    try {
        const auto spec = parse_spec(lines);
        const auto rep = run(spec);
        out << rep.str();
        return rep.status;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace mrdkit::cli

#endif // MRDKIT_CLI_HPP
