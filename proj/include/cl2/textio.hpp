#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cl2/multivector.hpp"
#include "cl2/transcend.hpp"

namespace cl2 {

enum class ParseErrorKind { Lexical, Syntax, Domain, NonInvertible };

/// Raised for any failure while parsing or evaluating an expression.
/// `position` is the 0-based byte offset of the offending token.
struct ParseError : Error {
    std::size_t position;
    ParseErrorKind kind;

    ParseError(ParseErrorKind kind_, std::size_t position_, const std::string& message)
        : Error(message), position(position_), kind(kind_) {}
};

inline std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Lexical: return "lexical";
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::Domain: return "domain";
        case ParseErrorKind::NonInvertible: return "non-invertible";
    }
    return "?";
}

/// Shortest decimal string that parses back to exactly the same double.
inline std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

enum class Style { Human, Machine };

/// Human: nonzero terms only, in the order 1, e1, e2, e3, unit coefficients
/// elided ("1 - e3"); the zero element prints "0".  Machine: all four terms
/// with explicit "*", so that parse_eval(format_mv(a, Machine)) == a
/// bit-exactly.
inline std::string format_mv(const Multivector& a, Style style) {
    if (style == Style::Machine) {
        return format_double(a.s) + " + " + format_double(a.x1) + "*e1 + " +
               format_double(a.x2) + "*e2 + " + format_double(a.x3) + "*e3";
    }
    const double coef[4] = {a.s, a.x1, a.x2, a.x3};
    const char* name[4] = {"", "e1", "e2", "e3"};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (coef[i] == 0.0) continue;
        const bool first = out.empty();
        const bool negative = coef[i] < 0.0;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        const double mag = std::abs(coef[i]);
        if (i == 0) {
            out += format_double(mag);
        } else if (mag == 1.0) {
            out += name[i];
        } else {
            out += format_double(mag) + "*" + name[i];
        }
    }
    return out.empty() ? "0" : out;
}

namespace detail {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string_view text;
    double value = 0.0;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= src_.size()) return {Tok::End, start, {}};
        const char c = src_[pos_];
        switch (c) {
            case '+': ++pos_; return {Tok::Plus, start, src_.substr(start, 1)};
            case '-': ++pos_; return {Tok::Minus, start, src_.substr(start, 1)};
            case '*': ++pos_; return {Tok::Star, start, src_.substr(start, 1)};
            case '^': ++pos_; return {Tok::Caret, start, src_.substr(start, 1)};
            case '(': ++pos_; return {Tok::LParen, start, src_.substr(start, 1)};
            case ')': ++pos_; return {Tok::RParen, start, src_.substr(start, 1)};
            default: break;
        }
        if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
            return lex_number(start);
        }
        if (c >= 'a' && c <= 'z') {
            while (pos_ < src_.size() && ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
                                          is_digit(src_[pos_]))) {
                ++pos_;
            }
            return {Tok::Ident, start, src_.substr(start, pos_ - start)};
        }
        throw ParseError(ParseErrorKind::Lexical, start,
                         "unexpected character '" + std::string(1, c) + "'");
    }

private:
    static bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    Token lex_number(std::size_t start) {
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_++;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ < src_.size() && is_digit(src_[pos_])) {
                while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
            } else {
                pos_ = mark;  // bare 'e' belongs to whatever follows, not the number
            }
        }
        const std::string_view text = src_.substr(start, pos_ - start);
        double value = 0.0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
        if (res.ec != std::errc{} || res.ptr != text.data() + text.size() ||
            !std::isfinite(value)) {
            throw ParseError(ParseErrorKind::Lexical, start,
                             "invalid number literal '" + std::string(text) + "'");
        }
        return {Tok::Number, start, text, value};
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

/// Recursive-descent evaluator for the calculator grammar:
///
///   expr   := term (("+"|"-") term)*
///   term   := factor ("*" factor)*
///   factor := "-" factor | power
///   power  := atom ("^" intlit)?
///   atom   := number | basis | "(" expr ")" | func "(" expr ")"
///   basis  := "e1" | "e2" | "e3" | "e12"
///   func   := "conj" | "inv" | "exp" | "sqrt"
///
/// "^" binds tighter than a unary minus outside it, so -e3^2 is -(e3^2).
/// Note that "7e1" lexes as the number 70; a coefficient on a basis symbol
/// needs an explicit "*", as in "7*e1".
class Evaluator {
public:
    Evaluator(std::string_view src, const Tolerances& tol)
        : lexer_(src), tol_(tol), tok_(lexer_.next()) {}

    Multivector run() {
        const Multivector v = expr();
        expect_end();
        return v;
    }

private:
    static constexpr int max_depth = 256;

    [[noreturn]] void fail(ParseErrorKind kind, std::size_t pos, const std::string& msg) {
        throw ParseError(kind, pos, msg);
    }

    void advance() { tok_ = lexer_.next(); }

    void expect_end() {
        if (tok_.kind != Tok::End) {
            fail(ParseErrorKind::Syntax, tok_.pos, "unexpected trailing input");
        }
    }

    struct DepthGuard {
        explicit DepthGuard(Evaluator& e) : eval(e) {
            if (++eval.depth_ > max_depth) {
                throw ParseError(ParseErrorKind::Syntax, eval.tok_.pos,
                                 "expression nested too deeply");
            }
        }
        ~DepthGuard() { --eval.depth_; }
        Evaluator& eval;
    };

    Multivector expr() {
        DepthGuard guard(*this);
        Multivector acc = term();
        while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            const bool add = tok_.kind == Tok::Plus;
            advance();
            const Multivector rhs = term();
            acc = add ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    Multivector term() {
        DepthGuard guard(*this);
        Multivector acc = factor();
        while (tok_.kind == Tok::Star) {
            const std::size_t pos = tok_.pos;
            advance();
            const Multivector rhs = factor();
            try {
                acc = acc * rhs;
            } catch (const InvalidValueError& e) {
                fail(ParseErrorKind::Domain, pos, e.what());
            }
        }
        return acc;
    }

    Multivector factor() {
        DepthGuard guard(*this);
        if (tok_.kind == Tok::Minus) {
            advance();
            return -factor();
        }
        return power();
    }

    Multivector power() {
        DepthGuard guard(*this);
        const Multivector base = atom();
        if (tok_.kind != Tok::Caret) return base;
        const std::size_t caret_pos = tok_.pos;
        advance();
        long long exponent = exponent_literal();
        try {
            return pow_int(base, exponent, tol_);
        } catch (const NonInvertibleError& e) {
            fail(ParseErrorKind::NonInvertible, caret_pos, e.what());
        } catch (const Error& e) {
            fail(ParseErrorKind::Domain, caret_pos, e.what());
        }
    }

    long long exponent_literal() {
        bool negative = false;
        if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
            negative = tok_.kind == Tok::Minus;
            advance();
        }
        if (tok_.kind != Tok::Number) {
            fail(ParseErrorKind::Syntax, tok_.pos, "integer exponent expected after '^'");
        }
        for (const char c : tok_.text) {
            if (c < '0' || c > '9') {
                fail(ParseErrorKind::Syntax, tok_.pos, "integer exponent expected after '^'");
            }
        }
        long long value = 0;
        const auto res =
            std::from_chars(tok_.text.data(), tok_.text.data() + tok_.text.size(), value);
        if (res.ec != std::errc{}) {
            fail(ParseErrorKind::Syntax, tok_.pos, "exponent out of range");
        }
        advance();
        return negative ? -value : value;
    }

    Multivector atom() {
        DepthGuard guard(*this);
        switch (tok_.kind) {
            case Tok::Number: {
                const double v = tok_.value;
                advance();
                return v;
            }
            case Tok::LParen: {
                const std::size_t open_pos = tok_.pos;
                advance();
                const Multivector v = expr();
                if (tok_.kind != Tok::RParen) {
                    fail(ParseErrorKind::Syntax, tok_.pos,
                         "expected ')' to close '(' at offset " + std::to_string(open_pos));
                }
                advance();
                return v;
            }
            case Tok::Ident:
                return name();
            default:
                fail(ParseErrorKind::Syntax, tok_.pos, "expected a number, basis symbol, "
                                                       "function, or '('");
        }
    }

    Multivector name() {
        const std::string_view id = tok_.text;
        const std::size_t pos = tok_.pos;
        if (id == "e1") { advance(); return e1; }
        if (id == "e2") { advance(); return e2; }
        if (id == "e3" || id == "e12") { advance(); return e3; }
        if (id == "conj" || id == "inv" || id == "exp" || id == "sqrt") {
            advance();
            if (tok_.kind != Tok::LParen) {
                fail(ParseErrorKind::Syntax, tok_.pos,
                     "expected '(' after '" + std::string(id) + "'");
            }
            advance();
            const Multivector arg = expr();
            if (tok_.kind != Tok::RParen) {
                fail(ParseErrorKind::Syntax, tok_.pos, "expected ')'");
            }
            advance();
            return apply(id, pos, arg);
        }
        fail(ParseErrorKind::Lexical, pos, "unknown name '" + std::string(id) + "'");
    }

    Multivector apply(std::string_view func, std::size_t pos, const Multivector& arg) {
        try {
            if (func == "conj") return conj(arg);
            if (func == "inv") return inverse(arg, tol_);
            if (func == "exp") return cl2::exp(arg, tol_);
            // sqrt: single-valued, so only nonnegative (near-)scalars qualify;
            // multivalued roots go through nth_roots
            if (norm_sq(imag(arg)) > tol_.tau_class * norm_sq(arg)) {
                fail(ParseErrorKind::Domain, pos, "sqrt requires a scalar argument");
            }
            if (arg.s < 0.0) {
                fail(ParseErrorKind::Domain, pos, "sqrt requires a nonnegative argument");
            }
            return std::sqrt(arg.s);
        } catch (const ParseError&) {
            throw;
        } catch (const NonInvertibleError& e) {
            fail(ParseErrorKind::NonInvertible, pos, e.what());
        } catch (const Error& e) {
            fail(ParseErrorKind::Domain, pos, e.what());
        }
    }

    Lexer lexer_;
    Tolerances tol_;
    Token tok_;
    int depth_ = 0;
};

}  // namespace detail

/// Parses and evaluates a calculator expression (grammar documented on
/// detail::Evaluator).  Throws ParseError with the offending position.
inline Multivector parse_eval(std::string_view text, const Tolerances& tol = {}) {
    return detail::Evaluator(text, tol).run();
}

// ---------------------------------------------------------------------------
// JSON codec (schema "cl2/1")
//
// Multivector:  {"s": 1, "e1": 0, "e2": 0, "e3": -1}
// RootSet:      {"kind": "empty"}
//               {"kind": "finite", "roots": [<multivector>, ...]}
//               {"kind": "circular_family", "scale": s, "angles": [..]}
//               {"kind": "hyperbolic_unit_family", "scale": s}
//               {"kind": "null_cone"}
//               {"kind": "union", "parts": [<single-kind objects>, ...]}
// An optional top-level "note" string may accompany any root set.
// Round-trips are bit-exact; decoding rejects missing or unknown keys and
// non-finite numbers with DecodeError.
// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

inline json to_json(const Multivector& a) {
    json j;
    j["s"] = a.s;
    j["e1"] = a.x1;
    j["e2"] = a.x2;
    j["e3"] = a.x3;
    return j;
}

namespace detail {

inline double number_field(const json& j, const char* key) {
    if (!j.contains(key)) throw DecodeError(std::string("missing key \"") + key + "\"");
    const json& v = j.at(key);
    if (!v.is_number()) throw DecodeError(std::string("key \"") + key + "\" is not a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw DecodeError(std::string("key \"") + key + "\" is not finite");
    return d;
}

inline void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) throw DecodeError("unknown key \"" + item.key() + "\"");
    }
}

}  // namespace detail

inline Multivector multivector_from_json(const json& j) {
    if (!j.is_object()) throw DecodeError("multivector payload must be an object");
    detail::reject_unknown_keys(j, {"s", "e1", "e2", "e3"});
    return {detail::number_field(j, "s"), detail::number_field(j, "e1"),
            detail::number_field(j, "e2"), detail::number_field(j, "e3")};
}

namespace detail {

inline json part_to_json(const RootPart& part) {
    struct Encode {
        json operator()(const FiniteRoots& f) const {
            json j;
            j["kind"] = "finite";
            json roots = json::array();
            for (const Multivector& w : f.roots) roots.push_back(cl2::to_json(w));
            j["roots"] = std::move(roots);
            return j;
        }
        json operator()(const CircularFamily& f) const {
            json j;
            j["kind"] = "circular_family";
            j["scale"] = f.scale;
            j["angles"] = f.angles;
            return j;
        }
        json operator()(const HyperbolicUnitFamily& f) const {
            json j;
            j["kind"] = "hyperbolic_unit_family";
            j["scale"] = f.scale;
            return j;
        }
        json operator()(const NullCone&) const {
            json j;
            j["kind"] = "null_cone";
            return j;
        }
    };
    return std::visit(Encode{}, part);
}

inline RootPart part_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw DecodeError("root set part must be an object with a \"kind\" string");
    }
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        reject_unknown_keys(j, {"kind", "roots"});
        if (!j.contains("roots") || !j.at("roots").is_array()) {
            throw DecodeError("finite root set requires a \"roots\" array");
        }
        FiniteRoots out;
        for (const json& r : j.at("roots")) out.roots.push_back(multivector_from_json(r));
        return out;
    }
    if (kind == "circular_family") {
        reject_unknown_keys(j, {"kind", "scale", "angles"});
        CircularFamily out;
        out.scale = number_field(j, "scale");
        if (out.scale <= 0.0) throw DecodeError("family scale must be positive");
        if (!j.contains("angles") || !j.at("angles").is_array()) {
            throw DecodeError("circular family requires an \"angles\" array");
        }
        for (const json& v : j.at("angles")) {
            if (!v.is_number()) throw DecodeError("angles must be numbers");
            const double phi = v.get<double>();
            if (!std::isfinite(phi)) throw DecodeError("angles must be finite");
            out.angles.push_back(phi);
        }
        return out;
    }
    if (kind == "hyperbolic_unit_family") {
        reject_unknown_keys(j, {"kind", "scale"});
        HyperbolicUnitFamily out{number_field(j, "scale")};
        if (out.scale <= 0.0) throw DecodeError("family scale must be positive");
        return out;
    }
    if (kind == "null_cone") {
        reject_unknown_keys(j, {"kind"});
        return NullCone{};
    }
    throw DecodeError("unknown root set kind \"" + kind + "\"");
}

}  // namespace detail

inline json to_json(const RootSet& set) {
    json j;
    if (set.parts.empty()) {
        j["kind"] = "empty";
    } else if (set.parts.size() == 1) {
        j = detail::part_to_json(set.parts.front());
    } else {
        j["kind"] = "union";
        json parts = json::array();
        for (const RootPart& part : set.parts) parts.push_back(detail::part_to_json(part));
        j["parts"] = std::move(parts);
    }
    if (!set.note.empty()) j["note"] = set.note;
    return j;
}

inline RootSet rootset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
        throw DecodeError("root set payload must be an object with a \"kind\" string");
    }
    RootSet out;
    json body = j;
    if (body.contains("note")) {
        if (!body.at("note").is_string()) throw DecodeError("\"note\" must be a string");
        out.note = body.at("note").get<std::string>();
        body.erase("note");
    }
    const std::string kind = body.at("kind").get<std::string>();
    if (kind == "empty") {
        detail::reject_unknown_keys(body, {"kind"});
        return out;
    }
    if (kind == "union") {
        detail::reject_unknown_keys(body, {"kind", "parts"});
        if (!body.contains("parts") || !body.at("parts").is_array()) {
            throw DecodeError("union root set requires a \"parts\" array");
        }
        for (const json& part : body.at("parts")) {
            out.parts.push_back(detail::part_from_json(part));
        }
        if (out.parts.size() < 2) throw DecodeError("union root set requires >= 2 parts");
        return out;
    }
    out.parts.push_back(detail::part_from_json(body));
    return out;
}

inline std::string encode_json(const Multivector& a) { return to_json(a).dump(); }

inline std::string encode_json(const RootSet& set) { return to_json(set).dump(); }

inline Multivector decode_multivector(const std::string& text) {
    try {
        return multivector_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw DecodeError(e.what());
    }
}

inline RootSet decode_rootset(const std::string& text) {
    try {
        return rootset_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw DecodeError(e.what());
    }
}

}  // namespace cl2
