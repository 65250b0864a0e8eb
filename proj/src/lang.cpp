#include "autjet/lang.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <optional>
#include <vector>

namespace autjet {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::syntax: return "syntax";
        case ParseErrorKind::unknown_variable: return "unknown-variable";
        case ParseErrorKind::self_referential_shear: return "self-referential-shear";
        case ParseErrorKind::singular_matrix: return "singular-matrix";
        case ParseErrorKind::dimension_mismatch: return "dimension-mismatch";
    }
    return "?";
}

ParseError::ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message)
    : Error(std::string(to_string(kind)) + " error at " + std::to_string(span.start) + ".." +
            std::to_string(span.end) + ": " + message),
      kind_(kind),
      span_(span),
      message_(message) {}

namespace {

constexpr unsigned kMaxExponent = 64;

enum class Tok { end, number, imaginary, variable, ident, lparen, rparen, comma, semicolon, dot, plus, minus, star, caret };

struct Token {
    Tok kind = Tok::end;
    SourceSpan span;
    std::string_view text;
    double value = 0.0;
    bool integral = false;
    std::size_t index = 0;  // 1-based variable index
};

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    const Token& peek() {
        if (!lookahead_) lookahead_ = scan();
        return *lookahead_;
    }

    Token next() {
        Token t = peek();
        lookahead_.reset();
        return t;
    }

    std::size_t size() const { return text_.size(); }

private:
    [[noreturn]] void fail(std::size_t start, std::size_t end, const std::string& msg) const {
        throw ParseError(ParseErrorKind::syntax, {start, end}, msg);
    }

    Token make(Tok kind, std::size_t start, std::size_t end) const {
        Token t;
        t.kind = kind;
        t.span = {start, end};
        t.text = text_.substr(start, end - start);
        return t;
    }

    Token scan() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        const std::size_t start = pos_;
        if (pos_ >= text_.size()) return make(Tok::end, start, start);

        const char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return scan_number(start);
        if (c == 'z' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))
            return scan_variable(start);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            Token t = make(Tok::ident, start, pos_);
            if (t.text == "i") {
                t.kind = Tok::imaginary;
                t.value = 1.0;
            } else if (t.text != "id" && t.text != "affine" && t.text != "shear") {
                fail(start, pos_, "unknown identifier '" + std::string(t.text) + "'");
            }
            return t;
        }

        ++pos_;
        switch (c) {
            case '(': return make(Tok::lparen, start, pos_);
            case ')': return make(Tok::rparen, start, pos_);
            case ',': return make(Tok::comma, start, pos_);
            case ';': return make(Tok::semicolon, start, pos_);
            case '.': return make(Tok::dot, start, pos_);
            case '+': return make(Tok::plus, start, pos_);
            case '-': return make(Tok::minus, start, pos_);
            case '*': return make(Tok::star, start, pos_);
            case '^': return make(Tok::caret, start, pos_);
            default: break;
        }
        // Cover the whole UTF-8 sequence of the offending character.
        while (pos_ < text_.size() && (static_cast<unsigned char>(text_[pos_]) & 0xC0) == 0x80) ++pos_;
        fail(start, pos_, "unexpected character");
    }

    bool digit_at(std::size_t p) const {
        return p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p]));
    }

    Token scan_number(std::size_t start) {
        bool integral = true;
        while (digit_at(pos_)) ++pos_;
        if (pos_ < text_.size() && text_[pos_] == '.' && digit_at(pos_ + 1)) {
            integral = false;
            ++pos_;
            while (digit_at(pos_)) ++pos_;
        }
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t p = pos_ + 1;
            if (p < text_.size() && (text_[p] == '+' || text_[p] == '-')) ++p;
            if (digit_at(p)) {
                integral = false;
                pos_ = p;
                while (digit_at(pos_)) ++pos_;
            }
        }
        const std::size_t number_end = pos_;
        double value = 0.0;
        const auto res = std::from_chars(text_.data() + start, text_.data() + number_end, value);
        if (res.ec != std::errc() || res.ptr != text_.data() + number_end)
            fail(start, number_end, "malformed number");

        Tok kind = Tok::number;
        if (pos_ < text_.size() && text_[pos_] == 'i' && !(pos_ + 1 < text_.size() && is_ident_char(text_[pos_ + 1]))) {
            kind = Tok::imaginary;
            ++pos_;
        }
        if (pos_ < text_.size() && is_ident_char(text_[pos_]) && !(kind == Tok::number && text_[pos_] == 'z'))
            fail(start, pos_ + 1, "malformed number");

        Token t = make(kind, start, pos_);
        t.value = value;
        t.integral = integral && kind == Tok::number;
        return t;
    }

    Token scan_variable(std::size_t start) {
        ++pos_;  // 'z'
        std::size_t index = 0;
        bool overflow = false;
        while (digit_at(pos_)) {
            const std::size_t d = static_cast<std::size_t>(text_[pos_] - '0');
            if (index > (static_cast<std::size_t>(-1) - d) / 10) overflow = true;
            else index = index * 10 + d;
            ++pos_;
        }
        if (pos_ < text_.size() && is_ident_char(text_[pos_])) {
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
            fail(start, pos_, "unknown identifier '" + std::string(text_.substr(start, pos_ - start)) + "'");
        }
        Token t = make(Tok::variable, start, pos_);
        t.index = overflow ? 0 : index;
        return t;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::optional<Token> lookahead_;
};

struct Expr {
    ComplexPolynomial poly;
    SourceSpan span;
};

struct Mention {
    std::size_t index;
    SourceSpan span;
};

class Parser {
public:
    Parser(std::string_view text, std::size_t n) : lex_(text), n_(n) {
        if (n == 0) throw DimensionError("parse: dimension must be positive");
    }

    AutomorphismWord word() {
        // Atoms are read left to right but applied right to left.
        std::vector<Generator> atoms;
        while (true) {
            if (auto g = atom()) atoms.push_back(std::move(*g));
            if (lex_.peek().kind != Tok::dot) break;
            lex_.next();
        }
        expect_end();
        AutomorphismWord w(n_);
        for (auto it = atoms.rbegin(); it != atoms.rend(); ++it) w.then(std::move(*it));
        return w;
    }

    Expr expression() {
        Expr lhs = term();
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            const bool minus = lex_.next().kind == Tok::minus;
            Expr rhs = term();
            if (minus) lhs.poly -= rhs.poly;
            else lhs.poly += rhs.poly;
            lhs.span.end = rhs.span.end;
        }
        return lhs;
    }

    Complex constant(const Expr& e) const {
        for (const auto& [exp, c] : e.poly.terms())
            if (total_degree(exp) > 0)
                throw ParseError(ParseErrorKind::syntax, e.span, "expected a constant");
        return e.poly.terms().empty() ? Complex(0.0) : e.poly.terms().begin()->second;
    }

    void expect_end() {
        const Token& t = lex_.peek();
        if (t.kind != Tok::end) syntax(t.span, "unexpected '" + std::string(t.text) + "'");
    }

    Lexer& lexer() { return lex_; }

private:
    [[noreturn]] static void syntax(SourceSpan span, const std::string& msg) {
        throw ParseError(ParseErrorKind::syntax, span, msg);
    }

    Token expect(Tok kind, const char* what) {
        const Token& t = lex_.peek();
        if (t.kind != kind) {
            syntax(t.span, std::string("expected ") + what +
                               (t.kind == Tok::end ? " at end of input" : ", found '" + std::string(t.text) + "'"));
        }
        return lex_.next();
    }

    std::optional<Generator> atom() {
        const Token& t = lex_.peek();
        if (t.kind != Tok::ident) {
            syntax(t.span, t.kind == Tok::end ? "expected 'id', 'affine(' or 'shear(' at end of input"
                                              : "expected 'id', 'affine(' or 'shear('");
        }
        const Token head = lex_.next();
        if (head.text == "id") return std::nullopt;
        if (head.text == "affine") return affine(head);
        return shear();
    }

    Generator affine(const Token& head) {
        expect(Tok::lparen, "'('");
        std::vector<std::vector<Expr>> groups(1);
        while (true) {
            groups.back().push_back(expression());
            const Token& sep = lex_.peek();
            if (sep.kind == Tok::comma) {
                lex_.next();
            } else if (sep.kind == Tok::semicolon) {
                lex_.next();
                groups.emplace_back();
            } else {
                break;
            }
        }
        const Token close = expect(Tok::rparen, "',', ';' or ')'");
        const SourceSpan span{head.span.start, close.span.end};

        bool shape_ok = groups.size() == n_ + 1;
        for (const auto& g : groups) shape_ok = shape_ok && g.size() == n_;
        if (!shape_ok) {
            throw ParseError(ParseErrorKind::dimension_mismatch, span,
                             "affine expects " + std::to_string(n_) + " rows of " + std::to_string(n_) +
                                 " entries followed by a translation of " + std::to_string(n_) + " entries");
        }

        const auto k = static_cast<Eigen::Index>(n_);
        CMatrix a(k, k);
        CVector b(k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j) a(i, j) = constant(groups[i][j]);
        for (Eigen::Index j = 0; j < k; ++j) b[j] = constant(groups[n_][j]);

        try {
            return Generator::affine(std::move(a), std::move(b));
        } catch (const InvalidGenerator& e) {
            throw ParseError(ParseErrorKind::singular_matrix, span, e.what());
        }
    }

    Generator shear() {
        expect(Tok::lparen, "'('");
        const Token idx = lex_.next();
        if (idx.kind != Tok::number || !idx.integral) syntax(idx.span, "expected a coordinate index");
        if (idx.value < 1.0 || idx.value > static_cast<double>(n_)) {
            throw ParseError(ParseErrorKind::unknown_variable, idx.span,
                             "shear coordinate must be in 1.." + std::to_string(n_));
        }
        const auto coordinate = static_cast<std::size_t>(idx.value) - 1;
        expect(Tok::comma, "','");

        mentions_.clear();
        Expr p = expression();
        expect(Tok::rparen, "')'");

        if (p.poly.depends_on(coordinate)) {
            SourceSpan where = p.span;
            for (const auto& m : mentions_) {
                if (m.index == coordinate) {
                    where = m.span;
                    break;
                }
            }
            throw ParseError(ParseErrorKind::self_referential_shear, where,
                             "shear of z" + std::to_string(coordinate + 1) + " cannot depend on z" +
                                 std::to_string(coordinate + 1));
        }
        return Generator::shear(coordinate, std::move(p.poly));
    }

    static bool starts_primary(Tok k) {
        return k == Tok::number || k == Tok::imaginary || k == Tok::variable || k == Tok::lparen;
    }

    Expr term() {
        Expr lhs = unary();
        while (true) {
            const Tok k = lex_.peek().kind;
            Expr rhs{ComplexPolynomial(n_), {}};
            if (k == Tok::star) {
                lex_.next();
                rhs = unary();
            } else if (starts_primary(k)) {
                rhs = power();
            } else {
                break;
            }
            lhs.poly = lhs.poly * rhs.poly;
            lhs.span.end = rhs.span.end;
        }
        return lhs;
    }

    Expr unary() {
        const Tok k = lex_.peek().kind;
        if (k == Tok::plus || k == Tok::minus) {
            const Token sign = lex_.next();
            Expr e = unary();
            if (k == Tok::minus) e.poly = -e.poly;
            e.span.start = sign.span.start;
            return e;
        }
        return power();
    }

    Expr power() {
        Expr base = primary();
        if (lex_.peek().kind != Tok::caret) return base;
        lex_.next();
        const Token exp = lex_.next();
        if (exp.kind != Tok::number || !exp.integral) syntax(exp.span, "expected a non-negative integer exponent");
        if (exp.value > kMaxExponent) syntax(exp.span, "exponent exceeds " + std::to_string(kMaxExponent));
        base.poly = base.poly.pow(static_cast<unsigned>(exp.value));
        base.span.end = exp.span.end;
        return base;
    }

    Expr primary() {
        const Token t = lex_.next();
        switch (t.kind) {
            case Tok::number:
                return {ComplexPolynomial::constant(n_, t.value), t.span};
            case Tok::imaginary:
                return {ComplexPolynomial::constant(n_, Complex(0.0, t.value)), t.span};
            case Tok::variable:
                if (t.index < 1 || t.index > n_) {
                    throw ParseError(ParseErrorKind::unknown_variable, t.span,
                                     "variable '" + std::string(t.text) + "' is outside z1..z" + std::to_string(n_));
                }
                mentions_.push_back({t.index - 1, t.span});
                return {ComplexPolynomial::variable(n_, t.index - 1), t.span};
            case Tok::lparen: {
                Expr inner = expression();
                const Token close = expect(Tok::rparen, "')'");
                inner.span = {t.span.start, close.span.end};
                return inner;
            }
            case Tok::end:
                syntax(t.span, "unexpected end of input");
            default:
                syntax(t.span, "unexpected '" + std::string(t.text) + "'");
        }
    }

    Lexer lex_;
    std::size_t n_;
    std::vector<Mention> mentions_;
};

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string monomial_text(const Exponent& e) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'z' + std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

AutomorphismWord parse_automorphism(std::string_view text, std::size_t n) { return Parser(text, n).word(); }

ComplexPolynomial parse_polynomial(std::string_view text, std::size_t n) {
    Parser p(text, n);
    Expr e = p.expression();
    p.expect_end();
    return std::move(e.poly);
}

CVector parse_point(std::string_view text, std::size_t n) {
    Parser p(text, n);
    std::vector<Complex> coords;
    SourceSpan span{0, 0};
    while (true) {
        Expr e = p.expression();
        if (coords.empty()) span.start = e.span.start;
        span.end = e.span.end;
        coords.push_back(p.constant(e));
        if (p.lexer().peek().kind != Tok::comma) break;
        p.lexer().next();
    }
    p.expect_end();
    if (coords.size() != n) {
        throw ParseError(ParseErrorKind::dimension_mismatch, span,
                         "expected " + std::to_string(n) + " coordinates, got " + std::to_string(coords.size()));
    }
    CVector z(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) z[static_cast<Eigen::Index>(i)] = coords[i];
    return z;
}

std::string format_complex(Complex c) {
    if (c.imag() == 0.0) return format_real(c.real());
    std::string im = format_real(std::abs(c.imag())) + "i";
    if (c.real() == 0.0) return "(" + std::string(c.imag() < 0 ? "-" : "") + im + ")";
    return "(" + format_real(c.real()) + (c.imag() < 0 ? "-" : "+") + im + ")";
}

std::string serialize(const ComplexPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        const std::string mono = monomial_text(e);
        if (c.imag() == 0.0) {
            const bool negative = c.real() < 0.0;
            const double mag = std::abs(c.real());
            std::string piece = (mag == 1.0 && !mono.empty()) ? mono
                                : mono.empty()                ? format_real(mag)
                                                              : format_real(mag) + "*" + mono;
            if (out.empty()) out = (negative ? "-" : "") + piece;
            else out += (negative ? " - " : " + ") + piece;
        } else {
            std::string piece = format_complex(c) + (mono.empty() ? "" : "*" + mono);
            out += (out.empty() ? "" : " + ") + piece;
        }
    }
    return out;
}

std::string serialize(const Generator& g) {
    if (const auto* s = g.as_shear())
        return "shear(" + std::to_string(s->coordinate + 1) + ", " + serialize(s->polynomial) + ")";
    const auto* a = g.as_affine();
    std::string out = "affine(";
    for (Eigen::Index i = 0; i < a->linear.rows(); ++i) {
        for (Eigen::Index j = 0; j < a->linear.cols(); ++j) {
            if (j > 0) out += ", ";
            out += format_complex(a->linear(i, j));
        }
        out += "; ";
    }
    for (Eigen::Index j = 0; j < a->translation.size(); ++j) {
        if (j > 0) out += ", ";
        out += format_complex(a->translation[j]);
    }
    return out + ")";
}

std::string serialize(const AutomorphismWord& w) {
    if (w.empty()) return "id";
    std::string out;
    const auto& gens = w.generators();
    for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
        if (!out.empty()) out += " . ";
        out += serialize(*it);
    }
    return out;
}

}  // namespace autjet
