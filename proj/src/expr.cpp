#include "skein/expr.hpp"

#include <cctype>
#include <string>
#include <variant>

#include "skein/series_ops.hpp"

namespace skein {

namespace {

template <class Element>
struct AlgebraTraits;

template <>
struct AlgebraTraits<SkeinElement> {
    static constexpr std::string_view generator_name = "P";
    static constexpr std::string_view wrong_generator = "X";
    static constexpr std::string_view hint =
        "X[i,j] is a quantum-torus generator; use P[i,j] in the torus-skein algebra";
};

template <>
struct AlgebraTraits<QTSeries> {
    static constexpr std::string_view generator_name = "X";
    static constexpr std::string_view wrong_generator = "P";
    static constexpr std::string_view hint =
        "P[i,j] is a torus-skein generator; use X[i,j] in the quantum torus";
};

template <class Element>
class ExprParser {
    using Value = std::variant<Scalar, Element>;

public:
    ExprParser(std::string_view text, int max_degree)
        : text_(text), cutoff_(max_degree) {}

    Element parse() {
        Value v = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return promote(std::move(v));
    }

private:
    Element promote(Value v) {
        if (auto* e = std::get_if<Element>(&v)) return std::move(*e);
        return Element::constant(std::get<Scalar>(v), cutoff_);
    }

    Value expression() {
        Value v = term();
        while (true) {
            skip_ws();
            if (consume('+')) {
                v = add(std::move(v), term(), false);
            } else if (consume('-')) {
                v = add(std::move(v), term(), true);
            } else {
                return v;
            }
        }
    }

    Value add(Value a, Value b, bool subtract) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b)) {
            const Scalar& x = std::get<Scalar>(a);
            const Scalar& y = std::get<Scalar>(b);
            return subtract ? x - y : x + y;
        }
        Element x = promote(std::move(a)), y = promote(std::move(b));
        return subtract ? x - y : x + y;
    }

    Value term() {
        Value v = factor();
        while (true) {
            skip_ws();
            if (consume('*')) {
                v = mul(std::move(v), factor());
            } else if (consume('/')) {
                std::size_t at = pos_;
                Value d = factor();
                if (std::holds_alternative<Element>(d))
                    fail_at(at, "cannot divide by an algebra element");
                const Scalar& s = std::get<Scalar>(d);
                if (s.is_zero()) fail_at(at, "division by zero");
                v = mul(std::move(v), Value(s.inv()));
            } else {
                return v;
            }
        }
    }

    Value mul(Value a, Value b) {
        if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
            return std::get<Scalar>(a) * std::get<Scalar>(b);
        if (std::holds_alternative<Scalar>(a))
            return std::get<Element>(b).scaled(std::get<Scalar>(a));
        if (std::holds_alternative<Scalar>(b))
            return std::get<Element>(a).scaled(std::get<Scalar>(b));
        return std::get<Element>(a) * std::get<Element>(b);
    }

    Value factor() {
        skip_ws();
        if (consume('-')) {
            Value v = factor();
            if (auto* s = std::get_if<Scalar>(&v)) return -*s;
            return -std::get<Element>(v);
        }
        if (consume('+')) return factor();
        Value v = atom();
        skip_ws();
        if (consume('^')) {
            std::size_t at = pos_;
            long e = integer("exponent");
            if (auto* s = std::get_if<Scalar>(&v)) {
                Scalar base = *s;
                if (e < 0) {
                    if (base.is_zero()) fail_at(at, "zero raised to a negative power");
                    base = base.inv();
                    e = -e;
                }
                Scalar r(1);
                for (; e > 0; e >>= 1) {
                    if (e & 1) r = r * base;
                    if (e > 1) base = base * base;
                }
                return r;
            }
            if (e < 0) fail_at(at, "negative powers of algebra elements are not supported");
            Element base = std::get<Element>(v);
            Element r = Element::unit(cutoff_);
            for (; e > 0; e >>= 1) {
                if (e & 1) r = r * base;
                if (e > 1) base = base * base;
            }
            return r;
        }
        return v;
    }

    Value atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = expression();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Value(Scalar(mpz_class(digits())));
        if (c == 's' && !std::isalpha(peek_next())) {
            ++pos_;
            return Value(Scalar::s_power(1));
        }
        if (c == 'q' && !std::isalpha(peek_next())) {
            ++pos_;
            return Value(Scalar::s_power(2));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) return named_atom();
        fail("expected a number, scalar symbol, generator or '('");
    }

    Value named_atom() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        Vec2 v = vector_suffix();
        using Traits = AlgebraTraits<Element>;
        if (name == Traits::generator_name) {
            if (is_zero(v)) fail_at(start, "the zero vector is not a generator");
            if (!in_first_quadrant(v))
                fail_at(start, "generators must lie in the closed first quadrant");
            return Element::generator(v, cutoff_);
        }
        if (name == Traits::wrong_generator) fail_at(start, std::string(Traits::hint));
        if (name == "Q" || name == "Qinv") {
            if (!in_first_quadrant(v) || delta_degree(v) < 1)
                fail_at(start,
                        "Q requires a direction with positive delta degree in the closed "
                        "first quadrant");
            return dilog_series<Element>(v, *cutoff_, name == "Qinv");
        }
        fail_at(start, "unknown symbol '" + std::string(name) + "'");
    }

    Vec2 vector_suffix() {
        skip_ws();
        if (!consume('[')) fail("expected '[' after generator symbol");
        long i = integer("vector component");
        skip_ws();
        if (!consume(',')) fail("expected ','");
        long j = integer("vector component");
        skip_ws();
        if (!consume(']')) fail("expected ']'");
        return {static_cast<int>(i), static_cast<int>(j)};
    }

    long integer(const char* what) {
        skip_ws();
        bool neg = false;
        if (consume('-'))
            neg = true;
        else
            consume('+');
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail(std::string("expected ") + what);
        std::string d = digits();
        if (d.size() > 6) fail(std::string(what) + " out of range");
        long v = std::stol(d);
        return neg ? -v : v;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    char peek_next() const { return pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) {
        throw ParseError(pos, msg);
    }

    std::string_view text_;
    Cutoff cutoff_;
    std::size_t pos_ = 0;
};

}  // namespace

SkeinElement evaluate_skein_expression(std::string_view text, int max_degree) {
    return ExprParser<SkeinElement>(text, max_degree).parse();
}

QTSeries evaluate_qt_expression(std::string_view text, int max_degree) {
    return ExprParser<QTSeries>(text, max_degree).parse();
}

}  // namespace skein
