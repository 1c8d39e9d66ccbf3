#include "skein/scalar.hpp"

#include <cctype>
#include <utility>

namespace skein {

Scalar Scalar::rational(mpz_class num, mpz_class den) {
    return fraction(LaurentPoly::monomial(std::move(num)), LaurentPoly::monomial(std::move(den)));
}

Scalar Scalar::s_power(int k) {
    return Scalar(reduced_tag{}, LaurentPoly::monomial(1, k), LaurentPoly::monomial(1));
}

Scalar Scalar::fraction(LaurentPoly num, LaurentPoly den) {
    if (den.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (num.is_zero()) return Scalar{};
    int a = num.min_exp(), b = den.min_exp();
    LaurentPoly n0 = num.shifted(-a), d0 = den.shifted(-b);
    LaurentPoly g = poly_gcd(n0, d0);
    if (!g.is_one()) {
        n0 = divexact(n0, g);
        d0 = divexact(d0, g);
    }
    if (d0.leading_coeff() < 0) {
        n0 = -n0;
        d0 = -d0;
    }
    return Scalar(reduced_tag{}, n0.shifted(a - b), std::move(d0));
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

// Fraction arithmetic on canonical representatives: cross-cancel first so the
// expensive gcds run on the inputs' denominators rather than on products
// (Henrici's scheme); the results below are already in lowest terms.
Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    LaurentPoly d = poly_gcd(a.den_, b.den_);
    if (d.is_one()) {
        return Scalar(Scalar::reduced_tag{}, a.num_ * b.den_ + b.num_ * a.den_,
                      a.den_ * b.den_);
    }
    LaurentPoly ad = divexact(a.den_, d), bd = divexact(b.den_, d);
    LaurentPoly t = a.num_ * bd + b.num_ * ad;
    if (t.is_zero()) return Scalar{};
    LaurentPoly g2 = poly_gcd(t.shifted(-t.min_exp()), d);
    if (g2.is_one())
        return Scalar(Scalar::reduced_tag{}, std::move(t), a.den_ * bd);
    return Scalar(Scalar::reduced_tag{}, divexact(t, g2), divexact(a.den_, g2) * bd);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar{};
    LaurentPoly g1 = poly_gcd(a.num_.shifted(-a.num_.min_exp()), b.den_);
    LaurentPoly g2 = poly_gcd(b.num_.shifted(-b.num_.min_exp()), a.den_);
    LaurentPoly n = (g1.is_one() ? a.num_ : divexact(a.num_, g1)) *
                    (g2.is_one() ? b.num_ : divexact(b.num_, g2));
    LaurentPoly den = (g2.is_one() ? a.den_ : divexact(a.den_, g2)) *
                      (g1.is_one() ? b.den_ : divexact(b.den_, g1));
    return Scalar(Scalar::reduced_tag{}, std::move(n), std::move(den));
}

Scalar Scalar::inv() const {
    if (is_zero()) throw std::domain_error("Scalar: division by zero");
    int m = num_.min_exp();
    LaurentPoly n = den_.shifted(-m);
    LaurentPoly d = num_.shifted(-m);
    if (d.leading_coeff() < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(reduced_tag{}, std::move(n), std::move(d));
}

Scalar quantum_integer(long long k) {
    if (k == 0) return Scalar{};
    if (k < 0) return -quantum_integer(-k);
    int e = static_cast<int>(k);
    return Scalar::fraction(
        LaurentPoly::from_terms({{-e, mpz_class(-1)}, {e, mpz_class(1)}}),
        LaurentPoly::monomial(1));
}

// ---------------------------------------------------------------------------
// formatting

namespace {

void append_term(std::string& out, int exp, const mpz_class& coeff, bool first) {
    mpz_class c = coeff;
    if (first) {
        if (c < 0) {
            out += '-';
            c = -c;
        }
    } else {
        out += (c < 0) ? " - " : " + ";
        if (c < 0) c = -c;
    }
    bool unit = (c == 1);
    if (exp == 0) {
        out += c.get_str();
        return;
    }
    if (!unit) {
        out += c.get_str();
        out += '*';
    }
    out += 's';
    if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
    }
}

// single terms stay bare, sums get parentheses so that output reparses
std::string format_poly(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string body;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        append_term(body, it->first, it->second, first);
        first = false;
    }
    if (p.term_count() > 1) return "(" + body + ")";
    return body;
}

}  // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    std::string out = format_poly(num_);
    if (!den_.is_one()) {
        out += '/';
        out += format_poly(den_);
    }
    return out;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view text) : text_(text) {}

    Scalar parse() {
        Scalar v = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    Scalar expression() {
        Scalar v = term();
        while (true) {
            skip_ws();
            if (consume('+')) {
                v = v + term();
            } else if (consume('-')) {
                v = v - term();
            } else {
                return v;
            }
        }
    }

    Scalar term() {
        Scalar v = factor();
        while (true) {
            skip_ws();
            if (consume('*')) {
                v = v * factor();
            } else if (consume('/')) {
                std::size_t at = pos_;
                Scalar d = factor();
                if (d.is_zero()) fail_at(at, "division by zero");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    Scalar factor() {
        skip_ws();
        if (consume('-')) return -factor();
        if (consume('+')) return factor();
        Scalar v = atom();
        skip_ws();
        if (consume('^')) {
            long e = integer("exponent");
            if (e < 0) {
                if (v.is_zero()) fail("zero raised to a negative power");
                v = v.inv();
                e = -e;
            }
            Scalar r = 1;
            for (Scalar base = v; e > 0; e >>= 1) {
                if (e & 1) r = r * base;
                if (e > 1) base = base * base;
            }
            v = r;
        }
        return v;
    }

    Scalar atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Scalar v = expression();
            skip_ws();
            if (!consume(')')) fail("expected ')'");
            return v;
        }
        if (c == 's') {
            ++pos_;
            return Scalar::s_power(1);
        }
        if (c == 'q') {
            ++pos_;
            return Scalar::s_power(2);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return Scalar(mpz_class(digits()));
        }
        fail("expected a number, 's', 'q' or '('");
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
    std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

}  // namespace skein
