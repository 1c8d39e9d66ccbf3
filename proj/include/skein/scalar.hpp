#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "skein/laurent.hpp"

namespace skein {

struct ParseError : std::runtime_error {
    ParseError(std::size_t pos, const std::string& msg)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Exact rational function in s = q^{1/2} over the rationals, stored as a
// canonical fraction of Laurent polynomials:
//   - the denominator is a genuine polynomial with nonzero constant term
//     (min_exp 0) and positive leading coefficient,
//   - the numerator shifted to min_exp 0 is coprime to the denominator in
//     Z[s], integer contents included,
//   - zero is 0/1.
// Equality is therefore componentwise comparison of the representations.
class Scalar {
public:
    Scalar() : den_(LaurentPoly::monomial(1)) {}
    Scalar(long n) : num_(LaurentPoly::monomial(n)), den_(LaurentPoly::monomial(1)) {}
    Scalar(mpz_class n) : num_(LaurentPoly::monomial(std::move(n))), den_(LaurentPoly::monomial(1)) {}

    static Scalar rational(mpz_class num, mpz_class den);
    // General constructor: canonicalizes num/den. Throws on a zero denominator.
    static Scalar fraction(LaurentPoly num, LaurentPoly den);
    static Scalar s_power(int k);  // s^k

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

    Scalar inv() const;  // throws std::domain_error on zero

    friend bool operator==(const Scalar& a, const Scalar& b) = default;

    // true when the highest-degree numerator coefficient is negative; used to
    // pull signs out when printing sums
    bool has_negative_lead() const { return !num_.is_zero() && num_.leading_coeff() < 0; }

    std::string to_string() const;

private:
    struct reduced_tag {};
    Scalar(reduced_tag, LaurentPoly num, LaurentPoly den)
        : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

// {k} = s^k - s^{-k} = q^{k/2} - q^{-k/2}
Scalar quantum_integer(long long k);

// Parses the textual grammar: signed integer rationals, the symbol `s`,
// `^` integer exponents, `+ - * /`, parentheses; whitespace-insensitive;
// `q` is accepted as sugar for s^2. Throws ParseError with a position.
Scalar parse_scalar(std::string_view text);

}  // namespace skein
