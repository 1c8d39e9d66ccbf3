#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace skein {

// Sparse Laurent polynomial in the formal variable s with arbitrary-precision
// integer coefficients. Terms are kept sorted by exponent and no stored
// coefficient is zero; the zero polynomial has no terms.
class LaurentPoly {
public:
    using Term = std::pair<int, mpz_class>;  // (exponent, coefficient)

    LaurentPoly() = default;

    static LaurentPoly monomial(mpz_class coeff, int exp = 0);
    // Merges duplicate exponents and drops zero coefficients.
    static LaurentPoly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    // exponent bounds; both require a nonzero polynomial
    int min_exp() const;
    int max_exp() const;

    const mpz_class& leading_coeff() const;   // coefficient of s^max_exp
    const mpz_class& trailing_coeff() const;  // coefficient of s^min_exp
    mpz_class coeff(int exp) const;

    LaurentPoly shifted(int k) const;  // multiply by s^k

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    // gcd of the coefficients' absolute values (positive; 0 for the zero polynomial)
    mpz_class content() const;
    // *this divided by its content; sign of the coefficients is preserved
    LaurentPoly primitive_part() const;

private:
    std::vector<Term> terms_;
};

// Exact division; throws std::domain_error if b is zero or does not divide a.
// Laurent-aware: exponents may be negative on either side.
LaurentPoly divexact(const LaurentPoly& a, const LaurentPoly& b);

// gcd of two genuine polynomials (min_exp >= 0) in Z[s], including the integer
// content, normalized to a positive leading coefficient. gcd(0,0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace skein
