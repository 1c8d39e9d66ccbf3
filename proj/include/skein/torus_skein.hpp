#pragma once

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "skein/lattice.hpp"
#include "skein/scalar.hpp"
#include "skein/series.hpp"

namespace skein {

// Ordered word in the generators P_x: factors are nonzero vectors in the
// closed first quadrant, nondecreasing under pbw_compare. The empty word is
// the unit.
class PBWMonomial {
public:
    PBWMonomial() = default;
    static PBWMonomial generator(Vec2 x);
    // Takes a word already sorted nondecreasing under pbw_compare.
    static PBWMonomial from_sorted(std::vector<Vec2> factors);

    const std::vector<Vec2>& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }
    int delta_degree() const;
    Vec2 bidegree() const;

    std::strong_ordering operator<=>(const PBWMonomial& o) const;
    bool operator==(const PBWMonomial& o) const { return factors_ == o.factors_; }

    std::string to_string() const;  // "P[1,0]*P[0,1]", "1" for the unit

private:
    std::vector<Vec2> factors_;
};

struct MonomialOrder {
    bool operator()(const PBWMonomial& a, const PBWMonomial& b) const { return a < b; }
};

// Element of the torus skein algebra (or of its completion when a cutoff is
// set): sparse Scalar-linear combination of PBW monomials.
class SkeinElement {
public:
    using TermMap = std::map<PBWMonomial, Scalar, MonomialOrder>;

    SkeinElement() = default;
    explicit SkeinElement(Cutoff cutoff) : cutoff_(cutoff) {}

    static SkeinElement unit(Cutoff cutoff = unbounded);
    static SkeinElement generator(Vec2 x, Cutoff cutoff = unbounded);  // P_x
    static SkeinElement constant(Scalar c, Cutoff cutoff = unbounded);

    Cutoff cutoff() const { return cutoff_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const PBWMonomial& m) const;
    Scalar constant_coeff() const { return coeff(PBWMonomial{}); }

    // Adds c * m, pruning zeros and discarding monomials above the cutoff.
    void add_term(const PBWMonomial& m, const Scalar& c);

    SkeinElement truncated(Cutoff cutoff) const;
    // the part supported on one bidegree
    SkeinElement bidegree_part(Vec2 bidegree) const;

    friend SkeinElement operator+(const SkeinElement& a, const SkeinElement& b);
    friend SkeinElement operator-(const SkeinElement& a, const SkeinElement& b);
    SkeinElement operator-() const;
    SkeinElement scaled(const Scalar& c) const;
    friend SkeinElement operator*(const SkeinElement& a, const SkeinElement& b);

    friend bool operator==(const SkeinElement& a, const SkeinElement& b) {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    TermMap terms_;
    Cutoff cutoff_;
};

// [P_x, P_y] = {det2(x,y)} P_{x+y}. Arguments must be nonzero vectors in the
// closed first quadrant (the generator cone).
SkeinElement bracket(Vec2 x, Vec2 y);

// Which adjacent out-of-order pair the rewriting engine picks first. The two
// strategies must agree (confluence, backed by the Jacobi identity).
enum class RewriteStrategy { leftmost_first, rightmost_first };

// Expresses P_{w1} ... P_{wm} in the PBW basis by repeatedly replacing an
// adjacent out-of-order pair P_u P_v with P_v P_u + {det2(u,v)} P_{u+v}.
// Factors must be nonzero and in the closed first quadrant.
SkeinElement normal_order(std::span<const Vec2> word, Cutoff cutoff = unbounded,
                          RewriteStrategy strategy = RewriteStrategy::leftmost_first);

// Bilinear extension of concatenation followed by normal ordering; exact
// below the resulting cutoff. multiply runs the OpenMP kernel over the term
// pairs, multiply_serial is the reference implementation.
SkeinElement multiply(const SkeinElement& f, const SkeinElement& g);
SkeinElement multiply_serial(const SkeinElement& f, const SkeinElement& g);

SkeinElement commutator(const SkeinElement& f, const SkeinElement& g);

// The Jacobi identity of the bracket as an exact Scalar identity:
// {a}{b-c} + {b}{c-a} + {c}{a-b} = 0 with a = det2(x,y), b = det2(y,z),
// c = det2(z,x). Certifies that the PBW normal form is well defined.
bool jacobi_check(Vec2 x, Vec2 y, Vec2 z);

}  // namespace skein
