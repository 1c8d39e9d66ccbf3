#pragma once

#include <stdexcept>

#include "skein/lattice.hpp"
#include "skein/scalar.hpp"
#include "skein/series.hpp"

namespace skein {

// Generic truncated-series helpers shared by the two algebras. Element is
// QTSeries or SkeinElement: a graded algebra value with a finite cutoff,
// unit/generator factories and Scalar-linear operations.

// exp of an element with zero constant term; exact up to the cutoff.
template <class Element>
Element exp_truncated(const Element& exponent) {
    if (!exponent.cutoff())
        throw std::domain_error("exp_truncated: a finite cutoff is required");
    if (!exponent.constant_coeff().is_zero())
        throw std::domain_error("exp_truncated: nonzero constant term");
    Element acc = Element::unit(exponent.cutoff());
    Element term = acc;
    for (int m = 1; m <= *exponent.cutoff(); ++m) {
        term = (term * exponent).scaled(Scalar::rational(1, m));
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return acc;
}

// inverse of a series with constant term 1, by the geometric expansion.
template <class Element>
Element inverse_unit_series(const Element& u) {
    if (!u.cutoff())
        throw std::domain_error("inverse_unit_series: a finite cutoff is required");
    if (!u.constant_coeff().is_one())
        throw std::domain_error("inverse_unit_series: constant term must be 1");
    Element tail = u - Element::unit(u.cutoff());
    Element acc = Element::unit(u.cutoff());
    Element pow = acc;
    for (int m = 1; m <= *u.cutoff(); ++m) {
        pow = pow * tail;
        if (pow.is_zero()) break;
        acc = (m % 2 == 1) ? acc - pow : acc + pow;
    }
    return acc;
}

// conjugation q f q^{-1}, truncated at the common cutoff
template <class Element>
Element adjoint_action(const Element& q, const Element& f) {
    return q * f * inverse_unit_series(q);
}

// Dilogarithm series along the direction l:
//   exp( sum_{k>=1} (-1)^{k+1} G_{kl} / (k {k}) )
// where G is the generator of the ambient algebra. Requires delta(l) >= 1
// and l in the closed first quadrant.
template <class Element>
Element dilog_series(Vec2 l, int max_degree, bool inverted = false) {
    if (!in_first_quadrant(l) || delta_degree(l) < 1)
        throw std::domain_error(
            "dilog series requires a direction of positive delta degree in the closed "
            "first quadrant");
    Element exponent{Cutoff(max_degree)};
    int kmax = max_degree / delta_degree(l);
    for (int k = 1; k <= kmax; ++k) {
        Scalar c = Scalar::rational(k % 2 == 1 ? 1 : -1, k) * quantum_integer(k).inv();
        if (inverted) c = -c;
        exponent = exponent + Element::generator(l * k, Cutoff(max_degree)).scaled(c);
    }
    return exp_truncated(exponent);
}

}  // namespace skein
