#pragma once

#include <map>
#include <string>

#include "skein/lattice.hpp"
#include "skein/report.hpp"
#include "skein/scalar.hpp"
#include "skein/series.hpp"

namespace skein {

// Deterministic key order for series terms: delta degree ascending, then
// ascending angle from the i-axis. On equal delta the angle order is simply
// i descending, which extends the pbw order to all of Z^2.
struct QTKeyOrder {
    bool operator()(Vec2 a, Vec2 b) const {
        int da = delta_degree(a), db = delta_degree(b);
        if (da != db) return da < db;
        return a.i > b.i;
    }
};

// Element of the Weyl-normalized quantum torus on Z^2, or of its delta-graded
// completion when a cutoff is set. Sparse map from lattice vectors to nonzero
// Scalars; with a finite cutoff the support lies in the closed first quadrant
// at delta degree <= cutoff.
class QTSeries {
public:
    using TermMap = std::map<Vec2, Scalar, QTKeyOrder>;

    QTSeries() = default;
    explicit QTSeries(Cutoff cutoff) : cutoff_(cutoff) {}

    static QTSeries unit(Cutoff cutoff = unbounded);
    static QTSeries generator(Vec2 x, Cutoff cutoff = unbounded);  // X_x
    static QTSeries constant(Scalar c, Cutoff cutoff = unbounded);

    Cutoff cutoff() const { return cutoff_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(Vec2 x) const;
    Scalar constant_coeff() const { return coeff({0, 0}); }

    // Adds c * X_x, pruning zeros and discarding terms above the cutoff.
    // With a finite cutoff, keys outside the closed first quadrant are
    // rejected (completion support condition).
    void add_term(Vec2 x, const Scalar& c);

    QTSeries truncated(Cutoff cutoff) const;

    friend QTSeries operator+(const QTSeries& a, const QTSeries& b);
    friend QTSeries operator-(const QTSeries& a, const QTSeries& b);
    QTSeries operator-() const;
    QTSeries scaled(const Scalar& c) const;
    friend QTSeries operator*(const QTSeries& a, const QTSeries& b);  // qt_mul

    friend bool operator==(const QTSeries& a, const QTSeries& b) {
        return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    TermMap terms_;
    Cutoff cutoff_;
};

// Product by the bilinear extension of X_x * X_y = s^{det2(x,y)} X_{x+y};
// exact below the resulting cutoff (the min of the operands'). The unqualified
// form runs the OpenMP kernel; the serial form is the reference
// implementation, kept for testing and benchmarks.
QTSeries qt_mul(const QTSeries& f, const QTSeries& g);
QTSeries qt_mul_serial(const QTSeries& f, const QTSeries& g);

// Quantum dilogarithm, exponential form:
//   exp( sum_{k>=1} (-1)^{k+1} X_{kx} / (k {k}) )
// truncated at delta degree max_degree. Requires delta(x) >= 1 and x in the
// closed first quadrant.
QTSeries phi_series(Vec2 x, int max_degree);

// Product form, the exact expansion of prod_{n>=0} (1 + s^{1+2n} X_x):
// coefficients are the stable geometric limits, computed from the q-shift
// recurrence c_k (1 - s^{2k}) = s^{2k-1} c_{k-1}.
QTSeries phi_product_series(Vec2 x, int max_degree);

// Checks Phi(V) Phi(U) = Phi(U) Phi(q^{-1/2} V U) Phi(V) with U = X_{(0,1)},
// V = X_{(1,0)} per bidegree (i,j), i+j <= max_degree.
VerificationReport verify_phi_pentagon(int max_degree);

}  // namespace skein
