#pragma once

#include <cstdint>

#include "skein/quantum_torus.hpp"
#include "skein/report.hpp"
#include "skein/series_ops.hpp"
#include "skein/torus_skein.hpp"

namespace skein {

enum class AlgebraKind { torus_skein, quantum_torus };

inline const char* to_string(AlgebraKind a) {
    return a == AlgebraKind::torus_skein ? "torus-skein" : "quantum-torus";
}

// Skein dilogarithm Q_l at u = 1, truncated at delta degree max_degree:
//   exp( sum_{k>=1} (-1)^{k+1} P_{kl} / (k {k}) ).
SkeinElement skein_dilog(Vec2 l, int max_degree);
SkeinElement skein_dilog_inverse(Vec2 l, int max_degree);

// Q f Q^{-1} truncated at the common cutoff; Q must have constant term 1.
SkeinElement adjoint(const SkeinElement& q, const SkeinElement& f);
QTSeries adjoint(const QTSeries& q, const QTSeries& f);

// Q_x Q_y = Q_y Q_{x+y} Q_x for x = (1,0), y = (0,1), compared per bidegree
// (i,j) with i+j <= max_degree in the chosen algebra.
VerificationReport pentagon_check(int max_degree, AlgebraKind algebra);

// [P'_{2x}, P'_{2y}] = [P'_x, P'_{x+2y}] - 2 P'_{2x+2y} with P'_{kx} =
// P_{kx}/{k}, the bidegree-(2,2) component of the pentagon.
VerificationReport identity_2_2_check();

// Ad_{Q_x} P_y = P_y + P_{x+y} for det2(x,y) = 1 and Ad_{Q_x^{-1}} P_y =
// P_y + P_{x+y} for det2(x,y) = -1, exactly to degree max_degree, on sampled
// first-quadrant pairs.
VerificationReport ad_property_check(int max_degree, int samples, std::uint64_t seed);

// Jacobi certificate on random lattice triples (CLI `jacobi`).
VerificationReport jacobi_suite(int samples, std::uint64_t seed);

}  // namespace skein
