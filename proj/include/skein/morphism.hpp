#pragma once

#include <cstdint>

#include "skein/quantum_torus.hpp"
#include "skein/report.hpp"
#include "skein/torus_skein.hpp"

namespace skein {

// The quotient map onto the quantum torus: P_x -> X_x on generators, extended
// multiplicatively through the PBW basis. Well defined because the defining
// relation maps to [X_x, X_y] = {det2(x,y)} X_{x+y} in the Weyl normalization.
QTSeries project(const SkeinElement& f);

// project(f * g) = project(f) * project(g) on sampled random pairs of
// low-degree elements.
VerificationReport homomorphism_check(int max_degree, int samples, std::uint64_t seed);

// project(Q_l) = Phi(X_l) for l in {(1,0), (0,1), (1,1)}.
VerificationReport dilog_compatibility_check(int max_degree);

}  // namespace skein
