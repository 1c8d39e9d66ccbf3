#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace skein {

// Element of the H1 lattice Z^2.
struct Vec2 {
    int i = 0;
    int j = 0;

    friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.i == b.i && a.j == b.j; }

    constexpr Vec2 operator+(Vec2 o) const { return {i + o.i, j + o.j}; }
    constexpr Vec2 operator-() const { return {-i, -j}; }
    constexpr Vec2 operator*(int k) const { return {k * i, k * j}; }
};

// Intersection pairing det(x|y) = x.i*y.j - x.j*y.i.
constexpr std::int64_t det2(Vec2 x, Vec2 y) {
    return std::int64_t(x.i) * y.j - std::int64_t(x.j) * y.i;
}

// Grading homomorphism (i,j) -> i+j.
constexpr int delta_degree(Vec2 x) { return x.i + x.j; }

constexpr bool is_zero(Vec2 x) { return x.i == 0 && x.j == 0; }

// The cone Z+ = { (a,b) : a>0, or a=0 and b>=0 }.
constexpr bool in_positive_cone(Vec2 x) { return x.i > 0 || (x.i == 0 && x.j >= 0); }

// Closed first quadrant; all generators handled by the completion live here.
constexpr bool in_first_quadrant(Vec2 x) { return x.i >= 0 && x.j >= 0; }

struct PrimitiveDecomposition {
    int multiple;    // k = gcd(|i|,|j|) >= 1
    Vec2 primitive;  // x / k
};

inline PrimitiveDecomposition primitive_decompose(Vec2 x) {
    if (is_zero(x))
        throw std::invalid_argument("primitive_decompose: zero vector");
    int k = std::gcd(std::abs(x.i), std::abs(x.j));
    return {k, {x.i / k, x.j / k}};
}

// Total order on the closed first quadrant minus the origin, used for PBW
// normal forms: ascending angle from the i-axis (u < v iff det2(u,v) > 0),
// ties on a common ray broken by delta degree.
inline std::strong_ordering pbw_compare(Vec2 u, Vec2 v) {
    if (is_zero(u) || is_zero(v))
        throw std::invalid_argument("pbw_compare: zero vector");
    if (!in_first_quadrant(u) || !in_first_quadrant(v))
        throw std::invalid_argument("pbw_compare: vector outside the closed first quadrant");
    std::int64_t d = det2(u, v);
    if (d > 0) return std::strong_ordering::less;
    if (d < 0) return std::strong_ordering::greater;
    // same ray: on the first quadrant equal delta forces equal vectors
    return delta_degree(u) <=> delta_degree(v);
}

inline std::string to_string(Vec2 x) {
    return "[" + std::to_string(x.i) + "," + std::to_string(x.j) + "]";
}

}  // namespace skein
