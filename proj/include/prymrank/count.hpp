// SPDX-License-Identifier: MIT
//
// Point counting over F_q: genus-2 curves by exhaustive scan, their
// Jacobians through the L-polynomial coefficients, quadratic twists, and
// Kummer surfaces (naive projective scan and closed formula).
//
// Counting conventions:
//  * a smooth projective hyperelliptic model z^2 = D(x) has, over F_q, one
//    affine point where D(x) = 0, two where D(x) is a nonzero square, and
//    none where it is a nonsquare; at infinity it has two points when
//    deg D = 6 and d6 is a square in F_q (zero when a nonsquare) and one
//    point when deg D = 5;
//  * L_{Z/F_q}(T) = 1 + a1 T + a2 T^2 + q a1 T^3 + q^2 T^4 with
//    a1 = n1 - (q+1) and a2 = n1^2/2 + n2/2 - (q+1) n1 + q, where
//    n_i = |Z(F_{q^i})|.

#pragma once

#include "prymrank/gf.hpp"
#include "prymrank/hasse_witt.hpp"
#include "prymrank/prym.hpp"

#include <cstdint>

namespace prymrank {

struct ZetaData {
    std::uint64_t q = 0;
    std::int64_t n1 = 0; // |Z(F_q)|
    std::int64_t n2 = 0; // |Z(F_{q^2})|
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;
};

// |Z(F_q)| for the smooth projective model of z^2 = D(x).  F_q must be an
// extension of the curve's coefficient field with q a power of its
// characteristic; the scan budget caps q at 10^6.  Requires a squarefree D
// (otherwise the plane model is not the smooth model it claims to count).
std::int64_t count_curve(const Genus2Curve& z, std::uint64_t q);

// L-polynomial data from counts over F_q and F_{q^2} (so q <= 10^3).
ZetaData zeta_coeffs(const Genus2Curve& z, std::uint64_t q);

// |Jac(Z)(F_q)| = (n1^2 + n2)/2 - q = 1 + a1 + a2 + a1 q + q^2.
std::int64_t jac_count(const Genus2Curve& z, std::uint64_t q);

// The quadratic twist: z^2 = lambda^{-1} D(x) over F_q, where lambda is the
// first nonsquare of F_q in the canonical element order.  The result lives
// over F_q (the curve is embedded if q exceeds its field).
Genus2Curve quadratic_twist(const Genus2Curve& z, std::uint64_t q);

// Number of projective points of the Kummer quartic over F_q by scanning
// P^3(F_q); the scan budget caps q at 10^3.  The parallel kernel and the
// serial reference return identical counts.
std::int64_t kummer_count_naive(const KummerSurface& k, std::uint64_t q);
std::int64_t kummer_count_naive_serial(const KummerSurface& k, std::uint64_t q);

// |K(F_q)| = 1 + a2 + q^2, from zeta data alone (no surface scan).
std::int64_t kummer_count_formula(const Genus2Curve& z, std::uint64_t q);

// Number of projective points of a ternary quartic over F_q (P^2 scan,
// q <= 10^4); used by the supersingular-section scans.
std::int64_t count_plane_quartic(const MPoly& f, std::uint64_t q);

} // namespace prymrank
