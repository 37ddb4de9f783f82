// SPDX-License-Identifier: MIT
//
// Genus-3 plane quartics with unramified double covers, their genus-2
// Prym curves, and the Kummer-surface route between them:
//
//   * a triple of quadratic forms (Q1, Q2, Q3) in u, v, w cuts out the
//     quartic X: Q1 Q3 = Q2^2 and the genus-2 curve
//     Z: z^2 = -det(M1 + 2x M2 + x^2 M3);
//   * conversely, the Kummer surface of a genus-2 Jacobian meets a plane
//     V in a quartic curve whose Prym is that Jacobian.
//
// Also here: the projective smoothness test for ternary quartics and the
// named one-parameter curve families used by the characteristic-3 searches.

#pragma once

#include "prymrank/gf.hpp"
#include "prymrank/hasse_witt.hpp"
#include "prymrank/mpoly.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace prymrank {

// ---------------------------------------------------------------------------
// Quadratic-form triples
// ---------------------------------------------------------------------------

// Three symmetric 3x3 matrices over one field, representing the quadratic
// forms Q_i(u,v,w) = (u,v,w) M_i (u,v,w)^T.
class QuadTriple {
  public:
    using Mat3 = std::array<std::array<FieldElem, 3>, 3>;

    QuadTriple(Ctx ctx, Mat3 m1, Mat3 m2, Mat3 m3); // verifies symmetry

    // The 15-coefficient exchange format
    //   [q111,q112,q122,q113,q123,q133, q211,q222,q233, q311,q312,q322,q313,q323,q333]
    // where q_i,ab is the coefficient of the (a,b) monomial of Q_i and Q2 is
    // diagonal.  Off-diagonal coefficients split evenly across the symmetric
    // matrix (q/2 on each side; p is odd).
    static QuadTriple from_q15(Ctx ctx, const std::vector<FieldElem>& q);
    static QuadTriple from_q15_ints(Ctx ctx, const std::vector<std::int64_t>& q);

    Ctx ctx() const { return ctx_; }
    const Mat3& m(int i) const; // i = 1, 2, 3

    // Q_i as a homogeneous quadratic in three variables (u, v, w).
    MPoly quadratic_form(int i) const;

    // Round-trip back to the 15-coefficient format; throws if Q2 is not
    // diagonal (the format has no slot for its cross terms).
    std::vector<FieldElem> to_q15() const;

  private:
    Ctx ctx_;
    std::array<Mat3, 3> m_;
};

// The quartic form F = Q2^2 - Q1 Q3 in u, v, w whose zero locus is X.
MPoly bruin_quartic(const QuadTriple& q);

// The Prym curve Z: z^2 = D(x) = -det(M1 + 2x M2 + x^2 M3).
// Throws if D is identically zero or has degree outside {5, 6}.
Genus2Curve bruin_prym_sextic(const QuadTriple& q);

// ---------------------------------------------------------------------------
// Kummer surfaces and plane sections
// ---------------------------------------------------------------------------

struct KummerSurface {
    Genus2Curve source;
    MPoly kappa; // homogeneous quartic in X1..X4, deg_{X4} = 2
};

// The classical quartic model kappa = K2 X4^2 + K1 X4 + K0 built from the
// coefficients d0..d6 of D(x).
KummerSurface kummer_surface(const Genus2Curve& z);

// Image on the Kummer surface of the divisor class
// [(x1,z1) + (x2,z2) - Z_inf]: the projective point
// [1 : x1+x2 : x1 x2 : beta0] with
// beta0 = (F0(x1,x2) - 2 z1 z2) / (x1 - x2)^2.
// Throws if a point is not on the curve or if x1 = x2 (formula pole).
std::array<FieldElem, 4> kummer_phi(const Genus2Curve& z,
                                    const std::pair<FieldElem, FieldElem>& p1,
                                    const std::pair<FieldElem, FieldElem>& p2);

// A plane a X1 + b X2 + c X3 + d X4 = 0; rescaled so d = 1 whenever d != 0.
// Throws if all four coefficients vanish.
class Plane {
  public:
    Plane(Ctx ctx, FieldElem a, FieldElem b, FieldElem c, FieldElem d);
    static Plane from_ints(Ctx ctx, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d);

    Ctx ctx() const { return ctx_; }
    const FieldElem& a() const { return a_; }
    const FieldElem& b() const { return b_; }
    const FieldElem& c() const { return c_; }
    const FieldElem& d() const { return d_; }

    MPoly to_poly() const; // the linear form in X1..X4

  private:
    Ctx ctx_;
    FieldElem a_, b_, c_, d_;
};

struct PlaneSection {
    MPoly v;       // the hyperplane, for the space-section Hasse-Witt route
    MPoly h;       // kappa
    MPoly ternary; // kappa with X4 := -(a X1 + b X2 + c X3), in three variables
};

// The plane model of the curve cut on K by V.  Requires d != 0: planes
// through the singular node (0:0:0:1) of K are rejected.
PlaneSection plane_section(const KummerSurface& k, const Plane& v);

// ---------------------------------------------------------------------------
// Smoothness of plane quartics
// ---------------------------------------------------------------------------

// True iff the ternary homogeneous quartic F cuts a smooth curve: its three
// partial derivatives share no projective zero over the algebraic closure
// (F = 0 follows from Euler's relation since p does not divide 4).
//
// Method: a seeded coordinate change puts the first partial in unit-leading
// position with respect to w; two resultants eliminate w; candidate (u : v)
// zeros are factored and back-substituted over the extension fields their
// residue degrees induce.  An identically-vanishing resultant certifies a
// common factor, hence a singular point, directly.
bool is_smooth_plane_quartic(const MPoly& f, std::uint64_t seed = 0);

// Exhaustive search for a singular point of residue degree <= max_k over
// the base field (each field scanned only while p^(2k) stays within the
// 10^8 budget).  Returns true if one is found.  A negative answer does not
// certify smoothness; this is the bounded fallback / cross-check.
bool has_low_degree_singular_point(const MPoly& f, int max_k = 9);

// ---------------------------------------------------------------------------
// Named genus-2 families (characteristic 3)
// ---------------------------------------------------------------------------

// z^2 = A(x) B(x) with A = x^3 - a x^2 + a x + (a+1) and
// B = (x - a)(x - (a+1))(a x + (a+1)); requires p = 3 and a outside
// {0, 1, -1}.  Supersingular: the 3-rank of the Prym is 0.
Genus2Curve family_z_alpha(const FieldElem& alpha);

// z^2 = x^6 + t x^5 + u x^4 + x^3 + t x^2 + u x + 1; requires p = 3 and
// t != u.  Smooth members have 3-rank 1 exactly when t + u != 0.
Genus2Curve family_z_tu(const FieldElem& t, const FieldElem& u);

// z^2 = (x^3 - x)(A0 x^3 + A x^2 + B x + C); requires A0 != 0 and C != 0.
Genus2Curve family_simple_z(const FieldElem& a0, const FieldElem& a, const FieldElem& b,
                            const FieldElem& c);

} // namespace prymrank
