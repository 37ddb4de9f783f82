// SPDX-License-Identifier: MIT
//
// Hasse-Witt / Cartier-Manin matrices for three curve presentations —
// hyperelliptic y^2 = f(x), affine plane quartic q(u,v) = 0, and a plane
// section of a quartic surface in P^3 cut by a hyperplane v — plus the
// p-rank via the stable rank of the Frobenius-twisted product.
//
// Coefficient-extraction index tables are exposed so tests can pin them
// against hand-worked small-p specializations.

#pragma once

#include "prymrank/gf.hpp"
#include "prymrank/mpoly.hpp"

#include <string>
#include <vector>

namespace prymrank {

// Basis tags carried by matrices.  Equality comparisons across different
// tags are refused — entries in different bases are not comparable
// entry-wise even when ranks agree.
inline constexpr const char* kBasisCartierManin = "cartier-manin";
inline constexpr const char* kBasisHyper = "hyperelliptic";
inline constexpr const char* kBasisQuartic = "plane-quartic";
inline constexpr const char* kBasisSectionH0 = "section-4x4";
inline constexpr const char* kBasisSection = "space-section";

struct HWMatrix {
    HWMatrix() : ctx(nullptr), n(0) {}
    HWMatrix(Ctx c, int size, std::string basis_tag);

    Ctx ctx;
    int n;
    std::string basis;
    std::vector<FieldElem> e; // row-major, n*n entries

    FieldElem& at(int i, int j);
    const FieldElem& at(int i, int j) const;

    HWMatrix transpose() const;                       // keeps the basis tag
    HWMatrix with_basis(const std::string& tag) const; // explicit retag
    bool is_zero() const;

    // Entry-wise equality; throws if the basis tags differ (retag first if
    // a cross-basis comparison is really intended).
    bool operator==(const HWMatrix& o) const;
    bool operator!=(const HWMatrix& o) const { return !(*this == o); }
};

HWMatrix mat_mul(const HWMatrix& a, const HWMatrix& b);
// Rank by Gaussian elimination with exact field inverses.
int rank_of(const HWMatrix& h);

// Entry-wise q -> q^(p^i) twist.
HWMatrix frobenius_twist(const HWMatrix& h, std::uint64_t i);

// Rank of H * H^(p) * ... * H^(p^(g-1)) — the p-rank when H is the
// Hasse-Witt matrix of a genus-g curve.
int p_rank(const HWMatrix& h, int g);

// ---------------------------------------------------------------------------
// Genus-2 hyperelliptic curves z^2 = D(x), deg D in {5, 6}
// ---------------------------------------------------------------------------

class Genus2Curve {
  public:
    // d = (d0, ..., d6) low-first; trailing entries may be omitted or zero,
    // but deg D must be 5 or 6.  Squarefreeness is recorded, not enforced:
    // some search paths deliberately probe singular members.
    Genus2Curve(Ctx ctx, std::vector<FieldElem> d);
    static Genus2Curve from_ints(Ctx ctx, const std::vector<std::int64_t>& d);

    Ctx ctx() const { return ctx_; }
    const std::vector<FieldElem>& d() const { return d_; }
    const UniPoly& D() const { return D_; }
    bool squarefree() const { return squarefree_; }

  private:
    Ctx ctx_;
    std::vector<FieldElem> d_; // always length 7
    UniPoly D_;
    bool squarefree_;
};

// ---------------------------------------------------------------------------
// Index tables (1-based row/column indices, matching the displayed matrices)
// ---------------------------------------------------------------------------

// Cartier-Manin of y^2 = f(x), genus g: entry (i,j) reads the coefficient
// of x^(ip-j) in f^((p-1)/2).
std::uint64_t cm_exponent(std::uint32_t p, int i, int j);
// Genus-2 Hasse-Witt: entry (i,j) reads b_(jp-i) of D^((p-1)/2)
// (row 1: b_{p-1}, b_{2p-1}; row 2: b_{p-2}, b_{2p-2}).
std::uint64_t hyper_hw_exponent(std::uint32_t p, int i, int j);
// Plane quartic: entry (r,c) reads a_{i,j} of q^(p-1) at
// (u,v)-exponents (p(1+[c=2])-(1+[r=2]), p(1+[c=3])-(1+[r=3])).
std::pair<std::uint64_t, std::uint64_t> quartic_exponents(std::uint32_t p, int r, int c);
// Space section: gamma_{i,j} reads the coefficient of (vh)^(p-1) at
// exponents e_m = p(1+[m=j]) - (1+[m=i]), m = 1..4.
ExpVec section_gamma_exponents(std::uint32_t p, int i, int j);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

// General hyperelliptic Cartier-Manin matrix from y^2 = f(x); the genus is
// read off the degree (2g+1 or 2g+2).  Throws on non-squarefree f unless
// force is set.
HWMatrix cartier_manin_hyperelliptic(const UniPoly& f, bool force = false);
HWMatrix cartier_manin_hyperelliptic(const Genus2Curve& z, bool force = false);

// Genus-2 Hasse-Witt matrix in the displayed basis (the transpose of the
// Cartier-Manin matrix over the prime field).
HWMatrix hasse_witt_hyperelliptic(const UniPoly& D, bool force = false);
HWMatrix hasse_witt_hyperelliptic(const Genus2Curve& z, bool force = false);

// Plane quartic Hasse-Witt matrix from the affine model q(u,v) = 0;
// q must have total degree 4 (smoothness is the caller's concern).
HWMatrix hasse_witt_quartic(const MPoly& q);

// ---------------------------------------------------------------------------
// Space sections: C = {v = 0} ∩ {h = 0} in P^3
// ---------------------------------------------------------------------------

struct SectionHW {
    HWMatrix h0; // 4x4 matrix of gamma_{i,j}
    HWMatrix hw; // 3x3 matrix over indices != pivot
};

// Precomputes h^(p-1) once so that many hyperplanes v can be processed
// against the same quartic surface h (the expensive power dominates).
class SectionExpander {
  public:
    explicit SectionExpander(const MPoly& h);
    const MPoly& h_pow() const { return hp_; }
    const MPoly& h() const { return h_; }

    // Coefficient of X^E in (v*h)^(p-1) via the factored expansion
    // (v^(p-1) by closed multinomial formula, h^(p-1) precomputed).
    FieldElem coeff_vh(const MPoly& v, const ExpVec& e) const;
    HWMatrix h0_for(const MPoly& v) const;
    SectionHW section_for(const MPoly& v, int pivot) const;

  private:
    MPoly h_;
    MPoly hp_;
};

// One-shot convenience wrapper; pivot is the 1-based index t of the
// hyperplane coefficient a_t used in the formula (default X4).
SectionHW hasse_witt_section(const MPoly& v, const MPoly& h, int pivot = 4);

// ---------------------------------------------------------------------------
// Helpers shared with the search pipelines
// ---------------------------------------------------------------------------

// e! / (prod parts!) as a field constant; requires sum(parts) = e <= p-1 so
// every factorial stays clear of the characteristic.
FieldElem multinomial_coeff(Ctx ctx, std::uint32_t e, const ExpVec& parts);

// v^e for a linear form v via the closed multinomial expansion (no
// polynomial products); requires e <= p-1.
MPoly linear_power_multinomial(const MPoly& v, std::uint32_t e);

} // namespace prymrank
