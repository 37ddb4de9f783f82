// SPDX-License-Identifier: MIT
//
// Curated example data shipped with the library.  Each row stores a
// 15-coefficient quadratic-form triple together with the displayed curve
// equations and rank pair it regenerates; the replay machinery in search.hpp
// rebuilds everything from the coefficients and reports any divergence.
// Also holds the reference polynomials for the two characteristic-3
// families: the hyperplane -X2 + X4 against the one-parameter curve family
// (entries and determinant in alpha), and the fixed-root family with the
// plane left symbolic (entries in a, b, c).

#pragma once

#include "prymrank/gf.hpp"
#include "prymrank/mpoly.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace prymrank {

struct TableRow {
    std::uint32_t p;
    int f;      // rank of the plane quartic X
    int fprime; // rank of the genus-2 curve Z
    std::array<int, 15> q;
    // Display texts.  X is the affine quartic (third variable set to 1) in
    // variables u,v (two rows use x,y); Z is the vanishing form of
    // z^2 = D(x) in variables x and z (two rows use y for z).
    const char* x_text;
    const char* z_text;
};

// All curated rows, ordered by p and then by decreasing (f, f').
const std::vector<TableRow>& example_rows();
// The subset for one prime (empty when the prime has no rows).
std::vector<TableRow> rows_for_prime(std::uint32_t p);

// Reference Hasse-Witt entries for the plane -X2 + X4 against the
// one-parameter family over F_3, as univariate polynomials in the family
// parameter; row-major 3x3.
std::array<UniPoly, 9> halpha_reference_entries();

// Reference factorization of the determinant of that matrix: monic factors
// with multiplicities (total degree 38), lead coefficient 1.
std::vector<std::pair<UniPoly, int>> halpha_reference_factors();

// Reference Hasse-Witt entries for the fixed-root family: alpha must be a
// root of t^2 + 2t + 2 in F_9, the plane is (a, b, c, 1) with a, b, c
// symbolic; entries are trivariate polynomials in (a, b, c), row-major.
std::array<MPoly, 9> fixalpha_reference_entries(const FieldElem& alpha);

} // namespace prymrank
