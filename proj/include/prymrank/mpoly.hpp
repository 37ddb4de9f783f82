// SPDX-License-Identifier: MIT
//
// Sparse multivariate polynomials (up to 4 variables) over a field context:
// multiplication (serial reference kernel + parallel kernel), powering,
// coefficient extraction, partial derivatives, substitution, resultants in
// one variable, and univariate interpolation.
//
// Exponent vectors are packed 4 x 16 bits into one 64-bit word so that
// monomial products are a single integer addition; per-variable degrees are
// capped at 2^14 to keep additions overflow-free with margin.

#pragma once

#include "prymrank/gf.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace prymrank {

using ExpVec = std::array<std::uint16_t, 4>; // exponents; entries beyond nvars are 0
using ExpPack = std::uint64_t;

constexpr std::uint16_t kMaxVarDegree = 1u << 14;

inline ExpPack pack_exps(const ExpVec& e) {
    return static_cast<ExpPack>(e[0]) | (static_cast<ExpPack>(e[1]) << 16) |
           (static_cast<ExpPack>(e[2]) << 32) | (static_cast<ExpPack>(e[3]) << 48);
}

inline ExpVec unpack_exps(ExpPack p) {
    return {static_cast<std::uint16_t>(p & 0xffff), static_cast<std::uint16_t>((p >> 16) & 0xffff),
            static_cast<std::uint16_t>((p >> 32) & 0xffff),
            static_cast<std::uint16_t>((p >> 48) & 0xffff)};
}

class MPoly {
  public:
    MPoly() : ctx_(nullptr), nvars_(0) {}
    MPoly(Ctx ctx, int nvars);
    static MPoly constant(Ctx ctx, int nvars, const FieldElem& c);
    static MPoly from_int(Ctx ctx, int nvars, std::int64_t c);
    static MPoly var(Ctx ctx, int nvars, int i, int power = 1);

    Ctx ctx() const { return ctx_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t term_count() const { return t_.size(); }

    // Adds c * X^e, accumulating with any existing term (zero sums vanish).
    void add_term(const ExpVec& e, const FieldElem& c);
    // Stored coefficient of X^e, or zero.
    FieldElem coeff(const ExpVec& e) const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const; // dispatches to mp_mul
    MPoly operator*(const FieldElem& s) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    int total_degree() const; // -1 for the zero polynomial
    int degree_in(int var) const;
    bool is_homogeneous(int& deg_out) const; // zero counts as homogeneous (deg -1)

    MPoly partial(int var) const;
    FieldElem eval(const std::vector<FieldElem>& point) const;
    // Substitute a single variable by a constant; the variable count is kept.
    MPoly eval_partial(int var, const FieldElem& value) const;
    // Substitute a single variable by an arbitrary polynomial (same ctx/nvars).
    MPoly subst(int var, const MPoly& value) const;

    // Conversion to a univariate polynomial; requires every term to have
    // zero exponents outside `var`.
    UniPoly to_univar(int var) const;
    static MPoly from_univar(const UniPoly& f, int nvars, int var);
    // Coefficients of powers of `var`: entry i is the coefficient of var^i,
    // an MPoly in the remaining variables (var-exponent 0).
    std::vector<MPoly> coeffs_in(int var) const;

    // Terms sorted in graded lexicographic order, highest first (the
    // canonical serialization order).
    std::vector<std::pair<ExpVec, FieldElem>> sorted_terms() const;
    std::string to_string(const std::vector<std::string>& varnames) const;

    const std::unordered_map<ExpPack, FieldElem>& terms() const { return t_; }

  private:
    void require_compatible(const MPoly& o) const;
    Ctx ctx_;
    int nvars_;
    std::unordered_map<ExpPack, FieldElem> t_;
};

// Serial reference product kernel.
MPoly mp_mul_serial(const MPoly& a, const MPoly& b);
// Production product kernel: identical result, OpenMP-parallel for large
// inputs (exact field arithmetic makes the merge order irrelevant).
MPoly mp_mul(const MPoly& a, const MPoly& b);
// f^e by binary powering; f^0 = 1.
MPoly mp_pow(const MPoly& f, std::uint64_t e);

// Determinant of the Sylvester matrix of f and g with respect to one
// variable, computed fraction-free (Bareiss).  Coefficient rows are laid
// out low-degree-first, which fixes the sign convention:
// resultant_wrt(x - y, x + y, var=y) = 2x.  Vanishes identically iff f and
// g share a factor of positive degree in the variable.  Throws if both
// inputs have degree 0 in the variable.
MPoly resultant_wrt(const MPoly& f, const MPoly& g, int var);

// The unique polynomial of degree <= bound through the given nodes
// (Newton form).  Throws on duplicate abscissae, fewer than bound+1 nodes,
// or data that does not actually fit the bound.
UniPoly interpolate(const std::vector<std::pair<FieldElem, FieldElem>>& nodes, int bound);

// Coefficient-wise embedding into an extension of the coefficient field.
MPoly embed_mpoly(const MPoly& f, Ctx dst);

// Parse a polynomial in the declared variables.  Each variable may carry
// several accepted spellings (e.g. {"X1", "x", "u"}).  Grammar: terms
// joined by '+'/'-'; factors separated by '*' or juxtaposed; integer or
// parenthesized "(c0,c1,...)" coefficients; optional '^' exponents.
// Repeated monomials accumulate.
MPoly parse_mpoly(Ctx ctx, const std::vector<std::vector<std::string>>& varnames,
                  const std::string& text);

// Effective thread count for parallel kernels: an explicit override (from
// the CLI) wins, then PRYMRANK_THREADS, then the OpenMP default (1 without
// OpenMP).
int effective_threads();
void set_effective_threads(int n);

} // namespace prymrank
