// SPDX-License-Identifier: MIT
//
// Arithmetic over small prime fields F_p (p an odd prime) and their
// extensions F_{p^k}, together with dense univariate polynomial arithmetic
// and seeded Cantor-Zassenhaus factorization.
//
// Design notes:
//  * Field contexts are immutable and live for the whole process; code
//    passes around non-owning `Ctx` pointers.
//  * Extension fields are F_p[x]/(m(x)) for a monic irreducible m.  The
//    default modulus is chosen deterministically: monic candidates of the
//    requested degree are ordered by the sum of their integer coefficients
//    and then lexicographically by (c_0, ..., c_{k-1}); the first
//    irreducible wins.  This makes every run (and every machine) agree on
//    the representation without an external table.
//  * Elements are dense coefficient vectors over F_p, constant term first.
//    Mixing elements from different contexts is an error; moving between a
//    field and an overfield is done by the explicit embed() operation.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace prymrank {

class FieldCtx;
using Ctx = const FieldCtx*; // non-owning; contexts are process-lifetime

class FieldElem;
class UniPoly;

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

class FieldCtx {
  public:
    // F_p itself.  p must be an odd prime with 3 <= p < 2^20.
    static Ctx prime_field(std::uint32_t p);

    // F_{p^k} with the deterministic first irreducible modulus (see file
    // header).  k = 1 returns prime_field(p).  Results are cached, so two
    // calls with the same (p, k) return the same context.
    static Ctx ext(std::uint32_t p, std::uint32_t k);

    // F_p[x]/(modulus) for a caller-supplied monic irreducible modulus,
    // given low-degree-first ("1,0,1" is 1 + x^2).  Throws if the modulus
    // is not monic or not irreducible.
    static Ctx with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    // Defining modulus, length k+1, low-first, monic.  For k = 1 this is x.
    const std::vector<std::uint32_t>& modulus() const { return mod_; }

    // p^k as a 64-bit integer; throws if it does not fit.
    std::uint64_t order() const;
    // p^k as a 128-bit integer; throws if it exceeds ~2^126.
    unsigned __int128 order128() const;

    // Two contexts describe the same field representation iff they agree on
    // p and on the modulus.
    bool same_field(const FieldCtx& o) const { return p_ == o.p_ && mod_ == o.mod_; }

    // --- element factories ---------------------------------------------
    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(std::int64_t v) const; // reduction of an integer
    FieldElem from_coeffs(std::vector<std::uint32_t> c) const;
    FieldElem gen() const; // the class of x; throws for k = 1
    // Canonical enumeration: element number n has coefficients given by the
    // base-p digits of n, constant term first.  0 <= n < order().
    FieldElem element_at(std::uint64_t n) const;
    std::uint64_t index_of(const FieldElem& e) const;
    // Parse "c" (k = 1) or "c0,c1,...,c_{k-1}".
    FieldElem parse(const std::string& s) const;

  private:
    friend class FieldElem;
    friend class UniPoly;
    static Ctx intern(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod);
    FieldCtx(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> mod)
        : p_(p), k_(k), mod_(std::move(mod)) {}
    std::uint32_t p_;
    std::uint32_t k_;
    std::vector<std::uint32_t> mod_;
};

// Spec-facing alias for FieldCtx::ext.
Ctx make_ext(std::uint32_t p, std::uint32_t k);

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

class FieldElem {
  public:
    FieldElem() : ctx_(nullptr) {}

    Ctx ctx() const { return ctx_; }
    const std::vector<std::uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    // Total order by coefficient tuple; used for canonical sorting only.
    bool operator<(const FieldElem& o) const;

    FieldElem inv() const;                      // throws on zero
    FieldElem pow(unsigned __int128 e) const;   // binary powering; 0^0 = 1
    FieldElem frobenius_pow(std::uint64_t i) const; // x^(p^i)

    // Nonzero quadratic-residue test via x^((q-1)/2); is_square(0) = true.
    bool is_square() const;
    // Smallest square root in canonical element order; throws if none.
    // Intended for small enumerable fields (scans squares).
    FieldElem sqrt() const;

    std::string to_string() const;

  private:
    friend class FieldCtx;
    friend class UniPoly;
    FieldElem(Ctx ctx, std::vector<std::uint32_t> c) : ctx_(ctx), c_(std::move(c)) {}
    Ctx ctx_;
    std::vector<std::uint32_t> c_;
};

// x^(p^i) — spec-facing name.
FieldElem frobenius(const FieldElem& x, std::uint64_t i);

// Image of x under the embedding of its field into dst (same p, and the
// source degree must divide the destination degree).  The embedding sends
// the source generator to the canonically first root of the source modulus
// in dst; it is computed once per (source, destination) pair and cached.
FieldElem embed(const FieldElem& x, Ctx dst);

// ---------------------------------------------------------------------------
// UniPoly — dense univariate polynomials over a field context
// ---------------------------------------------------------------------------

class UniPoly {
  public:
    UniPoly() : ctx_(nullptr) {}
    explicit UniPoly(Ctx ctx) : ctx_(ctx) {} // zero polynomial
    UniPoly(Ctx ctx, std::vector<FieldElem> coeffs);
    static UniPoly from_ints(Ctx ctx, const std::vector<std::int64_t>& coeffs);
    static UniPoly x(Ctx ctx); // the monomial x

    Ctx ctx() const { return ctx_; }
    // Degree; -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<FieldElem>& coeffs() const { return c_; }
    // Coefficient of x^i (zero element beyond the degree).
    FieldElem coeff(std::size_t i) const;
    FieldElem lead() const; // throws on zero polynomial

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const FieldElem& s) const;
    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    // Euclidean division by a nonzero divisor: *this = q*d + r, deg r < deg d.
    void divrem(const UniPoly& d, UniPoly& q, UniPoly& r) const;
    UniPoly operator%(const UniPoly& d) const;
    UniPoly operator/(const UniPoly& d) const; // exact or truncating quotient

    UniPoly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    UniPoly make_monic() const; // throws on zero polynomial
    UniPoly shift_scale(const FieldElem& s) const; // f(s*x)

    std::string to_csv() const;               // "d0,d1,...,dn", low first
    std::string to_pretty(const std::string& var) const; // "x^2+2*x" style
    static UniPoly parse_csv(Ctx ctx, const std::string& s);

  private:
    void trim();
    Ctx ctx_;
    std::vector<FieldElem> c_; // low first; empty = zero; no trailing zeros
};

UniPoly gcd(const UniPoly& a, const UniPoly& b); // monic gcd (or zero)
UniPoly pow_mod(const UniPoly& base, unsigned __int128 e, const UniPoly& mod);

// True iff gcd(f, f') is constant (and f' != 0 when deg f > 0); in
// characteristic p a vanishing derivative means f is a p-th power, hence
// not squarefree for deg f > 0.
bool is_squarefree(const UniPoly& f);

struct FactorDecomp {
    FieldElem lead;                                // overall leading coefficient
    std::vector<std::pair<UniPoly, int>> factors;  // monic irreducible, multiplicity
};

// Complete factorization over the coefficient field: squarefree
// decomposition, then distinct-degree splitting, then seeded equal-degree
// Cantor-Zassenhaus.  The factor list is sorted canonically (degree, then
// coefficient tuples), so the output does not depend on the seed.
FactorDecomp factor_univar(const UniPoly& f, std::uint64_t seed = 0);

// All roots of f in the field dst (an extension of f's coefficient field),
// sorted canonically.  Multiple roots are listed once.
std::vector<FieldElem> roots_in_ext(const UniPoly& f, Ctx dst, std::uint64_t seed = 0);

// Exhaustive-scan reference for roots_in_ext; requires dst->order() <= 10^6.
std::vector<FieldElem> roots_by_scan(const UniPoly& f, Ctx dst);

// True iff f is irreducible over its coefficient field (deg >= 1).
bool is_irreducible(const UniPoly& f);

} // namespace prymrank
