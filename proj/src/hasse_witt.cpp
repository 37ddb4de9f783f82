// SPDX-License-Identifier: MIT
//
// Hasse-Witt / Cartier-Manin constructions.  See
// include/prymrank/hasse_witt.hpp for conventions.

#include "prymrank/hasse_witt.hpp"

#include <array>
#include <functional>
#include <stdexcept>

namespace prymrank {

// ---------------------------------------------------------------------------
// HWMatrix
// ---------------------------------------------------------------------------

HWMatrix::HWMatrix(Ctx c, int size, std::string basis_tag)
    : ctx(c), n(size), basis(std::move(basis_tag)) {
    if (c == nullptr) throw std::invalid_argument("HWMatrix: null context");
    if (size < 1 || size > 4) throw std::invalid_argument("HWMatrix: size must be 1..4");
    e.assign(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), c->zero());
}

FieldElem& HWMatrix::at(int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("HWMatrix::at");
    return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
}

const FieldElem& HWMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("HWMatrix::at");
    return e[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
}

HWMatrix HWMatrix::transpose() const {
    HWMatrix t(ctx, n, basis);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(j, i) = at(i, j);
    return t;
}

HWMatrix HWMatrix::with_basis(const std::string& tag) const {
    HWMatrix t = *this;
    t.basis = tag;
    return t;
}

bool HWMatrix::is_zero() const {
    for (const FieldElem& x : e)
        if (!x.is_zero()) return false;
    return true;
}

bool HWMatrix::operator==(const HWMatrix& o) const {
    if (ctx == nullptr || o.ctx == nullptr)
        throw std::invalid_argument("comparison of uninitialized matrix");
    if (basis != o.basis)
        throw std::invalid_argument(
            "refusing to compare matrices in different bases ('" + basis + "' vs '" + o.basis +
            "'); retag explicitly if this is intended");
    if (!ctx->same_field(*o.ctx) || n != o.n) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (!(e[i] == o.e[i])) return false;
    return true;
}

HWMatrix mat_mul(const HWMatrix& a, const HWMatrix& b) {
    if (a.ctx == nullptr || b.ctx == nullptr)
        throw std::invalid_argument("mat_mul: uninitialized matrix");
    if (!a.ctx->same_field(*b.ctx) || a.n != b.n)
        throw std::invalid_argument("mat_mul: incompatible matrices");
    HWMatrix r(a.ctx, a.n, a.basis);
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) {
            FieldElem acc = a.ctx->zero();
            for (int k = 0; k < a.n; ++k) acc = acc + a.at(i, k) * b.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

int rank_of(const HWMatrix& h) {
    if (h.ctx == nullptr) throw std::invalid_argument("rank_of: uninitialized matrix");
    HWMatrix m = h;
    int rank = 0;
    for (int col = 0; col < m.n && rank < m.n; ++col) {
        int piv = -1;
        for (int row = rank; row < m.n; ++row)
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < m.n; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        FieldElem inv = m.at(rank, col).inv();
        for (int row = rank + 1; row < m.n; ++row) {
            if (m.at(row, col).is_zero()) continue;
            FieldElem f = m.at(row, col) * inv;
            for (int j = col; j < m.n; ++j) m.at(row, j) = m.at(row, j) - f * m.at(rank, j);
        }
        ++rank;
    }
    return rank;
}

HWMatrix frobenius_twist(const HWMatrix& h, std::uint64_t i) {
    HWMatrix t = h;
    for (FieldElem& x : t.e) x = x.frobenius_pow(i);
    return t;
}

int p_rank(const HWMatrix& h, int g) {
    if (h.n != g) throw std::invalid_argument("p_rank: matrix size does not match the genus");
    HWMatrix prod = h;
    for (int i = 1; i < g; ++i) prod = mat_mul(prod, frobenius_twist(h, static_cast<std::uint64_t>(i)));
    return rank_of(prod);
}

// ---------------------------------------------------------------------------
// Genus2Curve
// ---------------------------------------------------------------------------

Genus2Curve::Genus2Curve(Ctx ctx, std::vector<FieldElem> d) : ctx_(ctx) {
    if (ctx == nullptr) throw std::invalid_argument("Genus2Curve: null context");
    if (d.size() > 7) throw std::invalid_argument("Genus2Curve: more than 7 coefficients");
    while (d.size() < 7) d.push_back(ctx->zero());
    d_ = d;
    D_ = UniPoly(ctx, std::move(d));
    if (D_.deg() != 5 && D_.deg() != 6)
        throw std::invalid_argument("Genus2Curve: deg D must be 5 or 6, got " +
                                    std::to_string(D_.deg()));
    squarefree_ = is_squarefree(D_);
}

Genus2Curve Genus2Curve::from_ints(Ctx ctx, const std::vector<std::int64_t>& d) {
    std::vector<FieldElem> v;
    v.reserve(d.size());
    for (std::int64_t x : d) v.push_back(ctx->from_int(x));
    return Genus2Curve(ctx, std::move(v));
}

// ---------------------------------------------------------------------------
// Index tables
// ---------------------------------------------------------------------------

std::uint64_t cm_exponent(std::uint32_t p, int i, int j) {
    return static_cast<std::uint64_t>(i) * p - static_cast<std::uint64_t>(j);
}

std::uint64_t hyper_hw_exponent(std::uint32_t p, int i, int j) {
    return static_cast<std::uint64_t>(j) * p - static_cast<std::uint64_t>(i);
}

std::pair<std::uint64_t, std::uint64_t> quartic_exponents(std::uint32_t p, int r, int c) {
    std::uint64_t ue = static_cast<std::uint64_t>(p) * (1 + (c == 2 ? 1 : 0)) -
                       static_cast<std::uint64_t>(1 + (r == 2 ? 1 : 0));
    std::uint64_t ve = static_cast<std::uint64_t>(p) * (1 + (c == 3 ? 1 : 0)) -
                       static_cast<std::uint64_t>(1 + (r == 3 ? 1 : 0));
    return {ue, ve};
}

ExpVec section_gamma_exponents(std::uint32_t p, int i, int j) {
    ExpVec e{0, 0, 0, 0};
    for (int m = 1; m <= 4; ++m)
        e[static_cast<std::size_t>(m - 1)] = static_cast<std::uint16_t>(
            p * (1 + (m == j ? 1 : 0)) - static_cast<std::uint32_t>(1 + (m == i ? 1 : 0)));
    return e;
}

// ---------------------------------------------------------------------------
// Hyperelliptic constructions
// ---------------------------------------------------------------------------

namespace {

UniPoly half_power(const UniPoly& f) {
    // f^((p-1)/2) by binary powering on dense univariate polynomials.
    const std::uint32_t p = f.ctx()->p();
    std::uint32_t e = (p - 1) / 2;
    UniPoly acc = UniPoly::from_ints(f.ctx(), {1});
    UniPoly base = f;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

void require_squarefree(const UniPoly& f, bool force, const char* who) {
    if (force) return;
    if (!is_squarefree(f))
        throw std::invalid_argument(std::string(who) +
                                    ": defining polynomial is not squarefree (pass force to "
                                    "compute anyway)");
}

} // namespace

HWMatrix cartier_manin_hyperelliptic(const UniPoly& f, bool force) {
    if (f.deg() < 3)
        throw std::invalid_argument("cartier_manin_hyperelliptic: deg f must be at least 3");
    require_squarefree(f, force, "cartier_manin_hyperelliptic");
    const int g = (f.deg() - 1) / 2;
    const std::uint32_t p = f.ctx()->p();
    UniPoly fp = half_power(f);
    HWMatrix m(f.ctx(), g, kBasisCartierManin);
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            m.at(i - 1, j - 1) = fp.coeff(cm_exponent(p, i, j));
    return m;
}

HWMatrix cartier_manin_hyperelliptic(const Genus2Curve& z, bool force) {
    return cartier_manin_hyperelliptic(z.D(), force);
}

HWMatrix hasse_witt_hyperelliptic(const UniPoly& D, bool force) {
    if (D.deg() != 5 && D.deg() != 6)
        throw std::invalid_argument("hasse_witt_hyperelliptic: deg D must be 5 or 6");
    require_squarefree(D, force, "hasse_witt_hyperelliptic");
    const std::uint32_t p = D.ctx()->p();
    UniPoly dp = half_power(D);
    HWMatrix m(D.ctx(), 2, kBasisHyper);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            m.at(i - 1, j - 1) = dp.coeff(hyper_hw_exponent(p, i, j));
    return m;
}

HWMatrix hasse_witt_hyperelliptic(const Genus2Curve& z, bool force) {
    return hasse_witt_hyperelliptic(z.D(), force);
}

// ---------------------------------------------------------------------------
// Plane quartic
// ---------------------------------------------------------------------------

HWMatrix hasse_witt_quartic(const MPoly& q) {
    if (q.ctx() == nullptr) throw std::invalid_argument("hasse_witt_quartic: uninitialized input");
    if (q.total_degree() != 4)
        throw std::invalid_argument("hasse_witt_quartic: total degree must be 4");
    if (q.nvars() < 2) throw std::invalid_argument("hasse_witt_quartic: need a bivariate model");
    const std::uint32_t p = q.ctx()->p();
    MPoly qp = mp_pow(q, p - 1);
    HWMatrix m(q.ctx(), 3, kBasisQuartic);
    for (int r = 1; r <= 3; ++r)
        for (int c = 1; c <= 3; ++c) {
            auto [ue, ve] = quartic_exponents(p, r, c);
            ExpVec ex{static_cast<std::uint16_t>(ue), static_cast<std::uint16_t>(ve), 0, 0};
            m.at(r - 1, c - 1) = qp.coeff(ex);
        }
    return m;
}

// ---------------------------------------------------------------------------
// Space sections
// ---------------------------------------------------------------------------

FieldElem multinomial_coeff(Ctx ctx, std::uint32_t e, const ExpVec& parts) {
    const std::uint32_t p = ctx->p();
    if (e >= p) throw std::invalid_argument("multinomial_coeff: exponent must be < p");
    std::uint32_t sum = 0;
    for (std::uint16_t x : parts) sum += x;
    if (sum != e) throw std::invalid_argument("multinomial_coeff: parts do not sum to exponent");
    // Factorials mod p for arguments <= e < p: all units.
    FieldElem num = ctx->one();
    for (std::uint32_t i = 2; i <= e; ++i) num = num * ctx->from_int(i);
    FieldElem den = ctx->one();
    for (std::uint16_t x : parts)
        for (std::uint32_t i = 2; i <= x; ++i) den = den * ctx->from_int(i);
    return num / den;
}

MPoly linear_power_multinomial(const MPoly& v, std::uint32_t e) {
    if (v.ctx() == nullptr) throw std::invalid_argument("linear_power_multinomial: uninitialized");
    int d = 0;
    if (!v.is_homogeneous(d) || d != 1)
        throw std::invalid_argument("linear_power_multinomial: input must be homogeneous linear");
    if (e >= v.ctx()->p())
        throw std::invalid_argument("linear_power_multinomial: exponent must be < p");
    Ctx ctx = v.ctx();
    const int nv = v.nvars();
    // Gather the coefficient of each variable.
    std::array<FieldElem, 4> a{ctx->zero(), ctx->zero(), ctx->zero(), ctx->zero()};
    for (const auto& [k, c] : v.terms()) {
        ExpVec ex = unpack_exps(k);
        for (int m = 0; m < nv; ++m)
            if (ex[static_cast<std::size_t>(m)] == 1) a[static_cast<std::size_t>(m)] = c;
    }
    MPoly out(ctx, nv);
    // Enumerate all exponent splits of e among nv variables.
    ExpVec parts{0, 0, 0, 0};
    std::function<void(int, std::uint32_t)> rec = [&](int pos, std::uint32_t rem) {
        if (pos == nv - 1) {
            parts[static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(rem);
            FieldElem coeff = multinomial_coeff(ctx, e, parts);
            for (int m = 0; m < nv; ++m) {
                std::uint16_t pm = parts[static_cast<std::size_t>(m)];
                if (pm == 0) continue;
                if (a[static_cast<std::size_t>(m)].is_zero()) return;
                coeff = coeff * a[static_cast<std::size_t>(m)].pow(pm);
            }
            out.add_term(parts, coeff);
            return;
        }
        for (std::uint32_t t = 0; t <= rem; ++t) {
            parts[static_cast<std::size_t>(pos)] = static_cast<std::uint16_t>(t);
            rec(pos + 1, rem - t);
        }
    };
    rec(0, e);
    return out;
}

SectionExpander::SectionExpander(const MPoly& h) : h_(h) {
    if (h.ctx() == nullptr) throw std::invalid_argument("SectionExpander: uninitialized h");
    if (h.nvars() != 4) throw std::invalid_argument("SectionExpander: h must live in X1..X4");
    int d = 0;
    if (!h.is_homogeneous(d) || d != 4)
        throw std::invalid_argument("SectionExpander: h must be a homogeneous quartic");
    hp_ = mp_pow(h, h.ctx()->p() - 1);
}

FieldElem SectionExpander::coeff_vh(const MPoly& v, const ExpVec& e) const {
    // (vh)^(p-1) = v^(p-1) h^(p-1); convolve the (small) multinomial
    // expansion of v^(p-1) against the precomputed h^(p-1).
    MPoly vp = linear_power_multinomial(v, v.ctx()->p() - 1);
    FieldElem acc = v.ctx()->zero();
    for (const auto& [k, c] : vp.terms()) {
        ExpVec ev = unpack_exps(k);
        ExpVec rest;
        bool ok = true;
        for (int m = 0; m < 4; ++m) {
            if (e[static_cast<std::size_t>(m)] < ev[static_cast<std::size_t>(m)]) {
                ok = false;
                break;
            }
            rest[static_cast<std::size_t>(m)] = static_cast<std::uint16_t>(
                e[static_cast<std::size_t>(m)] - ev[static_cast<std::size_t>(m)]);
        }
        if (!ok) continue;
        acc = acc + c * hp_.coeff(rest);
    }
    return acc;
}

HWMatrix SectionExpander::h0_for(const MPoly& v) const {
    const std::uint32_t p = v.ctx()->p();
    // One shared v^(p-1) for all 16 coefficient reads.
    MPoly vp = linear_power_multinomial(v, p - 1);
    HWMatrix h0(v.ctx(), 4, kBasisSectionH0);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            ExpVec e = section_gamma_exponents(p, i, j);
            FieldElem acc = v.ctx()->zero();
            for (const auto& [k, c] : vp.terms()) {
                ExpVec ev = unpack_exps(k);
                ExpVec rest;
                bool ok = true;
                for (int m = 0; m < 4; ++m) {
                    if (e[static_cast<std::size_t>(m)] < ev[static_cast<std::size_t>(m)]) {
                        ok = false;
                        break;
                    }
                    rest[static_cast<std::size_t>(m)] = static_cast<std::uint16_t>(
                        e[static_cast<std::size_t>(m)] - ev[static_cast<std::size_t>(m)]);
                }
                if (!ok) continue;
                acc = acc + c * hp_.coeff(rest);
            }
            h0.at(i - 1, j - 1) = acc;
        }
    return h0;
}

SectionHW SectionExpander::section_for(const MPoly& v, int pivot) const {
    Ctx ctx = v.ctx();
    if (ctx == nullptr || !ctx->same_field(*h_.ctx()))
        throw std::invalid_argument("hasse_witt_section: v and h over different fields");
    if (v.nvars() != 4) throw std::invalid_argument("hasse_witt_section: v must live in X1..X4");
    int d = 0;
    if (!v.is_homogeneous(d) || d != 1)
        throw std::invalid_argument("hasse_witt_section: v must be a nonzero linear form");
    if (pivot < 1 || pivot > 4) throw std::invalid_argument("hasse_witt_section: pivot must be 1..4");
    std::array<FieldElem, 4> a{ctx->zero(), ctx->zero(), ctx->zero(), ctx->zero()};
    for (const auto& [k, c] : v.terms()) {
        ExpVec ex = unpack_exps(k);
        for (int m = 0; m < 4; ++m)
            if (ex[static_cast<std::size_t>(m)] == 1) a[static_cast<std::size_t>(m)] = c;
    }
    const FieldElem& at_piv = a[static_cast<std::size_t>(pivot - 1)];
    if (at_piv.is_zero())
        throw std::invalid_argument("hasse_witt_section: hyperplane coefficient a_t vanishes");
    // gcd(v, h) must be 1: since v is linear this means v does not divide h;
    // substitute the pivot variable solved from v = 0 and test for zero.
    MPoly solved(ctx, 4);
    FieldElem inv_neg = -(at_piv.inv());
    for (int m = 0; m < 4; ++m) {
        if (m == pivot - 1) continue;
        if (a[static_cast<std::size_t>(m)].is_zero()) continue;
        solved = solved + MPoly::var(ctx, 4, m) * (a[static_cast<std::size_t>(m)] * inv_neg);
    }
    if (h_.subst(pivot - 1, solved).is_zero())
        throw std::invalid_argument("hasse_witt_section: v divides h (section is degenerate)");

    const std::uint32_t p = ctx->p();
    SectionHW out{h0_for(v), HWMatrix(ctx, 3, kBasisSection)};
    FieldElem at_inv = at_piv.inv();
    FieldElem at_pm1 = at_piv.pow(p - 1);
    std::array<int, 3> idx{};
    int w = 0;
    for (int m = 1; m <= 4; ++m)
        if (m != pivot) idx[static_cast<std::size_t>(w++)] = m;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) {
            int i = idx[static_cast<std::size_t>(r)];
            int j = idx[static_cast<std::size_t>(c)];
            FieldElem gamma_ij = out.h0.at(i - 1, j - 1);
            FieldElem gamma_it = out.h0.at(i - 1, pivot - 1);
            FieldElem aj = a[static_cast<std::size_t>(j - 1)];
            out.hw.at(r, c) = at_pm1 * gamma_ij - aj.pow(p) * at_inv * gamma_it;
        }
    return out;
}

SectionHW hasse_witt_section(const MPoly& v, const MPoly& h, int pivot) {
    SectionExpander ex(h);
    return ex.section_for(v, pivot);
}

} // namespace prymrank
