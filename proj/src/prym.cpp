// SPDX-License-Identifier: MIT
//
// See include/prymrank/prym.hpp.

#include "prymrank/prym.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace prymrank {

namespace {

ExpVec ev3(unsigned a, unsigned b, unsigned c) {
    return ExpVec{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                  static_cast<std::uint16_t>(c), 0};
}

ExpVec ev4(unsigned a, unsigned b, unsigned c, unsigned d) {
    return ExpVec{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                  static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)};
}

} // namespace

// ---------------------------------------------------------------------------
// QuadTriple
// ---------------------------------------------------------------------------

QuadTriple::QuadTriple(Ctx ctx, Mat3 m1, Mat3 m2, Mat3 m3) : ctx_(ctx), m_{m1, m2, m3} {
    if (ctx == nullptr) throw std::invalid_argument("QuadTriple: null context");
    for (const Mat3& m : m_)
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (!(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
                      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]))
                    throw std::invalid_argument("QuadTriple: matrix is not symmetric");
}

QuadTriple QuadTriple::from_q15(Ctx ctx, const std::vector<FieldElem>& q) {
    if (ctx == nullptr) throw std::invalid_argument("QuadTriple: null context");
    if (q.size() != 15)
        throw std::invalid_argument("QuadTriple: expected 15 coefficients, got " +
                                    std::to_string(q.size()));
    FieldElem half = ctx->from_int(2).inv();
    auto blank = [&] {
        Mat3 m;
        for (auto& row : m) row = {ctx->zero(), ctx->zero(), ctx->zero()};
        return m;
    };
    // A full form arrives as (q11, q12, q22, q13, q23, q33).
    auto full = [&](const FieldElem* c) {
        Mat3 m = blank();
        m[0][0] = c[0];
        m[1][1] = c[2];
        m[2][2] = c[5];
        m[0][1] = m[1][0] = c[1] * half;
        m[0][2] = m[2][0] = c[3] * half;
        m[1][2] = m[2][1] = c[4] * half;
        return m;
    };
    Mat3 m1 = full(&q[0]);
    Mat3 m2 = blank(); // Q2 is diagonal in this format
    m2[0][0] = q[6];
    m2[1][1] = q[7];
    m2[2][2] = q[8];
    Mat3 m3 = full(&q[9]);
    return QuadTriple(ctx, m1, m2, m3);
}

QuadTriple QuadTriple::from_q15_ints(Ctx ctx, const std::vector<std::int64_t>& q) {
    std::vector<FieldElem> v;
    v.reserve(q.size());
    for (std::int64_t x : q) v.push_back(ctx->from_int(x));
    return from_q15(ctx, v);
}

const QuadTriple::Mat3& QuadTriple::m(int i) const {
    if (i < 1 || i > 3) throw std::invalid_argument("QuadTriple::m: index must be 1..3");
    return m_[static_cast<std::size_t>(i - 1)];
}

MPoly QuadTriple::quadratic_form(int i) const {
    const Mat3& m = this->m(i);
    MPoly q(ctx_, 3);
    for (unsigned a = 0; a < 3; ++a) {
        q.add_term(ev3(a == 0 ? 2 : 0, a == 1 ? 2 : 0, a == 2 ? 2 : 0), m[a][a]);
        for (unsigned b = a + 1; b < 3; ++b) {
            FieldElem c = m[a][b] + m[b][a]; // 2 * m[a][b]
            q.add_term(ev3((a == 0) + (b == 0), (a == 1) + (b == 1), (a == 2) + (b == 2)), c);
        }
    }
    return q;
}

std::vector<FieldElem> QuadTriple::to_q15() const {
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!m_[1][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].is_zero())
                throw std::invalid_argument(
                    "QuadTriple::to_q15: the exchange format requires a diagonal Q2");
    FieldElem two = ctx_->from_int(2);
    auto put_full = [&](const Mat3& m, std::vector<FieldElem>& out) {
        out.push_back(m[0][0]);
        out.push_back(two * m[0][1]);
        out.push_back(m[1][1]);
        out.push_back(two * m[0][2]);
        out.push_back(two * m[1][2]);
        out.push_back(m[2][2]);
    };
    std::vector<FieldElem> out;
    out.reserve(15);
    put_full(m_[0], out);
    out.push_back(m_[1][0][0]);
    out.push_back(m_[1][1][1]);
    out.push_back(m_[1][2][2]);
    put_full(m_[2], out);
    return out;
}

MPoly bruin_quartic(const QuadTriple& q) {
    MPoly q1 = q.quadratic_form(1);
    MPoly q2 = q.quadratic_form(2);
    MPoly q3 = q.quadratic_form(3);
    return q2 * q2 - q1 * q3;
}

Genus2Curve bruin_prym_sextic(const QuadTriple& q) {
    Ctx ctx = q.ctx();
    // Entry (i,j) of M1 + 2x M2 + x^2 M3 as a quadratic in x.
    auto entry = [&](int i, int j) {
        std::vector<FieldElem> c{
            q.m(1)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            ctx->from_int(2) * q.m(2)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            q.m(3)[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]};
        return UniPoly(ctx, std::move(c));
    };
    UniPoly det = entry(0, 0) * (entry(1, 1) * entry(2, 2) - entry(1, 2) * entry(2, 1)) -
                  entry(0, 1) * (entry(1, 0) * entry(2, 2) - entry(1, 2) * entry(2, 0)) +
                  entry(0, 2) * (entry(1, 0) * entry(2, 1) - entry(1, 1) * entry(2, 0));
    UniPoly d = det * ctx->from_int(-1);
    if (d.is_zero())
        throw std::invalid_argument("bruin_prym_sextic: D(x) is identically zero");
    std::vector<FieldElem> coeffs;
    for (int i = 0; i <= d.deg(); ++i) coeffs.push_back(d.coeff(static_cast<std::size_t>(i)));
    return Genus2Curve(ctx, std::move(coeffs)); // enforces deg in {5, 6}
}

// ---------------------------------------------------------------------------
// Kummer surface
// ---------------------------------------------------------------------------

KummerSurface kummer_surface(const Genus2Curve& z) {
    Ctx ctx = z.ctx();
    const std::vector<FieldElem>& d = z.d();
    auto c = [&](std::int64_t n) { return ctx->from_int(n); };

    MPoly kappa(ctx, 4);
    // K2 X4^2 with K2 = X2^2 - 4 X1 X3.
    kappa.add_term(ev4(0, 2, 0, 2), c(1));
    kappa.add_term(ev4(1, 0, 1, 2), c(-4));
    // K1 X4 = -2(2 d0 X1^3 + d1 X1^2 X2 + 2 d2 X1^2 X3 + d3 X1 X2 X3
    //           + 2 d4 X1 X3^2 + d5 X2 X3^2 + 2 d6 X3^3) X4.
    kappa.add_term(ev4(3, 0, 0, 1), c(-4) * d[0]);
    kappa.add_term(ev4(2, 1, 0, 1), c(-2) * d[1]);
    kappa.add_term(ev4(2, 0, 1, 1), c(-4) * d[2]);
    kappa.add_term(ev4(1, 1, 1, 1), c(-2) * d[3]);
    kappa.add_term(ev4(1, 0, 2, 1), c(-4) * d[4]);
    kappa.add_term(ev4(0, 1, 2, 1), c(-2) * d[5]);
    kappa.add_term(ev4(0, 0, 3, 1), c(-4) * d[6]);
    // K0.
    kappa.add_term(ev4(4, 0, 0, 0), d[1] * d[1] - c(4) * d[0] * d[2]);
    kappa.add_term(ev4(3, 1, 0, 0), c(-4) * d[0] * d[3]);
    kappa.add_term(ev4(3, 0, 1, 0), c(-2) * d[1] * d[3]);
    kappa.add_term(ev4(2, 2, 0, 0), c(-4) * d[0] * d[4]);
    kappa.add_term(ev4(2, 1, 1, 0), c(4) * (d[0] * d[5] - d[1] * d[4]));
    kappa.add_term(ev4(2, 0, 2, 0),
                   d[3] * d[3] + c(2) * d[1] * d[5] - c(4) * d[2] * d[4] - c(4) * d[0] * d[6]);
    kappa.add_term(ev4(1, 3, 0, 0), c(-4) * d[0] * d[5]);
    kappa.add_term(ev4(1, 2, 1, 0), c(4) * (c(2) * d[0] * d[6] - d[1] * d[5]));
    kappa.add_term(ev4(1, 1, 2, 0), c(4) * (d[1] * d[6] - d[2] * d[5]));
    kappa.add_term(ev4(1, 0, 3, 0), c(-2) * d[3] * d[5]);
    kappa.add_term(ev4(0, 4, 0, 0), c(-4) * d[0] * d[6]);
    kappa.add_term(ev4(0, 3, 1, 0), c(-4) * d[1] * d[6]);
    kappa.add_term(ev4(0, 2, 2, 0), c(-4) * d[2] * d[6]);
    kappa.add_term(ev4(0, 1, 3, 0), c(-4) * d[3] * d[6]);
    kappa.add_term(ev4(0, 0, 4, 0), d[5] * d[5] - c(4) * d[4] * d[6]);
    return KummerSurface{z, std::move(kappa)};
}

std::array<FieldElem, 4> kummer_phi(const Genus2Curve& z,
                                    const std::pair<FieldElem, FieldElem>& p1,
                                    const std::pair<FieldElem, FieldElem>& p2) {
    const FieldElem &x1 = p1.first, &z1 = p1.second;
    const FieldElem &x2 = p2.first, &z2 = p2.second;
    // Points may live over an extension of the curve's coefficient field.
    Ctx ctx = x1.ctx();
    if (ctx == nullptr) throw std::invalid_argument("kummer_phi: uninitialized point");
    std::vector<FieldElem> d;
    d.reserve(7);
    for (const FieldElem& di : z.d()) d.push_back(embed(di, ctx));
    auto on_curve = [&](const FieldElem& x, const FieldElem& zz) {
        FieldElem val = ctx->zero();
        for (int i = 6; i >= 0; --i) val = val * x + d[static_cast<std::size_t>(i)];
        return zz * zz == val;
    };
    if (!on_curve(x1, z1) || !on_curve(x2, z2))
        throw std::invalid_argument("kummer_phi: point is not on the curve");
    if (x1 == x2)
        throw std::invalid_argument("kummer_phi: x1 = x2 is a pole of the coordinate formula");
    FieldElem s = x1 + x2;
    FieldElem m = x1 * x2;
    FieldElem two = ctx->from_int(2);
    FieldElem f0 = two * d[0] + d[1] * s + two * d[2] * m + d[3] * s * m + two * d[4] * m * m +
                   d[5] * s * m * m + two * d[6] * m * m * m;
    FieldElem diff = x1 - x2;
    FieldElem beta0 = (f0 - two * z1 * z2) / (diff * diff);
    return {ctx->one(), s, m, beta0};
}

// ---------------------------------------------------------------------------
// Planes and sections
// ---------------------------------------------------------------------------

Plane::Plane(Ctx ctx, FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : ctx_(ctx), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (ctx == nullptr) throw std::invalid_argument("Plane: null context");
    if (a_.is_zero() && b_.is_zero() && c_.is_zero() && d_.is_zero())
        throw std::invalid_argument("Plane: all coefficients vanish");
    if (!d_.is_zero() && !d_.is_one()) {
        FieldElem inv = d_.inv();
        a_ = a_ * inv;
        b_ = b_ * inv;
        c_ = c_ * inv;
        d_ = ctx->one();
    }
}

Plane Plane::from_ints(Ctx ctx, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    return Plane(ctx, ctx->from_int(a), ctx->from_int(b), ctx->from_int(c), ctx->from_int(d));
}

MPoly Plane::to_poly() const {
    MPoly v(ctx_, 4);
    v.add_term(ev4(1, 0, 0, 0), a_);
    v.add_term(ev4(0, 1, 0, 0), b_);
    v.add_term(ev4(0, 0, 1, 0), c_);
    v.add_term(ev4(0, 0, 0, 1), d_);
    return v;
}

PlaneSection plane_section(const KummerSurface& k, const Plane& v) {
    Ctx ctx = k.source.ctx();
    if (!ctx->same_field(*v.ctx()))
        throw std::invalid_argument("plane_section: plane and surface over different fields");
    if (v.d().is_zero())
        throw std::invalid_argument(
            "plane_section: the plane passes through the singular node (0:0:0:1); take d != 0");
    // X4 := -(a X1 + b X2 + c X3) (d is normalized to 1).
    MPoly solved(ctx, 4);
    solved.add_term(ev4(1, 0, 0, 0), -v.a());
    solved.add_term(ev4(0, 1, 0, 0), -v.b());
    solved.add_term(ev4(0, 0, 1, 0), -v.c());
    MPoly substituted = k.kappa.subst(3, solved);
    MPoly ternary(ctx, 3);
    for (const auto& [key, c] : substituted.terms()) {
        ExpVec e = unpack_exps(key);
        ternary.add_term(ev3(e[0], e[1], e[2]), c);
    }
    return PlaneSection{v.to_poly(), k.kappa, std::move(ternary)};
}

// ---------------------------------------------------------------------------
// Smoothness of ternary quartics
// ---------------------------------------------------------------------------

namespace {

// f composed with the linear substitution x_i := sum_j m[i][j] y_j.
MPoly apply_change(const MPoly& f, const std::array<std::array<FieldElem, 3>, 3>& m) {
    Ctx ctx = f.ctx();
    std::array<MPoly, 3> imgs{MPoly(ctx, 3), MPoly(ctx, 3), MPoly(ctx, 3)};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j)
            imgs[i].add_term(ev3(j == 0, j == 1, j == 2), m[i][j]);
    MPoly out(ctx, 3);
    for (const auto& [key, c] : f.terms()) {
        ExpVec e = unpack_exps(key);
        MPoly term = MPoly::constant(ctx, 3, c);
        for (unsigned i = 0; i < 3; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * imgs[i];
        out = out + term;
    }
    return out;
}

FieldElem det3(const std::array<std::array<FieldElem, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Univariate in w obtained by fixing (u, v) := (u0, v0) over the field of u0.
UniPoly fix_uv(const MPoly& g, const FieldElem& u0, const FieldElem& v0) {
    Ctx dst = u0.ctx();
    MPoly gg = dst->same_field(*g.ctx()) ? g : embed_mpoly(g, dst);
    return gg.eval_partial(0, u0).eval_partial(1, v0).to_univar(2);
}

// True iff the three partials share a root (u0 : v0 : w) for some w over
// the algebraic closure.
bool candidate_hits(const std::array<MPoly, 3>& g, const FieldElem& u0, const FieldElem& v0) {
    UniPoly acc = fix_uv(g[0], u0, v0);
    acc = gcd(acc, fix_uv(g[1], u0, v0));
    acc = gcd(acc, fix_uv(g[2], u0, v0));
    // A zero gcd means all three specializations vanish identically: the
    // whole line above (u0 : v0) is singular.
    return acc.is_zero() || acc.deg() >= 1;
}

bool smooth_core(const MPoly& f, std::uint64_t seed);

// Retry the test over a base-field extension (smoothness is geometric).
bool smooth_over_extension(const MPoly& f, int ext_degree, std::uint64_t seed) {
    Ctx ctx = f.ctx();
    Ctx big = make_ext(ctx->p(), static_cast<std::uint32_t>(ctx->k() * ext_degree));
    return smooth_core(embed_mpoly(f, big), seed + 1);
}

bool smooth_core(const MPoly& f, std::uint64_t seed) {
    Ctx ctx = f.ctx();
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 12345);

    // Position the curve so the first partial has a unit w^3 coefficient.
    MPoly moved = f;
    bool positioned = false;
    const std::uint64_t order = ctx->order();
    for (int attempt = 0; attempt < 220 && !positioned; ++attempt) {
        std::array<std::array<FieldElem, 3>, 3> m;
        if (attempt == 0) {
            // Try the identity first so already-good inputs stay untouched.
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned j = 0; j < 3; ++j)
                    m[i][j] = (i == j) ? ctx->one() : ctx->zero();
        } else {
            for (unsigned i = 0; i < 3; ++i)
                for (unsigned j = 0; j < 3; ++j) m[i][j] = ctx->element_at(rng() % order);
            if (det3(m).is_zero()) continue;
        }
        MPoly cand = (attempt == 0) ? f : apply_change(f, m);
        MPoly g1 = cand.partial(0);
        if (!g1.coeff(ev3(0, 0, 3)).is_zero()) {
            moved = std::move(cand);
            positioned = true;
        }
    }
    if (!positioned) {
        // The base field is too small to move the curve into general
        // position; pass to a quadratic extension and retry (bounded by the
        // context's degree cap, which a quartic system never approaches).
        return smooth_over_extension(f, 2, seed);
    }

    std::array<MPoly, 3> g{moved.partial(0), moved.partial(1), moved.partial(2)};
    // With two or fewer nonzero partials, the singular system cuts at most
    // two hypersurfaces in the projective plane, which always intersect.
    int nonzero = 0;
    for (const MPoly& gi : g) nonzero += gi.is_zero() ? 0 : 1;
    if (nonzero <= 2) return false;

    // Eliminate w against the unit-leading first partial.  An identically
    // zero resultant certifies a common positive-w-degree factor; its curve
    // meets the remaining partial's curve, so a singular point exists.
    MPoly a = resultant_wrt(g[0], g[1], 2);
    if (a.is_zero()) return false;
    MPoly b = resultant_wrt(g[0], g[2], 2);
    if (b.is_zero()) return false;

    // Common (u : v) candidates.  All common zeros have (u, v) != (0, 0)
    // because g1(0, 0, w) = c w^3 with c a unit.
    FieldElem one = ctx->one();
    FieldElem zero = ctx->zero();
    // The point (1 : 0):
    if (a.eval({one, zero, zero}).is_zero() && b.eval({one, zero, zero}).is_zero())
        if (candidate_hits(g, one, zero)) return false;
    // Points (u0 : 1): common roots of the two resultants at v = 1.
    UniPoly au = a.eval_partial(1, one).to_univar(0);
    UniPoly bu = b.eval_partial(1, one).to_univar(0);
    UniPoly common = gcd(au, bu);
    if (common.is_zero()) {
        // Unreachable: a nonzero homogeneous bivariate polynomial cannot
        // vanish identically after setting v = 1.
        throw std::logic_error("is_smooth_plane_quartic: resultant dehomogenization vanished");
    }
    if (common.deg() >= 1) {
        FactorDecomp fac = factor_univar(common, seed);
        for (const auto& [m, mult] : fac.factors) {
            (void)mult;
            int dm = m.deg();
            if (dm < 1) continue;
            std::uint32_t target = static_cast<std::uint32_t>(ctx->k()) *
                                   static_cast<std::uint32_t>(dm);
            Ctx dst = (target == 1) ? FieldCtx::prime_field(ctx->p())
                                    : make_ext(ctx->p(), target);
            for (const FieldElem& u0 : roots_in_ext(m, dst)) {
                if (candidate_hits(g, u0, dst->one())) return false;
            }
        }
    }
    return true;
}

} // namespace

bool is_smooth_plane_quartic(const MPoly& f, std::uint64_t seed) {
    if (f.ctx() == nullptr) throw std::invalid_argument("is_smooth_plane_quartic: uninitialized");
    if (f.nvars() != 3)
        throw std::invalid_argument("is_smooth_plane_quartic: expected a ternary form");
    int d = 0;
    if (!f.is_homogeneous(d) || d != 4)
        throw std::invalid_argument(
            "is_smooth_plane_quartic: input must be homogeneous of degree 4");
    return smooth_core(f, seed);
}

bool has_low_degree_singular_point(const MPoly& f, int max_k) {
    if (f.ctx() == nullptr || f.nvars() != 3)
        throw std::invalid_argument("has_low_degree_singular_point: expected a ternary form");
    Ctx base = f.ctx();
    const std::uint32_t p = base->p();
    std::array<MPoly, 3> g{f.partial(0), f.partial(1), f.partial(2)};
    for (int k = 1; k <= max_k; ++k) {
        std::uint32_t deg = static_cast<std::uint32_t>(base->k()) * static_cast<std::uint32_t>(k);
        long double pts = 1.0L;
        for (std::uint32_t i = 0; i < 2 * deg; ++i) pts *= p;
        if (pts > 1e8L) break;
        Ctx kk = (deg == 1) ? FieldCtx::prime_field(p) : make_ext(p, deg);
        std::array<MPoly, 3> gg{embed_mpoly(g[0], kk), embed_mpoly(g[1], kk),
                                embed_mpoly(g[2], kk)};
        const std::uint64_t n = kk->order();
        auto vanish_all = [&](const FieldElem& u, const FieldElem& v, const FieldElem& w) {
            for (const MPoly& gi : gg)
                if (!gi.eval({u, v, w}).is_zero()) return false;
            return true;
        };
        FieldElem one = kk->one();
        // Charts (1 : v : w), (0 : 1 : w), (0 : 0 : 1).
        for (std::uint64_t iv = 0; iv < n; ++iv)
            for (std::uint64_t iw = 0; iw < n; ++iw)
                if (vanish_all(one, kk->element_at(iv), kk->element_at(iw))) return true;
        for (std::uint64_t iw = 0; iw < n; ++iw)
            if (vanish_all(kk->zero(), one, kk->element_at(iw))) return true;
        if (vanish_all(kk->zero(), kk->zero(), one)) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Named families
// ---------------------------------------------------------------------------

namespace {

void require_char3(Ctx ctx, const char* who) {
    if (ctx->p() != 3)
        throw std::invalid_argument(std::string(who) + ": family is defined in characteristic 3");
}

} // namespace

Genus2Curve family_z_alpha(const FieldElem& alpha) {
    Ctx ctx = alpha.ctx();
    if (ctx == nullptr) throw std::invalid_argument("family_z_alpha: uninitialized element");
    require_char3(ctx, "family_z_alpha");
    FieldElem one = ctx->one();
    if (alpha.is_zero() || alpha == one || alpha == -one)
        throw std::invalid_argument("family_z_alpha: alpha must avoid {0, 1, -1}");
    UniPoly A(ctx, {alpha + one, alpha, -alpha, one});
    UniPoly b1(ctx, {-alpha, one});
    UniPoly b2(ctx, {-(alpha + one), one});
    UniPoly b3(ctx, {alpha + one, alpha});
    UniPoly D = A * b1 * b2 * b3;
    std::vector<FieldElem> coeffs;
    for (int i = 0; i <= D.deg(); ++i) coeffs.push_back(D.coeff(static_cast<std::size_t>(i)));
    return Genus2Curve(ctx, std::move(coeffs));
}

Genus2Curve family_z_tu(const FieldElem& t, const FieldElem& u) {
    Ctx ctx = t.ctx();
    if (ctx == nullptr) throw std::invalid_argument("family_z_tu: uninitialized element");
    require_char3(ctx, "family_z_tu");
    if (!ctx->same_field(*u.ctx()))
        throw std::invalid_argument("family_z_tu: t and u from different fields");
    if (t == u) throw std::invalid_argument("family_z_tu: t = u gives a singular member");
    return Genus2Curve(ctx, {ctx->one(), u, t, ctx->one(), u, t, ctx->one()});
}

Genus2Curve family_simple_z(const FieldElem& a0, const FieldElem& a, const FieldElem& b,
                            const FieldElem& c) {
    Ctx ctx = a0.ctx();
    if (ctx == nullptr) throw std::invalid_argument("family_simple_z: uninitialized element");
    if (a0.is_zero()) throw std::invalid_argument("family_simple_z: A0 must be nonzero");
    if (c.is_zero()) throw std::invalid_argument("family_simple_z: C must be nonzero");
    // (x^3 - x)(A0 x^3 + A x^2 + B x + C) expanded:
    // d6 = A0, d5 = A, d4 = B - A0, d3 = C - A, d2 = -B, d1 = -C, d0 = 0.
    return Genus2Curve(ctx, {ctx->zero(), -c, -b, c - a, b - a0, a, a0});
}

} // namespace prymrank
