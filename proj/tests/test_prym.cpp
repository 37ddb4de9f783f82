// SPDX-License-Identifier: MIT
//
// Tests for quadratic-form triples, Kummer surfaces, plane sections,
// quartic smoothness, and the named genus-2 families.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prymrank/prym.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

using namespace prymrank;

namespace {

ExpVec ev(unsigned a, unsigned b, unsigned c = 0, unsigned d = 0) {
    return ExpVec{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                  static_cast<std::uint16_t>(c), static_cast<std::uint16_t>(d)};
}

FieldElem rnd_elem(Ctx ctx, std::mt19937_64& rng) {
    return ctx->element_at(rng() % ctx->order());
}

FieldElem rnd_nonzero(Ctx ctx, std::mt19937_64& rng) {
    for (;;) {
        FieldElem e = rnd_elem(ctx, rng);
        if (!e.is_zero()) return e;
    }
}

// Equality up to a nonzero scalar factor.
bool proportional(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    auto it = a.terms().begin();
    FieldElem cb = b.coeff(unpack_exps(it->first));
    if (cb.is_zero()) return false;
    FieldElem lam = it->second / cb;
    return a == b * lam;
}

QuadTriple::Mat3 sym3(Ctx ctx, std::int64_t a00, std::int64_t a11, std::int64_t a22,
                      std::int64_t a01, std::int64_t a02, std::int64_t a12) {
    QuadTriple::Mat3 m;
    m[0][0] = ctx->from_int(a00);
    m[1][1] = ctx->from_int(a11);
    m[2][2] = ctx->from_int(a22);
    m[0][1] = m[1][0] = ctx->from_int(a01);
    m[0][2] = m[2][0] = ctx->from_int(a02);
    m[1][2] = m[2][1] = ctx->from_int(a12);
    return m;
}

Genus2Curve rnd_curve(Ctx ctx, std::mt19937_64& rng) {
    for (;;) {
        std::vector<FieldElem> d;
        for (int i = 0; i < 7; ++i) d.push_back(rnd_elem(ctx, rng));
        if (d[5].is_zero() && d[6].is_zero()) continue;
        Genus2Curve z(ctx, d);
        if (z.squarefree()) return z;
    }
}

FieldElem eval_embedded(const UniPoly& f, const FieldElem& x) {
    Ctx dst = x.ctx();
    FieldElem acc = dst->zero();
    for (int i = f.deg(); i >= 0; --i)
        acc = acc * x + embed(f.coeff(static_cast<std::size_t>(i)), dst);
    return acc;
}

// All x in fld where the curve has a rational point (x, z).
std::vector<FieldElem> square_slots(const Genus2Curve& z, Ctx fld) {
    std::vector<FieldElem> xs;
    for (std::uint64_t i = 0; i < fld->order(); ++i) {
        FieldElem x = fld->element_at(i);
        if (eval_embedded(z.D(), x).is_square()) xs.push_back(x);
    }
    return xs;
}

// A curve point (x, z) over fld with x avoiding `avoid` (when given).
// Requires square_slots to have at least 2 entries.
std::pair<FieldElem, FieldElem> rnd_point(const Genus2Curve& z,
                                          const std::vector<FieldElem>& slots,
                                          std::mt19937_64& rng,
                                          const FieldElem* avoid = nullptr) {
    for (;;) {
        const FieldElem& x = slots[rng() % slots.size()];
        if (avoid != nullptr && x == *avoid) continue;
        FieldElem val = eval_embedded(z.D(), x);
        return {x, val.sqrt()};
    }
}

// f composed with an invertible linear change of the three coordinates.
MPoly change_coords(const MPoly& f, const std::array<std::array<FieldElem, 3>, 3>& m) {
    Ctx ctx = f.ctx();
    std::array<MPoly, 3> imgs{MPoly(ctx, 3), MPoly(ctx, 3), MPoly(ctx, 3)};
    for (unsigned i = 0; i < 3; ++i)
        for (unsigned j = 0; j < 3; ++j) imgs[i].add_term(ev(j == 0, j == 1, j == 2), m[i][j]);
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

std::array<std::array<FieldElem, 3>, 3> rnd_invertible3(Ctx ctx, std::mt19937_64& rng) {
    for (;;) {
        std::array<std::array<FieldElem, 3>, 3> m;
        for (auto& row : m)
            for (auto& x : row) x = rnd_elem(ctx, rng);
        FieldElem det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (!det.is_zero()) return m;
    }
}

FieldElem det_of(const HWMatrix& h) {
    REQUIRE(h.n == 3);
    return h.at(0, 0) * (h.at(1, 1) * h.at(2, 2) - h.at(1, 2) * h.at(2, 1)) -
           h.at(0, 1) * (h.at(1, 0) * h.at(2, 2) - h.at(1, 2) * h.at(2, 0)) +
           h.at(0, 2) * (h.at(1, 0) * h.at(2, 1) - h.at(1, 1) * h.at(2, 0));
}

HWMatrix scaled(const HWMatrix& h, const FieldElem& s) {
    HWMatrix r = h;
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) r.at(i, j) = r.at(i, j) * s;
    return r;
}

int section_rank(const Genus2Curve& z, const Plane& v) {
    KummerSurface k = kummer_surface(z);
    SectionHW s = hasse_witt_section(v.to_poly(), k.kappa, 4);
    return p_rank(s.hw, 3);
}

const std::vector<std::int64_t> kPinnedQ15 = {2, 0, 2, 0, 0, 1, 1, 1, 1, 0, 1, 2, 2, 2, 2};

} // namespace

TEST_CASE("quadratic-form triples: exchange format, forms, and validation") {
    Ctx f3 = FieldCtx::prime_field(3);
    QuadTriple q = QuadTriple::from_q15_ints(f3, kPinnedQ15);

    // The three forms of the pinned example, written out by hand.
    MPoly q1(f3, 3), q2(f3, 3), q3(f3, 3);
    q1.add_term(ev(2, 0, 0), f3->from_int(2));
    q1.add_term(ev(0, 2, 0), f3->from_int(2));
    q1.add_term(ev(0, 0, 2), f3->from_int(1));
    q2.add_term(ev(2, 0, 0), f3->from_int(1));
    q2.add_term(ev(0, 2, 0), f3->from_int(1));
    q2.add_term(ev(0, 0, 2), f3->from_int(1));
    q3.add_term(ev(1, 1, 0), f3->from_int(1));
    q3.add_term(ev(0, 2, 0), f3->from_int(2));
    q3.add_term(ev(1, 0, 1), f3->from_int(2));
    q3.add_term(ev(0, 1, 1), f3->from_int(2));
    q3.add_term(ev(0, 0, 2), f3->from_int(2));
    CHECK(q.quadratic_form(1) == q1);
    CHECK(q.quadratic_form(2) == q2);
    CHECK(q.quadratic_form(3) == q3);

    // Off-diagonal entries split as q/2: for Q3, q312 = 1 gives 1/2 = 2 mod 3.
    CHECK(q.m(3)[0][1] == f3->from_int(2));
    CHECK(q.m(3)[0][2] == f3->from_int(1));
    CHECK(q.m(3)[1][2] == f3->from_int(1));

    // Round trips, both directions.
    std::vector<FieldElem> q15 = q.to_q15();
    REQUIRE(q15.size() == 15);
    for (int i = 0; i < 15; ++i)
        CHECK(q15[static_cast<std::size_t>(i)] ==
              f3->from_int(kPinnedQ15[static_cast<std::size_t>(i)]));

    std::mt19937_64 rng(411);
    Ctx f7 = FieldCtx::prime_field(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FieldElem> v;
        for (int i = 0; i < 15; ++i) v.push_back(rnd_elem(f7, rng));
        QuadTriple t = QuadTriple::from_q15(f7, v);
        std::vector<FieldElem> back = t.to_q15();
        REQUIRE(back.size() == 15);
        for (int i = 0; i < 15; ++i)
            CHECK(back[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i)]);
    }

    // Validation: wrong length, asymmetry, bad indices, non-diagonal Q2 export.
    CHECK_THROWS_AS(QuadTriple::from_q15_ints(f3, {1, 2, 3}), std::invalid_argument);
    QuadTriple::Mat3 asym = sym3(f3, 1, 1, 1, 0, 0, 0);
    asym[0][1] = f3->from_int(1); // break symmetry
    CHECK_THROWS_AS(QuadTriple(f3, asym, sym3(f3, 1, 1, 1, 0, 0, 0), sym3(f3, 1, 1, 1, 0, 0, 0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(q.m(0), std::invalid_argument);
    CHECK_THROWS_AS(q.m(4), std::invalid_argument);
    QuadTriple cross(f3, sym3(f3, 1, 0, 0, 0, 0, 0), sym3(f3, 1, 1, 1, 1, 0, 0),
                     sym3(f3, 0, 0, 1, 0, 0, 0));
    CHECK_THROWS_AS(cross.to_q15(), std::invalid_argument);
}

TEST_CASE("pinned double-cover datum: quartic, sextic, and both ranks") {
    Ctx f3 = FieldCtx::prime_field(3);
    QuadTriple q = QuadTriple::from_q15_ints(f3, kPinnedQ15);

    MPoly f = bruin_quartic(q);
    int deg = 0;
    CHECK(f.is_homogeneous(deg));
    CHECK(deg == 4);

    // Dehomogenized at w = 1, the quartic matches the pinned display up to a
    // nonzero scalar.
    MPoly fw1 = f.eval_partial(2, f3->one());
    MPoly expect = parse_mpoly(
        f3, {{"u"}, {"v"}, {"w"}},
        "2u^4 + 2u^3*v + u^3 + 2u^2*v^2 + u^2*v + 2u^2 + 2u*v^3 + u*v^2 + u*v + 2u + v^3 + v^2 "
        "+ 2v + 1");
    CHECK(proportional(fw1, expect));

    // The double-cover sextic matches the pinned display exactly:
    // z^2 = -(2x^5 + x^4 + 2x^2 + x + 1).
    Genus2Curve z = bruin_prym_sextic(q);
    CHECK(z.D() == UniPoly::from_ints(f3, {-1, -1, -2, 0, -1, -2}));
    CHECK(z.squarefree());
    CHECK(is_squarefree(z.D()));

    // Smoothness of both members.
    CHECK(is_smooth_plane_quartic(f));
    CHECK_FALSE(has_low_degree_singular_point(f, 4));

    // Rank pair (3, 0): the quartic is ordinary, the sextic has rank 0.
    CHECK(p_rank(hasse_witt_quartic(fw1), 3) == 3);
    CHECK(p_rank(hasse_witt_hyperelliptic(z), 2) == 0);
}

TEST_CASE("bruin quartic vanishes exactly where the quadric relation holds") {
    Ctx f5 = FieldCtx::prime_field(5);
    std::mt19937_64 rng(902);
    int on_locus = 0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<FieldElem> v;
        for (int i = 0; i < 15; ++i) v.push_back(rnd_elem(f5, rng));
        QuadTriple t = QuadTriple::from_q15(f5, v);
        MPoly f = bruin_quartic(t);
        std::vector<FieldElem> pt{rnd_elem(f5, rng), rnd_elem(f5, rng), rnd_elem(f5, rng)};
        FieldElem v1 = t.quadratic_form(1).eval(pt);
        FieldElem v2 = t.quadratic_form(2).eval(pt);
        FieldElem v3 = t.quadratic_form(3).eval(pt);
        CHECK(f.eval(pt) == v2 * v2 - v1 * v3);
        if (f.eval(pt).is_zero()) {
            ++on_locus;
            CHECK(v1 * v3 == v2 * v2);
        }
    }
    CHECK(on_locus > 0);
}

TEST_CASE("diagonal triples factor the sextic as a product of quadratics") {
    Ctx f7 = FieldCtx::prime_field(7);
    std::mt19937_64 rng(903);
    int produced = 0;
    for (int trial = 0; trial < 60 && produced < 25; ++trial) {
        std::array<std::array<std::int64_t, 3>, 3> c;
        for (auto& row : c)
            for (auto& x : row) x = static_cast<std::int64_t>(rng() % 7);
        QuadTriple t(f7, sym3(f7, c[0][0], c[0][1], c[0][2], 0, 0, 0),
                     sym3(f7, c[1][0], c[1][1], c[1][2], 0, 0, 0),
                     sym3(f7, c[2][0], c[2][1], c[2][2], 0, 0, 0));
        UniPoly prod(f7, {f7->from_int(-1)});
        for (int i = 0; i < 3; ++i)
            prod = prod * UniPoly(f7, {f7->from_int(c[0][static_cast<std::size_t>(i)]),
                                       f7->from_int(2 * c[1][static_cast<std::size_t>(i)]),
                                       f7->from_int(c[2][static_cast<std::size_t>(i)])});
        if (prod.deg() == 5 || prod.deg() == 6) {
            Genus2Curve z = bruin_prym_sextic(t);
            CHECK(z.D() == prod);
            ++produced;
        } else {
            CHECK_THROWS_AS(bruin_prym_sextic(t), std::invalid_argument);
        }
    }
    CHECK(produced >= 10);

    // Degenerate triples are rejected: constant and identically-zero D.
    QuadTriple konst(f7, sym3(f7, 1, 1, 1, 0, 0, 0), sym3(f7, 0, 0, 0, 0, 0, 0),
                     sym3(f7, 0, 0, 0, 0, 0, 0));
    CHECK_THROWS_AS(bruin_prym_sextic(konst), std::invalid_argument);
    QuadTriple nul(f7, sym3(f7, 0, 0, 0, 0, 0, 0), sym3(f7, 0, 0, 0, 0, 0, 0),
                   sym3(f7, 0, 0, 0, 0, 0, 0));
    CHECK_THROWS_AS(bruin_prym_sextic(nul), std::invalid_argument);
    CHECK_THROWS_WITH(bruin_prym_sextic(nul), doctest::Contains("identically zero"));
}

TEST_CASE("kummer surface: pinned equation and coefficient structure") {
    // z^2 = x^6 - 1 across three characteristics.
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Ctx ctx = FieldCtx::prime_field(p);
        Genus2Curve z = Genus2Curve::from_ints(ctx, {-1, 0, 0, 0, 0, 0, 1});
        MPoly expect(ctx, 4);
        expect.add_term(ev(0, 2, 0, 2), ctx->from_int(1));
        expect.add_term(ev(1, 0, 1, 2), ctx->from_int(-4));
        expect.add_term(ev(3, 0, 0, 1), ctx->from_int(4));
        expect.add_term(ev(0, 0, 3, 1), ctx->from_int(-4));
        expect.add_term(ev(2, 0, 2, 0), ctx->from_int(4));
        expect.add_term(ev(1, 2, 1, 0), ctx->from_int(-8));
        expect.add_term(ev(0, 4, 0, 0), ctx->from_int(4));
        CHECK(kummer_surface(z).kappa == expect);
    }

    // Structure invariants on random curves: homogeneous quartic, quadratic
    // in X4, with X4^2 part exactly X2^2 - 4 X1 X3.
    std::mt19937_64 rng(904);
    for (Ctx ctx : {FieldCtx::prime_field(3), FieldCtx::prime_field(5), make_ext(3, 2)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Genus2Curve z = rnd_curve(ctx, rng);
            MPoly kappa = kummer_surface(z).kappa;
            int deg = 0;
            CHECK(kappa.is_homogeneous(deg));
            CHECK(deg == 4);
            CHECK(kappa.degree_in(3) == 2);
            MPoly lead(ctx, 4);
            for (const auto& [key, c] : kappa.terms()) {
                ExpVec e = unpack_exps(key);
                if (e[3] == 2) lead.add_term(e, c);
            }
            MPoly expect_lead(ctx, 4);
            expect_lead.add_term(ev(0, 2, 0, 2), ctx->one());
            expect_lead.add_term(ev(1, 0, 1, 2), ctx->from_int(-4));
            CHECK(lead == expect_lead);
        }
    }
}

TEST_CASE("divisor images land on the kummer surface") {
    std::mt19937_64 rng(905);
    std::vector<Ctx> fields{FieldCtx::prime_field(3), FieldCtx::prime_field(5),
                            FieldCtx::prime_field(7), make_ext(3, 2), make_ext(5, 2)};
    int done = 0;
    while (done < 200) {
        Ctx ctx = fields[static_cast<std::size_t>(done) % fields.size()];
        Genus2Curve z = rnd_curve(ctx, rng);
        std::vector<FieldElem> slots = square_slots(z, ctx);
        if (slots.size() < 2) continue;
        auto p1 = rnd_point(z, slots, rng);
        auto p2 = rnd_point(z, slots, rng, &p1.first);
        std::array<FieldElem, 4> pt = kummer_phi(z, p1, p2);
        CHECK(pt[0].is_one());
        MPoly kappa = kummer_surface(z).kappa;
        CHECK(kappa.eval({pt[0], pt[1], pt[2], pt[3]}).is_zero());

        // Divisor symmetries: swapping the points and negating both z's
        // leave the image fixed; negating exactly one moves it (when both
        // z-coordinates are nonzero).
        std::array<FieldElem, 4> swapped = kummer_phi(z, p2, p1);
        for (int i = 0; i < 4; ++i)
            CHECK(swapped[static_cast<std::size_t>(i)] == pt[static_cast<std::size_t>(i)]);
        std::array<FieldElem, 4> negated =
            kummer_phi(z, {p1.first, -p1.second}, {p2.first, -p2.second});
        for (int i = 0; i < 4; ++i)
            CHECK(negated[static_cast<std::size_t>(i)] == pt[static_cast<std::size_t>(i)]);
        if (!p1.second.is_zero() && !p2.second.is_zero()) {
            std::array<FieldElem, 4> moved = kummer_phi(z, {p1.first, -p1.second}, p2);
            CHECK(moved[3] != pt[3]);
        }
        ++done;
    }

    // Points over an extension of the curve's field.
    Ctx f3 = FieldCtx::prime_field(3);
    Ctx f9 = make_ext(3, 2);
    Genus2Curve z = Genus2Curve::from_ints(f3, {0, 2, 0, 2, 2, 2, 1});
    REQUIRE(z.squarefree());
    MPoly kappa9 = embed_mpoly(kummer_surface(z).kappa, f9);
    std::vector<FieldElem> slots9 = square_slots(z, f9);
    REQUIRE(slots9.size() >= 2);
    for (int trial = 0; trial < 30; ++trial) {
        auto p1 = rnd_point(z, slots9, rng);
        auto p2 = rnd_point(z, slots9, rng, &p1.first);
        std::array<FieldElem, 4> pt = kummer_phi(z, p1, p2);
        CHECK(kappa9.eval({pt[0], pt[1], pt[2], pt[3]}).is_zero());
    }

    // Error paths: equal x-coordinates and off-curve points.
    std::vector<FieldElem> slots3 = square_slots(z, f3);
    REQUIRE(slots3.size() >= 2);
    auto p1 = rnd_point(z, slots3, rng);
    CHECK_THROWS_AS(kummer_phi(z, p1, p1), std::invalid_argument);
    auto p2 = rnd_point(z, slots3, rng, &p1.first);
    FieldElem bad = p2.second + f3->one();
    if (bad * bad != eval_embedded(z.D(), p2.first))
        CHECK_THROWS_AS(kummer_phi(z, p1, {p2.first, bad}), std::invalid_argument);
}

TEST_CASE("plane sections substitute the hyperplane and reject the node") {
    std::mt19937_64 rng(906);
    for (Ctx ctx : {FieldCtx::prime_field(3), FieldCtx::prime_field(5)}) {
        for (int trial = 0; trial < 10; ++trial) {
            Genus2Curve z = rnd_curve(ctx, rng);
            KummerSurface k = kummer_surface(z);
            Plane v(ctx, rnd_elem(ctx, rng), rnd_elem(ctx, rng), rnd_elem(ctx, rng),
                    rnd_nonzero(ctx, rng));
            CHECK(v.d().is_one());
            PlaneSection s = plane_section(k, v);
            CHECK(s.h == k.kappa);
            CHECK(s.v == v.to_poly());
            CHECK(s.ternary.nvars() == 3);
            for (int i = 0; i < 20; ++i) {
                FieldElem x1 = rnd_elem(ctx, rng), x2 = rnd_elem(ctx, rng),
                          x3 = rnd_elem(ctx, rng);
                FieldElem x4 = -(v.a() * x1 + v.b() * x2 + v.c() * x3);
                CHECK(s.ternary.eval({x1, x2, x3}) == k.kappa.eval({x1, x2, x3, x4}));
            }
        }
    }

    // Coefficient normalization scales the whole plane by 1/d.
    Ctx f7 = FieldCtx::prime_field(7);
    Plane w = Plane::from_ints(f7, 2, 4, 6, 2);
    CHECK(w.a() == f7->from_int(1));
    CHECK(w.b() == f7->from_int(2));
    CHECK(w.c() == f7->from_int(3));
    CHECK(w.d() == f7->from_int(1));

    // Rejections: the all-zero plane, and planes through the node.
    CHECK_THROWS_AS(Plane::from_ints(f7, 0, 0, 0, 0), std::invalid_argument);
    Genus2Curve z7 = rnd_curve(f7, rng);
    KummerSurface k7 = kummer_surface(z7);
    CHECK_THROWS_AS(plane_section(k7, Plane::from_ints(f7, 1, 2, 3, 0)), std::invalid_argument);
    CHECK_THROWS_WITH(plane_section(k7, Plane::from_ints(f7, 1, 0, 0, 0)),
                      doctest::Contains("node"));
}

TEST_CASE("smoothness of pinned quartics") {
    Ctx f3 = FieldCtx::prime_field(3);
    Ctx f5 = FieldCtx::prime_field(5);

    auto fermat = [](Ctx ctx) {
        MPoly f(ctx, 3);
        f.add_term(ev(4, 0, 0), ctx->one());
        f.add_term(ev(0, 4, 0), ctx->one());
        f.add_term(ev(0, 0, 4), ctx->one());
        return f;
    };
    CHECK(is_smooth_plane_quartic(fermat(f5)));
    CHECK(is_smooth_plane_quartic(fermat(f3)));
    CHECK_FALSE(has_low_degree_singular_point(fermat(f5), 3));

    // The doubled conic (u^2 + vw)^2.
    auto doubled = [](Ctx ctx) {
        MPoly conic(ctx, 3);
        conic.add_term(ev(2, 0, 0), ctx->one());
        conic.add_term(ev(0, 1, 1), ctx->one());
        return conic * conic;
    };
    CHECK_FALSE(is_smooth_plane_quartic(doubled(f3)));
    CHECK_FALSE(is_smooth_plane_quartic(doubled(f5)));
    CHECK(has_low_degree_singular_point(doubled(f3), 2));

    // A product of two distinct smooth conics meets itself.
    {
        MPoly c1(f5, 3), c2(f5, 3);
        c1.add_term(ev(2, 0, 0), f5->one());
        c1.add_term(ev(0, 2, 0), f5->one());
        c1.add_term(ev(0, 0, 2), f5->one());
        c2.add_term(ev(2, 0, 0), f5->one());
        c2.add_term(ev(0, 2, 0), f5->from_int(2));
        c2.add_term(ev(0, 0, 2), f5->from_int(3));
        CHECK_FALSE(is_smooth_plane_quartic(c1 * c2));
    }

    // A cuspidal quartic and a quartic singular at coordinate points.
    {
        MPoly cusp(f5, 3);
        cusp.add_term(ev(0, 4, 0), f5->one());
        cusp.add_term(ev(3, 0, 1), f5->one());
        CHECK_FALSE(is_smooth_plane_quartic(cusp));
        CHECK(has_low_degree_singular_point(cusp, 2));

        MPoly two_nodes(f5, 3);
        two_nodes.add_term(ev(2, 2, 0), f5->one());
        two_nodes.add_term(ev(0, 0, 4), f5->from_int(-1));
        CHECK_FALSE(is_smooth_plane_quartic(two_nodes));
    }

    // Fewer than three nonzero partials: u^4 + v^4 is singular at (0:0:1).
    {
        MPoly f(f5, 3);
        f.add_term(ev(4, 0, 0), f5->one());
        f.add_term(ev(0, 4, 0), f5->one());
        CHECK_FALSE(is_smooth_plane_quartic(f));
        CHECK(has_low_degree_singular_point(f, 1));
    }

    // Input validation.
    MPoly cubic(f5, 3);
    cubic.add_term(ev(3, 0, 0), f5->one());
    CHECK_THROWS_AS(is_smooth_plane_quartic(cubic), std::invalid_argument);
    MPoly mixed = fermat(f5);
    mixed.add_term(ev(1, 0, 0), f5->one());
    CHECK_THROWS_AS(is_smooth_plane_quartic(mixed), std::invalid_argument);
    MPoly four(f5, 4);
    four.add_term(ev(4, 0, 0, 0), f5->one());
    CHECK_THROWS_AS(is_smooth_plane_quartic(four), std::invalid_argument);
}

TEST_CASE("smoothness is invariant under coordinate changes") {
    Ctx f5 = FieldCtx::prime_field(5);
    std::mt19937_64 rng(907);

    MPoly smooth(f5, 3);
    smooth.add_term(ev(4, 0, 0), f5->one());
    smooth.add_term(ev(0, 4, 0), f5->one());
    smooth.add_term(ev(0, 0, 4), f5->one());
    MPoly conic(f5, 3);
    conic.add_term(ev(2, 0, 0), f5->one());
    conic.add_term(ev(0, 1, 1), f5->one());
    MPoly singular = conic * conic;

    for (int trial = 0; trial < 25; ++trial) {
        auto m = rnd_invertible3(f5, rng);
        CHECK(is_smooth_plane_quartic(change_coords(smooth, m)));
        CHECK_FALSE(is_smooth_plane_quartic(change_coords(singular, m)));
    }
    // The same over a non-prime field.
    Ctx f9 = make_ext(3, 2);
    MPoly smooth9(f9, 3);
    smooth9.add_term(ev(4, 0, 0), f9->one());
    smooth9.add_term(ev(0, 4, 0), f9->one());
    smooth9.add_term(ev(0, 0, 4), f9->one());
    for (int trial = 0; trial < 25; ++trial) {
        auto m = rnd_invertible3(f9, rng);
        CHECK(is_smooth_plane_quartic(change_coords(smooth9, m)));
    }
}

TEST_CASE("smoothness agrees with the bounded point search") {
    Ctx f3 = FieldCtx::prime_field(3);
    std::mt19937_64 rng(908);
    int singular_seen = 0, smooth_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        MPoly f(f3, 3);
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; a + b <= 4; ++b)
                f.add_term(ev(a, b, 4 - a - b), rnd_elem(f3, rng));
        if (f.is_zero()) continue;
        int deg = 0;
        if (!f.is_homogeneous(deg) || deg != 4) continue;
        bool smooth = is_smooth_plane_quartic(f, 17);
        bool found = has_low_degree_singular_point(f, 4);
        CHECK(smooth == !found);
        (smooth ? smooth_seen : singular_seen)++;
    }
    CHECK(smooth_seen >= 5);
    CHECK(singular_seen >= 5);

    // Over F_9 the scan budget is thinner; check the one-sided implications.
    Ctx f9 = make_ext(3, 2);
    for (int trial = 0; trial < 12; ++trial) {
        MPoly f(f9, 3);
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; a + b <= 4; ++b)
                f.add_term(ev(a, b, 4 - a - b), rnd_elem(f9, rng));
        int deg = 0;
        if (!f.is_homogeneous(deg) || deg != 4) continue;
        if (is_smooth_plane_quartic(f)) CHECK_FALSE(has_low_degree_singular_point(f, 2));
    }
}

TEST_CASE("pinned section examples: rank pairs across the pipeline") {
    Ctx f3 = FieldCtx::prime_field(3);
    Ctx f9 = make_ext(3, 2);

    // Pencil member (t, u) = (1, 0) with plane -X2 + X3 + X4: rank pair (1, 1).
    {
        Genus2Curve z = family_z_tu(f3->from_int(1), f3->from_int(0));
        CHECK(p_rank(hasse_witt_hyperelliptic(z), 2) == 1);
        Plane v = Plane::from_ints(f3, 0, -1, 1, 1);
        PlaneSection s = plane_section(kummer_surface(z), v);
        CHECK(is_smooth_plane_quartic(s.ternary));
        CHECK(section_rank(z, v) == 1);
    }
    // Pencil member (t, u) = (0, 1) with plane -X1 - X2 + X4: rank pair (0, 1).
    {
        Genus2Curve z = family_z_tu(f3->from_int(0), f3->from_int(1));
        CHECK(p_rank(hasse_witt_hyperelliptic(z), 2) == 1);
        Plane v = Plane::from_ints(f3, -1, -1, 0, 1);
        PlaneSection s = plane_section(kummer_surface(z), v);
        CHECK(is_smooth_plane_quartic(s.ternary));
        CHECK(section_rank(z, v) == 0);
    }
    // Supersingular family member at a root of t^2 + 2t + 2, plane
    // (2, 0, 2, 1): rank pair (2, 0).
    {
        UniPoly m = UniPoly::from_ints(f3, {2, 2, 1});
        std::vector<FieldElem> roots = roots_by_scan(m, f9);
        REQUIRE(roots.size() == 2);
        for (const FieldElem& alpha : roots) {
            Genus2Curve z = family_z_alpha(alpha);
            CHECK(p_rank(hasse_witt_hyperelliptic(z), 2) == 0);
            Plane v = Plane::from_ints(f9, 2, 0, 2, 1);
            PlaneSection s = plane_section(kummer_surface(z), v);
            CHECK(is_smooth_plane_quartic(s.ternary));
            CHECK(section_rank(z, v) == 2);
        }
    }
    // Twisted-product family member (A0, A, B, C) = (1, 0, 1, 2t) at a root
    // of t^2 - t - 1, plane (0, 1, 1, 1): rank pair (1, 1).
    {
        UniPoly m = UniPoly::from_ints(f3, {-1, -1, 1});
        std::vector<FieldElem> roots = roots_by_scan(m, f9);
        REQUIRE(roots.size() == 2);
        for (const FieldElem& t : roots) {
            Genus2Curve z = family_simple_z(f9->one(), f9->zero(), f9->one(),
                                            f9->from_int(2) * t);
            CHECK(z.squarefree());
            CHECK(p_rank(hasse_witt_hyperelliptic(z), 2) == 1);
            Plane v = Plane::from_ints(f9, 0, 1, 1, 1);
            PlaneSection s = plane_section(kummer_surface(z), v);
            CHECK(is_smooth_plane_quartic(s.ternary));
            CHECK(section_rank(z, v) == 1);
        }
    }
}

TEST_CASE("families: defining data and preconditions") {
    Ctx f3 = FieldCtx::prime_field(3);
    Ctx f9 = make_ext(3, 2);
    Ctx f27 = make_ext(3, 3);
    Ctx f5 = FieldCtx::prime_field(5);

    // The one-parameter supersingular family: squarefree with rank 0 for
    // every admissible parameter over F_9 and F_27.
    for (Ctx ctx : {f9, f27}) {
        int checked = 0;
        FieldElem one = ctx->one();
        for (std::uint64_t i = 0; i < ctx->order(); ++i) {
            FieldElem a = ctx->element_at(i);
            if (a.is_zero() || a == one || a == -one) {
                CHECK_THROWS_AS(family_z_alpha(a), std::invalid_argument);
                continue;
            }
            Genus2Curve z = family_z_alpha(a);
            CHECK(z.squarefree());
            CHECK(p_rank(hasse_witt_hyperelliptic(z), 2) == 0);
            ++checked;
        }
        CHECK(checked == static_cast<int>(ctx->order()) - 3);
    }

    // The pencil layout: coefficients (1, u, t, 1, u, t, 1).
    {
        FieldElem t = f3->from_int(2), u = f3->from_int(0);
        Genus2Curve z = family_z_tu(t, u);
        const std::vector<FieldElem>& d = z.d();
        CHECK(d[0].is_one());
        CHECK(d[1] == u);
        CHECK(d[2] == t);
        CHECK(d[3].is_one());
        CHECK(d[4] == u);
        CHECK(d[5] == t);
        CHECK(d[6].is_one());
        CHECK_THROWS_AS(family_z_tu(t, t), std::invalid_argument);
    }

    // The twisted-product layout: z^2 = (x^3 - x)(A0 x^3 + A x^2 + B x + C).
    {
        std::mt19937_64 rng(909);
        for (int trial = 0; trial < 20; ++trial) {
            FieldElem a0 = rnd_nonzero(f9, rng), a = rnd_elem(f9, rng), b = rnd_elem(f9, rng),
                      c = rnd_nonzero(f9, rng);
            Genus2Curve z = family_simple_z(a0, a, b, c);
            UniPoly cubic1 = UniPoly::from_ints(f9, {0, -1, 0, 1}); // x^3 - x
            UniPoly cubic2(f9, {c, b, a, a0});
            CHECK(z.D() == cubic1 * cubic2);
        }
        CHECK_THROWS_AS(family_simple_z(f9->zero(), f9->one(), f9->one(), f9->one()),
                        std::invalid_argument);
        CHECK_THROWS_AS(family_simple_z(f9->one(), f9->one(), f9->one(), f9->zero()),
                        std::invalid_argument);
    }

    // Characteristic is enforced.
    CHECK_THROWS_AS(family_z_alpha(f5->from_int(2)), std::invalid_argument);
    CHECK_THROWS_AS(family_z_tu(f5->from_int(1), f5->from_int(0)), std::invalid_argument);
}

TEST_CASE("section matrix entries are jointly homogeneous in plane and curve data") {
    std::mt19937_64 rng(910);
    for (std::uint32_t p : {3u, 5u}) {
        Ctx ctx = FieldCtx::prime_field(p);
        std::uint64_t e = 2 * (p - 1);
        for (int trial = 0; trial < 8; ++trial) {
            Genus2Curve z = rnd_curve(ctx, rng);
            FieldElem a = rnd_elem(ctx, rng), b = rnd_elem(ctx, rng), c = rnd_elem(ctx, rng);
            FieldElem lam = rnd_nonzero(ctx, rng);

            std::vector<FieldElem> dl;
            for (const FieldElem& di : z.d()) dl.push_back(lam * di);
            Genus2Curve zl(ctx, dl);

            Plane v(ctx, a, b, c, ctx->one());
            Plane vl(ctx, lam * a, lam * b, lam * c, ctx->one());
            SectionHW s = hasse_witt_section(v.to_poly(), kummer_surface(z).kappa, 4);
            SectionHW sl = hasse_witt_section(vl.to_poly(), kummer_surface(zl).kappa, 4);

            CHECK(sl.hw == scaled(s.hw, lam.pow(e)));
            CHECK(det_of(sl.hw) == det_of(s.hw) * lam.pow(3 * e));
            CHECK(rank_of(sl.hw) == rank_of(s.hw));
        }
    }
}

TEST_CASE("section rank matches the plane-model quartic rank") {
    std::mt19937_64 rng(911);
    for (Ctx ctx : {FieldCtx::prime_field(3), FieldCtx::prime_field(5), make_ext(3, 2)}) {
        int compared = 0;
        for (int trial = 0; trial < 40 && compared < 10; ++trial) {
            Genus2Curve z = rnd_curve(ctx, rng);
            Plane v(ctx, rnd_elem(ctx, rng), rnd_elem(ctx, rng), rnd_elem(ctx, rng),
                    ctx->one());
            KummerSurface k = kummer_surface(z);
            PlaneSection s = plane_section(k, v);
            int deg = 0;
            if (!s.ternary.is_homogeneous(deg) || deg != 4) continue;
            if (!is_smooth_plane_quartic(s.ternary)) continue;
            MPoly affine = s.ternary.eval_partial(2, ctx->one());
            int via_quartic = p_rank(hasse_witt_quartic(affine), 3);
            SectionHW hw = hasse_witt_section(v.to_poly(), k.kappa, 4);
            CHECK(p_rank(hw.hw, 3) == via_quartic);
            ++compared;
        }
        CHECK(compared >= 5);
    }
}

TEST_CASE("a smooth quartic forces a squarefree sextic") {
    std::mt19937_64 rng(912);
    for (Ctx ctx : {FieldCtx::prime_field(3), FieldCtx::prime_field(5)}) {
        int smooth_found = 0;
        for (int trial = 0; trial < 150 && smooth_found < 12; ++trial) {
            std::vector<FieldElem> q;
            for (int i = 0; i < 15; ++i) q.push_back(rnd_elem(ctx, rng));
            QuadTriple t = QuadTriple::from_q15(ctx, q);
            std::optional<Genus2Curve> z;
            try {
                z.emplace(bruin_prym_sextic(t));
            } catch (const std::invalid_argument&) {
                continue;
            }
            MPoly f = bruin_quartic(t);
            int deg = 0;
            if (!f.is_homogeneous(deg) || deg != 4) continue;
            if (is_smooth_plane_quartic(f)) {
                CHECK(is_squarefree(z->D()));
                ++smooth_found;
            }
        }
        CHECK(smooth_found >= 5);
    }
}
