// SPDX-License-Identifier: MIT
#include "prymrank/count.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace prymrank {

namespace {

// F_q as an extension of the coefficient field: q must be a power of its
// characteristic whose degree is a multiple of the field's own degree.
Ctx field_of_size(Ctx base, std::uint64_t q, const char* who) {
    const std::uint64_t p = base->p();
    std::uint64_t v = q;
    std::uint32_t e = 0;
    while (v > 1 && v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1 || e == 0)
        throw std::invalid_argument(std::string(who) +
                                    ": q must be a positive power of the field characteristic");
    if (e % base->k() != 0)
        throw std::invalid_argument(std::string(who) +
                                    ": F_q does not contain the curve's coefficient field");
    return make_ext(p, e);
}

std::vector<FieldElem> embedded_d(const Genus2Curve& z, Ctx fld) {
    std::vector<FieldElem> out;
    out.reserve(z.d().size());
    for (const FieldElem& c : z.d()) out.push_back(embed(c, fld));
    return out;
}

FieldElem horner(const std::vector<FieldElem>& c, const FieldElem& x) {
    FieldElem acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Projective chart scan shared by the parallel kernel and the serial
// reference: points (0 : ... : 0 : 1 : t_1 : ... : t_m) with the leading 1 in
// each position in turn.  All field data is embedded before the loops, so the
// bodies only use pure context operations.
std::int64_t projective_zero_count(const MPoly& f, Ctx fld, std::uint64_t q, int nvars,
                                   bool parallel) {
    std::int64_t total = 0;
    for (int lead = 0; lead < nvars; ++lead) {
        const int free_vars = nvars - 1 - lead;
        std::uint64_t combos = 1;
        for (int i = 0; i < free_vars; ++i) combos *= q;
        std::int64_t cnt = 0;
#ifdef PRYMRANK_OPENMP
#pragma omp parallel for reduction(+ : cnt) num_threads(effective_threads()) \
    if (parallel && combos > 256)
#else
        (void)parallel;
#endif
        for (long long n = 0; n < static_cast<long long>(combos); ++n) {
            std::vector<FieldElem> pt;
            pt.reserve(static_cast<std::size_t>(nvars));
            for (int v = 0; v < lead; ++v) pt.push_back(fld->zero());
            pt.push_back(fld->one());
            std::uint64_t rem = static_cast<std::uint64_t>(n);
            for (int v = 0; v < free_vars; ++v) {
                pt.push_back(fld->element_at(rem % q));
                rem /= q;
            }
            if (f.eval(pt).is_zero()) ++cnt;
        }
        total += cnt;
    }
    return total;
}

} // namespace

std::int64_t count_curve(const Genus2Curve& z, std::uint64_t q) {
    if (!z.squarefree())
        throw std::invalid_argument(
            "count_curve: D has a repeated root, so the plane model is not the smooth model");
    if (q > 1000000)
        throw std::invalid_argument("count_curve: q exceeds the 10^6 scan budget");
    Ctx fld = field_of_size(z.ctx(), q, "count_curve");

    const std::vector<FieldElem> d = embedded_d(z, fld);
    std::int64_t cnt = 0;
#ifdef PRYMRANK_OPENMP
#pragma omp parallel for reduction(+ : cnt) num_threads(effective_threads()) if (q > 256)
#endif
    for (long long n = 0; n < static_cast<long long>(q); ++n) {
        const FieldElem v = horner(d, fld->element_at(static_cast<std::uint64_t>(n)));
        if (v.is_zero())
            cnt += 1;
        else if (v.is_square())
            cnt += 2;
    }

    // Points at infinity of the smooth model.
    const int deg = z.D().deg();
    if (deg == 6) {
        if (d[6].is_square()) cnt += 2;
    } else {
        cnt += 1; // deg == 5: one point at infinity
    }
    return cnt;
}

ZetaData zeta_coeffs(const Genus2Curve& z, std::uint64_t q) {
    ZetaData out;
    out.q = q;
    out.n1 = count_curve(z, q);
    out.n2 = count_curve(z, q * q); // enforces q <= 10^3 via the scan budget
    const std::int64_t qi = static_cast<std::int64_t>(q);
    out.a1 = out.n1 - (qi + 1);
    const std::int64_t s = out.n1 * out.n1 + out.n2;
    if (s % 2 != 0) throw std::logic_error("zeta_coeffs: point counts have impossible parity");
    out.a2 = s / 2 - (qi + 1) * out.n1 + qi;
    if (out.a1 * out.a1 > 16 * qi)
        throw std::logic_error("zeta_coeffs: |a1| violates the Weil bound");
    return out;
}

std::int64_t jac_count(const Genus2Curve& z, std::uint64_t q) {
    const ZetaData zd = zeta_coeffs(z, q);
    return (zd.n1 * zd.n1 + zd.n2) / 2 - static_cast<std::int64_t>(q);
}

Genus2Curve quadratic_twist(const Genus2Curve& z, std::uint64_t q) {
    Ctx fld = field_of_size(z.ctx(), q, "quadratic_twist");
    FieldElem lambda = fld->zero();
    for (std::uint64_t n = 1; n < fld->order(); ++n) {
        FieldElem e = fld->element_at(n);
        if (!e.is_square()) {
            lambda = e;
            break;
        }
    }
    // q is odd, so a nonsquare always exists.
    const FieldElem scale = lambda.inv();
    std::vector<FieldElem> d = embedded_d(z, fld);
    for (FieldElem& c : d) c = scale * c;
    return Genus2Curve(fld, std::move(d));
}

std::int64_t kummer_count_naive(const KummerSurface& k, std::uint64_t q) {
    if (q > 1000)
        throw std::invalid_argument("kummer_count_naive: q exceeds the 10^3 scan budget");
    Ctx fld = field_of_size(k.source.ctx(), q, "kummer_count_naive");
    return projective_zero_count(embed_mpoly(k.kappa, fld), fld, q, 4, true);
}

std::int64_t kummer_count_naive_serial(const KummerSurface& k, std::uint64_t q) {
    if (q > 1000)
        throw std::invalid_argument("kummer_count_naive: q exceeds the 10^3 scan budget");
    Ctx fld = field_of_size(k.source.ctx(), q, "kummer_count_naive");
    return projective_zero_count(embed_mpoly(k.kappa, fld), fld, q, 4, false);
}

std::int64_t kummer_count_formula(const Genus2Curve& z, std::uint64_t q) {
    const ZetaData zd = zeta_coeffs(z, q);
    return 1 + zd.a2 + static_cast<std::int64_t>(q) * static_cast<std::int64_t>(q);
}

std::int64_t count_plane_quartic(const MPoly& f, std::uint64_t q) {
    if (f.nvars() != 3)
        throw std::invalid_argument("count_plane_quartic: expected a polynomial in three variables");
    if (q > 10000)
        throw std::invalid_argument("count_plane_quartic: q exceeds the 10^4 scan budget");
    Ctx fld = field_of_size(f.ctx(), q, "count_plane_quartic");
    return projective_zero_count(embed_mpoly(f, fld), fld, q, 3, true);
}

} // namespace prymrank
