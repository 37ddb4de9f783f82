// SPDX-License-Identifier: MIT
#include "prymrank/tables.hpp"

#include <stdexcept>

namespace prymrank {

const std::vector<TableRow>& example_rows() {
    static const std::vector<TableRow> rows = {
        // ------------------------------------------------------------- p = 3
        {3, 3, 0, {2, 0, 2, 0, 0, 1, 1, 1, 1, 0, 1, 2, 2, 2, 2},
         "2u^4 + 2u^3v + u^3 + 2u^2v^2 + u^2v + 2u^2 + 2uv^3 + uv^2 + uv + 2u + v^3 + v^2 + 2v + 1",
         "2x^5 + x^4 + 2x^2 + x + z^2 + 1"},
        {3, 2, 0, {1, 0, 2, 0, 0, 0, 1, 1, 1, 0, 1, 2, 2, 1, 2},
         "2u^4 + u^3v + 2u^3 + u^2v + 2uv^3 + uv^2 + 2v^3 + 2v^2 + 2",
         "x^6 + 2x^5 + 2x^4 + x^2 + x + z^2"},
        {3, 1, 0, {2, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1, 1, 0},
         "2u^4 + 2u^3 + 2u^2v + 2u^2 + uv^2 + 2uv + x + 2v^4 + v^3 + v + 2",
         "2x^6 + 2x^5 + z^2 + 1"},
        {3, 0, 0, {2, 0, 2, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 1, 2},
         "2u^4 + 2u^3 + 2u^2v + 2u^2 + 2uv^2 + u + v^4 + 2v^3 + v + 1",
         "2x^6 + x + z^2 + 1"},
        {3, 1, 1, {0, 0, 1, 0, 0, 2, 1, 1, 1, 0, 1, 0, 1, 1, 2},
         "2x^4 + x^2y^2 + x^2 + xy^3 + xy^2 + 2xy + 2x + 2y^4 + y^3 + 2y",
         "2x^6 + 2x^4 + x + y^2"},
        {3, 0, 1, {2, 0, 1, 0, 0, 2, 1, 0, 0, 0, 1, 0, 1, 0, 1},
         "2x^4 + 2x^3y + 2x^3 + 2x^2 + xy^3 + xy^2 + 2xy + 2x + y^2 + 2",
         "2x^6 + 2x^3 + 2x^2 + x + y^2 + 1"},
        // ------------------------------------------------------------- p = 5
        {5, 3, 0, {1, 0, 1, 0, 0, 3, 1, 1, 0, 0, 0, 1, 3, 1, 0},
         "4u^4 + 3u^3 + 4u^2v^2 + u^2v + 3uv^2 + 4u + v^3 + 3v^2 + 3v",
         "4x^6 + x^3 + 2x + z^2 + 3"},
        {5, 2, 0, {1, 0, 1, 0, 0, 2, 1, 1, 0, 0, 0, 1, 3, 1, 0},
         "4u^4 + 3u^3 + 4u^2v^2 + u^2v + 3uv^2 + u + v^3 + 2v^2 + 2v",
         "4x^6 + 4x^3 + 3x + z^2 + 2"},
        {5, 1, 0, {3, 4, 4, 4, 4, 3, 1, 1, 1, 0, 0, 0, 0, 1, 3},
         "4u^4 + 3u^2v^2 + 3u^2v + 2u^2 + 4uv^2 + uv + 2u + 4v^4 + 4v^3 + 4v^2 + 3",
         "2x^5 + x^3 + 2x^2 + 2x + z^2 + 2"},
        {5, 0, 0, {3, 4, 4, 1, 0, 1, 1, 1, 1, 0, 0, 0, 0, 1, 3},
         "4u^4 + 3u^2v^2 + 3u^2v + 2u^2 + 4uv^2 + 3uv + 3v + 4v^4 + 4v^3 + v + 2",
         "2x^5 + 2x^2 + 2x + z^2 + 2"},
        // ------------------------------------------------------------- p = 7
        {7, 3, 0, {1, 0, 5, 0, 0, 5, 1, 1, 1, 0, 0, 0, 0, 3, 1},
         "6u^4 + 5u^2v^2 + 3u^2v + 6u^2 + 6v^4 + v^3 + 3v^2 + v + 4",
         "6x^5 + 6x^3 + z^2 + 4"},
        {7, 2, 0, {1, 0, 2, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 2, 4},
         "6u^4 + 5u^2v^2 + 2u^2v + 2u^2 + 6v^4 + 4v^3 + 6v^2 + 6",
         "5x^5 + x^4 + 4x^3 + 6x^2 + 4x + z^2"},
        {7, 1, 0, {3, 0, 0, 0, 0, 6, 1, 1, 1, 0, 0, 0, 0, 3, 1},
         "6u^4 + 5u^2v^2 + 2u^2v + u^2 + 6v^4 + 5v^2 + 4v + 5",
         "6x^5 + 6x^4 + x^2 + x + z^2"},
        {7, 0, 0, {3, 0, 4, 0, 0, 0, 1, 1, 1, 0, 0, 1, 0, 0, 2},
         "6u^4 + u^2v^2 + 4u^2 + 3v^4 + 6v^2 + 6",
         "4x^5 + 4x^4 + 3x^2 + 3x + z^2"},
        // ------------------------------------------------------------ p = 11
        {11, 3, 0, {8, 0, 5, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 2, 3},
         "10u^4 + 9u^2v^2 + 5u^2v + 2u^2 + 10v^4 + 10v^3 + 4v^2 + 4v + 6",
         "9x^5 + 4x^4 + x^3 + 7x^2 + 8x + z^2 + 3"},
        {11, 2, 0, {10, 0, 6, 0, 0, 9, 1, 1, 0, 0, 0, 0, 0, 2, 2},
         "10u^4 + 9u^2v^2 + 9u^2v + 9u^2 + 10v^4 + v^3 + v^2 + 7v + 7",
         "9x^5 + 9x^4 + 9x^3 + 2x^2 + 2x + z^2 + 1"},
        {11, 1, 0, {10, 0, 7, 0, 0, 2, 1, 1, 0, 0, 0, 0, 0, 2, 3},
         "10u^4 + 9u^2v^2 + 9u^2v + 8u^2 + 10v^4 + 3v^3 + 10v^2 + 4v + 6",
         "9x^5 + 2x^4 + 3x^3 + 9x^2 + 2x + z^2 + 8"},
        {11, 0, 0, {7, 0, 10, 0, 0, 2, 1, 1, 1, 0, 0, 0, 0, 2, 1},
         "10u^4 + 9u^2v^2 + 3u^2v + 5u^2 + 10v^4 + 9v^3 + 8v^2 + 4v + 1",
         "9x^5 + 8x^4 + 9x^3 + 3x^2 + 10x + z^2 + 8"},
        // ------------------------------------------------------------ p = 13
        {13, 3, 0, {3, 0, 6, 0, 0, 8, 1, 1, 1, 0, 0, 0, 0, 2, 0},
         "12u^4 + 11u^2v^2 + 6u^2v + 11u^2 + 12v^4 + 12v^3 + 11v^2 + 3v + 12",
         "11x^5 + 10x^4 + 8x^3 + 3x^2 + 11x + z^2 + 1"},
        {13, 2, 0, {1, 0, 12, 0, 0, 12, 1, 1, 1, 0, 0, 0, 0, 2, 6},
         "12u^4 + 11u^2v^2 + 2u^2v + 4u^2 + 12v^4 + 11v^3 + 5v^2 + 11v + 6",
         "11x^5 + 10x^4 + 8x^3 + 3x^2 + 11x + z^2 + 1"},
        {13, 1, 0, {2, 0, 3, 0, 0, 11, 1, 1, 1, 0, 0, 0, 0, 11, 12},
         "12u^4 + 11u^2v^2 + 9u^2v + 9u^2 + 12v^4 + 7v^3 + 8v^2 + 4v + 1",
         "11x^5 + 7x^4 + 11x^3 + 6x^2 + 5x + z^2 + 1"},
        {13, 0, 0, {9, 0, 8, 0, 0, 12, 1, 1, 1, 0, 0, 0, 0, 1, 1},
         "12u^4 + 11u^2v^2 + 9u^2v + 7u^2 + 12v^4 + 8v^3 + 6v^2 + 12v + 11",
         "6x^5 + 5x^4 + 3x^3 + 6x^2 + 6x + z^2 + 6"},
        // ------------------------------------------------------------ p = 17
        {17, 3, 0, {0, 0, 13, 0, 0, 2, 1, 1, 1, 0, 0, 0, 0, 3, 2},
         "16u^4 + 15u^2v^2 + 15u^2 + 16v^4 + 5v^3 + 7v^2 + 6v + 3",
         "4x^5 + 8x^4 + 9x^3 + 9x^2 + x + z^2"},
        {17, 2, 0, {9, 0, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 3, 6},
         "16u^4 + 15u^2v^2 + 10u^2v + u^2 + 16v^4 + 3v^3 + 4v^2 + 16",
         "4x^5 + 8x^4 + 9x^3 + 9x^2 + x + z^2"},
        {17, 1, 0, {9, 0, 7, 0, 0, 16, 1, 1, 1, 0, 0, 0, 0, 3, 10},
         "16u^4 + 15u^2v^2 + 10u^2v + 3u^2 + 16v^4 + 4v^3 + 14v + 6",
         "4x^5 + 7x^4 + 5x^3 + 10x^2 + 9x + z^2 + 5"},
        {17, 0, 0, {6, 0, 9, 0, 0, 15, 1, 1, 1, 0, 0, 0, 0, 1, 0},
         "16u^4 + 15u^2v^2 + 6u^2v + 15u^2 + 16v^4 + 9v^3 + 15v^2 + 15v + 16",
         "8x^5 + 7x^4 + 8x^3 + x^2 + 14x + z^2 + 11"},
        // ------------------------------------------------------------ p = 19
        {19, 3, 0, {3, 0, 8, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 3, 8},
         "18u^4 + 17u^2v^2 + 9u^2v + 3u^2 + 18v^4 + 5v^3 + 5v^2 + 18",
         "5x^5 + 11x^4 + 13x^3 + 8x^2 + 10x + z^2"},
        {19, 2, 0, {4, 0, 6, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 3, 5},
         "18u^4 + 17u^2v^2 + 12u^2v + 18u^2 + 18v^4 + 18v^3 + 9v^2 + 18",
         "5x^5 + 11x^4 + 13x^3 + 8x^2 + 10x + z^2"},
        {19, 1, 0, {12, 0, 3, 0, 0, 3, 1, 1, 1, 0, 0, 0, 0, 2, 8},
         "18u^4 + 17u^2v^2 + 5u^2v + 18u^2 + 18v^4 + 6v^3 + 3v^2 + 6v + 4",
         "17x^5 + x^4 + x^3 + 18x^2 + 10x + z^2 + 13"},
        {19, 0, 0, {11, 0, 4, 0, 0, 10, 1, 1, 1, 0, 0, 0, 0, 5, 4},
         "18u^4 + 17u^2v^2 + 17u^2v + 4u^2 + 18v^4 + v^3 + 14v^2 + 12v + 1",
         "16x^5 + 9x^4 + 14x^3 + 10x^2 + 8x + z^2 + 3"},
    };
    return rows;
}

std::vector<TableRow> rows_for_prime(std::uint32_t p) {
    std::vector<TableRow> out;
    for (const TableRow& r : example_rows())
        if (r.p == p) out.push_back(r);
    return out;
}

std::array<UniPoly, 9> halpha_reference_entries() {
    Ctx f3 = FieldCtx::prime_field(3);
    auto P = [&](std::vector<std::int64_t> c) { return UniPoly::from_ints(f3, std::move(c)); };
    return {
        // a11 = t^13 - t^11 - t^10 + t^9 + t^7 + t^6 - t^3 - t^2 - 1
        P({-1, 0, -1, -1, 0, 0, 1, 1, 0, 1, -1, -1, 0, 1}),
        // a12 = -t^7 - t^6 + t^5 + t^4 + t^2 + t
        P({0, 1, 1, 0, 1, 1, -1, -1}),
        // a13 = t^10 + t^9 + t^7 - t^6 + t^5 - t^4
        P({0, 0, 0, 0, -1, 1, -1, 1, 0, 1, 1}),
        // a21 = -t^16 - t^13 + t^11 + t^9 + t^8 + t^7 - t^5 + t^4 - t^3 - t^2
        P({0, 0, -1, -1, 1, -1, 0, 1, 1, 1, 0, 1, 0, -1, 0, 0, -1}),
        // a22 = t^13 + t^9 + t^8 + t^7 - t^6 - t^4 - t^3 - t^2 - t - 1
        P({-1, -1, -1, -1, -1, 0, -1, 1, 1, 1, 0, 0, 0, 1}),
        // a23 = -t^13 + t^10 + t^9 - t^6 + t^5 + t^4 + t^3 - t^2 - t - 1
        P({-1, -1, -1, 1, 1, 1, -1, 0, 0, 1, 1, 0, 0, -1}),
        // a31 = t^13 + t^12 - t^9 + t^8 + t^7 + t^6 - t^5 + t^2 + t
        P({0, 1, 1, 0, 0, -1, 1, 1, 1, -1, 0, 0, 1, 1}),
        // a32 = t^10 - t^8 + t^7 + t^5 - t^4 - t^3 - t^2 - t - 1
        P({-1, -1, -1, -1, -1, 1, 0, 1, -1, 0, 1}),
        // a33 = t^12 - t^10 + t^6 + t^5 - t^4 - t - 1
        P({-1, -1, 0, 0, -1, 1, 1, 0, 0, 0, -1, 0, 1}),
    };
}

std::vector<std::pair<UniPoly, int>> halpha_reference_factors() {
    Ctx f3 = FieldCtx::prime_field(3);
    auto P = [&](std::vector<std::int64_t> c) { return UniPoly::from_ints(f3, std::move(c)); };
    return {
        {P({0, 1}), 3},                       // t^3
        {P({1, 1}), 4},                       // (t + 1)^4
        {P({-1, 1}), 5},                      // (t - 1)^5
        {P({-1, 1, 1, 1}), 1},                // t^3 + t^2 + t - 1
        {P({1, -1, 1, 1, 1, 1}), 1},          // t^5 + t^4 + t^3 + t^2 - t + 1
        {P({1, 1, 1, 1, -1, 1}), 1},          // t^5 - t^4 + t^3 + t^2 + t + 1
        {P({1, -1, 0, 1, -1, 0, 1}), 1},      // t^6 - t^4 + t^3 - t + 1
        {P({-1, 1, 0, 0, 0, 1, 0, 1}), 1},    // t^7 + t^5 + t - 1
    };
}

std::array<MPoly, 9> fixalpha_reference_entries(const FieldElem& alpha) {
    Ctx ctx = alpha.ctx();
    if (ctx == nullptr || ctx->p() != 3 || ctx->k() != 2)
        throw std::invalid_argument("fixalpha_reference_entries: alpha must lie in F_9");
    const FieldElem two = ctx->from_int(2);
    if (!(alpha * alpha + two * alpha + two).is_zero())
        throw std::invalid_argument("fixalpha_reference_entries: alpha^2 + 2*alpha + 2 != 0");

    const FieldElem one = ctx->one();
    const FieldElem ap1 = alpha + one;  // alpha + 1
    const FieldElem am1 = alpha - one;  // alpha - 1
    const FieldElem oma = one - alpha;  // 1 - alpha

    // Terms are (exp_a, exp_b, exp_c) -> coefficient.
    using T = std::pair<std::array<std::uint16_t, 3>, FieldElem>;
    auto build = [&](std::initializer_list<T> terms) {
        MPoly f(ctx, 3);
        for (const T& t : terms)
            f.add_term({t.first[0], t.first[1], t.first[2], 0}, t.second);
        return f;
    };

    MPoly a11 = build({{{3, 0, 1}, one},   {{0, 2, 0}, one},  {{1, 0, 1}, one},
                       {{3, 0, 0}, ap1},   {{0, 1, 1}, -ap1}, {{1, 0, 0}, ap1},
                       {{1, 1, 0}, am1},   {{0, 1, 0}, -am1}, {{0, 0, 2}, -alpha}});
    MPoly a12 = build({{{0, 3, 1}, one}, {{0, 3, 0}, ap1}});
    MPoly a13 = build({{{0, 0, 4}, one},   {{1, 0, 1}, -one},  {{0, 0, 3}, ap1},
                       {{0, 0, 2}, -ap1},  {{0, 2, 0}, oma},   {{1, 1, 0}, -alpha},
                       {{0, 1, 1}, -alpha}});
    MPoly a21 = build({{{3, 1, 0}, one},  {{1, 1, 0}, -one}, {{3, 0, 0}, -ap1},
                       {{1, 0, 1}, -ap1}, {{0, 0, 1}, -ap1}, {{2, 0, 0}, oma},
                       {{0, 0, 2}, oma},  {{1, 0, 0}, oma},  {{0, 1, 1}, -oma}});
    MPoly a22 = build({{{0, 4, 0}, one}, {{0, 3, 0}, -ap1}, {{0, 0, 2}, -alpha},
                       {{0, 1, 0}, alpha}});
    MPoly a23 = build({{{0, 1, 3}, one},   {{0, 0, 3}, -ap1},  {{2, 0, 0}, alpha},
                       {{1, 0, 1}, -alpha}, {{0, 1, 1}, alpha}, {{0, 0, 2}, alpha},
                       {{1, 1, 0}, am1}});
    MPoly a31 = build({{{4, 0, 0}, one},  {{2, 0, 0}, -one}, {{0, 0, 0}, oma},
                       {{3, 0, 0}, ap1},  {{1, 1, 0}, -ap1}, {{0, 1, 0}, -ap1},
                       {{0, 2, 0}, oma},  {{0, 1, 1}, -oma}, {{0, 0, 1}, -oma},
                       {{1, 0, 1}, alpha}});
    MPoly a32 = build({{{1, 3, 0}, one}, {{0, 3, 0}, ap1}, {{0, 1, 1}, alpha}});
    MPoly a33 = build({{{1, 0, 3}, one},  {{2, 0, 0}, one},   {{0, 0, 3}, ap1},
                       {{1, 0, 1}, ap1},  {{0, 0, 1}, -ap1},  {{0, 2, 0}, -alpha},
                       {{0, 1, 1}, -alpha}, {{1, 1, 0}, -alpha}});

    return {a11, a12, a13, a21, a22, a23, a31, a32, a33};
}

} // namespace prymrank
