// SPDX-License-Identifier: MIT
//
// Compares the serial reference kernels against their parallel versions on
// representative workloads and verifies that both produce identical results.
// Usage: bench_kernels [reps]   (default 3; best-of-reps wall time is shown)

#include "prymrank/count.hpp"
#include "prymrank/gf.hpp"
#include "prymrank/hasse_witt.hpp"
#include "prymrank/mpoly.hpp"
#include "prymrank/prym.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>

using namespace prymrank;

namespace {

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (s < best) best = s;
    }
    return best;
}

void row(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-28s %10.4f s %10.4f s %8.2fx   %s\n", name, serial_s, parallel_s,
                serial_s / parallel_s, equal ? "identical" : "MISMATCH");
}

MPoly dense_quartic(Ctx ctx, std::mt19937_64& rng) {
    MPoly h(ctx, 4);
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = 0; a + b <= 4; ++b)
            for (unsigned c = 0; a + b + c <= 4; ++c) {
                ExpVec e{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b),
                         static_cast<std::uint16_t>(c),
                         static_cast<std::uint16_t>(4 - a - b - c)};
                h.add_term(e, ctx->element_at(rng() % ctx->order()));
            }
    return h;
}

} // namespace

int main(int argc, char** argv) {
    const int reps = argc > 1 ? std::atoi(argv[1]) : 3;
    std::printf("threads: %d, best of %d reps\n\n", effective_threads(), reps);
    std::printf("%-28s %12s %12s %9s   %s\n", "kernel", "serial", "parallel", "speedup",
                "results");

    std::mt19937_64 rng(12345);
    int mismatches = 0;

    // Polynomial multiplication: two powers of a dense homogeneous quartic
    // over F_9 (the workload that dominates section expansion, where the
    // quartic is raised to the (p-1)-th or (p^k - 1)-th power termwise).
    {
        Ctx f9 = FieldCtx::ext(3, 2);
        const MPoly h = dense_quartic(f9, rng);
        const MPoly a = mp_pow(h, 4), b = mp_pow(h, 3);
        MPoly rs(f9, 4), rp(f9, 4);
        const double ts = best_of(reps, [&] { rs = mp_mul_serial(a, b); });
        const double tp = best_of(reps, [&] { rp = mp_mul(a, b); });
        const bool eq = rs == rp;
        if (!eq) ++mismatches;
        row("mp_mul (deg 16 x deg 12)", ts, tp, eq);
    }

    // Exhaustive projective point count on a Kummer surface over F_49.
    {
        Ctx f49 = FieldCtx::ext(7, 2);
        auto random_curve = [&] {
            for (;;) {
                std::vector<FieldElem> d;
                for (int i = 0; i < 6; ++i) d.push_back(f49->element_at(rng() % 49));
                d.push_back(f49->element_at(1 + rng() % 48)); // force degree 6
                Genus2Curve z(f49, std::move(d));
                if (z.squarefree()) return z;
            }
        };
        const KummerSurface k = kummer_surface(random_curve());
        std::int64_t ns = 0, np = 0;
        const double ts = best_of(reps, [&] { ns = kummer_count_naive_serial(k, 49); });
        const double tp = best_of(reps, [&] { np = kummer_count_naive(k, 49); });
        const bool eq = ns == np;
        if (!eq) ++mismatches;
        row("kummer_count (q = 49)", ts, tp, eq);
    }

    if (mismatches != 0) {
        std::printf("\n%d kernel pair(s) disagreed\n", mismatches);
        return 1;
    }
    std::printf("\nall kernel pairs agree\n");
    return 0;
}
