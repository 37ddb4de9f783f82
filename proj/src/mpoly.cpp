// SPDX-License-Identifier: MIT
//
// Sparse multivariate polynomial arithmetic.  See include/prymrank/mpoly.hpp.

#include "prymrank/mpoly.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#ifdef PRYMRANK_OPENMP
#include <omp.h>
#endif

namespace prymrank {

namespace {

// Graded lexicographic comparison, "a after b" meaning a is smaller; used
// with highest-first sorting.
int total_of(const ExpVec& e) { return e[0] + e[1] + e[2] + e[3]; }

bool graded_lex_greater(const ExpVec& a, const ExpVec& b) {
    int ta = total_of(a), tb = total_of(b);
    if (ta != tb) return ta > tb;
    for (int i = 0; i < 4; ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

void require_exps(const ExpVec& e, int nvars) {
    for (int i = 0; i < 4; ++i) {
        if (i >= nvars && e[static_cast<std::size_t>(i)] != 0)
            throw std::invalid_argument("exponent set beyond the declared variable count");
        if (e[static_cast<std::size_t>(i)] >= kMaxVarDegree)
            throw std::invalid_argument("per-variable degree exceeds the packing cap");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// MPoly basics
// ---------------------------------------------------------------------------

MPoly::MPoly(Ctx ctx, int nvars) : ctx_(ctx), nvars_(nvars) {
    if (ctx == nullptr) throw std::invalid_argument("MPoly: null context");
    if (nvars < 1 || nvars > 4) throw std::invalid_argument("MPoly: nvars must be 1..4");
}

MPoly MPoly::constant(Ctx ctx, int nvars, const FieldElem& c) {
    MPoly m(ctx, nvars);
    m.add_term({0, 0, 0, 0}, c);
    return m;
}

MPoly MPoly::from_int(Ctx ctx, int nvars, std::int64_t c) {
    return constant(ctx, nvars, ctx->from_int(c));
}

MPoly MPoly::var(Ctx ctx, int nvars, int i, int power) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MPoly::var: index out of range");
    if (power < 0) throw std::invalid_argument("MPoly::var: negative power");
    MPoly m(ctx, nvars);
    ExpVec e{0, 0, 0, 0};
    e[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(power);
    m.add_term(e, ctx->one());
    return m;
}

void MPoly::require_compatible(const MPoly& o) const {
    if (ctx_ == nullptr || o.ctx_ == nullptr)
        throw std::invalid_argument("operation on uninitialized polynomial");
    if (!(ctx_ == o.ctx_ || ctx_->same_field(*o.ctx_)) || nvars_ != o.nvars_)
        throw std::invalid_argument("polynomials from different contexts or variable counts");
}

void MPoly::add_term(const ExpVec& e, const FieldElem& c) {
    require_exps(e, nvars_);
    if (c.ctx() == nullptr || !(c.ctx() == ctx_ || c.ctx()->same_field(*ctx_)))
        throw std::invalid_argument("coefficient from a different field context");
    if (c.is_zero()) return;
    ExpPack key = pack_exps(e);
    auto it = t_.find(key);
    if (it == t_.end()) {
        t_.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

FieldElem MPoly::coeff(const ExpVec& e) const {
    auto it = t_.find(pack_exps(e));
    return it == t_.end() ? ctx_->zero() : it->second;
}

MPoly MPoly::operator+(const MPoly& o) const {
    require_compatible(o);
    MPoly r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(unpack_exps(k), c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    require_compatible(o);
    MPoly r = *this;
    for (const auto& [k, c] : o.t_) r.add_term(unpack_exps(k), -c);
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(ctx_, nvars_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const { return mp_mul(*this, o); }

MPoly MPoly::operator*(const FieldElem& s) const {
    if (s.is_zero()) return MPoly(ctx_, nvars_);
    MPoly r(ctx_, nvars_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    require_compatible(o);
    if (t_.size() != o.t_.size()) return false;
    for (const auto& [k, c] : t_) {
        auto it = o.t_.find(k);
        if (it == o.t_.end() || !(it->second == c)) return false;
    }
    return true;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : t_) d = std::max(d, total_of(unpack_exps(k)));
    return d;
}

int MPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("degree_in: bad variable");
    int d = -1;
    for (const auto& [k, c] : t_)
        d = std::max(d, static_cast<int>(unpack_exps(k)[static_cast<std::size_t>(var)]));
    return t_.empty() ? -1 : d;
}

bool MPoly::is_homogeneous(int& deg_out) const {
    deg_out = -1;
    bool first = true;
    for (const auto& [k, c] : t_) {
        int d = total_of(unpack_exps(k));
        if (first) {
            deg_out = d;
            first = false;
        } else if (d != deg_out) {
            return false;
        }
    }
    return true;
}

MPoly MPoly::partial(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("partial: bad variable");
    MPoly r(ctx_, nvars_);
    for (const auto& [k, c] : t_) {
        ExpVec e = unpack_exps(k);
        std::uint16_t d = e[static_cast<std::size_t>(var)];
        if (d == 0) continue;
        e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(d - 1);
        r.add_term(e, c * ctx_->from_int(d));
    }
    return r;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("eval: point dimension mismatch");
    // Per-variable power tables keep the per-term cost at four lookups.
    std::array<std::vector<FieldElem>, 4> pows;
    for (int v = 0; v < nvars_; ++v) {
        int d = std::max(0, degree_in(v));
        auto& tab = pows[static_cast<std::size_t>(v)];
        tab.reserve(static_cast<std::size_t>(d) + 1);
        tab.push_back(ctx_->one());
        for (int i = 1; i <= d; ++i) tab.push_back(tab.back() * point[static_cast<std::size_t>(v)]);
    }
    FieldElem acc = ctx_->zero();
    for (const auto& [k, c] : t_) {
        ExpVec e = unpack_exps(k);
        FieldElem term = c;
        for (int v = 0; v < nvars_; ++v)
            term = term * pows[static_cast<std::size_t>(v)][e[static_cast<std::size_t>(v)]];
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::eval_partial(int var, const FieldElem& value) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("eval_partial: bad variable");
    int d = std::max(0, degree_in(var));
    std::vector<FieldElem> pows;
    pows.reserve(static_cast<std::size_t>(d) + 1);
    pows.push_back(ctx_->one());
    for (int i = 1; i <= d; ++i) pows.push_back(pows.back() * value);
    MPoly r(ctx_, nvars_);
    for (const auto& [k, c] : t_) {
        ExpVec e = unpack_exps(k);
        std::uint16_t de = e[static_cast<std::size_t>(var)];
        e[static_cast<std::size_t>(var)] = 0;
        r.add_term(e, c * pows[de]);
    }
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("coeffs_in: bad variable");
    int d = degree_in(var);
    std::vector<MPoly> out(static_cast<std::size_t>(std::max(0, d) + 1), MPoly(ctx_, nvars_));
    for (const auto& [k, c] : t_) {
        ExpVec e = unpack_exps(k);
        std::uint16_t de = e[static_cast<std::size_t>(var)];
        e[static_cast<std::size_t>(var)] = 0;
        out[de].add_term(e, c);
    }
    return out;
}

MPoly MPoly::subst(int var, const MPoly& value) const {
    require_compatible(value);
    std::vector<MPoly> cs = coeffs_in(var);
    MPoly acc(ctx_, nvars_);
    for (std::size_t i = cs.size(); i-- > 0;) acc = acc * value + cs[i];
    return acc;
}

UniPoly MPoly::to_univar(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("to_univar: bad variable");
    int d = degree_in(var);
    std::vector<FieldElem> c(static_cast<std::size_t>(std::max(0, d) + 1), ctx_->zero());
    for (const auto& [k, cf] : t_) {
        ExpVec e = unpack_exps(k);
        for (int v = 0; v < nvars_; ++v)
            if (v != var && e[static_cast<std::size_t>(v)] != 0)
                throw std::invalid_argument("to_univar: polynomial involves other variables");
        c[e[static_cast<std::size_t>(var)]] = cf;
    }
    return UniPoly(ctx_, std::move(c));
}

MPoly MPoly::from_univar(const UniPoly& f, int nvars, int var) {
    MPoly r(f.ctx(), nvars);
    if (var < 0 || var >= nvars) throw std::invalid_argument("from_univar: bad variable");
    for (int i = 0; i <= f.deg(); ++i) {
        ExpVec e{0, 0, 0, 0};
        e[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(i);
        r.add_term(e, f.coeff(static_cast<std::size_t>(i)));
    }
    return r;
}

std::vector<std::pair<ExpVec, FieldElem>> MPoly::sorted_terms() const {
    std::vector<std::pair<ExpVec, FieldElem>> v;
    v.reserve(t_.size());
    for (const auto& [k, c] : t_) v.emplace_back(unpack_exps(k), c);
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return graded_lex_greater(a.first, b.first); });
    return v;
}

std::string MPoly::to_string(const std::vector<std::string>& varnames) const {
    if (static_cast<int>(varnames.size()) < nvars_)
        throw std::invalid_argument("to_string: not enough variable names");
    if (t_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : sorted_terms()) {
        if (!first) out += "+";
        first = false;
        bool has_var = total_of(e) > 0;
        std::string cs = c.to_string();
        bool ext = cs.find(',') != std::string::npos;
        if (!has_var) {
            out += ext ? "(" + cs + ")" : cs;
            continue;
        }
        bool coeff_shown = !c.is_one();
        if (coeff_shown) out += (ext ? "(" + cs + ")" : cs) + "*";
        bool fv = true;
        for (int v = 0; v < nvars_; ++v) {
            std::uint16_t d = e[static_cast<std::size_t>(v)];
            if (d == 0) continue;
            if (!fv) out += "*";
            fv = false;
            out += varnames[static_cast<std::size_t>(v)];
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Multiplication kernels
// ---------------------------------------------------------------------------

namespace {
std::atomic<int> g_thread_override{0};
} // namespace

void set_effective_threads(int n) { g_thread_override.store(n); }

int effective_threads() {
    int o = g_thread_override.load();
    if (o > 0) return o;
    if (const char* env = std::getenv("PRYMRANK_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
#ifdef PRYMRANK_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

MPoly mp_mul_serial(const MPoly& a, const MPoly& b) {
    if (a.ctx() == nullptr || b.ctx() == nullptr)
        throw std::invalid_argument("mp_mul: uninitialized polynomial");
    if (!(a.ctx() == b.ctx() || a.ctx()->same_field(*b.ctx())) || a.nvars() != b.nvars())
        throw std::invalid_argument("mp_mul: mismatched contexts or variable counts");
    MPoly r(a.ctx(), a.nvars());
    if (a.is_zero() || b.is_zero()) return r;
    if (a.ctx()->k() == 1) {
        // Residue fast path: field elements are single residues mod p, and
        // sums of at most |a| products of values < p^2 fit a 64-bit word.
        const std::uint64_t p = a.ctx()->p();
        std::unordered_map<ExpPack, std::uint64_t> acc;
        acc.reserve(a.term_count() + b.term_count());
        for (const auto& [ka, ca] : a.terms()) {
            const std::uint64_t va = ca.coeffs()[0];
            for (const auto& [kb, cb] : b.terms()) acc[ka + kb] += va * cb.coeffs()[0];
        }
        for (const auto& [k, v] : acc) {
            std::uint32_t res = static_cast<std::uint32_t>(v % p);
            if (res) r.add_term(unpack_exps(k), a.ctx()->from_int(res));
        }
        return r;
    }
    std::unordered_map<ExpPack, FieldElem> acc;
    acc.reserve(a.term_count() + b.term_count());
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            FieldElem prod = ca * cb;
            auto [it, fresh] = acc.emplace(ka + kb, prod);
            if (!fresh) it->second = it->second + prod;
        }
    }
    for (const auto& [k, v] : acc)
        if (!v.is_zero()) r.add_term(unpack_exps(k), v);
    return r;
}

MPoly mp_mul(const MPoly& a, const MPoly& b) {
#ifdef PRYMRANK_OPENMP
    constexpr std::size_t kParallelPairThreshold = std::size_t{1} << 16;
    const std::size_t pairs = a.term_count() * b.term_count();
    const int nthreads = effective_threads();
    if (pairs < kParallelPairThreshold || nthreads <= 1) return mp_mul_serial(a, b);
    if (a.ctx() == nullptr || b.ctx() == nullptr)
        throw std::invalid_argument("mp_mul: uninitialized polynomial");
    if (!(a.ctx() == b.ctx() || a.ctx()->same_field(*b.ctx())) || a.nvars() != b.nvars())
        throw std::invalid_argument("mp_mul: mismatched contexts or variable counts");
    MPoly r(a.ctx(), a.nvars());
    if (a.is_zero() || b.is_zero()) return r;

    std::vector<std::pair<ExpPack, FieldElem>> av(a.terms().begin(), a.terms().end());
    std::vector<std::pair<ExpPack, FieldElem>> bv(b.terms().begin(), b.terms().end());
    // The merge below is order-independent because field addition is exact
    // and commutative, so the parallel kernel is bit-for-bit deterministic.
    if (a.ctx()->k() == 1) {
        const std::uint64_t p = a.ctx()->p();
        std::unordered_map<ExpPack, std::uint64_t> global;
#pragma omp parallel num_threads(nthreads)
        {
            std::unordered_map<ExpPack, std::uint64_t> local;
            local.reserve(bv.size());
#pragma omp for schedule(static)
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(av.size()); ++i) {
                const std::uint64_t va = av[static_cast<std::size_t>(i)].second.coeffs()[0];
                const ExpPack ka = av[static_cast<std::size_t>(i)].first;
                for (const auto& [kb, cb] : bv) local[ka + kb] += va * cb.coeffs()[0];
            }
#pragma omp critical
            for (const auto& [k, v] : local) global[k] += v;
        }
        for (const auto& [k, v] : global) {
            std::uint32_t res = static_cast<std::uint32_t>(v % p);
            if (res) r.add_term(unpack_exps(k), a.ctx()->from_int(res));
        }
        return r;
    }
    std::unordered_map<ExpPack, FieldElem> global;
#pragma omp parallel num_threads(nthreads)
    {
        std::unordered_map<ExpPack, FieldElem> local;
        local.reserve(bv.size());
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(av.size()); ++i) {
            const FieldElem& ca = av[static_cast<std::size_t>(i)].second;
            const ExpPack ka = av[static_cast<std::size_t>(i)].first;
            for (const auto& [kb, cb] : bv) {
                FieldElem prod = ca * cb;
                auto [it, fresh] = local.emplace(ka + kb, prod);
                if (!fresh) it->second = it->second + prod;
            }
        }
#pragma omp critical
        for (const auto& [k, v] : local) {
            auto [it, fresh] = global.emplace(k, v);
            if (!fresh) it->second = it->second + v;
        }
    }
    for (const auto& [k, v] : global)
        if (!v.is_zero()) r.add_term(unpack_exps(k), v);
    return r;
#else
    return mp_mul_serial(a, b);
#endif
}

MPoly mp_pow(const MPoly& f, std::uint64_t e) {
    if (f.ctx() == nullptr) throw std::invalid_argument("mp_pow: uninitialized polynomial");
    MPoly acc = MPoly::from_int(f.ctx(), f.nvars(), 1);
    if (e == 0) return acc;
    MPoly base = f;
    while (e) {
        if (e & 1) acc = mp_mul(acc, base);
        e >>= 1;
        if (e) base = mp_mul(base, base);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Fraction-free resultant
// ---------------------------------------------------------------------------

namespace {

bool find_leading(const MPoly& f, ExpVec& e_out, FieldElem& c_out) {
    bool found = false;
    for (const auto& [k, c] : f.terms()) {
        ExpVec e = unpack_exps(k);
        if (!found || graded_lex_greater(e, e_out)) {
            e_out = e;
            c_out = c;
            found = true;
        }
    }
    return found;
}

MPoly mul_monomial(const MPoly& f, const ExpVec& e, const FieldElem& c) {
    MPoly r(f.ctx(), f.nvars());
    for (const auto& [k, cf] : f.terms()) {
        ExpVec ke = unpack_exps(k);
        for (int i = 0; i < 4; ++i)
            ke[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                ke[static_cast<std::size_t>(i)] + e[static_cast<std::size_t>(i)]);
        r.add_term(ke, cf * c);
    }
    return r;
}

// Exact division by a single nonzero polynomial (used by Bareiss, where
// divisibility is guaranteed); throws std::logic_error if not exact.
MPoly div_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::logic_error("div_exact: division by zero polynomial");
    MPoly q(a.ctx(), a.nvars());
    if (a.is_zero()) return q;
    ExpVec lb{0, 0, 0, 0};
    FieldElem cb;
    find_leading(b, lb, cb);
    MPoly rem = a;
    while (!rem.is_zero()) {
        ExpVec la{0, 0, 0, 0};
        FieldElem ca;
        find_leading(rem, la, ca);
        ExpVec d;
        for (int i = 0; i < 4; ++i) {
            if (la[static_cast<std::size_t>(i)] < lb[static_cast<std::size_t>(i)])
                throw std::logic_error("div_exact: inexact division");
            d[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(
                la[static_cast<std::size_t>(i)] - lb[static_cast<std::size_t>(i)]);
        }
        FieldElem t = ca / cb;
        q.add_term(d, t);
        rem = rem - mul_monomial(b, d, t);
    }
    return q;
}

} // namespace

MPoly resultant_wrt(const MPoly& f, const MPoly& g, int var) {
    if (f.ctx() == nullptr || g.ctx() == nullptr)
        throw std::invalid_argument("resultant_wrt: uninitialized polynomial");
    if (f.is_zero() || g.is_zero())
        throw std::invalid_argument("resultant_wrt: zero input polynomial");
    if (var < 0 || var >= f.nvars()) throw std::invalid_argument("resultant_wrt: bad variable");
    const int n = f.degree_in(var);
    const int m = g.degree_in(var);
    if (n == 0 && m == 0)
        throw std::invalid_argument("resultant_wrt: both inputs constant in the variable");
    std::vector<MPoly> fc = f.coeffs_in(var);
    std::vector<MPoly> gc = g.coeffs_in(var);
    const int N = n + m;
    Ctx ctx = f.ctx();
    const int nv = f.nvars();
    std::vector<std::vector<MPoly>> S(
        static_cast<std::size_t>(N), std::vector<MPoly>(static_cast<std::size_t>(N), MPoly(ctx, nv)));
    // Coefficient rows low-degree-first (fixes the documented sign
    // convention: resultant_wrt(x - y, x + y, y) = 2x).
    for (int j = 0; j < m; ++j)
        for (int t = 0; t <= n; ++t)
            S[static_cast<std::size_t>(j)][static_cast<std::size_t>(j + t)] =
                fc[static_cast<std::size_t>(t)];
    for (int j = 0; j < n; ++j)
        for (int t = 0; t <= m; ++t)
            S[static_cast<std::size_t>(m + j)][static_cast<std::size_t>(j + t)] =
                gc[static_cast<std::size_t>(t)];

    // Bareiss fraction-free elimination; all divisions are exact.
    bool negate = false;
    MPoly prev = MPoly::from_int(ctx, nv, 1);
    for (int r = 0; r < N - 1; ++r) {
        if (S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)].is_zero()) {
            int found = -1;
            for (int i = r + 1; i < N; ++i)
                if (!S[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)].is_zero()) {
                    found = i;
                    break;
                }
            if (found < 0) return MPoly(ctx, nv); // singular: resultant vanishes
            std::swap(S[static_cast<std::size_t>(r)], S[static_cast<std::size_t>(found)]);
            negate = !negate;
        }
        const MPoly& piv = S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
        for (int i = r + 1; i < N; ++i) {
            for (int j = r + 1; j < N; ++j) {
                MPoly num = S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * piv -
                            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                                S[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                S[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = div_exact(num, prev);
            }
            S[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = MPoly(ctx, nv);
        }
        prev = S[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)];
    }
    MPoly det = S[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(N - 1)];
    return negate ? -det : det;
}

// ---------------------------------------------------------------------------
// Interpolation
// ---------------------------------------------------------------------------

UniPoly interpolate(const std::vector<std::pair<FieldElem, FieldElem>>& nodes, int bound) {
    if (bound < 0) throw std::invalid_argument("interpolate: negative bound");
    if (nodes.size() < static_cast<std::size_t>(bound) + 1)
        throw std::invalid_argument("interpolate: need at least bound+1 nodes");
    Ctx ctx = nodes.front().first.ctx();
    if (ctx == nullptr) throw std::invalid_argument("interpolate: uninitialized node");
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (nodes[i].first == nodes[j].first)
                throw std::invalid_argument("interpolate: duplicate nodes");
    // Newton divided differences.
    std::vector<FieldElem> coef;
    coef.reserve(n);
    for (const auto& [x, y] : nodes) coef.push_back(y);
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            coef[i] = (coef[i] - coef[i - 1]) / (nodes[i].first - nodes[i - j].first);
    UniPoly acc(ctx);
    for (std::size_t i = n; i-- > 0;) {
        // acc = acc*(X - x_i) + coef[i]
        UniPoly shifted = acc * UniPoly(ctx, {-nodes[i].first, ctx->one()});
        acc = shifted + UniPoly(ctx, {coef[i]});
    }
    if (acc.deg() > bound)
        throw std::domain_error("interpolate: data exceeds the stated degree bound");
    return acc;
}

MPoly embed_mpoly(const MPoly& f, Ctx dst) {
    MPoly r(dst, f.nvars());
    for (const auto& [k, c] : f.terms()) r.add_term(unpack_exps(k), embed(c, dst));
    return r;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

struct Scanner {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
    }
    long long read_int() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        if (i - start > 12) fail("integer literal too long");
        return std::stoll(s.substr(start, i - start));
    }
};

} // namespace

MPoly parse_mpoly(Ctx ctx, const std::vector<std::vector<std::string>>& varnames,
                  const std::string& text) {
    const int nvars = static_cast<int>(varnames.size());
    if (nvars < 1 || nvars > 4) throw std::invalid_argument("parse_mpoly: need 1..4 variables");
    // Flatten to (spelling, index), longest spellings first so that e.g.
    // "X1" wins over a one-letter variable when both could match.
    std::vector<std::pair<std::string, int>> names;
    for (int v = 0; v < nvars; ++v)
        for (const std::string& nm : varnames[static_cast<std::size_t>(v)]) {
            if (nm.empty()) throw std::invalid_argument("parse_mpoly: empty variable name");
            names.emplace_back(nm, v);
        }
    std::sort(names.begin(), names.end(), [](const auto& a, const auto& b) {
        return a.first.size() != b.first.size() ? a.first.size() > b.first.size()
                                                : a.first < b.first;
    });

    MPoly out(ctx, nvars);
    Scanner sc{text};
    if (sc.done()) throw std::invalid_argument("parse_mpoly: empty input");
    bool expect_term = true;
    int sign = 1;
    while (!sc.done()) {
        char c = sc.peek();
        if (c == '+' || c == '-') {
            if (c == '-') sign = -sign;
            ++sc.i;
            expect_term = true;
            continue;
        }
        if (!expect_term) sc.fail("expected '+' or '-' between terms");
        // One term: factors until the next top-level +/- or end of input.
        FieldElem coeff = ctx->from_int(sign);
        ExpVec exps{0, 0, 0, 0};
        bool any_factor = false;
        for (;;) {
            char f = sc.peek();
            if (f == '\0' || f == '+' || f == '-') break;
            if (f == '*') {
                ++sc.i;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff = coeff * ctx->from_int(sc.read_int());
                any_factor = true;
                continue;
            }
            if (f == '(') {
                ++sc.i;
                std::vector<std::uint32_t> cs;
                for (;;) {
                    long long v = 0;
                    bool neg = false;
                    if (sc.peek() == '-') {
                        neg = true;
                        ++sc.i;
                    }
                    v = sc.read_int();
                    long long r = (neg ? -v : v) % static_cast<long long>(ctx->p());
                    if (r < 0) r += ctx->p();
                    cs.push_back(static_cast<std::uint32_t>(r));
                    char nxt = sc.peek();
                    if (nxt == ',') {
                        ++sc.i;
                        continue;
                    }
                    if (nxt == ')') {
                        ++sc.i;
                        break;
                    }
                    sc.fail("expected ',' or ')' in coefficient tuple");
                }
                coeff = coeff * ctx->from_coeffs(cs);
                any_factor = true;
                continue;
            }
            // Variable name (longest spelling wins).
            int var = -1;
            for (const auto& [nm, idx] : names) {
                if (text.compare(sc.i, nm.size(), nm) == 0) {
                    var = idx;
                    sc.i += nm.size();
                    break;
                }
            }
            if (var < 0) sc.fail(std::string("unexpected character '") + f + "'");
            long long e = 1;
            if (sc.peek() == '^') {
                ++sc.i;
                e = sc.read_int();
            }
            long long ne = exps[static_cast<std::size_t>(var)] + e;
            if (ne >= kMaxVarDegree) sc.fail("exponent too large");
            exps[static_cast<std::size_t>(var)] = static_cast<std::uint16_t>(ne);
            any_factor = true;
        }
        if (!any_factor) sc.fail("empty term");
        out.add_term(exps, coeff);
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw std::invalid_argument("parse_mpoly: dangling sign at end of input");
    return out;
}

} // namespace prymrank
