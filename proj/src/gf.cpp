// SPDX-License-Identifier: MIT
//
// Implementation of F_{p^k} contexts, element arithmetic, univariate
// polynomial arithmetic, and factorization.  See include/prymrank/gf.hpp
// for the conventions (dense low-first vectors, deterministic modulus
// choice, canonical sorting of factor lists).

#include "prymrank/gf.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace prymrank {

namespace {

// ---------------------------------------------------------------------------
// Scalar helpers over F_p (p < 2^20, so products fit comfortably in 64 bits)
// ---------------------------------------------------------------------------

std::uint32_t addp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint32_t subp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return a >= b ? a - b : a + p - b;
}

std::uint32_t mulp(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t powp(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
    std::uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t invp(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw std::domain_error("division by zero in F_p");
    return powp(a % p, p - 2, p);
}

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Raw coefficient-vector arithmetic mod (p, modulus); used by FieldElem
// ---------------------------------------------------------------------------

using Vec = std::vector<std::uint32_t>;

// Reduce a dense product (any length) modulo the monic defining polynomial.
void reduce_in_place(Vec& c, const Vec& mod, std::uint32_t p) {
    const std::size_t k = mod.size() - 1;
    for (std::size_t i = c.size(); i-- > k;) {
        std::uint32_t t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (std::size_t j = 0; j < k; ++j)
            c[i - k + j] = subp(c[i - k + j], mulp(t, mod[j], p), p);
    }
    c.resize(k);
}

Vec mul_mod(const Vec& a, const Vec& b, const Vec& mod, std::uint32_t p) {
    const std::size_t k = mod.size() - 1;
    Vec prod(2 * k - 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i] == 0) continue;
        const std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < k; ++j)
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + ai * b[j]) % p);
    }
    reduce_in_place(prod, mod, p);
    return prod;
}

int vdeg(const Vec& v) {
    for (std::size_t i = v.size(); i-- > 0;)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

// Extended Euclid over F_p[x] on raw vectors: returns u with u*a ≡ 1 (mod m).
// Requires gcd(a, m) = 1, which holds for nonzero a when m is irreducible.
Vec inv_mod(const Vec& a, const Vec& mod, std::uint32_t p) {
    // r0 = mod, r1 = a; t0 = 0, t1 = 1; classic iteration.
    Vec r0 = mod, r1 = a;
    r1.resize(mod.size(), 0);
    Vec t0(mod.size(), 0), t1(mod.size(), 0);
    t1[0] = 1;
    while (vdeg(r1) >= 0) {
        // Divide r0 by r1: quotient steps applied simultaneously to t's.
        int d1 = vdeg(r1);
        std::uint32_t lead_inv = invp(r1[static_cast<std::size_t>(d1)], p);
        Vec q(mod.size(), 0);
        Vec rem = r0;
        int dr = vdeg(rem);
        while (dr >= d1) {
            std::uint32_t f = mulp(rem[static_cast<std::size_t>(dr)], lead_inv, p);
            q[static_cast<std::size_t>(dr - d1)] = f;
            for (int j = 0; j <= d1; ++j)
                rem[static_cast<std::size_t>(dr - d1 + j)] =
                    subp(rem[static_cast<std::size_t>(dr - d1 + j)],
                         mulp(f, r1[static_cast<std::size_t>(j)], p), p);
            dr = vdeg(rem);
        }
        // t2 = t0 - q*t1 (coefficients beyond deg mod never arise here:
        // every t has degree < deg mod because deg q + deg t1 < deg mod
        // along the Euclid chain).
        Vec qt(2 * mod.size(), 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < t1.size(); ++j)
                qt[i + j] = static_cast<std::uint32_t>(
                    (qt[i + j] + static_cast<std::uint64_t>(q[i]) * t1[j]) % p);
        }
        Vec t2(mod.size(), 0);
        for (std::size_t i = 0; i < t2.size(); ++i) t2[i] = subp(t0[i], qt[i], p);
        r0 = r1;
        r1 = rem;
        t0 = t1;
        t1 = t2;
    }
    int d0 = vdeg(r0);
    if (d0 != 0) throw std::domain_error("inverse does not exist (gcd not constant)");
    std::uint32_t s = invp(r0[0], p);
    Vec out(mod.size() - 1, 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = mulp(t0[i], s, p);
    return out;
}

// ---------------------------------------------------------------------------
// Context registry: contexts are interned and live for the whole process.
// ---------------------------------------------------------------------------

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::map<std::pair<std::uint32_t, Vec>, std::unique_ptr<FieldCtx>>& registry() {
    static std::map<std::pair<std::uint32_t, Vec>, std::unique_ptr<FieldCtx>> r;
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

Ctx FieldCtx::intern(std::uint32_t p, std::uint32_t k, Vec mod) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto key = std::make_pair(p, mod);
    auto it = registry().find(key);
    if (it != registry().end()) return it->second.get();
    auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx(p, k, std::move(mod)));
    Ctx raw = ctx.get();
    registry().emplace(std::move(key), std::move(ctx));
    return raw;
}

Ctx FieldCtx::prime_field(std::uint32_t p) {
    if (p < 3 || p >= (1u << 20) || p % 2 == 0 || !is_prime_u32(p))
        throw std::invalid_argument("prime_field: p must be an odd prime in [3, 2^20)");
    return FieldCtx::intern(p, 1, Vec{0, 1}); // modulus x: F_p[x]/(x) = F_p
}

Ctx FieldCtx::ext(std::uint32_t p, std::uint32_t k) {
    if (k == 0 || k > 64) throw std::invalid_argument("ext: need 1 <= k <= 64");
    if (k == 1) return prime_field(p);
    Ctx base = prime_field(p);
    // Graded search for the canonically first irreducible monic polynomial:
    // by total coefficient sum, then lexicographic on (c_0, ..., c_{k-1}).
    const std::uint32_t maxsum = k * (p - 1);
    Vec c(k, 0);
    for (std::uint32_t s = 0; s <= maxsum; ++s) {
        // Enumerate (c_0, ..., c_{k-1}) with sum s in lexicographic order.
        std::function<Ctx(std::size_t, std::uint32_t)> rec =
            [&](std::size_t pos, std::uint32_t rem) -> Ctx {
            if (pos == k) {
                if (rem != 0) return nullptr;
                if (c[0] == 0) return nullptr; // divisible by x
                std::vector<FieldElem> fc;
                fc.reserve(k + 1);
                for (std::uint32_t ci : c) fc.push_back(base->from_int(ci));
                fc.push_back(base->one());
                UniPoly cand(base, std::move(fc));
                if (!is_irreducible(cand)) return nullptr;
                Vec mod(c.begin(), c.end());
                mod.push_back(1);
                return FieldCtx::intern(p, k, std::move(mod));
            }
            std::uint32_t hi = std::min<std::uint32_t>(p - 1, rem);
            std::uint32_t remaining_cap = (p - 1) * static_cast<std::uint32_t>(k - 1 - pos);
            std::uint32_t lo = rem > remaining_cap ? rem - remaining_cap : 0;
            for (std::uint32_t v = lo; v <= hi; ++v) {
                c[pos] = v;
                if (Ctx hit = rec(pos + 1, rem - v)) return hit;
            }
            return nullptr;
        };
        if (Ctx hit = rec(0, s)) return hit;
    }
    throw std::logic_error("ext: no irreducible polynomial found (impossible)");
}

Ctx make_ext(std::uint32_t p, std::uint32_t k) { return FieldCtx::ext(p, k); }

Ctx FieldCtx::with_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    Ctx base = prime_field(p);
    if (modulus.size() < 2) throw std::invalid_argument("with_modulus: degree must be >= 1");
    for (std::uint32_t c : modulus)
        if (c >= p) throw std::invalid_argument("with_modulus: coefficients must lie in [0, p)");
    if (modulus.back() != 1) throw std::invalid_argument("with_modulus: modulus must be monic");
    std::uint32_t k = static_cast<std::uint32_t>(modulus.size()) - 1;
    if (k == 1) {
        // F_p[x]/(x + c) is F_p itself; normalize to the interned prime field.
        return base;
    }
    std::vector<FieldElem> fc;
    for (std::uint32_t ci : modulus) fc.push_back(base->from_int(ci));
    UniPoly m(base, std::move(fc));
    if (!is_irreducible(m)) throw std::invalid_argument("with_modulus: modulus is not irreducible");
    return FieldCtx::intern(p, k, modulus);
}

std::uint64_t FieldCtx::order() const {
    unsigned __int128 o = order128();
    if (o > static_cast<unsigned __int128>(UINT64_MAX))
        throw std::overflow_error("field order exceeds 64 bits");
    return static_cast<std::uint64_t>(o);
}

unsigned __int128 FieldCtx::order128() const {
    unsigned __int128 o = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        if (o > (static_cast<unsigned __int128>(1) << 120))
            throw std::overflow_error("field order exceeds 128-bit budget");
        o *= p_;
    }
    return o;
}

FieldElem FieldCtx::zero() const { return FieldElem(this, Vec(k_, 0)); }

FieldElem FieldCtx::one() const {
    Vec c(k_, 0);
    c[0] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    Vec c(k_, 0);
    c[0] = static_cast<std::uint32_t>(r);
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_coeffs(Vec c) const {
    if (c.size() > k_) throw std::invalid_argument("from_coeffs: too many coefficients");
    c.resize(k_, 0);
    for (auto& x : c) x %= p_;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::gen() const {
    if (k_ < 2) throw std::invalid_argument("gen: prime field has no extension generator");
    Vec c(k_, 0);
    c[1] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::element_at(std::uint64_t n) const {
    if (n >= order()) throw std::invalid_argument("element_at: index out of range");
    Vec c(k_, 0);
    for (std::uint32_t i = 0; i < k_; ++i) {
        c[i] = static_cast<std::uint32_t>(n % p_);
        n /= p_;
    }
    return FieldElem(this, std::move(c));
}

std::uint64_t FieldCtx::index_of(const FieldElem& e) const {
    if (e.ctx() == nullptr || !same_field(*e.ctx()))
        throw std::invalid_argument("index_of: element from a different field");
    (void)order(); // ensure the index fits
    std::uint64_t n = 0;
    for (std::uint32_t i = k_; i-- > 0;) n = n * p_ + e.coeffs()[i];
    return n;
}

FieldElem FieldCtx::parse(const std::string& s) const {
    Vec c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        long long v;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse: bad field element '" + s + "'");
        }
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("parse: bad field element '" + s + "'");
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        c.push_back(static_cast<std::uint32_t>(r));
    }
    if (c.empty() || c.size() > k_)
        throw std::invalid_argument("parse: expected 1.." + std::to_string(k_) +
                                    " comma-separated coefficients");
    c.resize(k_, 0);
    return FieldElem(this, std::move(c));
}

// ---------------------------------------------------------------------------
// FieldElem
// ---------------------------------------------------------------------------

namespace {
void require_ctx(const FieldElem& a) {
    if (a.ctx() == nullptr) throw std::invalid_argument("operation on uninitialized field element");
}
void require_same(const FieldElem& a, const FieldElem& b) {
    require_ctx(a);
    require_ctx(b);
    if (a.ctx() != b.ctx() && !a.ctx()->same_field(*b.ctx()))
        throw std::invalid_argument("elements belong to different field contexts");
}
} // namespace

bool FieldElem::is_zero() const {
    require_ctx(*this);
    for (std::uint32_t x : c_)
        if (x) return false;
    return true;
}

bool FieldElem::is_one() const {
    require_ctx(*this);
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    require_same(*this, o);
    Vec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = addp(c_[i], o.c_[i], ctx_->p());
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    require_same(*this, o);
    Vec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = subp(c_[i], o.c_[i], ctx_->p());
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-() const {
    require_ctx(*this);
    Vec r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] ? ctx_->p() - c_[i] : 0;
    return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    require_same(*this, o);
    const std::uint32_t p = ctx_->p();
    if (ctx_->k() == 1) return FieldElem(ctx_, Vec{mulp(c_[0], o.c_[0], p)});
    return FieldElem(ctx_, mul_mod(c_, o.c_, ctx_->modulus(), p));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

bool FieldElem::operator==(const FieldElem& o) const {
    require_same(*this, o);
    return c_ == o.c_;
}

bool FieldElem::operator<(const FieldElem& o) const {
    require_same(*this, o);
    return c_ < o.c_;
}

FieldElem FieldElem::inv() const {
    require_ctx(*this);
    if (is_zero()) throw std::domain_error("inverse of zero");
    const std::uint32_t p = ctx_->p();
    if (ctx_->k() == 1) return FieldElem(ctx_, Vec{invp(c_[0], p)});
    return FieldElem(ctx_, inv_mod(c_, ctx_->modulus(), p));
}

FieldElem FieldElem::pow(unsigned __int128 e) const {
    require_ctx(*this);
    FieldElem acc = ctx_->one();
    if (e == 0) return acc;
    FieldElem base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

FieldElem FieldElem::frobenius_pow(std::uint64_t i) const {
    require_ctx(*this);
    std::uint64_t r = i % ctx_->k();
    FieldElem out = *this;
    for (std::uint64_t j = 0; j < r; ++j) out = out.pow(ctx_->p());
    return out;
}

bool FieldElem::is_square() const {
    require_ctx(*this);
    if (is_zero()) return true;
    return pow((ctx_->order128() - 1) / 2).is_one();
}

FieldElem FieldElem::sqrt() const {
    require_ctx(*this);
    std::uint64_t q = ctx_->order();
    if (q > 1000000) throw std::invalid_argument("sqrt: field too large for scan");
    for (std::uint64_t n = 0; n < q; ++n) {
        FieldElem e = ctx_->element_at(n);
        if (e * e == *this) return e;
    }
    throw std::domain_error("sqrt: element is not a square");
}

std::string FieldElem::to_string() const {
    require_ctx(*this);
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c_[i]);
    }
    return out;
}

FieldElem frobenius(const FieldElem& x, std::uint64_t i) { return x.frobenius_pow(i); }

// ---------------------------------------------------------------------------
// embed
// ---------------------------------------------------------------------------

namespace {
std::mutex& embed_mutex() {
    static std::mutex m;
    return m;
}
// (p, src modulus, dst modulus) -> coefficients of the chosen root in dst.
std::map<std::tuple<std::uint32_t, Vec, Vec>, Vec>& embed_cache() {
    static std::map<std::tuple<std::uint32_t, Vec, Vec>, Vec> c;
    return c;
}
} // namespace

FieldElem embed(const FieldElem& x, Ctx dst) {
    require_ctx(x);
    if (dst == nullptr) throw std::invalid_argument("embed: null destination context");
    Ctx src = x.ctx();
    if (src->same_field(*dst)) return dst->from_coeffs(x.coeffs());
    if (src->p() != dst->p()) throw std::invalid_argument("embed: different characteristics");
    if (dst->k() % src->k() != 0)
        throw std::invalid_argument("embed: source degree does not divide destination degree");
    if (src->k() == 1) return dst->from_int(static_cast<std::int64_t>(x.coeffs()[0]));

    auto key = std::make_tuple(src->p(), src->modulus(), dst->modulus());
    Vec root_coeffs;
    bool have = false;
    {
        std::lock_guard<std::mutex> lock(embed_mutex());
        auto it = embed_cache().find(key);
        if (it != embed_cache().end()) {
            root_coeffs = it->second;
            have = true;
        }
    }
    if (!have) {
        Ctx base = FieldCtx::prime_field(src->p());
        std::vector<FieldElem> mc;
        for (std::uint32_t ci : src->modulus()) mc.push_back(base->from_int(ci));
        UniPoly m(base, std::move(mc));
        std::vector<FieldElem> roots = roots_in_ext(m, dst);
        if (roots.empty())
            throw std::logic_error("embed: modulus has no root in destination (impossible)");
        root_coeffs = roots.front().coeffs();
        std::lock_guard<std::mutex> lock(embed_mutex());
        embed_cache().emplace(std::move(key), root_coeffs);
    }
    FieldElem r = dst->from_coeffs(root_coeffs);
    // Horner evaluation of x's coefficient polynomial at the root.
    FieldElem acc = dst->zero();
    for (std::size_t i = x.coeffs().size(); i-- > 0;)
        acc = acc * r + dst->from_int(static_cast<std::int64_t>(x.coeffs()[i]));
    return acc;
}

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly::UniPoly(Ctx ctx, std::vector<FieldElem> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    if (ctx_ == nullptr) throw std::invalid_argument("UniPoly: null context");
    for (const FieldElem& e : c_) {
        if (e.ctx() == nullptr || !(e.ctx() == ctx_ || e.ctx()->same_field(*ctx_)))
            throw std::invalid_argument("UniPoly: coefficient from a different field");
    }
    trim();
}

UniPoly UniPoly::from_ints(Ctx ctx, const std::vector<std::int64_t>& coeffs) {
    std::vector<FieldElem> c;
    c.reserve(coeffs.size());
    for (std::int64_t v : coeffs) c.push_back(ctx->from_int(v));
    return UniPoly(ctx, std::move(c));
}

UniPoly UniPoly::x(Ctx ctx) { return from_ints(ctx, {0, 1}); }

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldElem UniPoly::coeff(std::size_t i) const {
    if (i < c_.size()) return c_[i];
    return ctx_->zero();
}

FieldElem UniPoly::lead() const {
    if (c_.empty()) throw std::domain_error("lead: zero polynomial");
    return c_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (!ctx_->same_field(*o.ctx_)) throw std::invalid_argument("polynomials over different fields");
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    if (!ctx_->same_field(*o.ctx_)) throw std::invalid_argument("polynomials over different fields");
    std::vector<FieldElem> r(std::max(c_.size(), o.c_.size()), ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] - o.c_[i];
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (!ctx_->same_field(*o.ctx_)) throw std::invalid_argument("polynomials over different fields");
    if (c_.empty() || o.c_.empty()) return UniPoly(ctx_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, ctx_->zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(ctx_, std::move(r));
}

UniPoly UniPoly::operator*(const FieldElem& s) const {
    std::vector<FieldElem> r;
    r.reserve(c_.size());
    for (const FieldElem& e : c_) r.push_back(e * s);
    return UniPoly(ctx_, std::move(r));
}

bool UniPoly::operator==(const UniPoly& o) const {
    if (!ctx_->same_field(*o.ctx_)) throw std::invalid_argument("polynomials over different fields");
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!(c_[i] == o.c_[i])) return false;
    return true;
}

void UniPoly::divrem(const UniPoly& d, UniPoly& q, UniPoly& r) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    if (!ctx_->same_field(*d.ctx_)) throw std::invalid_argument("polynomials over different fields");
    std::vector<FieldElem> rem = c_;
    int dd = d.deg();
    FieldElem lead_inv = d.lead().inv();
    std::vector<FieldElem> quo(
        deg() >= dd ? static_cast<std::size_t>(deg() - dd) + 1 : 0, ctx_->zero());
    for (int i = deg(); i >= dd; --i) {
        FieldElem t = rem[static_cast<std::size_t>(i)];
        if (t.is_zero()) continue;
        FieldElem f = t * lead_inv;
        quo[static_cast<std::size_t>(i - dd)] = f;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] =
                rem[static_cast<std::size_t>(i - dd + j)] - f * d.c_[static_cast<std::size_t>(j)];
    }
    q = UniPoly(ctx_, std::move(quo));
    r = UniPoly(ctx_, std::move(rem));
}

UniPoly UniPoly::operator%(const UniPoly& d) const {
    UniPoly q, r;
    divrem(d, q, r);
    return r;
}

UniPoly UniPoly::operator/(const UniPoly& d) const {
    UniPoly q, r;
    divrem(d, q, r);
    return q;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly(ctx_);
    std::vector<FieldElem> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.push_back(c_[i] * ctx_->from_int(static_cast<std::int64_t>(i)));
    return UniPoly(ctx_, std::move(r));
}

FieldElem UniPoly::eval(const FieldElem& x) const {
    FieldElem acc = ctx_->zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::make_monic() const {
    if (is_zero()) throw std::domain_error("make_monic: zero polynomial");
    if (lead().is_one()) return *this;
    return *this * lead().inv();
}

UniPoly UniPoly::shift_scale(const FieldElem& s) const {
    std::vector<FieldElem> r = c_;
    FieldElem acc = ctx_->one();
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = r[i] * acc;
        acc = acc * s;
    }
    return UniPoly(ctx_, std::move(r));
}

std::string UniPoly::to_csv() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ';';
        out += c_[i].to_string();
    }
    return out;
}

std::string UniPoly::to_pretty(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const FieldElem& e = c_[i];
        if (e.is_zero()) continue;
        if (!first) out += "+";
        first = false;
        bool needs_coeff = (i == 0) || !e.is_one();
        if (needs_coeff) {
            std::string cs = e.to_string();
            if (cs.find(',') != std::string::npos) cs = "(" + cs + ")";
            out += cs;
            if (i > 0) out += "*";
        }
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

UniPoly UniPoly::parse_csv(Ctx ctx, const std::string& s) {
    std::vector<FieldElem> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';')) c.push_back(ctx->parse(tok));
    return UniPoly(ctx, std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    if (r0.is_zero()) return r0;
    return r0.make_monic();
}

UniPoly pow_mod(const UniPoly& base, unsigned __int128 e, const UniPoly& mod) {
    UniPoly acc = UniPoly::from_ints(base.ctx(), {1}) % mod;
    UniPoly b = base % mod;
    while (e) {
        if (e & 1) acc = (acc * b) % mod;
        e >>= 1;
        if (e) b = (b * b) % mod;
    }
    return acc;
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    if (f.deg() == 0) return true;
    UniPoly d = f.derivative();
    if (d.is_zero()) return false; // p-th power in characteristic p
    return gcd(f, d).deg() == 0;
}

// ---------------------------------------------------------------------------
// Factorization: squarefree / distinct-degree / equal-degree stages
// ---------------------------------------------------------------------------

namespace {

// p-th root of an element: Frobenius inverse c -> c^(p^(k-1)).
FieldElem pth_root(const FieldElem& c) {
    return c.frobenius_pow(c.ctx()->k() - 1);
}

// For f = g(x^p), recover g by taking p-th roots of the surviving coefficients.
UniPoly pth_root_poly(const UniPoly& f) {
    const std::uint32_t p = f.ctx()->p();
    std::vector<FieldElem> out;
    for (int i = 0; i <= f.deg(); ++i) {
        FieldElem ci = f.coeff(static_cast<std::size_t>(i));
        if (i % static_cast<int>(p) == 0) {
            out.push_back(pth_root(ci));
        } else if (!ci.is_zero()) {
            throw std::logic_error("pth_root_poly: polynomial is not a polynomial in x^p");
        }
    }
    return UniPoly(f.ctx(), std::move(out));
}

// Squarefree decomposition of a monic polynomial (characteristic p version,
// with the recursive p-th-power branch).
void squarefree_decomp(const UniPoly& f, int mult_scale,
                       std::vector<std::pair<UniPoly, int>>& out) {
    if (f.deg() <= 0) return;
    const int p = static_cast<int>(f.ctx()->p());
    UniPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomp(pth_root_poly(f), mult_scale * p, out);
        return;
    }
    UniPoly c = gcd(f, d);
    UniPoly w = f / c;
    int i = 1;
    while (w.deg() > 0) {
        UniPoly y = gcd(w, c);
        UniPoly z = w / y;
        if (z.deg() > 0) out.emplace_back(z, i * mult_scale);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.deg() > 0) squarefree_decomp(pth_root_poly(c), mult_scale * p, out);
}

// Distinct-degree splitting of a monic squarefree polynomial: returns
// (product of all irreducible factors of degree d, d) pieces.
std::vector<std::pair<UniPoly, int>> distinct_degree(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> out;
    const unsigned __int128 q = f.ctx()->order128();
    UniPoly xp = UniPoly::x(f.ctx());
    UniPoly fstar = f;
    UniPoly h = xp % fstar;
    int d = 0;
    while (fstar.deg() > 0 && fstar.deg() >= 2 * (d + 1)) {
        ++d;
        h = pow_mod(h, q, fstar);
        UniPoly g = gcd(h - xp, fstar);
        if (g.deg() > 0) {
            out.emplace_back(g, d);
            fstar = fstar / g;
            h = h % fstar;
        }
    }
    if (fstar.deg() > 0) out.emplace_back(fstar, fstar.deg());
    return out;
}

UniPoly random_nonconstant(Ctx ctx, int deg_bound, std::mt19937_64& rng) {
    // Uniform coefficients; retried by the caller if the norm test fails.
    const std::uint32_t p = ctx->p();
    const std::uint32_t k = ctx->k();
    for (;;) {
        std::vector<FieldElem> c;
        c.reserve(static_cast<std::size_t>(deg_bound));
        for (int i = 0; i < deg_bound; ++i) {
            Vec cc(k, 0);
            for (std::uint32_t j = 0; j < k; ++j)
                cc[j] = static_cast<std::uint32_t>(rng() % p);
            c.push_back(ctx->from_coeffs(std::move(cc)));
        }
        UniPoly r(ctx, std::move(c));
        if (r.deg() >= 1) return r;
    }
}

// Equal-degree splitting (Cantor-Zassenhaus with a norm chain, valid for
// odd q and any extension degree without forming q^d explicitly).
void equal_degree(const UniPoly& g, int d, std::mt19937_64& rng,
                  std::vector<UniPoly>& out) {
    if (g.deg() == d) {
        out.push_back(g);
        return;
    }
    const unsigned __int128 q = g.ctx()->order128();
    for (;;) {
        UniPoly r = random_nonconstant(g.ctx(), g.deg(), rng);
        UniPoly u = gcd(r, g);
        if (u.deg() > 0 && u.deg() < g.deg()) {
            equal_degree(u, d, rng, out);
            equal_degree(g / u, d, rng, out);
            return;
        }
        // acc = r^(1 + q + q^2 + ... + q^(d-1)) mod g, computed by iterating
        // the q-power map; then a single (q-1)/2 power gives the splitting
        // element, avoiding the oversized exponent (q^d - 1)/2.
        UniPoly acc = r % g;
        UniPoly cur = acc;
        for (int i = 1; i < d; ++i) {
            cur = pow_mod(cur, q, g);
            acc = (acc * cur) % g;
        }
        UniPoly m = pow_mod(acc, (q - 1) / 2, g);
        UniPoly h = gcd(m - UniPoly::from_ints(g.ctx(), {1}), g);
        if (h.deg() > 0 && h.deg() < g.deg()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

bool poly_canonical_less(const UniPoly& a, const UniPoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = 0; i <= a.deg(); ++i) {
        FieldElem ca = a.coeff(static_cast<std::size_t>(i));
        FieldElem cb = b.coeff(static_cast<std::size_t>(i));
        if (ca != cb) return ca < cb;
    }
    return false;
}

} // namespace

FactorDecomp factor_univar(const UniPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor_univar: zero polynomial");
    FactorDecomp res;
    res.lead = f.lead();
    if (f.deg() == 0) return res;
    UniPoly fm = f.make_monic();
    std::vector<std::pair<UniPoly, int>> sf;
    squarefree_decomp(fm, 1, sf);
    std::mt19937_64 rng(seed);
    for (const auto& [part, mult] : sf) {
        for (const auto& [prod, d] : distinct_degree(part)) {
            std::vector<UniPoly> irr;
            equal_degree(prod, d, rng, irr);
            for (UniPoly& h : irr) res.factors.emplace_back(std::move(h), mult);
        }
    }
    // Merge duplicates defensively, then sort canonically so the result is
    // independent of the randomized splitting order.
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_canonical_less(a.first, b.first); });
    std::vector<std::pair<UniPoly, int>> merged;
    for (auto& fm2 : res.factors) {
        if (!merged.empty() && merged.back().first == fm2.first)
            merged.back().second += fm2.second;
        else
            merged.push_back(std::move(fm2));
    }
    res.factors = std::move(merged);
    return res;
}

std::vector<FieldElem> roots_in_ext(const UniPoly& f, Ctx dst, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("roots_in_ext: zero polynomial");
    if (dst == nullptr) throw std::invalid_argument("roots_in_ext: null context");
    Ctx src = f.ctx();
    if (src->p() != dst->p() || dst->k() % src->k() != 0)
        throw std::invalid_argument("roots_in_ext: destination does not extend coefficient field");
    std::vector<FieldElem> lifted;
    lifted.reserve(static_cast<std::size_t>(f.deg() + 1));
    for (int i = 0; i <= f.deg(); ++i) lifted.push_back(embed(f.coeff(static_cast<std::size_t>(i)), dst));
    UniPoly ff(dst, std::move(lifted));
    if (ff.deg() <= 0) return {};
    ff = ff.make_monic();
    // Reduce to the product of the distinct linear factors over dst:
    // gcd(x^{|dst|} - x, ff), with the Frobenius power built iteratively.
    UniPoly xp = UniPoly::x(dst);
    UniPoly t = xp % ff;
    for (std::uint32_t i = 0; i < dst->k(); ++i) t = pow_mod(t, dst->p(), ff);
    UniPoly g = gcd(t - xp, ff);
    std::vector<FieldElem> roots;
    if (g.deg() > 0) {
        std::vector<UniPoly> lin;
        std::mt19937_64 rng(seed);
        equal_degree(g, 1, rng, lin);
        roots.reserve(lin.size());
        for (const UniPoly& l : lin) roots.push_back(-l.coeff(0));
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::vector<FieldElem> roots_by_scan(const UniPoly& f, Ctx dst) {
    if (f.is_zero()) throw std::invalid_argument("roots_by_scan: zero polynomial");
    std::uint64_t q = dst->order();
    if (q > 1000000) throw std::invalid_argument("roots_by_scan: field too large");
    std::vector<FieldElem> lifted;
    for (int i = 0; i <= f.deg(); ++i) lifted.push_back(embed(f.coeff(static_cast<std::size_t>(i)), dst));
    UniPoly ff(dst, std::move(lifted));
    std::vector<FieldElem> out;
    if (ff.deg() <= 0) return out;
    for (std::uint64_t n = 0; n < q; ++n) {
        FieldElem e = dst->element_at(n);
        if (ff.eval(e).is_zero()) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_irreducible(const UniPoly& f) {
    if (f.deg() < 1) return false;
    const int n = f.deg();
    UniPoly fm = f.make_monic();
    const unsigned __int128 q = f.ctx()->order128();
    UniPoly xp = UniPoly::x(f.ctx());
    // h_i = x^(q^i) mod f, built by iterating the q-power map.
    std::vector<UniPoly> h(static_cast<std::size_t>(n) + 1);
    h[0] = xp % fm;
    for (int i = 1; i <= n; ++i) h[static_cast<std::size_t>(i)] = pow_mod(h[static_cast<std::size_t>(i - 1)], q, fm);
    if (!(h[static_cast<std::size_t>(n)] == xp % fm)) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool lprime = true;
        for (int d2 = 2; d2 * d2 <= l; ++d2)
            if (l % d2 == 0) { lprime = false; break; }
        if (!lprime) continue;
        if (gcd(h[static_cast<std::size_t>(n / l)] - xp, fm).deg() != 0) return false;
    }
    return true;
}

} // namespace prymrank
