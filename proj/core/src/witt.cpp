#include "wr/witt.hpp"
#include "wr/fpoly.hpp"

#include <map>

namespace wr {

namespace {

// Galois ring Z/p^n[x]/(g), g the field modulus with integer coefficients.
struct GaloisRing {
    using E = boost::container::small_vector<uint64_t, 8>;

    uint64_t p, pn;
    unsigned e;
    std::vector<uint64_t> g;

    GaloisRing(FieldCtx k, unsigned n) : p(k.p()), pn(1), e(k.e())
    {
        for (unsigned i = 0; i < n; ++i) {
            if (pn > (uint64_t(1) << 62) / p) throw Error(ErrorCode::TooLarge, "p^n exceeds 2^62");
            pn *= p;
        }
        g.assign(k.modulus().begin(), k.modulus().end());
    }

    uint64_t mm(uint64_t a, uint64_t b) const { return uint64_t((unsigned __int128)a * b % pn); }

    E zero() const { return E(e, 0); }
    E from_int(uint64_t v) const
    {
        E r = zero();
        r[0] = v % pn;
        return r;
    }
    E add(const E& a, const E& b) const
    {
        E r(e);
        for (unsigned i = 0; i < e; ++i) {
            uint64_t s = a[i] + b[i];
            r[i] = s >= pn ? s - pn : s;
        }
        return r;
    }
    E sub(const E& a, const E& b) const
    {
        E r(e);
        for (unsigned i = 0; i < e; ++i) r[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + pn - b[i];
        return r;
    }
    E scale(const E& a, uint64_t c) const
    {
        E r(e);
        for (unsigned i = 0; i < e; ++i) r[i] = mm(a[i], c % pn);
        return r;
    }
    E mul(const E& a, const E& b) const
    {
        if (e == 1) return E{mm(a[0], b[0])};
        boost::container::small_vector<uint64_t, 16> t(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < e; ++j) {
                uint64_t s = t[i + j] + mm(a[i], b[j]);
                t[i + j] = s >= pn ? s - pn : s;
            }
        }
        for (unsigned i = 2 * e - 2; i >= e; --i) {
            uint64_t c = t[i];
            if (!c) continue;
            for (unsigned j = 0; j < e; ++j) {
                uint64_t s = t[i - e + j] + pn - mm(c, g[j]);
                t[i - e + j] = s % pn;
            }
        }
        E r(e);
        for (unsigned i = 0; i < e; ++i) r[i] = t[i];
        return r;
    }
    E pow(E a, uint64_t k) const
    {
        E r = from_int(1);
        while (k) {
            if (k & 1) r = mul(r, a);
            k >>= 1;
            if (k) a = mul(a, a);
        }
        return r;
    }
    bool is_zero(const E& a) const
    {
        for (auto v : a) if (v) return false;
        return true;
    }
    E lift(const FqElem& x) const
    {
        E r(e);
        for (unsigned i = 0; i < e; ++i) r[i] = x[i];
        return r;
    }
    // (T mod p^{k+1}) / p^k, reduced mod p; T must be divisible by p^k
    FqElem down(const E& T, unsigned k, FieldCtx ctx) const
    {
        uint64_t pk = 1;
        for (unsigned i = 0; i < k; ++i) pk *= p;
        uint64_t pk1 = pk * p;
        Coeffs c(e);
        for (unsigned i = 0; i < e; ++i) {
            uint64_t v = T[i] % pk1;
            if (v % pk) throw std::logic_error("ghost component not divisible by p^k");
            c[i] = uint32_t(v / pk);
        }
        return FqElem(ctx, c);
    }
};

struct ElemPolicy {
    using C = FqElem;
    using L = GaloisRing::E;
    const GaloisRing& gr;
    FieldCtx ctx;

    L lift(const C& x) const { return gr.lift(x); }
    C down(const L& t, unsigned k) const { return gr.down(t, k, ctx); }
    L add(const L& a, const L& b) const { return gr.add(a, b); }
    L sub(const L& a, const L& b) const { return gr.sub(a, b); }
    L mul(const L& a, const L& b) const { return gr.mul(a, b); }
    L powp(const L& a) const { return gr.pow(a, gr.p); }
    L scale(const L& a, uint64_t c) const { return gr.scale(a, c); }
    L zero() const { return gr.zero(); }
};

// sparse polynomials over the Galois ring
using GPoly = std::vector<std::pair<uint64_t, GaloisRing::E>>;

struct PolyPolicy {
    using C = FqPoly;
    using L = GPoly;
    const GaloisRing& gr;
    FieldCtx ctx;

    L lift(const C& f) const
    {
        L r;
        for (auto& [k, c] : f.terms()) r.emplace_back(k, gr.lift(c));
        return r;
    }
    C down(const L& t, unsigned k) const
    {
        std::vector<FqPoly::Term> out;
        for (auto& [x, c] : t) {
            FqElem v = gr.down(c, k, ctx);
            if (!v.is_zero()) out.emplace_back(x, v);
        }
        return FqPoly(ctx, std::move(out));
    }
    L clean(L r) const
    {
        L out;
        for (auto& t : r)
            if (!gr.is_zero(t.second)) out.push_back(std::move(t));
        return out;
    }
    L add(const L& a, const L& b) const
    {
        L r;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
                r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first)
                r.push_back(b[j++]);
            else {
                r.emplace_back(a[i].first, gr.add(a[i].second, b[j].second));
                ++i;
                ++j;
            }
        }
        return clean(std::move(r));
    }
    L neg(const L& a) const
    {
        L r = a;
        for (auto& t : r) t.second = gr.sub(gr.zero(), t.second);
        return r;
    }
    L sub(const L& a, const L& b) const { return add(a, neg(b)); }
    L mul(const L& a, const L& b) const
    {
        std::map<uint64_t, GaloisRing::E> acc;
        for (auto& x : a)
            for (auto& y : b) {
                auto pr = gr.mul(x.second, y.second);
                auto [it, fresh] = acc.try_emplace(x.first + y.first, pr);
                if (!fresh) it->second = gr.add(it->second, pr);
            }
        L r(acc.begin(), acc.end());
        return clean(std::move(r));
    }
    L powp(const L& a) const
    {
        L r{{0, gr.from_int(1)}}, b = a;
        uint64_t k = gr.p;
        while (k) {
            if (k & 1) r = mul(r, b);
            k >>= 1;
            if (k) b = mul(b, b);
        }
        return r;
    }
    L scale(const L& a, uint64_t c) const
    {
        L r = a;
        for (auto& t : r) t.second = gr.scale(t.second, c);
        return clean(std::move(r));
    }
    L zero() const { return {}; }
};

template <class Policy>
std::vector<typename Policy::C> ghost_binop(const Policy& P, uint64_t p,
                                            const std::vector<typename Policy::C>& x,
                                            const std::vector<typename Policy::C>& y, WittOp op)
{
    using L = typename Policy::L;
    const unsigned n = unsigned(x.size());
    // xp[i] holds lift(x_i)^{p^{k-i}} for the current k
    std::vector<L> xp, yp, rp;
    std::vector<typename Policy::C> r;
    uint64_t pk = 1;
    for (unsigned k = 0; k < n; ++k, pk *= p) {
        for (auto& v : xp) v = P.powp(v);
        for (auto& v : yp) v = P.powp(v);
        for (auto& v : rp) v = P.powp(v);
        xp.push_back(P.lift(x[k]));
        yp.push_back(P.lift(y[k]));
        L wx = P.zero(), wy = P.zero(), wr = P.zero();
        uint64_t pi = 1;
        for (unsigned i = 0; i <= k; ++i, pi *= p) {
            wx = P.add(wx, P.scale(xp[i], pi));
            wy = P.add(wy, P.scale(yp[i], pi));
            if (i < k) wr = P.add(wr, P.scale(rp[i], pi));
        }
        L w;
        switch (op) {
        case WittOp::add: w = P.add(wx, wy); break;
        case WittOp::sub: w = P.sub(wx, wy); break;
        case WittOp::mul: w = P.mul(wx, wy); break;
        }
        r.push_back(P.down(P.sub(w, wr), k));
        rp.push_back(P.lift(r.back()));
    }
    return r;
}

void check_pair(FieldCtx a, FieldCtx b, size_t na, size_t nb)
{
    if (a != b) throw Error(ErrorCode::ContextMismatch, "Witt vectors over different fields");
    if (na != nb) throw Error(ErrorCode::LengthMismatch, "Witt vectors of different lengths");
}

} // namespace

WittVec::WittVec(FieldCtx k, unsigned n) : ctx(k), coords(n, FqElem(k)) {}

WittVec::WittVec(FieldCtx k, std::vector<FqElem> c) : ctx(k), coords(std::move(c))
{
    for (auto& x : coords)
        if (x.ctx() != ctx) throw Error(ErrorCode::ContextMismatch, "Witt coordinate");
}

WittVec WittVec::one(FieldCtx k, unsigned n)
{
    WittVec r(k, n);
    r.coords[0] = FqElem::from_int(k, 1);
    return r;
}

WittVec WittVec::teichmuller(const FqElem& a, unsigned n)
{
    WittVec r(a.ctx(), n);
    r.coords[0] = a;
    return r;
}

WittVec WittVec::from_int(FieldCtx k, unsigned n, int64_t v)
{
    WittVec acc(k, n), base = one(k, n);
    bool neg = v < 0;
    uint64_t m = neg ? uint64_t(-v) : uint64_t(v);
    while (m) {
        if (m & 1) acc = acc + base;
        m >>= 1;
        if (m) base = base + base;
    }
    return neg ? witt_neg(acc) : acc;
}

bool WittVec::is_zero() const
{
    for (auto& c : coords) if (!c.is_zero()) return false;
    return true;
}

std::string WittVec::str() const
{
    std::string s = "(";
    for (size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ", ";
        s += coords[i].str();
    }
    return s + ")";
}

WittVec witt_add_mul(const WittVec& u, const WittVec& v, WittOp which)
{
    check_pair(u.ctx, v.ctx, u.n(), v.n());
    if (u.n() == 0) return u;
    GaloisRing gr(u.ctx, u.n());
    ElemPolicy P{gr, u.ctx};
    return WittVec(u.ctx, ghost_binop(P, u.ctx.p(), u.coords, v.coords, which));
}

WittVec witt_neg(const WittVec& u)
{
    return WittVec(u.ctx, u.n()) - u;
}

WittVec witt_frobenius(const WittVec& u, long k)
{
    WittVec r = u;
    for (auto& c : r.coords) c = c.frobenius(k);
    return r;
}

WittVec witt_verschiebung(const WittVec& u)
{
    WittVec r(u.ctx, u.n());
    for (unsigned i = 1; i < u.n(); ++i) r.coords[i] = u.coords[i - 1];
    return r;
}

WittVec witt_truncate(const WittVec& u, unsigned n)
{
    WittVec r = u;
    r.coords.resize(n, FqElem(u.ctx));
    return r;
}

WittVec witt_wp(const WittVec& u)
{
    return witt_frobenius(u) - u;
}

WittVec witt_trace(const WittVec& u)
{
    WittVec acc(u.ctx, u.n()), cur = u;
    for (unsigned i = 0; i < u.ctx.e(); ++i) {
        acc = acc + cur;
        cur = witt_frobenius(cur);
    }
    return acc;
}

std::vector<uint64_t> witt_ghost(const WittVec& u, unsigned k)
{
    GaloisRing gr(u.ctx, u.n());
    GaloisRing::E w = gr.zero();
    uint64_t pi = 1;
    for (unsigned i = 0; i <= k; ++i, pi *= gr.p) {
        uint64_t ex = 1;
        for (unsigned j = i; j < k; ++j) ex *= gr.p;
        w = gr.add(w, gr.scale(gr.pow(gr.lift(u.coords[i]), ex), pi));
    }
    uint64_t mod = pi;   // p^{k+1}
    std::vector<uint64_t> out(w.begin(), w.end());
    for (auto& v : out) v %= mod;
    return out;
}

FqElem witt_psi(const FqElem& a, const FqElem& b)
{
    FieldCtx K = a.ctx();
    const uint32_t p = K.p();
    FqElem r(K);
    for (uint32_t i = 1; i < p; ++i) {
        uint64_t coef = fp::inv_mod(i, p);
        if (i % 2) coef = (p - coef) % p;
        r += (a.pow(uint64_t(i)) * b.pow(uint64_t(p - i))).scale(uint32_t(coef));
    }
    return r;
}

uint32_t witt_c(uint64_t i, uint32_t p)
{
    // (1 + j^p - (1+j)^p)/p computed exactly with big integers
    BigInt c = 0;
    for (uint64_t j = 0; j < i; ++j) {
        BigInt jj = j % (uint64_t(p) * p);
        BigInt t = 1 + ipow(jj, p) - ipow(jj + 1, p);
        c += t / p;
    }
    BigInt r = c % p;
    if (r < 0) r += p;
    return uint32_t(r);
}

// ---------------------------------------------------------------- WittPoly

WittPoly::WittPoly(FieldCtx k, unsigned n) : ctx(k), coords(n, FqPoly(k)) {}

WittPoly::WittPoly(FieldCtx k, std::vector<FqPoly> c) : ctx(k), coords(std::move(c))
{
    for (auto& x : coords)
        if (x.ctx() != ctx) throw Error(ErrorCode::ContextMismatch, "Witt coordinate");
}

WittPoly WittPoly::constant(const WittVec& v)
{
    WittPoly r(v.ctx, v.n());
    for (unsigned i = 0; i < v.n(); ++i) r.coords[i] = FqPoly::constant(v.coords[i]);
    return r;
}

bool WittPoly::is_zero() const
{
    for (auto& c : coords) if (!c.is_zero()) return false;
    return true;
}

WittVec WittPoly::eval(const FqElem& y) const
{
    WittVec r(y.ctx(), n());
    for (unsigned i = 0; i < n(); ++i) r.coords[i] = coords[i].eval(y);
    return r;
}

WittPoly witt_poly_op(const WittPoly& u, const WittPoly& v, WittOp which)
{
    check_pair(u.ctx, v.ctx, u.n(), v.n());
    if (u.n() == 0) return u;
    GaloisRing gr(u.ctx, u.n());
    PolyPolicy P{gr, u.ctx};
    return WittPoly(u.ctx, ghost_binop(P, u.ctx.p(), u.coords, v.coords, which));
}

WittPoly witt_poly_frobenius(const WittPoly& u)
{
    WittPoly r = u;
    for (auto& c : r.coords) c = c.frobenius();
    return r;
}

} // namespace wr
