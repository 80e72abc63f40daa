#include "wr/rayclass.hpp"
#include "wr/fpoly.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <future>
#include <numeric>
#include <thread>

namespace wr {

unsigned AbelianInvariants::order_exp() const
{
    return std::accumulate(exps.begin(), exps.end(), 0u);
}

std::string AbelianInvariants::str() const
{
    std::string s = "[";
    for (size_t i = 0; i < exps.size(); ++i) {
        if (i) s += ", ";
        s += ipow(BigInt(p), exps[i]).str();
    }
    return s + "]";
}

AbelianInvariants invariants_from_power_orders(uint32_t p, const std::vector<unsigned>& b)
{
    // b_k - b_{k+1} factors have order >= p^{k+1}
    AbelianInvariants inv{p, {}};
    auto at = [&](size_t k) { return k < b.size() ? b[k] : 0u; };
    for (size_t k = b.size(); k-- > 0;) {
        unsigned ge = at(k) - at(k + 1);
        unsigned ge_next = at(k + 1) - at(k + 2);
        for (unsigned i = ge_next; i < ge; ++i) inv.exps.push_back(unsigned(k + 1));
    }
    return inv;
}

uint64_t default_resource_cap()
{
    if (const char* s = std::getenv("WR_RESOURCE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == 0 && v > 0) return v;
    }
    return 2048;
}

uint64_t trivial_range_bound(uint32_t p, unsigned e)
{
    return uint64_t(ipow(BigInt(p), (e + 1) / 2)) + 1;
}

uint64_t m2_closed_form(uint32_t p, unsigned e)
{
    return uint64_t(ipow(BigInt(p), (e + 1) / 2 + 1)) + p + 1;
}

namespace {

// F_q^* as powers of a primitive element; ZERO stands for 0.
class Zech {
public:
    explicit Zech(FieldCtx K) : p_(K.p()), e_(K.e()), q_(K.q())
    {
        if (q_ == 0 || q_ > (uint64_t(1) << 24)) throw Error(ErrorCode::TooLarge, "field too large for log tables");
        qm1_ = uint32_t(q_ - 1);
        ZERO = qm1_;
        FqElem g = primitive(K);
        antilog_.resize(qm1_);
        std::vector<uint32_t> logof(q_, ZERO);
        FqElem cur = FqElem::from_int(K, 1);
        for (uint32_t k = 0; k < qm1_; ++k) {
            antilog_[k] = uint32_t(cur.index());
            logof[antilog_[k]] = k;
            cur *= g;
        }
        zech_.resize(qm1_);
        for (uint32_t k = 0; k < qm1_; ++k) {
            uint32_t idx = antilog_[k];
            uint32_t d0 = idx % p_;
            uint32_t plus1 = d0 == p_ - 1 ? idx - (p_ - 1) : idx + 1;
            zech_[k] = plus1 == 0 ? ZERO : logof[plus1];
        }
        basis_.resize(e_);
        uint32_t pw = 1;
        for (unsigned i = 0; i < e_; ++i, pw *= p_) basis_[i] = logof[pw];
        neg_one_ = p_ == 2 ? 0 : qm1_ / 2;
        // log of each F_p multiple, for scaling by a in F_p
        fp_log_.assign(p_, ZERO);
        for (uint32_t a = 1; a < p_; ++a) fp_log_[a] = logof[a];
    }

    uint32_t ZERO = 0;

    uint32_t mul(uint32_t a, uint32_t b) const
    {
        if (a == ZERO || b == ZERO) return ZERO;
        uint32_t s = a + b;
        return s >= qm1_ ? s - qm1_ : s;
    }
    uint32_t add(uint32_t a, uint32_t b) const
    {
        if (a == ZERO) return b;
        if (b == ZERO) return a;
        uint32_t d = b >= a ? b - a : b + qm1_ - a;
        uint32_t z = zech_[d];
        if (z == ZERO) return ZERO;
        uint32_t s = a + z;
        return s >= qm1_ ? s - qm1_ : s;
    }
    uint32_t neg(uint32_t a) const { return mul(a, neg_one_); }
    uint32_t frob(uint32_t a) const
    {
        if (a == ZERO) return ZERO;
        return uint32_t(uint64_t(a) * p_ % qm1_);
    }
    uint32_t scale(uint32_t a, uint32_t k) const { return mul(a, fp_log_[k % p_]); }
    // coordinates over F_p in the power basis
    void digits(uint32_t a, std::vector<uint32_t>& out) const
    {
        out.assign(e_, 0);
        if (a == ZERO) return;
        uint32_t idx = antilog_[a];
        for (unsigned i = 0; i < e_; ++i, idx /= p_) out[i] = idx % p_;
    }
    uint32_t basis(unsigned i) const { return basis_[i]; }
    uint32_t one() const { return 0; }
    uint32_t p() const { return p_; }
    unsigned e() const { return e_; }
    uint32_t qm1() const { return qm1_; }

private:
    static FqElem primitive(FieldCtx K)
    {
        const uint64_t n = K.q() - 1;
        std::vector<uint64_t> primes;
        uint64_t t = n;
        for (uint64_t d = 2; d * d <= t; ++d)
            if (t % d == 0) {
                primes.push_back(d);
                while (t % d == 0) t /= d;
            }
        if (t > 1) primes.push_back(t);
        for (uint64_t i = 1; i < K.q(); ++i) {
            FqElem g = FqElem::from_index(K, i);
            bool ok = true;
            for (auto r : primes)
                if (g.pow(n / r).is_one()) {
                    ok = false;
                    break;
                }
            if (ok) return g;
        }
        throw std::logic_error("no primitive element");
    }

    uint32_t p_;
    unsigned e_;
    uint64_t q_;
    uint32_t qm1_;
    uint32_t neg_one_;
    std::vector<uint32_t> antilog_, zech_, basis_, fp_log_;
};

// 1 + sum_{i>=1} c_i Z^i mod Z^m, stored as logs c[0..m-1] with c[0] unused
using Series = std::vector<uint32_t>;

class Units {
public:
    Units(const Zech& F, unsigned m) : F_(F), m_(m) {}

    unsigned m() const { return m_; }
    Series one() const { return Series(m_, F_.ZERO); }

    unsigned valuation(const Series& x) const
    {
        for (unsigned i = 1; i < m_; ++i)
            if (x[i] != F_.ZERO) return i;
        return m_;
    }

    Series mul(const Series& x, const Series& y) const
    {
        const unsigned vx = valuation(x), vy = valuation(y);
        Series z = x;
        for (unsigned j = vy; j < m_; ++j) z[j] = F_.add(z[j], y[j]);
        for (unsigned i = vx; i + vy < m_; ++i) {
            const uint32_t xi = x[i];
            if (xi == F_.ZERO) continue;
            for (unsigned j = vy; i + j < m_; ++j) {
                if (y[j] == F_.ZERO) continue;
                z[i + j] = F_.add(z[i + j], F_.mul(xi, y[j]));
            }
        }
        return z;
    }

    Series inv(const Series& b) const
    {
        // (1 + w) v = 1: v_k = -sum_{i=1}^{k} b_i v_{k-i}
        Series v = one();
        const unsigned vb = valuation(b);
        for (unsigned k = vb; k < m_; ++k) {
            uint32_t acc = b[k];
            for (unsigned i = vb; i < k; ++i)
                if (b[i] != F_.ZERO && v[k - i] != F_.ZERO) acc = F_.add(acc, F_.mul(b[i], v[k - i]));
            v[k] = F_.neg(acc);
        }
        return v;
    }

    // x^p: c Z^i -> c^p Z^{ip}
    Series pth_power(const Series& x) const
    {
        Series y = one();
        const unsigned p = F_.p();
        for (unsigned i = 1; uint64_t(i) * p < m_; ++i) y[i * p] = F_.frob(x[i]);
        return y;
    }

    Series truncated(const Series& x, unsigned m) const
    {
        return Series(x.begin(), x.begin() + m);
    }

private:
    const Zech& F_;
    unsigned m_;
};

// Polycyclic echelon of a subgroup of (1 + Z F_q[Z]) / (1 + Z^m): per level v
// the leading coefficients of the stored elements are F_p-independent, and
// the set is closed under p-th powers, so |H| = p^{number of elements}.
class Echelon {
public:
    Echelon(const Zech& F, unsigned m) : F_(F), U_(F, m), levels_(m) {}

    struct Row {
        std::vector<uint32_t> vec;     // reduced leading coefficient, pivot entry 1
        unsigned pivot;
        std::vector<uint32_t> combo;   // vec = sum combo[i] * lead(elem_i)
    };
    struct Level {
        std::vector<Series> elems;
        std::vector<std::vector<Series>> negpow;   // negpow[i][a-1] = elems[i]^{-a}
        std::vector<Row> rows;
    };

    unsigned m() const { return U_.m(); }
    const Units& units() const { return U_; }

    unsigned dim_below(unsigned m) const
    {
        unsigned d = 0;
        for (unsigned v = 1; v < std::min<unsigned>(m, U_.m()); ++v) d += unsigned(levels_[v].elems.size());
        return d;
    }
    unsigned level_dim(unsigned v) const { return unsigned(levels_[v].elems.size()); }

    void insert(const Series& x0)
    {
        std::deque<Series> work{x0};
        while (!work.empty()) {
            Series x = std::move(work.front());
            work.pop_front();
            unsigned v = sift(x);
            if (v >= U_.m()) continue;
            add_element(v, x);
            work.push_back(U_.pth_power(x));
        }
    }

    // image modulo Z^m2, m2 <= m
    Echelon truncated(unsigned m2) const
    {
        Echelon t(F_, m2);
        for (unsigned v = 1; v < m2; ++v) {
            const Level& L = levels_[v];
            Level& T = t.levels_[v];
            T.rows = L.rows;
            for (auto& x : L.elems) T.elems.push_back(U_.truncated(x, m2));
            for (auto& row : L.negpow) {
                T.negpow.emplace_back();
                for (auto& x : row) T.negpow.back().push_back(U_.truncated(x, m2));
            }
        }
        return t;
    }

private:
    // reduces x in place; returns its final valuation (m when x = 1)
    unsigned sift(Series& x) const
    {
        std::vector<uint32_t> c;
        for (;;) {
            unsigned v = U_.valuation(x);
            if (v >= U_.m()) return v;
            const Level& L = levels_[v];
            if (L.elems.empty()) return v;
            F_.digits(x[v], c);
            std::vector<uint32_t> a;
            if (!solve(L, c, a)) return v;
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i]) x = U_.mul(x, L.negpow[i][a[i] - 1]);
        }
    }

    // a with c = sum a_i lead(elem_i), if c is in the span
    bool solve(const Level& L, std::vector<uint32_t> c, std::vector<uint32_t>& a) const
    {
        const uint32_t p = F_.p();
        a.assign(L.elems.size(), 0);
        for (auto& r : L.rows) {
            uint32_t f = c[r.pivot];
            if (!f) continue;
            for (size_t j = 0; j < c.size(); ++j) c[j] = (c[j] + (p - f) * r.vec[j]) % p;
            for (size_t i = 0; i < r.combo.size(); ++i) a[i] = (a[i] + f * r.combo[i]) % p;
        }
        for (auto v : c)
            if (v) return false;
        return true;
    }

    void add_element(unsigned v, const Series& x)
    {
        const uint32_t p = F_.p();
        Level& L = levels_[v];
        std::vector<uint32_t> c;
        F_.digits(x[v], c);
        const size_t j = L.elems.size();
        std::vector<uint32_t> combo(j + 1, 0);
        combo[j] = 1;
        for (auto& r : L.rows) {
            uint32_t f = c[r.pivot];
            if (!f) continue;
            for (size_t t = 0; t < c.size(); ++t) c[t] = (c[t] + (p - f) * r.vec[t]) % p;
            for (size_t i = 0; i < r.combo.size(); ++i) combo[i] = (combo[i] + (p - f) * r.combo[i]) % p;
        }
        unsigned piv = 0;
        while (c[piv] == 0) ++piv;
        uint32_t s = fp::inv_mod(c[piv], p);
        for (auto& t : c) t = t * s % p;
        for (auto& t : combo) t = t * s % p;
        for (auto& r : L.rows) {
            r.combo.push_back(0);
            // keep rows reduced at the new pivot
            uint32_t f = r.vec[piv];
            if (!f) continue;
            for (size_t t = 0; t < c.size(); ++t) r.vec[t] = (r.vec[t] + (p - f) * c[t]) % p;
            for (size_t i = 0; i < combo.size(); ++i) r.combo[i] = (r.combo[i] + (p - f) * combo[i]) % p;
        }
        L.rows.push_back({c, piv, combo});
        L.elems.push_back(x);
        std::vector<Series> np;
        Series ix = U_.inv(x), cur = ix;
        for (uint32_t a = 1; a < p; ++a) {
            np.push_back(cur);
            cur = U_.mul(cur, ix);
        }
        L.negpow.push_back(std::move(np));
    }

    const Zech& F_;
    Units U_;
    std::vector<Level> levels_;
};

void check_params(uint32_t p, unsigned e, uint64_t m, const GsOptions& opt)
{
    if (!is_prime_u32(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
    if (e < 1 || e > 16) throw Error(ErrorCode::DegreeOutOfRange, "e = " + std::to_string(e));
    uint64_t cap = opt.resource_cap ? opt.resource_cap : default_resource_cap();
    if (m * e > cap)
        throw Error(ErrorCode::ResourceLimit,
                    "m*e = " + std::to_string(m * e) + " exceeds the cap " + std::to_string(cap) +
                        " (set WR_RESOURCE_CAP to raise it)");
}

struct Engine {
    FieldCtx K;
    Zech F;
    Echelon H;

    Engine(uint32_t p, unsigned e, unsigned m) : K(make_field(p, e)), F(K), H(F, std::max(m, 2u))
    {
        const Units& U = H.units();
        if (H.m() < 2) return;
        // 1 - yZ for every nonzero y
        for (uint32_t lg = 0; lg < F.qm1(); ++lg) {
            Series g = U.one();
            g[1] = F.neg(lg);
            H.insert(g);
        }
    }

    unsigned order_exp(unsigned m) const
    {
        if (m <= 1) return 0;
        return (m - 1) * F.e() - H.dim_below(m);
    }

    // log_p |Q^{p^k}| for Q = U/H modulo Z^m
    unsigned power_order(unsigned m, unsigned k) const
    {
        if (m <= 1) return 0;
        uint64_t pk = uint64_t(ipow(BigInt(F.p()), k));
        if (pk >= m) return 0;
        Echelon E = H.truncated(m);
        const unsigned before = E.dim_below(m);
        Units U(F, m);
        for (uint64_t j = 1; j * pk < m; ++j)
            for (unsigned i = 0; i < F.e(); ++i) {
                Series g = U.one();
                g[j * pk] = F.basis(i);
                E.insert(g);
            }
        return E.dim_below(m) - before;
    }

    AbelianInvariants invariants(unsigned m, unsigned jobs) const
    {
        std::vector<unsigned> b{order_exp(m)};
        unsigned kmax = 0;
        while (uint64_t(ipow(BigInt(F.p()), kmax + 1)) < m) ++kmax;
        std::vector<unsigned> rest(kmax, 0);
        if (jobs > 1 && kmax > 1) {
            std::vector<std::future<unsigned>> fut;
            for (unsigned k = 1; k <= kmax; ++k)
                fut.push_back(std::async(std::launch::async, [this, m, k] { return power_order(m, k); }));
            for (unsigned k = 1; k <= kmax; ++k) rest[k - 1] = fut[k - 1].get();
        } else {
            for (unsigned k = 1; k <= kmax; ++k) {
                rest[k - 1] = power_order(m, k);
                if (rest[k - 1] == 0) break;
            }
        }
        b.insert(b.end(), rest.begin(), rest.end());
        while (b.size() > 1 && b.back() == 0) b.pop_back();
        return invariants_from_power_orders(F.p(), b);
    }
};

GsRow make_row(const Engine& E, uint64_t m, unsigned order_exp, AbelianInvariants inv)
{
    GsRow r;
    r.m = m;
    r.order_exp = order_exp;
    r.inv = std::move(inv);
    r.N_m = 1 + E.K.q_big() * ipow(BigInt(E.F.p()), order_exp);
    return r;
}

} // namespace

GsRow gs_invariants(uint32_t p, unsigned e, uint64_t m, const GsOptions& opt)
{
    check_params(p, e, m, opt);
    Engine E(p, e, unsigned(m));
    AbelianInvariants inv{p, {}};
    unsigned oe = E.order_exp(unsigned(m));
    if (opt.invariants && oe > 0) inv = E.invariants(unsigned(m), opt.jobs);
    return make_row(E, m, oe, inv);
}

std::vector<GsRow> gs_table(uint32_t p, unsigned e, uint64_t m_max, const GsOptions& opt)
{
    check_params(p, e, m_max, opt);
    Engine E(p, e, unsigned(m_max));
    std::vector<GsRow> rows;
    AbelianInvariants cur{p, {}};
    unsigned prev = 0;
    for (uint64_t m = 0; m <= m_max; ++m) {
        unsigned oe = E.order_exp(unsigned(m));
        // G_S(m) -> G_S(m-1) is onto, so equal orders mean isomorphic groups
        if (opt.invariants && oe != prev) cur = E.invariants(unsigned(m), opt.jobs);
        if (!opt.invariants) cur = AbelianInvariants{p, {}};
        rows.push_back(make_row(E, m, oe, cur));
        prev = oe;
    }
    return rows;
}

uint64_t find_m2(uint32_t p, unsigned e, const GsOptions& opt)
{
    uint64_t cap = opt.resource_cap ? opt.resource_cap : default_resource_cap();
    for (uint64_t M = 8;; M *= 2) {
        uint64_t bound = std::min<uint64_t>(M, cap / e);
        check_params(p, e, bound, opt);
        Engine E(p, e, unsigned(bound));
        unsigned prev = 0;
        for (uint64_t m = 2; m <= bound; ++m) {
            unsigned oe = E.order_exp(unsigned(m));
            if (oe != prev && E.power_order(unsigned(m), 1) > 0) return m;
            prev = oe;
        }
        if (bound < M)
            throw Error(ErrorCode::ResourceLimit, "no m <= " + std::to_string(bound) + " with exponent > p");
    }
}

// ---------------------------------------------------------------- brute force

AbelianInvariants brute_subgroup_oracle(uint32_t p, unsigned e, uint64_t m)
{
    FieldCtx K = make_field(p, e);
    const uint64_t q = K.q();
    if (m <= 1) return {p, {}};
    uint64_t total = 1;
    for (uint64_t i = 1; i < m; ++i) {
        if (total > (uint64_t(1) << 20) / q) throw Error(ErrorCode::TooLarge, "q^{m-1} > 2^20");
        total *= q;
    }
    if (q > 4096) throw Error(ErrorCode::TooLarge, "field too large for addition tables");
    // addition and multiplication tables on element indices
    std::vector<uint16_t> addt(q * q), mult(q * q);
    std::vector<FqElem> el;
    for (uint64_t i = 0; i < q; ++i) el.push_back(FqElem::from_index(K, i));
    for (uint64_t i = 0; i < q; ++i)
        for (uint64_t j = 0; j < q; ++j) {
            addt[i * q + j] = uint16_t((el[i] + el[j]).index());
            mult[i * q + j] = uint16_t((el[i] * el[j]).index());
        }
    const unsigned L = unsigned(m - 1);
    struct Gen {
        unsigned t;
        uint16_t c;
    };
    auto closure = [&](const std::vector<Gen>& gens) {
        std::vector<uint8_t> seen(total, 0);
        std::vector<uint32_t> queue{0};
        seen[0] = 1;
        std::vector<uint16_t> x(L + 1), z(L + 1);
        for (size_t h = 0; h < queue.size(); ++h) {
            uint64_t code = queue[h];
            x[0] = 1;
            for (unsigned i = 1; i <= L; ++i, code /= q) x[i] = uint16_t(code % q);
            for (auto& g : gens) {
                // (x)(1 + c Z^t)
                for (unsigned k = 0; k <= L; ++k)
                    z[k] = k >= g.t ? addt[x[k] * q + mult[g.c * q + x[k - g.t]]] : x[k];
                uint64_t out = 0;
                for (unsigned k = L; k >= 1; --k) out = out * q + z[k];
                if (!seen[out]) {
                    seen[out] = 1;
                    queue.push_back(uint32_t(out));
                }
            }
        }
        return uint64_t(queue.size());
    };
    auto logp = [&](uint64_t v) {
        unsigned k = 0;
        while (v > 1) {
            if (v % p) throw std::logic_error("subgroup order is not a power of p");
            v /= p;
            ++k;
        }
        return k;
    };
    std::vector<Gen> hgens;
    for (uint64_t y = 1; y < q; ++y) hgens.push_back({1, uint16_t((-el[y]).index())});
    const uint64_t h = closure(hgens);
    std::vector<unsigned> b{logp(total / h)};
    for (uint64_t pk = p; pk < m; pk *= p) {
        auto gens = hgens;
        for (uint64_t j = 1; j * pk < m; ++j)
            for (unsigned i = 0; i < e; ++i) gens.push_back({unsigned(j * pk), uint16_t(ipow(BigInt(p), i))});
        b.push_back(logp(closure(gens) / h));
    }
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return invariants_from_power_orders(p, b);
}

} // namespace wr
