#include "wr/fpoly.hpp"

#include <stdexcept>

namespace wr::fp {

uint32_t inv_mod(uint32_t a, uint32_t p)
{
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        int64_t qq = r / nr;
        int64_t tmp = t - qq * nt; t = nt; nt = tmp;
        tmp = r - qq * nr; r = nr; nr = tmp;
    }
    if (r != 1)
        throw std::domain_error("inv_mod: not invertible");
    if (t < 0) t += p;
    return uint32_t(t);
}

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

int deg(const Poly& a)
{
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Poly add(const Poly& a, const Poly& b, uint32_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = uint32_t((uint64_t(r[i]) + b[i]) % p);
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b, uint32_t p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = uint32_t((uint64_t(r[i]) + p - b[i]) % p);
    trim(r);
    return r;
}

Poly mul(const Poly& a, const Poly& b, uint32_t p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint32_t((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    trim(r);
    return r;
}

void divmod(const Poly& a, const Poly& b, uint32_t p, Poly& q, Poly& r)
{
    int db = deg(b);
    if (db < 0) throw std::domain_error("divmod: division by zero");
    r = a;
    trim(r);
    int da = deg(r);
    q.assign(da >= db ? size_t(da - db + 1) : 0, 0);
    uint32_t il = inv_mod(b[db], p);
    for (int i = da; i >= db; --i) {
        uint32_t c = uint32_t(uint64_t(r[i]) * il % p);
        if (!c) continue;
        q[i - db] = c;
        for (int j = 0; j <= db; ++j)
            r[i - db + j] = uint32_t((r[i - db + j] + uint64_t(p - c) * b[j]) % p);
    }
    trim(q);
    trim(r);
}

Poly mod(const Poly& a, const Poly& b, uint32_t p)
{
    Poly q, r;
    divmod(a, b, p, q, r);
    return r;
}

Poly gcd(Poly a, Poly b, uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint32_t il = inv_mod(a.back(), p);
        for (auto& c : a) c = uint32_t(uint64_t(c) * il % p);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p)
{
    return mod(mul(a, b, p), m, p);
}

Poly powmod(Poly a, uint64_t k, const Poly& m, uint32_t p)
{
    Poly r{1};
    r = mod(r, m, p);
    a = mod(a, m, p);
    while (k) {
        if (k & 1) r = mulmod(r, a, m, p);
        k >>= 1;
        if (k) a = mulmod(a, a, m, p);
    }
    return r;
}

Poly invmod(const Poly& a, const Poly& m, uint32_t p)
{
    Poly r0 = m, r1 = mod(a, m, p);
    Poly s0, s1{1};
    while (!r1.empty()) {
        Poly qq, rr;
        divmod(r0, r1, p, qq, rr);
        Poly s2 = sub(s0, mul(qq, s1, p), p);
        r0 = std::move(r1); r1 = std::move(rr);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (deg(r0) != 0) throw std::domain_error("invmod: not invertible");
    uint32_t il = inv_mod(r0[0], p);
    for (auto& c : s0) c = uint32_t(uint64_t(c) * il % p);
    return mod(s0, m, p);
}

bool is_irreducible(const Poly& f, uint32_t p)
{
    int n = deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    Poly x{0, 1};
    Poly xp = x;
    for (int i = 1; i <= n / 2; ++i) {
        xp = powmod(xp, p, f, p);
        Poly g = gcd(f, sub(xp, x, p), p);
        if (deg(g) != 0) return false;
    }
    return true;
}

} // namespace wr::fp
