#include "wr/field.hpp"
#include "wr/fpoly.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace wr {

const char* error_code_name(ErrorCode c)
{
    switch (c) {
    case ErrorCode::NonPrime: return "NonPrime";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::NotASubfieldDegree: return "NotASubfieldDegree";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::InseparableOperator: return "InseparableOperator";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotInXSXForm: return "NotInXSXForm";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroCover: return "ZeroCover";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::NonIntegralLowerBreaks: return "NonIntegralLowerBreaks";
    case ErrorCode::OddSum: return "OddSum";
    case ErrorCode::InconsistentLadder: return "InconsistentLadder";
    case ErrorCode::NotASubgroupProfile: return "NotASubgroupProfile";
    case ErrorCode::InvalidFiltration: return "InvalidFiltration";
    case ErrorCode::ResourceLimit: return "ResourceLimit";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::MissingDeclaration: return "MissingDeclaration";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

std::string decimal6(const Rational& x)
{
    // round to 6 significant digits without going through floating point
    if (x == 0) return "0";
    Rational a = x < 0 ? Rational(-x) : x;
    int exp10 = 0;
    while (a >= 10) { a /= 10; ++exp10; }
    while (a < 1) { a *= 10; --exp10; }
    BigInt scaled = BigInt(boost::multiprecision::numerator(a) * 100000 * 2 + boost::multiprecision::denominator(a))
        / (2 * boost::multiprecision::denominator(a));
    if (scaled >= 1000000) { scaled /= 10; ++exp10; }
    std::string digits = scaled.str();   // 6 digits
    std::string out = x < 0 ? "-" : "";
    if (exp10 >= 5) {
        out += digits;
        out.append(size_t(exp10 - 5), '0');
    } else if (exp10 >= 0) {
        out += digits.substr(0, size_t(exp10 + 1)) + "." + digits.substr(size_t(exp10 + 1));
    } else {
        out += "0." + std::string(size_t(-exp10 - 1), '0') + digits;
    }
    return out;
}

std::string rational_str(const Rational& x)
{
    std::ostringstream os;
    os << boost::multiprecision::numerator(x);
    if (boost::multiprecision::denominator(x) != 1)
        os << "/" << boost::multiprecision::denominator(x);
    return os.str();
}

int exact_log(const BigInt& x, unsigned b)
{
    if (x <= 0) return -1;
    BigInt y = x;
    int k = 0;
    while (y > 1) {
        if (y % b != 0) return -1;
        y /= b;
        ++k;
    }
    return k;
}

bool is_prime_u32(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

BigInt FieldCtx::q_big() const
{
    return ipow(BigInt(d_->p), d_->e);
}

namespace {

std::mutex registry_mutex;
std::map<std::pair<uint32_t, unsigned>, std::unique_ptr<FieldData>>& registry()
{
    static std::map<std::pair<uint32_t, unsigned>, std::unique_ptr<FieldData>> r;
    return r;
}

std::vector<uint32_t> least_irreducible(uint32_t p, unsigned e)
{
    // odometer over (c_0, ..., c_{e-1}) with c_0 most significant
    std::vector<uint32_t> c(e, 0);
    if (e > 1) c[0] = 1;   // c_0 = 0 means X divides
    for (;;) {
        fp::Poly f(c.begin(), c.end());
        f.push_back(1);
        if (fp::is_irreducible(f, p)) return f;
        int i = int(e) - 1;
        while (i >= 0) {
            if (++c[size_t(i)] < p) break;
            c[size_t(i)] = 0;
            --i;
        }
        if (i < 0) throw Error(ErrorCode::DegreeOutOfRange, "no irreducible polynomial found");
    }
}

FieldCtx build(uint32_t p, unsigned e)
{
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = registry();
    auto key = std::make_pair(p, e);
    auto it = reg.find(key);
    if (it != reg.end()) return FieldCtx(it->second.get());

    auto d = std::make_unique<FieldData>();
    d->p = p;
    d->e = e;
    d->modulus = least_irreducible(p, e);
    BigInt q = ipow(BigInt(p), e);
    d->q = q < (BigInt(1) << 63) ? uint64_t(q) : 0;
    fp::Poly xp = fp::powmod(fp::Poly{0, 1}, p, d->modulus, p);
    fp::Poly cur{1};
    d->frob.resize(e);
    for (unsigned j = 0; j < e; ++j) {
        fp::Poly v = cur;
        v.resize(e, 0);
        d->frob[j] = v;
        cur = fp::mulmod(cur, xp, d->modulus, p);
    }
    FieldCtx ctx(d.get());
    reg.emplace(key, std::move(d));
    return ctx;
}

void check_same(const FieldCtx& a, const FieldCtx& b)
{
    if (a != b) throw Error(ErrorCode::ContextMismatch, "elements from different fields");
}

} // namespace

FieldCtx make_field(uint64_t p, unsigned e)
{
    if (p >= (uint64_t(1) << 31) || !is_prime_u32(p))
        throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not a prime below 2^31");
    if (e < 1 || e > 16)
        throw Error(ErrorCode::DegreeOutOfRange, "e = " + std::to_string(e) + " outside [1, 16]");
    if (ipow(BigInt(p), e) > (BigInt(1) << 62))
        throw Error(ErrorCode::DegreeOutOfRange, "p^e exceeds 2^62");
    return build(uint32_t(p), e);
}

FieldCtx make_extension_field(uint32_t p, unsigned n)
{
    if (!is_prime_u32(p)) throw Error(ErrorCode::NonPrime, std::to_string(p));
    if (n < 1 || n > 1024) throw Error(ErrorCode::DegreeOutOfRange, "extension degree " + std::to_string(n));
    return build(p, n);
}

// ---------------------------------------------------------------- FqElem

FqElem::FqElem(FieldCtx ctx) : ctx_(ctx), c_(ctx.e(), 0) {}

FqElem::FqElem(FieldCtx ctx, Coeffs c) : ctx_(ctx), c_(std::move(c))
{
    c_.resize(ctx.e(), 0);
    for (auto& v : c_) v %= ctx.p();
}

FqElem FqElem::from_int(FieldCtx ctx, int64_t v)
{
    FqElem r(ctx);
    int64_t p = ctx.p();
    r.c_[0] = uint32_t(((v % p) + p) % p);
    return r;
}

FqElem FqElem::from_index(FieldCtx ctx, uint64_t idx)
{
    FqElem r(ctx);
    for (unsigned i = 0; i < ctx.e() && idx; ++i) {
        r.c_[i] = uint32_t(idx % ctx.p());
        idx /= ctx.p();
    }
    return r;
}

FqElem FqElem::gen(FieldCtx ctx)
{
    if (ctx.e() == 1) {
        // the modulus is X, so the class of x is zero
        return FqElem(ctx);
    }
    FqElem r(ctx);
    r.c_[1] = 1;
    return r;
}

bool FqElem::is_zero() const
{
    for (auto v : c_) if (v) return false;
    return true;
}

bool FqElem::is_one() const
{
    if (c_.empty() || c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i) if (c_[i]) return false;
    return true;
}

uint64_t FqElem::index() const
{
    uint64_t r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * ctx_.p() + c_[i];
    return r;
}

bool FqElem::in_prime_field() const
{
    for (size_t i = 1; i < c_.size(); ++i) if (c_[i]) return false;
    return true;
}

FqElem FqElem::operator+(const FqElem& o) const
{
    check_same(ctx_, o.ctx_);
    FqElem r(*this);
    uint32_t p = ctx_.p();
    for (size_t i = 0; i < c_.size(); ++i) {
        uint32_t s = r.c_[i] + o.c_[i];
        r.c_[i] = s >= p ? s - p : s;
    }
    return r;
}

FqElem FqElem::operator-(const FqElem& o) const
{
    check_same(ctx_, o.ctx_);
    FqElem r(*this);
    uint32_t p = ctx_.p();
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i] = r.c_[i] >= o.c_[i] ? r.c_[i] - o.c_[i] : r.c_[i] + p - o.c_[i];
    return r;
}

FqElem FqElem::operator-() const
{
    FqElem r(*this);
    for (auto& v : r.c_) v = v ? ctx_.p() - v : 0;
    return r;
}

FqElem FqElem::scale(uint32_t k) const
{
    FqElem r(*this);
    uint64_t p = ctx_.p();
    k %= uint32_t(p);
    for (auto& v : r.c_) v = uint32_t(uint64_t(v) * k % p);
    return r;
}

FqElem FqElem::operator*(const FqElem& o) const
{
    check_same(ctx_, o.ctx_);
    const unsigned e = ctx_.e();
    const uint64_t p = ctx_.p();
    if (e == 1) {
        FqElem r(ctx_);
        r.c_[0] = uint32_t(uint64_t(c_[0]) * o.c_[0] % p);
        return r;
    }
    boost::container::small_vector<uint64_t, 16> t(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
        if (!c_[i]) continue;
        for (unsigned j = 0; j < e; ++j)
            t[i + j] = (t[i + j] + uint64_t(c_[i]) * o.c_[j]) % p;
    }
    const auto& g = ctx_.modulus();
    for (unsigned i = 2 * e - 2; i >= e; --i) {
        uint64_t c = t[i];
        if (!c) continue;
        uint64_t nc = p - c;
        for (unsigned j = 0; j < e; ++j)
            t[i - e + j] = (t[i - e + j] + nc * g[j]) % p;
    }
    FqElem r(ctx_);
    for (unsigned i = 0; i < e; ++i) r.c_[i] = uint32_t(t[i]);
    return r;
}

FqElem FqElem::inv() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    const uint32_t p = ctx_.p();
    fp::Poly a(c_.begin(), c_.end());
    fp::trim(a);
    fp::Poly s = fp::invmod(a, ctx_.modulus(), p);
    Coeffs c(s.begin(), s.end());
    return FqElem(ctx_, c);
}

FqElem FqElem::pow(uint64_t k) const
{
    FqElem r = from_int(ctx_, 1), b = *this;
    while (k) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

FqElem FqElem::pow(const BigInt& k) const
{
    if (k < 0) return inv().pow(BigInt(-k));
    FqElem r = from_int(ctx_, 1);
    if (k == 0) return r;
    unsigned top = unsigned(boost::multiprecision::msb(k));
    for (int i = int(top); i >= 0; --i) {
        r *= r;
        if (boost::multiprecision::bit_test(k, unsigned(i))) r *= *this;
    }
    return r;
}

FqElem FqElem::frobenius(long k) const
{
    const long e = long(ctx_.e());
    long kk = ((k % e) + e) % e;
    if (kk == 0 || e == 1) return *this;
    const auto& F = ctx_.data()->frob;
    const uint64_t p = ctx_.p();
    Coeffs cur = c_;
    for (long step = 0; step < kk; ++step) {
        boost::container::small_vector<uint64_t, 16> acc(size_t(e), 0);
        for (long j = 0; j < e; ++j) {
            uint64_t cj = cur[size_t(j)];
            if (!cj) continue;
            const auto& row = F[size_t(j)];
            for (long i = 0; i < e; ++i)
                acc[size_t(i)] = (acc[size_t(i)] + cj * row[size_t(i)]) % p;
        }
        for (long i = 0; i < e; ++i) cur[size_t(i)] = uint32_t(acc[size_t(i)]);
    }
    return FqElem(ctx_, cur);
}

std::string FqElem::str() const
{
    std::string s = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c_[i]);
    }
    return s + "]";
}

bool lex_less(const FqElem& a, const FqElem& b)
{
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(),
                                        b.coeffs().begin(), b.coeffs().end());
}

FqElem frobenius_trace(const FqElem& x, unsigned d)
{
    const unsigned e = x.ctx().e();
    if (d == 0 || e % d != 0)
        throw Error(ErrorCode::NotASubfieldDegree, std::to_string(d) + " does not divide " + std::to_string(e));
    FqElem acc(x.ctx()), cur = x;
    for (unsigned i = 0; i < e / d; ++i) {
        acc += cur;
        cur = cur.frobenius(long(d));
    }
    return acc;
}

void for_each_element(FieldCtx ctx, const std::function<void(const FqElem&)>& fn)
{
    if (!ctx.q() || ctx.q() > (uint64_t(1) << 32))
        throw Error(ErrorCode::TooLarge, "field too large to enumerate");
    for (uint64_t i = 0; i < ctx.q(); ++i) fn(FqElem::from_index(ctx, i));
}

// ---------------------------------------------------------------- root finding

namespace {

using DPoly = std::vector<FqElem>;

void dtrim(DPoly& a)
{
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

DPoly dmod(DPoly a, const DPoly& m)
{
    dtrim(a);
    const size_t dm = m.size() - 1;
    FqElem il = m.back().inv();
    while (a.size() > dm) {
        FqElem c = a.back() * il;
        size_t shift = a.size() - 1 - dm;
        for (size_t j = 0; j <= dm; ++j) a[shift + j] -= c * m[j];
        a.pop_back();
        dtrim(a);
    }
    return a;
}

DPoly dmul(const DPoly& a, const DPoly& b)
{
    if (a.empty() || b.empty()) return {};
    DPoly r(a.size() + b.size() - 1, FqElem(a[0].ctx()));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    dtrim(r);
    return r;
}

DPoly dgcd(DPoly a, DPoly b)
{
    dtrim(a);
    dtrim(b);
    while (!b.empty()) {
        DPoly r = dmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        FqElem il = a.back().inv();
        for (auto& c : a) c *= il;
    }
    return a;
}

DPoly ddiv_exact(DPoly a, const DPoly& b)
{
    dtrim(a);
    const size_t db = b.size() - 1;
    DPoly q(a.size() - db, FqElem(b[0].ctx()));
    FqElem il = b.back().inv();
    while (a.size() > db) {
        FqElem c = a.back() * il;
        size_t shift = a.size() - 1 - db;
        q[shift] = c;
        for (size_t j = 0; j <= db; ++j) a[shift + j] -= c * b[j];
        a.pop_back();
    }
    return q;
}

DPoly dpowmod(DPoly a, const BigInt& k, const DPoly& m)
{
    FieldCtx K = m[0].ctx();
    DPoly r = dmod(DPoly{FqElem::from_int(K, 1)}, m);
    if (k == 0) return r;
    a = dmod(a, m);
    unsigned top = unsigned(boost::multiprecision::msb(k));
    for (int i = int(top); i >= 0; --i) {
        r = dmod(dmul(r, r), m);
        if (boost::multiprecision::bit_test(k, unsigned(i))) r = dmod(dmul(r, a), m);
    }
    return r;
}

void roots_rec(const DPoly& h, std::mt19937_64& rng, std::vector<FqElem>& out)
{
    const size_t d = h.size() - 1;
    if (d == 0) return;
    FieldCtx K = h[0].ctx();
    if (d == 1) {
        out.push_back(-(h[0] * h[1].inv()));
        return;
    }
    const uint32_t p = K.p();
    const unsigned N = K.e();
    for (;;) {
        Coeffs c(N);
        for (auto& v : c) v = uint32_t(rng() % p);
        FqElem a(K, c);
        DPoly g;
        if (p == 2) {
            DPoly t = dmod(DPoly{FqElem(K), a}, h);
            DPoly acc = t;
            for (unsigned i = 1; i < N; ++i) {
                t = dmod(dmul(t, t), h);
                acc.resize(std::max(acc.size(), t.size()), FqElem(K));
                for (size_t j = 0; j < t.size(); ++j) acc[j] += t[j];
                dtrim(acc);
            }
            g = dgcd(h, acc);
        } else {
            BigInt ex = (ipow(BigInt(p), N) - 1) / 2;
            DPoly t = dpowmod(DPoly{a, FqElem::from_int(K, 1)}, ex, h);
            if (t.empty()) t.push_back(FqElem(K));
            t[0] -= FqElem::from_int(K, 1);
            g = dgcd(h, t);
        }
        if (g.size() > 1 && g.size() < h.size()) {
            roots_rec(g, rng, out);
            roots_rec(ddiv_exact(h, g), rng, out);
            return;
        }
    }
}

std::mutex embed_mutex;
std::map<std::pair<const FieldData*, const FieldData*>, FqElem>& embed_cache()
{
    static std::map<std::pair<const FieldData*, const FieldData*>, FqElem> c;
    return c;
}

} // namespace

std::vector<FqElem> split_roots(const std::vector<FqElem>& monic)
{
    DPoly h = monic;
    dtrim(h);
    if (h.empty()) throw std::domain_error("split_roots: zero polynomial");
    std::vector<FqElem> out;
    FieldCtx K = h[0].ctx();
    if (K.q() && K.q() <= 4096) {
        for_each_element(K, [&](const FqElem& x) {
            FqElem v(K);
            for (size_t i = h.size(); i-- > 0;) v = v * x + h[i];
            if (v.is_zero()) out.push_back(x);
        });
    } else {
        std::mt19937_64 rng(0x5eed);
        roots_rec(h, rng, out);
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

FqElem embed(const FqElem& x, FieldCtx target)
{
    FieldCtx src = x.ctx();
    if (src == target) return x;
    if (src.p() != target.p() || target.e() % src.e() != 0)
        throw Error(ErrorCode::ContextMismatch, "no embedding F_{p^" + std::to_string(src.e()) + "} -> F_{p^" +
                                                   std::to_string(target.e()) + "}");
    if (src.e() == 1) return FqElem::from_int(target, x[0]);
    FqElem rho;
    {
        std::lock_guard<std::mutex> lock(embed_mutex);
        auto key = std::make_pair(src.data(), target.data());
        auto it = embed_cache().find(key);
        if (it != embed_cache().end()) rho = it->second;
    }
    if (!rho.ctx().valid()) {
        DPoly g;
        for (auto c : src.modulus()) g.push_back(FqElem::from_int(target, c));
        auto roots = split_roots(g);
        if (roots.size() != src.e()) throw std::logic_error("embed: modulus does not split");
        rho = roots.front();
        std::lock_guard<std::mutex> lock(embed_mutex);
        embed_cache().emplace(std::make_pair(src.data(), target.data()), rho);
    }
    FqElem r(target), pw = FqElem::from_int(target, 1);
    for (unsigned i = 0; i < src.e(); ++i) {
        if (x[i]) r += pw.scale(x[i]);
        pw *= rho;
    }
    return r;
}

// ---------------------------------------------------------------- FqPoly

FqPoly::FqPoly(FieldCtx ctx, std::vector<Term> terms) : ctx_(ctx), t_(std::move(terms))
{
    normalize();
}

FqPoly FqPoly::monomial(const FqElem& a, uint64_t exp)
{
    FqPoly r(a.ctx());
    if (!a.is_zero()) r.t_.emplace_back(exp, a);
    return r;
}

FqPoly FqPoly::x(FieldCtx ctx)
{
    return monomial(FqElem::from_int(ctx, 1), 1);
}

void FqPoly::normalize()
{
    std::sort(t_.begin(), t_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    std::vector<Term> out;
    out.reserve(t_.size());
    for (auto& t : t_) {
        if (t.second.ctx() != ctx_) throw Error(ErrorCode::ContextMismatch, "polynomial coefficient");
        if (!out.empty() && out.back().first == t.first)
            out.back().second += t.second;
        else
            out.push_back(t);
    }
    t_.clear();
    for (auto& t : out)
        if (!t.second.is_zero()) t_.push_back(std::move(t));
}

uint64_t FqPoly::degree() const
{
    return t_.empty() ? 0 : t_.back().first;
}

FqElem FqPoly::coeff(uint64_t exp) const
{
    auto it = std::lower_bound(t_.begin(), t_.end(), exp,
                               [](const Term& t, uint64_t e) { return t.first < e; });
    if (it != t_.end() && it->first == exp) return it->second;
    return FqElem(ctx_);
}

FqElem FqPoly::leading() const
{
    return t_.empty() ? FqElem(ctx_) : t_.back().second;
}

FqPoly FqPoly::operator+(const FqPoly& o) const
{
    check_same(ctx_, o.ctx_);
    FqPoly r(ctx_);
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
            r.t_.push_back(o.t_[j++]);
        } else {
            FqElem s = t_[i].second + o.t_[j].second;
            if (!s.is_zero()) r.t_.emplace_back(t_[i].first, s);
            ++i;
            ++j;
        }
    }
    return r;
}

FqPoly FqPoly::operator-() const
{
    FqPoly r(*this);
    for (auto& t : r.t_) t.second = -t.second;
    return r;
}

FqPoly FqPoly::operator-(const FqPoly& o) const
{
    return *this + (-o);
}

FqPoly FqPoly::operator*(const FqElem& a) const
{
    check_same(ctx_, a.ctx());
    FqPoly r(ctx_);
    if (a.is_zero()) return r;
    for (auto& t : t_) r.t_.emplace_back(t.first, t.second * a);
    return r;
}

FqPoly FqPoly::operator*(const FqPoly& o) const
{
    check_same(ctx_, o.ctx_);
    FqPoly r(ctx_);
    if (t_.empty() || o.t_.empty()) return r;
    std::map<uint64_t, FqElem> acc;
    for (auto& a : t_)
        for (auto& b : o.t_) {
            auto [it, fresh] = acc.try_emplace(a.first + b.first, a.second * b.second);
            if (!fresh) it->second += a.second * b.second;
        }
    for (auto& [k, v] : acc)
        if (!v.is_zero()) r.t_.emplace_back(k, v);
    return r;
}

bool FqPoly::operator==(const FqPoly& o) const
{
    return ctx_ == o.ctx_ && t_ == o.t_;
}

FqPoly FqPoly::frobenius() const
{
    FqPoly r(ctx_);
    for (auto& t : t_) r.t_.emplace_back(t.first * ctx_.p(), t.second.frobenius(1));
    return r;
}

FqPoly FqPoly::pow(uint64_t k) const
{
    // f^k = prod_i (f^{p^i})^{d_i} with base-p digits d_i of k
    FqPoly r = constant(FqElem::from_int(ctx_, 1));
    FqPoly fp = *this;
    const uint64_t p = ctx_.p();
    while (k) {
        uint64_t d = k % p;
        if (d) {
            FqPoly b = fp, acc = constant(FqElem::from_int(ctx_, 1));
            while (d) {
                if (d & 1) acc = acc * b;
                d >>= 1;
                if (d) b = b * b;
            }
            r = r * acc;
        }
        k /= p;
        if (k) fp = fp.frobenius();
    }
    return r;
}

FqPoly FqPoly::map_coeffs(const std::function<FqElem(const FqElem&)>& fn, FieldCtx target) const
{
    std::vector<Term> out;
    for (auto& t : t_) out.emplace_back(t.first, fn(t.second));
    return FqPoly(target, std::move(out));
}

FqElem FqPoly::eval(const FqElem& y) const
{
    FieldCtx K = y.ctx();
    FqElem r(K);
    for (auto& t : t_) {
        FqElem c = t.second.ctx() == K ? t.second : wr::embed(t.second, K);
        r += c * y.pow(t.first);
    }
    return r;
}

FqPoly FqPoly::compose(const FqPoly& g) const
{
    FieldCtx K = g.ctx();
    FqPoly r(K);
    for (auto& t : t_) {
        FqElem c = t.second.ctx() == K ? t.second : wr::embed(t.second, K);
        r += g.pow(t.first) * c;
    }
    return r;
}

FqPoly FqPoly::shift(const FqElem& y) const
{
    // (X+y)^E = sum over k digitwise below E of prod C(E_i, k_i) y^{E-k} X^k
    FieldCtx K = y.ctx();
    const uint64_t p = K.p();
    std::vector<Term> out;
    for (auto& t : t_) {
        FqElem c = t.second.ctx() == K ? t.second : wr::embed(t.second, K);
        std::vector<uint64_t> digits;
        for (uint64_t E = t.first; E; E /= p) digits.push_back(E % p);
        std::vector<std::pair<uint64_t, uint64_t>> ks{{0, 1}};   // (k, binomial product mod p)
        uint64_t place = 1;
        for (uint64_t d : digits) {
            std::vector<std::pair<uint64_t, uint64_t>> next;
            for (auto& [k, b] : ks) {
                uint64_t binom = 1;
                for (uint64_t ki = 0; ki <= d; ++ki) {
                    next.emplace_back(k + ki * place, b * binom % p);
                    if (ki < d)
                        binom = binom * (d - ki) % p * fp::inv_mod(uint32_t(ki + 1), uint32_t(p)) % p;
                }
            }
            ks = std::move(next);
            place *= p;
        }
        for (auto& [k, b] : ks)
            if (b) out.emplace_back(k, (c * y.pow(t.first - k)).scale(uint32_t(b)));
    }
    return FqPoly(K, std::move(out));
}

std::string FqPoly::str() const
{
    if (t_.empty()) return "0";
    std::string s;
    for (size_t i = t_.size(); i-- > 0;) {
        if (!s.empty()) s += " + ";
        s += t_[i].second.str();
        if (t_[i].first) s += "*X^" + std::to_string(t_[i].first);
    }
    return s;
}

FqPoly embed(const FqPoly& f, FieldCtx target)
{
    if (f.ctx() == target) return f;
    return f.map_coeffs([&](const FqElem& a) { return embed(a, target); }, target);
}

} // namespace wr
