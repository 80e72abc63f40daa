#include "wr/cover.hpp"
#include "wr/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wr {

// ---------------------------------------------------------------- CoverSpec

CoverSpec CoverSpec::witt(const WittPoly& rhs, std::string label)
{
    CoverSpec c;
    c.kind = Kind::witt;
    c.ctx = rhs.ctx;
    c.n = rhs.n();
    if (c.n == 0) throw Error(ErrorCode::BadParameters, "Witt length must be positive");
    c.op = {witt_neg(WittVec::one(c.ctx, c.n)), WittVec::one(c.ctx, c.n)};
    c.rhs = rhs;
    c.label = std::move(label);
    return c;
}

CoverSpec CoverSpec::artin_schreier(const FqPoly& f, std::string label)
{
    return witt(WittPoly(f.ctx(), {f}), std::move(label));
}

CoverSpec CoverSpec::additive(const AdditiveOp& A, const FqPoly& f, std::string label)
{
    if (A.ctx() != f.ctx()) throw Error(ErrorCode::ContextMismatch, "operator and right-hand side");
    if (!A.separable()) throw Error(ErrorCode::InseparableOperator, "a_0 = 0");
    CoverSpec c;
    c.kind = Kind::additive;
    c.ctx = A.ctx();
    c.n = 1;
    for (auto& a : A.coeffs()) c.op.push_back(WittVec(c.ctx, {a}));
    c.rhs = WittPoly(c.ctx, {f});
    c.label = std::move(label);
    return c;
}

CoverSpec CoverSpec::witt_additive(std::vector<WittVec> coeffs, const WittPoly& rhs, std::string label)
{
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    if (coeffs.size() < 2) throw Error(ErrorCode::BadParameters, "operator needs positive F-degree");
    for (auto& a : coeffs) {
        if (a.ctx != rhs.ctx) throw Error(ErrorCode::ContextMismatch, "operator coefficient");
        if (a.n() != rhs.n()) throw Error(ErrorCode::LengthMismatch, "operator coefficient");
    }
    if (coeffs.front().coords[0].is_zero()) throw Error(ErrorCode::InseparableOperator, "a_0 not a unit");
    CoverSpec c;
    c.kind = Kind::witt_additive;
    c.ctx = rhs.ctx;
    c.n = rhs.n();
    c.op = std::move(coeffs);
    c.rhs = rhs;
    c.label = std::move(label);
    return c;
}

bool CoverSpec::is_wp() const
{
    return op.size() == 2 && op[1] == WittVec::one(ctx, n) && op[0] == witt_neg(WittVec::one(ctx, n));
}

AdditiveOp CoverSpec::additive_op() const
{
    if (n != 1) throw Error(ErrorCode::BadParameters, "not an additive cover");
    std::vector<FqElem> a;
    for (auto& w : op) a.push_back(w.coords[0]);
    return AdditiveOp(ctx, a);
}

WittVec apply_operator(const CoverSpec& c, const WittVec& x)
{
    WittVec acc(c.ctx, c.n), xf = x;
    for (size_t j = 0; j < c.op.size(); ++j) {
        if (!c.op[j].is_zero()) acc = acc + c.op[j] * xf;
        if (j + 1 < c.op.size()) xf = witt_frobenius(xf);
    }
    return acc;
}

// ---------------------------------------------------------------- reduction

WittPoly reduce_witt(const WittPoly& f, ReduceMode mode)
{
    const unsigned n = f.n();
    FieldCtx K = f.ctx;
    if (n == 1) {
        auto r = reduce_mod_wp(f.coords[0], mode);
        FqPoly out = r.poly;
        if (mode == ReduceMode::arithmetic && !r.constant.is_zero()) out += FqPoly::constant(r.constant);
        return WittPoly(K, {out});
    }
    const uint64_t p = K.p();
    WittPoly r = f;
    for (unsigned i = 0; i < n; ++i) {
        for (;;) {
            const FqPoly& ci = r.coords[i];
            const FqPoly::Term* hit = nullptr;
            for (auto it = ci.terms().rbegin(); it != ci.terms().rend(); ++it)
                if (it->first != 0 && it->first % p == 0) {
                    hit = &*it;
                    break;
                }
            if (!hit) break;
            WittPoly g(K, n);
            g.coords[i] = FqPoly::monomial(hit->second.pth_root(), hit->first / p);
            r = r + (g - witt_poly_frobenius(g));
        }
        if (mode == ReduceMode::geometric) {
            FqElem c0 = r.coords[i].constant_term();
            if (!c0.is_zero()) {
                WittPoly g(K, n);
                g.coords[i] = FqPoly::constant(c0);
                r = r - g;
            }
        }
    }
    return r;
}

uint64_t garuti_conductor(const WittPoly& reduced)
{
    const unsigned n = reduced.n();
    const uint64_t p = reduced.ctx.p();
    uint64_t best = 0;
    bool any = false;
    for (unsigned i = 0; i < n; ++i) {
        if (reduced.coords[i].is_zero()) continue;
        uint64_t w = 1;
        for (unsigned j = i + 1; j < n; ++j) w *= p;
        best = std::max(best, w * reduced.coords[i].degree());
        any = true;
    }
    return any ? best + 1 : 0;
}

// ---------------------------------------------------------------- layered engine

namespace {

WittVec vshift(FieldCtx K, unsigned n, unsigned k, const FqElem& c)
{
    WittVec v(K, n);
    v.coords[k] = c;
    return v;
}

FqElem from_vec(FieldCtx K, const linalg::Vec& v)
{
    return FqElem(K, Coeffs(v.begin(), v.end()));
}

linalg::Vec to_vec(const FqElem& x)
{
    return linalg::Vec(x.coeffs().begin(), x.coeffs().end());
}

linalg::SparseEchelon::SVec to_svec(const FqElem& x)
{
    linalg::SparseEchelon::SVec s;
    for (unsigned i = 0; i < x.coeffs().size(); ++i)
        if (x[i]) s[i] = x[i];
    return s;
}

constexpr uint64_t kEnumCap = uint64_t(1) << 20;

class Layers {
public:
    Layers(const WittMap& phi, FieldCtx K, unsigned n) : phi_(phi), K_(K), n_(n), mats_(n), kers_(n), built_(n, false) {}

    const linalg::Mat& mat(unsigned k)
    {
        build(k);
        return mats_[k];
    }
    const std::vector<linalg::Vec>& ker(unsigned k)
    {
        build(k);
        return kers_[k];
    }

    std::optional<WittVec> solve(const WittVec& t, unsigned k)
    {
        if (k == n_) {
            if (t.is_zero()) return WittVec(K_, n_);
            return std::nullopt;
        }
        for (unsigned i = 0; i < k; ++i)
            if (!t.coords[i].is_zero()) throw std::logic_error("target outside the filtration step");
        auto x0 = linalg::solve(mat(k), to_vec(t.coords[k]));
        if (!x0) return std::nullopt;
        FqElem c0 = from_vec(K_, *x0);
        if (k + 1 == n_) return vshift(K_, n_, k, c0);
        std::optional<WittVec> found;
        for_each_in_coset(c0, ker(k), [&](const FqElem& c) {
            WittVec v = vshift(K_, n_, k, c);
            auto rest = solve(t - phi_(v), k + 1);
            if (rest) {
                found = v + *rest;
                return false;
            }
            return true;
        });
        return found;
    }

    LayeredKernel kernel()
    {
        LayeredKernel out;
        unsigned dim = 0;
        for (unsigned k = 0; k < n_; ++k) {
            const auto& kb = ker(k);
            if (k + 1 == n_) {
                for (auto& b : kb) {
                    FqElem c = from_vec(K_, b);
                    out.generators.push_back(vshift(K_, n_, k, c));
                    out.ptorsion_basis.push_back(c);
                }
                dim += unsigned(kb.size());
                continue;
            }
            linalg::SparseEchelon liftable(K_.p());
            for_each_in_coset(FqElem(K_), kb, [&](const FqElem& c) {
                if (liftable.dim() == kb.size()) return false;
                if (c.is_zero() || liftable.in_span(to_svec(c))) return true;
                WittVec v = vshift(K_, n_, k, c);
                auto rest = solve(witt_neg(phi_(v)), k + 1);
                if (rest) {
                    liftable.insert(to_svec(c));
                    out.generators.push_back(v + *rest);
                }
                return true;
            });
            dim += unsigned(liftable.dim());
        }
        out.order = ipow(BigInt(K_.p()), dim);
        return out;
    }

private:
    void build(unsigned k)
    {
        if (built_[k]) return;
        const unsigned e = K_.e();
        linalg::Mat M(K_.p(), e, e);
        for (unsigned j = 0; j < e; ++j) {
            Coeffs u(e, 0);
            u[j] = 1;
            WittVec img = phi_(vshift(K_, n_, k, FqElem(K_, u)));
            for (unsigned i = 0; i < k; ++i)
                if (!img.coords[i].is_zero()) throw std::logic_error("map does not preserve the V-filtration");
            M.set_col(j, to_vec(img.coords[k]));
        }
        mats_[k] = M;
        kers_[k] = linalg::nullspace(M);
        built_[k] = true;
    }

    // calls fn on base + span(basis) until fn returns false
    void for_each_in_coset(const FqElem& base, const std::vector<linalg::Vec>& basis,
                           const std::function<bool(const FqElem&)>& fn)
    {
        const uint32_t p = K_.p();
        uint64_t total = 1;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (total > kEnumCap / p) throw Error(ErrorCode::ResourceLimit, "layer kernel too large to enumerate");
            total *= p;
        }
        std::vector<FqElem> b;
        for (auto& v : basis) b.push_back(from_vec(K_, v));
        for (uint64_t idx = 0; idx < total; ++idx) {
            FqElem x = base;
            uint64_t t = idx;
            for (size_t i = 0; i < b.size(); ++i, t /= p)
                if (t % p) x += b[i].scale(uint32_t(t % p));
            if (!fn(x)) return;
        }
    }

    const WittMap& phi_;
    FieldCtx K_;
    unsigned n_;
    std::vector<linalg::Mat> mats_;
    std::vector<std::vector<linalg::Vec>> kers_;
    std::vector<bool> built_;
};

std::vector<uint64_t> key_of(const WittVec& v)
{
    std::vector<uint64_t> k;
    for (auto& c : v.coords) k.push_back(c.index());
    return k;
}

} // namespace

LayeredKernel layered_kernel(const WittMap& phi, FieldCtx ctx, unsigned n)
{
    Layers L(phi, ctx, n);
    return L.kernel();
}

std::optional<WittVec> layered_solve(const WittMap& phi, const WittVec& target, unsigned depth)
{
    Layers L(phi, target.ctx, target.n());
    return L.solve(target, depth);
}

std::vector<WittVec> enumerate_subgroup(const std::vector<WittVec>& gens, FieldCtx ctx, unsigned n, size_t cap)
{
    std::set<std::vector<uint64_t>> seen;
    std::vector<WittVec> elems{WittVec(ctx, n)};
    seen.insert(key_of(elems[0]));
    for (auto& g : gens) {
        std::vector<WittVec> mult{WittVec(ctx, n)};
        for (WittVec m = g; !m.is_zero(); m = m + g) mult.push_back(m);
        std::vector<WittVec> next;
        for (auto& x : elems)
            for (auto& m : mult) {
                WittVec y = x + m;
                if (seen.insert(key_of(y)).second) next.push_back(y);
            }
        for (auto& y : next) elems.push_back(y);
        if (elems.size() > cap) throw Error(ErrorCode::ResourceLimit, "character group too large to enumerate");
    }
    return elems;
}

WittVec dual_operator(const CoverSpec& c, const WittVec& beta)
{
    const size_t d = c.op.size() - 1;
    if (d == 0) return beta * c.op[0];
    WittVec b = witt_neg(beta * c.op[0]);
    for (size_t j = 1; j < d; ++j) b = witt_frobenius(b) - beta * c.op[j];
    return witt_frobenius(b) - beta * c.op[d];
}

// ---------------------------------------------------------------- characters

namespace {

struct CharGroup {
    LayeredKernel phi;
    LayeredKernel psi;
};

CharGroup character_group(const CoverSpec& c)
{
    WittMap phi = [&](const WittVec& x) { return apply_operator(c, x); };
    WittMap psi = [&](const WittVec& b) { return dual_operator(c, b); };
    CharGroup g{layered_kernel(phi, c.ctx, c.n), layered_kernel(psi, c.ctx, c.n)};
    if (g.phi.order != g.psi.order)
        throw Error(ErrorCode::DecompositionFailure,
                    "|ker| = " + g.phi.order.str() + " but " + g.psi.order.str() + " characters");
    // the roots of the operator must all be rational over F_q
    BigInt full = ipow(BigInt(c.ctx.p()), unsigned(c.n * (c.op.size() - 1)));
    if (g.phi.order != full)
        throw Error(ErrorCode::BadParameters, "operator kernel is not split over F_q (" + g.phi.order.str() +
                                                  " of " + full.str() + " roots)");
    return g;
}

} // namespace

BigInt kernel_order(const CoverSpec& c)
{
    WittMap phi = [&](const WittVec& x) { return apply_operator(c, x); };
    return layered_kernel(phi, c.ctx, c.n).order;
}

std::vector<WittVec> character_generators(const CoverSpec& c)
{
    return character_group(c).psi.generators;
}

CharacterInfo character(const CoverSpec& c, const WittVec& beta)
{
    CharacterInfo ch;
    ch.beta = beta;
    if (c.n == 1) {
        FqPoly prod = c.rhs.coords[0] * beta.coords[0];
        ch.reduced = WittPoly(c.ctx, {red(prod)});
    } else {
        ch.reduced = reduce_witt(WittPoly::constant(beta) * c.rhs, ReduceMode::geometric);
    }
    ch.conductor = garuti_conductor(ch.reduced);
    return ch;
}

uint64_t conductor(const CoverSpec& c)
{
    uint64_t best = 0;
    for (auto& b : character_generators(c)) best = std::max(best, character(c, b).conductor);
    if (best == 0) throw Error(ErrorCode::ZeroCover, "every character reduces to a constant");
    return best;
}

CoverAnalysis analyze(const CoverSpec& c)
{
    auto g = character_group(c);
    auto chars = enumerate_subgroup(g.psi.generators, c.ctx, c.n);
    if (BigInt(chars.size()) != g.psi.order)
        throw Error(ErrorCode::DecompositionFailure, "character enumeration size mismatch");
    std::map<uint64_t, uint64_t> by_cond;
    BigInt sum = 0;
    for (auto& b : chars) {
        auto ch = character(c, b);
        if (ch.conductor == 0 && !b.is_zero())
            throw Error(ErrorCode::ZeroCover, "character with constant right-hand side");
        by_cond[ch.conductor]++;
        sum += ch.conductor;
    }
    CoverAnalysis a;
    a.degree = g.phi.order;
    BigInt twice = 2 - 2 * a.degree + sum;
    if (twice % 2 != 0) throw Error(ErrorCode::OddSum, "conductor sum has the wrong parity");
    a.genus = twice / 2;
    uint64_t cum = 0;
    for (auto& [f, cnt] : by_cond) {
        cum += cnt;
        if (f == 0) continue;
        a.ladder.push_back({BigInt(cum), f, c.label});
        a.conductor = f;
    }
    return a;
}

// ---------------------------------------------------------------- splitting

bool splits_at(const CoverSpec& c, const FqElem& y)
{
    if (c.is_wp()) return witt_trace(c.rhs.eval(y)).is_zero();
    return splits_at_by_solving(c, y);
}

bool splits_at_by_solving(const CoverSpec& c, const FqElem& y)
{
    WittMap phi = [&](const WittVec& x) { return apply_operator(c, x); };
    return layered_solve(phi, c.rhs.eval(y)).has_value();
}

std::string SplitSummary::str() const
{
    if (split == total) return "all q places";
    if (split == 0) return "none";
    return std::to_string(split) + " of " + std::to_string(total) + " places";
}

SplitSummary split_summary(const CoverSpec& c)
{
    SplitSummary s;
    if (c.is_wp()) {
        for_each_element(c.ctx, [&](const FqElem& y) {
            ++s.total;
            if (splits_at(c, y)) ++s.split;
        });
        return s;
    }
    WittMap phi = [&](const WittVec& x) { return apply_operator(c, x); };
    Layers L(phi, c.ctx, c.n);
    for_each_element(c.ctx, [&](const FqElem& y) {
        ++s.total;
        if (L.solve(c.rhs.eval(y), 0)) ++s.split;
    });
    return s;
}

// ---------------------------------------------------------------- towers

std::vector<TowerLevel> tower_compose(const std::vector<CoverSpec>& levels)
{
    std::vector<TowerLevel> out;
    if (levels.empty()) return out;
    const uint32_t p = levels.front().ctx.p();
    linalg::SparseEchelon span(p);
    BigInt degree = 1;
    uint64_t cond = 0;
    for (auto& c : levels) {
        auto g = character_group(c);
        uint64_t lc = 0;
        for (auto& b : g.psi.generators) lc = std::max(lc, character(c, b).conductor);
        if (lc == 0) throw Error(ErrorCode::ZeroCover, c.label);
        // order-p characters as reduced polynomials, keyed by exponent*e + coordinate
        const unsigned e = c.ctx.e();
        linalg::SparseEchelon mine(p), merged = span;
        size_t fresh = 0;
        for (auto& cc : g.psi.ptorsion_basis) {
            WittVec beta(c.ctx, c.n);
            beta.coords[c.n - 1] = cc;
            FqPoly h = character(c, beta).reduced.coords[c.n - 1];
            linalg::SparseEchelon::SVec v;
            for (auto& [k, a] : h.terms())
                for (unsigned j = 0; j < e; ++j)
                    if (a[j]) v[k * e + j] = a[j];
            if (mine.insert(v) && merged.insert(v)) ++fresh;
        }
        size_t common = mine.dim() - fresh;
        BigInt inc = g.phi.order / ipow(BigInt(p), unsigned(common));
        span = std::move(merged);
        // a level meeting the earlier span trivially contributes one step per
        // character conductor; otherwise only its top conductor is tracked
        std::vector<std::pair<uint64_t, BigInt>> steps;
        if (common == 0 && g.psi.order <= BigInt(1u << 16)) {
            std::map<uint64_t, uint64_t> by_cond;
            for (auto& b : enumerate_subgroup(g.psi.generators, c.ctx, c.n)) by_cond[character(c, b).conductor]++;
            uint64_t cum = 0;
            for (auto& [f, cnt] : by_cond) {
                cum += cnt;
                if (f) steps.push_back({f, BigInt(cum)});
            }
        } else {
            steps.push_back({lc, inc});
        }
        for (auto& [f, part] : steps) {
            cond = std::max(cond, f);
            BigInt d = degree * part;
            if (!out.empty() && out.back().conductor == cond)
                out.back() = {d, cond, c.label};
            else
                out.push_back({d, cond, c.label});
        }
        degree *= inc;
    }
    return out;
}

std::vector<unsigned> character_power_orders(const std::vector<CoverSpec>& levels)
{
    if (levels.empty()) return {};
    const uint32_t p = levels.front().ctx.p();
    auto lad = tower_compose(levels);
    int b0 = exact_log(lad.back().degree, p);
    // p * chi_beta is the order-p character of red(beta_0 * f_0)
    linalg::SparseEchelon span(p);
    for (auto& c : levels) {
        if (c.n > 2) throw Error(ErrorCode::DecompositionFailure, "Witt length above 2: " + c.label);
        if (c.n < 2) continue;
        const unsigned e = c.ctx.e();
        for (auto& b : character_group(c).psi.generators) {
            FqPoly h = reduce_witt(WittPoly(c.ctx, {c.rhs.coords[0] * b.coords[0]}), ReduceMode::geometric).coords[0];
            linalg::SparseEchelon::SVec v;
            for (auto& [k, a] : h.terms())
                for (unsigned j = 0; j < e; ++j)
                    if (a[j]) v[k * e + j] = a[j];
            span.insert(v);
        }
    }
    std::vector<unsigned> b{unsigned(b0)};
    if (span.dim()) b.push_back(unsigned(span.dim()));
    return b;
}

CoverSpec base_change(const CoverSpec& c, const AdditiveOp& S)
{
    if (S.ctx() != c.ctx) throw Error(ErrorCode::ContextMismatch, "base change operator");
    if (!S.separable()) throw Error(ErrorCode::InseparableOperator, "S must be separable");
    FqPoly sp = S.as_poly();
    CoverSpec r = c;
    for (auto& f : r.rhs.coords) f = f.compose(sp);
    r.label = c.label.empty() ? "X=S(Z)" : c.label + " with X=S(Z)";
    return r;
}

// ---------------------------------------------------------------- families

FqElem gamma_parameter(FieldCtx K)
{
    if (K.e() % 2) throw Error(ErrorCode::BadParameters, "e must be even");
    const unsigned s = K.e() / 2;
    std::vector<FqElem> a(s + 1, FqElem(K));
    a[0] = a[s] = FqElem::from_int(K, 1);
    auto all = span_elements(linearize_kernel(AdditiveOp(K, a), K.e()));
    std::optional<FqElem> best;
    for (auto& x : all)
        if (!x.is_zero() && (!best || lex_less(x, *best))) best = x;
    return *best;
}

namespace {

std::string xpow(uint64_t k)
{
    if (k == 0) return "1";
    if (k == 1) return "X";
    return "X^" + std::to_string(k);
}

FqPoly mono(FieldCtx K, uint64_t k, int64_t c = 1)
{
    return FqPoly::monomial(FqElem::from_int(K, c), k);
}

AdditiveOp frob_plus_one(FieldCtx K, unsigned s)
{
    std::vector<FqElem> a(s + 1, FqElem(K));
    a[0] = a[s] = FqElem::from_int(K, 1);
    return AdditiveOp(K, a);
}

AdditiveOp frob_minus_one(FieldCtx K, unsigned k)
{
    std::vector<FqElem> a(k + 1, FqElem(K));
    a[0] = FqElem::from_int(K, -1);
    a[k] = FqElem::from_int(K, 1);
    return AdditiveOp(K, a);
}

// X^u (X^{vq} - X^v)
FqPoly qshape(FieldCtx K, uint64_t u, uint64_t v)
{
    return mono(K, u + v * K.q()) - mono(K, u + v);
}

Family lauter_even(uint32_t p, unsigned e)
{
    if (e % 2) throw Error(ErrorCode::BadParameters, "lauter-even needs e even");
    FieldCtx K = make_field(p, e);
    const unsigned s = e / 2;
    const uint64_t r = uint64_t(ipow(BigInt(p), s));
    const uint64_t q = K.q();
    FqElem a = gamma_parameter(K);
    Family fam;
    FqPoly f0 = FqPoly::monomial(a, 1 + r);
    fam.covers.push_back(CoverSpec::artin_schreier(f0, "W0^p-W0=a*" + xpow(1 + r)));
    for (uint32_t i = 1; i < p; ++i) {
        uint64_t u = i * r / p;
        fam.covers.push_back(CoverSpec::additive(frob_minus_one(K, e), qshape(K, u, 1),
                                                 "W" + std::to_string(i) + "^q-W" + std::to_string(i) + "=" +
                                                     xpow(u) + "*(" + xpow(q) + "-X)"));
    }
    WittPoly w(K, 2);
    w.coords[0] = f0;
    fam.covers.push_back(CoverSpec::witt(w, "[W0,W" + std::to_string(p) + "]^p-[W0,W" + std::to_string(p) +
                                                "]=[a*" + xpow(1 + r) + ",0]"));
    fam.notes.push_back("a = " + a.str());
    // the trace argument for the length-2 equation needs p odd
    if (p == 2) fam.notes.push_back("p = 2: length-2 equation splits at " + split_summary(fam.covers.back()).str());
    return fam;
}

Family lauter_odd(uint32_t p, unsigned e)
{
    if (e % 2 == 0 || e < 3) throw Error(ErrorCode::BadParameters, "lauter-odd needs e = 2s-1 with s >= 2");
    FieldCtx K = make_field(p, e);
    const unsigned s = (e + 1) / 2;
    const uint64_t q = K.q();
    const uint64_t ps1 = uint64_t(ipow(BigInt(p), s - 1)), ps2 = uint64_t(ipow(BigInt(p), s - 2));
    Family fam;
    for (uint32_t i = 1; i < p; ++i)
        fam.covers.push_back(CoverSpec::additive(frob_minus_one(K, e), qshape(K, i * ps1, 1),
                                                 "W" + std::to_string(i) + "^q-W" + std::to_string(i) + "=" +
                                                     xpow(i * ps1) + "*(" + xpow(q) + "-X)"));
    for (uint32_t j = 1; j < p; ++j)
        fam.covers.push_back(CoverSpec::additive(frob_minus_one(K, e), qshape(K, j * ps2, 1),
                                                 "V" + std::to_string(j) + "^q-V" + std::to_string(j) + "=" +
                                                     xpow(j * ps2) + "*(" + xpow(q) + "-X)"));
    WittPoly a(K, 2), b(K, 2);
    a.coords[0] = mono(K, 1 + ps1 * p);
    b.coords[0] = mono(K, 1 + ps1);
    fam.covers.push_back(CoverSpec::witt(a - b, "[W1,W" + std::to_string(p) + "]^p-[W1,W" + std::to_string(p) +
                                                    "]=[" + xpow(1 + ps1 * p) + ",0]-[" + xpow(1 + ps1) + ",0]"));
    return fam;
}

Family exponent_pn(uint32_t p, unsigned e, unsigned n)
{
    if (e % 2) throw Error(ErrorCode::BadParameters, "exponent-pn needs e even");
    if (n < 2) throw Error(ErrorCode::BadParameters, "exponent-pn needs n >= 2");
    FieldCtx K = make_field(p, e);
    const uint64_t r = uint64_t(ipow(BigInt(p), e / 2));
    FqElem a = gamma_parameter(K);
    WittPoly w(K, n);
    w.coords[0] = FqPoly::monomial(a, 1 + r);
    Family fam;
    fam.covers.push_back(CoverSpec::witt(w, "[W1..W" + std::to_string(n) + "]^p-[W1..W" + std::to_string(n) +
                                                "]=[a*" + xpow(1 + r) + ",0..]"));
    fam.notes.push_back("a = " + a.str());
    return fam;
}

struct TableRow {
    uint64_t conductor;
    CoverSpec cover;
};

std::vector<TableRow> table_rows(uint32_t p, unsigned e)
{
    if (e % 2) throw Error(ErrorCode::BadParameters, "table needs e even");
    FieldCtx K = make_field(p, e);
    const unsigned s = e / 2;
    const uint64_t r = uint64_t(ipow(BigInt(p), s));
    const uint64_t q = K.q();
    std::vector<TableRow> rows;
    unsigned idx = 0;
    auto name = [&] { return "W" + std::to_string(idx++); };
    for (uint64_t u = 1; u <= p; ++u) {
        // W^q - W = X^{ur}(X^{vq} - X^v), conductor ur + v + 1
        for (uint64_t v = 1; v < u; ++v) {
            std::string w = name();
            std::string lbl = w + "^q-" + w + "=" + xpow(u * r) + "*(" + xpow(v * q) + "-" + xpow(v) + ")";
            rows.push_back({u * r + v + 1, CoverSpec::additive(frob_minus_one(K, e), qshape(K, u * r, v), lbl)});
        }
        // W^r + W = X^{u(1+r)}, conductor ur + u + 1
        if (u < p) {
            std::string w = name();
            std::string lbl = w + "^r+" + w + "=" + xpow(u * (1 + r));
            rows.push_back({u * r + u + 1, CoverSpec::additive(frob_plus_one(K, s), mono(K, u * (1 + r)), lbl)});
        }
    }
    std::vector<WittVec> coeffs(s + 1, WittVec(K, 2));
    coeffs[0] = coeffs[s] = WittVec::one(K, 2);
    WittPoly w(K, 2);
    w.coords[0] = mono(K, 1 + r);
    std::string last = "W" + std::to_string(idx);
    rows.push_back({p * (1 + r) + 1, CoverSpec::witt_additive(coeffs, w, "[W0," + last + "]^r+[W0," + last +
                                                                              "]=[" + xpow(1 + r) + ",0]")});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const TableRow& a, const TableRow& b) { return a.conductor < b.conductor; });
    return rows;
}

} // namespace

Family family_build(const std::string& kind, const FamilyParams& P)
{
    if (kind == "lauter-even") return lauter_even(P.p, P.e);
    if (kind == "lauter-odd") return lauter_odd(P.p, P.e);
    if (kind == "exponent-pn") return exponent_pn(P.p, P.e, P.n);
    if (kind == "table" || kind == "table-row") {
        Family fam;
        for (auto& row : table_rows(P.p, P.e))
            if (kind == "table" || row.conductor == P.m) fam.covers.push_back(row.cover);
        if (fam.covers.empty())
            throw Error(ErrorCode::BadParameters, "no table row with conductor " + std::to_string(P.m));
        return fam;
    }
    throw Error(ErrorCode::BadParameters, "unknown family kind '" + kind + "'");
}

} // namespace wr
