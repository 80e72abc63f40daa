#include "wr/additive.hpp"
#include "wr/linalg.hpp"
#include "wr/reduce.hpp"

namespace wr {

AdditiveOp::AdditiveOp(FieldCtx ctx, std::vector<FqElem> coeffs) : ctx_(ctx), a_(std::move(coeffs))
{
    for (auto& c : a_)
        if (c.ctx() != ctx_) throw Error(ErrorCode::ContextMismatch, "additive operator coefficient");
    while (!a_.empty() && a_.back().is_zero()) a_.pop_back();
}

AdditiveOp AdditiveOp::frobenius_power(FieldCtx ctx, unsigned k)
{
    std::vector<FqElem> a(k + 1, FqElem(ctx));
    a[k] = FqElem::from_int(ctx, 1);
    return AdditiveOp(ctx, a);
}

AdditiveOp AdditiveOp::wp(FieldCtx ctx)
{
    return AdditiveOp(ctx, {FqElem::from_int(ctx, -1), FqElem::from_int(ctx, 1)});
}

FqElem AdditiveOp::operator()(const FqElem& x) const
{
    FieldCtx K = x.ctx();
    FqElem r(K), xf = x;
    for (size_t j = 0; j < a_.size(); ++j) {
        if (!a_[j].is_zero()) r += embed(a_[j], K) * xf;
        xf = xf.frobenius(1);
    }
    return r;
}

FqPoly AdditiveOp::as_poly() const
{
    std::vector<FqPoly::Term> t;
    uint64_t e = 1;
    for (size_t j = 0; j < a_.size(); ++j, e *= ctx_.p()) t.emplace_back(e, a_[j]);
    return FqPoly(ctx_, std::move(t));
}

AdditiveOp AdditiveOp::operator+(const AdditiveOp& o) const
{
    if (ctx_ != o.ctx_) throw Error(ErrorCode::ContextMismatch, "additive operators");
    std::vector<FqElem> a(std::max(a_.size(), o.a_.size()), FqElem(ctx_));
    for (size_t j = 0; j < a_.size(); ++j) a[j] += a_[j];
    for (size_t j = 0; j < o.a_.size(); ++j) a[j] += o.a_[j];
    return AdditiveOp(ctx_, a);
}

AdditiveOp AdditiveOp::operator-(const AdditiveOp& o) const
{
    return *this + o.scaled(FqElem::from_int(ctx_, -1));
}

AdditiveOp AdditiveOp::scaled(const FqElem& c) const
{
    std::vector<FqElem> a = a_;
    for (auto& v : a) v *= c;
    return AdditiveOp(ctx_, a);
}

std::string AdditiveOp::str() const
{
    std::string s;
    for (size_t j = a_.size(); j-- > 0;) {
        if (a_[j].is_zero()) continue;
        if (!s.empty()) s += " + ";
        s += a_[j].str() + "*F^" + std::to_string(j);
    }
    return s.empty() ? "0" : s;
}

AdditiveOp twisted_compose(const AdditiveOp& A, const AdditiveOp& B)
{
    if (A.ctx() != B.ctx()) throw Error(ErrorCode::ContextMismatch, "twisted_compose");
    FieldCtx K = A.ctx();
    if (A.is_zero() || B.is_zero()) return AdditiveOp(K, {});
    std::vector<FqElem> c(A.coeffs().size() + B.coeffs().size() - 1, FqElem(K));
    for (size_t i = 0; i < A.coeffs().size(); ++i) {
        if (A.coeffs()[i].is_zero()) continue;
        for (size_t j = 0; j < B.coeffs().size(); ++j)
            c[i + j] += A.coeffs()[i] * B.coeffs()[j].frobenius(long(i));
    }
    return AdditiveOp(K, c);
}

unsigned splitting_degree(const AdditiveOp& A, unsigned cap)
{
    if (!A.separable()) throw Error(ErrorCode::InseparableOperator, "a_0 = 0");
    FieldCtx K = A.ctx();
    const size_t d = size_t(A.degree());
    const unsigned e = K.e();
    if (d == 0) return e;
    const FqElem il = A.coeffs()[d].inv();
    // R holds F^k reduced on the right modulo A; degree < d
    std::vector<FqElem> R(d, FqElem(K));
    R[0] = FqElem::from_int(K, 1);
    for (unsigned k = 1; k <= cap; ++k) {
        std::vector<FqElem> S(d + 1, FqElem(K));
        for (size_t j = 0; j < d; ++j) S[j + 1] = R[j].frobenius(1);
        FqElem lam = S[d] * il;
        for (size_t j = 0; j <= d; ++j) S[j] -= lam * A.coeffs()[j];
        for (size_t j = 0; j < d; ++j) R[j] = S[j];
        if (k % e == 0) {
            bool one = R[0].is_one();
            for (size_t j = 1; j < d && one; ++j) one = R[j].is_zero();
            if (one) return k;
        }
    }
    throw Error(ErrorCode::ResourceLimit, "kernel does not split in degree <= " + std::to_string(cap));
}

namespace {

linalg::Mat operator_matrix(const AdditiveOp& A, FieldCtx K)
{
    const unsigned N = K.e();
    linalg::Mat M(K.p(), N, N);
    for (unsigned j = 0; j < N; ++j) {
        Coeffs c(N, 0);
        c[j] = 1;
        FqElem img = A(FqElem(K, c));
        linalg::Vec v(img.coeffs().begin(), img.coeffs().end());
        M.set_col(j, v);
    }
    return M;
}

FieldCtx ambient_for(const AdditiveOp& A, unsigned N)
{
    if (N == 0 || N % A.ctx().e() != 0)
        throw Error(ErrorCode::NotASubfieldDegree, "N must be a multiple of e");
    return N == A.ctx().e() ? A.ctx() : make_extension_field(A.ctx().p(), N);
}

} // namespace

KernelBasis linearize_kernel(const AdditiveOp& A, unsigned N)
{
    if (!A.separable()) throw Error(ErrorCode::InseparableOperator, "a_0 = 0, strip the F-power first");
    FieldCtx K = ambient_for(A, N);
    KernelBasis kb{K, {}};
    for (auto& v : linalg::nullspace(operator_matrix(A, K))) {
        Coeffs c(v.begin(), v.end());
        kb.basis.emplace_back(K, c);
    }
    return kb;
}

std::optional<FqElem> image_membership(const AdditiveOp& A, const FqElem& c, unsigned N)
{
    if (A.is_zero()) throw Error(ErrorCode::BadParameters, "zero operator");
    FieldCtx K = ambient_for(A, N);
    FqElem cc = embed(c, K);
    linalg::Vec b(cc.coeffs().begin(), cc.coeffs().end());
    auto x = linalg::solve(operator_matrix(A, K), b);
    if (!x) return std::nullopt;
    Coeffs w(x->begin(), x->end());
    return FqElem(K, w);
}

std::vector<FqElem> span_elements(const KernelBasis& k)
{
    std::vector<FqElem> out{FqElem(k.ambient)};
    const uint32_t p = k.ambient.p();
    for (auto& b : k.basis) {
        std::vector<FqElem> next;
        next.reserve(out.size() * p);
        for (auto& x : out)
            for (uint32_t t = 0; t < p; ++t) next.push_back(x + b.scale(t));
        out = std::move(next);
    }
    return out;
}

AdditiveOp palindromic(const FqPoly& f)
{
    FieldCtx K = f.ctx();
    const uint64_t p = K.p();
    std::vector<FqElem> a;
    for (auto& [k, c] : f.terms()) {
        if (k == 1) continue;   // the cX part
        uint64_t m = k - 1;
        unsigned j = 0;
        while (m > 1 && m % p == 0) {
            m /= p;
            ++j;
        }
        if (k < 2 || m != 1)
            throw Error(ErrorCode::NotInXSXForm, "monomial X^" + std::to_string(k) + " is not X^{1+p^j}");
        if (a.size() <= j) a.resize(j + 1, FqElem(K));
        a[j] = c;
    }
    if (a.size() < 2) throw Error(ErrorCode::NotInXSXForm, "needs s >= 1");
    const size_t s = a.size() - 1;
    const FqElem ias = a[s].inv();
    // (1/a_s) F^s (a_j F^j + F^{-j} a_j) = (1/a_s)(a_j^{p^s} F^{s+j} + a_j^{p^{s-j}} F^{s-j})
    std::vector<FqElem> c(2 * s + 1, FqElem(K));
    for (size_t j = 0; j <= s; ++j) {
        if (a[j].is_zero()) continue;
        c[s + j] += a[j].frobenius(long(s)) * ias;
        c[s - j] += a[j].frobenius(long(s - j)) * ias;
    }
    return AdditiveOp(K, c);
}

bool translation_test(const FqPoly& f, const FqElem& y)
{
    FieldCtx K = y.ctx();
    FqPoly fk = embed(f, K);
    FqPoly delta = fk.shift(y) - fk;
    return reduce_mod_wp(delta, ReduceMode::geometric).poly.is_zero();
}

} // namespace wr
