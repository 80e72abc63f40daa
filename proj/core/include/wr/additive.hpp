#pragma once

#include "wr/field.hpp"

#include <optional>
#include <vector>

namespace wr {

// sum_j a_j F^j, i.e. the polynomial sum_j a_j X^{p^j}
class AdditiveOp {
public:
    AdditiveOp() = default;
    AdditiveOp(FieldCtx ctx, std::vector<FqElem> coeffs);
    static AdditiveOp frobenius_power(FieldCtx ctx, unsigned k);   // F^k
    static AdditiveOp wp(FieldCtx ctx);                            // F - 1

    FieldCtx ctx() const { return ctx_; }
    const std::vector<FqElem>& coeffs() const { return a_; }
    int degree() const { return int(a_.size()) - 1; }   // -1 for zero
    bool is_zero() const { return a_.empty(); }
    bool separable() const { return !a_.empty() && !a_[0].is_zero(); }

    FqElem operator()(const FqElem& x) const;   // x may live in an extension
    FqPoly as_poly() const;
    AdditiveOp operator+(const AdditiveOp& o) const;
    AdditiveOp operator-(const AdditiveOp& o) const;
    AdditiveOp scaled(const FqElem& c) const;   // c * A
    bool operator==(const AdditiveOp& o) const { return ctx_ == o.ctx_ && a_ == o.a_; }

    std::string str() const;

private:
    FieldCtx ctx_;
    std::vector<FqElem> a_;
};

struct KernelBasis {
    FieldCtx ambient;
    std::vector<FqElem> basis;
};

AdditiveOp twisted_compose(const AdditiveOp& A, const AdditiveOp& B);

// Least N, a multiple of e, such that F^N = 1 modulo A on the right, i.e.
// every root of A lies in F_{p^N}. Throws ResourceLimit past cap.
unsigned splitting_degree(const AdditiveOp& A, unsigned cap = 256);

KernelBasis linearize_kernel(const AdditiveOp& A, unsigned N);
std::optional<FqElem> image_membership(const AdditiveOp& A, const FqElem& c, unsigned N);

// all F_p-combinations of the basis
std::vector<FqElem> span_elements(const KernelBasis& k);

AdditiveOp palindromic(const FqPoly& f);
bool translation_test(const FqPoly& f, const FqElem& y);

} // namespace wr
