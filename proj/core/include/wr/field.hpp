#pragma once

#include "wr/bigint.hpp"
#include "wr/error.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace wr {

struct FieldData {
    uint32_t p = 0;
    unsigned e = 0;
    std::vector<uint32_t> modulus;             // e+1 coefficients, low to high, monic
    std::vector<std::vector<uint32_t>> frob;   // frob[j] = (x^j)^p in the power basis
    uint64_t q = 0;                            // p^e, or 0 when it does not fit
};

// Handle to an immutable field description. Contexts live for the whole
// process, so copying the handle is free and comparison is by identity.
class FieldCtx {
public:
    FieldCtx() = default;
    explicit FieldCtx(const FieldData* d) : d_(d) {}

    uint32_t p() const { return d_->p; }
    unsigned e() const { return d_->e; }
    const std::vector<uint32_t>& modulus() const { return d_->modulus; }
    uint64_t q() const { return d_->q; }
    BigInt q_big() const;
    const FieldData* data() const { return d_; }
    bool valid() const { return d_ != nullptr; }

    bool operator==(const FieldCtx& o) const { return d_ == o.d_; }
    bool operator!=(const FieldCtx& o) const { return d_ != o.d_; }

private:
    const FieldData* d_ = nullptr;
};

bool is_prime_u32(uint64_t n);

// F_{p^e} with the lexicographically least monic irreducible modulus.
FieldCtx make_field(uint64_t p, unsigned e);
// Same without the size bound on p^e; used for splitting fields of kernels.
FieldCtx make_extension_field(uint32_t p, unsigned n);

using Coeffs = boost::container::small_vector<uint32_t, 8>;

class FqElem {
public:
    FqElem() = default;
    explicit FqElem(FieldCtx ctx);                       // zero
    FqElem(FieldCtx ctx, Coeffs c);
    static FqElem from_int(FieldCtx ctx, int64_t v);     // image of an integer
    static FqElem from_index(FieldCtx ctx, uint64_t idx); // base-p digits, low first
    static FqElem gen(FieldCtx ctx);                     // class of x

    FieldCtx ctx() const { return ctx_; }
    const Coeffs& coeffs() const { return c_; }
    uint32_t operator[](unsigned i) const { return c_[i]; }

    bool is_zero() const;
    bool is_one() const;
    uint64_t index() const;          // inverse of from_index
    bool in_prime_field() const;

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator-() const;
    FqElem operator*(const FqElem& o) const;
    FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
    FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
    FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
    FqElem scale(uint32_t k) const;  // multiplication by an element of F_p

    bool operator==(const FqElem& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
    bool operator!=(const FqElem& o) const { return !(*this == o); }

    FqElem inv() const;
    FqElem pow(const BigInt& k) const;
    FqElem pow(uint64_t k) const;
    FqElem frobenius(long k = 1) const;   // x^{p^k}; negative k gives roots
    FqElem pth_root() const { return frobenius(-1); }

    std::string str() const;

private:
    FieldCtx ctx_;
    Coeffs c_;
};

// Order used for every deterministic "least element" choice: coefficient
// vectors compared from the constant term upwards.
bool lex_less(const FqElem& a, const FqElem& b);

// sum of x^{p^{d i}} for i < e/d
FqElem frobenius_trace(const FqElem& x, unsigned sub_degree);

// Calls fn on every element of the field, in index order.
void for_each_element(FieldCtx ctx, const std::function<void(const FqElem&)>& fn);

// Image of x under the cached embedding F_{p^d} -> F_{p^N}, d | N.
FqElem embed(const FqElem& x, FieldCtx target);

// Roots in ctx of a monic polynomial (dense coefficients over ctx, low to
// high) that splits into distinct linear factors there.
std::vector<FqElem> split_roots(const std::vector<FqElem>& monic);

class FqPoly {
public:
    using Term = std::pair<uint64_t, FqElem>;

    FqPoly() = default;
    explicit FqPoly(FieldCtx ctx) : ctx_(ctx) {}
    FqPoly(FieldCtx ctx, std::vector<Term> terms);   // normalizes
    static FqPoly monomial(const FqElem& a, uint64_t exp);
    static FqPoly constant(const FqElem& a) { return monomial(a, 0); }
    static FqPoly x(FieldCtx ctx);

    FieldCtx ctx() const { return ctx_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    uint64_t degree() const;       // 0 for the zero polynomial
    FqElem coeff(uint64_t exp) const;
    FqElem leading() const;
    FqElem constant_term() const { return coeff(0); }

    FqPoly operator+(const FqPoly& o) const;
    FqPoly operator-(const FqPoly& o) const;
    FqPoly operator-() const;
    FqPoly operator*(const FqPoly& o) const;
    FqPoly operator*(const FqElem& a) const;
    FqPoly& operator+=(const FqPoly& o) { return *this = *this + o; }
    FqPoly& operator-=(const FqPoly& o) { return *this = *this - o; }
    bool operator==(const FqPoly& o) const;
    bool operator!=(const FqPoly& o) const { return !(*this == o); }

    FqPoly pow(uint64_t k) const;
    FqPoly frobenius() const;                  // coefficient-wise and X -> X^p
    FqPoly map_coeffs(const std::function<FqElem(const FqElem&)>& fn, FieldCtx target) const;

    FqElem eval(const FqElem& y) const;
    FqPoly compose(const FqPoly& g) const;     // f(g(X)), fully expanded
    FqPoly shift(const FqElem& y) const;       // f(X + y)

    std::string str() const;

private:
    void normalize();
    FieldCtx ctx_;
    std::vector<Term> t_;
};

// f over F_{p^d} viewed over the larger field target
FqPoly embed(const FqPoly& f, FieldCtx target);

} // namespace wr
