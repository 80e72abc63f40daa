#pragma once

#include "wr/field.hpp"

#include <vector>

namespace wr {

// Truncated Witt vector [x_0, ..., x_{n-1}] over F_q.
struct WittVec {
    FieldCtx ctx;
    std::vector<FqElem> coords;

    WittVec() = default;
    WittVec(FieldCtx k, unsigned n);   // zero
    WittVec(FieldCtx k, std::vector<FqElem> c);
    static WittVec one(FieldCtx k, unsigned n);
    static WittVec teichmuller(const FqElem& a, unsigned n);
    static WittVec from_int(FieldCtx k, unsigned n, int64_t v);

    unsigned n() const { return unsigned(coords.size()); }
    bool is_zero() const;
    bool operator==(const WittVec& o) const { return ctx == o.ctx && coords == o.coords; }
    bool operator!=(const WittVec& o) const { return !(*this == o); }
    std::string str() const;
};

enum class WittOp { add, sub, mul };

WittVec witt_add_mul(const WittVec& u, const WittVec& v, WittOp which);
inline WittVec operator+(const WittVec& u, const WittVec& v) { return witt_add_mul(u, v, WittOp::add); }
inline WittVec operator-(const WittVec& u, const WittVec& v) { return witt_add_mul(u, v, WittOp::sub); }
inline WittVec operator*(const WittVec& u, const WittVec& v) { return witt_add_mul(u, v, WittOp::mul); }
WittVec witt_neg(const WittVec& u);

WittVec witt_frobenius(const WittVec& u, long k = 1);
WittVec witt_verschiebung(const WittVec& u);   // [0, u_0, ..., u_{n-2}]
WittVec witt_truncate(const WittVec& u, unsigned n);
WittVec witt_wp(const WittVec& u);             // F(u) - u
WittVec witt_trace(const WittVec& u);          // sum of F^i(u), i < e

// Ghost component w_k of the canonical lifts, as residues mod p^{k+1}
// of the Galois ring coefficients (test oracle support).
std::vector<uint64_t> witt_ghost(const WittVec& u, unsigned k);

// psi(a,b) = (a^p + b^p - (a+b)^p)/p = sum_{i=1}^{p-1} ((-1)^i/i) a^i b^{p-i}
FqElem witt_psi(const FqElem& a, const FqElem& b);
// c(0) = 0, c(i+1) = c(i) + (1 + i^p - (1+i)^p)/p mod p
uint32_t witt_c(uint64_t i, uint32_t p);

// Witt vectors whose coordinates are polynomials over F_q.
struct WittPoly {
    FieldCtx ctx;
    std::vector<FqPoly> coords;

    WittPoly() = default;
    WittPoly(FieldCtx k, unsigned n);
    WittPoly(FieldCtx k, std::vector<FqPoly> c);
    static WittPoly constant(const WittVec& v);

    unsigned n() const { return unsigned(coords.size()); }
    bool is_zero() const;
    bool operator==(const WittPoly& o) const { return ctx == o.ctx && coords == o.coords; }
    WittVec eval(const FqElem& y) const;
};

WittPoly witt_poly_op(const WittPoly& u, const WittPoly& v, WittOp which);
inline WittPoly operator+(const WittPoly& u, const WittPoly& v) { return witt_poly_op(u, v, WittOp::add); }
inline WittPoly operator-(const WittPoly& u, const WittPoly& v) { return witt_poly_op(u, v, WittOp::sub); }
inline WittPoly operator*(const WittPoly& u, const WittPoly& v) { return witt_poly_op(u, v, WittOp::mul); }
WittPoly witt_poly_frobenius(const WittPoly& u);

} // namespace wr
