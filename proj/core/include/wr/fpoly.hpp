#pragma once

// Dense polynomials over F_p, coefficients low to high. Small helpers for
// modulus search and field inversion; nothing here is performance critical.

#include <cstdint>
#include <vector>

namespace wr::fp {

using Poly = std::vector<uint32_t>;

uint32_t inv_mod(uint32_t a, uint32_t p);
void trim(Poly& a);
int deg(const Poly& a);   // -1 for zero
Poly add(const Poly& a, const Poly& b, uint32_t p);
Poly sub(const Poly& a, const Poly& b, uint32_t p);
Poly mul(const Poly& a, const Poly& b, uint32_t p);
void divmod(const Poly& a, const Poly& b, uint32_t p, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& b, uint32_t p);
Poly gcd(Poly a, Poly b, uint32_t p);   // monic
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, uint32_t p);
Poly powmod(Poly a, uint64_t k, const Poly& m, uint32_t p);
// returns s with s*a = 1 mod m (a, m coprime)
Poly invmod(const Poly& a, const Poly& m, uint32_t p);
// Ben-Or test
bool is_irreducible(const Poly& f, uint32_t p);

} // namespace wr::fp
