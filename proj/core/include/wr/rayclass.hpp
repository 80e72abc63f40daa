#pragma once

#include "wr/bigint.hpp"
#include "wr/field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wr {

// Finite abelian p-group as exponents of its cyclic factors, descending.
struct AbelianInvariants {
    uint32_t p = 2;
    std::vector<unsigned> exps;

    unsigned order_exp() const;
    unsigned exponent_exp() const { return exps.empty() ? 0 : exps.front(); }
    BigInt order() const { return ipow(BigInt(p), order_exp()); }
    std::string str() const;   // e.g. "[25, 5, 5]"
    bool operator==(const AbelianInvariants& o) const { return p == o.p && exps == o.exps; }
};

// invariants from b_k = log_p |Q^{p^k}|, k = 0, 1, ...
AbelianInvariants invariants_from_power_orders(uint32_t p, const std::vector<unsigned>& b);

struct GsRow {
    uint64_t m = 0;
    unsigned order_exp = 0;   // |G_S(m)| = p^order_exp
    AbelianInvariants inv;
    BigInt N_m;               // 1 + q |G_S(m)|
};

struct GsOptions {
    unsigned jobs = 1;
    bool invariants = true;
    uint64_t resource_cap = 0;   // max m*e; 0 reads WR_RESOURCE_CAP or uses 2048
};

GsRow gs_invariants(uint32_t p, unsigned e, uint64_t m, const GsOptions& opt = {});
std::vector<GsRow> gs_table(uint32_t p, unsigned e, uint64_t m_max, const GsOptions& opt = {});
uint64_t find_m2(uint32_t p, unsigned e, const GsOptions& opt = {});
uint64_t m2_closed_form(uint32_t p, unsigned e);
uint64_t trivial_range_bound(uint32_t p, unsigned e);   // r + 1

// Breadth-first closure inside (1 + Z F_q[Z]) / (1 + Z^m); q^{m-1} <= 2^20.
AbelianInvariants brute_subgroup_oracle(uint32_t p, unsigned e, uint64_t m);

// WR_RESOURCE_CAP, default 2048
uint64_t default_resource_cap();

} // namespace wr
