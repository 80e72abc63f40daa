#pragma once

#include "wr/additive.hpp"
#include "wr/ramification.hpp"
#include "wr/reduce.hpp"
#include "wr/witt.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wr {

// Cover of the affine line Phi(W) = rhs with Phi = sum_j op[j] F^j acting on
// W_n. WittWp is op = [-1, 1]; an additive operator A is the case n = 1.
struct CoverSpec {
    enum class Kind { witt, additive, witt_additive };

    Kind kind = Kind::witt;
    FieldCtx ctx;
    unsigned n = 1;
    std::vector<WittVec> op;
    WittPoly rhs;
    std::string label;

    static CoverSpec witt(const WittPoly& rhs, std::string label = {});
    static CoverSpec artin_schreier(const FqPoly& f, std::string label = {});
    static CoverSpec additive(const AdditiveOp& A, const FqPoly& f, std::string label = {});
    static CoverSpec witt_additive(std::vector<WittVec> coeffs, const WittPoly& rhs, std::string label = {});

    bool is_wp() const;
    AdditiveOp additive_op() const;   // n == 1 only
    unsigned op_degree() const { return unsigned(op.size()) - 1; }
};

WittVec apply_operator(const CoverSpec& c, const WittVec& x);

// Witt polynomial with every coordinate p-power free; in geometric mode the
// constants are removed as well.
WittPoly reduce_witt(const WittPoly& f, ReduceMode mode);
// 1 + max_i p^{n-1-i} deg(f_i) over the nonzero coordinates of a reduced
// vector; 0 when it is zero.
uint64_t garuti_conductor(const WittPoly& reduced);

// Additive maps of W_n(F_q) that preserve the V-filtration.
using WittMap = std::function<WittVec(const WittVec&)>;

struct LayeredKernel {
    BigInt order;
    std::vector<WittVec> generators;      // generate the kernel, not minimal
    std::vector<FqElem> ptorsion_basis;   // c with V^{n-1}[c] in the kernel
};

LayeredKernel layered_kernel(const WittMap& phi, FieldCtx ctx, unsigned n);
std::optional<WittVec> layered_solve(const WittMap& phi, const WittVec& target, unsigned depth = 0);
// all group elements spanned by gens (cap on the size)
std::vector<WittVec> enumerate_subgroup(const std::vector<WittVec>& gens, FieldCtx ctx, unsigned n,
                                        size_t cap = size_t(1) << 22);

// beta with beta*Phi = wp o L for some additive L
WittVec dual_operator(const CoverSpec& c, const WittVec& beta);

struct CharacterInfo {
    WittVec beta;
    WittPoly reduced;        // red(beta * rhs)
    uint64_t conductor = 0;  // 0 for the trivial character
};

struct CoverAnalysis {
    BigInt degree;
    uint64_t conductor = 0;
    BigInt genus;
    std::vector<TowerLevel> ladder;   // d_j counted from the characters
};

BigInt kernel_order(const CoverSpec& c);
std::vector<WittVec> character_generators(const CoverSpec& c);
CharacterInfo character(const CoverSpec& c, const WittVec& beta);
uint64_t conductor(const CoverSpec& c);
CoverAnalysis analyze(const CoverSpec& c);

bool splits_at(const CoverSpec& c, const FqElem& y);
// the same test by solving Phi(x) = rhs(y) in W_n(F_q)
bool splits_at_by_solving(const CoverSpec& c, const FqElem& y);
struct SplitSummary {
    uint64_t split = 0, total = 0;
    std::string str() const;
};
SplitSummary split_summary(const CoverSpec& c);

// Cumulative (degree, conductor) ladder of the compositum. The degree
// increment of each level is |ker| / |intersection of p-torsion characters|,
// which is exact when the intersection of character groups is elementary.
std::vector<TowerLevel> tower_compose(const std::vector<CoverSpec>& levels);

// b_k = log_p |p^k Q| for the character group Q of the compositum, k >= 0.
// Witt length at most 2.
std::vector<unsigned> character_power_orders(const std::vector<CoverSpec>& levels);

CoverSpec base_change(const CoverSpec& c, const AdditiveOp& S);

struct Family {
    std::vector<CoverSpec> covers;
    std::vector<std::string> notes;
};

// kind: lauter-even | lauter-odd | exponent-pn | table | table-row
struct FamilyParams {
    uint32_t p = 0;
    unsigned e = 0;
    unsigned n = 2;      // exponent-pn
    uint64_t m = 0;      // table-row
};
Family family_build(const std::string& kind, const FamilyParams& params);
// least nonzero gamma with gamma^r + gamma = 0, r = p^{e/2}
FqElem gamma_parameter(FieldCtx ctx);

} // namespace wr
