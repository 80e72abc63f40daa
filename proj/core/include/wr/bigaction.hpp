#pragma once

#include "wr/ramification.hpp"
#include "wr/rayclass.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace wr {

struct ActionProfile {
    uint32_t p = 2;
    Filtration filtration;                            // lower numbering at infinity
    unsigned v = 0;                                   // G/G_2 = (Z/p)^v
    std::optional<AbelianInvariants> g2_invariants;   // declared
    std::optional<unsigned> s;                        // i_0 = 1 + p^s

    // throws InvalidProfile
    void validate() const;
    BigInt group_order() const { return filtration.group_order(); }
    BigInt g2_order() const { return filtration.order_at(Rational(2)); }
    // last index with G_i = G_2
    BigInt i0() const;
};

enum class Verdict { pass, reject, not_applicable };
const char* verdict_name(Verdict v);

struct RuleResult {
    std::string rule;
    Verdict verdict = Verdict::not_applicable;
    std::string witness;
};

struct Report {
    BigInt g;
    Rational ratio1, ratio2;   // |G|/g, |G|/g^2; zero when g = 0
    bool is_big = false;
    bool is_local_big = false;
    std::string note;          // "ZeroGenus" when g = 0
    std::vector<RuleResult> verdicts;
};

// Rules are data: a hypothesis and a rejection test over the profile and
// its report. A rule whose hypothesis fails, or whose inputs were not
// declared, is not applicable.
struct SieveRule {
    std::string id;
    std::string statement;
    std::function<std::optional<std::string>(const ActionProfile&, const Report&)> hypothesis;   // nullopt: holds
    std::function<std::pair<bool, std::string>(const ActionProfile&, const Report&)> rejects;
};

const std::vector<SieveRule>& sieve_rules();

Report ratio_check(const ActionProfile& a);
// strict: a rule missing g2_invariants or s throws MissingDeclaration
// instead of reporting not-applicable
std::vector<RuleResult> sieve(const ActionProfile& a, const Report& r, bool strict = false);
Report analyze_profile(const ActionProfile& a, bool strict = false);

// M = 4/(p^2-1)^2
Rational eq_star_bound(uint32_t p);
// A_m = (4/M) p^m / (p^m - 1)^2
Rational eq3_sequence(uint32_t p, unsigned m);

} // namespace wr
