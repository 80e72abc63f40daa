#include "wr/bigaction.hpp"
#include "wr/error.hpp"
#include "wr/field.hpp"

namespace wr {

namespace {

BigInt pw(uint32_t p, unsigned k) { return ipow(BigInt(p), k); }

std::string rstr(const Rational& r) { return rational_str(r); }

} // namespace

const char* verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::reject: return "reject";
    case Verdict::not_applicable: return "not-applicable";
    }
    return "?";
}

Rational eq_star_bound(uint32_t p)
{
    BigInt d = BigInt(p) * p - 1;
    return Rational(4, d * d);
}

Rational eq3_sequence(uint32_t p, unsigned m)
{
    BigInt x = pw(p, m);
    return Rational(4) / eq_star_bound(p) * Rational(x, (x - 1) * (x - 1));
}

void ActionProfile::validate() const
{
    if (!is_prime_u32(p)) throw Error(ErrorCode::InvalidProfile, "p is not prime");
    if (filtration.numbering != Numbering::lower) throw Error(ErrorCode::InvalidProfile, "filtration must be lower");
    try {
        filtration.validate();
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidProfile, e.what());
    }
    if (filtration.segments.empty()) throw Error(ErrorCode::InvalidProfile, "trivial group");
    for (auto& s : filtration.segments)
        if (exact_log(s.order, p) < 0) throw Error(ErrorCode::InvalidProfile, "orders must be powers of p");
    if (group_order() != pw(p, v) * g2_order())
        throw Error(ErrorCode::InvalidProfile, "|G| = " + group_order().str() + " but p^v |G_2| = " +
                                                   (pw(p, v) * g2_order()).str());
    if (v == 0) throw Error(ErrorCode::InvalidProfile, "G_2 must be strictly smaller than G_1");
    if (g2_invariants) {
        if (g2_invariants->p != p) throw Error(ErrorCode::InvalidProfile, "invariants over another prime");
        if (g2_invariants->order() != g2_order())
            throw Error(ErrorCode::InvalidProfile, "declared G_2 invariants have order " +
                                                       g2_invariants->order().str() + ", filtration gives " +
                                                       g2_order().str());
    }
}

BigInt ActionProfile::i0() const
{
    for (auto& s : filtration.segments)
        if (s.last >= 2) return boost::multiprecision::numerator(s.last);
    return 1;
}

Report ratio_check(const ActionProfile& a)
{
    a.validate();
    Report r;
    r.g = hurwitz_genus(a.filtration);
    const BigInt G = a.group_order();
    if (r.g > 0) {
        r.ratio1 = Rational(G, r.g);
        r.ratio2 = Rational(G, r.g * r.g);
        Rational bound(2 * BigInt(a.p), BigInt(a.p) - 1);
        r.is_big = r.ratio1 > bound;
    }
    else
        r.note = "ZeroGenus";
    // g(G) of a local action is the same sum
    r.is_local_big = r.is_big;
    return r;
}

namespace {

using Hyp = std::function<std::optional<std::string>(const ActionProfile&, const Report&)>;

std::optional<std::string> big_only(const ActionProfile&, const Report& r)
{
    if (!r.is_big) return std::string("not a big action");
    return std::nullopt;
}

std::optional<std::string> eq_star(const ActionProfile& a, const Report& r)
{
    if (auto h = big_only(a, r)) return h;
    if (r.g < 2) return std::string("g < 2");
    Rational M = eq_star_bound(a.p);
    if (r.ratio2 < M) return "|G|/g^2 = " + rstr(r.ratio2) + " < M = " + rstr(M);
    return std::nullopt;
}

Hyp with_invariants(Hyp h)
{
    return [h](const ActionProfile& a, const Report& r) -> std::optional<std::string> {
        if (auto x = h(a, r)) return x;
        if (!a.g2_invariants) return std::string("G_2 invariants not declared");
        return std::nullopt;
    };
}

Hyp with_s(Hyp h)
{
    return [h](const ActionProfile& a, const Report& r) -> std::optional<std::string> {
        if (auto x = h(a, r)) return x;
        if (!a.s) return std::string("s not declared");
        return std::nullopt;
    };
}

bool cyclic(const AbelianInvariants& inv) { return inv.exps.size() == 1; }

std::vector<SieveRule> build_rules()
{
    std::vector<SieveRule> R;
    R.push_back({"cyclic-g2", "a cyclic G_2 has order p", with_invariants(big_only),
                 [](const ActionProfile& a, const Report&) {
                     const auto& inv = *a.g2_invariants;
                     bool bad = cyclic(inv) && inv.exps[0] >= 2;
                     return std::make_pair(bad, "G_2 = " + inv.str());
                 }});
    R.push_back({"small-g2-abelian", "|G_2| dividing p^3 forces G_2 abelian",
                 [](const ActionProfile& a, const Report& r) -> std::optional<std::string> {
                     if (auto h = big_only(a, r)) return h;
                     if (exact_log(a.g2_order(), a.p) > 3) return std::string("|G_2| does not divide p^3");
                     return std::nullopt;
                 },
                 [](const ActionProfile& a, const Report&) {
                     return std::make_pair(false, "|G_2| = " + a.g2_order().str() + " divides p^3");
                 }});
    R.push_back({"g2-divides-p3", "under eq* the order of G_2 divides p^3", eq_star,
                 [](const ActionProfile& a, const Report&) {
                     int k = exact_log(a.g2_order(), a.p);
                     return std::make_pair(k > 3, "|G_2| = p^" + std::to_string(k));
                 }});
    R.push_back({"g2-exponent-p", "under eq* G_2 has exponent p", with_invariants(eq_star),
                 [](const ActionProfile& a, const Report&) {
                     const auto& inv = *a.g2_invariants;
                     return std::make_pair(inv.exponent_exp() > 1,
                                           "exponent p^" + std::to_string(inv.exponent_exp()));
                 }});
    R.push_back({"g2-not-p2xp", "under eq* G_2 is not Z/p^2 x Z/p", with_invariants(eq_star),
                 [](const ActionProfile& a, const Report&) {
                     const auto& inv = *a.g2_invariants;
                     bool bad = inv.exps == std::vector<unsigned>{2, 1};
                     return std::make_pair(bad, "G_2 = " + inv.str());
                 }});
    R.push_back({"g2-order-bound", "under eq* |G_2| <= (4/M) x^2/(x-1)^2 with x = |G_2/G_{i0+1}|", eq_star,
                 [](const ActionProfile& a, const Report&) {
                     BigInt g2 = a.g2_order();
                     BigInt x = g2 / a.filtration.order_at(Rational(a.i0() + 1));
                     Rational bound = Rational(4) / eq_star_bound(a.p) * Rational(x * x, (x - 1) * (x - 1));
                     return std::make_pair(Rational(g2) > bound,
                                           "|G_2| = " + g2.str() + ", bound = " + rstr(bound) + ", x = " + x.str());
                 }});
    R.push_back({"i0-power", "i_0 = 1 + p^s", with_s(big_only),
                 [](const ActionProfile& a, const Report&) {
                     BigInt want = 1 + pw(a.p, *a.s);
                     return std::make_pair(a.i0() != want, "i_0 = " + a.i0().str() + ", 1+p^s = " + want.str());
                 }});
    R.push_back({"v-bound", "V embeds in Z(Ad_f) = (Z/p)^{2s}", with_s(big_only),
                 [](const ActionProfile& a, const Report&) {
                     return std::make_pair(a.v > 2 * *a.s,
                                           "v = " + std::to_string(a.v) + ", 2s = " + std::to_string(2 * *a.s));
                 }});
    R.push_back({"cyclic-p2-order", "under eq* a cyclic G_2 of order p^2 needs |G| <= p^{2+2s}",
                 with_s(with_invariants([](const ActionProfile& a, const Report& r) -> std::optional<std::string> {
                     if (auto h = eq_star(a, r)) return h;
                     if (a.g2_invariants && a.g2_invariants->exps != std::vector<unsigned>{2})
                         return std::string("G_2 is not cyclic of order p^2");
                     return std::nullopt;
                 })),
                 [](const ActionProfile& a, const Report&) {
                     BigInt cap = pw(a.p, 2 + 2 * *a.s);
                     return std::make_pair(a.group_order() > cap,
                                           "|G| = " + a.group_order().str() + ", p^{2+2s} = " + cap.str());
                 }});
    return R;
}

} // namespace

const std::vector<SieveRule>& sieve_rules()
{
    static const std::vector<SieveRule> rules = build_rules();
    return rules;
}

std::vector<RuleResult> sieve(const ActionProfile& a, const Report& r, bool strict)
{
    std::vector<RuleResult> out;
    for (auto& rule : sieve_rules()) {
        RuleResult res{rule.id, Verdict::not_applicable, {}};
        if (auto why = rule.hypothesis(a, r)) {
            if (strict && why->find("not declared") != std::string::npos)
                throw Error(ErrorCode::MissingDeclaration, rule.id + ": " + *why);
            res.witness = *why;
        } else {
            auto [bad, w] = rule.rejects(a, r);
            res.verdict = bad ? Verdict::reject : Verdict::pass;
            res.witness = w;
        }
        out.push_back(std::move(res));
    }
    return out;
}

Report analyze_profile(const ActionProfile& a, bool strict)
{
    Report r = ratio_check(a);
    r.verdicts = sieve(a, r, strict);
    return r;
}

} // namespace wr
