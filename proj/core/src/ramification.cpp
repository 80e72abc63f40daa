#include "wr/ramification.hpp"

#include <algorithm>

namespace wr {

namespace {

bool integral(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }
BigInt as_int(const Rational& r) { return boost::multiprecision::numerator(r); }

} // namespace

void Filtration::validate() const
{
    Rational prev = 0;
    BigInt prev_order = 0;
    for (size_t k = 0; k < segments.size(); ++k) {
        const auto& s = segments[k];
        if (s.order < 2) throw Error(ErrorCode::InvalidFiltration, "segment order must exceed 1");
        if (k == 0 && s.last < 1) throw Error(ErrorCode::InvalidFiltration, "G_0 != G_1 (tame part)");
        if (k > 0 && s.last <= prev) throw Error(ErrorCode::InvalidFiltration, "break indices not increasing");
        if (k > 0 && (s.order >= prev_order || prev_order % s.order != 0))
            throw Error(ErrorCode::InvalidFiltration, "orders must strictly decrease by divisors");
        if (numbering == Numbering::lower && !integral(s.last))
            throw Error(ErrorCode::NonIntegralLowerBreaks, "lower break " + rational_str(s.last));
        prev = s.last;
        prev_order = s.order;
    }
}

BigInt Filtration::order_at(const Rational& t) const
{
    for (auto& s : segments)
        if (t <= s.last) return s.order;
    return 1;
}

std::vector<Rational> Filtration::breaks() const
{
    std::vector<Rational> b;
    for (auto& s : segments) b.push_back(s.last);
    return b;
}

Filtration normalized(Filtration f)
{
    std::vector<Segment> out;
    for (auto& s : f.segments) {
        if (s.order == 1) break;
        if (!out.empty() && out.back().order == s.order)
            out.back().last = s.last;
        else
            out.push_back(s);
    }
    f.segments = std::move(out);
    return f;
}

Filtration herbrand_convert(const Filtration& f, Numbering target)
{
    f.validate();
    if (f.numbering == target) return f;
    Filtration r{target, {}};
    const BigInt g0 = f.group_order();
    Rational prev_src = 0, prev_dst = 0;
    for (auto& s : f.segments) {
        Rational len = s.last - prev_src;
        Rational mapped = target == Numbering::upper ? len * Rational(s.order, g0) : len * Rational(g0, s.order);
        prev_dst += mapped;
        prev_src = s.last;
        if (target == Numbering::lower && !integral(prev_dst))
            throw Error(ErrorCode::NonIntegralLowerBreaks, "lower break " + rational_str(prev_dst));
        r.segments.push_back({prev_dst, s.order});
    }
    return r;
}

BigInt hurwitz_sum(const Filtration& lower)
{
    if (lower.numbering != Numbering::lower)
        throw Error(ErrorCode::InvalidFiltration, "hurwitz_genus needs lower numbering");
    lower.validate();
    BigInt sum = 0, prev = 0;
    for (auto& s : lower.segments) {
        BigInt last = as_int(s.last);
        BigInt from = std::max(prev, BigInt(1));
        if (last > from) sum += (last - from) * (s.order - 1);
        prev = last;
    }
    return sum;
}

BigInt hurwitz_genus(const Filtration& lower)
{
    BigInt s = hurwitz_sum(lower);
    if (s % 2 != 0) throw Error(ErrorCode::OddSum, "2g = " + s.str());
    return s / 2;
}

namespace {

// levels merged so that conductors strictly increase
std::vector<TowerLevel> checked_ladder(const std::vector<TowerLevel>& levels)
{
    if (levels.empty()) throw Error(ErrorCode::InconsistentLadder, "empty ladder");
    std::vector<TowerLevel> out;
    BigInt prev = 1;
    uint64_t prevc = 0;
    for (auto& l : levels) {
        if (l.degree < prev || l.degree % prev != 0)
            throw Error(ErrorCode::InconsistentLadder, "degrees not multiplicative at " + l.label);
        if (l.conductor < prevc) throw Error(ErrorCode::InconsistentLadder, "conductors decrease at " + l.label);
        if (l.conductor < 2 && l.degree > 1)
            throw Error(ErrorCode::InconsistentLadder, "ramified level with conductor < 2");
        if (!out.empty() && out.back().conductor == l.conductor)
            out.back() = l;
        else if (l.degree > prev || out.empty())
            out.push_back(l);
        prev = l.degree;
        prevc = l.conductor;
    }
    return out;
}

} // namespace

TowerGenus tower_genus(const std::vector<TowerLevel>& levels)
{
    auto lad = checked_ladder(levels);
    TowerGenus t;
    t.degree = lad.back().degree;
    t.top_conductor = lad.back().conductor;
    // d_j is constant between consecutive conductors
    BigInt cur = 1;
    uint64_t j = 0;
    for (auto& l : lad) {
        t.degree_sum += cur * BigInt(l.conductor - j);
        j = l.conductor;
        cur = l.degree;
    }
    BigInt twice = 2 + t.degree * BigInt(t.top_conductor) - 2 * t.degree - t.degree_sum;
    if (twice % 2 != 0) throw Error(ErrorCode::OddSum, "tower genus not integral");
    t.genus = twice / 2;
    return t;
}

Filtration ladder_filtration(const std::vector<TowerLevel>& levels)
{
    auto lad = checked_ladder(levels);
    const BigInt D = lad.back().degree;
    Filtration f{Numbering::upper, {}};
    BigInt below = 1;
    for (auto& l : lad) {
        if (l.degree == 1) continue;
        f.segments.push_back({Rational(BigInt(l.conductor - 1)), D / below});
        below = l.degree;
    }
    return f;
}

BigInt quotient_genus(const Filtration& lower, const std::vector<BigInt>& sub_orders)
{
    if (lower.numbering != Numbering::lower)
        throw Error(ErrorCode::InvalidFiltration, "quotient_genus needs lower numbering");
    lower.validate();
    if (sub_orders.size() != lower.segments.size())
        throw Error(ErrorCode::NotASubgroupProfile, "one subgroup order per segment");
    BigInt prevh = sub_orders.empty() ? BigInt(0) : sub_orders.front();
    for (size_t k = 0; k < sub_orders.size(); ++k) {
        const BigInt& h = sub_orders[k];
        if (h < 1 || lower.segments[k].order % h != 0 || h > prevh || prevh % h != 0)
            throw Error(ErrorCode::NotASubgroupProfile, "bad order at segment " + std::to_string(k));
        prevh = h;
    }
    const BigInt H = sub_orders.empty() ? BigInt(1) : sub_orders.front();
    BigInt sum = 0, prev = 0;
    for (size_t k = 0; k < sub_orders.size(); ++k) {
        BigInt last = as_int(lower.segments[k].last);
        BigInt from = std::max(prev, BigInt(1));
        if (last > from) sum += (last - from) * (lower.segments[k].order - sub_orders[k]);
        prev = last;
    }
    if (sum % (2 * H) != 0) throw Error(ErrorCode::OddSum, "quotient genus not integral");
    return sum / (2 * H);
}

bool hasse_arf_check(const Filtration& f, bool abelian)
{
    (void)abelian;
    Filtration up;
    try {
        up = herbrand_convert(f, Numbering::upper);
    } catch (const Error&) {
        return false;
    }
    for (auto& s : up.segments)
        if (!integral(s.last)) return false;
    return true;
}

} // namespace wr
