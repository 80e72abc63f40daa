#include "support.hpp"

#include <doctest.h>

using namespace wr;
using namespace wr::test;

namespace {

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

// random lower filtration of a p-group with integral breaks
Filtration random_lower(uint32_t p)
{
    std::uniform_int_distribution<int> nseg(1, 4), step(1, 6), drop(1, 2);
    Filtration f{Numbering::lower, {}};
    int k = nseg(rng());
    int exp = 0;
    std::vector<int> drops;
    for (int i = 0; i < k; ++i) drops.push_back(drop(rng())), exp += drops.back();
    int64_t last = 0;
    for (int i = 0; i < k; ++i) {
        last += step(rng());
        f.segments.push_back({Rational(last), ipow(BigInt(p), unsigned(exp))});
        exp -= drops[size_t(i)];
    }
    return f;
}

} // namespace

TEST_SUITE("ramification")
{
    TEST_CASE("Hurwitz genus of the extraspecial profile")
    {
        CHECK(hurwitz_genus(lower({{1, 27}, {4, 3}})) == 3);
        CHECK(hurwitz_sum(lower({{1, 27}, {4, 3}})) == 6);
    }

    TEST_CASE("Herbrand round trip")
    {
        for (uint32_t p : {2u, 3u, 5u})
            for (int t = 0; t < 100; ++t) {
                Filtration f = random_lower(p);
                Filtration u = herbrand_convert(f, Numbering::upper);
                CHECK(u.numbering == Numbering::upper);
                CHECK(u.group_order() == f.group_order());
                Filtration back = herbrand_convert(u, Numbering::lower);
                CHECK(back == f);
            }
    }

    TEST_CASE("phi(m) + 1 = (1/|H_0|) sum_{i<=m} |H_i|")
    {
        for (uint32_t p : {2u, 3u})
            for (int t = 0; t < 50; ++t) {
                Filtration f = random_lower(p);
                Filtration u = herbrand_convert(f, Numbering::upper);
                for (size_t k = 0; k < f.segments.size(); ++k) {
                    int64_t m = int64_t(boost::multiprecision::numerator(f.segments[k].last));
                    Rational sum = 0;
                    for (int64_t i = 0; i <= m; ++i) sum += Rational(f.order_at(Rational(i)));
                    CHECK(u.segments[k].last + 1 == sum / Rational(f.group_order()));
                }
            }
    }

    TEST_CASE("Hasse-Arf")
    {
        // an abelian tower has integral upper breaks
        auto ladder = tower_compose(family_build("lauter-even", {3, 2, 2, 0}).covers);
        Filtration u = ladder_filtration(ladder);
        CHECK(hasse_arf_check(u));
        CHECK(hasse_arf_check(herbrand_convert(u, Numbering::lower)));
        // extraspecial group of order 27: upper break 4/3 after 1
        Filtration ex = lower({{1, 27}, {4, 3}});
        CHECK(!hasse_arf_check(ex));
        CHECK(!hasse_arf_check(ex, false));
        CHECK(!hasse_arf_check(lower({{1, 9}, {2, 3}})));
        CHECK(hasse_arf_check(lower({{5, 9}})));
    }

    TEST_CASE("filtration errors")
    {
        CHECK(code_of([] { lower({{1, 9}, {3, 9}}).validate(); }) == ErrorCode::InvalidFiltration);
        CHECK(code_of([] { lower({{3, 9}, {2, 3}}).validate(); }) == ErrorCode::InvalidFiltration);
        CHECK(code_of([] { lower({{1, 8}, {3, 3}}).validate(); }) == ErrorCode::InvalidFiltration);
        CHECK(code_of([] { lower({{0, 9}}).validate(); }) == ErrorCode::InvalidFiltration);
        Filtration frac{Numbering::lower, {{Rational(3, 2), BigInt(4)}}};
        CHECK(code_of([&] { frac.validate(); }) == ErrorCode::NonIntegralLowerBreaks);
        // 2g = 2 * 2 = 4 is fine, 2g = 1 * 1 is odd
        CHECK(code_of([] { hurwitz_genus(lower({{2, 2}})); }) == ErrorCode::OddSum);
        Filtration up{Numbering::upper, {{Rational(1), BigInt(9)}, {Rational(3, 2), BigInt(3)}}};
        CHECK(code_of([&] { herbrand_convert(up, Numbering::lower); }) == ErrorCode::NonIntegralLowerBreaks);
        CHECK(code_of([] { tower_genus({}); }) == ErrorCode::InconsistentLadder);
        CHECK(code_of([] { tower_genus({{BigInt(9), 5, "a"}, {BigInt(6), 7, "b"}}); }) ==
              ErrorCode::InconsistentLadder);
        CHECK(code_of([] { tower_genus({{BigInt(9), 5, "a"}, {BigInt(27), 4, "b"}}); }) ==
              ErrorCode::InconsistentLadder);
    }

    TEST_CASE("tower genus of one Artin-Schreier level")
    {
        for (uint32_t p : {2u, 3u, 5u})
            for (uint64_t m : {2, 3, 4, 6, 8}) {
                if ((m - 1) % p == 0) continue;
                auto tg = tower_genus({{BigInt(p), m, "as"}});
                CHECK(tg.genus == BigInt((p - 1) * (m - 2) / 2));
            }
    }

    TEST_CASE("two routes to the genus agree on families and table rows")
    {
        std::vector<std::vector<CoverSpec>> towers;
        towers.push_back(family_build("table", {5, 4, 2, 0}).covers);
        towers.push_back(family_build("lauter-even", {5, 4, 2, 0}).covers);
        towers.push_back(family_build("lauter-even", {3, 2, 2, 0}).covers);
        towers.push_back(family_build("lauter-odd", {2, 3, 2, 0}).covers);
        towers.push_back(family_build("exponent-pn", {3, 2, 2, 0}).covers);
        for (auto& c : family_build("table", {5, 4, 2, 0}).covers) towers.push_back({c});
        for (auto& t : towers) {
            auto ladder = tower_compose(t);
            Filtration low = herbrand_convert(ladder_filtration(ladder), Numbering::lower);
            CHECK(hurwitz_genus(low) == tower_genus(ladder).genus);
            CHECK(hasse_arf_check(ladder_filtration(ladder)));
            if (t.size() == 1) CHECK(analyze(t[0]).genus == tower_genus(ladder).genus);
        }
    }

    TEST_CASE("quotient genus")
    {
        Filtration f = lower({{1, 27}, {4, 3}});
        // H = G gives the line, H trivial gives the curve itself
        CHECK(quotient_genus(f, {BigInt(27), BigInt(3)}) == 0);
        CHECK(quotient_genus(f, {BigInt(1), BigInt(1)}) == 3);
        // H = G_2 of order 3 contains every G_i, i >= 2
        CHECK(quotient_genus(f, {BigInt(3), BigInt(3)}) == 0);
        CHECK(code_of([&] { quotient_genus(f, {BigInt(27)}); }) == ErrorCode::NotASubgroupProfile);
        CHECK(code_of([&] { quotient_genus(f, {BigInt(3), BigInt(9)}); }) == ErrorCode::NotASubgroupProfile);
    }

    TEST_CASE("quotient genus against the pushed-forward filtration")
    {
        // G^u H / H has order |G^u| / |H cap G^u|
        auto oracle = [](const Filtration& low, const std::vector<BigInt>& sub) {
            Filtration up = herbrand_convert(low, Numbering::upper);
            Filtration q{Numbering::upper, {}};
            for (size_t k = 0; k < up.segments.size(); ++k)
                q.segments.push_back({up.segments[k].last, up.segments[k].order / sub[k]});
            q = normalized(q);
            if (q.segments.empty()) return BigInt(0);
            return hurwitz_genus(herbrand_convert(q, Numbering::lower));
        };
        Filtration f = lower({{3, 4}, {5, 2}});
        CHECK(quotient_genus(f, {BigInt(2), BigInt(2)}) == 1);
        CHECK(oracle(f, {BigInt(2), BigInt(2)}) == 1);
        Filtration g = lower({{1, 27}, {4, 3}});
        CHECK(quotient_genus(g, {BigInt(3), BigInt(3)}) == oracle(g, {BigInt(3), BigInt(3)}));
    }
}
