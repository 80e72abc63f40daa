#include "support.hpp"

#include "wr/rayclass.hpp"

#include <doctest.h>

using namespace wr;
using namespace wr::test;

namespace {

CoverSpec hermitian(uint32_t p, unsigned e)
{
    FieldCtx k = make_field(p, e);
    unsigned s = e / 2;
    uint64_t r = uint64_t(ipow(BigInt(p), s));
    std::vector<FqElem> a(s + 1, FqElem(k));
    a[0] = a[s] = one(k);
    return CoverSpec::additive(AdditiveOp(k, a), monomial(k, 1 + r), "hermitian");
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

} // namespace

TEST_SUITE("cover")
{
    TEST_CASE("reduction modulo wp")
    {
        FieldCtx k = make_field(3, 2);
        FqPoly f = monomial(k, 9) + monomial(k, 6) + monomial(k, 4) + monomial(k, 0, 2);
        auto g = reduce_mod_wp(f, ReduceMode::geometric);
        auto a = reduce_mod_wp(f, ReduceMode::arithmetic);
        // X^9 ~ X, X^6 ~ X^2
        CHECK(g.poly == monomial(k, 4) + monomial(k, 2) + monomial(k, 1));
        CHECK(g.constant.is_zero());
        CHECK(a.poly == g.poly);
        CHECK(a.constant == FqElem::from_int(k, 2));
        FqPoly P = a.witness;
        CHECK(f == a.poly + FqPoly::constant(a.constant) + P.frobenius() - P);
        for (auto& [ex, c] : g.poly.terms())
            CHECK(ex % 3 != 0);
    }

    TEST_CASE("Artin-Schreier genus (p-1)(m-1)/2")
    {
        for (uint32_t p : {2u, 3u, 5u})
            for (uint64_t m : {1, 2, 3, 4, 7, 11, 13}) {
                if (m % p == 0) continue;
                FieldCtx k = make_field(p, 1);
                auto a = analyze(CoverSpec::artin_schreier(monomial(k, m)));
                CHECK(a.degree == p);
                CHECK(a.conductor == m + 1);
                CHECK(a.genus == BigInt((p - 1) * (m - 1) / 2));
            }
    }

    TEST_CASE("Hermitian cover over F_625")
    {
        CoverSpec h = hermitian(5, 4);
        auto a = analyze(h);
        CHECK(a.degree == 25);
        CHECK(a.conductor == 27);
        CHECK(a.genus == 300);
        auto ss = split_summary(h);
        CHECK(ss.split == 625);
        CHECK(ss.str() == "all q places");
    }

    TEST_CASE("Hermitian genus r(r-1)/2")
    {
        for (auto [p, e] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 4}, {7, 2}}) {
            uint64_t r = uint64_t(ipow(BigInt(p), e / 2));
            auto a = analyze(hermitian(p, e));
            CHECK(a.degree == r);
            CHECK(a.conductor == r + 2);
            CHECK(a.genus == BigInt(r * (r - 1) / 2));
        }
    }

    TEST_CASE("splitting by trace agrees with solving")
    {
        std::vector<CoverSpec> cs;
        FieldCtx k = make_field(3, 2);
        cs.push_back(CoverSpec::artin_schreier(monomial(k, 4) + FqPoly::monomial(FqElem::gen(k), 2)));
        cs.push_back(hermitian(3, 2));
        WittPoly w(k, 2);
        w.coords[0] = monomial(k, 4);
        w.coords[1] = FqPoly::monomial(FqElem::gen(k), 1);
        cs.push_back(CoverSpec::witt(w));
        for (auto& c : family_build("lauter-even", {3, 2, 2, 0}).covers) cs.push_back(c);
        for (auto& c : family_build("lauter-even", {2, 2, 2, 0}).covers) cs.push_back(c);
        for (auto& c : cs) {
            for_each_element(c.ctx, [&](const FqElem& y) { CHECK(splits_at(c, y) == splits_at_by_solving(c, y)); });
        }
    }

    TEST_CASE("length-n Witt conductor 1 + p^{n-1}(1 + p^s)")
    {
        for (auto [p, e, n] : std::vector<std::tuple<uint32_t, unsigned, unsigned>>{{2, 2, 2}, {3, 2, 2}, {2, 2, 3}, {5, 2, 2}, {3, 4, 2}}) {
            auto fam = family_build("exponent-pn", {p, e, n, 0});
            REQUIRE(fam.covers.size() == 1);
            uint64_t ps = uint64_t(ipow(BigInt(p), e / 2));
            uint64_t want = 1 + uint64_t(ipow(BigInt(p), n - 1)) * (1 + ps);
            auto a = analyze(fam.covers[0]);
            CHECK(a.conductor == want);
            CHECK(a.degree == ipow(BigInt(p), n));
            if (n == 2)
                CHECK(invariants_from_power_orders(p, character_power_orders(fam.covers)).exps ==
                      std::vector<unsigned>{2});
        }
    }

    TEST_CASE("base change X = Z^2 - Z in characteristic 2")
    {
        FieldCtx k = make_field(2, 1);
        CoverSpec c = CoverSpec::artin_schreier(monomial(k, 3));
        CoverSpec b = base_change(c, AdditiveOp(k, {one(k), one(k)}));
        CHECK(analyze(c).genus == 1);
        CHECK(analyze(b).genus == 2);
        // -Z^2 + 2Z^3 - Z^5 in characteristic 2 reduces to Z^5 + Z
        CHECK(red(b.rhs.coords[0]) == monomial(k, 5) + monomial(k, 1));
        CHECK(base_change(c, AdditiveOp(k, {one(k)})).rhs == c.rhs);
    }

    TEST_CASE("base change X = Z^9 - Z multiplies the genus by 9")
    {
        FieldCtx k = make_field(3, 1);
        CoverSpec c = CoverSpec::artin_schreier(monomial(k, 4));
        CoverSpec b = base_change(c, AdditiveOp(k, {FqElem::from_int(k, -1), FqElem(k), one(k)}));
        CHECK(analyze(b).genus == 9 * analyze(c).genus);
        CHECK(code_of([&] { base_change(c, AdditiveOp(k, {FqElem(k), one(k)})); }) == ErrorCode::InseparableOperator);
    }

    TEST_CASE("Lauter even family at p = 5, e = 4")
    {
        auto fam = family_build("lauter-even", {5, 4, 2, 0});
        REQUIRE(fam.covers.size() == 6);
        std::vector<uint64_t> conds{27, 127, 128, 129, 130, 131};
        for (size_t i = 0; i < 6; ++i)
            CHECK(conductor(fam.covers[i]) == conds[i]);
        CHECK(kernel_order(fam.covers[0]) == 5);
        for (size_t i = 1; i < 5; ++i)
            CHECK(kernel_order(fam.covers[i]) == 625);
        auto ladder = tower_compose(fam.covers);
        CHECK(ladder.back().degree == ipow(BigInt(5), 18));
        CHECK(ladder.back().conductor == 131);
        auto inv = invariants_from_power_orders(5, character_power_orders(fam.covers));
        std::vector<unsigned> want(17, 1);
        want[0] = 2;
        CHECK(inv.exps == want);
        for (auto& c : fam.covers)
            CHECK(split_summary(c).str() == "all q places");
        FqElem g = gamma_parameter(make_field(5, 4));
        CHECK(!g.is_zero());
        CHECK((g.frobenius(2) + g).is_zero());
    }

    TEST_CASE("Lauter even closed genus formula")
    {
        for (auto [p, e] : std::vector<std::pair<uint32_t, unsigned>>{{2, 2}, {3, 2}, {2, 4}, {3, 4}, {5, 4}}) {
            auto tg = tower_genus(tower_compose(family_build("lauter-even", {p, e, 2, 0}).covers));
            BigInt P = p, q = ipow(P, e);
            unsigned s = e / 2;
            BigInt sum = 0;
            for (unsigned i = 0; i + 2 <= p; ++i) sum += ipow(q, i);
            BigInt twice = ipow(P, 2 + 2 * s * (p - 1)) * (ipow(P, s + 1) + p - 1) - ipow(P, s) * (P * P - P + 1) -
                           ipow(P, 2 * s + 1) * sum;
            CHECK(2 * tg.genus == twice);
            CHECK(tg.degree == ipow(P, 2 + (p - 1) * e));
            CHECK(tg.top_conductor == m2_closed_form(p, e));
        }
    }

    TEST_CASE("Lauter odd family ladder")
    {
        for (auto [p, e] : std::vector<std::pair<uint32_t, unsigned>>{{2, 3}, {3, 3}, {2, 5}}) {
            auto fam = family_build("lauter-odd", {p, e, 2, 0});
            auto ladder = tower_compose(fam.covers);
            unsigned s = (e + 1) / 2;
            BigInt P = p;
            // conductor p^s + i + 1 at degree p^{ie}, then p^{s+1} + j + 1 at p^{(p-1+j)e}
            for (uint32_t i = 1; i < p; ++i) {
                CHECK(ladder[i - 1].conductor == uint64_t(ipow(P, s)) + i + 1);
                CHECK(ladder[i - 1].degree == ipow(P, i * e));
            }
            for (uint32_t j = 1; j < p; ++j) {
                CHECK(ladder[p - 2 + j].conductor == uint64_t(ipow(P, s + 1)) + j + 1);
                CHECK(ladder[p - 2 + j].degree == ipow(P, (p - 1 + j) * e));
            }
            CHECK(ladder.back().conductor == m2_closed_form(p, e));
            CHECK(ladder.back().degree == ipow(P, 1 + 2 * (p - 1) * e));
            auto inv = invariants_from_power_orders(p, character_power_orders(fam.covers));
            CHECK(inv.exps.front() == 2);
            CHECK(inv.exps.size() == 2 * (p - 1) * e);
            for (auto& c : fam.covers)
                CHECK(split_summary(c).str() == "all q places");
        }
    }

    TEST_CASE("table rows by conductor")
    {
        auto row = family_build("table-row", {5, 4, 2, 52});
        REQUIRE(row.covers.size() == 1);
        CHECK(row.covers[0].label == "W1^q-W1=X^50*(X^625-X)");
        auto a = analyze(row.covers[0]);
        CHECK(a.conductor == 52);
        CHECK(a.degree == 625);
        auto last = family_build("table-row", {5, 4, 2, 131});
        CHECK(last.covers[0].label == "[W0,W14]^r+[W0,W14]=[X^26,0]");
        CHECK(code_of([] { family_build("table-row", {5, 4, 2, 60}); }) == ErrorCode::BadParameters);
    }

    TEST_CASE("table tower reproduces the ray class degrees")
    {
        auto ladder = tower_compose(family_build("table", {5, 4, 2, 0}).covers);
        std::vector<std::pair<uint64_t, unsigned>> want{{27, 2},   {52, 6},   {53, 8},   {77, 12},  {78, 16},
                                                        {79, 18},  {102, 22}, {103, 26}, {104, 30}, {105, 32},
                                                        {127, 36}, {128, 40}, {129, 44}, {130, 48}, {131, 50}};
        REQUIRE(ladder.size() == want.size());
        for (size_t i = 0; i < want.size(); ++i) {
            CHECK(ladder[i].conductor == want[i].first);
            CHECK(ladder[i].degree == ipow(BigInt(5), want[i].second));
        }
    }

    TEST_CASE("family parameter errors")
    {
        CHECK(code_of([] { family_build("lauter-even", {5, 3, 2, 0}); }) == ErrorCode::BadParameters);
        CHECK(code_of([] { family_build("lauter-odd", {5, 4, 2, 0}); }) == ErrorCode::BadParameters);
        CHECK(code_of([] { family_build("lauter-odd", {5, 1, 2, 0}); }) == ErrorCode::BadParameters);
        CHECK(code_of([] { family_build("exponent-pn", {5, 2, 1, 0}); }) == ErrorCode::BadParameters);
        CHECK(code_of([] { family_build("nonsense", {5, 2, 2, 0}); }) == ErrorCode::BadParameters);
    }

    TEST_CASE("p = 2 even family does not split everywhere")
    {
        auto fam = family_build("lauter-even", {2, 2, 2, 0});
        CHECK(split_summary(fam.covers.back()).split < 4);
        bool noted = false;
        for (auto& n : fam.notes) noted |= n.find("splits at") != std::string::npos;
        CHECK(noted);
    }

    TEST_CASE("a cover with rhs in wp(K[X]) is rejected by the tower")
    {
        FieldCtx k = make_field(3, 1);
        FqPoly f = monomial(k, 6) - monomial(k, 2);
        CHECK(code_of([&] { tower_compose({CoverSpec::artin_schreier(f)}); }) == ErrorCode::ZeroCover);
    }
}
