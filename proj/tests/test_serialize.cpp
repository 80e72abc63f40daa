#include "support.hpp"

#include "wr/serialize.hpp"

#include <doctest.h>

using namespace wr;
using namespace wr::test;
using wr::io::json;

namespace {

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::NonPrime;
}

} // namespace

TEST_SUITE("serialize")
{
    TEST_CASE("field, element, polynomial")
    {
        FieldCtx k = make_field(5, 4);
        json j = io::to_json(k);
        CHECK(j["p"] == 5);
        CHECK(j["e"] == 4);
        CHECK(io::field_from_json(j) == k);
        for (int t = 0; t < 20; ++t) {
            FqElem x = random_elem(k);
            CHECK(io::elem_from_json(k, io::to_json(x)) == x);
            FqPoly f = FqPoly::monomial(x, uint64_t(t)) + monomial(k, 100);
            CHECK(io::poly_from_json(k, io::to_json(f)) == f);
        }
        CHECK(io::to_json(FqPoly::monomial(one(k), 3)).dump() == "[[3,[1,0,0,0]]]");
    }

    TEST_CASE("additive operators and Witt vectors")
    {
        FieldCtx k = make_field(3, 2);
        AdditiveOp A(k, {one(k), FqElem(k), FqElem::gen(k)});
        CHECK(io::additive_from_json(k, io::to_json(A)) == A);
        WittVec w = random_witt(k, 3);
        json j = io::to_json(w);
        CHECK(j["n"] == 3);
        CHECK(io::witt_from_json(k, j) == w);
    }

    TEST_CASE("covers of every operator kind")
    {
        auto fam = family_build("table", {5, 4, 2, 0}).covers;
        std::vector<CoverSpec> cs{fam.front(), fam[1], fam.back()};
        cs.push_back(family_build("exponent-pn", {3, 2, 2, 0}).covers[0]);
        for (auto& c : cs) {
            CoverSpec back = io::cover_from_json(io::parse(io::to_json(c).dump()));
            CHECK(back.kind == c.kind);
            CHECK(back.n == c.n);
            CHECK(back.op == c.op);
            CHECK(back.rhs == c.rhs);
            CHECK(back.label == c.label);
        }
    }

    TEST_CASE("filtration and profile")
    {
        Filtration f{Numbering::upper, {{Rational(1), BigInt(27)}, {Rational(4, 3), BigInt(3)}}};
        json j = io::to_json(f);
        CHECK(j.dump() == R"({"numbering":"upper","segments":[[1,1,27],[4,3,3]]})");
        CHECK(io::filtration_from_json(j) == f);
        ActionProfile a = profile(3, {{1, 27}, {4, 3}}, 2, {1}, 1);
        json pj = io::to_json(a);
        CHECK(pj["g2_invariants"] == json::array({3}));
        ActionProfile b = io::profile_from_json(pj);
        CHECK(b.filtration == a.filtration);
        CHECK(b.g2_invariants->exps == a.g2_invariants->exps);
        CHECK(*b.s == 1);
    }

    TEST_CASE("report rationals and large integers")
    {
        Report r = analyze_profile(profile(3, {{1, 27}, {4, 3}}, 2, {1}, 1));
        json j = io::to_json(r);
        CHECK(j["ratio2"] == json::array({3, 1}));
        CHECK(j["is_big"] == true);
        CHECK(j["sieve_verdicts"].size() == sieve_rules().size());
        BigInt big = ipow(BigInt(5), 60);
        CHECK(io::big_to_json(big).is_string());
        CHECK(io::big_from_json(io::big_to_json(big)) == big);
        CHECK(io::rational_from_json(io::rational_to_json(Rational(big, 7))) == Rational(big, 7));
    }

    TEST_CASE("malformed input")
    {
        CHECK(code_of([] { io::parse("{"); }) == ErrorCode::ParseError);
        CHECK(code_of([] { io::field_from_json(json{{"p", 5}}); }) == ErrorCode::ParseError);
        CHECK(code_of([] { io::field_from_json(json{{"p", 4}, {"e", 1}}); }) == ErrorCode::NonPrime);
        CHECK(code_of([] { io::field_from_json(json{{"p", 2}, {"e", 2}, {"modulus", {1, 0, 1}}}); }) ==
              ErrorCode::ContextMismatch);
        FieldCtx k = make_field(5, 2);
        CHECK(code_of([&] { io::elem_from_json(k, json::array({1, 2, 3})); }) == ErrorCode::ParseError);
        CHECK(code_of([&] { io::elem_from_json(k, json::array({7, 0})); }) == ErrorCode::ParseError);
        json cover{{"field", io::to_json(k)}, {"operator", {{"witt", 2}}}, {"rhs", json::array({json::array()})}};
        CHECK(code_of([&] { io::cover_from_json(cover); }) == ErrorCode::LengthMismatch);
        CHECK(code_of([] { io::filtration_from_json(json{{"numbering", "middle"}, {"segments", json::array()}}); }) ==
              ErrorCode::ParseError);
        json prof{{"p", 3}, {"v", 2}, {"g2_invariants", {4}},
                  {"filtration", io::to_json(lower({{1, 27}, {4, 3}}))}};
        CHECK(code_of([&] { io::profile_from_json(prof); }) == ErrorCode::InvalidProfile);
    }
}
