#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace wr;
using namespace wr::test;

namespace {

// brute force: monic f of degree 4 over F_p is irreducible iff it has no
// root and no monic quadratic factor
bool irreducible_quartic(const std::vector<uint32_t>& f, uint32_t p)
{
    auto eval = [&](uint32_t x) {
        uint64_t v = 0;
        for (size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
        return v;
    };
    for (uint32_t x = 0; x < p; ++x)
        if (eval(x) == 0) return false;
    for (uint32_t a = 0; a < p; ++a)
        for (uint32_t b = 0; b < p; ++b) {
            // divide by X^2 + a X + b
            std::vector<int64_t> r(f.begin(), f.end());
            for (int d = 4; d >= 2; --d) {
                int64_t c = r[size_t(d)] % int64_t(p);
                r[size_t(d)] = 0;
                r[size_t(d - 1)] = ((r[size_t(d - 1)] - c * a) % int64_t(p) + p) % p;
                r[size_t(d - 2)] = ((r[size_t(d - 2)] - c * b) % int64_t(p) + p) % p;
            }
            if (r[0] % p == 0 && r[1] % p == 0) return false;
        }
    return true;
}

} // namespace

TEST_SUITE("field")
{
    TEST_CASE("prime field and F_4 moduli")
    {
        CHECK(make_field(5, 1).modulus() == std::vector<uint32_t>{0, 1});
        CHECK(make_field(2, 2).modulus() == std::vector<uint32_t>{1, 1, 1});
        CHECK(make_field(5, 1).q() == 5);
    }

    TEST_CASE("F_625 modulus is the first irreducible quartic in scan order")
    {
        std::vector<uint32_t> found;
        for (uint32_t c0 = 1; c0 < 5 && found.empty(); ++c0)
            for (uint32_t c1 = 0; c1 < 5 && found.empty(); ++c1)
                for (uint32_t c2 = 0; c2 < 5 && found.empty(); ++c2)
                    for (uint32_t c3 = 0; c3 < 5 && found.empty(); ++c3) {
                        std::vector<uint32_t> f{c0, c1, c2, c3, 1};
                        if (irreducible_quartic(f, 5)) found = f;
                    }
        CHECK(make_field(5, 4).modulus() == found);
        CHECK(make_field(5, 4) == make_field(5, 4));
    }

    TEST_CASE("parameter errors")
    {
        auto code = [](auto fn) {
            try {
                fn();
            } catch (const Error& e) {
                return e.code();
            }
            return ErrorCode::ParseError;
        };
        CHECK(code([] { make_field(4, 1); }) == ErrorCode::NonPrime);
        CHECK(code([] { make_field(1, 1); }) == ErrorCode::NonPrime);
        CHECK(code([] { make_field(2, 0); }) == ErrorCode::DegreeOutOfRange);
        CHECK(code([] { make_field(2, 17); }) == ErrorCode::DegreeOutOfRange);
        CHECK(code([] { frobenius_trace(one(make_field(5, 4)), 3); }) == ErrorCode::NotASubfieldDegree);
    }

    TEST_CASE("field axioms on random elements")
    {
        for (auto [p, e] : std::vector<std::pair<uint32_t, unsigned>>{{2, 3}, {3, 2}, {5, 4}, {7, 1}, {2, 8}}) {
            FieldCtx k = make_field(p, e);
            for (int t = 0; t < 200; ++t) {
                FqElem a = random_elem(k), b = random_elem(k), c = random_elem(k);
                CHECK(a * (b + c) == a * b + a * c);
                CHECK((a * b) * c == a * (b * c));
                CHECK(a + b - b == a);
                if (!a.is_zero()) CHECK((a * a.inv()).is_one());
                CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
                CHECK(a.frobenius().pth_root() == a);
                CHECK(a.pow(uint64_t(k.q())) == a);
            }
        }
    }

    TEST_CASE("Frobenius is a bijection on F_27")
    {
        FieldCtx k = make_field(3, 3);
        std::set<uint64_t> img;
        for_each_element(k, [&](const FqElem& x) { img.insert(x.frobenius().index()); });
        CHECK(img.size() == 27);
    }

    TEST_CASE("absolute trace of a generator of F_4 is 1")
    {
        FieldCtx k = make_field(2, 2);
        CHECK(frobenius_trace(FqElem::gen(k), 1).is_one());
        CHECK(frobenius_trace(FqElem(k), 1).is_zero());
    }

    TEST_CASE("trace F_625 -> F_25 matches the Frobenius sum")
    {
        FieldCtx k = make_field(5, 4);
        for (int t = 0; t < 100; ++t) {
            FqElem x = random_elem(k);
            FqElem tr = frobenius_trace(x, 2);
            CHECK(tr == x + x.pow(uint64_t(25)));
            CHECK(tr.frobenius(2) == tr);
            // an element of F_25 has trace 2x
            FqElem y = x + x.frobenius(2);
            CHECK(frobenius_trace(y, 2) == y.scale(2));
        }
    }

    TEST_CASE("polynomial evaluation, composition and shift")
    {
        FieldCtx k = make_field(3, 2);
        for (int t = 0; t < 50; ++t) {
            std::vector<FqPoly::Term> ft, gt;
            for (uint64_t i = 0; i < 5; ++i) {
                ft.emplace_back(i * 2, random_elem(k));
                gt.emplace_back(i, random_elem(k));
            }
            FqPoly f(k, ft), g(k, gt);
            FqElem y = random_elem(k), z = random_elem(k);
            CHECK(f.compose(g).eval(y) == f.eval(g.eval(y)));
            CHECK(f.shift(z).eval(y) == f.eval(y + z));
            CHECK((f * g).eval(y) == f.eval(y) * g.eval(y));
            CHECK(f.pow(3).eval(y) == f.eval(y).pow(uint64_t(3)));
        }
        FqPoly zero(k);
        CHECK(zero.is_zero());
        CHECK((FqPoly::x(k) - FqPoly::x(k)).is_zero());
    }
}
