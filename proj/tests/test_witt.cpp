#include "support.hpp"

#include <doctest.h>

using namespace wr;
using namespace wr::test;

namespace {

struct Config {
    uint32_t p;
    unsigned e, n;
};

const std::vector<Config> configs{{2, 1, 3}, {2, 2, 2}, {3, 1, 2}, {3, 2, 3}, {5, 1, 2}, {5, 4, 2}};

WittVec W(FieldCtx k, std::vector<int64_t> c)
{
    std::vector<FqElem> v;
    for (auto x : c) v.push_back(FqElem::from_int(k, x));
    return WittVec(k, v);
}

} // namespace

TEST_SUITE("witt")
{
    TEST_CASE("ring axioms")
    {
        for (auto c : configs) {
            FieldCtx k = make_field(c.p, c.e);
            WittVec one = WittVec::one(k, c.n), zero(k, c.n);
            for (int t = 0; t < 200; ++t) {
                WittVec x = random_witt(k, c.n), y = random_witt(k, c.n), z = random_witt(k, c.n);
                CHECK((x + y) + z == x + (y + z));
                CHECK(x + y == y + x);
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * y == y * x);
                CHECK(x * (y + z) == x * y + x * z);
                CHECK(x + zero == x);
                CHECK(x * one == x);
                CHECK(x + witt_neg(x) == zero);
                CHECK(x - y + y == x);
            }
        }
    }

    TEST_CASE("ghost components are additive, and multiplicative over F_p")
    {
        for (auto c : configs) {
            FieldCtx k = make_field(c.p, c.e);
            for (int t = 0; t < 100; ++t) {
                WittVec x = random_witt(k, c.n), y = random_witt(k, c.n);
                for (unsigned j = 0; j < c.n; ++j) {
                    uint64_t mod = uint64_t(ipow(BigInt(c.p), j + 1));
                    auto gx = witt_ghost(x, j), gy = witt_ghost(y, j), gs = witt_ghost(x + y, j);
                    for (size_t i = 0; i < gx.size(); ++i)
                        CHECK(gs[i] == (gx[i] + gy[i]) % mod);
                    if (c.e == 1) CHECK(witt_ghost(x * y, j)[0] == (gx[0] * gy[0]) % mod);
                }
            }
        }
    }

    TEST_CASE("psi(a, b) = ab for p = 2 on all of F_4")
    {
        FieldCtx k = make_field(2, 2);
        for_each_element(k, [&](const FqElem& a) {
            for_each_element(k, [&](const FqElem& b) { CHECK(witt_psi(a, b) == a * b); });
        });
    }

    TEST_CASE("c(i) recursion")
    {
        CHECK(witt_c(0, 3) == 0);
        CHECK(witt_c(2, 3) == 1);
        // c(i) is the second coordinate of i = [i, c(i)] in W_2(F_p)
        for (uint32_t p : {3u, 5u, 7u}) {
            FieldCtx k = make_field(p, 1);
            for (uint64_t i = 0; i < p; ++i) {
                WittVec v = WittVec::from_int(k, 2, int64_t(i));
                CHECK(v.coords[0] == FqElem::from_int(k, int64_t(i)));
                CHECK(v.coords[1] == FqElem::from_int(k, witt_c(i, p)));
            }
        }
    }

    TEST_CASE("small sums")
    {
        FieldCtx f3 = make_field(3, 1), f2 = make_field(2, 1);
        CHECK(W(f3, {1, 0}) + W(f3, {1, 0}) == W(f3, {2, 1}));
        // [2, 0] is the Teichmuller lift of -1
        CHECK(W(f3, {1, 0}) + W(f3, {2, 0}) == W(f3, {0, 0}));
        CHECK(WittVec::from_int(f3, 2, 3) == W(f3, {0, 1}));
        CHECK(WittVec::from_int(f3, 2, 1) + WittVec::from_int(f3, 2, 2) == W(f3, {0, 1}));
        CHECK(WittVec::from_int(f3, 2, 9).is_zero());
        CHECK(WittVec::from_int(f2, 2, 2) == W(f2, {0, 1}));
        CHECK(WittVec::from_int(f2, 3, 4) == W(f2, {0, 0, 1}));
        CHECK(witt_neg(WittVec::one(f2, 2)) == W(f2, {1, 1}));
        CHECK(WittVec::from_int(f2, 2, -1) == W(f2, {1, 1}));
    }

    TEST_CASE("Frobenius, Verschiebung and p")
    {
        for (auto c : configs) {
            FieldCtx k = make_field(c.p, c.e);
            WittVec p = WittVec::from_int(k, c.n, c.p);
            for (int t = 0; t < 50; ++t) {
                WittVec x = random_witt(k, c.n), y = random_witt(k, c.n);
                CHECK(witt_frobenius(x * y) == witt_frobenius(x) * witt_frobenius(y));
                CHECK(witt_frobenius(x + y) == witt_frobenius(x) + witt_frobenius(y));
                CHECK(witt_verschiebung(witt_frobenius(x)) == p * x);
                CHECK(witt_frobenius(witt_frobenius(x, 1), -1) == x);
                CHECK(witt_truncate(x + y, 1).coords[0] == x.coords[0] + y.coords[0]);
            }
        }
    }

    TEST_CASE("trace lands in W_n(F_p) and kills wp")
    {
        for (auto c : configs) {
            FieldCtx k = make_field(c.p, c.e);
            for (int t = 0; t < 30; ++t) {
                WittVec x = random_witt(k, c.n);
                for (auto& co : witt_trace(x).coords)
                    CHECK(co.in_prime_field());
                CHECK(witt_trace(witt_wp(x)).is_zero());
                CHECK(witt_wp(x) == witt_frobenius(x) - x);
            }
        }
    }

    TEST_CASE("Witt polynomial arithmetic commutes with evaluation")
    {
        FieldCtx k = make_field(3, 2);
        for (int t = 0; t < 20; ++t) {
            std::vector<FqPoly> a, b;
            for (int i = 0; i < 2; ++i) {
                a.push_back(FqPoly::monomial(random_elem(k), 1 + t % 4) + FqPoly::constant(random_elem(k)));
                b.push_back(FqPoly::monomial(random_elem(k), 2 + t % 3));
            }
            WittPoly A(k, a), B(k, b);
            FqElem y = random_elem(k);
            CHECK((A + B).eval(y) == A.eval(y) + B.eval(y));
            CHECK((A * B).eval(y) == A.eval(y) * B.eval(y));
            CHECK((A - B).eval(y) == A.eval(y) - B.eval(y));
            CHECK(witt_poly_frobenius(A).eval(y) == witt_frobenius(A.eval(y)));
        }
    }
}
