#pragma once

#include "wr/bigaction.hpp"
#include "wr/cover.hpp"

#include <random>
#include <utility>
#include <vector>

namespace wr::test {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 g(20240611);
    return g;
}

inline FqElem random_elem(FieldCtx k)
{
    std::uniform_int_distribution<uint32_t> d(0, k.p() - 1);
    Coeffs c;
    for (unsigned i = 0; i < k.e(); ++i)
        c.push_back(d(rng()));
    return FqElem(k, std::move(c));
}

inline FqElem random_nonzero(FieldCtx k)
{
    for (;;) {
        FqElem x = random_elem(k);
        if (!x.is_zero()) return x;
    }
}

inline WittVec random_witt(FieldCtx k, unsigned n)
{
    std::vector<FqElem> c;
    for (unsigned i = 0; i < n; ++i)
        c.push_back(random_elem(k));
    return WittVec(k, std::move(c));
}

inline FqElem one(FieldCtx k) { return FqElem::from_int(k, 1); }

inline FqPoly monomial(FieldCtx k, uint64_t exp, int64_t c = 1)
{
    return FqPoly::monomial(FqElem::from_int(k, c), exp);
}

inline Filtration lower(std::vector<std::pair<int64_t, int64_t>> segs)
{
    Filtration f{Numbering::lower, {}};
    for (auto [l, o] : segs)
        f.segments.push_back({Rational(l), BigInt(o)});
    return f;
}

inline ActionProfile profile(uint32_t p, std::vector<std::pair<int64_t, int64_t>> segs, unsigned v,
                             std::vector<unsigned> inv_exps, std::optional<unsigned> s)
{
    ActionProfile a;
    a.p = p;
    a.filtration = lower(std::move(segs));
    a.v = v;
    if (!inv_exps.empty()) a.g2_invariants = AbelianInvariants{p, std::move(inv_exps)};
    a.s = s;
    return a;
}

// lower filtration of the translation group extended by F_q over the
// Galois group of a tower: G_0 = G_1 = G, then the tower's own filtration
inline ActionProfile extended_profile(uint32_t p, unsigned e, const std::vector<TowerLevel>& ladder,
                                      AbelianInvariants g2, unsigned s)
{
    Filtration low = herbrand_convert(ladder_filtration(ladder), Numbering::lower);
    BigInt q = ipow(BigInt(p), e);
    ActionProfile a;
    a.p = p;
    a.filtration.numbering = Numbering::lower;
    a.filtration.segments.push_back({Rational(1), q * low.group_order()});
    for (auto& seg : low.segments)
        a.filtration.segments.push_back(seg);
    a.v = e;
    a.g2_invariants = std::move(g2);
    a.s = s;
    return a;
}

} // namespace wr::test
