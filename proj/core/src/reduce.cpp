#include "wr/reduce.hpp"

#include <map>

namespace wr {

ReducedForm reduce_mod_wp(const FqPoly& f, ReduceMode mode)
{
    FieldCtx K = f.ctx();
    const uint64_t p = K.p();
    std::map<uint64_t, FqElem> work;
    for (auto& [k, c] : f.terms()) work.emplace(k, c);
    std::vector<FqPoly::Term> wit;
    // highest exponents first so that each a X^{ip} is replaced exactly once
    for (auto it = work.rbegin(); it != work.rend();) {
        uint64_t k = it->first;
        if (k == 0 || k % p != 0) {
            ++it;
            continue;
        }
        FqElem b = it->second.pth_root();
        wit.emplace_back(k / p, b);
        auto [jt, fresh] = work.try_emplace(k / p, b);
        if (!fresh) jt->second += b;
        work.erase(k);
        it = std::make_reverse_iterator(work.upper_bound(k));
    }
    ReducedForm out{FqPoly(K), FqElem(K), mode, FqPoly(K, std::move(wit))};
    std::vector<FqPoly::Term> terms;
    for (auto& [k, c] : work) {
        if (c.is_zero()) continue;
        if (k == 0)
            out.constant = c;
        else
            terms.emplace_back(k, c);
    }
    out.poly = FqPoly(K, std::move(terms));
    if (mode == ReduceMode::geometric) out.constant = FqElem(K);
    return out;
}

FqPoly red(const FqPoly& f)
{
    return reduce_mod_wp(f, ReduceMode::geometric).poly;
}

} // namespace wr
