#include "wr/linalg.hpp"
#include "wr/fpoly.hpp"

namespace wr::linalg {

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<size_t> rref(Mat& m, Vec* rhs = nullptr)
{
    const uint32_t p = m.p;
    std::vector<size_t> piv;
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t sel = r;
        while (sel < m.rows && m.at(sel, c) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != r) {
            for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
            if (rhs) std::swap((*rhs)[sel], (*rhs)[r]);
        }
        uint64_t il = fp::inv_mod(m.at(r, c), p);
        for (size_t j = 0; j < m.cols; ++j) m.at(r, j) = uint32_t(m.at(r, j) * il % p);
        if (rhs) (*rhs)[r] = uint32_t((*rhs)[r] * il % p);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            uint64_t f = p - m.at(i, c);
            for (size_t j = 0; j < m.cols; ++j)
                m.at(i, j) = uint32_t((m.at(i, j) + f * m.at(r, j)) % p);
            if (rhs) (*rhs)[i] = uint32_t(((*rhs)[i] + f * (*rhs)[r]) % p);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace

size_t rank(Mat m)
{
    return rref(m).size();
}

std::vector<Vec> nullspace(Mat m)
{
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<Vec> out;
    for (size_t f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols, 0);
        v[f] = 1;
        for (size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = m.at(r, f) ? m.p - m.at(r, f) : 0;
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(Mat m, const Vec& b)
{
    Vec rhs = b;
    auto piv = rref(m, &rhs);
    for (size_t r = piv.size(); r < m.rows; ++r)
        if (rhs[r]) return std::nullopt;
    Vec x(m.cols, 0);
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = rhs[r];
    return x;
}

void SparseEchelon::reduce(SVec& v) const
{
    while (!v.empty()) {
        auto lead = std::prev(v.end());
        auto it = rows_.find(lead->first);
        if (it == rows_.end()) return;
        uint64_t f = p_ - lead->second;
        for (auto& [k, c] : it->second) {
            uint32_t nv = uint32_t((v[k] + f * c) % p_);
            if (nv) v[k] = nv; else v.erase(k);
        }
    }
}

bool SparseEchelon::insert(SVec v)
{
    for (auto it = v.begin(); it != v.end();) {
        it->second %= p_;
        if (!it->second) it = v.erase(it); else ++it;
    }
    reduce(v);
    if (v.empty()) return false;
    uint64_t il = fp::inv_mod(std::prev(v.end())->second, p_);
    for (auto& [k, c] : v) c = uint32_t(c * il % p_);
    rows_.emplace(std::prev(v.end())->first, std::move(v));
    return true;
}

bool SparseEchelon::in_span(SVec v) const
{
    for (auto it = v.begin(); it != v.end();) {
        it->second %= p_;
        if (!it->second) it = v.erase(it); else ++it;
    }
    reduce(v);
    return v.empty();
}

} // namespace wr::linalg
