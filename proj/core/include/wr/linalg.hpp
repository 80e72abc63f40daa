#pragma once

// Linear algebra over F_p for the small systems that come up when additive
// maps are written in an F_p-basis.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace wr::linalg {

using Vec = std::vector<uint32_t>;

struct Mat {
    uint32_t p = 2;
    size_t rows = 0, cols = 0;
    std::vector<uint32_t> a;   // row major

    Mat() = default;
    Mat(uint32_t p_, size_t r, size_t c) : p(p_), rows(r), cols(c), a(r * c, 0) {}
    uint32_t& at(size_t i, size_t j) { return a[i * cols + j]; }
    uint32_t at(size_t i, size_t j) const { return a[i * cols + j]; }
    void set_col(size_t j, const Vec& v)
    {
        for (size_t i = 0; i < rows; ++i) at(i, j) = v[i];
    }
};

size_t rank(Mat m);
std::vector<Vec> nullspace(Mat m);
// some x with m x = b, if any
std::optional<Vec> solve(Mat m, const Vec& b);

// Incremental row echelon form on sparse vectors indexed by 64-bit keys.
class SparseEchelon {
public:
    explicit SparseEchelon(uint32_t p) : p_(p) {}
    using SVec = std::map<uint64_t, uint32_t>;
    // reduces v against the basis; returns true and stores it if independent
    bool insert(SVec v);
    bool in_span(SVec v) const;
    size_t dim() const { return rows_.size(); }

private:
    void reduce(SVec& v) const;
    uint32_t p_;
    std::map<uint64_t, SVec> rows_;   // pivot key -> row with leading 1 at pivot (largest key)
};

} // namespace wr::linalg
