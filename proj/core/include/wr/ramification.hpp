#pragma once

#include "wr/bigint.hpp"
#include "wr/error.hpp"

#include <string>
#include <vector>

namespace wr {

enum class Numbering { lower, upper };

// The group has the stated order from the previous segment's last index
// (exclusive; index 0 for the first segment, inclusive) up to last.
// Past the final segment the group is trivial.
struct Segment {
    Rational last;
    BigInt order;
    bool operator==(const Segment& o) const { return last == o.last && order == o.order; }
};

struct Filtration {
    Numbering numbering = Numbering::lower;
    std::vector<Segment> segments;

    // throws InvalidFiltration
    void validate() const;
    BigInt group_order() const { return segments.empty() ? BigInt(1) : segments.front().order; }
    // |G_t| (or |G^t|)
    BigInt order_at(const Rational& t) const;
    std::vector<Rational> breaks() const;
    bool operator==(const Filtration& o) const
    {
        return numbering == o.numbering && segments == o.segments;
    }
};

// merges adjacent segments of equal order and drops trivial ones
Filtration normalized(Filtration f);

Filtration herbrand_convert(const Filtration& f, Numbering target);

// 2g = sum_{i>=2} (|G_i| - 1) over a lower filtration with integral breaks
BigInt hurwitz_genus(const Filtration& lower);
// the sum itself
BigInt hurwitz_sum(const Filtration& lower);

// degree is cumulative over the tower
struct TowerLevel {
    BigInt degree;
    uint64_t conductor = 0;
    std::string label;
};

struct TowerGenus {
    BigInt genus;
    BigInt degree;
    uint64_t top_conductor = 0;
    BigInt degree_sum;   // sum_{j<n} d_j
};

// g = 1 + D(n/2 - 1) - (1/2) sum_{j<n} d_j, d_j the degree of the subtower
// of conductor <= j
TowerGenus tower_genus(const std::vector<TowerLevel>& levels);
// upper filtration of the tower: order D/d_j on (j-1, j]
Filtration ladder_filtration(const std::vector<TowerLevel>& levels);

// 2|H| g_{C/H} = sum_{i>=2} (|G_i| - |H cap G_i|), sub_orders aligned with segments
BigInt quotient_genus(const Filtration& lower, const std::vector<BigInt>& sub_orders);

bool hasse_arf_check(const Filtration& f, bool abelian = true);

} // namespace wr
