#pragma once

#include "wr/field.hpp"

namespace wr {

// geometric: constants are dropped (every constant is in wp of the closure)
// arithmetic: the constant is kept, for split tests over F_q itself
enum class ReduceMode { geometric, arithmetic };

struct ReducedForm {
    FqPoly poly;        // p-power free, no constant term
    FqElem constant;    // zero in geometric mode
    ReduceMode mode;
    FqPoly witness;     // P with f = poly + constant + P^p - P (+ dropped constant)
};

ReducedForm reduce_mod_wp(const FqPoly& f, ReduceMode mode);
// shorthand for the polynomial part in geometric mode
FqPoly red(const FqPoly& f);

} // namespace wr
