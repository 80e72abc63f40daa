#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace wr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt& b, unsigned k)
{
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i)
        r *= b;
    return r;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

// 6 significant digits
std::string decimal6(const Rational& x);
std::string rational_str(const Rational& x);

// log_b(x) if x is an exact power of b, else -1
int exact_log(const BigInt& x, unsigned b);

} // namespace wr
