#pragma once

#include <cstdint>
#include <stdexcept>

namespace phc {

// Structure constants are exact integers. Arithmetic traps on overflow
// instead of wrapping.
using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
    return r;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

inline Coeff sign_of_length(std::size_t length) { return (length % 2 == 0) ? 1 : -1; }

} // namespace phc
