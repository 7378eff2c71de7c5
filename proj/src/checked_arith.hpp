#pragma once

#include <cstdint>
#include <stdexcept>

namespace antipode::detail {

// Overflow aborts the computation loudly instead of corrupting a verdict.

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow in addition");
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer coefficient overflow in multiplication");
    return r;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("count overflow in addition");
    return r;
}

inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("count overflow in multiplication");
    return r;
}

}  // namespace antipode::detail
