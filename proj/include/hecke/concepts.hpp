#pragma once

#include <concepts>
#include <string>

namespace hecke {

// Exact coefficient field. Everything the algebra layer needs from its
// scalars: ring operations, exact division, decidable equality, and the
// distinguished constants. All models are immutable value types.
template <typename F>
concept field = std::regular<F> && requires(const F a, const F b) {
    { F::zero() } -> std::convertible_to<F>;
    { F::one() } -> std::convertible_to<F>;
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

} // namespace hecke
