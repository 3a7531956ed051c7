#pragma once

#include <concepts>

#include "qlax/rational.hpp"

namespace qlax {

/// Unital associative Q-algebra with canonical forms. Identities are static
/// so containers (TPoly, BiOp) can build them without a prototype element.
template <class T>
concept Algebra = std::copyable<T> && requires(const T& a, const T& b, const Rational& r) {
    { T::zero() } -> std::same_as<T>;
    { T::one() } -> std::same_as<T>;
    { a + b } -> std::same_as<T>;
    { a - b } -> std::same_as<T>;
    { -a } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { r * a } -> std::same_as<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
};

/// Optional capability: exact inversion of units (throws on non-units).
template <class T>
concept InvertibleAlgebra = Algebra<T> && requires(const T& a) {
    { inverse(a) } -> std::same_as<T>;
};

template <Algebra A>
A commutator(const A& a, const A& b) {
    return a * b - b * a;
}

} // namespace qlax
