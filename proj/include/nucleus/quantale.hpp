#pragma once

#include <concepts>
#include <ranges>

#include "nucleus/extreal.hpp"

namespace nucleus {

/// Operations of a commutative quantale, stated in the quantale's own order.
///
/// `leq(a, b)` is the lattice order, `join`/`meet` its sup/inf, `tensor` the
/// monoid product with `unit`, and `residuate(b, c)` the internal hom [b, c]
/// characterised by  leq(tensor(a, b), c)  <=>  leq(a, residuate(b, c)).
/// `bottom()` and `top()` are the empty join and empty meet.
template <class T>
struct QuantaleTraits;

/// Truth values ordered by entailment: tensor is AND, residuation is implication.
template <>
struct QuantaleTraits<bool> {
    using value_type = bool;

    static constexpr bool leq(bool a, bool b) noexcept { return !a || b; }
    static constexpr bool join(bool a, bool b) noexcept { return a || b; }
    static constexpr bool meet(bool a, bool b) noexcept { return a && b; }
    static constexpr bool tensor(bool a, bool b) noexcept { return a && b; }
    static constexpr bool residuate(bool b, bool c) noexcept { return !b || c; }
    static constexpr bool unit() noexcept { return true; }
    static constexpr bool bottom() noexcept { return false; }
    static constexpr bool top() noexcept { return true; }

    static constexpr bool approx_equal(bool a, bool b, double /*tol*/) noexcept { return a == b; }
    static constexpr double default_tolerance() noexcept { return 0.0; }
};

/// Extended reals with the reversed order: leq(a, b) is a >= b, so join is
/// the infimum and meet the supremum. Tensor is addition with unit 0 and
/// residuate(b, c) is c - b.
template <>
struct QuantaleTraits<ExtReal> {
    using value_type = ExtReal;

    static constexpr bool leq(const ExtReal& a, const ExtReal& b) noexcept { return a >= b; }
    static constexpr ExtReal join(const ExtReal& a, const ExtReal& b) noexcept { return min(a, b); }
    static constexpr ExtReal meet(const ExtReal& a, const ExtReal& b) noexcept { return max(a, b); }
    static constexpr ExtReal tensor(const ExtReal& a, const ExtReal& b) { return add(a, b); }
    static constexpr ExtReal residuate(const ExtReal& b, const ExtReal& c) { return sub(c, b); }
    static constexpr ExtReal unit() noexcept { return ExtReal(0.0); }
    static constexpr ExtReal bottom() noexcept { return kPosInf; }
    static constexpr ExtReal top() noexcept { return kNegInf; }

    static bool approx_equal(const ExtReal& a, const ExtReal& b, double tol) noexcept {
        return nucleus::approx_equal(a, b, tol);
    }
    static constexpr double default_tolerance() noexcept { return 1e-9; }
};

template <class T>
concept QuantaleScalar = requires(const T& a, const T& b) {
    { QuantaleTraits<T>::leq(a, b) } -> std::same_as<bool>;
    { QuantaleTraits<T>::join(a, b) } -> std::convertible_to<T>;
    { QuantaleTraits<T>::meet(a, b) } -> std::convertible_to<T>;
    { QuantaleTraits<T>::tensor(a, b) } -> std::convertible_to<T>;
    { QuantaleTraits<T>::residuate(a, b) } -> std::convertible_to<T>;
    { QuantaleTraits<T>::unit() } -> std::convertible_to<T>;
    { QuantaleTraits<T>::bottom() } -> std::convertible_to<T>;
    { QuantaleTraits<T>::top() } -> std::convertible_to<T>;
};

template <QuantaleScalar T, std::ranges::input_range R>
constexpr T join_all(R&& xs) {
    T acc = QuantaleTraits<T>::bottom();
    for (const auto& x : xs) acc = QuantaleTraits<T>::join(acc, static_cast<T>(x));
    return acc;
}

template <QuantaleScalar T, std::ranges::input_range R>
constexpr T meet_all(R&& xs) {
    T acc = QuantaleTraits<T>::top();
    for (const auto& x : xs) acc = QuantaleTraits<T>::meet(acc, static_cast<T>(x));
    return acc;
}

}  // namespace nucleus
