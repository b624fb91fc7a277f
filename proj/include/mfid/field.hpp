#pragma once

#include <concepts>

#include "mfid/exact/number_field.hpp"
#include "mfid/exact/rational.hpp"

namespace mfid {

/// Per-type access to the field structure a coefficient belongs to. Zero and one
/// are produced "like" an existing element so that number-field elements keep
/// their parent.
template <class K>
struct field_traits;

template <>
struct field_traits<Rational> {
    static Rational zero_like(const Rational&) { return 0; }
    static Rational one_like(const Rational&) { return 1; }
    static Rational from_rational_like(const Rational&, const Rational& q) { return q; }
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational inv(const Rational& a) {
        if (a == 0) throw std::domain_error("inverse of zero");
        return 1 / a;
    }
};

template <>
struct field_traits<NumberFieldElement> {
    static NumberFieldElement zero_like(const NumberFieldElement& a) { return a.parent().zero(); }
    static NumberFieldElement one_like(const NumberFieldElement& a) { return a.parent().one(); }
    static NumberFieldElement from_rational_like(const NumberFieldElement& a, const Rational& q) {
        return a.parent().from_rational(q);
    }
    static bool is_zero(const NumberFieldElement& a) { return a.is_zero(); }
    static NumberFieldElement inv(const NumberFieldElement& a) { return a.inv(); }
};

template <class K>
concept CoefficientField = requires(const K& a, const K& b, const Rational& q) {
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { field_traits<K>::zero_like(a) } -> std::convertible_to<K>;
    { field_traits<K>::one_like(a) } -> std::convertible_to<K>;
    { field_traits<K>::from_rational_like(a, q) } -> std::convertible_to<K>;
    { field_traits<K>::is_zero(a) } -> std::convertible_to<bool>;
    { field_traits<K>::inv(a) } -> std::convertible_to<K>;
};

template <CoefficientField K>
bool is_zero(const K& a) {
    return field_traits<K>::is_zero(a);
}

template <CoefficientField K>
K inverse(const K& a) {
    return field_traits<K>::inv(a);
}

}  // namespace mfid
