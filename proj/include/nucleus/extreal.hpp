#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <limits>
#include <ranges>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace nucleus {

/// Extended real number in [-inf, +inf].
///
/// Infinities are carried as tags, never as IEEE specials, so that the
/// arithmetic can follow the residuated tables where (+inf) + (-inf) = +inf
/// and (+inf) - (+inf) = -inf. A finite value is never NaN and never an IEEE
/// infinity; negative zero is normalized to zero so bitwise and numeric
/// equality coincide.
class ExtReal {
public:
    enum class Tag : std::uint8_t { NegInf, Finite, PosInf };

    constexpr ExtReal() noexcept = default;

    /// Implicit on purpose: finite literals read naturally in matrices.
    /// IEEE infinities map onto the tags; NaN is rejected.
    constexpr ExtReal(double v) {  // NOLINT(google-explicit-constructor)
        if (v != v) {
            throw std::domain_error("ExtReal: NaN is not an extended real");
        }
        if (v == std::numeric_limits<double>::infinity()) {
            tag_ = Tag::PosInf;
        } else if (v == -std::numeric_limits<double>::infinity()) {
            tag_ = Tag::NegInf;
        } else {
            value_ = (v == 0.0) ? 0.0 : v;
        }
    }

    static constexpr ExtReal pos_inf() noexcept { return ExtReal(Tag::PosInf); }
    static constexpr ExtReal neg_inf() noexcept { return ExtReal(Tag::NegInf); }

    constexpr Tag tag() const noexcept { return tag_; }
    constexpr bool is_finite() const noexcept { return tag_ == Tag::Finite; }
    constexpr bool is_pos_inf() const noexcept { return tag_ == Tag::PosInf; }
    constexpr bool is_neg_inf() const noexcept { return tag_ == Tag::NegInf; }

    /// Finite payload. Zero for the infinite tags.
    constexpr double value() const noexcept { return value_; }

    /// Lossy view as an IEEE double (infinite tags become IEEE infinities).
    constexpr double to_double() const noexcept {
        switch (tag_) {
            case Tag::NegInf: return -std::numeric_limits<double>::infinity();
            case Tag::PosInf: return std::numeric_limits<double>::infinity();
            case Tag::Finite: break;
        }
        return value_;
    }

    friend constexpr bool operator==(const ExtReal&, const ExtReal&) noexcept = default;

    friend constexpr std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) noexcept {
        if (a.tag_ != b.tag_) {
            return static_cast<int>(a.tag_) <=> static_cast<int>(b.tag_);
        }
        if (!a.is_finite() || a.value_ == b.value_) {
            return std::strong_ordering::equal;
        }
        return a.value_ < b.value_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    constexpr explicit ExtReal(Tag t) noexcept : tag_(t) {}

    Tag tag_ = Tag::Finite;
    double value_ = 0.0;
};

inline constexpr ExtReal kPosInf = ExtReal::pos_inf();
inline constexpr ExtReal kNegInf = ExtReal::neg_inf();

/// Addition table: +inf absorbs everything, then -inf absorbs finite values.
constexpr ExtReal add(const ExtReal& a, const ExtReal& b) {
    if (a.is_pos_inf() || b.is_pos_inf()) return kPosInf;
    if (a.is_neg_inf() || b.is_neg_inf()) return kNegInf;
    return ExtReal(a.value() + b.value());
}

/// Residuated subtraction c - b: the least a with a + b >= c.
constexpr ExtReal sub(const ExtReal& c, const ExtReal& b) {
    if (b.is_pos_inf()) return kNegInf;
    if (c.is_neg_inf()) return kNegInf;
    if (b.is_neg_inf() || c.is_pos_inf()) return kPosInf;
    return ExtReal(c.value() - b.value());
}

constexpr ExtReal operator+(const ExtReal& a, const ExtReal& b) { return add(a, b); }
constexpr ExtReal operator-(const ExtReal& c, const ExtReal& b) { return sub(c, b); }

constexpr std::strong_ordering compare(const ExtReal& a, const ExtReal& b) noexcept { return a <=> b; }

constexpr ExtReal min(const ExtReal& a, const ExtReal& b) noexcept { return b < a ? b : a; }
constexpr ExtReal max(const ExtReal& a, const ExtReal& b) noexcept { return a < b ? b : a; }

/// Infimum; the empty infimum is +inf.
template <std::ranges::input_range R>
constexpr ExtReal fold_inf(R&& xs) {
    ExtReal acc = kPosInf;
    for (const ExtReal& x : xs) acc = min(acc, x);
    return acc;
}

/// Supremum; the empty supremum is -inf.
template <std::ranges::input_range R>
constexpr ExtReal fold_sup(R&& xs) {
    ExtReal acc = kNegInf;
    for (const ExtReal& x : xs) acc = max(acc, x);
    return acc;
}

constexpr ExtReal fold_inf(std::initializer_list<ExtReal> xs) { return fold_inf(std::views::all(xs)); }
constexpr ExtReal fold_sup(std::initializer_list<ExtReal> xs) { return fold_sup(std::views::all(xs)); }

/// Equal tags, and finite values within `tol` of each other.
bool approx_equal(const ExtReal& a, const ExtReal& b, double tol) noexcept;

/// Shortest round-trip decimal, or `inf` / `-inf`.
std::string to_string(const ExtReal& x);

/// Accepts `inf`, `+inf`, `-inf` and decimal literals. Throws std::invalid_argument.
ExtReal parse_extreal(std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExtReal& x);

}  // namespace nucleus

namespace Eigen {

template <>
struct NumTraits<nucleus::ExtReal> : GenericNumTraits<double> {
    using Real = nucleus::ExtReal;
    using NonInteger = nucleus::ExtReal;
    using Nested = nucleus::ExtReal;
    using Literal = nucleus::ExtReal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 4,
        MulCost = 4
    };
};

}  // namespace Eigen
