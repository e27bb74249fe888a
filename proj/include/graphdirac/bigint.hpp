#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace graphdirac {

/// Signed arbitrary-precision integer (sign + base-1e9 limbs).
///
/// Covers exact tiling counts, their linear recurrences, and the gluing
/// formulas, which mix additions, subtractions, products, and exact small
/// divisions. Not a general-purpose bignum: division is only by small
/// positive constants and must be exact.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long value); // NOLINT: implicit by design, counts mix with literals

    [[nodiscard]] bool is_zero() const { return limbs_.empty(); }
    [[nodiscard]] bool is_negative() const { return negative_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& rhs) const;
    BigInt operator-(const BigInt& rhs) const;
    BigInt operator*(const BigInt& rhs) const;
    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);

    /// Exact division by a small positive constant; throws Error if the
    /// remainder is nonzero (a formula identity would be broken).
    [[nodiscard]] BigInt div_exact(std::uint32_t divisor) const;

    bool operator==(const BigInt& rhs) const = default;
    std::strong_ordering operator<=>(const BigInt& rhs) const;

    /// Decimal representation, e.g. "-1024".
    [[nodiscard]] std::string str() const;

    /// Conversion for callers that know the value is small; throws Error on overflow.
    [[nodiscard]] long long to_longlong() const;

private:
    static constexpr std::uint32_t kBase = 1'000'000'000;

    void trim();
    // |lhs| vs |rhs|
    static std::strong_ordering compare_magnitude(const BigInt& lhs, const BigInt& rhs);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);

    bool negative_ = false;
    std::vector<std::uint32_t> limbs_; // little-endian, no leading zero limbs; empty == 0
};

std::ostream& operator<<(std::ostream& os, const BigInt& value);

} // namespace graphdirac
