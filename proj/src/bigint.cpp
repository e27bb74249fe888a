#include "graphdirac/bigint.hpp"

#include "graphdirac/error.hpp"

#include <algorithm>
#include <ostream>

namespace graphdirac {

BigInt::BigInt(long long value) {
    if (value < 0) {
        negative_ = true;
        // careful with LLONG_MIN
        unsigned long long mag = ~static_cast<unsigned long long>(value) + 1ULL;
        while (mag > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
            mag /= kBase;
        }
    } else {
        unsigned long long mag = static_cast<unsigned long long>(value);
        while (mag > 0) {
            limbs_.push_back(static_cast<std::uint32_t>(mag % kBase));
            mag /= kBase;
        }
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

std::strong_ordering BigInt::compare_magnitude(const BigInt& lhs, const BigInt& rhs) {
    if (lhs.limbs_.size() != rhs.limbs_.size())
        return lhs.limbs_.size() <=> rhs.limbs_.size();
    for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
        if (lhs.limbs_[i] != rhs.limbs_[i]) return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
    return std::strong_ordering::equal;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry != 0; ++i) {
        std::uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<std::uint32_t>(sum % kBase));
        carry = static_cast<std::uint32_t>(sum / kBase);
    }
    return out;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t diff = static_cast<std::int64_t>(out[i]) - borrow -
                            (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (diff < 0) {
            diff += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<std::uint32_t>(diff);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt BigInt::operator-() const {
    BigInt out(*this);
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::operator+(const BigInt& rhs) const {
    BigInt out;
    if (negative_ == rhs.negative_) {
        out.negative_ = negative_;
        out.limbs_ = add_magnitude(limbs_, rhs.limbs_);
    } else {
        auto cmp = compare_magnitude(*this, rhs);
        if (cmp == std::strong_ordering::equal) return BigInt{};
        if (cmp == std::strong_ordering::greater) {
            out.negative_ = negative_;
            out.limbs_ = sub_magnitude(limbs_, rhs.limbs_);
        } else {
            out.negative_ = rhs.negative_;
            out.limbs_ = sub_magnitude(rhs.limbs_, limbs_);
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + (-rhs); }

BigInt& BigInt::operator+=(const BigInt& rhs) { return *this = *this + rhs; }
BigInt& BigInt::operator-=(const BigInt& rhs) { return *this = *this - rhs; }

BigInt BigInt::operator*(const BigInt& rhs) const {
    if (is_zero() || rhs.is_zero()) return BigInt{};
    BigInt out;
    out.negative_ = negative_ != rhs.negative_;
    out.limbs_.assign(limbs_.size() + rhs.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < rhs.limbs_.size() || carry != 0; ++j) {
            // fits in 64 bits: (1e9-1)^2 + 1e9 + 1e9 < 2^63
            std::uint64_t cur = out.limbs_[i + j] + carry;
            if (j < rhs.limbs_.size())
                cur += static_cast<std::uint64_t>(limbs_[i]) * rhs.limbs_[j];
            out.limbs_[i + j] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    out.trim();
    return out;
}

BigInt BigInt::div_exact(std::uint32_t divisor) const {
    if (divisor == 0) throw Error("BigInt::div_exact: division by zero");
    BigInt out;
    out.negative_ = negative_;
    out.limbs_.assign(limbs_.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        std::uint64_t cur = rem * kBase + limbs_[i];
        out.limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
        rem = cur % divisor;
    }
    if (rem != 0)
        throw Error("BigInt::div_exact: " + str() + " is not divisible by " +
                    std::to_string(divisor));
    out.trim();
    return out;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
    if (negative_ != rhs.negative_)
        return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    auto mag = compare_magnitude(*this, rhs);
    if (!negative_) return mag;
    // both negative: the larger magnitude is the smaller number
    if (mag == std::strong_ordering::less) return std::strong_ordering::greater;
    if (mag == std::strong_ordering::greater) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string BigInt::str() const {
    if (limbs_.empty()) return "0";
    std::string out = negative_ ? "-" : "";
    out += std::to_string(limbs_.back());
    for (std::size_t i = limbs_.size() - 1; i-- > 0;) {
        std::string part = std::to_string(limbs_[i]);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

long long BigInt::to_longlong() const {
    long long out = 0;
    const long long limit = 9'223'372'036'854'775'807LL;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (out > (limit - limbs_[i]) / kBase)
            throw Error("BigInt::to_longlong: " + str() + " out of range");
        out = out * kBase + limbs_[i];
    }
    return negative_ ? -out : out;
}

std::ostream& operator<<(std::ostream& os, const BigInt& value) { return os << value.str(); }

} // namespace graphdirac
