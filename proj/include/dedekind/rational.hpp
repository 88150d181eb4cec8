#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational numbers over arbitrary-precision integers.
 *
 * Invariants:
 * - denominator > 0, sign carried by the numerator
 * - gcd(|numerator|, denominator) = 1, so zero is uniquely 0/1
 *
 * Equality is therefore a field-by-field comparison and the reduced pair
 * is a valid hash key.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace dedekind {

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(const mpz_class& value);

    /// Parse "p/q" or "p". Throws std::invalid_argument.
    static Rational parse(const std::string& text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Largest integer <= value.
    mpz_class floor() const;

    /// "p/q" with the denominator always printed ("0/1", "-3/2", "5/1").
    std::string to_string() const;

    /// Decimal expansion with exactly `digits` fractional digits, rounded
    /// half-to-even. digits == 0 yields an integer without a point.
    std::string to_decimal(int digits) const;

    std::size_t hash() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

struct RationalHash {
    std::size_t operator()(const Rational& r) const { return r.hash(); }
};

}  // namespace dedekind
