// Exact rational numbers with arbitrary-precision numerator and denominator.
//
// Every value is kept in lowest terms with a positive denominator; zero is 0/1.
// Backed by GMP's mpq_class.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orr {

using Integer = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    Rational(const Integer& numerator, const Integer& denominator);
    explicit Rational(const Integer& value);

    /// Parses `p` or `p/q` (optional leading '-'); the result is reduced.
    static Rational parse(std::string_view text);

    [[nodiscard]] Integer numerator() const { return value_.get_num(); }
    [[nodiscard]] Integer denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(value_); }

    /// Largest integer not exceeding the value.
    [[nodiscard]] Integer floor() const;
    /// Value minus its floor, in [0, 1).
    [[nodiscard]] Rational fractional_part() const;

    /// Approximate value, for human-facing output only.
    [[nodiscard]] double approximate() const { return value_.get_d(); }

    /// `p` for integers, `p/q` otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        return cmp(lhs.value_, rhs.value_) <=> 0;
    }

private:
    explicit Rational(mpq_class value);

    mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace orr
