#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace parahex {

/// Exact angle in degrees, stored as a reduced fraction with positive
/// denominator. All arithmetic is exact; overflow throws DomainError.
class AngleDeg {
public:
    constexpr AngleDeg() = default;
    AngleDeg(std::int64_t num, std::int64_t den = 1);

    static AngleDeg full_turn() { return AngleDeg(360); }
    static AngleDeg half_turn() { return AngleDeg(180); }

    /// Parses "134", "134.5", "-12.25" or "360/7". Decimals are exact
    /// fractions over powers of ten.
    static AngleDeg parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    double degrees() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    double radians() const;
    double cos() const;
    double sin() const;

    bool is_integer() const { return den_ == 1; }

    /// Reduced into [0, 360).
    AngleDeg normalized() const;

    /// "num/den" (always with the slash).
    std::string to_string() const;
    /// Decimal rounded half-up to `places` digits, computed exactly.
    std::string to_fixed(int places) const;

    AngleDeg operator-() const { return AngleDeg(-num_, den_); }
    AngleDeg& operator+=(const AngleDeg& o);
    AngleDeg& operator-=(const AngleDeg& o);

    friend AngleDeg operator+(AngleDeg a, const AngleDeg& b) { return a += b; }
    friend AngleDeg operator-(AngleDeg a, const AngleDeg& b) { return a -= b; }
    friend AngleDeg operator*(const AngleDeg& a, std::int64_t k);
    friend AngleDeg operator*(std::int64_t k, const AngleDeg& a) { return a * k; }
    friend AngleDeg operator/(const AngleDeg& a, std::int64_t k);

    friend bool operator==(const AngleDeg& a, const AngleDeg& b) = default;
    friend std::strong_ordering operator<=>(const AngleDeg& a, const AngleDeg& b);

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::string to_string(const AngleDeg& a);

/// 360/n for n >= 1.
AngleDeg turn_fraction(std::int64_t n);

}  // namespace parahex
