#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "softrough/errors.hpp"

namespace softrough {

/// Exact rational number, always in lowest terms with positive denominator.
/// Measure values stay exact until the presentation/entropy boundary.
class Ratio {
public:
    constexpr Ratio() = default;
    Ratio(long long num, long long den) : num_(num), den_(den) { normalize(); }

    static Ratio of(long long num, long long den) { return Ratio(num, den); }
    static Ratio whole(long long n) { return Ratio(n, 1); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == den_; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Ratio operator+(const Ratio& o) const { return Ratio(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
    Ratio operator-(const Ratio& o) const { return Ratio(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
    Ratio operator*(const Ratio& o) const { return Ratio(num_ * o.num_, den_ * o.den_); }

    bool operator==(const Ratio& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Ratio& o) const { return !(*this == o); }
    bool operator<(const Ratio& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Ratio& o) const { return num_ * o.den_ <= o.num_ * den_; }
    bool operator>(const Ratio& o) const { return o < *this; }
    bool operator>=(const Ratio& o) const { return o <= *this; }

    /// "p/q", or just "p" when the value is integral.
    std::string to_string() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    void normalize() {
        if (den_ == 0) fail(Errc::UndefinedMeasure, "zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Ratio one_minus(const Ratio& r) { return Ratio::whole(1) - r; }

} // namespace softrough
