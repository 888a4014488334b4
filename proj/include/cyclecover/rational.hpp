#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclecover {

/// Exact rational arithmetic for degree-condition thresholds.
/// All comparisons cross-multiply in 128-bit, so thresholds that sit
/// exactly on integer boundaries are decided without rounding.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(long long value) : num_(value), den_(1) {}

    Rational(long long num, long long den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
        normalize();
    }

    long long num() const { return num_; }
    long long den() const { return den_; }

    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator-() const { return Rational(-num_, den_); }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return (__int128)num_ * o.den_ < (__int128)o.num_ * den_;
    }
    bool operator<=(const Rational& o) const { return !(o < *this); }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return !(*this < o); }

    /// Largest integer <= value.
    long long floor() const {
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// Renders "a/b", or just "a" when the denominator is 1.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Accepts "a/b", plain integers and plain decimals ("0.05" -> 1/20).
    static Rational parse(const std::string& text) {
        if (text.empty()) throw std::invalid_argument("rational: empty string");
        auto slash = text.find('/');
        if (slash != std::string::npos) {
            long long n = parse_ll(text.substr(0, slash));
            long long d = parse_ll(text.substr(slash + 1));
            return Rational(n, d);
        }
        auto dot = text.find('.');
        if (dot != std::string::npos) {
            std::string head = text.substr(0, dot), tail = text.substr(dot + 1);
            if (tail.empty() || tail.size() > 12)
                throw std::invalid_argument("rational: bad decimal " + text);
            long long den = 1;
            for (size_t i = 0; i < tail.size(); ++i) den *= 10;
            bool neg = !head.empty() && head[0] == '-';
            long long whole = head.empty() || head == "-" ? 0 : parse_ll(head);
            long long frac = parse_ll(tail);
            long long num = (neg ? -1 : 1) * ((neg ? -whole : whole) * den + frac);
            return Rational(num, den);
        }
        return Rational(parse_ll(text));
    }

private:
    void normalize() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    static long long parse_ll(const std::string& s) {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("rational: bad integer " + s);
        return v;
    }

    long long num_;
    long long den_;
};

inline Rational operator*(long long a, const Rational& r) { return Rational(a) * r; }
inline Rational operator+(long long a, const Rational& r) { return Rational(a) + r; }

} // namespace cyclecover
