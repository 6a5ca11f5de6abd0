#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hcmod {

// Contract violation caused by caller-supplied data (bad partition, index
// out of range, malformed CLI input). The CLI maps this to exit code 2.
class invalid_input : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Internal consistency failure. The CLI maps this to exit code 1.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Exact rational number on int64. Every quantity in this project is tiny
// (denominators divide small powers of two, numerators are bounded by group
// orders), so int64 with __int128 intermediates is plenty; the range checks
// turn a hypothetical overflow into an exception instead of UB.
class Rational {
public:
    constexpr Rational() = default;

    Rational(long long num, long long den = 1) : num_(num), den_(den) { normalize(); }

    [[nodiscard]] long long num() const { return num_; }
    [[nodiscard]] long long den() const { return den_; }

    [[nodiscard]] bool is_zero() const { return num_ == 0; }
    [[nodiscard]] bool is_integer() const { return den_ == 1; }

    // Valid only for integers; used for the parity tests in the classifier.
    [[nodiscard]] bool is_odd_integer() const { return den_ == 1 && (num_ % 2 != 0); }
    [[nodiscard]] bool is_even_integer() const { return den_ == 1 && (num_ % 2 == 0); }

    Rational& operator+=(const Rational& o) {
        return assign(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator-=(const Rational& o) {
        return assign(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rational& operator*=(const Rational& o) {
        return assign(i128(num_) * o.num_, i128(den_) * o.den_);
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw invalid_input("rational division by zero");
        return assign(i128(num_) * o.den_, i128(den_) * o.num_);
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational&, const Rational&) = default;

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        i128 lhs = i128(a.num_) * b.den_;
        i128 rhs = i128(b.num_) * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    // Accepts "p" or "p/q" with an optional leading sign, e.g. "-1/2".
    static Rational parse(std::string_view text) {
        auto bad = [&] { throw invalid_input("malformed rational: '" + std::string(text) + "'"); };
        size_t slash = text.find('/');
        long long num = parse_int(text.substr(0, slash == std::string_view::npos ? text.size() : slash), bad);
        long long den = 1;
        if (slash != std::string_view::npos) den = parse_int(text.substr(slash + 1), bad);
        return Rational(num, den);
    }

private:
    using i128 = __int128;

    long long num_ = 0;
    long long den_ = 1;

    static long long narrow(i128 v) {
        if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
            throw internal_error("rational overflow");
        return static_cast<long long>(v);
    }

    Rational& assign(i128 num, i128 den) {
        i128 g = gcd128(num < 0 ? -num : num, den < 0 ? -den : den);
        if (g > 1) { num /= g; den /= g; }
        num_ = narrow(num);
        den_ = narrow(den);
        normalize();
        return *this;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw invalid_input("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    template <class Fail>
    static long long parse_int(std::string_view s, Fail&& bad) {
        if (s.empty()) bad();
        bool neg = false;
        size_t i = 0;
        if (s[0] == '+' || s[0] == '-') { neg = (s[0] == '-'); i = 1; }
        if (i == s.size()) bad();
        long long v = 0;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') bad();
            if (v > (std::numeric_limits<long long>::max() - 9) / 10)
                throw invalid_input("rational literal out of range");
            v = v * 10 + (s[i] - '0');
        }
        return neg ? -v : v;
    }
};

} // namespace hcmod
