#pragma once

#include <string>
#include <vector>

#include "hcmod/rational.hpp"

namespace hcmod {

namespace detail {

// Coefficients of the m-th cyclotomic polynomial, ascending degree, computed
// by dividing x^m - 1 by the cyclotomic polynomials of the proper divisors.
// The division is exact over the integers because the polynomials are monic.
[[nodiscard]] inline std::vector<long long> cyclotomic_poly(int m) {
    if (m < 1) throw invalid_input("cyclotomic polynomial index must be positive");
    std::vector<long long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        std::vector<long long> phi_d = cyclotomic_poly(d);
        std::vector<long long> q(num.size() - phi_d.size() + 1, 0);
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            long long lead = num[k + phi_d.size() - 1];
            q[k] = lead;
            for (size_t i = 0; i < phi_d.size(); ++i) num[k + i] -= lead * phi_d[i];
        }
        for (long long c : num)
            if (c != 0) throw internal_error("cyclotomic polynomial division left a remainder");
        num = std::move(q);
    }
    return num;
}

} // namespace detail

// Element of the cyclotomic field generated by a primitive m-th root of
// unity, stored as exact rational coordinates on 1, z, z^2, ... up to the
// degree of the minimal polynomial. All arithmetic is exact.
class Cyclotomic {
public:
    explicit Cyclotomic(int m) : m_(m), coeff_(detail::cyclotomic_poly(m).size() - 1) {
        if (coeff_.empty()) coeff_.resize(1); // m = 1: the field is Q itself
    }

    [[nodiscard]] static Cyclotomic from_rational(int m, const Rational& r) {
        Cyclotomic c(m);
        c.coeff_[0] = r;
        return c;
    }

    [[nodiscard]] static Cyclotomic one(int m) { return from_rational(m, Rational(1)); }
    [[nodiscard]] static Cyclotomic zero(int m) { return Cyclotomic(m); }

    // z^k for the fixed primitive m-th root z.
    [[nodiscard]] static Cyclotomic zeta(int m, long long k) {
        k %= m;
        if (k < 0) k += m;
        std::vector<Rational> poly(static_cast<size_t>(k) + 1);
        poly[static_cast<size_t>(k)] = Rational(1);
        Cyclotomic c(m);
        c.coeff_ = reduce(m, std::move(poly), c.coeff_.size());
        return c;
    }

    [[nodiscard]] int conductor() const { return m_; }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeff_; }

    [[nodiscard]] bool is_zero() const {
        for (const Rational& c : coeff_)
            if (!c.is_zero()) return false;
        return true;
    }

    [[nodiscard]] bool is_rational() const {
        for (size_t i = 1; i < coeff_.size(); ++i)
            if (!coeff_[i].is_zero()) return false;
        return true;
    }

    // The rational value, when is_rational() holds.
    [[nodiscard]] Rational rational_part() const {
        if (!is_rational()) throw internal_error("value is not rational");
        return coeff_[0];
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        check_same_field(o);
        for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        check_same_field(o);
        for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
        return *this;
    }
    Cyclotomic& operator*=(const Cyclotomic& o) {
        check_same_field(o);
        std::vector<Rational> prod(2 * coeff_.size());
        for (size_t i = 0; i < coeff_.size(); ++i) {
            if (coeff_[i].is_zero()) continue;
            for (size_t j = 0; j < o.coeff_.size(); ++j) {
                if (o.coeff_[j].is_zero()) continue;
                prod[i + j] += coeff_[i] * o.coeff_[j];
            }
        }
        coeff_ = reduce(m_, std::move(prod), coeff_.size());
        return *this;
    }
    Cyclotomic& operator*=(const Rational& r) {
        for (Rational& c : coeff_) c *= r;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
    friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
    [[nodiscard]] Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (Rational& c : r.coeff_) c = -c;
        return r;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.m_ == b.m_ && a.coeff_ == b.coeff_;
    }

    // Deterministic total order for sorting rows of values.
    friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
        if (auto c = a.m_ <=> b.m_; c != 0) return c;
        for (size_t i = 0; i < a.coeff_.size(); ++i)
            if (auto c = a.coeff_[i] <=> b.coeff_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    [[nodiscard]] Cyclotomic pow(long long k) const {
        if (k < 0) throw invalid_input("negative cyclotomic power");
        Cyclotomic acc = one(m_);
        Cyclotomic base = *this;
        while (k > 0) {
            if (k & 1) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // Renders rationals plainly, the two imaginary units as "i"/"-i", and
    // everything else as an explicit coordinate vector on powers of z.
    [[nodiscard]] std::string to_string() const {
        if (is_rational()) return coeff_[0].to_string();
        if (m_ % 4 == 0) {
            Cyclotomic i_unit = zeta(m_, m_ / 4);
            if (*this == i_unit) return "i";
            if (*this == -i_unit) return "-i";
        }
        std::string s = "zeta" + std::to_string(m_) + "[";
        for (size_t i = 0; i < coeff_.size(); ++i) {
            if (i) s += ",";
            s += coeff_[i].to_string();
        }
        return s + "]";
    }

private:
    int m_;
    std::vector<Rational> coeff_;

    void check_same_field(const Cyclotomic& o) const {
        if (m_ != o.m_) throw internal_error("cyclotomic arithmetic across different fields");
    }

    [[nodiscard]] static std::vector<Rational> reduce(int m, std::vector<Rational> poly, size_t degree) {
        std::vector<long long> phi = detail::cyclotomic_poly(m);
        const size_t d = phi.size() - 1; // monic of degree d
        for (size_t k = poly.size(); k-- > d;) {
            if (poly[k].is_zero()) continue;
            Rational lead = poly[k];
            poly[k] = Rational(0);
            for (size_t i = 0; i < d; ++i) poly[k - d + i] -= lead * Rational(phi[i]);
        }
        poly.resize(std::max(degree, size_t{1}));
        return poly;
    }
};

// The unit scalars that decide admissibility. Values outside the four-element
// set are reported as `other`.
enum class UnitScalar { one, minus_one, i, minus_i, other };

[[nodiscard]] inline UnitScalar classify_unit_scalar(const Cyclotomic& s) {
    if (s == Cyclotomic::one(s.conductor())) return UnitScalar::one;
    if (s == -Cyclotomic::one(s.conductor())) return UnitScalar::minus_one;
    if (s.conductor() % 4 == 0) {
        Cyclotomic i_unit = Cyclotomic::zeta(s.conductor(), s.conductor() / 4);
        if (s == i_unit) return UnitScalar::i;
        if (s == -i_unit) return UnitScalar::minus_i;
    }
    return UnitScalar::other;
}

[[nodiscard]] inline std::string to_string(UnitScalar s) {
    switch (s) {
        case UnitScalar::one: return "1";
        case UnitScalar::minus_one: return "-1";
        case UnitScalar::i: return "i";
        case UnitScalar::minus_i: return "-i";
        case UnitScalar::other: return "other";
    }
    throw internal_error("unhandled scalar tag");
}

[[nodiscard]] inline UnitScalar parse_unit_scalar(const std::string& s) {
    if (s == "1" || s == "+1") return UnitScalar::one;
    if (s == "-1") return UnitScalar::minus_one;
    if (s == "i" || s == "+i") return UnitScalar::i;
    if (s == "-i") return UnitScalar::minus_i;
    throw invalid_input("unknown scalar '" + s + "' (expected 1, -1, i, or -i)");
}

} // namespace hcmod
