#pragma once

// Exact rational scalar used throughout the library.
//
// Values are always stored in lowest terms with a positive denominator, so
// structural equality is value equality. Arithmetic is delegated to GMP.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "iacpoly/errors.hpp"

namespace iacpoly {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}                       // NOLINT(google-explicit-constructor)
    Rational(long v) : v_(v) {}                      // NOLINT(google-explicit-constructor)
    Rational(long long v) : v_(BigInt(std::to_string(v))) {}  // NOLINT
    Rational(const BigInt& v) : v_(v) {}             // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "p/q", "-p/q" (optional leading '+' too). Whitespace is not
    /// accepted; callers tokenize first.
    static Rational parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty rational literal");
        std::size_t i = 0;
        bool neg = false;
        if (text[0] == '-' || text[0] == '+') {
            neg = text[0] == '-';
            i = 1;
        }
        const auto slash = text.find('/', i);
        const auto num_txt = text.substr(i, slash == std::string_view::npos ? text.size() - i : slash - i);
        const auto den_txt = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
        auto digits_only = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        if (!digits_only(num_txt) || !digits_only(den_txt))
            throw ParseError("malformed rational literal '" + std::string(text) + "'");
        BigInt num(std::string(num_txt), 10);
        BigInt den(std::string(den_txt), 10);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        if (neg) num = -num;
        return Rational(num, den);
    }

    [[nodiscard]] BigInt numerator() const { return v_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return v_; }

    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }

    [[nodiscard]] double to_double() const { return v_.get_d(); }

    /// "p/q", or "p" when q == 1.
    [[nodiscard]] std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Decimal string with `places` digits after the point, rounding half away
    /// from zero. Computed from the exact value.
    [[nodiscard]] std::string to_decimal(unsigned places = 5) const {
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
        BigInt num = abs(v_.get_num()) * scale * 2 + v_.get_den();
        BigInt den = v_.get_den() * 2;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        std::string digits = q.get_str();
        if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
        std::string out;
        if (sign() < 0 && q != 0) out.push_back('-');
        out += digits.substr(0, digits.size() - places);
        if (places > 0) {
            out.push_back('.');
            out += digits.substr(digits.size() - places);
        }
        return out;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

inline BigInt factorial(unsigned n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace iacpoly

template <>
struct std::hash<iacpoly::Rational> {
    std::size_t operator()(const iacpoly::Rational& r) const noexcept {
        const std::size_t h1 = std::hash<std::string>{}(r.numerator().get_str(16));
        const std::size_t h2 = std::hash<std::string>{}(r.denominator().get_str(16));
        return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
    }
};
