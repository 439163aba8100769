#pragma once

// Exact integers and canonical rationals, backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace wg {

using ExactInt = mpz_class;

inline ExactInt factorial(unsigned n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline ExactInt int_pow(const ExactInt& base, unsigned e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ExactInt binomial(unsigned n, unsigned k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Cat_n = binomial(2n, n) / (n + 1).
inline ExactInt catalan(unsigned n) {
    ExactInt r = binomial(2 * n, n);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), n + 1);
    return r;
}

inline std::string to_string(const ExactInt& v) { return v.get_str(10); }

/// Parses an optionally signed decimal integer.
inline ExactInt parse_int(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    const bool neg = !s.empty() && s.front() == '-';
    const std::string digits = neg ? s.substr(1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
    return ExactInt(s, 10);
}

/// Rational number kept in lowest terms with a positive denominator.
///
/// Every constructor and arithmetic operator leaves the value canonical, so
/// equal values always have identical numerator and denominator.
class ExactRat {
public:
    ExactRat() = default;
    ExactRat(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
    ExactRat(const ExactInt& n) : q_(n) {}  // NOLINT(google-explicit-constructor)

    ExactRat(const ExactInt& num, const ExactInt& den) {
        if (den == 0) throw std::domain_error("division by zero");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    ExactInt numerator() const { return q_.get_num(); }
    ExactInt denominator() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    ExactRat operator-() const { return from_canonical(-q_); }
    ExactRat reciprocal() const {
        if (q_ == 0) throw std::domain_error("division by zero");
        return from_canonical(1 / q_);
    }

    friend ExactRat operator+(const ExactRat& a, const ExactRat& b) { return from_canonical(a.q_ + b.q_); }
    friend ExactRat operator-(const ExactRat& a, const ExactRat& b) { return from_canonical(a.q_ - b.q_); }
    friend ExactRat operator*(const ExactRat& a, const ExactRat& b) { return from_canonical(a.q_ * b.q_); }
    friend ExactRat operator/(const ExactRat& a, const ExactRat& b) {
        if (b.q_ == 0) throw std::domain_error("division by zero");
        return from_canonical(a.q_ / b.q_);
    }
    ExactRat& operator+=(const ExactRat& o) { return *this = *this + o; }
    ExactRat& operator-=(const ExactRat& o) { return *this = *this - o; }
    ExactRat& operator*=(const ExactRat& o) { return *this = *this * o; }
    ExactRat& operator/=(const ExactRat& o) { return *this = *this / o; }

    // Canonical form makes structural equality and value equality coincide;
    // ordering cross-multiplies (mpq_cmp), never rounds.
    friend bool operator==(const ExactRat& a, const ExactRat& b) {
        return a.q_.get_num() == b.q_.get_num() && a.q_.get_den() == b.q_.get_den();
    }
    friend std::strong_ordering operator<=>(const ExactRat& a, const ExactRat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "N/D" with D > 0, always including the denominator.
    std::string str() const { return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10); }

    friend std::ostream& operator<<(std::ostream& os, const ExactRat& r) { return os << r.str(); }

private:
    static ExactRat from_canonical(mpq_class q) {
        ExactRat r;
        r.q_ = std::move(q);
        return r;
    }

    mpq_class q_{0};
};

inline ExactRat rat(const ExactInt& n, const ExactInt& d) { return ExactRat(n, d); }

inline std::string to_string(const ExactRat& r) { return r.str(); }

/// Accepts "N/D" or a bare integer "N".
inline ExactRat parse_rat(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return ExactRat(parse_int(text));
    const ExactInt num = parse_int(text.substr(0, slash));
    const ExactInt den = parse_int(text.substr(slash + 1));
    return ExactRat(num, den);
}

}  // namespace wg
