#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace chowkit {

/// Arbitrary-precision rational number, always stored fully reduced with a
/// positive denominator. The engine does no floating-point arithmetic; every
/// coefficient that leaves a public operation is one of these.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p" or "p/q".
    static Rational from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(mpz_class(s));
        return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_canonical() const {
        if (sgn(v_.get_den()) <= 0) return false;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return g == 1;
    }
    int sign() const { return sgn(v_); }

    /// Requires an integral value that fits a signed 64-bit int.
    long long to_int64() const {
        if (!is_integer()) throw std::logic_error("Rational: not an integer: " + str());
        if (!v_.get_num().fits_slong_p())
            throw std::logic_error("Rational: integer does not fit 64 bits: " + str());
        return v_.get_num().get_si();
    }

    /// "p" when denominator is 1, else "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

inline mpz_class binomial(long n, long k) {
    if (k < 0) return 0;
    if (n >= 0) {
        if (k > n) return 0;
        mpz_class r;
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
        return r;
    }
    // C(n,k) = (-1)^k C(k-n-1, k) for n < 0
    mpz_class r = binomial(k - n - 1, k);
    return (k % 2 == 0) ? r : mpz_class(-r);
}

inline mpz_class factorial(long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline mpz_class pow_int(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base),
                  static_cast<unsigned long>(exp));
    if (base < 0 && (exp % 2) != 0) r = -r;
    return r;
}

}  // namespace chowkit
