#pragma once

#include "chowkit/rational.hpp"

#include <stdexcept>
#include <vector>

namespace chowkit {

/// Power series in one variable h truncated at a fixed modulus degree D
/// (h^{D+1} = 0). Coefficients are exact rationals.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int modulus_degree)
        : coeffs_(static_cast<size_t>(modulus_degree) + 1) {
        if (modulus_degree < 0) throw std::invalid_argument("TruncatedSeries: negative degree");
    }

    static TruncatedSeries constant(int modulus_degree, const Rational& c) {
        TruncatedSeries s(modulus_degree);
        s.coeffs_[0] = c;
        return s;
    }
    /// a + b*h
    static TruncatedSeries linear(int modulus_degree, const Rational& a, const Rational& b) {
        TruncatedSeries s(modulus_degree);
        s.coeffs_[0] = a;
        if (modulus_degree >= 1) s.coeffs_[1] = b;
        return s;
    }

    int modulus_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int d) const { return coeffs_.at(static_cast<size_t>(d)); }
    void set_coeff(int d, const Rational& c) { coeffs_.at(static_cast<size_t>(d)) = c; }
    bool is_unit() const { return coeffs_[0].is_one(); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same(b);
        TruncatedSeries out(a.modulus_degree());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same(b);
        TruncatedSeries out(a.modulus_degree());
        for (size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.check_same(b);
        TruncatedSeries out(a.modulus_degree());
        const size_t n = a.coeffs_.size();
        for (size_t i = 0; i < n; ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; i + j < n; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    /// Multiplicative inverse; requires constant term 1.
    TruncatedSeries inverse() const {
        if (!is_unit())
            throw std::invalid_argument("TruncatedSeries: inverse requires constant term 1");
        TruncatedSeries out(modulus_degree());
        out.coeffs_[0] = Rational(1);
        for (size_t d = 1; d < coeffs_.size(); ++d) {
            Rational acc;
            for (size_t i = 1; i <= d; ++i) acc += coeffs_[i] * out.coeffs_[d - i];
            out.coeffs_[d] = -acc;
        }
        return out;
    }

    /// Exact integer power; negative exponents invert first (unit series only).
    TruncatedSeries pow(long e) const {
        TruncatedSeries base = *this;
        if (e < 0) {
            base = inverse();
            e = -e;
        }
        TruncatedSeries out = constant(modulus_degree(), Rational(1));
        while (e > 0) {
            if (e & 1) out = out * base;
            base = base * base;
            e >>= 1;
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void check_same(const TruncatedSeries& o) const {
        if (coeffs_.size() != o.coeffs_.size())
            throw std::invalid_argument("TruncatedSeries: modulus degree mismatch");
    }
    std::vector<Rational> coeffs_;
};

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + b;
}
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a * b;
}
inline TruncatedSeries series_pow(const TruncatedSeries& a, long e) { return a.pow(e); }

}  // namespace chowkit
