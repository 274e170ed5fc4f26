#pragma once

#include "chowkit/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>

namespace chowkit {

class Space;

/// Basis label inside a space. Encoding is space-specific (partition index on
/// a Grassmannian, monomial exponent on projective space, packed pair on a
/// product or projective bundle).
using LabelId = std::uint64_t;

/// Sparse exact-rational linear combination of graded basis labels of one
/// space, bucketed by degree. No zero coefficients are stored and no label of
/// degree above the space dimension can appear. Elements of different spaces
/// never mix.
class GradedElement {
public:
    using Bucket = std::map<LabelId, Rational>;
    using Buckets = std::map<int, Bucket>;

    explicit GradedElement(std::shared_ptr<const Space> space);
    static GradedElement unit(std::shared_ptr<const Space> space);

    const std::shared_ptr<const Space>& space() const { return space_; }
    bool is_zero() const { return buckets_.empty(); }
    const Buckets& buckets() const { return buckets_; }
    size_t term_count() const;

    /// Accumulates c at the given label; pass the label's degree.
    void add_term(int degree, LabelId label, const Rational& c);
    Rational coefficient(int degree, LabelId label) const;
    GradedElement homogeneous_part(int degree) const;
    int max_degree() const;  // -1 for zero
    /// True when supported in a single degree (the zero element is homogeneous
    /// of every degree; *degree is then -1).
    bool is_homogeneous(int* degree = nullptr) const;

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator-(const GradedElement& o) const;
    GradedElement operator*(const Rational& c) const;
    GradedElement operator*(const GradedElement& o) const;
    GradedElement& operator+=(const GradedElement& o);

    /// Product truncated at total degree `total_cap` (default: space
    /// dimension) and, on product spaces, at first-factor degree `first_cap`.
    GradedElement mul_capped(const GradedElement& o, int total_cap, int first_cap = -1) const;

    /// Multiplicative inverse of a unit element (constant term 1), truncated
    /// at `cap` (default: space dimension).
    GradedElement inverse_unit(int cap = -1) const;

    friend bool operator==(const GradedElement& a, const GradedElement& b);
    friend bool operator!=(const GradedElement& a, const GradedElement& b) { return !(a == b); }

    std::string str() const;

private:
    void check_compatible(const GradedElement& o) const;
    std::shared_ptr<const Space> space_;
    Buckets buckets_;
};

}  // namespace chowkit
