#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace chowkit {

/// Integer partition in canonical form: weakly decreasing positive parts,
/// trailing zeros stripped. The empty partition is the unique weight-0 element.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    /// i-th part (0-based); 0 beyond the last part.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
    }
    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// "(2,1)"; the empty partition prints "()".
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Canonical ordering: by weight, then lexicographically descending, so
    /// ascending iteration lists e.g. (3) before (2,1) before (1,1,1).
    friend bool operator<(const Partition& a, const Partition& b) {
        if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
        return a.parts_ > b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// The k x (n-k) rectangle whose sub-partitions index the Schubert basis of Gr(k,n).
struct BoxShape {
    int rows = 0;
    int cols = 0;
    BoxShape(int r, int c);
    long long dimension() const { return static_cast<long long>(rows) * cols; }
    Partition full() const;
};

bool fits_in_box(const Partition& lambda, const BoxShape& box);

/// Poincare complement: (lambda^c)_i = cols - lambda_{rows+1-i}. Involutive;
/// weights of lambda and its complement add up to rows*cols.
Partition complement_in_box(const Partition& lambda, const BoxShape& box);

/// Pieri rule sigma_lambda * sigma_(m): all horizontal-strip extensions of
/// lambda by m boxes that still fit the box, each with multiplicity 1.
std::vector<Partition> pieri_multiply(const Partition& lambda, int m, const BoxShape& box);

/// Jacobi-Trudi determinant of sigma_lambda expanded into monomials in the
/// single-row classes. Keys are the row indices sorted descending (sigma_0
/// factors dropped); the empty key is the constant term.
std::map<std::vector<int>, long long> giambelli_expand(const Partition& lambda);

/// Structure constants c^nu_{lambda,mu} of the Schubert basis in the box,
/// computed by expanding sigma_mu via Giambelli and applying the Pieri rule.
std::map<Partition, long long> schubert_product(const Partition& lambda, const Partition& mu,
                                                const BoxShape& box);

/// All partitions fitting the box, grouped by weight; index d lists weight-d
/// partitions in canonical order.
std::vector<std::vector<Partition>> partitions_in_box_by_degree(const BoxShape& box);

}  // namespace chowkit
