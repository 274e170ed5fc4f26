#include "chowkit/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chowkit {

Partition::Partition(std::vector<int> parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    if (!parts.empty() && parts.back() == 0)
        throw std::invalid_argument("Partition: interior zero part");
    parts_ = std::move(parts);
    for (int p : parts_) weight_ += p;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

BoxShape::BoxShape(int r, int c) : rows(r), cols(c) {
    if (r <= 0 || c <= 0) throw std::invalid_argument("BoxShape: rows and cols must be positive");
}

Partition BoxShape::full() const {
    return Partition(std::vector<int>(static_cast<size_t>(rows), cols));
}

bool fits_in_box(const Partition& lambda, const BoxShape& box) {
    return lambda.length() <= box.rows && lambda.part(0) <= box.cols;
}

Partition complement_in_box(const Partition& lambda, const BoxShape& box) {
    if (!fits_in_box(lambda, box))
        throw std::invalid_argument("complement_in_box: " + lambda.str() + " does not fit " +
                                    std::to_string(box.rows) + "x" + std::to_string(box.cols));
    std::vector<int> comp(static_cast<size_t>(box.rows));
    for (int i = 0; i < box.rows; ++i)
        comp[static_cast<size_t>(i)] = box.cols - lambda.part(box.rows - 1 - i);
    return Partition(std::move(comp));
}

std::vector<Partition> pieri_multiply(const Partition& lambda, int m, const BoxShape& box) {
    if (m < 0) throw std::invalid_argument("pieri_multiply: negative number of boxes");
    if (!fits_in_box(lambda, box))
        throw std::invalid_argument("pieri_multiply: lambda does not fit the box");
    std::vector<Partition> out;
    std::vector<int> mu(static_cast<size_t>(box.rows));
    // Horizontal strip: mu_i in [lambda_i, lambda_{i-1}] (cols caps the first row).
    std::function<void(int, int)> rec = [&](int row, int remaining) {
        if (row == box.rows) {
            if (remaining == 0) out.emplace_back(mu);
            return;
        }
        int lo = lambda.part(row);
        int hi = (row == 0) ? box.cols : lambda.part(row - 1);
        for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
            mu[static_cast<size_t>(row)] = v;
            rec(row + 1, remaining - (v - lo));
        }
        mu[static_cast<size_t>(row)] = 0;
    };
    rec(0, m);
    std::sort(out.begin(), out.end());
    return out;
}

std::map<std::vector<int>, long long> giambelli_expand(const Partition& lambda) {
    const int l = lambda.length();
    std::map<std::vector<int>, long long> out;
    // Permutation expansion of det(sigma_{lambda_i + j - i}); l stays small.
    std::vector<int> perm(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i) perm[static_cast<size_t>(i)] = i;
    if (l == 0) {
        out[{}] = 1;
        return out;
    }
    do {
        int sign = 1;
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        std::vector<int> mono;
        bool dead = false;
        for (int i = 0; i < l && !dead; ++i) {
            int idx = lambda.part(i) + perm[static_cast<size_t>(i)] - i;
            if (idx < 0) dead = true;
            else if (idx > 0) mono.push_back(idx);
        }
        if (dead) continue;
        std::sort(mono.begin(), mono.end(), std::greater<int>());
        auto it = out.emplace(std::move(mono), 0).first;
        it->second += sign;
        if (it->second == 0) out.erase(it);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::map<Partition, long long> schubert_product(const Partition& lambda, const Partition& mu,
                                                const BoxShape& box) {
    if (!fits_in_box(lambda, box) || !fits_in_box(mu, box))
        throw std::invalid_argument("schubert_product: operand does not fit the box");
    // Expand the shorter factor through Giambelli; fewer rows means a smaller determinant.
    const Partition& base = (lambda.length() >= mu.length()) ? lambda : mu;
    const Partition& expand = (lambda.length() >= mu.length()) ? mu : lambda;

    std::map<Partition, long long> acc;
    for (const auto& [mono, coeff] : giambelli_expand(expand)) {
        std::map<Partition, long long> cur;
        cur[base] = coeff;
        for (int m : mono) {
            std::map<Partition, long long> next;
            for (const auto& [nu, c] : cur)
                for (const auto& rho : pieri_multiply(nu, m, box)) next[rho] += c;
            cur = std::move(next);
        }
        for (const auto& [nu, c] : cur) acc[nu] += c;
    }
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == 0) {
            it = acc.erase(it);
        } else if (it->second < 0) {
            throw std::logic_error("schubert_product: negative structure constant for " +
                                   it->first.str());
        } else {
            ++it;
        }
    }
    return acc;
}

std::vector<std::vector<Partition>> partitions_in_box_by_degree(const BoxShape& box) {
    std::vector<std::vector<Partition>> by_degree(
        static_cast<size_t>(box.dimension()) + 1);
    std::vector<int> cur(static_cast<size_t>(box.rows));
    std::function<void(int, int, int)> rec = [&](int row, int maxv, int weight) {
        if (row == box.rows) {
            std::vector<int> parts(cur.begin(), cur.begin() + row);
            by_degree[static_cast<size_t>(weight)].emplace_back(std::move(parts));
            return;
        }
        for (int v = maxv; v >= 0; --v) {
            cur[static_cast<size_t>(row)] = v;
            rec(row + 1, v, weight + v);
        }
    };
    rec(0, box.cols, 0);
    for (auto& bucket : by_degree) std::sort(bucket.begin(), bucket.end());
    return by_degree;
}

}  // namespace chowkit
