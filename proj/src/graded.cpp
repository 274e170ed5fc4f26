#include "chowkit/graded.hpp"

#include "chowkit/space.hpp"

#include <sstream>
#include <stdexcept>

namespace chowkit {

GradedElement::GradedElement(std::shared_ptr<const Space> space) : space_(std::move(space)) {
    if (!space_) throw std::invalid_argument("GradedElement: null space");
}

GradedElement GradedElement::unit(std::shared_ptr<const Space> space) {
    GradedElement e(std::move(space));
    e.add_term(0, e.space_->unit_label(), Rational(1));
    return e;
}

size_t GradedElement::term_count() const {
    size_t n = 0;
    for (const auto& [d, b] : buckets_) n += b.size();
    return n;
}

void GradedElement::add_term(int degree, LabelId label, const Rational& c) {
    if (c.is_zero()) return;
    if (degree < 0 || degree > space_->dimension())
        throw std::invalid_argument("GradedElement: degree outside the space grading");
    auto& bucket = buckets_[degree];
    auto it = bucket.emplace(label, Rational()).first;
    it->second += c;
    if (it->second.is_zero()) {
        bucket.erase(it);
        if (bucket.empty()) buckets_.erase(degree);
    }
}

Rational GradedElement::coefficient(int degree, LabelId label) const {
    auto bit = buckets_.find(degree);
    if (bit == buckets_.end()) return Rational();
    auto it = bit->second.find(label);
    return it == bit->second.end() ? Rational() : it->second;
}

GradedElement GradedElement::homogeneous_part(int degree) const {
    GradedElement out(space_);
    auto it = buckets_.find(degree);
    if (it != buckets_.end()) out.buckets_[degree] = it->second;
    return out;
}

int GradedElement::max_degree() const {
    return buckets_.empty() ? -1 : buckets_.rbegin()->first;
}

bool GradedElement::is_homogeneous(int* degree) const {
    if (degree) *degree = buckets_.empty() ? -1 : buckets_.begin()->first;
    return buckets_.size() <= 1;
}

void GradedElement::check_compatible(const GradedElement& o) const {
    if (space_.get() != o.space_.get())
        throw std::invalid_argument("GradedElement: elements of different spaces (" +
                                    space_->name() + " vs " + o.space_->name() + ")");
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    check_compatible(o);
    GradedElement out = *this;
    out += o;
    return out;
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
    check_compatible(o);
    for (const auto& [d, b] : o.buckets_)
        for (const auto& [l, c] : b) add_term(d, l, c);
    return *this;
}

GradedElement GradedElement::operator-(const GradedElement& o) const {
    check_compatible(o);
    GradedElement out = *this;
    for (const auto& [d, b] : o.buckets_)
        for (const auto& [l, c] : b) out.add_term(d, l, -c);
    return out;
}

GradedElement GradedElement::operator*(const Rational& c) const {
    GradedElement out(space_);
    if (c.is_zero()) return out;
    for (const auto& [d, b] : buckets_)
        for (const auto& [l, x] : b) out.buckets_[d].emplace(l, x * c);
    return out;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
    return mul_capped(o, space_->dimension());
}

GradedElement GradedElement::mul_capped(const GradedElement& o, int total_cap,
                                        int first_cap) const {
    check_compatible(o);
    if (total_cap < 0 || total_cap > space_->dimension()) total_cap = space_->dimension();
    GradedElement out(space_);
    Space::Combo combo;
    for (const auto& [da, ba] : buckets_) {
        if (da > total_cap) break;
        for (const auto& [db, bb] : o.buckets_) {
            const int d = da + db;
            if (d > total_cap) break;
            auto& target = out.buckets_[d];
            for (const auto& [la, ca] : ba) {
                const int fa =
                    first_cap >= 0 ? space_->label_first_degree(la) : 0;
                if (first_cap >= 0 && fa > first_cap) continue;
                for (const auto& [lb, cb] : bb) {
                    if (first_cap >= 0 && fa + space_->label_first_degree(lb) > first_cap)
                        continue;
                    combo.clear();
                    space_->multiply_basis(la, lb, combo);
                    if (combo.empty()) continue;
                    const Rational c = ca * cb;
                    for (const auto& [l, k] : combo) {
                        auto it = target.emplace(l, Rational()).first;
                        it->second += c * Rational(k);
                    }
                }
            }
        }
    }
    // Sweep zeros produced by cancellation.
    for (auto bit = out.buckets_.begin(); bit != out.buckets_.end();) {
        auto& bucket = bit->second;
        for (auto it = bucket.begin(); it != bucket.end();)
            it = it->second.is_zero() ? bucket.erase(it) : std::next(it);
        bit = bucket.empty() ? out.buckets_.erase(bit) : std::next(bit);
    }
    return out;
}

GradedElement GradedElement::inverse_unit(int cap) const {
    if (cap < 0 || cap > space_->dimension()) cap = space_->dimension();
    if (coefficient(0, space_->unit_label()) != Rational(1) ||
        (buckets_.count(0) && buckets_.at(0).size() != 1))
        throw std::invalid_argument("GradedElement: inverse requires constant term 1");
    // inv_d = -sum_{i=1..d} c_i . inv_{d-i}
    std::vector<GradedElement> inv;
    inv.reserve(static_cast<size_t>(cap) + 1);
    inv.push_back(unit(space_));
    for (int d = 1; d <= cap; ++d) {
        GradedElement acc(space_);
        for (int i = 1; i <= d; ++i) {
            auto bit = buckets_.find(i);
            if (bit == buckets_.end()) continue;
            GradedElement ci(space_);
            ci.buckets_[i] = bit->second;
            acc += ci.mul_capped(inv[static_cast<size_t>(d - i)], d);
        }
        GradedElement neg(space_);
        neg = neg - acc;
        inv.push_back(neg.homogeneous_part(d));
    }
    GradedElement out(space_);
    for (const auto& piece : inv) out += piece;
    return out;
}

bool operator==(const GradedElement& a, const GradedElement& b) {
    return a.space_.get() == b.space_.get() && a.buckets_ == b.buckets_;
}

std::string GradedElement::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, b] : buckets_) {
        for (const auto& [l, c] : b) {
            if (!first) os << " + ";
            first = false;
            os << c.str() << "*" << space_->label_string(l);
        }
    }
    return os.str();
}

}  // namespace chowkit
