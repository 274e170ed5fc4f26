#include "chowkit/space.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace chowkit {

namespace {
// Stop growing product memo tables past this many stored terms; larger runs
// (the r=3 benchmark) recompute instead of exhausting memory.
constexpr size_t kMemoTermBudget = 8'000'000;
}  // namespace

// ---------------------------------------------------------------------------
// ProjSpace

ProjSpace::ProjSpace(int m) : Space(Kind::Proj, m, "P" + std::to_string(m)) {
    if (m < 0) throw std::invalid_argument("proj_space: negative dimension");
}

GradedElement ProjSpace::hyperplane_power(int d) const {
    GradedElement e(shared_from_this());
    if (d >= 0 && d <= dimension()) e.add_term(d, static_cast<LabelId>(d), Rational(1));
    return e;
}

std::string ProjSpace::label_string(LabelId label) const {
    if (label == 0) return "1";
    if (label == 1) return "h";
    return "h^" + std::to_string(label);
}

void ProjSpace::multiply_basis(LabelId a, LabelId b, Combo& out) const {
    const LabelId d = a + b;
    if (d <= static_cast<LabelId>(dimension())) out.emplace_back(d, 1);
}

// ---------------------------------------------------------------------------
// GrassmannianSpace

GrassmannianSpace::GrassmannianSpace(int k, int n)
    : Space(Kind::Grassmann, k * (n - k),
            "Gr(" + std::to_string(k) + "," + std::to_string(n) + ")"),
      k_(k),
      n_(n),
      box_(k, n - k) {
    if (k <= 0 || k >= n) throw std::invalid_argument("grassmannian: need 0 < k < n");
    auto by_degree = partitions_in_box_by_degree(box_);
    degree_first_.assign(by_degree.size() + 1, 0);
    for (size_t d = 0; d < by_degree.size(); ++d) {
        degree_first_[d] = labels_.size();
        for (auto& p : by_degree[d]) {
            index_.emplace(p, labels_.size());
            degrees_.push_back(static_cast<int>(d));
            labels_.push_back(std::move(p));
        }
    }
    degree_first_[by_degree.size()] = labels_.size();
    if (labels_.size() != binomial(n, k).get_ui())
        throw std::logic_error("grassmannian: basis count mismatch");
}

const Partition& GrassmannianSpace::partition_of(LabelId label) const {
    return labels_.at(static_cast<size_t>(label));
}

LabelId GrassmannianSpace::label_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
        throw std::invalid_argument(name() + ": " + p.str() + " does not fit the box");
    return it->second;
}

std::pair<size_t, size_t> GrassmannianSpace::degree_range(int d) const {
    if (d < 0 || d > dimension()) return {0, 0};
    return {degree_first_[static_cast<size_t>(d)], degree_first_[static_cast<size_t>(d) + 1]};
}

GradedElement GrassmannianSpace::schubert_class(const Partition& p) const {
    GradedElement e(shared_from_this());
    e.add_term(p.weight(), label_of(p), Rational(1));
    return e;
}

GradedElement GrassmannianSpace::chern_sub_dual(int i) const {
    if (i < 0 || i > k_) throw std::invalid_argument(name() + ": c_i(E*) needs 0 <= i <= k");
    if (i == 0) return GradedElement::unit(shared_from_this());
    return schubert_class(Partition(std::vector<int>(static_cast<size_t>(i), 1)));
}

GradedElement GrassmannianSpace::chern_quotient(int i) const {
    if (i < 0 || i > n_ - k_)
        throw std::invalid_argument(name() + ": c_i(Q) needs 0 <= i <= n-k");
    if (i == 0) return GradedElement::unit(shared_from_this());
    return schubert_class(Partition{i});
}

int GrassmannianSpace::label_degree(LabelId label) const {
    return degrees_.at(static_cast<size_t>(label));
}

std::string GrassmannianSpace::label_string(LabelId label) const {
    return "s" + partition_of(label).str();
}

void GrassmannianSpace::multiply_basis(LabelId a, LabelId b, Combo& out) const {
    if (a > b) std::swap(a, b);
    if (a == 0) {  // unit
        out.emplace_back(b, 1);
        return;
    }
    if (label_degree(a) + label_degree(b) > dimension()) return;
    const std::uint64_t key = (a << 32) | b;
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
            return;
        }
    }
    Combo combo;
    for (const auto& [nu, c] : schubert_product(partition_of(a), partition_of(b), box_))
        combo.emplace_back(label_of(nu), c);
    out.insert(out.end(), combo.begin(), combo.end());
    std::lock_guard<std::mutex> lock(memo_mu_);
    if (memo_terms_ + combo.size() <= kMemoTermBudget) {
        memo_terms_ += combo.size();
        memo_.emplace(key, std::move(combo));
    }
}

// ---------------------------------------------------------------------------
// ProductSpace

ProductSpace::ProductSpace(std::shared_ptr<const Space> a, std::shared_ptr<const Space> b)
    : Space(Kind::Product, a->dimension() + b->dimension(), a->name() + "x" + b->name()),
      a_(std::move(a)),
      b_(std::move(b)) {
    if (a_->kind() == Kind::Product || b_->kind() == Kind::Product ||
        a_->kind() == Kind::ProjBundle || b_->kind() == Kind::ProjBundle)
        throw std::invalid_argument("product_space: factors must be Grassmannians or P^m");
}

int ProductSpace::label_degree(LabelId label) const {
    return a_->label_degree(first_of(label)) + b_->label_degree(second_of(label));
}

int ProductSpace::label_first_degree(LabelId label) const {
    return a_->label_degree(first_of(label));
}

std::string ProductSpace::label_string(LabelId label) const {
    return a_->label_string(first_of(label)) + "(x)" + b_->label_string(second_of(label));
}

LabelId ProductSpace::unit_label() const { return pack(a_->unit_label(), b_->unit_label()); }

LabelId ProductSpace::point_label() const { return pack(a_->point_label(), b_->point_label()); }

void ProductSpace::multiply_basis(LabelId x, LabelId y, Combo& out) const {
    Combo ca, cb;
    a_->multiply_basis(first_of(x), first_of(y), ca);
    if (ca.empty()) return;
    b_->multiply_basis(second_of(x), second_of(y), cb);
    for (const auto& [la, wa] : ca)
        for (const auto& [lb, wb] : cb) out.emplace_back(pack(la, lb), wa * wb);
}

// ---------------------------------------------------------------------------
// ProjBundleSpace

ProjBundleSpace::ProjBundleSpace(std::shared_ptr<const Space> base, int fiber_rank,
                                 std::vector<BaseClass> chern_of_fiber,
                                 std::vector<BaseClass> segre_of_fiber)
    : Space(Kind::ProjBundle, base->dimension() + fiber_rank - 1,
            "P(F" + std::to_string(fiber_rank) + "/" + base->name() + ")"),
      base_(std::move(base)),
      fiber_rank_(fiber_rank),
      chern_(std::move(chern_of_fiber)),
      segre_(std::move(segre_of_fiber)) {
    if (fiber_rank_ <= 0) throw std::invalid_argument("proj_bundle: fiber rank must be positive");
    if (fiber_rank_ > 255) throw std::invalid_argument("proj_bundle: fiber rank too large");
    chern_.resize(static_cast<size_t>(fiber_rank_) + 1);
    segre_.resize(static_cast<size_t>(base_->dimension()) + 1);

    // zeta^rank = -(c_1 zeta^{rank-1} + ... + c_rank), then keep multiplying by
    // zeta and re-reducing to fill powers up to 2 rank - 2.
    const int top = 2 * fiber_rank_ - 2;
    reduced_.resize(static_cast<size_t>(std::max(top - fiber_rank_ + 1, 0)));
    std::map<LabelId, long long> cur;
    for (int i = 1; i <= fiber_rank_; ++i)
        for (const auto& [l, c] : chern_[static_cast<size_t>(i)]) {
            if (base_->label_degree(l) + fiber_rank_ - i > dimension()) continue;
            cur[pack(l, fiber_rank_ - i)] -= c;
        }
    for (int t = fiber_rank_; t <= top; ++t) {
        auto& slot = reduced_[static_cast<size_t>(t - fiber_rank_)];
        for (const auto& [l, c] : cur)
            if (c != 0) slot.emplace_back(l, c);
        if (t == top) break;
        std::map<LabelId, long long> next;
        for (const auto& [l, c] : cur) {
            const LabelId bl = base_of(l);
            const int j = zeta_of(l) + 1;
            if (base_->label_degree(bl) + j > dimension()) continue;
            if (j < fiber_rank_) {
                next[pack(bl, j)] += c;
            } else {  // j == fiber_rank_: fold through the degree-rank relation
                for (const auto& [rl, rc] : reduced_[0]) {
                    Combo prod;
                    base_->multiply_basis(bl, base_of(rl), prod);
                    for (const auto& [pl, pc] : prod) {
                        if (base_->label_degree(pl) + zeta_of(rl) > dimension()) continue;
                        next[pack(pl, zeta_of(rl))] += c * rc * pc;
                    }
                }
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
}

const ProjBundleSpace::BaseClass& ProjBundleSpace::segre(int j) const {
    if (j < 0 || j > base_->dimension()) return empty_;
    return segre_[static_cast<size_t>(j)];
}

GradedElement ProjBundleSpace::zeta_power(int j) const {
    if (j < 0 || j >= fiber_rank_)
        throw std::invalid_argument("zeta_power: exponent must lie in [0, rank)");
    GradedElement e(shared_from_this());
    if (j <= dimension()) e.add_term(j, pack(base_->unit_label(), j), Rational(1));
    return e;
}

GradedElement ProjBundleSpace::pullback_from_base(const GradedElement& x) const {
    if (x.space().get() != base_.get())
        throw std::invalid_argument("pullback_from_base: element not on the base");
    GradedElement out(shared_from_this());
    for (const auto& [d, b] : x.buckets())
        for (const auto& [l, c] : b) out.add_term(d, pack(l, 0), c);
    return out;
}

int ProjBundleSpace::label_degree(LabelId label) const {
    return base_->label_degree(base_of(label)) + zeta_of(label);
}

std::string ProjBundleSpace::label_string(LabelId label) const {
    const int j = zeta_of(label);
    std::string b = base_->label_string(base_of(label));
    if (j == 0) return b;
    std::string z = (j == 1) ? "z" : "z^" + std::to_string(j);
    return (b == "1") ? z : b + "*" + z;
}

void ProjBundleSpace::multiply_basis(LabelId x, LabelId y, Combo& out) const {
    if (x > y) std::swap(x, y);
    const auto key = std::make_pair(x, y);
    {
        std::lock_guard<std::mutex> lock(memo_mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            out.insert(out.end(), it->second.begin(), it->second.end());
            return;
        }
    }
    Combo result;
    Combo base_prod;
    base_->multiply_basis(base_of(x), base_of(y), base_prod);
    const int t = zeta_of(x) + zeta_of(y);
    std::map<LabelId, long long> acc;
    for (const auto& [bl, bc] : base_prod) {
        if (t < fiber_rank_) {
            if (base_->label_degree(bl) + t <= dimension()) acc[pack(bl, t)] += bc;
        } else {
            for (const auto& [rl, rc] : reduced_[static_cast<size_t>(t - fiber_rank_)]) {
                Combo prod;
                base_->multiply_basis(bl, base_of(rl), prod);
                for (const auto& [pl, pc] : prod) {
                    if (base_->label_degree(pl) + zeta_of(rl) > dimension()) continue;
                    acc[pack(pl, zeta_of(rl))] += bc * rc * pc;
                }
            }
        }
    }
    for (const auto& [l, c] : acc)
        if (c != 0) result.emplace_back(l, c);
    out.insert(out.end(), result.begin(), result.end());
    std::lock_guard<std::mutex> lock(memo_mu_);
    memo_.emplace(key, std::move(result));
}

// ---------------------------------------------------------------------------
// Factories

std::shared_ptr<const ProjSpace> proj_space(int m) { return std::make_shared<ProjSpace>(m); }

std::shared_ptr<const GrassmannianSpace> grassmannian_space(int k, int n) {
    return std::make_shared<GrassmannianSpace>(k, n);
}

std::shared_ptr<const ProductSpace> product_space(std::shared_ptr<const Space> a,
                                                  std::shared_ptr<const Space> b) {
    return std::make_shared<ProductSpace>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Integration and pushforwards

Rational integrate(const GradedElement& x) {
    return x.coefficient(x.space()->dimension(), x.space()->point_label());
}

GradedElement pushforward_to_first_factor(const GradedElement& x) {
    const auto* prod = dynamic_cast<const ProductSpace*>(x.space().get());
    if (!prod)
        throw std::invalid_argument("pushforward_to_first_factor: element not on a product");
    GradedElement out(prod->first());
    const LabelId pt = prod->second()->point_label();
    const int fiber_dim = prod->second()->dimension();
    for (const auto& [d, b] : x.buckets())
        for (const auto& [l, c] : b)
            if (ProductSpace::second_of(l) == pt)
                out.add_term(d - fiber_dim, ProductSpace::first_of(l), c);
    return out;
}

GradedElement pullback_first(const std::shared_ptr<const ProductSpace>& p,
                             const GradedElement& a) {
    if (a.space().get() != p->first().get())
        throw std::invalid_argument("pullback_first: element not on the first factor");
    GradedElement out(p);
    const LabelId ub = p->second()->unit_label();
    for (const auto& [d, b] : a.buckets())
        for (const auto& [l, c] : b) out.add_term(d, ProductSpace::pack(l, ub), c);
    return out;
}

GradedElement pullback_second(const std::shared_ptr<const ProductSpace>& p,
                              const GradedElement& b) {
    if (b.space().get() != p->second().get())
        throw std::invalid_argument("pullback_second: element not on the second factor");
    GradedElement out(p);
    const LabelId ua = p->first()->unit_label();
    for (const auto& [d, bk] : b.buckets())
        for (const auto& [l, c] : bk) out.add_term(d, ProductSpace::pack(ua, l), c);
    return out;
}

GradedElement projbundle_pushforward(const GradedElement& x) {
    const auto* pb = dynamic_cast<const ProjBundleSpace*>(x.space().get());
    if (!pb)
        throw std::invalid_argument("projbundle_pushforward: element not on a P(F)");
    const auto& base = pb->base();
    GradedElement out(base);
    for (const auto& [d, bucket] : x.buckets()) {
        for (const auto& [l, c] : bucket) {
            const int j = ProjBundleSpace::zeta_of(l);
            const int s_index = j - pb->fiber_rank() + 1;
            if (s_index < 0) continue;
            const LabelId bl = ProjBundleSpace::base_of(l);
            const int bd = base->label_degree(bl);
            for (const auto& [sl, sc] : pb->segre(s_index)) {
                Space::Combo prod;
                base->multiply_basis(bl, sl, prod);
                for (const auto& [pl, pc] : prod)
                    out.add_term(bd + s_index, pl, c * Rational(sc * pc));
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Chern-monomial conversion

std::string ChernPolynomial::monomial_name(const std::vector<int>& exps) {
    std::string s;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "c" + std::to_string(i + 1);
        if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
    }
    return s.empty() ? "1" : s;
}

std::string ChernPolynomial::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [exps, coeff] : terms) {
        if (coeff.is_zero()) continue;
        std::string mag = (coeff.sign() < 0 ? (-coeff).str() : coeff.str());
        if (first) {
            if (coeff.sign() < 0) os << "-";
            first = false;
        } else {
            os << (coeff.sign() < 0 ? " - " : " + ");
        }
        const std::string name = monomial_name(exps);
        if (mag == "1" && name != "1") os << name;
        else if (name == "1") os << mag;
        else os << mag << "*" << name;
    }
    return first ? "0" : os.str();
}

std::vector<std::pair<std::string, std::string>> ChernPolynomial::named_terms() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [exps, coeff] : terms)
        if (!coeff.is_zero()) out.emplace_back(monomial_name(exps), coeff.str());
    return out;
}

namespace {

void monomials_of_degree(int degree, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> exps(static_cast<size_t>(k), 0);
    // Exponent of c_i contributes i to the weighted degree.
    std::function<void(int, int)> rec = [&](int i, int remaining) {
        if (i == k) {
            if (remaining == 0) out.push_back(exps);
            return;
        }
        const int w = i + 1;
        for (int e = remaining / w; e >= 0; --e) {
            exps[static_cast<size_t>(i)] = e;
            rec(i + 1, remaining - e * w);
        }
        exps[static_cast<size_t>(i)] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), std::greater<std::vector<int>>());
}

}  // namespace

ChernPolynomial express_in_chern_monomials(const GradedElement& x, int degree) {
    const auto* gr = dynamic_cast<const GrassmannianSpace*>(x.space().get());
    if (!gr)
        throw std::invalid_argument("express_in_chern_monomials: element not on a Grassmannian");
    if (degree > gr->n() - gr->k())
        throw std::invalid_argument(
            "express_in_chern_monomials: degree exceeds n-k; conversion matrix would be "
            "rectangular");
    int hdeg = -1;
    if (!x.is_homogeneous(&hdeg) || (hdeg >= 0 && hdeg != degree))
        throw std::invalid_argument("express_in_chern_monomials: element not homogeneous of the "
                                    "requested degree");

    std::vector<std::vector<int>> monomials;
    monomials_of_degree(degree, gr->k(), monomials);
    const auto [first, last] = gr->degree_range(degree);
    const size_t nbasis = last - first;
    if (monomials.size() != nbasis)
        throw std::logic_error("express_in_chern_monomials: monomial/basis count mismatch");

    // Row m of A = Schubert expansion of the m-th monomial.
    std::vector<std::vector<Rational>> A(monomials.size(),
                                         std::vector<Rational>(nbasis));
    auto space = x.space();
    for (size_t m = 0; m < monomials.size(); ++m) {
        GradedElement mono = GradedElement::unit(space);
        for (size_t i = 0; i < monomials[m].size(); ++i)
            for (int e = 0; e < monomials[m][i]; ++e)
                mono = mono * gr->chern_sub_dual(static_cast<int>(i) + 1);
        for (size_t j = 0; j < nbasis; ++j)
            A[m][j] = mono.coefficient(degree, static_cast<LabelId>(first + j));
    }
    std::vector<Rational> rhs(nbasis);
    for (size_t j = 0; j < nbasis; ++j)
        rhs[j] = x.coefficient(degree, static_cast<LabelId>(first + j));

    // Solve A^T w = rhs by exact Gaussian elimination.
    const size_t n = nbasis;
    std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
    for (size_t row = 0; row < n; ++row) {
        for (size_t col = 0; col < n; ++col) M[row][col] = A[col][row];
        M[row][n] = rhs[row];
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col].is_zero()) ++piv;
        if (piv == n)
            throw std::logic_error("express_in_chern_monomials: singular conversion matrix");
        std::swap(M[col], M[piv]);
        const Rational inv = Rational(1) / M[col][col];
        for (size_t j = col; j <= n; ++j) M[col][j] *= inv;
        for (size_t row = 0; row < n; ++row) {
            if (row == col || M[row][col].is_zero()) continue;
            const Rational f = M[row][col];
            for (size_t j = col; j <= n; ++j) M[row][j] -= f * M[col][j];
        }
    }

    ChernPolynomial poly;
    poly.num_generators = gr->k();
    for (size_t m = 0; m < monomials.size(); ++m)
        if (!M[m][n].is_zero()) poly.terms.emplace(monomials[m], M[m][n]);
    return poly;
}

}  // namespace chowkit
