#pragma once

#include "chowkit/graded.hpp"
#include "chowkit/partition.hpp"
#include "chowkit/rational.hpp"

#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace chowkit {

/// A Chow-ring presentation: dimension, graded basis with integer structure
/// constants, and an integration functional on the top degree. Spaces are
/// immutable after construction; elements refer to their space by identity.
class Space : public std::enable_shared_from_this<Space> {
public:
    enum class Kind { Proj, Grassmann, Product, ProjBundle };
    using Combo = std::vector<std::pair<LabelId, long long>>;

    virtual ~Space() = default;

    Kind kind() const { return kind_; }
    int dimension() const { return dim_; }
    const std::string& name() const { return name_; }

    virtual int label_degree(LabelId label) const = 0;
    /// Degree contributed by the first factor; equals label_degree off
    /// product spaces. Drives per-factor pruning in capped products.
    virtual int label_first_degree(LabelId label) const { return label_degree(label); }
    virtual std::string label_string(LabelId label) const = 0;
    virtual LabelId unit_label() const = 0;
    virtual LabelId point_label() const = 0;
    /// Structure constants of the basis product, appended to `out`.
    virtual void multiply_basis(LabelId a, LabelId b, Combo& out) const = 0;

protected:
    Space(Kind kind, int dim, std::string name)
        : kind_(kind), dim_(dim), name_(std::move(name)) {}

private:
    Kind kind_;
    int dim_;
    std::string name_;
};

/// P^m with basis 1, h, ..., h^m; label d encodes h^d.
class ProjSpace final : public Space {
public:
    explicit ProjSpace(int m);
    int m() const { return dimension(); }
    GradedElement hyperplane_power(int d) const;  // h^d as an element

    int label_degree(LabelId label) const override { return static_cast<int>(label); }
    std::string label_string(LabelId label) const override;
    LabelId unit_label() const override { return 0; }
    LabelId point_label() const override { return static_cast<LabelId>(dimension()); }
    void multiply_basis(LabelId a, LabelId b, Combo& out) const override;
};

/// Gr(k,n) with the Schubert basis indexed by partitions in the k x (n-k)
/// box, listed by weight then lexicographically descending. Products are
/// memoized behind a lock; the tables never change an already published entry.
class GrassmannianSpace final : public Space {
public:
    GrassmannianSpace(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    const BoxShape& box() const { return box_; }
    size_t basis_size() const { return labels_.size(); }
    const std::vector<Partition>& basis() const { return labels_; }
    const Partition& partition_of(LabelId label) const;
    LabelId label_of(const Partition& p) const;
    /// Half-open index range [first, last) of the degree-d labels.
    std::pair<size_t, size_t> degree_range(int d) const;

    GradedElement schubert_class(const Partition& p) const;
    /// c_i(E*) = sigma_{(1^i)} for the tautological subbundle E.
    GradedElement chern_sub_dual(int i) const;
    /// c_i(Q) = sigma_{(i)} for the tautological quotient Q.
    GradedElement chern_quotient(int i) const;

    int label_degree(LabelId label) const override;
    std::string label_string(LabelId label) const override;
    LabelId unit_label() const override { return 0; }
    LabelId point_label() const override { return static_cast<LabelId>(labels_.size() - 1); }
    void multiply_basis(LabelId a, LabelId b, Combo& out) const override;

private:
    int k_, n_;
    BoxShape box_;
    std::vector<Partition> labels_;
    std::vector<int> degrees_;
    std::vector<size_t> degree_first_;  // size dim+2
    std::map<Partition, LabelId> index_;

    mutable std::mutex memo_mu_;
    mutable std::unordered_map<std::uint64_t, Combo> memo_;
    mutable size_t memo_terms_ = 0;
};

/// A x B with the tensor basis; labels pack the factor labels into one word.
class ProductSpace final : public Space {
public:
    ProductSpace(std::shared_ptr<const Space> a, std::shared_ptr<const Space> b);

    const std::shared_ptr<const Space>& first() const { return a_; }
    const std::shared_ptr<const Space>& second() const { return b_; }

    static LabelId pack(LabelId a, LabelId b) { return (a << 32) | b; }
    static LabelId first_of(LabelId label) { return label >> 32; }
    static LabelId second_of(LabelId label) { return label & 0xffffffffULL; }

    int label_degree(LabelId label) const override;
    int label_first_degree(LabelId label) const override;
    std::string label_string(LabelId label) const override;
    LabelId unit_label() const override;
    LabelId point_label() const override;
    void multiply_basis(LabelId a, LabelId b, Combo& out) const override;

private:
    std::shared_ptr<const Space> a_, b_;
};

/// P(F) for a bundle F of rank r on the base: the base ring adjoined one
/// degree-1 generator zeta with zeta^r + c_1(F) zeta^{r-1} + ... + c_r(F) = 0.
/// Labels pack (base label, zeta power). Construct via proj_bundle() in
/// sheaf.hpp, which extracts the Chern and Segre data from the bundle.
class ProjBundleSpace final : public Space {
public:
    using BaseClass = std::vector<std::pair<LabelId, long long>>;

    ProjBundleSpace(std::shared_ptr<const Space> base, int fiber_rank,
                    std::vector<BaseClass> chern_of_fiber, std::vector<BaseClass> segre_of_fiber);

    const std::shared_ptr<const Space>& base() const { return base_; }
    int fiber_rank() const { return fiber_rank_; }
    /// Segre class s_j(F) of the fiber bundle as a base-space class (zero for
    /// j < 0 or beyond the base dimension).
    const BaseClass& segre(int j) const;

    static LabelId pack(LabelId base_label, int zeta_pow) {
        return (base_label << 8) | static_cast<LabelId>(zeta_pow);
    }
    static LabelId base_of(LabelId label) { return label >> 8; }
    static int zeta_of(LabelId label) { return static_cast<int>(label & 0xff); }

    GradedElement zeta_power(int j) const;  // zeta^j, already reduced (j < rank required)
    GradedElement pullback_from_base(const GradedElement& x) const;

    int label_degree(LabelId label) const override;
    std::string label_string(LabelId label) const override;
    LabelId unit_label() const override { return pack(base_->unit_label(), 0); }
    LabelId point_label() const override {
        return pack(base_->point_label(), fiber_rank_ - 1);
    }
    void multiply_basis(LabelId a, LabelId b, Combo& out) const override;

private:
    std::shared_ptr<const Space> base_;
    int fiber_rank_;
    std::vector<BaseClass> chern_;  // index i: c_i(F), i = 0..rank
    std::vector<BaseClass> segre_;  // index j: s_j(F), j = 0..dim base
    BaseClass empty_;
    // zeta^t for t = rank .. 2 rank - 2, reduced to powers < rank.
    std::vector<Combo> reduced_;
    mutable std::mutex memo_mu_;
    mutable std::map<std::pair<LabelId, LabelId>, Combo> memo_;
};

std::shared_ptr<const ProjSpace> proj_space(int m);
std::shared_ptr<const GrassmannianSpace> grassmannian_space(int k, int n);
std::shared_ptr<const ProductSpace> product_space(std::shared_ptr<const Space> a,
                                                  std::shared_ptr<const Space> b);

/// Coefficient of the point class; components below the top degree contribute 0.
Rational integrate(const GradedElement& x);

/// Integration over the second factor of a product: the pair (lambda, mu)
/// maps to lambda when mu is the point class of the second factor, else to 0.
GradedElement pushforward_to_first_factor(const GradedElement& x);

GradedElement pullback_first(const std::shared_ptr<const ProductSpace>& p,
                             const GradedElement& a);
GradedElement pullback_second(const std::shared_ptr<const ProductSpace>& p,
                              const GradedElement& b);

/// Projective-bundle pushforward: zeta^j . p*alpha -> s_{j-r+1}(F) . alpha.
GradedElement projbundle_pushforward(const GradedElement& x);

/// Polynomial in the Chern generators c_1..c_k, keyed by exponent vectors in
/// lexicographically descending order (c_1-degree first).
struct ChernPolynomial {
    int num_generators = 0;
    std::map<std::vector<int>, Rational, std::greater<std::vector<int>>> terms;

    static std::string monomial_name(const std::vector<int>& exps);
    std::string str() const;
    /// Ordered (monomial name, coefficient string) pairs of the nonzero terms.
    std::vector<std::pair<std::string, std::string>> named_terms() const;
    friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
        return a.terms == b.terms;
    }
};

/// Writes a homogeneous degree-d class on Gr(k,n) as a polynomial in
/// c_1..c_k of E*. Requires d <= n-k, where the monomials of weighted degree
/// d and the degree-d Schubert basis have the same count; solved exactly.
ChernPolynomial express_in_chern_monomials(const GradedElement& x, int degree);

}  // namespace chowkit
