#pragma once

#include "chowkit/graded.hpp"
#include "chowkit/space.hpp"

#include <gmpxx.h>

#include <map>
#include <memory>
#include <vector>

namespace chowkit {

/// Optional truncation bounds for a bundle operation. `total` caps the Chern
/// degrees carried by the result (default: space dimension); `first` caps the
/// first-factor degree on product spaces. Both are sound whenever downstream
/// consumers only read components within the caps, since degrees are additive
/// under multiplication.
struct PruneSpec {
    int total = -1;
    int first = -1;
};

/// A virtual bundle: integer rank (negative allowed) and total Chern class
/// with constant term 1, truncated at the space dimension. Chern data is
/// integral; all operations route through the Chern character, carried
/// internally as the integer power sums p_k = k! ch_k.
class Sheaf {
public:
    Sheaf(std::shared_ptr<const Space> space, long long rank, const GradedElement& total_chern);

    const std::shared_ptr<const Space>& space() const { return space_; }
    long long rank() const { return rank_; }
    /// Chern classes are known exactly for degrees <= chern_cap().
    int chern_cap() const { return cap_; }
    /// First-factor degrees are complete up to this bound (product spaces).
    int first_cap() const { return first_cap_; }

    GradedElement total_chern() const;
    GradedElement chern_class(int i) const;

private:
    Sheaf() = default;
    friend class SheafKernel;
    std::shared_ptr<const Space> space_;
    long long rank_ = 0;
    int cap_ = 0;
    int first_cap_ = -1;
    std::vector<std::map<LabelId, mpz_class>> chern_;  // index = degree, [0] = {unit: 1}
};

Sheaf trivial_bundle(std::shared_ptr<const Space> space, long long m);
Sheaf line_bundle(std::shared_ptr<const Space> space, const GradedElement& c1);
Sheaf tautological_sub(const std::shared_ptr<const GrassmannianSpace>& g);
Sheaf tautological_quotient(const std::shared_ptr<const GrassmannianSpace>& g);
Sheaf pullback_first(const std::shared_ptr<const ProductSpace>& p, const Sheaf& a);
Sheaf pullback_second(const std::shared_ptr<const ProductSpace>& p, const Sheaf& b);

Sheaf dual(const Sheaf& e);
Sheaf sum(const Sheaf& e, const Sheaf& f, const PruneSpec& ps = {});
Sheaf difference(const Sheaf& e, const Sheaf& f, const PruneSpec& ps = {});
Sheaf tensor(const Sheaf& e, const Sheaf& f, const PruneSpec& ps = {});
/// Adams operation psi^k, k in {2,3}: scales ch_d by k^d.
Sheaf adams(int k, const Sheaf& e);
/// Symmetric power via Adams operations, k in {2,3}.
Sheaf sym(int k, const Sheaf& e, const PruneSpec& ps = {});

/// Segre series s(E) = 1/c(E), truncated at the space dimension.
GradedElement segre_series(const Sheaf& e);

/// Degree-expected_rank component of the total Chern class. The explicit rank
/// is an audit: a mismatch with the operand's virtual rank fails loudly.
GradedElement euler_class(const Sheaf& e, long long expected_rank);

/// Projectivization P(F) of a bundle on its space.
std::shared_ptr<const ProjBundleSpace> proj_bundle(const Sheaf& f);

}  // namespace chowkit
