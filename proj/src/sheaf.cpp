#include "chowkit/sheaf.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowkit {

using ZBucket = std::map<LabelId, mpz_class>;
using ZSeq = std::vector<ZBucket>;  // index = degree

/// Integer-class kernel behind the bundle operations. Characters are carried
/// as power sums p_k = k! ch_k, which stay integral for every K-theory class;
/// the divisions in the Newton recursion and the Sym formulas are exact and
/// checked.
class SheafKernel {
public:
    static Sheaf make(std::shared_ptr<const Space> space, long long rank, ZSeq chern, int cap,
                      int first_cap) {
        Sheaf s;
        s.space_ = std::move(space);
        s.rank_ = rank;
        s.cap_ = cap;
        s.first_cap_ = first_cap;
        prune_zeros(chern);
        chern.resize(static_cast<size_t>(cap) + 1);
        s.chern_ = std::move(chern);
        if (s.chern_[0].size() != 1 ||
            s.chern_[0].begin()->first != s.space_->unit_label() ||
            s.chern_[0].begin()->second != 1)
            throw std::logic_error("Sheaf: total Chern class must have constant term 1");
        return s;
    }

    static const ZSeq& chern(const Sheaf& s) { return s.chern_; }

    static int resolve_cap(const Space& sp, const PruneSpec& ps, int a_cap, int b_cap) {
        int cap = sp.dimension();
        if (ps.total >= 0) cap = std::min(cap, ps.total);
        cap = std::min(cap, std::min(a_cap, b_cap));
        return cap;
    }
    static int resolve_first(const PruneSpec& ps, int a_first, int b_first) {
        int f = -1;
        auto merge = [&f](int v) {
            if (v >= 0) f = (f < 0) ? v : std::min(f, v);
        };
        merge(ps.first);
        merge(a_first);
        merge(b_first);
        return f;
    }

    static void prune_zeros(ZSeq& s) {
        for (auto& bucket : s)
            for (auto it = bucket.begin(); it != bucket.end();)
                it = (it->second == 0) ? bucket.erase(it) : std::next(it);
    }

    /// out += w * A*B, keeping only total degree dout and first-degree <= first_cap.
    static void mul_into(const Space& sp, const ZBucket& A, const ZBucket& B, ZBucket& out,
                         const mpz_class& w, int first_cap) {
        Space::Combo combo;
        mpz_class c;
        for (const auto& [la, ca] : A) {
            const int fa = first_cap >= 0 ? sp.label_first_degree(la) : 0;
            if (first_cap >= 0 && fa > first_cap) continue;
            for (const auto& [lb, cb] : B) {
                if (first_cap >= 0 && fa + sp.label_first_degree(lb) > first_cap) continue;
                combo.clear();
                sp.multiply_basis(la, lb, combo);
                if (combo.empty()) continue;
                c = ca * cb * w;
                for (const auto& [l, k] : combo) out[l] += c * static_cast<long>(k);
            }
        }
    }

    static ZSeq mul(const Space& sp, const ZSeq& a, const ZSeq& b, int cap, int first_cap) {
        ZSeq out(static_cast<size_t>(cap) + 1);
        for (size_t da = 0; da < a.size(); ++da) {
            if (static_cast<int>(da) > cap || a[da].empty()) continue;
            for (size_t db = 0; db + da <= static_cast<size_t>(cap) && db < b.size(); ++db) {
                if (b[db].empty()) continue;
                mul_into(sp, a[da], b[db], out[da + db], 1, first_cap);
            }
        }
        prune_zeros(out);
        return out;
    }

    /// Inverse of a unit series (constant term 1).
    static ZSeq inverse(const Space& sp, const ZSeq& c, int cap, int first_cap) {
        ZSeq inv(static_cast<size_t>(cap) + 1);
        inv[0][sp.unit_label()] = 1;
        for (int d = 1; d <= cap; ++d) {
            ZBucket acc;
            for (int i = 1; i <= d; ++i) {
                if (static_cast<size_t>(i) >= c.size() || c[static_cast<size_t>(i)].empty())
                    continue;
                mul_into(sp, c[static_cast<size_t>(i)], inv[static_cast<size_t>(d - i)], acc, 1,
                         first_cap);
            }
            auto& slot = inv[static_cast<size_t>(d)];
            for (auto& [l, v] : acc)
                if (v != 0) slot.emplace(l, -v);
        }
        return inv;
    }

    /// Power sums p_1..p_cap from Chern classes:
    /// p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
    static ZSeq power_sums(const Space& sp, const ZSeq& c, int cap, int first_cap) {
        ZSeq p(static_cast<size_t>(cap) + 1);
        for (int k = 1; k <= cap; ++k) {
            ZBucket acc;
            for (int i = 1; i < k; ++i) {
                if (static_cast<size_t>(i) >= c.size() || c[static_cast<size_t>(i)].empty())
                    continue;
                mul_into(sp, c[static_cast<size_t>(i)], p[static_cast<size_t>(k - i)], acc,
                         (i % 2 == 1) ? 1 : -1, first_cap);
            }
            if (static_cast<size_t>(k) < c.size()) {
                const mpz_class kk = (k % 2 == 1) ? k : -k;
                for (const auto& [l, v] : c[static_cast<size_t>(k)]) acc[l] += kk * v;
            }
            auto& slot = p[static_cast<size_t>(k)];
            for (auto& [l, v] : acc)
                if (v != 0) slot.emplace(l, std::move(v));
        }
        return p;
    }

    /// Chern classes from power sums: k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i.
    static ZSeq chern_from_power_sums(const Space& sp, const ZSeq& p, int cap, int first_cap) {
        ZSeq c(static_cast<size_t>(cap) + 1);
        c[0][sp.unit_label()] = 1;
        for (int k = 1; k <= cap; ++k) {
            ZBucket acc;
            for (int i = 1; i <= k; ++i) {
                if (static_cast<size_t>(i) >= p.size() || p[static_cast<size_t>(i)].empty())
                    continue;
                if (i == k) {
                    const long sgn = (i % 2 == 1) ? 1 : -1;
                    for (const auto& [l, v] : p[static_cast<size_t>(i)]) acc[l] += sgn * v;
                } else {
                    mul_into(sp, c[static_cast<size_t>(k - i)], p[static_cast<size_t>(i)], acc,
                             (i % 2 == 1) ? 1 : -1, first_cap);
                }
            }
            auto& slot = c[static_cast<size_t>(k)];
            for (auto& [l, v] : acc) {
                if (v == 0) continue;
                if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k)))
                    throw std::logic_error("sheaf kernel: Newton recursion lost integrality");
                mpz_class q;
                mpz_divexact_ui(q.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(k));
                slot.emplace(l, std::move(q));
            }
        }
        return c;
    }

    /// p_0 is the rank times the unit label; callers index p[0] implicitly.
    static ZSeq power_sums_with_rank(const Space& sp, const Sheaf& s, int cap, int first_cap) {
        ZSeq p = power_sums(sp, s.chern_, cap, first_cap);
        p[0][sp.unit_label()] = static_cast<long>(s.rank_);
        prune_zeros(p);
        return p;
    }

    static void divide_exact(ZSeq& s, unsigned long d) {
        for (auto& bucket : s)
            for (auto& [l, v] : bucket) {
                if (!mpz_divisible_ui_p(v.get_mpz_t(), d))
                    throw std::logic_error("sheaf kernel: inexact division in Sym formula");
                mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), d);
            }
    }

    /// q_d = sum_{a+b=d} C(d,a) x_a y_b  (the power sums of a product character).
    static ZSeq character_product(const Space& sp, const ZSeq& x, const ZSeq& y, int cap,
                                  int first_cap) {
        ZSeq q(static_cast<size_t>(cap) + 1);
        for (int d = 0; d <= cap; ++d) {
            for (int a = 0; a <= d; ++a) {
                const int b = d - a;
                if (static_cast<size_t>(a) >= x.size() || x[static_cast<size_t>(a)].empty())
                    continue;
                if (static_cast<size_t>(b) >= y.size() || y[static_cast<size_t>(b)].empty())
                    continue;
                mpz_class binom;
                mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                             static_cast<unsigned long>(a));
                mul_into(sp, x[static_cast<size_t>(a)], y[static_cast<size_t>(b)],
                         q[static_cast<size_t>(d)], binom, first_cap);
            }
        }
        prune_zeros(q);
        return q;
    }

    static ZSeq scale_adams(const ZSeq& p, int k) {
        ZSeq out = p;
        mpz_class factor = 1;
        for (size_t d = 1; d < out.size(); ++d) {
            factor *= k;
            for (auto& [l, v] : out[d]) v *= factor;
        }
        return out;
    }

    static ZSeq zseq_from_element(const Space& sp, const GradedElement& x) {
        ZSeq out(static_cast<size_t>(sp.dimension()) + 1);
        for (const auto& [d, bucket] : x.buckets())
            for (const auto& [l, c] : bucket) {
                if (!c.is_integer())
                    throw std::invalid_argument("Sheaf: Chern data must be integral, got " +
                                                c.str());
                out[static_cast<size_t>(d)][l] = c.numerator();
            }
        return out;
    }

    static GradedElement element_from_zseq(std::shared_ptr<const Space> sp, const ZSeq& s,
                                           int max_degree = -1) {
        GradedElement out(sp);
        for (size_t d = 0; d < s.size(); ++d) {
            if (max_degree >= 0 && static_cast<int>(d) > max_degree) break;
            for (const auto& [l, v] : s[d]) out.add_term(static_cast<int>(d), l, Rational(v));
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Sheaf surface

Sheaf::Sheaf(std::shared_ptr<const Space> space, long long rank, const GradedElement& tc) {
    if (tc.space().get() != space.get())
        throw std::invalid_argument("Sheaf: Chern class lives on a different space");
    ZSeq c = SheafKernel::zseq_from_element(*space, tc);
    *this = SheafKernel::make(std::move(space), rank, std::move(c),
                              tc.space()->dimension(), -1);
}

GradedElement Sheaf::total_chern() const {
    return SheafKernel::element_from_zseq(space_, chern_);
}

GradedElement Sheaf::chern_class(int i) const {
    GradedElement out(space_);
    if (i >= 0 && i <= cap_)
        for (const auto& [l, v] : chern_[static_cast<size_t>(i)]) out.add_term(i, l, Rational(v));
    return out;
}

// ---------------------------------------------------------------------------
// Constructors

Sheaf trivial_bundle(std::shared_ptr<const Space> space, long long m) {
    ZSeq c(static_cast<size_t>(space->dimension()) + 1);
    c[0][space->unit_label()] = 1;
    const int dim = space->dimension();
    return SheafKernel::make(std::move(space), m, std::move(c), dim, -1);
}

Sheaf line_bundle(std::shared_ptr<const Space> space, const GradedElement& c1) {
    int hdeg = -1;
    if (!c1.is_homogeneous(&hdeg) || (hdeg != -1 && hdeg != 1))
        throw std::invalid_argument("line_bundle: c1 must be homogeneous of degree 1");
    GradedElement tc = GradedElement::unit(space) + c1;
    return Sheaf(space, 1, tc);
}

Sheaf tautological_sub(const std::shared_ptr<const GrassmannianSpace>& g) {
    GradedElement tc = GradedElement::unit(g);
    for (int i = 1; i <= g->k(); ++i)
        tc += g->chern_sub_dual(i) * Rational((i % 2 == 0) ? 1 : -1);
    return Sheaf(g, g->k(), tc);
}

Sheaf tautological_quotient(const std::shared_ptr<const GrassmannianSpace>& g) {
    GradedElement tc = GradedElement::unit(g);
    for (int i = 1; i <= g->n() - g->k(); ++i) tc += g->chern_quotient(i);
    return Sheaf(g, g->n() - g->k(), tc);
}

Sheaf pullback_first(const std::shared_ptr<const ProductSpace>& p, const Sheaf& a) {
    if (a.space().get() != p->first().get())
        throw std::invalid_argument("pullback_first: bundle not on the first factor");
    return Sheaf(p, a.rank(), pullback_first(p, a.total_chern()));
}

Sheaf pullback_second(const std::shared_ptr<const ProductSpace>& p, const Sheaf& b) {
    if (b.space().get() != p->second().get())
        throw std::invalid_argument("pullback_second: bundle not on the second factor");
    return Sheaf(p, b.rank(), pullback_second(p, b.total_chern()));
}

// ---------------------------------------------------------------------------
// Operations

Sheaf dual(const Sheaf& e) {
    ZSeq c = SheafKernel::chern(e);
    for (size_t d = 1; d < c.size(); d += 2)
        for (auto& [l, v] : c[d]) v = -v;
    return SheafKernel::make(e.space(), e.rank(), std::move(c), e.chern_cap(), e.first_cap());
}

namespace {
void check_same_space(const Sheaf& e, const Sheaf& f, const char* op) {
    if (e.space().get() != f.space().get())
        throw std::invalid_argument(std::string(op) + ": bundles on different spaces");
}
}  // namespace

Sheaf sum(const Sheaf& e, const Sheaf& f, const PruneSpec& ps) {
    check_same_space(e, f, "sum");
    const Space& sp = *e.space();
    const int cap = SheafKernel::resolve_cap(sp, ps, e.chern_cap(), f.chern_cap());
    const int first = SheafKernel::resolve_first(ps, e.first_cap(), f.first_cap());
    ZSeq c = SheafKernel::mul(sp, SheafKernel::chern(e), SheafKernel::chern(f), cap, first);
    return SheafKernel::make(e.space(), e.rank() + f.rank(), std::move(c), cap, first);
}

Sheaf difference(const Sheaf& e, const Sheaf& f, const PruneSpec& ps) {
    check_same_space(e, f, "difference");
    const Space& sp = *e.space();
    const int cap = SheafKernel::resolve_cap(sp, ps, e.chern_cap(), f.chern_cap());
    const int first = SheafKernel::resolve_first(ps, e.first_cap(), f.first_cap());
    ZSeq inv = SheafKernel::inverse(sp, SheafKernel::chern(f), cap, first);
    ZSeq c = SheafKernel::mul(sp, SheafKernel::chern(e), inv, cap, first);
    return SheafKernel::make(e.space(), e.rank() - f.rank(), std::move(c), cap, first);
}

Sheaf tensor(const Sheaf& e, const Sheaf& f, const PruneSpec& ps) {
    check_same_space(e, f, "tensor");
    const Space& sp = *e.space();
    const int cap = SheafKernel::resolve_cap(sp, ps, e.chern_cap(), f.chern_cap());
    const int first = SheafKernel::resolve_first(ps, e.first_cap(), f.first_cap());
    ZSeq pe = SheafKernel::power_sums_with_rank(sp, e, cap, first);
    ZSeq pf = SheafKernel::power_sums_with_rank(sp, f, cap, first);
    ZSeq pt = SheafKernel::character_product(sp, pe, pf, cap, first);
    pt[0].clear();
    ZSeq c = SheafKernel::chern_from_power_sums(sp, pt, cap, first);
    return SheafKernel::make(e.space(), e.rank() * f.rank(), std::move(c), cap, first);
}

Sheaf adams(int k, const Sheaf& e) {
    if (k != 2 && k != 3) throw std::invalid_argument("adams: only psi^2 and psi^3 supported");
    const Space& sp = *e.space();
    const int cap = e.chern_cap();
    ZSeq p = SheafKernel::power_sums(sp, SheafKernel::chern(e), cap, e.first_cap());
    p = SheafKernel::scale_adams(p, k);
    ZSeq c = SheafKernel::chern_from_power_sums(sp, p, cap, e.first_cap());
    return SheafKernel::make(e.space(), e.rank(), std::move(c), cap, e.first_cap());
}

Sheaf sym(int k, const Sheaf& e, const PruneSpec& ps) {
    if (k != 2 && k != 3) throw std::invalid_argument("sym: only Sym^2 and Sym^3 supported");
    const Space& sp = *e.space();
    const int cap = SheafKernel::resolve_cap(sp, ps, e.chern_cap(), e.chern_cap());
    const int first = SheafKernel::resolve_first(ps, e.first_cap(), e.first_cap());
    ZSeq p = SheafKernel::power_sums_with_rank(sp, e, cap, first);
    const long long r = e.rank();

    ZSeq result;
    long long rank = 0;
    if (k == 2) {
        // ch(Sym^2 E) = (ch(E)^2 + ch(psi^2 E)) / 2
        ZSeq sq = SheafKernel::character_product(sp, p, p, cap, first);
        ZSeq ad = SheafKernel::scale_adams(p, 2);
        for (size_t d = 0; d < sq.size(); ++d)
            for (const auto& [l, v] : ad[d]) sq[d][l] += v;
        SheafKernel::divide_exact(sq, 2);
        result = std::move(sq);
        rank = r * (r + 1) / 2;
    } else {
        // ch(Sym^3 E) = (ch^3 + 3 ch . ch(psi^2) + 2 ch(psi^3)) / 6
        ZSeq sq = SheafKernel::character_product(sp, p, p, cap, first);
        ZSeq cube = SheafKernel::character_product(sp, p, sq, cap, first);
        ZSeq ad2 = SheafKernel::scale_adams(p, 2);
        ZSeq mixed = SheafKernel::character_product(sp, p, ad2, cap, first);
        ZSeq ad3 = SheafKernel::scale_adams(p, 3);
        for (size_t d = 0; d < cube.size(); ++d) {
            for (const auto& [l, v] : mixed[d]) cube[d][l] += 3 * v;
            for (const auto& [l, v] : ad3[d]) cube[d][l] += 2 * v;
        }
        SheafKernel::divide_exact(cube, 6);
        result = std::move(cube);
        rank = r * (r + 1) * (r + 2) / 6;
    }
    result[0].clear();
    ZSeq c = SheafKernel::chern_from_power_sums(sp, result, cap, first);
    return SheafKernel::make(e.space(), rank, std::move(c), cap, first);
}

GradedElement segre_series(const Sheaf& e) {
    const Space& sp = *e.space();
    ZSeq inv = SheafKernel::inverse(sp, SheafKernel::chern(e), e.chern_cap(), e.first_cap());
    return SheafKernel::element_from_zseq(e.space(), inv);
}

GradedElement euler_class(const Sheaf& e, long long expected_rank) {
    if (expected_rank != e.rank())
        throw std::runtime_error("euler_class: expected rank " + std::to_string(expected_rank) +
                                 " but bundle has virtual rank " + std::to_string(e.rank()));
    if (expected_rank < 0)
        throw std::runtime_error("euler_class: negative rank has no Euler class");
    GradedElement out(e.space());
    if (expected_rank > e.space()->dimension()) return out;  // vanishes above the dimension
    if (expected_rank > e.chern_cap())
        throw std::logic_error("euler_class: requested degree beyond the computed truncation");
    return e.chern_class(static_cast<int>(expected_rank));
}

std::shared_ptr<const ProjBundleSpace> proj_bundle(const Sheaf& f) {
    if (f.rank() <= 0) throw std::invalid_argument("proj_bundle: needs positive rank");
    const Space& base = *f.space();
    const int rank = static_cast<int>(f.rank());
    auto to_base_classes = [&](const ZSeq& seq, int limit) {
        std::vector<ProjBundleSpace::BaseClass> out(static_cast<size_t>(limit) + 1);
        for (int d = 0; d <= limit && static_cast<size_t>(d) < seq.size(); ++d)
            for (const auto& [l, v] : seq[static_cast<size_t>(d)]) {
                if (!v.fits_slong_p())
                    throw std::logic_error("proj_bundle: Chern datum exceeds 64 bits");
                out[static_cast<size_t>(d)].emplace_back(l, v.get_si());
            }
        return out;
    };
    ZSeq inv = SheafKernel::inverse(base, SheafKernel::chern(f), base.dimension(), -1);
    return std::make_shared<ProjBundleSpace>(
        f.space(), rank, to_base_classes(SheafKernel::chern(f), std::min(rank, base.dimension())),
        to_base_classes(inv, base.dimension()));
}

}  // namespace chowkit
