#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quasiq/cocycle.hpp"
#include "quasiq/cyclotomic.hpp"
#include "quasiq/errors.hpp"
#include "quasiq/group.hpp"
#include "quasiq/qchar.hpp"

namespace quasiq {

/// Exponent vector of a left-normed basis monomial X_1^{k_1} ... X_n^{k_n}.
struct Monomial {
    std::vector<std::int64_t> exps;
};

class BraidedSpace;

/// Sparse linear combination of basis monomials over Q(zeta_M).
struct AlgebraElement {
    const BraidedSpace* space = nullptr;
    std::map<std::int64_t, CycNumber> terms;
};

/// Sparse element of the braided tensor square.
struct TensorSquareElement {
    const BraidedSpace* space = nullptr;
    std::map<std::pair<std::int64_t, std::int64_t>, CycNumber> terms;
};

struct BraidedSpaceOptions {
    bool require_admissible = true;
    /// Truncation bounds per generator instead of the nilpotency orders.
    /// Used for tensor-algebra level computations, where products must stay
    /// untruncated up to a chosen working degree.
    std::optional<std::vector<std::int64_t>> bounds_override;
};

/// The braided linear space S(V) attached to a series of quasi-characters:
/// generators X_i of G-degree g_i, relations X_i^{N_i} = 0 with
/// N_i = |chi_i(g_i)| and X_i X_j = chi_j(g_i) X_j X_i, N-graded with the
/// bounded left-normed monomials as basis. All structure constants are roots
/// of unity; they are tabulated once and the heavy operations run on integer
/// exponents.
class BraidedSpace {
public:
    explicit BraidedSpace(AdmissibleSeries series, BraidedSpaceOptions opts = {})
        : series_(std::move(series)), gt_(series_.G), L_(series_.G.exponent()), M_(series_.G.char_order()) {
        const auto& G = series_.G;
        const auto& c = series_.cocycle;
        for (const auto& chi : series_.chars)
            if (!satisfies_quasicharacter_identity(G, c, chi))
                throw ConfigError("series contains an invalid quasi-character");
        if (opts.require_admissible) {
            auto rep = check_admissible(series_);
            if (!rep.ok) throw ConfigError("series is not admissible: " + rep.violation);
        }
        for (const auto& chi : series_.chars)
            if (char_value(chi, chi.degree).is_one())
                throw ConfigError("chi_i(g_i) = 1 admits no finite nilpotency order");

        n_ = static_cast<std::int64_t>(series_.rank());
        nilpotency_ = series_.nilpotencies();
        bounds_ = opts.bounds_override ? *opts.bounds_override : nilpotency_;
        if (static_cast<std::int64_t>(bounds_.size()) != n_) throw ConfigError("bounds rank mismatch");

        const std::int64_t ng = gt_.size();
        phi_.resize(static_cast<std::size_t>(ng * ng * ng));
        tilde_.resize(static_cast<std::size_t>(ng * ng * ng));
        const std::int64_t lift = M_ / L_;
        for (std::int64_t x = 0; x < ng; ++x)
            for (std::int64_t y = 0; y < ng; ++y)
                for (std::int64_t z = 0; z < ng; ++z)
                    phi_[static_cast<std::size_t>((x * ng + y) * ng + z)] =
                        lift * phi_exp(G, c, gt_.elem(x), gt_.elem(y), gt_.elem(z));
        for (std::int64_t g = 0; g < ng; ++g)
            for (std::int64_t x = 0; x < ng; ++x)
                for (std::int64_t y = 0; y < ng; ++y) {
                    std::int64_t v = phi_at(g, x, y) + phi_at(x, y, g) - phi_at(x, g, y);
                    tilde_[static_cast<std::size_t>((g * ng + x) * ng + y)] = ((v % M_) + M_) % M_;
                }

        gdeg_.resize(static_cast<std::size_t>(n_));
        chi_.assign(static_cast<std::size_t>(n_), std::vector<std::int64_t>(static_cast<std::size_t>(ng)));
        for (std::int64_t i = 0; i < n_; ++i) {
            gdeg_[static_cast<std::size_t>(i)] = gt_.index(series_.chars[static_cast<std::size_t>(i)].degree);
            for (std::int64_t g = 0; g < ng; ++g)
                chi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)] =
                    char_value(series_.chars[static_cast<std::size_t>(i)], gt_.elem(g)).lift(M_).exp;
        }

        strides_.assign(static_cast<std::size_t>(n_), 1);
        dim_ = 1;
        for (std::int64_t i = n_; i-- > 0;) {
            strides_[static_cast<std::size_t>(i)] = dim_;
            dim_ *= bounds_[static_cast<std::size_t>(i)];
        }
        basis_gdeg_.resize(static_cast<std::size_t>(dim_));
        basis_ndeg_.resize(static_cast<std::size_t>(dim_));
        for (std::int64_t b = 0; b < dim_; ++b) {
            std::int64_t gidx = 0, nd = 0;
            std::int64_t rest = b;
            for (std::int64_t i = 0; i < n_; ++i) {
                std::int64_t k = rest / strides_[static_cast<std::size_t>(i)];
                rest %= strides_[static_cast<std::size_t>(i)];
                nd += k;
                for (std::int64_t rep = 0; rep < k; ++rep) gidx = gt_.mul(gidx, gdeg_[static_cast<std::size_t>(i)]);
            }
            basis_gdeg_[static_cast<std::size_t>(b)] = gidx;
            basis_ndeg_[static_cast<std::size_t>(b)] = nd;
        }
        coproduct_cache_.assign(static_cast<std::size_t>(dim_), std::nullopt);
        antipode_cache_.assign(static_cast<std::size_t>(dim_), std::nullopt);
    }

    BraidedSpace(const BraidedSpace&) = delete;
    BraidedSpace& operator=(const BraidedSpace&) = delete;

    const AdmissibleSeries& series() const { return series_; }
    const AbelianGroup& group() const { return series_.G; }
    const GroupTable& group_table() const { return gt_; }
    std::int64_t rank() const { return n_; }
    std::int64_t dim() const { return dim_; }
    std::int64_t scalar_order() const { return M_; }
    const std::vector<std::int64_t>& nilpotency() const { return nilpotency_; }
    const std::vector<std::int64_t>& bounds() const { return bounds_; }
    std::int64_t basis_gdeg(std::int64_t b) const { return basis_gdeg_[static_cast<std::size_t>(b)]; }
    std::int64_t basis_ndeg(std::int64_t b) const { return basis_ndeg_[static_cast<std::size_t>(b)]; }
    std::int64_t generator_gdeg(std::int64_t i) const { return gdeg_[static_cast<std::size_t>(i)]; }

    Monomial basis_monomial(std::int64_t b) const {
        Monomial m;
        m.exps.resize(static_cast<std::size_t>(n_));
        for (std::int64_t i = 0; i < n_; ++i) {
            m.exps[static_cast<std::size_t>(i)] = b / strides_[static_cast<std::size_t>(i)];
            b %= strides_[static_cast<std::size_t>(i)];
        }
        return m;
    }

    // -- element constructors ------------------------------------------------

    AlgebraElement zero() const { return AlgebraElement{this, {}}; }

    AlgebraElement one() const {
        AlgebraElement u{this, {}};
        u.terms.emplace(0, CycNumber::one(M_));
        return u;
    }

    AlgebraElement generator(std::int64_t i) const {
        if (i < 0 || i >= n_) throw IndexOutOfRange("generator index out of range");
        AlgebraElement u{this, {}};
        u.terms.emplace(strides_[static_cast<std::size_t>(i)], CycNumber::one(M_));
        return u;
    }

    AlgebraElement basis_element(std::int64_t b) const {
        AlgebraElement u{this, {}};
        u.terms.emplace(b, CycNumber::one(M_));
        return u;
    }

    /// Monomial with the given exponents; powers at or above the truncation
    /// bound normalize to zero, matching quotient-algebra semantics.
    AlgebraElement monomial(const std::vector<std::int64_t>& exps) const {
        if (static_cast<std::int64_t>(exps.size()) != n_) throw ConfigError("monomial rank mismatch");
        AlgebraElement u{this, {}};
        std::int64_t b = 0;
        for (std::int64_t i = 0; i < n_; ++i) {
            if (exps[static_cast<std::size_t>(i)] < 0) throw ConfigError("negative exponent");
            if (exps[static_cast<std::size_t>(i)] >= bounds_[static_cast<std::size_t>(i)]) return u;
            b += exps[static_cast<std::size_t>(i)] * strides_[static_cast<std::size_t>(i)];
        }
        u.terms.emplace(b, CycNumber::one(M_));
        return u;
    }

    TensorSquareElement tensor_zero() const { return TensorSquareElement{this, {}}; }

    TensorSquareElement tensor_unit() const {
        TensorSquareElement t{this, {}};
        t.terms.emplace(std::make_pair<std::int64_t, std::int64_t>(0, 0), CycNumber::one(M_));
        return t;
    }

    // -- term-level kernels ----------------------------------------------------

    struct BasisProduct {
        bool zero = false;
        std::int64_t root_exp = 0; // mod M
        std::int64_t mono = 0;
    };

    /// Scalar exponent of g acting on a basis monomial: on a generator
    /// g |> X_i = chi_i(g) X_i, extended over a product uv by the twisted rule
    /// g |> (uv) = Phi~_g(deg u, deg v) (g |> u)(g |> v).
    std::int64_t act_exp(std::int64_t g, std::int64_t b) const {
        std::int64_t e = 0;
        std::int64_t prefix = 0; // identity
        std::int64_t rest = b;
        for (std::int64_t i = 0; i < n_; ++i) {
            std::int64_t k = rest / strides_[static_cast<std::size_t>(i)];
            rest %= strides_[static_cast<std::size_t>(i)];
            const std::int64_t gi = gdeg_[static_cast<std::size_t>(i)];
            for (std::int64_t r = 0; r < k; ++r) {
                e += tilde_at(g, prefix, gi) + chi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
                prefix = gt_.mul(prefix, gi);
            }
        }
        return ((e % M_) + M_) % M_;
    }

    /// Normal-form product of two basis monomials: peel the right factor into
    /// a left-normed concatenation (one Phi per peeled letter), bubble the
    /// letters into index order (each adjacent swap contributing
    /// Phi(p, g_j, g_i)^{-1} chi_i(g_j) Phi(p, g_i, g_j)), then truncate.
    BasisProduct mul_basis(std::int64_t u, std::int64_t v) const {
        BasisProduct out;
        if (basis_ndeg_[static_cast<std::size_t>(v)] == 0) {
            out.mono = u;
            return out;
        }
        if (basis_ndeg_[static_cast<std::size_t>(u)] == 0) {
            out.mono = v;
            return out;
        }

        std::int64_t scalar = 0;
        const std::int64_t du = basis_gdeg_[static_cast<std::size_t>(u)];

        // letters of u then v, ascending generator index within each word
        std::vector<std::int64_t> word;
        word.reserve(static_cast<std::size_t>(basis_ndeg_[static_cast<std::size_t>(u)] +
                                              basis_ndeg_[static_cast<std::size_t>(v)]));
        auto push_letters = [&](std::int64_t b) {
            std::int64_t rest = b;
            for (std::int64_t i = 0; i < n_; ++i) {
                std::int64_t k = rest / strides_[static_cast<std::size_t>(i)];
                rest %= strides_[static_cast<std::size_t>(i)];
                for (std::int64_t r = 0; r < k; ++r) word.push_back(i);
            }
        };
        push_letters(u);
        std::size_t ulen = word.size();
        push_letters(v);

        // u * (v' X_j) = Phi(deg u, deg v', g_j) (u v') X_j
        {
            std::int64_t vprefix = gdeg_[static_cast<std::size_t>(word[ulen])];
            for (std::size_t s = ulen + 1; s < word.size(); ++s) {
                const std::int64_t gj = gdeg_[static_cast<std::size_t>(word[s])];
                scalar += phi_at(du, vprefix, gj);
                vprefix = gt_.mul(vprefix, gj);
            }
        }

        // prefix degrees, pdeg[p] = degree of word[0..p)
        std::vector<std::int64_t> pdeg(word.size() + 1);
        pdeg[0] = 0;
        for (std::size_t p = 0; p < word.size(); ++p)
            pdeg[p + 1] = gt_.mul(pdeg[p], gdeg_[static_cast<std::size_t>(word[p])]);

        // insertion sort; adjacent swaps only
        for (std::size_t p = 1; p < word.size(); ++p) {
            std::size_t q = p;
            while (q > 0 && word[q - 1] > word[q]) {
                const std::int64_t j = word[q - 1], i = word[q];
                const std::int64_t gj = gdeg_[static_cast<std::size_t>(j)], gi = gdeg_[static_cast<std::size_t>(i)];
                scalar += -phi_at(pdeg[q - 1], gj, gi) + chi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(gj)] +
                          phi_at(pdeg[q - 1], gi, gj);
                word[q - 1] = i;
                word[q] = j;
                pdeg[q] = gt_.mul(pdeg[q - 1], gi);
                --q;
            }
        }

        std::vector<std::int64_t> counts(static_cast<std::size_t>(n_), 0);
        for (auto i : word) ++counts[static_cast<std::size_t>(i)];
        std::int64_t mono = 0;
        for (std::int64_t i = 0; i < n_; ++i) {
            if (counts[static_cast<std::size_t>(i)] >= bounds_[static_cast<std::size_t>(i)]) {
                out.zero = true;
                return out;
            }
            mono += counts[static_cast<std::size_t>(i)] * strides_[static_cast<std::size_t>(i)];
        }
        out.root_exp = ((scalar % M_) + M_) % M_;
        out.mono = mono;
        return out;
    }

    // -- algebra operations ----------------------------------------------------

    AlgebraElement act(const GroupElem& g, const AlgebraElement& u) const {
        check_space(u);
        const std::int64_t gi = gt_.index(g);
        AlgebraElement out{this, {}};
        for (const auto& [b, coef] : u.terms) {
            CycNumber c = coef;
            c.mul_root(RootExp(M_, act_exp(gi, b)));
            accumulate(out.terms, b, c);
        }
        prune(out.terms);
        return out;
    }

    AlgebraElement multiply(const AlgebraElement& u, const AlgebraElement& v) const {
        check_space(u);
        check_space(v);
        AlgebraElement out{this, {}};
        for (const auto& [bu, cu] : u.terms)
            for (const auto& [bv, cv] : v.terms) {
                BasisProduct p = mul_basis(bu, bv);
                if (p.zero) continue;
                CycNumber c = cu * cv;
                c.mul_root(RootExp(M_, p.root_exp));
                accumulate(out.terms, p.mono, c);
            }
        prune(out.terms);
        return out;
    }

    /// Product on the braided tensor square:
    /// (A @ B)(C @ D) = lambda * AC @ BD with
    /// lambda = Phi(ab,c,d) Phi(a,c,b) / (Phi(a,b,c) Phi(ac,b,d)) * [b |> C],
    /// the composite of the associativity and braiding constraints resolved at
    /// the G-degrees (a,b,c,d). The sign convention is pinned by the
    /// coassociativity and coproduct-multiplicativity suites.
    TensorSquareElement tensor_multiply(const TensorSquareElement& P, const TensorSquareElement& Q) const {
        check_space(P);
        check_space(Q);
        TensorSquareElement out{this, {}};
        for (const auto& [pk, pc] : P.terms) {
            const std::int64_t A = pk.first, B = pk.second;
            const std::int64_t a = basis_gdeg_[static_cast<std::size_t>(A)];
            const std::int64_t b = basis_gdeg_[static_cast<std::size_t>(B)];
            const std::int64_t ab = gt_.mul(a, b);
            for (const auto& [qk, qc] : Q.terms) {
                const std::int64_t C = qk.first, D = qk.second;
                BasisProduct left = mul_basis(A, C);
                if (left.zero) continue;
                BasisProduct right = mul_basis(B, D);
                if (right.zero) continue;
                const std::int64_t c = basis_gdeg_[static_cast<std::size_t>(C)];
                const std::int64_t d = basis_gdeg_[static_cast<std::size_t>(D)];
                std::int64_t lam = phi_at(ab, c, d) + phi_at(a, c, b) - phi_at(a, b, c) -
                                   phi_at(gt_.mul(a, c), b, d) + act_exp(b, C) + left.root_exp + right.root_exp;
                CycNumber coef = pc * qc;
                coef.mul_root(RootExp(M_, lam));
                accumulate(out.terms, std::make_pair(left.mono, right.mono), coef);
            }
        }
        prune(out.terms);
        return out;
    }

    /// Coproduct: Delta(X_i) = X_i @ 1 + 1 @ X_i, extended as an algebra map
    /// by folding tensor products over the letters in left-normed order.
    const TensorSquareElement& coproduct_basis(std::int64_t b) const {
        {
            std::lock_guard<std::mutex> lock(cache_mtx_);
            if (coproduct_cache_[static_cast<std::size_t>(b)]) return *coproduct_cache_[static_cast<std::size_t>(b)];
        }
        TensorSquareElement val{this, {}};
        if (basis_ndeg_[static_cast<std::size_t>(b)] == 0) {
            val = tensor_unit();
        } else {
            std::int64_t last = -1;
            std::int64_t rest = b;
            for (std::int64_t i = 0; i < n_; ++i) {
                if (rest / strides_[static_cast<std::size_t>(i)] > 0) last = i;
                rest %= strides_[static_cast<std::size_t>(i)];
            }
            const std::int64_t prefix = b - strides_[static_cast<std::size_t>(last)];
            TensorSquareElement dx{this, {}};
            dx.terms.emplace(std::make_pair(strides_[static_cast<std::size_t>(last)], std::int64_t{0}),
                             CycNumber::one(M_));
            dx.terms.emplace(std::make_pair(std::int64_t{0}, strides_[static_cast<std::size_t>(last)]),
                             CycNumber::one(M_));
            val = tensor_multiply(coproduct_basis(prefix), dx);
        }
        std::lock_guard<std::mutex> lock(cache_mtx_);
        if (!coproduct_cache_[static_cast<std::size_t>(b)])
            coproduct_cache_[static_cast<std::size_t>(b)] = std::move(val);
        return *coproduct_cache_[static_cast<std::size_t>(b)];
    }

    TensorSquareElement coproduct(const AlgebraElement& u) const {
        check_space(u);
        TensorSquareElement out{this, {}};
        for (const auto& [b, coef] : u.terms)
            for (const auto& [key, c] : coproduct_basis(b).terms) accumulate(out.terms, key, coef * c);
        prune(out.terms);
        return out;
    }

    CycNumber counit(const AlgebraElement& u) const {
        check_space(u);
        CycNumber e = CycNumber::zero(M_);
        for (const auto& [b, coef] : u.terms)
            if (basis_ndeg_[static_cast<std::size_t>(b)] == 0) e += coef;
        return e;
    }

    /// Antipode: S(1) = 1, S(X_i) = -X_i, and on higher monomials the
    /// convolution-inverse recursion from m (S @ id) Delta = u eps.
    const AlgebraElement& antipode_basis(std::int64_t b) const {
        {
            std::lock_guard<std::mutex> lock(cache_mtx_);
            if (antipode_cache_[static_cast<std::size_t>(b)]) return *antipode_cache_[static_cast<std::size_t>(b)];
        }
        AlgebraElement val{this, {}};
        if (basis_ndeg_[static_cast<std::size_t>(b)] == 0) {
            val = one();
        } else {
            AlgebraElement acc{this, {}};
            CycNumber lead = CycNumber::zero(M_); // coefficient of b @ 1
            for (const auto& [key, c] : coproduct_basis(b).terms) {
                const auto [u, v] = key;
                if (u == b) {
                    lead += c;
                    continue;
                }
                // S(u) * v, with S known on lower N-degree
                for (const auto& [su, sc] : antipode_basis(u).terms) {
                    BasisProduct p = mul_basis(su, v);
                    if (p.zero) continue;
                    CycNumber t = sc * c;
                    t.mul_root(RootExp(M_, p.root_exp));
                    accumulate(acc.terms, p.mono, t);
                }
            }
            prune(acc.terms);
            CycNumber neg_lead_inv = (-lead).inverse();
            for (auto& [mono, c] : acc.terms) {
                c *= neg_lead_inv;
                val.terms.emplace(mono, c);
            }
            prune(val.terms);
        }
        std::lock_guard<std::mutex> lock(cache_mtx_);
        if (!antipode_cache_[static_cast<std::size_t>(b)])
            antipode_cache_[static_cast<std::size_t>(b)] = std::move(val);
        return *antipode_cache_[static_cast<std::size_t>(b)];
    }

    AlgebraElement antipode(const AlgebraElement& u) const {
        check_space(u);
        AlgebraElement out{this, {}};
        for (const auto& [b, coef] : u.terms)
            for (const auto& [mono, c] : antipode_basis(b).terms) accumulate(out.terms, mono, coef * c);
        prune(out.terms);
        return out;
    }

    // -- element helpers -------------------------------------------------------

    AlgebraElement add(const AlgebraElement& u, const AlgebraElement& v) const {
        check_space(u);
        check_space(v);
        AlgebraElement out = u;
        for (const auto& [b, c] : v.terms) accumulate(out.terms, b, c);
        prune(out.terms);
        return out;
    }

    AlgebraElement scale(const AlgebraElement& u, const CycNumber& c) const {
        check_space(u);
        AlgebraElement out{this, {}};
        for (const auto& [b, x] : u.terms) accumulate(out.terms, b, x * c);
        prune(out.terms);
        return out;
    }

    AlgebraElement scale_root(const AlgebraElement& u, const RootExp& r) const {
        check_space(u);
        AlgebraElement out = u;
        for (auto& [b, x] : out.terms) x.mul_root(r);
        return out;
    }

    TensorSquareElement tensor_add(const TensorSquareElement& p, const TensorSquareElement& q) const {
        check_space(p);
        check_space(q);
        TensorSquareElement out = p;
        for (const auto& [k, c] : q.terms) accumulate(out.terms, k, c);
        prune(out.terms);
        return out;
    }

    TensorSquareElement tensor_scale_root(const TensorSquareElement& p, const RootExp& r) const {
        check_space(p);
        TensorSquareElement out = p;
        for (auto& [k, c] : out.terms) c.mul_root(r);
        return out;
    }

    bool equal(const AlgebraElement& u, const AlgebraElement& v) const {
        check_space(u);
        check_space(v);
        return diff_zero(u.terms, v.terms);
    }

    bool equal(const TensorSquareElement& p, const TensorSquareElement& q) const {
        check_space(p);
        check_space(q);
        return diff_zero(p.terms, q.terms);
    }

    bool is_zero(const AlgebraElement& u) const {
        check_space(u);
        for (const auto& [b, c] : u.terms)
            if (!c.is_zero()) return false;
        return true;
    }

    std::int64_t phi_at(std::int64_t x, std::int64_t y, std::int64_t z) const {
        const std::int64_t ng = gt_.size();
        return phi_[static_cast<std::size_t>((x * ng + y) * ng + z)];
    }
    std::int64_t tilde_at(std::int64_t g, std::int64_t x, std::int64_t y) const {
        const std::int64_t ng = gt_.size();
        return tilde_[static_cast<std::size_t>((g * ng + x) * ng + y)];
    }
    std::int64_t chi_at(std::int64_t i, std::int64_t g) const {
        return chi_[static_cast<std::size_t>(i)][static_cast<std::size_t>(g)];
    }

private:
    void check_space(const AlgebraElement& u) const {
        if (u.space != this) throw SpaceMismatch("element belongs to a different braided space");
    }
    void check_space(const TensorSquareElement& u) const {
        if (u.space != this) throw SpaceMismatch("tensor element belongs to a different braided space");
    }

    template <class Map, class Key>
    static void accumulate(Map& m, const Key& k, const CycNumber& c) {
        auto it = m.find(k);
        if (it == m.end())
            m.emplace(k, c);
        else
            it->second += c;
    }

    template <class Map>
    static void prune(Map& m) {
        for (auto it = m.begin(); it != m.end();) {
            if (it->second.is_zero())
                it = m.erase(it);
            else
                ++it;
        }
    }

    template <class Map>
    static bool diff_zero(const Map& a, const Map& b) {
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() || ib != b.end()) {
            if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
                if (!ia->second.is_zero()) return false;
                ++ia;
            } else if (ia == a.end() || ib->first < ia->first) {
                if (!ib->second.is_zero()) return false;
                ++ib;
            } else {
                if (!(ia->second == ib->second)) return false;
                ++ia;
                ++ib;
            }
        }
        return true;
    }

    AdmissibleSeries series_;
    GroupTable gt_;
    std::int64_t L_;
    std::int64_t M_;
    std::int64_t n_ = 0;
    std::int64_t dim_ = 0;
    std::vector<std::int64_t> nilpotency_;
    std::vector<std::int64_t> bounds_;
    std::vector<std::int64_t> strides_;
    std::vector<std::int64_t> phi_;   // exponents mod M over G^3
    std::vector<std::int64_t> tilde_; // exponents mod M over G^3
    std::vector<std::vector<std::int64_t>> chi_;
    std::vector<std::int64_t> gdeg_;
    std::vector<std::int64_t> basis_gdeg_;
    std::vector<std::int64_t> basis_ndeg_;

    mutable std::mutex cache_mtx_;
    mutable std::vector<std::optional<TensorSquareElement>> coproduct_cache_;
    mutable std::vector<std::optional<AlgebraElement>> antipode_cache_;
};

} // namespace quasiq
