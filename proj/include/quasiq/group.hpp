#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "quasiq/errors.hpp"

namespace quasiq {

/// Finite abelian group Z_{m_1} x ... x Z_{m_N}, all m_l >= 2.
struct AbelianGroup {
    std::vector<std::int64_t> moduli;

    explicit AbelianGroup(std::vector<std::int64_t> m) : moduli(std::move(m)) {
        if (moduli.empty()) throw ConfigError("group needs at least one factor");
        for (auto ml : moduli)
            if (ml < 2) throw ConfigError("group moduli must be >= 2");
    }

    std::size_t rank() const { return moduli.size(); }

    std::int64_t order() const {
        std::int64_t n = 1;
        for (auto m : moduli) n *= m;
        return n;
    }

    /// lcm of the moduli; cocycle values live in the L-th roots of unity.
    std::int64_t exponent() const {
        std::int64_t l = 1;
        for (auto m : moduli) l = std::lcm(l, m);
        return l;
    }

    /// Quasi-character values live in the L^2-th roots of unity.
    std::int64_t char_order() const { return exponent() * exponent(); }

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.moduli == b.moduli; }
    friend bool operator!=(const AbelianGroup& a, const AbelianGroup& b) { return !(a == b); }
};

/// Element e_1^{i_1} ... e_N^{i_N}, exponents reduced componentwise.
struct GroupElem {
    std::vector<std::int64_t> exps;

    friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.exps == b.exps; }
    friend bool operator!=(const GroupElem& a, const GroupElem& b) { return !(a == b); }
    friend bool operator<(const GroupElem& a, const GroupElem& b) { return a.exps < b.exps; }

    std::string str() const {
        std::string s = "(";
        for (std::size_t l = 0; l < exps.size(); ++l) {
            if (l) s += ",";
            s += std::to_string(exps[l]);
        }
        return s + ")";
    }
};

inline void check_member(const AbelianGroup& G, const GroupElem& x) {
    if (x.exps.size() != G.rank()) throw ModuliMismatch("element rank does not match group");
    for (std::size_t l = 0; l < x.exps.size(); ++l)
        if (x.exps[l] < 0 || x.exps[l] >= G.moduli[l]) throw ModuliMismatch("element exponent out of range");
}

inline GroupElem identity(const AbelianGroup& G) {
    return GroupElem{std::vector<std::int64_t>(G.rank(), 0)};
}

inline GroupElem make_elem(const AbelianGroup& G, std::vector<std::int64_t> exps) {
    if (exps.size() != G.rank()) throw ModuliMismatch("exponent vector rank does not match group");
    for (std::size_t l = 0; l < exps.size(); ++l) {
        exps[l] %= G.moduli[l];
        if (exps[l] < 0) exps[l] += G.moduli[l];
    }
    return GroupElem{std::move(exps)};
}

inline GroupElem mul(const AbelianGroup& G, const GroupElem& x, const GroupElem& y) {
    check_member(G, x);
    check_member(G, y);
    std::vector<std::int64_t> e(G.rank());
    for (std::size_t l = 0; l < e.size(); ++l) {
        e[l] = x.exps[l] + y.exps[l];
        if (e[l] >= G.moduli[l]) e[l] -= G.moduli[l];
    }
    return GroupElem{std::move(e)};
}

inline GroupElem inverse(const AbelianGroup& G, const GroupElem& x) {
    check_member(G, x);
    std::vector<std::int64_t> e(G.rank());
    for (std::size_t l = 0; l < e.size(); ++l) e[l] = x.exps[l] == 0 ? 0 : G.moduli[l] - x.exps[l];
    return GroupElem{std::move(e)};
}

inline bool is_identity(const GroupElem& x) {
    for (auto v : x.exps)
        if (v != 0) return false;
    return true;
}

inline std::int64_t elem_order(const AbelianGroup& G, const GroupElem& x) {
    check_member(G, x);
    std::int64_t n = 1;
    for (std::size_t l = 0; l < x.exps.size(); ++l) {
        std::int64_t ml = G.moduli[l];
        n = std::lcm(n, ml / std::gcd(ml, x.exps[l]));
    }
    return n;
}

/// Does the given set generate G? Decided by product saturation.
inline bool generates(const AbelianGroup& G, const std::vector<GroupElem>& gens) {
    std::set<GroupElem> closure{identity(G)};
    std::vector<GroupElem> frontier{identity(G)};
    while (!frontier.empty()) {
        std::vector<GroupElem> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                GroupElem y = mul(G, x, g);
                if (closure.insert(y).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    return static_cast<std::int64_t>(closure.size()) == G.order();
}

/// Flat enumeration of G with mixed-radix indices; first coordinate most
/// significant, so index order is lexicographic on exponent vectors and the
/// identity has index 0. Also caches the multiplication table.
class GroupTable {
public:
    explicit GroupTable(AbelianGroup g) : G(std::move(g)), n_(G.order()) {
        elems_.reserve(static_cast<std::size_t>(n_));
        std::vector<std::int64_t> e(G.rank(), 0);
        for (std::int64_t i = 0; i < n_; ++i) {
            elems_.push_back(GroupElem{e});
            for (std::size_t l = e.size(); l-- > 0;) {
                if (++e[l] < G.moduli[l]) break;
                e[l] = 0;
            }
        }
        mul_.resize(static_cast<std::size_t>(n_ * n_));
        inv_.resize(static_cast<std::size_t>(n_));
        for (std::int64_t i = 0; i < n_; ++i) {
            inv_[static_cast<std::size_t>(i)] = index(quasiq::inverse(G, elems_[static_cast<std::size_t>(i)]));
            for (std::int64_t j = 0; j < n_; ++j)
                mul_[static_cast<std::size_t>(i * n_ + j)] =
                    index(quasiq::mul(G, elems_[static_cast<std::size_t>(i)], elems_[static_cast<std::size_t>(j)]));
        }
    }

    const AbelianGroup G;

    std::int64_t size() const { return n_; }
    const GroupElem& elem(std::int64_t i) const { return elems_[static_cast<std::size_t>(i)]; }

    std::int64_t index(const GroupElem& x) const {
        check_member(G, x);
        std::int64_t i = 0;
        for (std::size_t l = 0; l < x.exps.size(); ++l) i = i * G.moduli[l] + x.exps[l];
        return i;
    }

    std::int64_t mul(std::int64_t i, std::int64_t j) const { return mul_[static_cast<std::size_t>(i * n_ + j)]; }
    std::int64_t inv(std::int64_t i) const { return inv_[static_cast<std::size_t>(i)]; }

private:
    std::int64_t n_;
    std::vector<GroupElem> elems_;
    std::vector<std::int64_t> mul_;
    std::vector<std::int64_t> inv_;
};

} // namespace quasiq
