#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quasiq/cocycle.hpp"
#include "quasiq/cyclotomic.hpp"
#include "quasiq/errors.hpp"
#include "quasiq/group.hpp"

namespace quasiq {

/// A quasi-character associated to Phi~_g, stored by its degree g and its
/// values on the distinguished generators. Values live in the L^2-th roots of
/// unity and extend multiplicatively over reduced exponents; the cocycle
/// defect shows up only when exponents wrap.
struct QuasiCharacter {
    GroupElem degree;
    std::vector<RootExp> vals; // vals[l] = chi(e_l), order L^2

    friend bool operator==(const QuasiCharacter& x, const QuasiCharacter& y) {
        if (x.degree != y.degree || x.vals.size() != y.vals.size()) return false;
        for (std::size_t l = 0; l < x.vals.size(); ++l)
            if (x.vals[l] != y.vals[l]) return false;
        return true;
    }
};

inline RootExp char_value(const QuasiCharacter& chi, const GroupElem& h) {
    std::int64_t m = chi.vals.empty() ? 1 : chi.vals[0].order;
    std::int64_t e = 0;
    for (std::size_t l = 0; l < h.exps.size(); ++l) e += chi.vals[l].exp * h.exps[l];
    return RootExp(m, e);
}

namespace detail {

/// Exponent (base zeta_L) of the value whose m_l-th roots are the candidate
/// chi(e_l): zeta_{m_l}^{a_l i_l} * prod_{t>l} zeta_{m_t}^{a_{lt} i_t}.
inline std::int64_t char_base_exp(const AbelianGroup& G, const CocycleData& c, const GroupElem& g,
                                  std::size_t l) {
    const std::size_t N = G.rank();
    const std::int64_t L = G.exponent();
    std::int64_t e = (L / G.moduli[l]) * c.a[l] * g.exps[l];
    for (std::size_t t = l + 1; t < N; ++t) e += (L / G.moduli[t]) * c.pair(N, l, t) * g.exps[t];
    return ((e % L) + L) % L;
}

} // namespace detail

/// The quasi-character with the given root-branch indices, branch k adding
/// k * (L^2 / m_l) to the base exponent in slot l.
inline QuasiCharacter quasicharacter_from_branches(const AbelianGroup& G, const CocycleData& c,
                                                   const GroupElem& g,
                                                   const std::vector<std::int64_t>& branches) {
    const std::size_t N = G.rank();
    const std::int64_t L = G.exponent();
    const std::int64_t M = G.char_order();
    QuasiCharacter chi{g, {}};
    chi.vals.reserve(N);
    for (std::size_t l = 0; l < N; ++l) {
        std::int64_t base = (L * detail::char_base_exp(G, c, g, l)) / G.moduli[l];
        chi.vals.push_back(RootExp(M, base + branches[l] * (M / G.moduli[l])));
    }
    return chi;
}

/// Does chi satisfy chi(f) chi(h) = Phi~_g(f,h) chi(fh) on all of G x G?
inline bool satisfies_quasicharacter_identity(const AbelianGroup& G, const CocycleData& c,
                                              const QuasiCharacter& chi) {
    GroupTable gt(G);
    const std::int64_t M = G.char_order();
    for (std::int64_t f = 0; f < gt.size(); ++f)
        for (std::int64_t h = 0; h < gt.size(); ++h) {
            RootExp lhs = char_value(chi, gt.elem(f)) * char_value(chi, gt.elem(h));
            RootExp rhs = phi_tilde_eval(G, c, chi.degree, gt.elem(f), gt.elem(h)).lift(M) *
                          char_value(chi, gt.elem(gt.mul(f, h)));
            if (lhs != rhs) return false;
        }
    return true;
}

/// All quasi-characters associated to Phi~_g, in deterministic branch order.
/// Throws NonSymmetricCocycle when Phi~_g is not symmetric (then none exist).
inline std::vector<QuasiCharacter> solve_quasicharacters(const AbelianGroup& G, const CocycleData& c,
                                                         const GroupElem& g) {
    c.validate(G);
    check_member(G, g);
    GroupTable gt(G);
    for (std::int64_t x = 0; x < gt.size(); ++x)
        for (std::int64_t y = x + 1; y < gt.size(); ++y)
            if (phi_tilde_exp(G, c, g, gt.elem(x), gt.elem(y)) !=
                phi_tilde_exp(G, c, g, gt.elem(y), gt.elem(x)))
                throw NonSymmetricCocycle("Phi~ at degree " + g.str() + " is not symmetric at (" +
                                          gt.elem(x).str() + ", " + gt.elem(y).str() + ")");

    const std::size_t N = G.rank();
    std::vector<QuasiCharacter> out;
    std::vector<std::int64_t> k(N, 0);
    for (;;) {
        QuasiCharacter chi = quasicharacter_from_branches(G, c, g, k);
        if (satisfies_quasicharacter_identity(G, c, chi)) out.push_back(std::move(chi));
        std::size_t l = N;
        bool done = true;
        while (l-- > 0) {
            if (++k[l] < G.moduli[l]) {
                done = false;
                break;
            }
            k[l] = 0;
        }
        if (done) break;
    }
    return out;
}

/// A candidate series of quasi-characters with degrees; the classifying datum.
struct AdmissibleSeries {
    AbelianGroup G;
    CocycleData cocycle;
    std::vector<QuasiCharacter> chars;

    AdmissibleSeries(AbelianGroup g, CocycleData c, std::vector<QuasiCharacter> ch)
        : G(std::move(g)), cocycle(std::move(c)), chars(std::move(ch)) {
        if (chars.empty()) throw ConfigError("a series needs at least one quasi-character");
        cocycle.validate(G);
    }

    std::size_t rank() const { return chars.size(); }

    const GroupElem& degree(std::size_t i) const { return chars[i].degree; }

    /// The n x N exponent matrix of the degrees.
    std::vector<std::vector<std::int64_t>> alpha() const {
        std::vector<std::vector<std::int64_t>> m;
        m.reserve(chars.size());
        for (const auto& chi : chars) m.push_back(chi.degree.exps);
        return m;
    }

    std::vector<std::int64_t> nilpotencies() const {
        std::vector<std::int64_t> n;
        n.reserve(chars.size());
        for (const auto& chi : chars) n.push_back(root_order(char_value(chi, chi.degree)));
        return n;
    }

    std::int64_t braided_dim() const {
        std::int64_t d = 1;
        for (auto ni : nilpotencies()) d *= ni;
        return d;
    }
};

struct AdmissibilityReport {
    bool ok = true;
    std::string violation; // empty when ok

    explicit operator bool() const { return ok; }
};

/// The admissibility conditions: non-identity degrees, generation,
/// chi_i(g_j) chi_j(g_i) = 1 for i != j, chi_i(g_i) != 1.
inline AdmissibilityReport check_admissible(const AdmissibleSeries& s) {
    AdmissibilityReport rep;
    const std::size_t n = s.rank();
    for (std::size_t i = 0; i < n; ++i)
        if (is_identity(s.degree(i))) {
            rep.ok = false;
            rep.violation = "degree " + std::to_string(i + 1) + " is the identity";
            return rep;
        }
    std::vector<GroupElem> degs;
    for (std::size_t i = 0; i < n; ++i) degs.push_back(s.degree(i));
    if (!generates(s.G, degs)) {
        rep.ok = false;
        rep.violation = "degrees do not generate the group";
        return rep;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            RootExp v = char_value(s.chars[i], s.degree(j)) * char_value(s.chars[j], s.degree(i));
            if (!v.is_one()) {
                rep.ok = false;
                rep.violation = "pairing chi_" + std::to_string(i + 1) + "(g_" + std::to_string(j + 1) +
                                ") chi_" + std::to_string(j + 1) + "(g_" + std::to_string(i + 1) + ") != 1";
                return rep;
            }
        }
    for (std::size_t i = 0; i < n; ++i)
        if (char_value(s.chars[i], s.degree(i)).is_one()) {
            rep.ok = false;
            rep.violation = "chi_" + std::to_string(i + 1) + "(g_" + std::to_string(i + 1) + ") = 1";
            return rep;
        }
    return rep;
}

/// Decide from the exponent matrix alone whether some admissible series with
/// these degrees exists. Pure integer arithmetic over the root-branch lattice;
/// deliberately independent of the QuasiCharacter machinery.
inline bool matrix_admissible(const AbelianGroup& G, const CocycleData& c,
                              const std::vector<std::vector<std::int64_t>>& alpha) {
    c.validate(G);
    if (!c.reduced()) throw NonReducedCocycle("matrix_admissible needs a reduced cocycle (a3 = 0)");
    const std::size_t n = alpha.size();
    if (n == 0) return false;
    const std::size_t N = G.rank();
    const std::int64_t L = G.exponent();
    const std::int64_t M = G.char_order();

    std::vector<GroupElem> degs;
    for (const auto& row : alpha) {
        if (row.size() != N) throw ConfigError("alpha row rank does not match group");
        degs.push_back(make_elem(G, row));
        if (is_identity(degs.back())) return false;
    }
    if (!generates(G, degs)) return false;

    // principal value exponents E[i][l] mod M
    std::vector<std::vector<std::int64_t>> E(n, std::vector<std::int64_t>(N));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < N; ++l)
            E[i][l] = (L * detail::char_base_exp(G, c, degs[i], l)) / G.moduli[l];

    // Branch k_{il} shifts E[i][l] by k * (M / m_l). Search for a branch
    // assignment meeting every pairing congruence and diagonal disequation;
    // rows are filled one at a time with early pruning.
    std::vector<std::vector<std::int64_t>> V(n, std::vector<std::int64_t>(N));
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == n) return true;
        std::vector<std::int64_t> k(N, 0);
        for (;;) {
            for (std::size_t l = 0; l < N; ++l) V[i][l] = (E[i][l] + k[l] * (M / G.moduli[l])) % M;
            std::int64_t diag = 0;
            for (std::size_t l = 0; l < N; ++l) diag += degs[i].exps[l] * V[i][l];
            if (diag % M != 0) {
                bool pairs_ok = true;
                for (std::size_t j = 0; j < i && pairs_ok; ++j) {
                    std::int64_t p = 0;
                    for (std::size_t l = 0; l < N; ++l)
                        p += degs[j].exps[l] * V[i][l] + degs[i].exps[l] * V[j][l];
                    if (p % M != 0) pairs_ok = false;
                }
                if (pairs_ok && dfs(i + 1)) return true;
            }
            std::size_t l = N;
            bool done = true;
            while (l-- > 0) {
                if (++k[l] < G.moduli[l]) {
                    done = false;
                    break;
                }
                k[l] = 0;
            }
            if (done) return false;
        }
    };
    return dfs(0);
}

} // namespace quasiq
