#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "quasiq/cyclotomic.hpp"
#include "quasiq/errors.hpp"
#include "quasiq/group.hpp"
#include "quasiq/parallel.hpp"

namespace quasiq {

/// Parameter sequence defining the normalized 3-cocycle Phi on an abelian
/// group: one a_l per factor, one a_{st} per pair s<t, one a_{rst} per triple
/// r<s<t, with 0 <= a_l < m_l, 0 <= a_{st} < (m_s, m_t),
/// 0 <= a_{rst} < (m_r, m_s, m_t).
struct CocycleData {
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> a2; // pairs (s,t), s<t, lexicographic
    std::vector<std::int64_t> a3; // triples (r,s,t), r<s<t, lexicographic

    static std::size_t pair_index(std::size_t N, std::size_t s, std::size_t t) {
        // 0-based s < t < N
        return s * N - s * (s + 1) / 2 + (t - s - 1);
    }
    static std::size_t triple_index(std::size_t N, std::size_t r, std::size_t s, std::size_t t) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < r; ++i) idx += (N - 1 - i) * (N - 2 - i) / 2;
        idx += pair_index(N - 1 - r, s - r - 1, t - r - 1);
        return idx;
    }

    static CocycleData trivial(const AbelianGroup& G) {
        std::size_t N = G.rank();
        CocycleData c;
        c.a.assign(N, 0);
        c.a2.assign(N * (N - 1) / 2, 0);
        c.a3.assign(N * (N - 1) * (N - 2) / 6, 0);
        return c;
    }

    std::int64_t pair(std::size_t N, std::size_t s, std::size_t t) const { return a2[pair_index(N, s, t)]; }
    std::int64_t triple(std::size_t N, std::size_t r, std::size_t s, std::size_t t) const {
        return a3[triple_index(N, r, s, t)];
    }

    bool reduced() const {
        for (auto v : a3)
            if (v != 0) return false;
        return true;
    }

    void validate(const AbelianGroup& G) const {
        std::size_t N = G.rank();
        if (a.size() != N || a2.size() != N * (N - 1) / 2 || a3.size() != N * (N - 1) * (N - 2) / 6)
            throw ConfigError("cocycle parameter count does not match group rank");
        for (std::size_t l = 0; l < N; ++l)
            if (a[l] < 0 || a[l] >= G.moduli[l]) throw ConfigError("cocycle parameter a out of range");
        for (std::size_t s = 0; s < N; ++s)
            for (std::size_t t = s + 1; t < N; ++t) {
                std::int64_t g = std::gcd(G.moduli[s], G.moduli[t]);
                std::int64_t v = pair(N, s, t);
                if (v < 0 || v >= g) throw ConfigError("cocycle parameter a2 out of range");
            }
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t s = r + 1; s < N; ++s)
                for (std::size_t t = s + 1; t < N; ++t) {
                    std::int64_t g = std::gcd(std::gcd(G.moduli[r], G.moduli[s]), G.moduli[t]);
                    std::int64_t v = triple(N, r, s, t);
                    if (v < 0 || v >= g) throw ConfigError("cocycle parameter a3 out of range");
                }
    }

    friend bool operator==(const CocycleData& x, const CocycleData& y) {
        return x.a == y.a && x.a2 == y.a2 && x.a3 == y.a3;
    }
};

/// Exponent of Phi(x,y,z) with respect to zeta_L, L = exponent of G.
/// Brackets [.] are taken on the reduced representatives 0 <= j_l < m_l.
inline std::int64_t phi_exp(const AbelianGroup& G, const CocycleData& c, const GroupElem& x,
                            const GroupElem& y, const GroupElem& z) {
    const std::size_t N = G.rank();
    const std::int64_t L = G.exponent();
    std::int64_t e = 0;
    for (std::size_t l = 0; l < N; ++l) {
        std::int64_t ml = G.moduli[l];
        std::int64_t br = (y.exps[l] + z.exps[l]) / ml;
        if (c.a[l] != 0 && br != 0) e += (L / ml) * c.a[l] * x.exps[l] * br;
    }
    for (std::size_t s = 0; s < N; ++s) {
        std::int64_t br = (y.exps[s] + z.exps[s]) / G.moduli[s];
        if (br == 0) continue;
        for (std::size_t t = s + 1; t < N; ++t) {
            std::int64_t ast = c.pair(N, s, t);
            if (ast != 0) e += (L / G.moduli[t]) * ast * x.exps[t] * br;
        }
    }
    if (!c.a3.empty()) {
        for (std::size_t r = 0; r < N; ++r) {
            if (z.exps[r] == 0) continue;
            for (std::size_t s = r + 1; s < N; ++s) {
                if (y.exps[s] == 0) continue;
                for (std::size_t t = s + 1; t < N; ++t) {
                    std::int64_t arst = c.triple(N, r, s, t);
                    if (arst == 0) continue;
                    std::int64_t g = std::gcd(std::gcd(G.moduli[r], G.moduli[s]), G.moduli[t]);
                    e += (L / g) * arst * z.exps[r] * y.exps[s] * x.exps[t];
                }
            }
        }
    }
    return ((e % L) + L) % L;
}

inline RootExp phi_eval(const AbelianGroup& G, const CocycleData& c, const GroupElem& x,
                        const GroupElem& y, const GroupElem& z) {
    return RootExp(G.exponent(), phi_exp(G, c, x, y, z));
}

/// The 2-cocycle induced at degree g:
/// Phi~_g(e,f) = Phi(g,e,f) Phi(e,f,g) / Phi(e,g,f).
inline std::int64_t phi_tilde_exp(const AbelianGroup& G, const CocycleData& c, const GroupElem& g,
                                  const GroupElem& e, const GroupElem& f) {
    std::int64_t L = G.exponent();
    std::int64_t v = phi_exp(G, c, g, e, f) + phi_exp(G, c, e, f, g) - phi_exp(G, c, e, g, f);
    return ((v % L) + L) % L;
}

inline RootExp phi_tilde_eval(const AbelianGroup& G, const CocycleData& c, const GroupElem& g,
                              const GroupElem& e, const GroupElem& f) {
    return RootExp(G.exponent(), phi_tilde_exp(G, c, g, e, f));
}

/// Tabulated cocycle exponents over a whole (small) group.
class CocycleTable {
public:
    CocycleTable(const GroupTable& gt, const CocycleData& c) : gt_(gt), L_(gt.G.exponent()) {
        c.validate(gt.G);
        std::int64_t n = gt.size();
        phi_.resize(static_cast<std::size_t>(n * n * n));
        for (std::int64_t x = 0; x < n; ++x)
            for (std::int64_t y = 0; y < n; ++y)
                for (std::int64_t z = 0; z < n; ++z)
                    phi_[flat(x, y, z)] = phi_exp(gt.G, c, gt.elem(x), gt.elem(y), gt.elem(z));
    }

    std::int64_t L() const { return L_; }
    const GroupTable& group() const { return gt_; }

    std::int64_t phi(std::int64_t x, std::int64_t y, std::int64_t z) const { return phi_[flat(x, y, z)]; }

    std::int64_t phi_tilde(std::int64_t g, std::int64_t x, std::int64_t y) const {
        std::int64_t v = phi(g, x, y) + phi(x, y, g) - phi(x, g, y);
        return ((v % L_) + L_) % L_;
    }

    bool tilde_symmetric(std::int64_t g) const {
        std::int64_t n = gt_.size();
        for (std::int64_t x = 0; x < n; ++x)
            for (std::int64_t y = x + 1; y < n; ++y)
                if (phi_tilde(g, x, y) != phi_tilde(g, y, x)) return false;
        return true;
    }

private:
    std::size_t flat(std::int64_t x, std::int64_t y, std::int64_t z) const {
        std::int64_t n = gt_.size();
        return static_cast<std::size_t>((x * n + y) * n + z);
    }

    const GroupTable& gt_;
    std::int64_t L_;
    std::vector<std::int64_t> phi_;
};

struct VerifyResult {
    bool ok = true;
    std::uint64_t checked = 0;
    std::vector<GroupElem> witness; // first failing tuple, empty when ok
};

enum class VerifyMode { Auto, Exhaustive, Sampled };

struct VerifyOptions {
    VerifyMode mode = VerifyMode::Auto;
    std::int64_t exhaustive_bound = 32; // max |G| for the full scan
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
};

/// Check the 2- or 3-cocycle identity for an arbitrary evaluable f, returning
/// the first counterexample. Exhaustive over G^3 resp. G^4 for small groups,
/// seeded sampling above the bound.
inline VerifyResult verify_cocycle(const AbelianGroup& G,
                                   const std::function<RootExp(const GroupElem&, const GroupElem&, const GroupElem&)>& f3,
                                   const std::function<RootExp(const GroupElem&, const GroupElem&)>& f2,
                                   int arity, VerifyOptions opts = {}) {
    if (arity != 2 && arity != 3) throw ConfigError("cocycle arity must be 2 or 3");
    GroupTable gt(G);
    const std::int64_t n = gt.size();
    bool exhaustive = n <= opts.exhaustive_bound;
    if (opts.mode == VerifyMode::Exhaustive) {
        if (!exhaustive)
            throw GroupTooLargeForExhaustive("group of order " + std::to_string(n) + " exceeds the exhaustive bound " +
                                             std::to_string(opts.exhaustive_bound));
        exhaustive = true;
    } else if (opts.mode == VerifyMode::Sampled) {
        exhaustive = false;
    }

    auto check2 = [&](std::int64_t e, std::int64_t f, std::int64_t g) -> bool {
        // w(e,f) w(ef,g) = w(e,fg) w(f,g)
        RootExp lhs = f2(gt.elem(e), gt.elem(f)) * f2(gt.elem(gt.mul(e, f)), gt.elem(g));
        RootExp rhs = f2(gt.elem(e), gt.elem(gt.mul(f, g))) * f2(gt.elem(f), gt.elem(g));
        return lhs == rhs;
    };
    auto check3 = [&](std::int64_t e, std::int64_t f, std::int64_t g, std::int64_t h) -> bool {
        // Phi(ef,g,h) Phi(e,f,gh) = Phi(e,f,g) Phi(e,fg,h) Phi(f,g,h)
        RootExp lhs = f3(gt.elem(gt.mul(e, f)), gt.elem(g), gt.elem(h)) *
                      f3(gt.elem(e), gt.elem(f), gt.elem(gt.mul(g, h)));
        RootExp rhs = f3(gt.elem(e), gt.elem(f), gt.elem(g)) *
                      f3(gt.elem(e), gt.elem(gt.mul(f, g)), gt.elem(h)) * f3(gt.elem(f), gt.elem(g), gt.elem(h));
        return lhs == rhs;
    };

    VerifyResult res;
    if (exhaustive) {
        std::int64_t total = arity == 2 ? n * n * n : n * n * n * n;
        std::mutex wmtx;
        std::atomic<bool> failed{false};
        parallel_for(total, [&](std::int64_t lo, std::int64_t hi) {
            for (std::int64_t t = lo; t < hi && !failed.load(std::memory_order_relaxed); ++t) {
                bool ok;
                std::int64_t e, f, g, h = 0;
                if (arity == 2) {
                    e = t / (n * n);
                    f = (t / n) % n;
                    g = t % n;
                    ok = check2(e, f, g);
                } else {
                    e = t / (n * n * n);
                    f = (t / (n * n)) % n;
                    g = (t / n) % n;
                    h = t % n;
                    ok = check3(e, f, g, h);
                }
                if (!ok) {
                    std::lock_guard<std::mutex> lock(wmtx);
                    if (res.witness.empty()) {
                        res.witness = {gt.elem(e), gt.elem(f), gt.elem(g)};
                        if (arity == 3) res.witness.push_back(gt.elem(h));
                    }
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
        res.ok = !failed.load();
        res.checked = static_cast<std::uint64_t>(total);
        return res;
    }

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::int64_t> dist(0, n - 1);
    for (std::uint64_t s = 0; s < opts.samples; ++s) {
        ++res.checked;
        if (arity == 2) {
            std::int64_t e = dist(rng), f = dist(rng), g = dist(rng);
            if (!check2(e, f, g)) {
                res.ok = false;
                res.witness = {gt.elem(e), gt.elem(f), gt.elem(g)};
                return res;
            }
        } else {
            std::int64_t e = dist(rng), f = dist(rng), g = dist(rng), h = dist(rng);
            if (!check3(e, f, g, h)) {
                res.ok = false;
                res.witness = {gt.elem(e), gt.elem(f), gt.elem(g), gt.elem(h)};
                return res;
            }
        }
    }
    return res;
}

inline VerifyResult verify_cocycle3(const AbelianGroup& G, const CocycleData& c, VerifyOptions opts = {}) {
    c.validate(G);
    return verify_cocycle(
        G, [&](const GroupElem& x, const GroupElem& y, const GroupElem& z) { return phi_eval(G, c, x, y, z); },
        nullptr, 3, opts);
}

inline VerifyResult verify_cocycle2_tilde(const AbelianGroup& G, const CocycleData& c, const GroupElem& g,
                                          VerifyOptions opts = {}) {
    c.validate(G);
    return verify_cocycle(
        G, nullptr,
        [&](const GroupElem& x, const GroupElem& y) { return phi_tilde_eval(G, c, g, x, y); }, 2, opts);
}

/// All cocycle parameter sequences on G, lexicographic. Optionally only the
/// reduced ones (a3 = 0).
inline std::vector<CocycleData> all_cocycles(const AbelianGroup& G, bool reduced_only = false) {
    std::size_t N = G.rank();
    std::vector<std::int64_t> bounds;
    for (std::size_t l = 0; l < N; ++l) bounds.push_back(G.moduli[l]);
    for (std::size_t s = 0; s < N; ++s)
        for (std::size_t t = s + 1; t < N; ++t) bounds.push_back(std::gcd(G.moduli[s], G.moduli[t]));
    if (!reduced_only)
        for (std::size_t r = 0; r < N; ++r)
            for (std::size_t s = r + 1; s < N; ++s)
                for (std::size_t t = s + 1; t < N; ++t)
                    bounds.push_back(std::gcd(std::gcd(G.moduli[r], G.moduli[s]), G.moduli[t]));

    std::vector<CocycleData> out;
    std::vector<std::int64_t> v(bounds.size(), 0);
    for (;;) {
        CocycleData c;
        c.a.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(N));
        c.a2.assign(v.begin() + static_cast<std::ptrdiff_t>(N),
                    v.begin() + static_cast<std::ptrdiff_t>(N + N * (N - 1) / 2));
        if (reduced_only)
            c.a3.assign(N * (N - 1) * (N - 2) / 6, 0);
        else
            c.a3.assign(v.begin() + static_cast<std::ptrdiff_t>(N + N * (N - 1) / 2), v.end());
        out.push_back(std::move(c));
        std::size_t l = v.size();
        bool done = true;
        while (l-- > 0) {
            if (++v[l] < bounds[l]) {
                done = false;
                break;
            }
            v[l] = 0;
        }
        if (done) return out;
    }
}

} // namespace quasiq
