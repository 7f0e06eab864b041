#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include "quasiq/errors.hpp"
#include "quasiq/rational.hpp"

namespace quasiq {

/// A pure root of unity zeta_M^exp, stored as an exponent mod M.
struct RootExp {
    std::int64_t order; // M >= 1
    std::int64_t exp;   // 0 <= exp < M

    RootExp(std::int64_t m, std::int64_t e) : order(m), exp(((e % m) + m) % m) {}

    static RootExp one(std::int64_t m) { return RootExp(m, 0); }

    bool is_one() const { return exp == 0; }

    RootExp inverse() const { return RootExp(order, -exp); }

    RootExp pow(std::int64_t k) const { return RootExp(order, exp * k); }

    /// Rescale to a larger ambient order; `m` must be a multiple of `order`.
    RootExp lift(std::int64_t m) const {
        if (m % order != 0) throw OrderMismatch("cannot lift root of order " + std::to_string(order) + " into order " + std::to_string(m));
        return RootExp(m, exp * (m / order));
    }

    friend RootExp operator*(const RootExp& a, const RootExp& b) {
        if (a.order != b.order) throw OrderMismatch("root order mismatch");
        return RootExp(a.order, a.exp + b.exp);
    }

    friend bool operator==(const RootExp& a, const RootExp& b) {
        std::int64_t m = std::lcm(a.order, b.order);
        return a.exp * (m / a.order) == b.exp * (m / b.order);
    }
    friend bool operator!=(const RootExp& a, const RootExp& b) { return !(a == b); }
    friend bool operator<(const RootExp& a, const RootExp& b) {
        return std::tie(a.order, a.exp) < std::tie(b.order, b.exp);
    }
};

/// Multiplicative order of zeta_M^exp, i.e. M / gcd(M, exp).
inline std::int64_t root_order(const RootExp& r) {
    return r.order / std::gcd(r.order, r.exp);
}

namespace detail {

/// Cyclotomic polynomials with integer coefficients, indexed low degree first,
/// computed by exact division of x^n - 1 by the lower-order ones. Memoized.
inline const std::vector<BigInt>& cyclotomic_polynomial(std::int64_t n) {
    static std::map<std::int64_t, std::vector<BigInt>> memo;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;

    // x^n - 1
    std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, BigInt(0));
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;

    for (std::int64_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        // Recursive lookup without re-locking: compute divisors in increasing
        // order so every proper divisor is already in the table.
        auto jt = memo.find(d);
        if (jt == memo.end()) {
            std::vector<BigInt> p(static_cast<std::size_t>(d) + 1, BigInt(0));
            p[0] = -1;
            p[static_cast<std::size_t>(d)] = 1;
            for (std::int64_t e = 1; e < d; ++e) {
                if (d % e != 0) continue;
                const auto& q = memo.at(e); // filled by outer loop order
                // exact division p /= q (both monic)
                std::vector<BigInt> quot(p.size() - q.size() + 1, BigInt(0));
                std::vector<BigInt> rem = p;
                for (std::size_t i = quot.size(); i-- > 0;) {
                    BigInt c = rem[i + q.size() - 1];
                    quot[i] = c;
                    if (c == 0) continue;
                    for (std::size_t j = 0; j < q.size(); ++j) rem[i + j] -= c * q[j];
                }
                p = quot;
            }
            jt = memo.emplace(d, std::move(p)).first;
        }
        const auto& q = jt->second;
        std::vector<BigInt> quot(poly.size() - q.size() + 1, BigInt(0));
        std::vector<BigInt> rem = poly;
        for (std::size_t i = quot.size(); i-- > 0;) {
            BigInt c = rem[i + q.size() - 1];
            quot[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < q.size(); ++j) rem[i + j] -= c * q[j];
        }
        poly = quot;
    }
    return memo.emplace(n, std::move(poly)).first->second;
}

} // namespace detail

/// Exact element of Q(zeta_M), represented as a coefficient vector of length M
/// in Q[x]/(x^M - 1). Products are cyclic convolutions; equality and zero
/// tests reduce modulo the M-th cyclotomic polynomial.
class CycNumber {
public:
    explicit CycNumber(std::int64_t order) : order_(order), c_(static_cast<std::size_t>(order)) {}

    static CycNumber zero(std::int64_t order) { return CycNumber(order); }

    static CycNumber one(std::int64_t order) {
        CycNumber r(order);
        r.c_[0] = Rational(1);
        return r;
    }

    static CycNumber from_rational(std::int64_t order, const Rational& q) {
        CycNumber r(order);
        r.c_[0] = q;
        return r;
    }

    /// Embed a pure root; its order must divide the ambient order.
    static CycNumber from_root(const RootExp& z, std::int64_t order) {
        RootExp lifted = z.lift(order);
        CycNumber r(order);
        r.c_[static_cast<std::size_t>(lifted.exp)] = Rational(1);
        return r;
    }
    static CycNumber from_root(const RootExp& z) { return from_root(z, z.order); }

    std::int64_t order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational& coeff(std::size_t k) { return c_[k]; }
    const Rational& coeff(std::size_t k) const { return c_[k]; }

    CycNumber operator-() const {
        CycNumber r(order_);
        for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] = -c_[k];
        return r;
    }

    CycNumber& operator+=(const CycNumber& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    CycNumber& operator-=(const CycNumber& o) {
        check_order(o);
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
        return *this;
    }

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }

    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        a.check_order(b);
        CycNumber r(a.order_);
        const auto m = static_cast<std::size_t>(a.order_);
        for (std::size_t i = 0; i < m; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) {
                if (b.c_[j].is_zero()) continue;
                std::size_t k = i + j;
                if (k >= m) k -= m;
                r.c_[k] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

    /// Multiply by a pure root: cheap coefficient rotation.
    CycNumber& mul_root(const RootExp& z) {
        RootExp lifted = z.lift(order_);
        if (lifted.exp == 0) return *this;
        std::vector<Rational> out(c_.size());
        const auto m = static_cast<std::size_t>(order_);
        for (std::size_t k = 0; k < m; ++k) {
            std::size_t j = k + static_cast<std::size_t>(lifted.exp);
            if (j >= m) j -= m;
            out[j] = std::move(c_[k]);
        }
        c_ = std::move(out);
        return *this;
    }

    CycNumber& mul_rational(const Rational& q) {
        for (auto& x : c_) x *= q;
        return *this;
    }

    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) goto reduce;
        return true;
    reduce:
        std::vector<Rational> rem = reduced();
        for (const auto& x : rem)
            if (!x.is_zero()) return false;
        return true;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        a.check_order(b);
        return (a - b).is_zero();
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    /// Multiplicative inverse in Q(zeta_M) via the extended Euclidean
    /// algorithm modulo the M-th cyclotomic polynomial.
    CycNumber inverse() const {
        if (is_zero()) throw DivisionByZero("inverse of zero cyclotomic number");
        using Poly = std::vector<Rational>;
        auto deg = [](const Poly& p) -> std::ptrdiff_t {
            for (std::size_t i = p.size(); i-- > 0;)
                if (!p[i].is_zero()) return static_cast<std::ptrdiff_t>(i);
            return -1;
        };
        auto divmod = [&](Poly a, const Poly& b) {
            std::ptrdiff_t db = deg(b);
            Poly q(a.size(), Rational(0));
            for (std::ptrdiff_t da = deg(a); da >= db; da = deg(a)) {
                Rational c = a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
                q[static_cast<std::size_t>(da - db)] = c;
                for (std::ptrdiff_t j = 0; j <= db; ++j)
                    a[static_cast<std::size_t>(da - db + j)] -= c * b[static_cast<std::size_t>(j)];
            }
            return std::pair<Poly, Poly>(std::move(q), std::move(a));
        };

        const auto& phi_int = detail::cyclotomic_polynomial(order_);
        Poly phi(phi_int.size());
        for (std::size_t i = 0; i < phi_int.size(); ++i) phi[i] = Rational(phi_int[i]);

        Poly r0 = phi, r1 = reduced();
        r1.resize(phi.size(), Rational(0));
        Poly s0(phi.size(), Rational(0)), s1(phi.size(), Rational(0));
        s1[0] = Rational(1); // s tracks the coefficient of `this`
        while (deg(r1) > 0) {
            auto [q, r2] = divmod(r0, r1);
            Poly s2 = s0;
            // s2 = s0 - q*s1
            for (std::size_t i = 0; i < s1.size(); ++i) {
                if (s1[i].is_zero()) continue;
                for (std::size_t j = 0; j + i < s2.size() && j < q.size(); ++j)
                    s2[i + j] -= q[j] * s1[i];
            }
            r0 = std::move(r1);
            r1 = std::move(r2);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        // r1 is a nonzero constant: gcd(this, phi) = 1 in Q[x]
        Rational c = r1[0];
        CycNumber out(order_);
        for (std::size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / c;
        return out;
    }

    /// Coefficients reduced modulo the M-th cyclotomic polynomial
    /// (degree < phi(M)); the canonical form used by eq / is_zero.
    std::vector<Rational> reduced() const {
        const auto& phi = detail::cyclotomic_polynomial(order_);
        std::vector<Rational> rem = c_;
        const std::size_t dphi = phi.size() - 1; // monic of degree phi(M)
        for (std::size_t i = rem.size(); i-- > dphi;) {
            if (rem[i].is_zero()) continue;
            Rational c = rem[i];
            for (std::size_t j = 0; j < phi.size(); ++j)
                rem[i - dphi + j] -= c * Rational(phi[j]);
        }
        rem.resize(dphi);
        return rem;
    }

    std::string str(const std::string& root_name = "z") const;

private:
    void check_order(const CycNumber& o) const {
        if (order_ != o.order_)
            throw OrderMismatch("cyclotomic order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
    }

    std::int64_t order_;
    std::vector<Rational> c_;
};

inline std::string CycNumber::str(const std::string& root_name) const {
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        std::string term;
        if (k == 0) {
            term = c_[k].str();
        } else {
            std::string z = root_name + (k == 1 ? "" : "^" + std::to_string(k));
            if (c_[k].is_one())
                term = z;
            else if (c_[k] == Rational(-1))
                term = "-" + z;
            else
                term = c_[k].str() + "*" + z;
        }
        if (out.empty()) {
            out = term;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

/// Gaussian binomial (m choose i)_q evaluated at a root of unity, computed by
/// the q-Pascal recurrence C(m,i) = C(m-1,i) + q^(m-i) C(m-1,i-1). Dividing
/// q-factorials is not an option here: they vanish at roots of unity.
inline CycNumber qbinom(std::int64_t m, std::int64_t i, const RootExp& q) {
    if (i < 0 || i > m) throw IndexOutOfRange("qbinom index out of range: (" + std::to_string(m) + ", " + std::to_string(i) + ")");
    using Key = std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>;
    static std::map<Key, CycNumber> memo;
    static std::mutex mtx;

    std::function<CycNumber(std::int64_t, std::int64_t)> rec = [&](std::int64_t mm, std::int64_t ii) -> CycNumber {
        if (ii == 0 || ii == mm) return CycNumber::one(q.order);
        Key key{mm, ii, q.order, q.exp};
        {
            std::lock_guard<std::mutex> lock(mtx);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
        }
        CycNumber v = rec(mm - 1, ii) + rec(mm - 1, ii - 1).mul_root(q.pow(mm - ii));
        std::lock_guard<std::mutex> lock(mtx);
        return memo.emplace(key, std::move(v)).first->second;
    };
    return rec(m, i);
}

} // namespace quasiq
