#include <catch_amalgamated.hpp>

#include <map>

#include "quasiq/nichols.hpp"

using namespace quasiq;

namespace {

GroupElem e(const AbelianGroup& G, std::size_t l) {
    auto x = identity(G);
    x.exps[l] = 1;
    return x;
}

CocycleData cocycle_a(const AbelianGroup& G, std::vector<std::int64_t> a) {
    CocycleData c = CocycleData::trivial(G);
    c.a = std::move(a);
    return c;
}

GroupElem gpow(const AbelianGroup& G, const GroupElem& g, std::int64_t k) {
    GroupElem r = identity(G);
    for (std::int64_t j = 0; j < k; ++j) r = mul(G, r, g);
    return r;
}

// Z2^3 with a = (1,1,1): the rank-3 series with chi_i(e_i) = i and
// off-diagonal values 1. The standard small fixture, dim 64.
std::shared_ptr<BraidedSpace> z2cubed_space() {
    AbelianGroup G({2, 2, 2});
    CocycleData c = cocycle_a(G, {1, 1, 1});
    std::vector<QuasiCharacter> chars;
    for (std::size_t i = 0; i < 3; ++i)
        chars.push_back(quasicharacter_from_branches(G, c, e(G, i), {0, 0, 0}));
    return std::make_shared<BraidedSpace>(AdmissibleSeries(G, c, chars));
}

// Sweedler-type fixture: Z2, trivial cocycle, one generator with chi(e) = -1.
std::shared_ptr<BraidedSpace> sweedler_space() {
    AbelianGroup G({2});
    CocycleData c = CocycleData::trivial(G);
    return std::make_shared<BraidedSpace>(AdmissibleSeries(G, c, {quasicharacter_from_branches(G, c, e(G, 0), {1})}));
}

using Triple = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::map<Triple, CycNumber> expand_leg1(const BraidedSpace& S, const TensorSquareElement& t) {
    std::map<Triple, CycNumber> out;
    for (const auto& [key, c] : t.terms)
        for (const auto& [k2, c2] : S.coproduct_basis(key.first).terms) {
            Triple tr{k2.first, k2.second, key.second};
            auto it = out.find(tr);
            if (it == out.end())
                out.emplace(tr, c * c2);
            else
                it->second += c * c2;
        }
    return out;
}

std::map<Triple, CycNumber> expand_leg2(const BraidedSpace& S, const TensorSquareElement& t) {
    std::map<Triple, CycNumber> out;
    for (const auto& [key, c] : t.terms)
        for (const auto& [k2, c2] : S.coproduct_basis(key.second).terms) {
            Triple tr{key.first, k2.first, k2.second};
            auto it = out.find(tr);
            if (it == out.end())
                out.emplace(tr, c * c2);
            else
                it->second += c * c2;
        }
    return out;
}

} // namespace

TEST_CASE("multiply: sorted concatenation, commutation scalar, nilpotency") {
    auto S = z2cubed_space();
    auto X1 = S->generator(0), X2 = S->generator(1);

    // X1 * X2 -> monomial (1,1,0), no scalar
    auto p = S->multiply(X1, X2);
    REQUIRE(p.terms.size() == 1);
    CHECK(p.terms.begin()->first == S->monomial({1, 1, 0}).terms.begin()->first);
    CHECK(p.terms.begin()->second == CycNumber::one(S->scalar_order()));

    // X2 * X1 -> chi_1(g_2) X1 X2
    auto q = S->multiply(X2, X1);
    REQUIRE(q.terms.size() == 1);
    RootExp chi12(S->scalar_order(), S->chi_at(0, S->generator_gdeg(1)));
    CHECK(q.terms.begin()->second == CycNumber::from_root(chi12));

    // X_i^{N_i - 1} * X_i = 0
    for (std::int64_t i = 0; i < 3; ++i) {
        std::vector<std::int64_t> exps(3, 0);
        exps[static_cast<std::size_t>(i)] = S->nilpotency()[static_cast<std::size_t>(i)] - 1;
        CHECK(S->is_zero(S->multiply(S->monomial(exps), S->generator(i))));
    }

    // power at the bound parses to zero
    CHECK(S->is_zero(S->monomial({4, 0, 0})));
}

TEST_CASE("space mismatch is detected") {
    auto S1 = z2cubed_space();
    auto S2 = z2cubed_space();
    CHECK_THROWS_AS(S1->multiply(S1->one(), S2->one()), SpaceMismatch);
}

TEST_CASE("action: identity, generators, iterated powers") {
    auto S = z2cubed_space();
    const auto& G = S->group();
    const std::int64_t M = S->scalar_order();

    for (std::int64_t b = 0; b < S->dim(); ++b) {
        CHECK(S->act_exp(0, b) == 0); // identity acts trivially
    }
    // g_i |> X_j = chi_j(g_i) X_j
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) {
            auto r = S->act(S->series().chars[static_cast<std::size_t>(i)].degree, S->generator(j));
            REQUIRE(r.terms.size() == 1);
            CHECK(r.terms.begin()->second ==
                  CycNumber::from_root(RootExp(M, S->chi_at(j, S->generator_gdeg(i)))));
        }

    // g^k |> X = prod_{j=1}^{k-1} Phi(h, g^j, g)^{-1} q^k X for X of degree h
    // with g |> X = q X; the closed form must match a single application of
    // act at the group element g^k
    GroupTable gt(G);
    const auto& c = S->series().cocycle;
    for (std::int64_t gi = 0; gi < gt.size(); ++gi) {
        GroupElem g = gt.elem(gi);
        for (std::int64_t j = 0; j < 3; ++j) {
            auto X = S->generator(j);
            GroupElem h = S->series().chars[static_cast<std::size_t>(j)].degree;
            std::int64_t q = S->chi_at(j, gi);
            for (std::int64_t k = 1; k <= 4; ++k) {
                std::int64_t closed = q * k;
                for (std::int64_t jj = 1; jj <= k - 1; ++jj)
                    closed -= (M / G.exponent()) * phi_exp(G, c, h, gpow(G, g, jj), g);
                auto once = S->act(gpow(G, g, k), X);
                CHECK(S->equal(once, S->scale_root(X, RootExp(M, closed))));
            }
        }
    }
}

TEST_CASE("action is a projective representation with cocycle Phi~") {
    for (auto Sp : {z2cubed_space(), sweedler_space()}) {
        const auto& S = *Sp;
        GroupTable gt(S.group());
        const std::int64_t M = S.scalar_order();
        for (std::int64_t ei = 0; ei < gt.size(); ++ei)
            for (std::int64_t fi = 0; fi < gt.size(); ++fi)
                for (std::int64_t b = 0; b < S.dim(); ++b) {
                    std::int64_t lhs = (S.act_exp(ei, b) + S.act_exp(fi, b)) % M;
                    std::int64_t rhs =
                        (S.tilde_at(ei, fi, S.basis_gdeg(b)) * 0 + // placeholder, see below
                         S.tilde_at(S.basis_gdeg(b), ei, fi) * 0) %
                        M;
                    (void)rhs;
                    // e |> (f |> u) = Phi~_{deg u}(e,f) (ef) |> u
                    std::int64_t expect =
                        (S.tilde_at(S.basis_gdeg(b), ei, fi) + S.act_exp(gt.mul(ei, fi), b)) % M;
                    CHECK(lhs == expect);
                }
    }
}

TEST_CASE("Cor-style power consistency: q^{ln} = prod Phi(h, g^j, g)") {
    auto S = z2cubed_space();
    const auto& G = S->group();
    const auto& c = S->series().cocycle;
    const std::int64_t M = S->scalar_order();
    GroupTable gt(G);
    for (std::int64_t i = 0; i < 3; ++i) {
        GroupElem g = S->series().chars[static_cast<std::size_t>(i)].degree;
        GroupElem h = g; // the stored datum: X_i has degree g_i and q = chi_i(g_i)
        std::int64_t q = S->chi_at(i, gt.index(g));
        std::int64_t n = elem_order(G, g);
        for (std::int64_t l = 1; l <= 3; ++l) {
            std::int64_t lhs = (q * l * n) % M;
            std::int64_t rhs = 0;
            for (std::int64_t j = 1; j <= l * n - 1; ++j)
                rhs += (M / G.exponent()) * phi_exp(G, c, h, gpow(G, g, j), g);
            CHECK(lhs == ((rhs % M) + M) % M);
        }
    }
}

TEST_CASE("quasi-associativity on all basis triples") {
    for (auto Sp : {z2cubed_space(), sweedler_space()}) {
        const auto& S = *Sp;
        const std::int64_t M = S.scalar_order();
        for (std::int64_t u = 0; u < S.dim(); ++u)
            for (std::int64_t v = 0; v < S.dim(); ++v)
                for (std::int64_t w = 0; w < S.dim(); ++w) {
                    auto uv = S.mul_basis(u, v);
                    auto vw = S.mul_basis(v, w);
                    bool lzero = uv.zero || (uv.zero ? false : S.mul_basis(uv.mono, w).zero);
                    bool rzero = vw.zero || (vw.zero ? false : S.mul_basis(u, vw.mono).zero);
                    if (uv.zero || vw.zero) {
                        // one side collapses along the way; both products must vanish
                        if (!uv.zero) CHECK(S.mul_basis(uv.mono, w).zero);
                        if (!vw.zero) CHECK(S.mul_basis(u, vw.mono).zero);
                        continue;
                    }
                    auto l2 = S.mul_basis(uv.mono, w);
                    auto r2 = S.mul_basis(u, vw.mono);
                    CHECK(l2.zero == r2.zero);
                    if (l2.zero) continue;
                    (void)lzero;
                    (void)rzero;
                    CHECK(l2.mono == r2.mono);
                    // (uv)w = Phi(du,dv,dw)^{-1} u(vw)
                    std::int64_t phi = S.phi_at(S.basis_gdeg(u), S.basis_gdeg(v), S.basis_gdeg(w));
                    std::int64_t lhs = (uv.root_exp + l2.root_exp) % M;
                    std::int64_t rhs = (((vw.root_exp + r2.root_exp - phi) % M) + M) % M;
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("tensor square multiplication, basic examples") {
    auto Sp = z2cubed_space();
    const auto& S = *Sp;
    const std::int64_t M = S.scalar_order();
    auto tX = [&](std::int64_t i) { // X_i @ 1
        TensorSquareElement t = S.tensor_zero();
        t.terms.emplace(std::make_pair(S.generator(i).terms.begin()->first, std::int64_t{0}),
                        CycNumber::one(M));
        return t;
    };
    auto Xt = [&](std::int64_t i) { // 1 @ X_i
        TensorSquareElement t = S.tensor_zero();
        t.terms.emplace(std::make_pair(std::int64_t{0}, S.generator(i).terms.begin()->first),
                        CycNumber::one(M));
        return t;
    };

    // (1 @ 1)(C @ D) = C @ D
    for (std::int64_t b = 0; b < S.dim(); ++b) {
        TensorSquareElement t = S.tensor_zero();
        t.terms.emplace(std::make_pair(b, (b * 7) % S.dim()), CycNumber::one(M));
        CHECK(S.equal(S.tensor_multiply(S.tensor_unit(), t), t));
        CHECK(S.equal(S.tensor_multiply(t, S.tensor_unit()), t));
    }

    // (X_i @ 1)(1 @ X_j) = X_i @ X_j
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) {
            auto prod = S.tensor_multiply(tX(i), Xt(j));
            REQUIRE(prod.terms.size() == 1);
            CHECK(prod.terms.begin()->first ==
                  std::make_pair(S.generator(i).terms.begin()->first, S.generator(j).terms.begin()->first));
            CHECK(prod.terms.begin()->second == CycNumber::one(M));
        }

    // (1 @ X_i)(X_j @ 1) = chi_j(g_i) X_j @ X_i (the Phi slots normalize here)
    for (std::int64_t i = 0; i < 3; ++i)
        for (std::int64_t j = 0; j < 3; ++j) {
            auto prod = S.tensor_multiply(Xt(i), tX(j));
            REQUIRE(prod.terms.size() == 1);
            CHECK(prod.terms.begin()->second ==
                  CycNumber::from_root(RootExp(M, S.chi_at(j, S.generator_gdeg(i)))));
        }
}

TEST_CASE("coproduct is an algebra map") {
    for (auto Sp : {z2cubed_space(), sweedler_space()}) {
        const auto& S = *Sp;
        for (std::int64_t u = 0; u < S.dim(); ++u)
            for (std::int64_t v = 0; v < S.dim(); ++v) {
                auto lhs = S.coproduct(S.multiply(S.basis_element(u), S.basis_element(v)));
                auto rhs = S.tensor_multiply(S.coproduct_basis(u), S.coproduct_basis(v));
                CHECK(S.equal(lhs, rhs));
            }
    }
}

TEST_CASE("coassociativity up to the associator, per homogeneous component") {
    for (auto Sp : {z2cubed_space(), sweedler_space()}) {
        const auto& S = *Sp;
        const std::int64_t M = S.scalar_order();
        for (std::int64_t b = 0; b < S.dim(); ++b) {
            auto lhs = expand_leg1(S, S.coproduct_basis(b));
            auto rhs = expand_leg2(S, S.coproduct_basis(b));
            // (id @ Delta)Delta = a ((Delta @ id)Delta), a carrying Phi^{-1}
            for (auto& [t, c] : lhs) {
                std::int64_t phi = S.phi_at(S.basis_gdeg(std::get<0>(t)), S.basis_gdeg(std::get<1>(t)),
                                            S.basis_gdeg(std::get<2>(t)));
                c.mul_root(RootExp(M, -phi));
            }
            for (const auto& [t, c] : lhs) {
                auto it = rhs.find(t);
                if (it == rhs.end()) {
                    CHECK(c.is_zero());
                } else {
                    CHECK(c == it->second);
                }
            }
            for (const auto& [t, c] : rhs)
                if (lhs.find(t) == lhs.end()) CHECK(c.is_zero());
        }
    }
}

TEST_CASE("counit axioms") {
    auto Sp = z2cubed_space();
    const auto& S = *Sp;
    const std::int64_t M = S.scalar_order();
    CHECK(S.counit(S.one()) == CycNumber::one(M));
    CHECK(S.counit(S.generator(0)).is_zero());
    for (std::int64_t b = 0; b < S.dim(); ++b) {
        AlgebraElement left = S.zero(), right = S.zero();
        for (const auto& [key, c] : S.coproduct_basis(b).terms) {
            if (S.basis_ndeg(key.first) == 0) {
                auto it = left.terms.find(key.second);
                if (it == left.terms.end())
                    left.terms.emplace(key.second, c);
                else
                    it->second += c;
            }
            if (S.basis_ndeg(key.second) == 0) {
                auto it = right.terms.find(key.first);
                if (it == right.terms.end())
                    right.terms.emplace(key.first, c);
                else
                    it->second += c;
            }
        }
        CHECK(S.equal(left, S.basis_element(b)));
        CHECK(S.equal(right, S.basis_element(b)));
    }
}

TEST_CASE("antipode satisfies both axiom sides on every basis monomial") {
    for (auto Sp : {z2cubed_space(), sweedler_space()}) {
        const auto& S = *Sp;
        const std::int64_t M = S.scalar_order();
        CHECK(S.equal(S.antipode(S.one()), S.one()));
        for (std::int64_t i = 0; i < S.rank(); ++i)
            CHECK(S.equal(S.antipode(S.generator(i)), S.scale_root(S.generator(i), RootExp(M, M / 2))));
        for (std::int64_t b = 0; b < S.dim(); ++b) {
            AlgebraElement left = S.zero(), right = S.zero();
            for (const auto& [key, c] : S.coproduct_basis(b).terms) {
                auto t1 = S.multiply(S.scale(S.antipode_basis(key.first), c), S.basis_element(key.second));
                left = S.add(left, t1);
                auto t2 = S.multiply(S.scale(S.basis_element(key.first), c), S.antipode_basis(key.second));
                right = S.add(right, t2);
            }
            AlgebraElement expect = S.zero();
            if (S.basis_ndeg(b) == 0) expect = S.one();
            CHECK(S.equal(left, expect));
            CHECK(S.equal(right, expect));
        }
    }
}

TEST_CASE("single-generator coproduct closed form and primitivity threshold") {
    struct Datum {
        AbelianGroup G;
        std::vector<std::int64_t> a;
        GroupElem g;
        std::vector<std::int64_t> branches;
    };
    std::vector<Datum> data;
    {
        AbelianGroup z4({4});
        data.push_back({z4, {1}, make_elem(z4, {1}), {0}});
        data.push_back({z4, {1}, make_elem(z4, {2}), {0}});
        data.push_back({z4, {2}, make_elem(z4, {1}), {1}});
        AbelianGroup z2c({2, 2, 2});
        data.push_back({z2c, {1, 1, 1}, make_elem(z2c, {1, 0, 0}), {0, 0, 0}});
        data.push_back({z2c, {1, 1, 1}, make_elem(z2c, {1, 1, 1}), {0, 1, 0}});
    }
    for (const auto& d : data) {
        CocycleData c = cocycle_a(d.G, d.a);
        QuasiCharacter chi = quasicharacter_from_branches(d.G, c, d.g, d.branches);
        RootExp q = char_value(chi, d.g);
        REQUIRE(!q.is_one());
        std::int64_t N = root_order(q);
        const std::int64_t M = d.G.char_order();

        BraidedSpaceOptions opts;
        opts.require_admissible = false;        // tensor-algebra level computation
        opts.bounds_override = {{N + 1}};       // keep X^N alive, no truncation below it
        BraidedSpace S(AdmissibleSeries(d.G, c, {chi}), opts);

        for (std::int64_t m = 0; m <= N; ++m) {
            // folded coproduct of X^{m}
            auto delta = S.coproduct_basis(m);
            // closed form: sum_i (m i)_q prod_{j=1}^{m-1-i} Phi(g^i,g^j,g)^{-1} X^i @ X^{m-i}
            TensorSquareElement closed = S.tensor_zero();
            for (std::int64_t i = 0; i <= m; ++i) {
                CycNumber coef = qbinom(m, i, q);
                std::int64_t twist = 0;
                for (std::int64_t j = 1; j <= m - 1 - i; ++j)
                    twist -= (M / d.G.exponent()) * phi_exp(d.G, c, gpow(d.G, d.g, i), gpow(d.G, d.g, j), d.g);
                coef.mul_root(RootExp(M, twist));
                if (!coef.is_zero()) closed.terms.emplace(std::make_pair(i, m - i), coef);
            }
            CHECK(S.equal(delta, closed));

            // primitive exactly at m = |q| (and trivially at m = 1)
            if (m >= 2) {
                bool primitive = true;
                for (const auto& [key, coef] : delta.terms)
                    if (key.first != 0 && key.second != 0 && !coef.is_zero()) primitive = false;
                CHECK(primitive == (m == N));
            }
        }
    }
}

TEST_CASE("construction rejects inadmissible series unless explicitly relaxed") {
    AbelianGroup G({2, 2, 2});
    CocycleData c = cocycle_a(G, {1, 1, 1});
    // single generator does not generate Z2^3
    AdmissibleSeries s(G, c, {quasicharacter_from_branches(G, c, e(G, 0), {0, 0, 0})});
    CHECK_THROWS_AS(BraidedSpace(s), ConfigError);
    BraidedSpaceOptions opts;
    opts.require_admissible = false;
    CHECK(BraidedSpace(s, opts).dim() == 4);
}
