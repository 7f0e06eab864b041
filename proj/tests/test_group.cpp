#include <catch_amalgamated.hpp>

#include "quasiq/cocycle.hpp"
#include "quasiq/group.hpp"

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

} // namespace

TEST_CASE("group arithmetic") {
    AbelianGroup z2c({2, 2, 2});
    CHECK(z2c.order() == 8);
    CHECK(z2c.exponent() == 2);
    CHECK(is_identity(mul(z2c, e(z2c, 0), e(z2c, 0))));

    AbelianGroup z4({4});
    GroupElem sq = make_elem(z4, {2});
    CHECK(elem_order(z4, sq) == 2);
    CHECK(elem_order(z4, make_elem(z4, {1})) == 4);
    CHECK(inverse(z4, make_elem(z4, {3})) == make_elem(z4, {1}));

    CHECK_THROWS_AS(mul(z4, sq, GroupElem{{0, 0}}), ModuliMismatch);
}

TEST_CASE("generation by closure") {
    AbelianGroup G({2, 2, 2});
    CHECK(!generates(G, {e(G, 0), e(G, 1)}));
    CHECK(generates(G, {e(G, 0), e(G, 1), e(G, 2)}));
    CHECK(!generates(G, {e(G, 0), e(G, 1), mul(G, e(G, 0), e(G, 1))}));

    AbelianGroup z6({2, 3});
    CHECK(generates(z6, {make_elem(z6, {1, 1})}));
}

TEST_CASE("group table indexing is lexicographic") {
    AbelianGroup G({2, 3});
    GroupTable gt(G);
    CHECK(gt.size() == 6);
    CHECK(gt.index(identity(G)) == 0);
    CHECK(gt.elem(1) == make_elem(G, {0, 1}));
    CHECK(gt.elem(3) == make_elem(G, {1, 0}));
    for (std::int64_t i = 0; i < gt.size(); ++i) {
        CHECK(gt.mul(i, gt.inv(i)) == 0);
        CHECK(gt.index(gt.elem(i)) == i);
    }
}

TEST_CASE("phi is normalized and matches hand evaluations") {
    AbelianGroup G({2, 2, 2});
    CocycleData c = cocycle_a(G, {1, 1, 1});
    auto one = identity(G);

    for (std::int64_t x = 0; x < 8; ++x)
        for (std::int64_t z = 0; z < 8; ++z) {
            GroupTable gt(G);
            CHECK(phi_eval(G, c, gt.elem(x), one, gt.elem(z)).is_one());
            CHECK(phi_eval(G, c, one, gt.elem(x), gt.elem(z)).is_one());
            CHECK(phi_eval(G, c, gt.elem(x), gt.elem(z), one).is_one());
        }

    // [(1+1)/2] = 1 so Phi(e1,e1,e1) = -1
    GroupElem e1 = e(G, 0);
    CHECK(phi_eval(G, c, e1, e1, e1) == RootExp(2, 1));

    // the a_{rst} factor: picks up zeta_2^{k_1 j_2 i_3}
    CocycleData c3 = CocycleData::trivial(G);
    c3.a3[0] = 1;
    CHECK(phi_eval(G, c3, e(G, 2), e(G, 1), e(G, 0)) == RootExp(2, 1));
    CHECK(phi_eval(G, c3, e(G, 0), e(G, 1), e(G, 2)).is_one());
}

TEST_CASE("phi_tilde reduces to a plain phi slice for reduced cocycles") {
    AbelianGroup G({2, 2, 2});
    CocycleData c = cocycle_a(G, {1, 1, 1});
    GroupTable gt(G);
    auto one = identity(G);

    for (std::int64_t x = 0; x < 8; ++x)
        for (std::int64_t y = 0; y < 8; ++y) {
            CHECK(phi_tilde_eval(G, c, one, gt.elem(x), gt.elem(y)).is_one());
            for (std::int64_t g = 0; g < 8; ++g)
                CHECK(phi_tilde_eval(G, c, gt.elem(g), gt.elem(x), gt.elem(y)) ==
                      phi_eval(G, c, gt.elem(g), gt.elem(x), gt.elem(y)));
        }

    GroupElem e1 = e(G, 0);
    CHECK(phi_tilde_eval(G, c, e1, e1, e1) == RootExp(2, 1));
}

TEST_CASE("every parameter sequence is a 3-cocycle; tildes are 2-cocycles") {
    for (auto moduli : std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {4, 2}, {3, 3}}) {
        AbelianGroup G(moduli);
        GroupTable gt(G);
        for (const auto& c : all_cocycles(G)) {
            auto r3 = verify_cocycle3(G, c);
            CHECK(r3.ok);
            for (std::int64_t g = 0; g < gt.size(); ++g) {
                auto r2 = verify_cocycle2_tilde(G, c, gt.elem(g));
                CHECK(r2.ok);
            }
        }
    }
}

TEST_CASE("a single flipped value breaks the cocycle identity") {
    AbelianGroup G({2, 2, 2});
    CocycleData c = cocycle_a(G, {1, 1, 1});
    GroupElem p = e(G, 0);
    auto mutated = [&](const GroupElem& x, const GroupElem& y, const GroupElem& z) {
        RootExp v = phi_eval(G, c, x, y, z);
        if (x == p && y == p && z == p) return v * RootExp(2, 1);
        return v;
    };
    auto res = verify_cocycle(G, mutated, nullptr, 3);
    CHECK(!res.ok);
    CHECK(res.witness.size() == 4);
}

TEST_CASE("reduced-form identities") {
    for (auto moduli : std::vector<std::vector<std::int64_t>>{{2, 2, 2}, {4, 4}}) {
        AbelianGroup G(moduli);
        GroupTable gt(G);
        const std::int64_t n = gt.size();
        for (const auto& c : all_cocycles(G, /*reduced_only=*/true)) {
            // Phi(e,f,g) = Phi(e,g,f)
            for (std::int64_t x = 0; x < n; ++x)
                for (std::int64_t y = 0; y < n; ++y)
                    for (std::int64_t z = y; z < n; ++z)
                        CHECK(phi_exp(G, c, gt.elem(x), gt.elem(y), gt.elem(z)) ==
                              phi_exp(G, c, gt.elem(x), gt.elem(z), gt.elem(y)));
            // Phi(ef,g,h) = Phi(e,g,h) Phi(f,g,h)
            CocycleTable tab(gt, c);
            for (std::int64_t x = 0; x < n; ++x)
                for (std::int64_t y = 0; y < n; ++y)
                    for (std::int64_t z = 0; z < n; ++z)
                        for (std::int64_t w = 0; w < n; ++w)
                            CHECK(tab.phi(gt.mul(x, y), z, w) ==
                                  (tab.phi(x, z, w) + tab.phi(y, z, w)) % tab.L());
        }
    }
}

TEST_CASE("exhaustive mode refuses oversized groups") {
    AbelianGroup G({64});
    CocycleData c = CocycleData::trivial(G);
    VerifyOptions opts;
    opts.mode = VerifyMode::Exhaustive;
    CHECK_THROWS_AS(verify_cocycle3(G, c, opts), GroupTooLargeForExhaustive);

    // sampled mode with a seed still runs
    opts.mode = VerifyMode::Sampled;
    opts.samples = 2000;
    opts.seed = 7;
    CHECK(verify_cocycle3(G, c, opts).ok);
}
