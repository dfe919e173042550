#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spp/invariants.hpp"

#include <random>

using namespace spp;

namespace {

finite_poset from_relations(int n, const std::vector<std::pair<int, int>>& strict) {
    std::vector<std::vector<bool>> le(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) le[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
    for (auto [a, b] : strict) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (le[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    le[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    le[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    return make_poset(n, [&](int a, int b) {
        return le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    });
}

finite_poset boolean_lattice(int n) {
    return make_poset(1 << n, [](int a, int b) { return (a & b) == a; });
}

std::vector<int> identity_map(int n) {
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = i;
    return g;
}

} // namespace

TEST_CASE("moebius numbers of reference lattices") {
    CHECK(mobius_number(from_relations(3, {{0, 1}, {1, 2}})) == 0);
    CHECK(mobius_number(boolean_lattice(1)) == -1);
    CHECK(mobius_number(boolean_lattice(2)) == 1);
    CHECK(mobius_number(boolean_lattice(3)) == -1);
    CHECK(mobius_number(boolean_lattice(4)) == 1);
    CHECK(mobius(boolean_lattice(3), 1, 7) == 1); // interval isomorphic to B_2
}

TEST_CASE("moebius values on the small mixed partition poset") {
    // mu(x, top) in the poset on one pointable and two free labels.
    const auto sp = build_poset({1, 2}, poset_variant::unbounded);
    const auto mu = mobius_to_top(sp.poset);
    const int pointed_ob = sp.index_of(one_block(sp.gs, 1));
    const int unpointed_ob = sp.index_of(one_block(sp.gs, 0));
    CHECK(mu[static_cast<std::size_t>(sp.poset.top)] == 1);
    CHECK(mu[static_cast<std::size_t>(pointed_ob)] == 2);
    CHECK(mu[static_cast<std::size_t>(unpointed_ob)] == 4);
    for (int i = 0; i < sp.poset.size(); ++i) {
        if (i == sp.poset.top || i == pointed_ob || i == unpointed_ob) continue;
        CHECK(mu[static_cast<std::size_t>(i)] == -1); // the five two-part elements
    }

    CHECK(mobius_number(build_poset({1, 2}, poset_variant::bounded).poset) == -2);
    CHECK(mobius_number(build_poset({2, 1}, poset_variant::bounded).poset) == -4);
    CHECK(mobius_number(build_poset({2, 2}, poset_variant::bounded).poset) == 18);
}

TEST_CASE("extrema classification and proper parts") {
    const auto bounded = build_poset({1, 2}, poset_variant::bounded);
    const auto unbounded = build_poset({1, 2}, poset_variant::unbounded);
    CHECK(classify_extrema(bounded.poset) == extremum_case::both);
    CHECK(classify_extrema(unbounded.poset) == extremum_case::one);
    const auto prop = proper_part(bounded.poset);
    CHECK(prop.n == 7);
    CHECK(classify_extrema(prop) == extremum_case::none);
    // Same proper part from both variants.
    CHECK(isomorphic(prop, proper_part(unbounded.poset)));
}

TEST_CASE("strict chain counts and the zeta polynomial of the cube") {
    const auto b3 = boolean_lattice(3);
    const auto s = strict_chain_counts(proper_part(b3));
    REQUIRE(s.size() == 3);
    CHECK(s[0] == 1);
    CHECK(s[1] == 6);
    CHECK(s[2] == 6);

    const auto z = zeta_polynomial(b3);
    CHECK(z.evaluate(1) == 8);   // elements
    CHECK(z.evaluate(2) == 27);  // intervals, counted as pairs a <= b
    CHECK(z.evaluate(-2) == -1); // moebius number
    CHECK(verify_chain_relations(b3, 6).ok());
}

TEST_CASE("zeta polynomial case relations against brute-force counts") {
    // Both extremes, one extremum, and no extremum on partition posets.
    for (auto var : {poset_variant::bounded, poset_variant::unbounded,
                     poset_variant::pointed_interval, poset_variant::unpointed_interval}) {
        for (int p = 0; p <= 3; ++p)
            for (int l = 0; p + l >= 1 && p + l <= 4; ++l) {
                if (var == poset_variant::pointed_interval && p == 0) continue;
                if (var == poset_variant::unpointed_interval && l == 0) continue;
                const auto sp = build_poset({p, l}, var);
                CAPTURE(variant_name(var));
                CAPTURE(p);
                CAPTURE(l);
                CHECK(verify_chain_relations(sp.poset, proper_complex_dim(sp.poset) + 3).ok());
                // No-extremum case on the proper part itself.
                const auto prop = proper_part(sp.poset);
                if (prop.n > 1)
                    CHECK(verify_chain_relations(prop, proper_complex_dim(prop) + 3).ok());
            }
    }

    // An antichain: Z is the constant polynomial n.
    const auto anti = make_poset(4, [](int a, int b) { return a == b; });
    CHECK(classify_extrema(anti) == extremum_case::none);
    CHECK(zeta_polynomial(anti) == polynomial(rational(4)));
    CHECK(mu_chi(anti) == 3);

    // A one-element poset: Z is constant 1.
    const auto point = make_poset(1, [](int, int) { return true; });
    CHECK(zeta_polynomial(point) == polynomial(rational(1)));
}

TEST_CASE("mu_chi agrees across the three extremum cases on one complex") {
    // With at least one pointable label there are several minimal one-blocks,
    // so the unbounded poset has no bottom; the bounded poset, the unbounded
    // poset and the shared proper part then carry the same order complex and
    // the three case evaluations must agree.
    for (auto [p, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 0}}) {
        const auto bounded = build_poset({p, l}, poset_variant::bounded);
        const auto unbounded = build_poset({p, l}, poset_variant::unbounded);
        const auto prop = proper_part(bounded.poset);
        CAPTURE(p);
        CAPTURE(l);
        const integer reference = mu_chi(bounded.poset);
        CHECK(mu_chi(unbounded.poset) == reference);
        if (prop.n > 1) CHECK(mu_chi(prop) == reference);
        CHECK(reference == mobius_number(bounded.poset));
    }

    // Without pointable labels the one-block is unique, so the unbounded
    // poset is itself bounded and carries the classical partition lattice.
    const auto classic = build_poset({0, 3}, poset_variant::unbounded);
    CHECK(classify_extrema(classic.poset) == extremum_case::both);
    CHECK(mu_chi(classic.poset) == 2);
    // Adjoining a second bottom cones off the lattice: everything cancels.
    CHECK(mu_chi(build_poset({0, 3}, poset_variant::bounded).poset) == 0);
}

TEST_CASE("chain relations hold on random posets") {
    std::mt19937 rng(20240517);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 5);
        std::vector<std::pair<int, int>> rel;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 3 == 0) rel.emplace_back(a, b);
        const auto p = from_relations(n, rel);
        CAPTURE(trial);
        CHECK(verify_chain_relations(p, proper_complex_dim(p) + 3).ok());
    }
}

TEST_CASE("homology of reference posets") {
    // The cube's proper part is a hexagon: one circle.
    const auto b3 = homology_dims(boolean_lattice(3));
    CHECK(b3 == std::map<int, integer>{{1, 1}});

    // A two-element chain has an empty proper part.
    CHECK(homology_dims(from_relations(2, {{0, 1}})) == std::map<int, integer>{{-1, 1}});

    // Boolean lattices: homology of the (n-2)-sphere.
    CHECK(homology_dims(boolean_lattice(4)) == std::map<int, integer>{{2, 1}});
}

TEST_CASE("homology of the partition posets matches the frozen dimensions") {
    using bm = std::map<int, integer>;
    CHECK(homology_dims(build_poset({1, 2}, poset_variant::bounded).poset) == bm{{1, 2}});
    CHECK(homology_dims(build_poset({1, 2}, poset_variant::unbounded).poset) == bm{{1, 2}});
    CHECK(homology_dims(build_poset({2, 1}, poset_variant::bounded).poset) == bm{{1, 4}});
    CHECK(homology_dims(build_poset({2, 2}, poset_variant::bounded).poset) == bm{{2, 18}});
    CHECK(homology_dims(build_poset({2, 2}, poset_variant::pointed_interval).poset) == bm{{1, 12}});
    CHECK(homology_dims(build_poset({2, 2}, poset_variant::unpointed_interval).poset) == bm{{1, 24}});
    CHECK(homology_dims(build_poset({1, 1}, poset_variant::pointed_interval).poset) == bm{{-1, 1}});

    // All-free ground set with an adjoined bottom: the proper part is a cone
    // over the one-block, hence contractible.
    const auto cone = homology_dims(build_poset({0, 3}, poset_variant::bounded).poset);
    CHECK(is_homology_concentrated_on_top(cone));
    for (const auto& [d, b] : cone) CHECK(b == 0);

    // Homology dimension, moebius number and mu_chi tie together.
    for (auto [p, l] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}, {3, 0}}) {
        const auto sp = build_poset({p, l}, poset_variant::bounded);
        const auto betti = homology_dims(sp.poset);
        CHECK(is_homology_concentrated_on_top(betti));
        const int d = proper_complex_dim(sp.poset);
        integer alternating = 0;
        for (const auto& [dim, b] : betti) alternating += (dim % 2 == 0 ? b : -b);
        CHECK(alternating == mu_chi(sp.poset));
        CHECK(betti.rbegin()->first == d);
    }
}

TEST_CASE("fixed multichain polynomials count invariant multichains") {
    const auto sp = build_poset({1, 2}, poset_variant::unbounded);
    // Swapping the two free labels.
    const auto g = induced_element_map(sp, {0, 1, 3, 2});
    const auto zg = fixed_multichain_polynomial(sp.poset, g);
    for (int k = 1; k <= 5; ++k)
        CHECK(zg.evaluate(k) == rational(fixed_multichain_count(sp.poset, g, k)));
    // Frozen: the fixed subposet has 4 elements and Z^g(k) = (k+1)^2.
    CHECK(zg.evaluate(1) == 4);
    CHECK(zg.evaluate(2) == 9);
    CHECK(zg.evaluate(-1) == 0);

    // With the identity the case-free polynomial matches the case relation.
    const auto id = identity_map(sp.poset.size());
    CHECK(fixed_multichain_polynomial(sp.poset, id) == zeta_polynomial(sp.poset));
    CHECK(mu_chi(sp.poset, id) == mu_chi(sp.poset));
}

TEST_CASE("equivariant mu_chi and top homology traces agree") {
    // For concentrated homology, mu_chi(g) = (-1)^topdim * trace(g | top homology).
    for (auto [p, l] : std::vector<std::pair<int, int>>{{1, 2}, {2, 1}, {2, 2}}) {
        for (auto var : {poset_variant::bounded, poset_variant::pointed_interval,
                         poset_variant::unpointed_interval}) {
            const auto sp = build_poset({p, l}, var);
            const int n = sp.gs.size();
            // A transposition of the last two labels of the same kind, when
            // possible; otherwise the identity.
            std::vector<int> image(static_cast<std::size_t>(n) + 1);
            for (int e = 0; e <= n; ++e) image[static_cast<std::size_t>(e)] = e;
            if (l >= 2) {
                std::swap(image[static_cast<std::size_t>(n)], image[static_cast<std::size_t>(n - 1)]);
            } else if (p >= 2 && var != poset_variant::pointed_interval) {
                std::swap(image[1], image[2]);
            } else if (p >= 3) {
                std::swap(image[2], image[3]);
            }
            CAPTURE(p);
            CAPTURE(l);
            CAPTURE(variant_name(var));
            const auto g = induced_element_map(sp, image);
            REQUIRE(is_automorphism(sp.poset, g));
            const int d = proper_complex_dim(sp.poset);
            const rational trace = top_homology_trace(sp.poset, g);
            const integer mc = mu_chi(sp.poset, g);
            CHECK(rational(mc) == (d % 2 == 0 ? trace : -trace));
        }
    }

    // Identity trace equals the top Betti number.
    const auto sp = build_poset({2, 2}, poset_variant::bounded);
    const auto id = identity_map(sp.poset.size());
    CHECK(top_homology_trace(sp.poset, id) == 18);
}
