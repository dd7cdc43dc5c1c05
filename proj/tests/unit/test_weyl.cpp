#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "weylchar/weyl.hpp"

using namespace weylchar;

namespace {

// Oracle for the Bruhat order as defined by the subword relation over SOME
// reduced decomposition: try every reduced word of w and every subsequence of
// length l(u).
bool bruhat_subword_oracle(const WeylElement& u, const WeylElement& w) {
    const RootDatum& d = u.datum();
    const int lu = u.length();
    if (lu > w.length()) return false;
    for (const auto& word : all_reduced_words(w)) {
        const int n = static_cast<int>(word.size());
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            if (__builtin_popcountll(mask) != lu) continue;
            std::vector<int> sub;
            for (int k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k)) sub.push_back(word[k]);
            if (WeylElement::from_word(d, sub) == u) return true;
        }
    }
    return false;
}

std::vector<int> levi_from_mask(const RootDatum& d, std::size_t mask) {
    std::vector<int> levi;
    for (int i = 0; i < d.num_simple(); ++i)
        if (mask & (std::size_t{1} << i)) levi.push_back(i);
    return levi;
}

} // namespace

TEST_CASE("simple reflections on A2") {
    RootDatum d = build_gl(3);
    WeylElement s1 = WeylElement::simple_reflection(d, 0);
    CHECK(s1.act_char(d.simple_root(0)) == neg(d.simple_root(0)));
    CHECK(s1.act_char(d.simple_root(1)) == add(d.simple_root(0), d.simple_root(1)));
    CHECK(s1.times(s1).is_identity());
}

TEST_CASE("lengths and words") {
    RootDatum d = build_gl(3);
    WeylElement w0 = WeylElement::from_word(d, {0, 1, 0});
    CHECK(w0.length() == 3);
    CHECK(w0 == longest_element(d));
    CHECK(WeylElement::identity(d).length() == 0);

    RootDatum g2 = build_g2();
    WeylElement g2w0 = longest_element(g2);
    CHECK(g2w0.length() == 6);
    CHECK(g2w0.word() == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK(g2w0 == WeylElement::from_word(g2, {0, 1, 0, 1, 0, 1}));
    CHECK(g2w0 == WeylElement::from_word(g2, {1, 0, 1, 0, 1, 0}));
}

TEST_CASE("enumeration sizes and order") {
    CHECK(enumerate_weyl(build_gl(2)).size() == 2);
    CHECK(enumerate_weyl(build_gl(3)).size() == 6);
    CHECK(enumerate_weyl(build_gl(4)).size() == 24);
    CHECK(enumerate_weyl(build_gsp4()).size() == 8);
    CHECK(enumerate_weyl(build_g2()).size() == 12);
    CHECK(enumerate_weyl(build_datum_from_name("sc-b3")).size() == 48);

    auto weyl = enumerate_weyl(build_gl(3));
    for (std::size_t i = 0; i + 1 < weyl.size(); ++i)
        CHECK(WeylElement::canonical_less(weyl[i], weyl[i + 1]));

    CHECK_THROWS_AS(enumerate_weyl(build_gl(4), 10), BoundError);
}

TEST_CASE("canonical word is the lexicographically least reduced word") {
    for (const char* name : {"gl3", "gsp4", "g2"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        for (const auto& w : enumerate_weyl(d)) {
            auto words = all_reduced_words(w);
            CHECK(w.word() == *std::min_element(words.begin(), words.end()));
        }
    }
}

TEST_CASE("inversion sets") {
    RootDatum d = build_gl(3);
    CHECK(inversion_roots(WeylElement::identity(d)).empty());

    WeylElement s1s2 = WeylElement::from_word(d, {0, 1});
    std::vector<int> inv = inversion_roots(s1s2);
    REQUIRE(inv.size() == 2);
    CHECK(d.positive_root(inv[0]).simple_coords == Vec{0, 1});
    CHECK(d.positive_root(inv[1]).simple_coords == Vec{1, 1});

    WeylElement w0 = longest_element(d);
    CHECK(static_cast<int>(inversion_roots(w0).size()) == d.num_positive());
}

TEST_CASE("length equals inversion count (rank <= 3 data)") {
    for (const char* name : {"gl3", "gl4", "gsp4", "g2", "sc-b3"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        for (const auto& w : enumerate_weyl(d)) {
            CHECK(static_cast<int>(inversion_roots(w).size()) == w.length());
            std::vector<int> inv = inversion_roots(w), keep = n_w_roots(w);
            CHECK(static_cast<int>(inv.size() + keep.size()) == d.num_positive());
        }
    }
}

TEST_CASE("Bruhat order: spec examples") {
    RootDatum d = build_gl(3);
    WeylElement e = WeylElement::identity(d);
    WeylElement s1 = WeylElement::simple_reflection(d, 0);
    WeylElement s2 = WeylElement::simple_reflection(d, 1);
    WeylElement w0 = longest_element(d);
    for (const auto& w : enumerate_weyl(d)) CHECK(bruhat_leq(e, w));
    CHECK_FALSE(bruhat_leq(s1, s2));
    CHECK(bruhat_leq(s1.times(s2), w0));
}

TEST_CASE("Bruhat order agrees with the all-decompositions subword oracle on rank 2") {
    for (const char* name : {"gl3", "gsp4", "g2", "sc-d2"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        auto weyl = enumerate_weyl(d);
        for (const auto& u : weyl)
            for (const auto& w : weyl)
                CHECK(bruhat_leq(u, w) == bruhat_subword_oracle(u, w));
    }
}

TEST_CASE("Kostant representatives: examples") {
    RootDatum d = build_gl(3);
    auto weyl = enumerate_weyl(d);

    ParabolicDatum p1 = make_parabolic(d, {0});
    auto reps = kostant_representatives(p1);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].is_identity());
    CHECK(reps[1] == WeylElement::simple_reflection(d, 1));
    CHECK(reps[2] == WeylElement::from_word(d, {0, 1}));

    CHECK(kostant_representatives(make_parabolic(d, {})).size() == weyl.size());
    auto full = kostant_representatives(make_parabolic(d, {0, 1}));
    REQUIRE(full.size() == 1);
    CHECK(full[0].is_identity());
}

TEST_CASE("Kostant decomposition: examples") {
    RootDatum d = build_gl(3);
    ParabolicDatum p = make_parabolic(d, {0});

    WeylElement s2 = WeylElement::simple_reflection(d, 1);
    auto [wt1, wl1] = kostant_decompose(s2, p);
    CHECK(wt1 == s2);
    CHECK(wl1.is_identity());

    auto [wt2, wl2] = kostant_decompose(longest_element(d), p);
    CHECK(wt2 == WeylElement::from_word(d, {0, 1}));
    CHECK(wl2 == WeylElement::simple_reflection(d, 0));
    CHECK(wt2.length() + wl2.length() == 3);

    WeylElement s1 = WeylElement::simple_reflection(d, 0);
    auto [wt3, wl3] = kostant_decompose(s1, p);
    CHECK(wt3.is_identity());
    CHECK(wl3 == s1);
}

TEST_CASE("Kostant machinery: bijection, characterization, partition, monotone projection") {
    for (const char* name : {"gl3", "gsp4", "g2"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        auto weyl = enumerate_weyl(d);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d.num_simple()); ++mask) {
            ParabolicDatum p = make_parabolic(d, levi_from_mask(d, mask));
            auto reps = kostant_representatives(p);
            auto sub = generate_subgroup(d, p.delta_L);
            CHECK(reps.size() * sub.size() == weyl.size());

            std::set<std::vector<Int>> seen;
            for (const auto& w : weyl) {
                auto [wt, wl] = kostant_decompose(w, p);
                CHECK(wt.times(wl) == w);
                CHECK(wt.length() + wl.length() == w.length());
                CHECK(kostant_characterization_holds(w, p));
                CHECK(semidirect_partition_holds(w, p));
                seen.insert(wt.char_matrix().a);
            }
            CHECK(seen.size() == reps.size());
            CHECK(bruhat_projection_monotone(p));
        }
    }
}

TEST_CASE("Delta_L-perp computation") {
    RootDatum d = build_gl(4);
    ParabolicDatum p = make_parabolic(d, {0});
    CHECK(p.delta_L_perp == std::vector<int>{2});
    ParabolicDatum q = make_parabolic(d, {});
    CHECK(q.delta_L_perp == std::vector<int>({0, 1, 2}));
}
