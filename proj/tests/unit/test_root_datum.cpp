#include <doctest.h>

#include <set>

#include "weylchar/weyl.hpp"

using namespace weylchar;

namespace {

// Independent oracle: enumerate all roots as the orbit of Delta under
// repeated simple reflections, working only with character coordinates and a
// plain fixpoint loop.  Counts |Phi| (both signs).
std::size_t orbit_root_count(const RootDatum& d) {
    std::set<Vec> roots;
    for (int i = 0; i < d.num_simple(); ++i) roots.insert(d.simple_root(i));
    bool grew = true;
    while (grew) {
        grew = false;
        std::set<Vec> next = roots;
        for (const Vec& r : roots)
            for (int i = 0; i < d.num_simple(); ++i) {
                Int c = dot(r, d.simple_coroot(i));
                Vec img = sub(r, scale(c, d.simple_root(i)));
                if (next.insert(img).second) grew = true;
            }
        roots.swap(next);
    }
    return roots.size();
}

} // namespace

TEST_CASE("positive root counts match type tables and the orbit oracle") {
    struct Row {
        const char* name;
        int positive;
    };
    // A_n: n(n+1)/2, B_n/C_n: n^2, D_n: n(n-1), G2: 6, F4: 24.
    const Row rows[] = {
        {"gl2", 1},   {"gl3", 3},  {"gl4", 6},   {"gsp4", 4},  {"g2", 6},
        {"sc-a3", 6}, {"sc-b2", 4}, {"sc-b3", 9}, {"sc-c3", 9}, {"sc-d2", 2},
        {"sc-d4", 12}, {"sc-f4", 24}, {"gl2xgl2", 2},
    };
    for (const Row& row : rows) {
        CAPTURE(row.name);
        RootDatum d = build_datum_from_name(row.name);
        CHECK(d.num_positive() == row.positive);
        CHECK(orbit_root_count(d) == 2 * static_cast<std::size_t>(row.positive));
    }
}

TEST_CASE("gl3 basics") {
    RootDatum d = build_gl(3);
    CHECK(d.rank() == 3);
    CHECK(d.num_positive() == 3);
    CHECK(d.simple_root(0) == Vec{1, -1, 0});
    CHECK(d.simple_root(1) == Vec{0, 1, -1});
    for (int i = 0; i < 2; ++i) CHECK(d.pairing(d.theta(), d.simple_coroot(i)) == 1);
    CHECK(d.connected_center());
}

TEST_CASE("gl2 rank-1 case") {
    RootDatum d = build_gl(2);
    CHECK(d.num_positive() == 1);
    CHECK(d.coroot(0) == Vec{1, -1});
    CHECK(d.pairing(d.positive_root(0).coords, d.coroot(0)) == 2);
}

TEST_CASE("g2 pairings") {
    RootDatum d = build_g2();
    CHECK(d.rank() == 2);
    CHECK(d.num_positive() == 6);
    // alpha short, beta long
    CHECK(d.cartan(0, 1) == -3); // <beta, alpha^vee>
    CHECK(d.cartan(1, 0) == -1); // <alpha, beta^vee>
    CHECK(d.connected_center());
    CHECK(d.coweights_available());
}

TEST_CASE("gsp4 convention: type C2 with connected center") {
    RootDatum d = build_gsp4();
    CHECK(d.rank() == 3);
    CHECK(d.num_positive() == 4);
    CHECK(d.simple_root(0) == Vec{1, -1, 0});
    CHECK(d.simple_root(1) == Vec{0, 2, -1});
    CHECK(d.cartan(0, 1) == -2);
    CHECK(d.cartan(1, 0) == -1);
    for (int i = 0; i < 2; ++i) CHECK(d.pairing(d.theta(), d.simple_coroot(i)) == 1);
    CHECK(d.connected_center());
}

TEST_CASE("fundamental coweights: defining property or capability error") {
    for (const char* name : {"gl3", "gl4", "gsp4", "g2", "gl2xgl2", "sc-f4"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        REQUIRE(d.coweights_available());
        for (int i = 0; i < d.num_simple(); ++i)
            for (int j = 0; j < d.num_simple(); ++j)
                CHECK(d.pairing(d.simple_root(j), d.fundamental_coweight(i)) == (i == j ? 1 : 0));
    }
    // SL_3 and Spin(4): coweight lattice exceeds the cocharacter lattice.
    for (const char* name : {"sc-a2", "sc-d2", "sc-b3"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        CHECK_FALSE(d.coweights_available());
        CHECK_FALSE(d.connected_center());
        CHECK_THROWS_AS(d.fundamental_coweight(0), CapabilityError);
    }
}

TEST_CASE("pairing errors on dimension mismatch") {
    RootDatum d = build_gl(3);
    CHECK_THROWS_AS(d.pairing(Vec{1, 0}, Vec{0, 0, 1}), ConfigError);
}

TEST_CASE("closure operation") {
    RootDatum d = build_gl(3);
    int a1 = d.simple_pos_index(0), a2 = d.simple_pos_index(1);

    auto closure = positive_roots_closure(d, {a1, a2});
    CHECK(closure.size() == 3); // adds the highest root

    CHECK(positive_roots_closure(d, {}).empty());

    int highest = d.positive_root_index(Vec{1, 0, -1});
    CHECK(positive_roots_closure(d, {highest}) == std::vector<int>{highest});

    CHECK_THROWS_AS(positive_roots_closure(d, {17}), ConfigError);
}

TEST_CASE("simple reflections permute the other positive roots") {
    for (const char* name : {"gl3", "gsp4", "g2"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        for (int i = 0; i < d.num_simple(); ++i) {
            Mat s = d.simple_reflection_char(i);
            std::set<int> image;
            for (int k = 0; k < d.num_positive(); ++k) {
                if (k == d.simple_pos_index(i)) continue;
                auto hit = d.lookup_root(s.apply(d.positive_root(k).coords));
                REQUIRE(hit.has_value());
                CHECK(hit->second > 0);
                image.insert(hit->first);
            }
            CHECK(static_cast<int>(image.size()) == d.num_positive() - 1);
        }
    }
}

TEST_CASE("the pairing is Weyl invariant") {
    for (const char* name : {"gl3", "g2"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        for (const auto& w : enumerate_weyl(d))
            for (int k = 0; k < d.num_positive(); ++k)
                for (int l = 0; l < d.num_positive(); ++l)
                    CHECK(d.pairing(w.act_char(d.positive_root(k).coords), w.act_cochar(d.coroot(l))) ==
                          d.pairing(d.positive_root(k).coords, d.coroot(l)));
    }
}

TEST_CASE("unsupported kinds are configuration errors") {
    CHECK_THROWS_AS(build_gl(1), ConfigError);
    CHECK_THROWS_AS(build_gl(99), ConfigError);
    CHECK_THROWS_AS(build_simply_connected('e', 6), ConfigError);
    CHECK_THROWS_AS(build_simply_connected('f', 3), ConfigError);
    CHECK_THROWS_AS(build_datum_from_name("so5"), ConfigError);
}
