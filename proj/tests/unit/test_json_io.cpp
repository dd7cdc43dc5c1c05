#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "weylchar/json_io.hpp"

using namespace weylchar;

TEST_CASE("character spec round trip") {
    RootDatum d = build_g2();
    auto chars = enumerate_characters(d, 5, 5);
    for (std::size_t k = 0; k < chars.size(); k += 17)
        CHECK(parse_character(d, character_json(chars[k])) == chars[k]);
}

TEST_CASE("character spec parsing forms") {
    RootDatum d = build_gl(2);
    Json j = {{"p", 5}, {"q", 5}, {"components", Json::array({
                  Json{{"val_p", 2}, {"e", 1}},       // residue 2 = g^1
                  Json{{"val_p", "g^3"}, {"e", -1}},  // negative e normalizes
              })}};
    TorusCharacter chi = parse_character(d, j);
    CHECK(chi.components()[0].val == 1);
    CHECK(chi.components()[0].e == 1);
    CHECK(chi.components()[1].val == 3);
    CHECK(chi.components()[1].e == 3);

    // wrong component count
    Json bad = {{"p", 5}, {"components", Json::array({Json{{"val_p", 1}, {"e", 0}}})}};
    CHECK_THROWS_AS(parse_character(d, bad), ConfigError);

    // integer residues are prime-field only
    Json q25 = {{"p", 5}, {"q", 25}, {"components", Json::array({
                    Json{{"val_p", 2}, {"e", 0}},
                    Json{{"val_p", 0}, {"e", 0}},
                })}};
    CHECK_THROWS_AS(parse_character(d, q25), ConfigError);

    // g^k form works for q = p^2, with e still mod p-1
    Json q25ok = {{"p", 5}, {"q", 25}, {"components", Json::array({
                      Json{{"val_p", "g^13"}, {"e", 5}},
                      Json{{"val_p", "g^0"}, {"e", 0}},
                  })}};
    TorusCharacter chi25 = parse_character(d, q25ok);
    CHECK(chi25.components()[0].val == 13);
    CHECK(chi25.components()[0].e == 1);
}

TEST_CASE("word serialization and parsing") {
    RootDatum d = build_gl(3);
    WeylElement w = WeylElement::from_word(d, {0, 1});
    Json j = word_json(w);
    CHECK(j == Json::array({1, 2}));

    CHECK(parse_word_string("s1s2", 2) == std::vector<int>({0, 1}));
    CHECK(parse_word_string("s1*s2*s1", 2) == std::vector<int>({0, 1, 0}));
    CHECK(parse_word_string("1,2,1", 2) == std::vector<int>({0, 1, 0}));
    CHECK(parse_word_string("", 2).empty());
    CHECK(parse_word_string("e", 2).empty());
    CHECK_THROWS_AS(parse_word_string("s3", 2), ConfigError);
    CHECK_THROWS_AS(parse_word_string("x1", 2), ConfigError);
}

TEST_CASE("root subset serialization") {
    RootDatum d = build_gl(3);
    std::vector<int> all = {0, 1, 2};
    Json j = root_subset_json(d, all);
    CHECK(parse_root_subset(d, j) == all);

    Json theta_only = Json::array({Json::array({1, 1})});
    auto parsed = parse_root_subset(d, theta_only);
    REQUIRE(parsed.size() == 1);
    CHECK(d.positive_root(parsed[0]).simple_coords == Vec{1, 1});

    Json bad = Json::array({Json::array({1, 1, 1})});
    CHECK_THROWS_AS(parse_root_subset(d, bad), ConfigError);
    Json not_root = Json::array({Json::array({2, 0})});
    CHECK_THROWS_AS(parse_root_subset(d, not_root), ConfigError);
}

TEST_CASE("Levi strings") {
    CHECK(parse_levi_string("a1,a3", 3) == std::vector<int>({0, 2}));
    CHECK(parse_levi_string("", 3).empty());
    CHECK(parse_levi_string("-", 3).empty());
    CHECK(levi_string({0, 2}) == "a1,a3");
    CHECK_THROWS_AS(parse_levi_string("a4", 3), ConfigError);
    CHECK_THROWS_AS(parse_levi_string("b1", 3), ConfigError);
}

TEST_CASE("datum spec files") {
    auto with_spec = [](const std::string& text, auto&& check) {
        const char* path = "datum_spec_scratch.txt";
        {
            std::ofstream f(path);
            f << text;
        }
        check(path);
        std::remove(path);
    };
    with_spec("# comment\nkind=gl\nn=3\n",
              [](const char* p) { CHECK(load_datum_spec(p).name() == "gl3"); });
    with_spec(R"({"kind": "sc", "type": "b", "rank": 3})",
              [](const char* p) { CHECK(load_datum_spec(p).name() == "sc-b3"); });
    with_spec(R"({"kind": "name", "name": "gl2xgl2"})",
              [](const char* p) { CHECK(load_datum_spec(p).rank() == 4); });
    CHECK_THROWS_AS(load_datum_spec("no_such_file.json"), ConfigError);
}

TEST_CASE("report dumps are stable") {
    RootDatum d = build_gl(3);
    TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
    ParabolicDatum p = make_parabolic(d, {0});
    std::string once = ord_table_json(ord_table(p, chi, 1), p).dump(2);
    std::string twice = ord_table_json(ord_table(p, chi, 1), p).dump(2);
    CHECK(once == twice);
    CHECK(datum_json(d).dump() == datum_json(build_gl(3)).dump());
}
