#include <doctest.h>

#include <set>

#include "weylchar/ext_rules.hpp"

using namespace weylchar;

namespace {

std::vector<int> levi_from_mask(const RootDatum& d, std::size_t mask) {
    std::vector<int> levi;
    for (int i = 0; i < d.num_simple(); ++i)
        if (mask & (std::size_t{1} << i)) levi.push_back(i);
    return levi;
}

} // namespace

TEST_CASE("ext_edge") {
    RootDatum gl2 = build_gl(2);
    TorusCharacter chi = TorusCharacter::unramified(gl2, 5, 5, {0, 1});
    CHECK(ext_edge(chi, chi).kind == EdgeKind::self);

    TorusCharacter swapped = weyl_act(WeylElement::simple_reflection(gl2, 0), chi);
    ExtEdge e = ext_edge(chi, swapped);
    CHECK(e.kind == EdgeKind::simple_reflection);
    CHECK(e.alpha == 0);

    RootDatum gl3 = build_gl(3);
    TorusCharacter chi3 = TorusCharacter::unramified(gl3, 5, 5, {0, 1, 3});
    TorusCharacter w0chi = weyl_act(longest_element(gl3), chi3);
    CHECK(ext_edge(chi3, w0chi).kind == EdgeKind::none);
}

TEST_CASE("chain classification: spec examples on GL3 at p = 5") {
    RootDatum d = build_gl(3);
    TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
    REQUIRE(genericity(chi) == Genericity::strongly_generic);

    WeylElement s[2] = {WeylElement::simple_reflection(d, 0), WeylElement::simple_reflection(d, 1)};

    // (chi, s_b(chi), s_a s_b(chi)) -> excluded for a != b
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) {
            if (a == b) continue;
            TorusCharacter mid = weyl_act(s[b], chi);
            TorusCharacter top = weyl_act(s[a], mid);
            CHECK(classify_chain(chi, mid, top).verdict == ChainVerdict::excluded);
        }

    // (chi, s_a(chi), chi) -> unique_chain
    for (int a = 0; a < 2; ++a) {
        ChainReport r = classify_chain(chi, weyl_act(s[a], chi), chi);
        CHECK(r.verdict == ChainVerdict::unique_chain);
        CHECK(r.alpha == a);
        CHECK(r.irreducibility_unchecked);
    }

    // (chi, w0(chi), anything) -> no_edge
    TorusCharacter w0chi = weyl_act(longest_element(d), chi);
    CHECK(classify_chain(chi, w0chi, chi).verdict == ChainVerdict::no_edge);
    CHECK(classify_chain(chi, w0chi, w0chi).verdict == ChainVerdict::no_edge);

    // chi = chi' = chi'' -> hypotheses of the exclusion statement not met
    CHECK(classify_chain(chi, chi, chi).verdict == ChainVerdict::out_of_scope);
}

TEST_CASE("chain classification: unique_chain sweep over GL2 and GL3") {
    for (const char* name : {"gl2", "gl3"}) {
        CAPTURE(name);
        RootDatum d = build_datum_from_name(name);
        for (const auto& chi : enumerate_characters(d, 5, 5)) {
            for (int a = 0; a < d.num_simple(); ++a) {
                if (chi.compose_coroot(d.simple_pos_index(a)).trivial()) continue;
                TorusCharacter mid = weyl_act(WeylElement::simple_reflection(d, a), chi);
                CHECK(classify_chain(chi, mid, chi).verdict == ChainVerdict::unique_chain);
            }
        }
    }
}

TEST_CASE("supersingular label algebra") {
    RootDatum d = build_gl(4);
    SupersingularLabel pi{"v", {}, Vec(d.rank(), 0)};

    SupersingularLabel t = conj_twist(d, pi, 2);
    CHECK(t != pi);
    CHECK(t.conj == std::vector<int>{2});
    CHECK(t.twist == neg(d.simple_root(2)));
    CHECK(conj_twist(d, t, 2) == pi); // involution

    // commuting twists for orthogonal roots
    SupersingularLabel ab = conj_twist(d, conj_twist(d, pi, 0), 2);
    SupersingularLabel ba = conj_twist(d, conj_twist(d, pi, 2), 0);
    CHECK(ab == ba);
}

TEST_CASE("parabolic case dispatch: representative cases on GL4") {
    RootDatum d = build_gl(4);
    SupersingularLabel pi{"pi", {}, Vec(d.rank(), 0)};
    SupersingularLabel other{"pi'", {}, Vec(d.rank(), 0)};

    // incomparable parabolics
    InductionPair inc{make_parabolic(d, {0}), make_parabolic(d, {2}), pi, other};
    ParabolicExtReport r1 = classify_parabolic_ext(inc, 1);
    CHECK(r1.which == ParabolicExtCase::case_i);
    CHECK(r1.prediction == "ext_zero");

    // P' = P with the orthogonal twist: alpha3 is orthogonal to alpha1
    InductionPair tw{make_parabolic(d, {0}), make_parabolic(d, {0}), pi, conj_twist(d, pi, 2)};
    ParabolicExtReport r2 = classify_parabolic_ext(tw, 1);
    CHECK(r2.which == ParabolicExtCase::case_ii);
    CHECK(r2.prediction == "dim_1");
    CHECK(r2.alpha == 2);
    CHECK(r2.delta_L_perp == std::vector<int>{2});

    // same pair at d = 2 falls through to the Levi reduction
    CHECK(classify_parabolic_ext(tw, 2).which == ParabolicExtCase::case_iii);

    // P' = B inside P
    InductionPair sub{make_parabolic(d, {0, 1}), make_parabolic(d, {}), pi, other};
    CHECK(classify_parabolic_ext(sub, 1).which == ParabolicExtCase::case_iii);

    // P inside P'
    InductionPair sup{make_parabolic(d, {}), make_parabolic(d, {0, 1}), pi, other};
    CHECK(classify_parabolic_ext(sup, 1).which == ParabolicExtCase::case_iv);
}

TEST_CASE("parabolic case dispatch is total and mutually exclusive over 64 GL4 pairs") {
    RootDatum d = build_gl(4);
    SupersingularLabel pi{"pi", {}, Vec(d.rank(), 0)};
    SupersingularLabel other{"pi'", {}, Vec(d.rank(), 0)};
    std::set<std::string> seen;
    int count = 0;
    for (std::size_t ma = 0; ma < 8; ++ma)
        for (std::size_t mb = 0; mb < 8; ++mb) {
            InductionPair pair{make_parabolic(d, levi_from_mask(d, ma)),
                               make_parabolic(d, levi_from_mask(d, mb)), pi, other};
            ParabolicExtReport r = classify_parabolic_ext(pair, 1);
            // exactly one case, consistent with the containment relations
            bool p_in_pp = std::includes(pair.Pp.delta_L.begin(), pair.Pp.delta_L.end(),
                                         pair.P.delta_L.begin(), pair.P.delta_L.end());
            bool pp_in_p = std::includes(pair.P.delta_L.begin(), pair.P.delta_L.end(),
                                         pair.Pp.delta_L.begin(), pair.Pp.delta_L.end());
            if (!p_in_pp && !pp_in_p)
                CHECK(r.which == ParabolicExtCase::case_i);
            else if (pp_in_p)
                CHECK(r.which == ParabolicExtCase::case_iii); // labels unrelated: never case_ii
            else
                CHECK(r.which == ParabolicExtCase::case_iv);
            seen.insert(to_string(r.which));
            ++count;
        }
    CHECK(count == 64);
    CHECK(seen == std::set<std::string>({"case_i", "case_iii", "case_iv"}));
}

TEST_CASE("case_ii with torus-character labels on the Borel") {
    RootDatum d = build_gl(2);
    TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1});
    TorusCharacter chi_tw = conj_twist(d, chi, 0);
    REQUIRE(chi_tw != chi);
    InductionPair pair{make_parabolic(d, {}), make_parabolic(d, {}), chi, chi_tw};
    ParabolicExtReport r = classify_parabolic_ext(pair, 1);
    CHECK(r.which == ParabolicExtCase::case_ii);
    CHECK(r.alpha == 0);
}

TEST_CASE("transfer hypothesis table") {
    RootDatum d = build_gl(3);

    // trivial character: entry nontrivial iff <alpha, beta^vee> != 0 mod p-1
    TorusCharacter triv = TorusCharacter::trivial(d, 5, 5);
    ParabolicDatum p = make_parabolic(d, {1});
    ExtTransferReport rep = ext_transfer_hypotheses(p, triv);
    REQUIRE(rep.table.size() == 1); // alpha = a1, beta = a2
    CHECK(rep.table[0].nontrivial == (d.cartan(1, 0) % 4 != 0));
    CHECK(rep.table[0].nontrivial);

    // empty Levi: vacuous table, aggregate true
    ExtTransferReport borel = ext_transfer_hypotheses(make_parabolic(d, {}), triv);
    CHECK(borel.table.empty());
    CHECK(borel.all_nontrivial);
    CHECK(borel.twist_moves.size() == 2);

    // generic unramified character
    TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
    ExtTransferReport rep2 = ext_transfer_hypotheses(p, chi);
    for (const auto& e : rep2.table) {
        TorusCharacter label = conj_twist(d, chi, e.alpha);
        CHECK(e.nontrivial == !label.compose(d.simple_coroot(e.beta)).trivial());
    }
    for (const auto& [alpha, moves] : rep2.twist_moves)
        CHECK(moves == (conj_twist(d, chi, alpha) != chi));
}

TEST_CASE("degree dispatch for the Ext comparison") {
    CHECK(ext_comparison_rule(2).unconditional_iso);
    CHECK(ext_comparison_rule(3).unconditional_iso);
    CHECK_FALSE(ext_comparison_rule(1).unconditional_iso);
    CHECK(ext_comparison_rule(1).defer_to_d1_table);
    CHECK_THROWS_AS(ext_comparison_rule(0), ConfigError);
}
