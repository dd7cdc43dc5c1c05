#include "weylchar/selftest.hpp"

#include <functional>

#include "weylchar/bh_lattice.hpp"
#include "weylchar/chars.hpp"
#include "weylchar/closed_roots.hpp"
#include "weylchar/ext_rules.hpp"
#include "weylchar/ord_parts.hpp"

namespace weylchar {

namespace {

using Suite = std::vector<SelftestCheck>;

void check(Suite& s, const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    try {
        ok = f();
    } catch (...) {
        ok = false;
    }
    s.push_back(SelftestCheck{name, ok});
}

void datum_suite(Suite& s) {
    check(s, "gl3 has 3 positive roots", [] {
        return build_gl(3).num_positive() == 3;
    });
    check(s, "g2 has 6 positive roots and <beta,alpha^vee> = -3", [] {
        RootDatum d = build_g2();
        return d.num_positive() == 6 && d.cartan(0, 1) == -3 && d.cartan(1, 0) == -1;
    });
    check(s, "pairing is Weyl invariant on gsp4", [] {
        RootDatum d = build_gsp4();
        for (const auto& w : enumerate_weyl(d))
            for (int i = 0; i < d.num_simple(); ++i)
                for (int k = 0; k < d.num_positive(); ++k)
                    if (d.pairing(w.act_char(d.simple_root(i)), w.act_cochar(d.coroot(k))) !=
                        d.pairing(d.simple_root(i), d.coroot(k)))
                        return false;
        return true;
    });
    check(s, "closure of {a1,a2} in A2 adds the highest root", [] {
        RootDatum d = build_gl(3);
        auto c = positive_roots_closure(d, {d.simple_pos_index(0), d.simple_pos_index(1)});
        return c.size() == 3;
    });
}

void weyl_suite(Suite& s) {
    check(s, "inversion count equals length on gl3 and g2", [] {
        for (const char* name : {"gl3", "g2"}) {
            RootDatum d = build_datum_from_name(name);
            for (const auto& w : enumerate_weyl(d))
                if (static_cast<int>(inversion_roots(w).size()) != w.length()) return false;
        }
        return true;
    });
    check(s, "Kostant bijection with additive length on gl3", [] {
        RootDatum d = build_gl(3);
        auto weyl = enumerate_weyl(d);
        for (std::size_t mask = 0; mask < 4; ++mask) {
            std::vector<int> levi;
            for (int i = 0; i < 2; ++i)
                if (mask & (1u << i)) levi.push_back(i);
            ParabolicDatum p = make_parabolic(d, levi);
            auto reps = kostant_representatives(p);
            auto sub = generate_subgroup(d, p.delta_L);
            if (reps.size() * sub.size() != weyl.size()) return false;
            for (const auto& w : weyl) {
                auto [wt, wl] = kostant_decompose(w, p);
                if (wt.times(wl) != w) return false;
            }
        }
        return true;
    });
    check(s, "Bruhat order is reflexive and respects length on g2", [] {
        RootDatum d = build_g2();
        for (const auto& w : enumerate_weyl(d)) {
            if (!bruhat_leq(w, w)) return false;
            if (!bruhat_leq(WeylElement::identity(d), w)) return false;
        }
        return true;
    });
}

void char_suite(Suite& s) {
    check(s, "weyl_act is a left action on gsp4 at p=5", [] {
        RootDatum d = build_gsp4();
        auto weyl = enumerate_weyl(d);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 2});
        for (const auto& w : weyl)
            for (const auto& v : weyl)
                if (weyl_act(w, weyl_act(v, chi)) != weyl_act(w.times(v), chi)) return false;
        return true;
    });
    check(s, "order-two G2 character is generic and w0-fixed at p=5", [] {
        RootDatum d = build_g2();
        TorusCharacter chi = quadratic_g2_character(d, 5);
        return genericity(chi) == Genericity::generic &&
               weyl_act(longest_element(d), chi) == chi;
    });
    check(s, "coroot equivalence sweep on g2 at p=5", [] {
        RootDatum d = build_g2();
        for (const auto& chi : enumerate_characters(d, 5, 5))
            if (!generic_iff_coroot(chi)) return false;
        return true;
    });
}

void roots_suite(Suite& s) {
    check(s, "w_psi_set of the highest root in A2 has 3 elements", [] {
        RootDatum d = build_gl(3);
        ClosedRootSubset psi = make_closed(d, {2});
        return w_psi_set(d, psi).size() == 3;
    });
    check(s, "I-identity holds over all closed subsets of gl3", [] {
        RootDatum d = build_gl(3);
        auto weyl = enumerate_weyl(d);
        for (const auto& psi : enumerate_closed_subsets(d))
            for (const auto& w : w_psi_set(weyl, psi))
                for (const auto& I : orthogonal_subsets(d, delta_cap(w, psi)))
                    if (!verify_I_identity(d, psi, w, I)) return false;
        return true;
    });
}

void ord_suite(Suite& s) {
    check(s, "twist characters: zero at identity and alpha at s_alpha", [] {
        RootDatum d = build_gl(3);
        if (!is_zero(alpha_tilde(WeylElement::identity(d)))) return false;
        for (int i = 0; i < d.num_simple(); ++i)
            if (alpha_tilde(WeylElement::simple_reflection(d, i)) != d.simple_root(i)) return false;
        return true;
    });
    check(s, "piece counts over all degrees equal |W~_P| on gsp4", [] {
        RootDatum d = build_gsp4();
        TorusCharacter chi = TorusCharacter::trivial(d, 5, 5);
        for (std::size_t mask = 0; mask < 4; ++mask) {
            std::vector<int> levi;
            for (int i = 0; i < 2; ++i)
                if (mask & (1u << i)) levi.push_back(i);
            ParabolicDatum p = make_parabolic(d, levi);
            auto reps = kostant_representatives(p);
            std::size_t total = 0;
            for (const auto& row : ord_table(p, chi, 1)) total += row.pieces.size();
            if (total != reps.size()) return false;
        }
        return true;
    });
    check(s, "theta twist cancellation on gl3 maximal parabolics", [] {
        RootDatum d = build_gl(3);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
        return theta_twist_check(make_parabolic(d, {0}), chi) &&
               theta_twist_check(make_parabolic(d, {1}), chi);
    });
}

void bh_suite(Suite& s) {
    check(s, "A3 full lattice has 5 constituents and 5 proper edges", [] {
        RootDatum d = build_gl(4);
        auto weyl = enumerate_weyl(d);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 2, 3});
        std::vector<int> all;
        for (int k = 0; k < d.num_positive(); ++k) all.push_back(k);
        BHLattice lat = build_lattice(chi, make_closed(d, all), WeylElement::identity(d), weyl);
        int proper = 0;
        for (auto& [a, b] : lat.ext_edges)
            if (a != b) ++proper;
        return lat.constituents.size() == 5 && proper == 10;
    });
    check(s, "down-set counts 2,3,6,20 for n=0..3", [] {
        return down_closed_families(0).size() == 2 && down_closed_families(1).size() == 3 &&
               down_closed_families(2).size() == 6 && down_closed_families(3).size() == 20;
    });
}

void ext_suite(Suite& s) {
    check(s, "chain classification on gl3 at p=5", [] {
        RootDatum d = build_gl(3);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 2});
        TorusCharacter s1chi = weyl_act(WeylElement::simple_reflection(d, 0), chi);
        TorusCharacter s2s1chi = weyl_act(WeylElement::simple_reflection(d, 1), s1chi);
        if (classify_chain(chi, s1chi, chi).verdict != ChainVerdict::unique_chain) return false;
        if (classify_chain(chi, s1chi, s2s1chi).verdict != ChainVerdict::excluded) return false;
        TorusCharacter w0chi = weyl_act(longest_element(d), chi);
        return classify_chain(chi, w0chi, chi).verdict == ChainVerdict::no_edge;
    });
    check(s, "parabolic case dispatch is total and exclusive on gl4", [] {
        RootDatum d = build_gl(4);
        std::vector<std::vector<int>> subsets;
        for (std::size_t mask = 0; mask < 8; ++mask) {
            std::vector<int> sel;
            for (int i = 0; i < 3; ++i)
                if (mask & (1u << i)) sel.push_back(i);
            subsets.push_back(sel);
        }
        for (const auto& a : subsets)
            for (const auto& b : subsets) {
                InductionPair pair{make_parabolic(d, a), make_parabolic(d, b),
                                   SupersingularLabel{"pi", {}, Vec(d.rank(), 0)},
                                   SupersingularLabel{"pi'", {}, Vec(d.rank(), 0)}};
                classify_parabolic_ext(pair, 1);
            }
        return true;
    });
    check(s, "conjugation twist is an involution", [] {
        RootDatum d = build_gl(4);
        SupersingularLabel pi{"pi", {}, Vec(d.rank(), 0)};
        auto tw = conj_twist(d, conj_twist(d, pi, 2), 2);
        return tw == pi;
    });
}

} // namespace

std::vector<SelftestCheck> run_selftest(const std::string& group) {
    Suite s;
    bool all = group == "all";
    if (all || group == "datum") datum_suite(s);
    if (all || group == "weyl") weyl_suite(s);
    if (all || group == "char") char_suite(s);
    if (all || group == "roots") roots_suite(s);
    if (all || group == "ord") ord_suite(s);
    if (all || group == "bh") bh_suite(s);
    if (all || group == "ext") ext_suite(s);
    if (s.empty()) throw ConfigError("unknown selftest group: " + group);
    return s;
}

} // namespace weylchar
