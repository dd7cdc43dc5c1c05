#include "weylchar/ext_rules.hpp"

#include <algorithm>

namespace weylchar {

ExtEdge ext_edge(const TorusCharacter& a, const TorusCharacter& b) {
    if (&a.datum() != &b.datum()) throw ConfigError("ext_edge: datum mismatch");
    if (a == b) return ExtEdge{EdgeKind::self, -1};
    const RootDatum& d = a.datum();
    for (int i = 0; i < d.num_simple(); ++i) {
        if (a.compose_coroot(d.simple_pos_index(i)).trivial()) continue;
        if (weyl_act(WeylElement::simple_reflection(d, i), a) == b)
            return ExtEdge{EdgeKind::simple_reflection, i};
    }
    return ExtEdge{EdgeKind::none, -1};
}

const char* to_string(ChainVerdict v) {
    switch (v) {
    case ChainVerdict::excluded: return "excluded";
    case ChainVerdict::unique_chain: return "unique_chain";
    case ChainVerdict::no_edge: return "no_edge";
    case ChainVerdict::out_of_scope: return "out_of_scope";
    }
    return "?";
}

ChainReport classify_chain(const TorusCharacter& chi, const TorusCharacter& chi1,
                           const TorusCharacter& chi2) {
    ChainReport rep;
    ExtEdge lower = ext_edge(chi, chi1);
    ExtEdge upper = ext_edge(chi1, chi2);
    if (lower.kind == EdgeKind::none || upper.kind == EdgeKind::none) {
        rep.verdict = ChainVerdict::no_edge;
        return rep;
    }
    if (chi != chi2 && ((chi1 != chi && chi1 != chi2) || is_weakly_generic(chi1))) {
        rep.verdict = ChainVerdict::excluded;
        return rep;
    }
    if (chi2 == chi && lower.kind == EdgeKind::simple_reflection) {
        rep.verdict = ChainVerdict::unique_chain;
        rep.alpha = lower.alpha;
        return rep;
    }
    rep.verdict = ChainVerdict::out_of_scope;
    return rep;
}

SupersingularLabel conj_twist(const RootDatum& d, const SupersingularLabel& pi, int alpha) {
    if (alpha < 0 || alpha >= d.num_simple()) throw ConfigError("conj_twist: bad simple index");
    SupersingularLabel out = pi;
    auto it = std::lower_bound(out.conj.begin(), out.conj.end(), alpha);
    if (it != out.conj.end() && *it == alpha)
        out.conj.erase(it);
    else
        out.conj.insert(it, alpha);
    Mat s = d.simple_reflection_char(alpha);
    out.twist = sub(s.apply(pi.twist), d.simple_root(alpha));
    return out;
}

TorusCharacter conj_twist(const RootDatum& d, const TorusCharacter& pi, int alpha) {
    if (alpha < 0 || alpha >= d.num_simple()) throw ConfigError("conj_twist: bad simple index");
    return weyl_act(WeylElement::simple_reflection(d, alpha), pi)
        .times(omega_twist(d, pi.p(), pi.q(), neg(d.simple_root(alpha))));
}

bool labels_equal(const InductionLabel& a, const InductionLabel& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<TorusCharacter>(a))
        return std::get<TorusCharacter>(a) == std::get<TorusCharacter>(b);
    return std::get<SupersingularLabel>(a) == std::get<SupersingularLabel>(b);
}

const char* to_string(ParabolicExtCase c) {
    switch (c) {
    case ParabolicExtCase::case_i: return "case_i";
    case ParabolicExtCase::case_ii: return "case_ii";
    case ParabolicExtCase::case_iii: return "case_iii";
    case ParabolicExtCase::case_iv: return "case_iv";
    }
    return "?";
}

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

InductionLabel twist_label(const RootDatum& d, const InductionLabel& pi, int alpha) {
    if (std::holds_alternative<TorusCharacter>(pi))
        return conj_twist(d, std::get<TorusCharacter>(pi), alpha);
    return conj_twist(d, std::get<SupersingularLabel>(pi), alpha);
}

} // namespace

ParabolicExtReport classify_parabolic_ext(const InductionPair& pair, int d) {
    if (pair.P.datum != pair.Pp.datum) throw ConfigError("parabolic pair over different data");
    const RootDatum& datum = *pair.P.datum;
    ParabolicExtReport rep;
    rep.delta_L_perp = pair.P.delta_L_perp;

    bool p_in_pp = subset(pair.P.delta_L, pair.Pp.delta_L);
    bool pp_in_p = subset(pair.Pp.delta_L, pair.P.delta_L);
    if (!p_in_pp && !pp_in_p) {
        rep.which = ParabolicExtCase::case_i;
        rep.prediction = "ext_zero";
        return rep;
    }
    if (d == 1 && pair.P.delta_L == pair.Pp.delta_L && !labels_equal(pair.pi, pair.pi_p)) {
        for (int alpha : pair.P.delta_L_perp) {
            if (labels_equal(pair.pi_p, twist_label(datum, pair.pi, alpha))) {
                rep.which = ParabolicExtCase::case_ii;
                rep.prediction = "dim_1";
                rep.alpha = alpha;
                return rep;
            }
        }
    }
    if (pp_in_p) {
        rep.which = ParabolicExtCase::case_iii;
        rep.prediction = "reduce_to_levi_L";
        return rep;
    }
    rep.which = ParabolicExtCase::case_iv;
    rep.prediction = "reduce_to_levi_Lp";
    return rep;
}

ExtTransferReport ext_transfer_hypotheses(const ParabolicDatum& p, const TorusCharacter& chi) {
    const RootDatum& d = *p.datum;
    ExtTransferReport rep;
    for (int a = 0; a < d.num_simple(); ++a) {
        if (p.contains_simple(a)) continue;
        TorusCharacter label = conj_twist(d, chi, a);
        rep.twist_moves.emplace_back(a, label != chi);
        for (int b : p.delta_L) {
            bool nontrivial = !label.compose(d.simple_coroot(b)).trivial();
            rep.table.push_back(ExtTransferEntry{a, b, nontrivial});
            if (!nontrivial) rep.all_nontrivial = false;
        }
    }
    return rep;
}

ExtComparisonRule ext_comparison_rule(int d) {
    if (d < 1) throw ConfigError("degree parameter d must be >= 1");
    ExtComparisonRule rule;
    rule.d = d;
    rule.unconditional_iso = d >= 2;
    rule.defer_to_d1_table = d == 1;
    return rule;
}

} // namespace weylchar
