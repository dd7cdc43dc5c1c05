#pragma once

#include <string>
#include <variant>
#include <vector>

#include "weylchar/chars.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

// Necessary condition for a nonsplit extension between the principal series
// labelled by two characters (common twist implicit): the labels must agree,
// or differ by a simple reflection that actually moves the first one.
enum class EdgeKind { none, simple_reflection, self };
struct ExtEdge {
    EdgeKind kind = EdgeKind::none;
    int alpha = -1; // simple index for simple_reflection
};
ExtEdge ext_edge(const TorusCharacter& a, const TorusCharacter& b);

// Classification of a three-step chain with socle label chi, middle label
// chi1, cosocle label chi2:
//   no_edge      a required extension is already zero (ext_edge fails on an
//                adjacent pair), so no chain exists for an elementary reason;
//   excluded     chi != chi2 and (chi1 not in {chi, chi2} or chi1 weakly
//                generic): no such chain exists;
//   unique_chain chi2 = chi and chi1 = s_alpha(chi) != chi: exactly one chain,
//                induced from GL_2(Q_p);
//   out_of_scope none of the statements above applies.
// Whether the three principal series are irreducible is not decided here;
// irreducibility_unchecked records that.
enum class ChainVerdict { excluded, unique_chain, no_edge, out_of_scope };
const char* to_string(ChainVerdict v);
struct ChainReport {
    ChainVerdict verdict = ChainVerdict::out_of_scope;
    int alpha = -1; // witness for unique_chain
    bool irreducibility_unchecked = true;
};
ChainReport classify_chain(const TorusCharacter& chi, const TorusCharacter& chi1,
                           const TorusCharacter& chi2);

// Opaque label for a supersingular representation of a Levi.  Only the
// operations the case dispatch needs are defined: equality, conjugation by a
// commuting set of reflections from Delta_L-perp, and the accumulated omega
// twist.  conj is a subset of Delta_L-perp (those reflections commute and
// square to one); twist is an additively written character-lattice vector
// and doubles as the central-character record, since an omega twist shifts
// the central character by its restriction to the center.
struct SupersingularLabel {
    std::string base;
    std::vector<int> conj; // sorted simple indices
    Vec twist;
    bool operator==(const SupersingularLabel& o) const {
        return base == o.base && conj == o.conj && twist == o.twist;
    }
    bool operator!=(const SupersingularLabel& o) const { return !(*this == o); }
};

// pi -> pi^alpha tensor omega^{-1} o alpha.  Applying the same alpha twice
// recovers pi.
SupersingularLabel conj_twist(const RootDatum& d, const SupersingularLabel& pi, int alpha);
TorusCharacter conj_twist(const RootDatum& d, const TorusCharacter& pi, int alpha);

using InductionLabel = std::variant<TorusCharacter, SupersingularLabel>;
bool labels_equal(const InductionLabel& a, const InductionLabel& b);

struct InductionPair {
    ParabolicDatum P;
    ParabolicDatum Pp;
    InductionLabel pi;
    InductionLabel pi_p;
};

// Case dispatch for extensions between parabolic inductions of supersingular
// representations; total and mutually exclusive over ordered pairs of
// standard parabolics:
//   case_i    P, P' incomparable: Ext vanishes;
//   case_ii   d = 1, P' = P, pi' = pi^alpha tensor omega^{-1} o alpha != pi
//             for some alpha in Delta_L-perp: Ext has dimension 1;
//   case_iii  otherwise P' subset P: reduces to the Levi L;
//   case_iv   otherwise P subset P': reduces to the Levi L'.
enum class ParabolicExtCase { case_i, case_ii, case_iii, case_iv };
const char* to_string(ParabolicExtCase c);
struct ParabolicExtReport {
    ParabolicExtCase which = ParabolicExtCase::case_i;
    std::string prediction; // "ext_zero" | "dim_1" | "reduce_to_levi_L" | "reduce_to_levi_Lp"
    std::vector<int> delta_L_perp;
    int alpha = -1; // case_ii witness
    // "inductions irreducible or p != 2" is a hypothesis of the statement
    // that this dispatcher does not check.
    bool irreducible_or_podd_unchecked = true;
};
ParabolicExtReport classify_parabolic_ext(const InductionPair& pair, int d);

// Hypothesis table for the d = 1 Ext-transfer statement: for alpha in
// Delta - Delta_L and beta in Delta_L, whether
// (s_alpha(chi) * omega^{-1} o alpha) o beta^vee is nontrivial.  Also reports,
// per alpha, whether the Borel-case label s_alpha(chi) * omega^{-1} o alpha
// differs from chi (predicted one-dimensional Ext when it does).
struct ExtTransferEntry {
    int alpha = -1;
    int beta = -1;
    bool nontrivial = false;
};
struct ExtTransferReport {
    std::vector<ExtTransferEntry> table;
    bool all_nontrivial = true;
    std::vector<std::pair<int, bool>> twist_moves; // alpha -> label != chi
};
ExtTransferReport ext_transfer_hypotheses(const ParabolicDatum& p, const TorusCharacter& chi);

// Degree dispatch for the Ext comparison: unconditional isomorphism when
// d >= 2, deferred to the d = 1 hypothesis table otherwise.
struct ExtComparisonRule {
    int d = 1;
    bool unconditional_iso = false;
    bool defer_to_d1_table = false;
};
ExtComparisonRule ext_comparison_rule(int d);

} // namespace weylchar
