#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "weylchar/chars.hpp"
#include "weylchar/closed_roots.hpp"

namespace weylchar {

// One constituent label C_{w_psi, I}: a pairwise-orthogonal I inside
// Delta cap w_psi(Psi), together with the character obtained by letting
// (prod_{alpha in I} s_alpha) * w_psi act on chi.  The uniform twist by
// epsilon^{-1} o theta common to every principal-series label is implicit
// and never stored; all comparisons between labels cancel it.
struct Constituent {
    WeylElement w_psi;
    std::vector<int> I; // simple indices, sorted
    WeylElement labeling_element;
    TorusCharacter label;
};

// Which genericity hypothesis the lattice was built under: full genericity,
// the weaker coroot condition (chi o alpha^vee != 1 for alpha in
// w_psi^{-1}(Delta) cap Psi), or neither.
enum class HypothesisRegime { generic, weak_coroot, unmet };
const char* to_string(HypothesisRegime r);

struct BHLattice {
    TorusCharacter chi;
    ClosedRootSubset psi;
    WeylElement w_psi;
    std::vector<Constituent> constituents;           // ordered by (|I|, lex)
    std::vector<std::pair<int, int>> ext_edges;      // ordered pairs, self-edges included
    std::vector<int> socle_degree;                   // = |I| per constituent
    HypothesisRegime regime = HypothesisRegime::unmet;
    // Sufficient condition for irreducibility of every constituent:
    // chi o alpha^vee != omega^{+-1} for all alpha in Phi+.  Irreducibility
    // itself is assumed, not decided.
    bool irreducibility_criterion = false;
};

// Nonsplit extensions exist between C_{w,I} and C_{w,I'} exactly when the
// symmetric difference has one element or I = I'.
bool ext_exists(const std::vector<int>& I, const std::vector<int>& J);

BHLattice build_lattice(const TorusCharacter& chi, const ClosedRootSubset& psi,
                        const WeylElement& w_psi, const std::vector<WeylElement>& weyl);

// Down-closed families of subsets of an n-element set, each family a sorted
// list of bitmasks (masks ordered by popcount then value), families ordered
// by (size, lexicographic).  These are the closed-subrepresentation labels of
// the hypercube representation.  BoundError for n > max_n.
std::vector<std::vector<std::uint32_t>> down_closed_families(int n, int max_n = 5);

struct SocleReport {
    std::vector<Constituent> factors; // one C_{w,empty} per w in W_Psi
    bool strongly_generic = false;
};
SocleReport pi_psi_socle(const TorusCharacter& chi, const ClosedRootSubset& psi,
                         const std::vector<WeylElement>& weyl);

enum class DistinctnessVerdict { holds, fails, hypotheses_not_met };
const char* to_string(DistinctnessVerdict v);
struct DistinctnessReport {
    DistinctnessVerdict verdict = DistinctnessVerdict::hypotheses_not_met;
    // Second route: the labeling elements are pairwise distinct in W and each
    // (w_psi, I) satisfies the I = Delta cap w(-Psi) identity.
    bool identity_route = false;
};
DistinctnessReport distinctness_check(const TorusCharacter& chi, const ClosedRootSubset& psi,
                                      const std::vector<WeylElement>& weyl);

struct MultiplicityRow {
    int constituent = 0;
    int multiplicity = 1;
    int socle_degree = 0;
};
std::vector<MultiplicityRow> multiplicity_report(const BHLattice& lat);

// DOT rendering of the extension graph (self-loops suppressed) and of the
// Hasse diagram of the subrepresentation lattice of one constituent.
std::string lattice_dot(const BHLattice& lat);
std::string subrep_hasse_dot(const BHLattice& lat, int constituent_index);

} // namespace weylchar
