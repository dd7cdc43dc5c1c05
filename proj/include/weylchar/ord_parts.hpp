#pragma once

#include <optional>
#include <vector>

#include "weylchar/chars.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

// One graded piece of the derived ordinary parts of a principal series,
// indexed by a Kostant representative.  The degree is d * l(rep) with
// d = [F:Q_p]; the twist is the sum of the inversion roots of rep (stored
// additively); the output character is chi^{rep} * omega^{-1} o twist, with
// chi^{w} o lambda := chi o (w lambda).
struct GradedPiece {
    int degree = 0;
    WeylElement rep;
    Vec twist;              // character-lattice vector
    Vec twist_simple;       // same vector over Delta
    TorusCharacter out_char;
};

// Sum of the positive roots sent negative by rep; asserts agreement with the
// complementary-set formula through w_0 * rep.
Vec alpha_tilde(const WeylElement& rep);
Vec alpha_tilde_simple(const WeylElement& rep);

// Pieces in degree n for parameter d >= 1 (empty whenever d does not divide
// n), ordered by the canonical order of the representatives.
std::vector<GradedPiece> graded_pieces(const ParabolicDatum& p, const TorusCharacter& chi, int n,
                                       int d, const std::vector<WeylElement>& kostant);
std::vector<GradedPiece> graded_pieces(const ParabolicDatum& p, const TorusCharacter& chi, int n,
                                       int d, std::size_t cap = kDefaultWeylCap);

// For input character chi * omega^{-1} o theta, every degree-1 output
// character must equal s_gamma(chi) * omega^{-1} o theta; returns whether
// that holds (vacuously true when there are no degree-1 pieces).
bool theta_twist_check(const ParabolicDatum& p, const TorusCharacter& chi);

// Bruhat cells indexed by the Kostant representatives, closure order given by
// the Bruhat order, plus the inner strata indexed by W_L.
struct StratumCell {
    WeylElement rep;
    int length = 0;
    std::vector<std::pair<WeylElement, int>> inner; // (w_L, length)
};
struct BruhatStrata {
    std::vector<StratumCell> cells;
    std::vector<std::vector<bool>> closure_leq; // cells[i] <= cells[j]
};
BruhatStrata bruhat_strata(const ParabolicDatum& p, std::size_t cap = kDefaultWeylCap);

// Sufficient criterion for irreducibility of the Levi principal series with
// the given label: eta o beta^vee differs from omega^{+-1} for every beta in
// Phi_L^+.
bool levi_irreducibility_criterion(const ParabolicDatum& p, const TorusCharacter& eta);

enum class RowStatus { proved_n0, proved_d_nmid_n, proved_irreducible_case, conjectural };
const char* to_string(RowStatus s);

struct OrdTableRow {
    int degree = 0;
    std::vector<GradedPiece> pieces;
    RowStatus status = RowStatus::conjectural;
};

// Full degree table, n = 0 .. d * max length.  Without a character the rows
// carry no pieces and the irreducibility criterion cannot be evaluated, so
// rows not settled by degree 0 or by divisibility stay conjectural.
std::vector<OrdTableRow> ord_table(const ParabolicDatum& p, const std::optional<TorusCharacter>& chi,
                                   int d, std::size_t cap = kDefaultWeylCap);

// Twist chain along a fixed reduced word of rep: alpha_k is the sum of the
// positive roots gamma with v_k(gamma) > 0 and rep(gamma) < 0, where v_k is
// the product of the last k letters.  alpha_0 = alpha_tilde(rep) and the
// chain drops by w_L(gamma_k) at each step, gamma_k the root of the
// one-dimensional quotient cut out of the unipotent radical.
std::vector<Vec> alpha_chain(const ParabolicDatum& p, const WeylElement& rep);
bool alpha_chain_relation_holds(const ParabolicDatum& p, const WeylElement& rep,
                                const WeylElement& w_L);

} // namespace weylchar
