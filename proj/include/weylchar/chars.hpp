#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "weylchar/root_datum.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

// A smooth character Q_p^* -> F_q^*.  It is the finite datum
// (value at p, exponent on the Teichmueller units): x maps to
// value_at_p^{val(x)} * omega(x)^e with omega reduction of the units.
// F_q^* is cyclic, and every operation on these characters is multiplicative,
// so the value at p is stored as a discrete logarithm in Z/(q-1) with respect
// to a fixed generator g of F_q^* (for q = p, the smallest primitive root
// mod p).  The unit exponent e lives in Z/(p-1) because smooth characters of
// Z_p^* with prime-to-p values factor through F_p^*.
struct SmoothCharQp {
    Int p = 0;
    Int q = 0;
    Int val = 0; // dlog of the value at p, in Z/(q-1)
    Int e = 0;   // unit exponent, in Z/(p-1)

    static SmoothCharQp one(Int p, Int q) { return {p, q, 0, 0}; }
    // omega itself: trivial at p (epsilon(p) = 1 over Q_p), exponent 1 on units.
    static SmoothCharQp omega(Int p, Int q) { return {p, q, 0, 1}; }

    SmoothCharQp times(const SmoothCharQp& o) const;
    SmoothCharQp inverse() const;
    SmoothCharQp pow(Int n) const;
    bool trivial() const { return val == 0 && e == 0; }
    bool operator==(const SmoothCharQp& o) const {
        return p == o.p && q == o.q && val == o.val && e == o.e;
    }
    bool operator!=(const SmoothCharQp& o) const { return !(*this == o); }
};

bool is_prime(Int n);
Int smallest_primitive_root(Int p);
// Discrete log of residue mod p with respect to smallest_primitive_root(p).
Int dlog_mod_p(Int p, Int residue);

// A smooth character of T(Q_p), one SmoothCharQp per cocharacter basis
// vector.  chi composed with any cocharacter lambda is the Z-linear
// combination of the components.
class TorusCharacter {
public:
    TorusCharacter(const RootDatum& d, Int p, Int q, std::vector<SmoothCharQp> comps);
    static TorusCharacter trivial(const RootDatum& d, Int p, Int q);
    static TorusCharacter unramified(const RootDatum& d, Int p, Int q, const std::vector<Int>& val_dlogs);

    const RootDatum& datum() const { return *datum_; }
    Int p() const { return p_; }
    Int q() const { return q_; }
    const std::vector<SmoothCharQp>& components() const { return comps_; }

    SmoothCharQp compose(const Vec& lam) const;
    SmoothCharQp compose_coroot(int pos_root_index) const;

    TorusCharacter times(const TorusCharacter& o) const;
    TorusCharacter inverse() const;

    bool operator==(const TorusCharacter& o) const;
    bool operator!=(const TorusCharacter& o) const { return !(*this == o); }

private:
    const RootDatum* datum_;
    Int p_, q_;
    std::vector<SmoothCharQp> comps_;
};

// w(chi): t -> chi(w^{-1} t w), i.e. (w(chi)) o lambda = chi o (w^{-1} lambda).
TorusCharacter weyl_act(const WeylElement& w, const TorusCharacter& chi);
// chi^w: lambda -> chi(w lambda); equals w^{-1}(chi).
TorusCharacter conj_by(const TorusCharacter& chi, const WeylElement& w);
// omega o mu for a character-lattice vector mu.
TorusCharacter omega_twist(const RootDatum& d, Int p, Int q, const Vec& mu);

enum class Genericity { not_weakly_generic, weakly_generic, generic, strongly_generic };
const char* to_string(Genericity g);

bool is_weakly_generic(const TorusCharacter& chi);
bool is_generic(const TorusCharacter& chi);
// Strongest applicable label; the strong test is exhaustive over W.
Genericity genericity(const TorusCharacter& chi, const std::vector<WeylElement>& weyl);
Genericity genericity(const TorusCharacter& chi, std::size_t cap = kDefaultWeylCap);

// Checks (s_alpha(chi) != chi) <=> (chi o alpha^vee != 1) over all of Phi+.
// Requires a connected-center datum.
bool generic_iff_coroot(const TorusCharacter& chi);

// (chi * w(chi)^{-1}) o lambda, computed as chi o (lambda - w^{-1} lambda)
// and cross-checked against the telescoped form along the canonical word.
SmoothCharQp ratio_on_coweight(const TorusCharacter& chi, const WeylElement& w, const Vec& lam);

// Criteria under which w(chi) != chi is forced, checked over all reduced
// decompositions of w (hypotheses are existential over decompositions):
//   first_letter: some reduced word w = s_n...s_1 has s_1 = s_alpha occurring
//                 exactly once, with chi o alpha^vee != 1;
//   unique_letter: chi generic and some reduced word has a letter occurring
//                 exactly once;
//   short_word:   chi generic and 1 <= l(w) <= 5.
// The identity element never satisfies the hypotheses.  When a criterion
// applies, the conclusion is also verified by direct computation.
enum class LemmaMode { first_letter, unique_letter, short_word };
enum class LemmaVerdict { hypotheses_not_met, predicted_distinct };
struct LemmaResult {
    LemmaVerdict verdict;
    bool verified_distinct = false;
};
LemmaResult distinctness_criterion(const TorusCharacter& chi, const WeylElement& w, LemmaMode mode);

// The order-two G2 character with component (value_at_p, e) on a cocharacter
// lambda equal to ((-1)^{<alpha,lambda>}, <beta,lambda>*(p-1)/2), alpha the
// short and beta the long simple root.  Requires p odd; q = p.
TorusCharacter quadratic_g2_character(const RootDatum& g2, Int p);

// Every character of the datum's torus over F_q, component-major
// lexicographic in (val, e).  (q-1)(p-1) choices per component.
std::vector<TorusCharacter> enumerate_characters(const RootDatum& d, Int p, Int q);

} // namespace weylchar
