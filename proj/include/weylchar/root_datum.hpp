#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylchar/lattice.hpp"

namespace weylchar {

// A root datum for a split reductive group, stored over fixed dual bases of
// the character and cocharacter lattices, so that the canonical pairing is
// the integer dot product.
//
// Supported constructions:
//   gl<n>      GL_n: character lattice Z^n with basis e_1..e_n, simple roots
//              e_i - e_{i+1}, theta = (n-1, n-2, ..., 0).
//   gsp4       GSp_4 with rank-3 torus: characters generated by e_1, e_2
//              (diagonal entries) and e_0 (similitude factor), coordinates
//              ordered (e_1, e_2, e_0).  Simple roots
//              alpha_1 = e_1 - e_2 (short), alpha_2 = 2 e_2 - e_0 (long),
//              Cartan matrix of type C2, theta = (2, 1, 0).  Any convention
//              with connected center and type C2 Cartan matrix would do; this
//              one is fixed for reproducibility.
//   sc-<t><r>  simply connected semisimple group of type t in {a,b,c,d,f,g}:
//              character lattice = weight lattice with the fundamental
//              weights as basis, cocharacter lattice = coroot lattice with
//              the simple coroots as basis.  Fundamental coweights exist in
//              the cocharacter lattice only when det(Cartan) = 1 (types G2
//              and F4); otherwise they are marked unavailable and operations
//              requiring them raise CapabilityError.
//   g2         alias for sc-g2; its (trivial) center is connected, so it
//              counts as a connected-center datum.
//   glAxglB... direct products of GL blocks, e.g. gl2xgl2.  Used for root
//              systems like A1 x A1 that admit no connected-center datum of
//              semisimple rank equal to the torus rank.
//
// G2 convention: alpha_1 = alpha is short, alpha_2 = beta is long, so
// <beta, alpha^vee> = -3 and <alpha, beta^vee> = -1.
enum class DatumKind { GL, GSp4, SimplyConnected, GLProduct };

struct Root {
    Vec coords;        // character-lattice coordinates
    Vec simple_coords; // coordinates over Delta; nonnegative for positive roots
};

class RootDatum {
public:
    int rank() const { return rank_; }
    int num_simple() const { return static_cast<int>(simple_pos_index_.size()); }
    int num_positive() const { return static_cast<int>(positive_.size()); }

    DatumKind kind() const { return kind_; }
    const std::string& name() const { return name_; }
    bool connected_center() const { return connected_center_; }

    const Root& positive_root(int k) const { return positive_.at(k); }
    const Vec& coroot(int k) const { return coroots_.at(k); }
    int simple_pos_index(int i) const { return simple_pos_index_.at(i); }
    const Vec& simple_root(int i) const { return positive_.at(simple_pos_index_.at(i)).coords; }
    const Vec& simple_coroot(int i) const { return coroots_.at(simple_pos_index_.at(i)); }

    const Vec& theta() const { return theta_; }
    bool coweights_available() const { return !coweights_.empty(); }
    // Fundamental coweight of the i-th simple root; CapabilityError when the
    // datum does not carry them.
    const Vec& fundamental_coweight(int i) const;

    Int pairing(const Vec& mu, const Vec& lam) const;
    // <alpha_j, alpha_i^vee> for simple roots.
    Int cartan(int i, int j) const { return dot(simple_root(j), simple_coroot(i)); }

    // Positive-root lookup by character coordinates: (index, sign) where sign
    // is +1 for a positive root and -1 for its negative; nullopt if the
    // vector is not a root.
    std::optional<std::pair<int, int>> lookup_root(const Vec& coords) const;
    bool is_root(const Vec& coords) const { return lookup_root(coords).has_value(); }
    bool is_positive_root(const Vec& coords) const;
    // Index of a positive root; ConfigError if not a positive root.
    int positive_root_index(const Vec& coords) const;

    const Mat& simple_reflection_char(int i) const { return refl_char_.at(i); }
    const Mat& simple_reflection_cochar(int i) const { return refl_cochar_.at(i); }
    // Reflection s_gamma for an arbitrary positive root gamma.
    Mat reflection_char(int pos_index) const;
    Mat reflection_cochar(int pos_index) const;

    friend RootDatum build_from_spec(DatumKind kind, std::string name, int rank,
                                     std::vector<Vec> simple_roots, std::vector<Vec> simple_coroots,
                                     Vec theta, std::vector<Vec> coweights, bool connected_center);

private:
    RootDatum() = default;
    void generate_roots(const std::vector<Vec>& simple_roots,
                        const std::vector<Vec>& simple_coroots);
    void validate() const;

    int rank_ = 0;
    DatumKind kind_ = DatumKind::GL;
    std::string name_;
    bool connected_center_ = false;

    std::vector<Root> positive_;
    std::vector<Vec> coroots_;            // aligned with positive_
    std::vector<int> simple_pos_index_;   // simple i -> index in positive_
    std::map<Vec, int> pos_by_coords_;

    Vec theta_;
    std::vector<Vec> coweights_;          // empty when unavailable

    std::vector<Mat> refl_char_, refl_cochar_;
};

RootDatum build_gl(int n);
RootDatum build_gsp4();
RootDatum build_simply_connected(char type, int rank);
RootDatum build_g2();
RootDatum build_gl_product(const std::vector<int>& blocks);

// Parses "gl3", "gsp4", "g2", "sc-b3", "gl2xgl2", ...
RootDatum build_datum_from_name(const std::string& name);

// Smallest superset of `seed` (positive-root indices) closed under
// "alpha, beta in S and alpha + beta a positive root => alpha + beta in S".
std::vector<int> positive_roots_closure(const RootDatum& datum, std::vector<int> seed);

} // namespace weylchar
