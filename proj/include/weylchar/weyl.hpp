#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "weylchar/root_datum.hpp"

namespace weylchar {

constexpr std::size_t kDefaultWeylCap = 1'000'000;

// An element of the Weyl group as a pair of pairing-preserving lattice
// automorphisms.  Equality is equality of the character-lattice matrix; the
// reduced word is a cache, recomputed as the lexicographically least reduced
// word whenever an element is formed.  Word convention: word() = [i1,...,iL]
// means w = s_{i1} s_{i2} ... s_{iL} as a product of simple reflections,
// applied right to left on lattice vectors.
class WeylElement {
public:
    static WeylElement identity(const RootDatum& d);
    static WeylElement simple_reflection(const RootDatum& d, int i);
    static WeylElement reflection(const RootDatum& d, int pos_root_index);
    static WeylElement from_word(const RootDatum& d, const std::vector<int>& word);

    WeylElement times(const WeylElement& o) const;
    WeylElement inverse() const;

    int length() const { return static_cast<int>(word_.size()); }
    const std::vector<int>& word() const { return word_; }
    const Mat& char_matrix() const { return char_; }
    const Mat& cochar_matrix() const { return cochar_; }
    const RootDatum& datum() const { return *datum_; }

    Vec act_char(const Vec& v) const { return char_.apply(v); }
    Vec act_cochar(const Vec& v) const { return cochar_.apply(v); }
    // w^{-1} actions; no inversion needed because the pairing forces
    // char(w^{-1}) = cochar(w)^T and cochar(w^{-1}) = char(w)^T.
    Vec act_char_inverse(const Vec& v) const { return cochar_.apply_transposed(v); }
    Vec act_cochar_inverse(const Vec& v) const { return char_.apply_transposed(v); }

    bool is_identity() const { return word_.empty(); }
    bool operator==(const WeylElement& o) const { return datum_ == o.datum_ && char_ == o.char_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    // (length, word) lexicographic; the canonical order of every listing.
    static bool canonical_less(const WeylElement& a, const WeylElement& b);

private:
    WeylElement(const RootDatum* d, Mat c, Mat cc) : datum_(d), char_(std::move(c)), cochar_(std::move(cc)) {
        canonicalize();
    }
    void canonicalize();

    const RootDatum* datum_ = nullptr;
    Mat char_, cochar_;
    std::vector<int> word_;
};

// All of W, each element once, sorted by (length, canonical word).
// BoundError when |W| would exceed cap.
std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::size_t cap = kDefaultWeylCap);

// Subgroup generated by the given simple reflections, canonical order.
std::vector<WeylElement> generate_subgroup(const RootDatum& d, const std::vector<int>& simple_gens,
                                           std::size_t cap = kDefaultWeylCap);

WeylElement longest_element(const RootDatum& d);

// {alpha in Phi+ : w(alpha) in Phi-} and its complement, as positive-root
// indices in canonical root order.
std::vector<int> inversion_roots(const WeylElement& w);
std::vector<int> n_w_roots(const WeylElement& w);

// Bruhat order via the lifting property on the canonical reduced word of w.
bool bruhat_leq(const WeylElement& u, const WeylElement& w);

// All reduced words of w (each as a word in the convention above).
std::vector<std::vector<int>> all_reduced_words(const WeylElement& w, std::size_t cap = 100'000);

struct ParabolicDatum {
    const RootDatum* datum = nullptr;
    std::vector<int> delta_L;      // simple indices, sorted
    std::vector<int> phi_L_pos;    // positive-root indices spanned by delta_L
    std::vector<int> delta_L_perp; // simple roots orthogonal to all of delta_L

    bool contains_simple(int i) const;
    bool levi_contains_positive(int k) const;
};

ParabolicDatum make_parabolic(const RootDatum& d, std::vector<int> delta_L);

// Minimal-length representatives of the left cosets W / W_L, canonical order.
std::vector<WeylElement> kostant_representatives(const ParabolicDatum& p,
                                                 std::size_t cap = kDefaultWeylCap);

// Unique factorization w = w_tilde * w_L with additive lengths.
std::pair<WeylElement, WeylElement> kostant_decompose(const WeylElement& w, const ParabolicDatum& p);

// Exhaustive check that w' <= w implies proj(w') <= proj(w) for the Kostant
// projection.
bool bruhat_projection_monotone(const ParabolicDatum& p, std::size_t cap = kDefaultWeylCap);

// Root-set identities attached to the factorization w = w_tilde * w_L:
// the [BT72 3.9(iii)] characterization and the semidirect partition of the
// non-inverted roots.
bool kostant_characterization_holds(const WeylElement& w, const ParabolicDatum& p);
bool semidirect_partition_holds(const WeylElement& w, const ParabolicDatum& p);

} // namespace weylchar
