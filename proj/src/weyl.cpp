#include "weylchar/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace weylchar {

namespace {

// Sign of w(alpha_i) read off without forming w(alpha_i) as a root object:
// returns true when the image is a negative root.
bool sends_simple_negative(const RootDatum& d, const Mat& char_mat, int i) {
    Vec img = char_mat.apply(d.simple_root(i));
    auto hit = d.lookup_root(img);
    if (!hit) throw CheckError("Weyl action does not permute the roots");
    return hit->second < 0;
}

} // namespace

WeylElement WeylElement::identity(const RootDatum& d) {
    return WeylElement(&d, Mat::identity(d.rank()), Mat::identity(d.rank()));
}

WeylElement WeylElement::simple_reflection(const RootDatum& d, int i) {
    return WeylElement(&d, d.simple_reflection_char(i), d.simple_reflection_cochar(i));
}

WeylElement WeylElement::reflection(const RootDatum& d, int pos_root_index) {
    return WeylElement(&d, d.reflection_char(pos_root_index), d.reflection_cochar(pos_root_index));
}

WeylElement WeylElement::from_word(const RootDatum& d, const std::vector<int>& word) {
    Mat c = Mat::identity(d.rank()), cc = Mat::identity(d.rank());
    for (int i : word) {
        if (i < 0 || i >= d.num_simple()) throw ConfigError("word letter out of range");
        c = c.mul(d.simple_reflection_char(i));
        cc = cc.mul(d.simple_reflection_cochar(i));
    }
    return WeylElement(&d, std::move(c), std::move(cc));
}

WeylElement WeylElement::times(const WeylElement& o) const {
    if (datum_ != o.datum_) throw ConfigError("Weyl multiply: elements of different data");
    return WeylElement(datum_, char_.mul(o.char_), cochar_.mul(o.cochar_));
}

WeylElement WeylElement::inverse() const {
    // The pairing identity char(w)^T cochar(w) = Id gives the inverse by
    // transposition.
    return WeylElement(datum_, cochar_.transposed(), char_.transposed());
}

void WeylElement::canonicalize() {
    word_.clear();
    const RootDatum& d = *datum_;
    Mat c = char_, cc = cochar_;
    const Mat id = Mat::identity(d.rank());
    while (c != id) {
        // Smallest left descent: l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0.
        int pick = -1;
        for (int i = 0; i < d.num_simple(); ++i) {
            Vec img = cc.apply_transposed(d.simple_root(i));
            auto hit = d.lookup_root(img);
            if (!hit) throw CheckError("Weyl action does not permute the roots");
            if (hit->second < 0) {
                pick = i;
                break;
            }
        }
        if (pick < 0) throw CheckError("non-identity Weyl element with no left descent");
        word_.push_back(pick);
        c = d.simple_reflection_char(pick).mul(c);
        cc = d.simple_reflection_cochar(pick).mul(cc);
        if (word_.size() > 4096) throw CheckError("canonicalization did not terminate");
    }
}

bool WeylElement::canonical_less(const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.word_ < b.word_;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::size_t cap) {
    std::vector<WeylElement> out;
    std::map<std::vector<Int>, int> seen;
    std::deque<WeylElement> queue;
    queue.push_back(WeylElement::identity(d));
    while (!queue.empty()) {
        WeylElement w = std::move(queue.front());
        queue.pop_front();
        if (!seen.emplace(w.char_matrix().a, 0).second) continue;
        if (out.size() + 1 > cap) throw BoundError("Weyl enumeration cap exceeded");
        for (int i = 0; i < d.num_simple(); ++i)
            queue.push_back(w.times(WeylElement::simple_reflection(d, i)));
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), WeylElement::canonical_less);
    return out;
}

std::vector<WeylElement> generate_subgroup(const RootDatum& d, const std::vector<int>& simple_gens,
                                           std::size_t cap) {
    std::vector<WeylElement> out;
    std::map<std::vector<Int>, int> seen;
    std::deque<WeylElement> queue;
    queue.push_back(WeylElement::identity(d));
    while (!queue.empty()) {
        WeylElement w = std::move(queue.front());
        queue.pop_front();
        if (!seen.emplace(w.char_matrix().a, 0).second) continue;
        if (out.size() + 1 > cap) throw BoundError("Weyl subgroup enumeration cap exceeded");
        for (int i : simple_gens)
            queue.push_back(w.times(WeylElement::simple_reflection(d, i)));
        out.push_back(std::move(w));
    }
    std::sort(out.begin(), out.end(), WeylElement::canonical_less);
    return out;
}

WeylElement longest_element(const RootDatum& d) {
    WeylElement w = WeylElement::identity(d);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 0; i < d.num_simple(); ++i) {
            // l(w s_i) > l(w) iff w(alpha_i) > 0.
            if (!sends_simple_negative(d, w.char_matrix(), i)) {
                w = w.times(WeylElement::simple_reflection(d, i));
                moved = true;
                break;
            }
        }
    }
    return w;
}

std::vector<int> inversion_roots(const WeylElement& w) {
    const RootDatum& d = w.datum();
    std::vector<int> out;
    for (int k = 0; k < d.num_positive(); ++k) {
        Vec img = w.act_char(d.positive_root(k).coords);
        auto hit = d.lookup_root(img);
        if (!hit) throw CheckError("Weyl action does not permute the roots");
        if (hit->second < 0) out.push_back(k);
    }
    return out;
}

std::vector<int> n_w_roots(const WeylElement& w) {
    const RootDatum& d = w.datum();
    std::vector<int> out;
    for (int k = 0; k < d.num_positive(); ++k) {
        Vec img = w.act_char(d.positive_root(k).coords);
        auto hit = d.lookup_root(img);
        if (!hit) throw CheckError("Weyl action does not permute the roots");
        if (hit->second > 0) out.push_back(k);
    }
    return out;
}

bool bruhat_leq(const WeylElement& u0, const WeylElement& w0) {
    if (&u0.datum() != &w0.datum()) throw ConfigError("bruhat_leq: elements of different data");
    WeylElement u = u0, w = w0;
    const RootDatum& d = u0.datum();
    while (w.length() > 0) {
        if (u.length() > w.length()) return false;
        int i = w.word().front(); // first letter of the canonical word is a left descent
        WeylElement s = WeylElement::simple_reflection(d, i);
        WeylElement su = s.times(u);
        if (su.length() < u.length()) u = std::move(su);
        w = s.times(w);
    }
    return u.is_identity();
}

namespace {

void reduced_words_rec(const WeylElement& w, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out, std::size_t cap) {
    if (w.is_identity()) {
        std::vector<int> word(acc.rbegin(), acc.rend());
        out.push_back(std::move(word));
        if (out.size() > cap) throw BoundError("too many reduced words");
        return;
    }
    const RootDatum& d = w.datum();
    for (int i = 0; i < d.num_simple(); ++i) {
        // Right descent: l(w s_i) < l(w) iff w(alpha_i) < 0.
        if (sends_simple_negative(d, w.char_matrix(), i)) {
            acc.push_back(i);
            reduced_words_rec(w.times(WeylElement::simple_reflection(d, i)), acc, out, cap);
            acc.pop_back();
        }
    }
}

} // namespace

std::vector<std::vector<int>> all_reduced_words(const WeylElement& w, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    reduced_words_rec(w, acc, out, cap);
    std::sort(out.begin(), out.end());
    return out;
}

bool ParabolicDatum::contains_simple(int i) const {
    return std::binary_search(delta_L.begin(), delta_L.end(), i);
}

bool ParabolicDatum::levi_contains_positive(int k) const {
    return std::binary_search(phi_L_pos.begin(), phi_L_pos.end(), k);
}

ParabolicDatum make_parabolic(const RootDatum& d, std::vector<int> delta_L) {
    std::sort(delta_L.begin(), delta_L.end());
    delta_L.erase(std::unique(delta_L.begin(), delta_L.end()), delta_L.end());
    for (int i : delta_L)
        if (i < 0 || i >= d.num_simple()) throw ConfigError("Levi subset: simple index out of range");

    ParabolicDatum p;
    p.datum = &d;
    p.delta_L = delta_L;
    for (int k = 0; k < d.num_positive(); ++k) {
        const Vec& sc = d.positive_root(k).simple_coords;
        bool in_span = true;
        for (int i = 0; i < d.num_simple(); ++i)
            if (sc[i] != 0 && !std::binary_search(delta_L.begin(), delta_L.end(), i)) in_span = false;
        if (in_span) p.phi_L_pos.push_back(k);
    }
    for (int i = 0; i < d.num_simple(); ++i) {
        if (std::binary_search(delta_L.begin(), delta_L.end(), i)) continue;
        bool orth = true;
        for (int j : delta_L) {
            if (dot(d.simple_root(i), d.simple_coroot(j)) != 0 ||
                dot(d.simple_root(j), d.simple_coroot(i)) != 0)
                orth = false;
        }
        if (orth) p.delta_L_perp.push_back(i);
    }
    return p;
}

std::vector<WeylElement> kostant_representatives(const ParabolicDatum& p, std::size_t cap) {
    std::vector<WeylElement> out;
    for (const WeylElement& w : enumerate_weyl(*p.datum, cap)) {
        bool minimal = true;
        for (int i : p.delta_L)
            if (sends_simple_negative(*p.datum, w.char_matrix(), i)) minimal = false;
        if (minimal) out.push_back(w);
    }
    return out;
}

std::pair<WeylElement, WeylElement> kostant_decompose(const WeylElement& w, const ParabolicDatum& p) {
    if (&w.datum() != p.datum) throw ConfigError("kostant_decompose: datum mismatch");
    const RootDatum& d = *p.datum;
    WeylElement wt = w;
    WeylElement wl = WeylElement::identity(d);
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i : p.delta_L) {
            if (sends_simple_negative(d, wt.char_matrix(), i)) {
                WeylElement s = WeylElement::simple_reflection(d, i);
                wt = wt.times(s);
                wl = s.times(wl);
                moved = true;
                break;
            }
        }
    }
    if (wt.length() + wl.length() != w.length())
        throw CheckError("Kostant factorization lost length additivity");
    return {wt, wl};
}

bool bruhat_projection_monotone(const ParabolicDatum& p, std::size_t cap) {
    auto weyl = enumerate_weyl(*p.datum, cap);
    std::vector<WeylElement> proj;
    proj.reserve(weyl.size());
    for (const auto& w : weyl) proj.push_back(kostant_decompose(w, p).first);
    for (std::size_t a = 0; a < weyl.size(); ++a)
        for (std::size_t b = 0; b < weyl.size(); ++b)
            if (bruhat_leq(weyl[a], weyl[b]) && !bruhat_leq(proj[a], proj[b])) return false;
    return true;
}

bool kostant_characterization_holds(const WeylElement& w, const ParabolicDatum& p) {
    auto [wt, wl] = kostant_decompose(w, p);
    (void)wt;
    const RootDatum& d = *p.datum;
    std::set<int> lhs, rhs;
    for (int k : p.phi_L_pos) {
        const Vec& c = d.positive_root(k).coords;
        auto img_l = d.lookup_root(wl.act_char(c));
        if (img_l->second > 0 && p.levi_contains_positive(img_l->first)) lhs.insert(k);
        auto img_w = d.lookup_root(w.act_char(c));
        if (img_w->second > 0) rhs.insert(k);
    }
    return lhs == rhs;
}

bool semidirect_partition_holds(const WeylElement& w, const ParabolicDatum& p) {
    auto [wt, wl] = kostant_decompose(w, p);
    (void)wt;
    const RootDatum& d = *p.datum;
    std::vector<int> kept = n_w_roots(w);
    std::set<int> whole(kept.begin(), kept.end());
    std::set<int> levi_part, nilp_part;
    for (int k : p.phi_L_pos) {
        auto img = d.lookup_root(wl.act_char(d.positive_root(k).coords));
        if (img->second > 0 && p.levi_contains_positive(img->first)) levi_part.insert(k);
    }
    for (int k = 0; k < d.num_positive(); ++k) {
        if (p.levi_contains_positive(k)) continue;
        auto img = d.lookup_root(w.act_char(d.positive_root(k).coords));
        if (img->second > 0) nilp_part.insert(k);
    }
    std::set<int> join = levi_part;
    for (int k : nilp_part)
        if (!join.insert(k).second) return false; // parts must be disjoint
    return join == whole;
}

} // namespace weylchar
