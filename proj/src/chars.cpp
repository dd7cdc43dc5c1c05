#include "weylchar/chars.hpp"

#include <algorithm>

namespace weylchar {

namespace {

Int mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

void require_same_field(const SmoothCharQp& a, const SmoothCharQp& b) {
    if (a.p != b.p || a.q != b.q) throw ConfigError("smooth characters over different fields");
}

} // namespace

SmoothCharQp SmoothCharQp::times(const SmoothCharQp& o) const {
    require_same_field(*this, o);
    return {p, q, mod(val + o.val, q - 1), mod(e + o.e, p - 1)};
}

SmoothCharQp SmoothCharQp::inverse() const { return {p, q, mod(-val, q - 1), mod(-e, p - 1)}; }

SmoothCharQp SmoothCharQp::pow(Int n) const {
    return {p, q, mod(val * n, q - 1), mod(e * n, p - 1)};
}

bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Int smallest_primitive_root(Int p) {
    if (!is_prime(p)) throw ConfigError("p must be prime");
    if (p == 2) return 1;
    Int order = p - 1;
    std::vector<Int> prime_factors;
    Int m = order;
    for (Int d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (Int g = 2; g < p; ++g) {
        bool ok = true;
        for (Int f : prime_factors) {
            Int e = order / f, acc = 1, base = g;
            while (e) {
                if (e & 1) acc = acc * base % p;
                base = base * base % p;
                e >>= 1;
            }
            if (acc == 1) ok = false;
        }
        if (ok) return g;
    }
    throw CheckError("no primitive root found");
}

Int dlog_mod_p(Int p, Int residue) {
    residue = mod(residue, p);
    if (residue == 0) throw ConfigError("discrete log of 0");
    Int g = smallest_primitive_root(p);
    Int acc = 1;
    for (Int k = 0; k < p - 1; ++k) {
        if (acc == residue) return k;
        acc = acc * g % p;
    }
    throw CheckError("discrete log not found");
}

TorusCharacter::TorusCharacter(const RootDatum& d, Int p, Int q, std::vector<SmoothCharQp> comps)
    : datum_(&d), p_(p), q_(q), comps_(std::move(comps)) {
    if (!is_prime(p)) throw ConfigError("p must be prime");
    Int qq = q;
    while (qq > 1 && qq % p == 0) qq /= p;
    if (qq != 1 || q < p) throw ConfigError("q must be a power of p");
    if (static_cast<int>(comps_.size()) != d.rank())
        throw ConfigError("torus character needs one component per cocharacter basis vector");
    for (auto& c : comps_) {
        if (c.p != p || c.q != q) throw ConfigError("component field mismatch");
        c.val = mod(c.val, q - 1);
        c.e = mod(c.e, p - 1);
    }
}

TorusCharacter TorusCharacter::trivial(const RootDatum& d, Int p, Int q) {
    return TorusCharacter(d, p, q, std::vector<SmoothCharQp>(d.rank(), SmoothCharQp::one(p, q)));
}

TorusCharacter TorusCharacter::unramified(const RootDatum& d, Int p, Int q,
                                          const std::vector<Int>& val_dlogs) {
    if (static_cast<int>(val_dlogs.size()) != d.rank())
        throw ConfigError("unramified character needs rank many values");
    std::vector<SmoothCharQp> comps;
    for (Int v : val_dlogs) comps.push_back({p, q, mod(v, q - 1), 0});
    return TorusCharacter(d, p, q, std::move(comps));
}

SmoothCharQp TorusCharacter::compose(const Vec& lam) const {
    if (static_cast<int>(lam.size()) != datum_->rank())
        throw ConfigError("compose: cocharacter of wrong rank");
    SmoothCharQp acc = SmoothCharQp::one(p_, q_);
    for (std::size_t i = 0; i < comps_.size(); ++i)
        acc = acc.times(comps_[i].pow(lam[i]));
    return acc;
}

SmoothCharQp TorusCharacter::compose_coroot(int pos_root_index) const {
    return compose(datum_->coroot(pos_root_index));
}

TorusCharacter TorusCharacter::times(const TorusCharacter& o) const {
    if (datum_ != o.datum_ || p_ != o.p_ || q_ != o.q_)
        throw ConfigError("torus character multiply: mismatched datum or field");
    std::vector<SmoothCharQp> comps;
    for (std::size_t i = 0; i < comps_.size(); ++i) comps.push_back(comps_[i].times(o.comps_[i]));
    return TorusCharacter(*datum_, p_, q_, std::move(comps));
}

TorusCharacter TorusCharacter::inverse() const {
    std::vector<SmoothCharQp> comps;
    for (const auto& c : comps_) comps.push_back(c.inverse());
    return TorusCharacter(*datum_, p_, q_, std::move(comps));
}

bool TorusCharacter::operator==(const TorusCharacter& o) const {
    return datum_ == o.datum_ && p_ == o.p_ && q_ == o.q_ && comps_ == o.comps_;
}

TorusCharacter weyl_act(const WeylElement& w, const TorusCharacter& chi) {
    if (&w.datum() != &chi.datum()) throw ConfigError("weyl_act: datum mismatch");
    const int r = chi.datum().rank();
    std::vector<SmoothCharQp> comps;
    comps.reserve(r);
    for (int i = 0; i < r; ++i) {
        Vec e(r, 0);
        e[i] = 1;
        comps.push_back(chi.compose(w.act_cochar_inverse(e)));
    }
    return TorusCharacter(chi.datum(), chi.p(), chi.q(), std::move(comps));
}

TorusCharacter conj_by(const TorusCharacter& chi, const WeylElement& w) {
    if (&w.datum() != &chi.datum()) throw ConfigError("conj_by: datum mismatch");
    const int r = chi.datum().rank();
    std::vector<SmoothCharQp> comps;
    comps.reserve(r);
    for (int i = 0; i < r; ++i) {
        Vec e(r, 0);
        e[i] = 1;
        comps.push_back(chi.compose(w.act_cochar(e)));
    }
    return TorusCharacter(chi.datum(), chi.p(), chi.q(), std::move(comps));
}

TorusCharacter omega_twist(const RootDatum& d, Int p, Int q, const Vec& mu) {
    if (static_cast<int>(mu.size()) != d.rank()) throw ConfigError("omega_twist: wrong rank");
    std::vector<SmoothCharQp> comps;
    for (int i = 0; i < d.rank(); ++i) comps.push_back({p, q, 0, mod(mu[i], p - 1)});
    return TorusCharacter(d, p, q, std::move(comps));
}

const char* to_string(Genericity g) {
    switch (g) {
    case Genericity::not_weakly_generic: return "not_weakly_generic";
    case Genericity::weakly_generic: return "weakly_generic";
    case Genericity::generic: return "generic";
    case Genericity::strongly_generic: return "strongly_generic";
    }
    return "?";
}

namespace {

bool moved_by_reflection(const TorusCharacter& chi, int pos_root_index) {
    WeylElement s = WeylElement::reflection(chi.datum(), pos_root_index);
    return weyl_act(s, chi) != chi;
}

} // namespace

bool is_weakly_generic(const TorusCharacter& chi) {
    const RootDatum& d = chi.datum();
    for (int i = 0; i < d.num_simple(); ++i)
        if (!moved_by_reflection(chi, d.simple_pos_index(i))) return false;
    return true;
}

bool is_generic(const TorusCharacter& chi) {
    const RootDatum& d = chi.datum();
    for (int k = 0; k < d.num_positive(); ++k)
        if (!moved_by_reflection(chi, k)) return false;
    return true;
}

Genericity genericity(const TorusCharacter& chi, const std::vector<WeylElement>& weyl) {
    if (!is_weakly_generic(chi)) return Genericity::not_weakly_generic;
    if (!is_generic(chi)) return Genericity::weakly_generic;
    for (const WeylElement& w : weyl) {
        if (w.is_identity()) continue;
        if (weyl_act(w, chi) == chi) return Genericity::generic;
    }
    return Genericity::strongly_generic;
}

Genericity genericity(const TorusCharacter& chi, std::size_t cap) {
    if (!is_weakly_generic(chi)) return Genericity::not_weakly_generic;
    if (!is_generic(chi)) return Genericity::weakly_generic;
    return genericity(chi, enumerate_weyl(chi.datum(), cap));
}

bool generic_iff_coroot(const TorusCharacter& chi) {
    const RootDatum& d = chi.datum();
    if (!d.connected_center())
        throw CapabilityError("generic_iff_coroot needs a connected-center datum, got " + d.name());
    for (int k = 0; k < d.num_positive(); ++k) {
        bool moved = moved_by_reflection(chi, k);
        bool coroot_nontrivial = !chi.compose_coroot(k).trivial();
        if (moved != coroot_nontrivial) return false;
    }
    return true;
}

SmoothCharQp ratio_on_coweight(const TorusCharacter& chi, const WeylElement& w, const Vec& lam) {
    const RootDatum& d = chi.datum();
    Vec diff = sub(lam, w.act_cochar_inverse(lam));

    // Telescoped form along the canonical word: with w = s_n ... s_1,
    // lambda - w^{-1} lambda = sum_k s_1 ... s_{k-1} (lambda - s_k lambda).
    Vec tele(d.rank(), 0);
    WeylElement prefix = WeylElement::identity(d);
    const auto& word = w.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        WeylElement s = WeylElement::simple_reflection(d, *it);
        tele = add(tele, prefix.act_cochar(sub(lam, s.act_cochar(lam))));
        prefix = prefix.times(s);
    }
    if (tele != diff) throw CheckError("telescoping identity failed");

    SmoothCharQp out = chi.compose(diff);
    if (out != chi.times(weyl_act(w, chi).inverse()).compose(lam))
        throw CheckError("ratio_on_coweight disagrees with the direct Weyl-action ratio");
    return out;
}

LemmaResult distinctness_criterion(const TorusCharacter& chi, const WeylElement& w, LemmaMode mode) {
    LemmaResult res{LemmaVerdict::hypotheses_not_met, false};
    if (w.is_identity()) return res;

    bool hyp = false;
    switch (mode) {
    case LemmaMode::short_word:
        hyp = w.length() <= 5 && is_generic(chi);
        break;
    case LemmaMode::unique_letter: {
        if (!is_generic(chi)) break;
        for (const auto& word : all_reduced_words(w)) {
            std::vector<int> count(chi.datum().num_simple(), 0);
            for (int i : word) ++count[i];
            for (int i : word)
                if (count[i] == 1) hyp = true;
            if (hyp) break;
        }
        break;
    }
    case LemmaMode::first_letter: {
        for (const auto& word : all_reduced_words(w)) {
            int first_applied = word.back(); // rightmost factor acts first
            std::vector<int> count(chi.datum().num_simple(), 0);
            for (int i : word) ++count[i];
            if (count[first_applied] != 1) continue;
            int pos = chi.datum().simple_pos_index(first_applied);
            if (!chi.compose_coroot(pos).trivial()) {
                hyp = true;
                break;
            }
        }
        break;
    }
    }
    if (!hyp) return res;
    res.verdict = LemmaVerdict::predicted_distinct;
    res.verified_distinct = (weyl_act(w, chi) != chi);
    if (!res.verified_distinct)
        throw CheckError("distinctness criterion predicted w(chi) != chi but equality holds");
    return res;
}

TorusCharacter quadratic_g2_character(const RootDatum& g2, Int p) {
    if (g2.name() != "g2") throw CapabilityError("this character lives on the g2 datum");
    if (p == 2) throw ConfigError("p must be odd");
    if (!is_prime(p)) throw ConfigError("p must be prime");
    const Int q = p;
    const Vec& alpha = g2.simple_root(0); // short
    const Vec& beta = g2.simple_root(1);  // long
    std::vector<SmoothCharQp> comps;
    for (int i = 0; i < g2.rank(); ++i) {
        // component on the i-th cocharacter basis vector
        Int val = ((q - 1) / 2 * alpha[i]) % (q - 1);
        Int e = ((p - 1) / 2 * beta[i]) % (p - 1);
        comps.push_back({p, q, val < 0 ? val + (q - 1) : val, e < 0 ? e + (p - 1) : e});
    }
    return TorusCharacter(g2, p, q, std::move(comps));
}

std::vector<TorusCharacter> enumerate_characters(const RootDatum& d, Int p, Int q) {
    const Int per = (q - 1) * (p - 1);
    const int r = d.rank();
    double total_d = 1;
    for (int i = 0; i < r; ++i) total_d *= static_cast<double>(per);
    if (total_d > 4e6) throw BoundError("character enumeration too large");
    std::vector<TorusCharacter> out;
    std::vector<Int> idx(r, 0);
    while (true) {
        std::vector<SmoothCharQp> comps;
        for (int i = 0; i < r; ++i) comps.push_back({p, q, idx[i] / (p - 1), idx[i] % (p - 1)});
        out.push_back(TorusCharacter(d, p, q, std::move(comps)));
        int k = r - 1;
        while (k >= 0) {
            if (++idx[k] < per) break;
            idx[k] = 0;
            --k;
        }
        if (k < 0) break;
    }
    return out;
}

} // namespace weylchar
