#include "weylchar/closed_roots.hpp"

#include <algorithm>

namespace weylchar {

bool is_closed(const RootDatum& d, const std::vector<int>& subset) {
    for (int k : subset)
        if (k < 0 || k >= d.num_positive()) throw ConfigError("subset element is not a positive root");
    for (std::size_t i = 0; i < subset.size(); ++i)
        for (std::size_t j = i; j < subset.size(); ++j) {
            Vec s = add(d.positive_root(subset[i]).coords, d.positive_root(subset[j]).coords);
            auto hit = d.lookup_root(s);
            if (hit && hit->second > 0 &&
                !std::count(subset.begin(), subset.end(), hit->first))
                return false;
        }
    return true;
}

ClosedRootSubset make_closed(const RootDatum& d, std::vector<int> subset) {
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    if (!is_closed(d, subset))
        throw ConfigError("subset is not closed under root addition");
    return ClosedRootSubset{std::move(subset)};
}

bool in_w_psi(const WeylElement& w, const ClosedRootSubset& psi) {
    const RootDatum& d = w.datum();
    for (int k : psi.roots) {
        auto img = d.lookup_root(w.act_char(d.positive_root(k).coords));
        if (!img || img->second < 0) return false;
    }
    return true;
}

std::vector<WeylElement> w_psi_set(const std::vector<WeylElement>& weyl, const ClosedRootSubset& psi) {
    std::vector<WeylElement> out;
    for (const auto& w : weyl)
        if (in_w_psi(w, psi)) out.push_back(w);
    return out;
}

std::vector<WeylElement> w_psi_set(const RootDatum& d, const ClosedRootSubset& psi, std::size_t cap) {
    return w_psi_set(enumerate_weyl(d, cap), psi);
}

std::vector<int> delta_cap(const WeylElement& w_psi, const ClosedRootSubset& psi) {
    if (!in_w_psi(w_psi, psi)) throw ConfigError("element does not map Psi into the positive roots");
    const RootDatum& d = w_psi.datum();
    std::vector<int> out;
    for (int i = 0; i < d.num_simple(); ++i) {
        for (int k : psi.roots) {
            Vec img = w_psi.act_char(d.positive_root(k).coords);
            if (img == d.simple_root(i)) {
                out.push_back(i);
                break;
            }
        }
    }
    return out;
}

std::vector<std::vector<int>> orthogonal_subsets(const RootDatum& d, const std::vector<int>& simples) {
    for (int i : simples)
        if (i < 0 || i >= d.num_simple()) throw ConfigError("simple index out of range");
    std::vector<std::vector<int>> out;
    const std::size_t n = simples.size();
    if (n > 20) throw BoundError("too many simple roots for subset enumeration");
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> sel;
        for (std::size_t b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) sel.push_back(simples[b]);
        bool orth = true;
        for (std::size_t a = 0; a < sel.size() && orth; ++a)
            for (std::size_t b = a + 1; b < sel.size() && orth; ++b)
                if (dot(d.simple_root(sel[a]), d.simple_coroot(sel[b])) != 0) orth = false;
        if (orth) {
            std::sort(sel.begin(), sel.end());
            out.push_back(std::move(sel));
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

bool verify_I_identity(const RootDatum& d, const ClosedRootSubset& psi, const WeylElement& w_psi,
                       const std::vector<int>& I) {
    WeylElement w = w_psi;
    for (int i : I) w = WeylElement::simple_reflection(d, i).times(w);
    std::vector<int> cap;
    for (int i = 0; i < d.num_simple(); ++i) {
        for (int k : psi.roots) {
            Vec img = w.act_char(neg(d.positive_root(k).coords));
            if (img == d.simple_root(i)) {
                cap.push_back(i);
                break;
            }
        }
    }
    std::vector<int> I_sorted = I;
    std::sort(I_sorted.begin(), I_sorted.end());
    return cap == I_sorted;
}

std::vector<ClosedRootSubset> enumerate_closed_subsets(const RootDatum& d, int max_roots) {
    const int n = d.num_positive();
    if (n > max_roots) throw BoundError("too many positive roots for closed-subset enumeration");
    std::vector<ClosedRootSubset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<int> sel;
        for (int b = 0; b < n; ++b)
            if (mask & (std::size_t{1} << b)) sel.push_back(b);
        if (is_closed(d, sel)) out.push_back(ClosedRootSubset{std::move(sel)});
    }
    std::sort(out.begin(), out.end(), [](const ClosedRootSubset& a, const ClosedRootSubset& b) {
        if (a.roots.size() != b.roots.size()) return a.roots.size() < b.roots.size();
        return a.roots < b.roots;
    });
    return out;
}

} // namespace weylchar
