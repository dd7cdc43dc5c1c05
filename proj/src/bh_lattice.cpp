#include "weylchar/bh_lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace weylchar {

const char* to_string(HypothesisRegime r) {
    switch (r) {
    case HypothesisRegime::generic: return "generic";
    case HypothesisRegime::weak_coroot: return "weak_coroot";
    case HypothesisRegime::unmet: return "unmet";
    }
    return "?";
}

const char* to_string(DistinctnessVerdict v) {
    switch (v) {
    case DistinctnessVerdict::holds: return "holds";
    case DistinctnessVerdict::fails: return "fails";
    case DistinctnessVerdict::hypotheses_not_met: return "hypotheses_not_met";
    }
    return "?";
}

bool ext_exists(const std::vector<int>& I, const std::vector<int>& J) {
    std::vector<int> sym;
    std::set_symmetric_difference(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(sym));
    return sym.size() == 1 || sym.empty();
}

namespace {

Constituent make_constituent(const TorusCharacter& chi, const WeylElement& w_psi,
                             std::vector<int> I) {
    const RootDatum& d = chi.datum();
    WeylElement full = w_psi;
    for (int i : I) full = WeylElement::simple_reflection(d, i).times(full);
    TorusCharacter label = weyl_act(full, chi);
    return Constituent{w_psi, std::move(I), std::move(full), std::move(label)};
}

// Weaker hypothesis: chi o alpha^vee != 1 for every alpha in
// w_psi^{-1}(Delta) cap Psi.
bool weak_coroot_condition(const TorusCharacter& chi, const ClosedRootSubset& psi,
                           const WeylElement& w_psi) {
    const RootDatum& d = chi.datum();
    for (int k : psi.roots) {
        Vec img = w_psi.act_char(d.positive_root(k).coords);
        bool maps_to_simple = false;
        for (int i = 0; i < d.num_simple() && !maps_to_simple; ++i)
            if (img == d.simple_root(i)) maps_to_simple = true;
        if (maps_to_simple && chi.compose_coroot(k).trivial()) return false;
    }
    return true;
}

bool global_irreducibility_criterion(const TorusCharacter& chi) {
    SmoothCharQp om = SmoothCharQp::omega(chi.p(), chi.q());
    for (int k = 0; k < chi.datum().num_positive(); ++k) {
        SmoothCharQp c = chi.compose_coroot(k);
        if (c == om || c == om.inverse()) return false;
    }
    return true;
}

} // namespace

BHLattice build_lattice(const TorusCharacter& chi, const ClosedRootSubset& psi,
                        const WeylElement& w_psi, const std::vector<WeylElement>& weyl) {
    if (!in_w_psi(w_psi, psi))
        throw ConfigError("build_lattice: element does not map Psi into the positive roots");

    BHLattice lat{chi, psi, w_psi, {}, {}, {}, HypothesisRegime::unmet, false};
    if (is_generic(chi))
        lat.regime = HypothesisRegime::generic;
    else if (weak_coroot_condition(chi, psi, w_psi))
        lat.regime = HypothesisRegime::weak_coroot;
    lat.irreducibility_criterion = global_irreducibility_criterion(chi);

    std::vector<int> cap = delta_cap(w_psi, psi);
    for (auto& I : orthogonal_subsets(chi.datum(), cap))
        lat.constituents.push_back(make_constituent(chi, w_psi, std::move(I)));

    for (std::size_t a = 0; a < lat.constituents.size(); ++a) {
        lat.socle_degree.push_back(static_cast<int>(lat.constituents[a].I.size()));
        for (std::size_t b = 0; b < lat.constituents.size(); ++b)
            if (ext_exists(lat.constituents[a].I, lat.constituents[b].I))
                lat.ext_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    (void)weyl;
    return lat;
}

std::vector<std::vector<std::uint32_t>> down_closed_families(int n, int max_n) {
    if (n < 0) throw ConfigError("down_closed_families: negative set size");
    if (n > max_n) throw BoundError("down_closed_families: set too large");

    // Elements of the boolean poset in a linear extension (popcount, value).
    std::vector<std::uint32_t> elems;
    for (std::uint32_t m = 0; m < (1u << n); ++m) elems.push_back(m);
    std::sort(elems.begin(), elems.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });

    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> current;
    std::vector<bool> in_family(elems.size(), false);

    // Depth-first over the extension: an element may join only if everything
    // below it already did; exclusion needs no bookkeeping because later
    // supersets fail that test automatically.
    auto rec = [&](auto&& self, std::size_t k) -> void {
        if (k == elems.size()) {
            out.push_back(current);
            return;
        }
        self(self, k + 1); // exclude elems[k]
        bool ok = true;
        for (std::size_t j = 0; j < k && ok; ++j)
            if ((elems[j] & elems[k]) == elems[j] && !in_family[j]) ok = false;
        if (ok) {
            in_family[k] = true;
            current.push_back(elems[k]);
            self(self, k + 1);
            current.pop_back();
            in_family[k] = false;
        }
    };
    rec(rec, 0);

    for (auto& fam : out)
        std::sort(fam.begin(), fam.end(), [](std::uint32_t a, std::uint32_t b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb) return pa < pb;
            return a < b;
        });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

SocleReport pi_psi_socle(const TorusCharacter& chi, const ClosedRootSubset& psi,
                         const std::vector<WeylElement>& weyl) {
    SocleReport rep;
    rep.strongly_generic = (genericity(chi, weyl) == Genericity::strongly_generic);
    for (const WeylElement& w : w_psi_set(weyl, psi))
        rep.factors.push_back(make_constituent(chi, w, {}));
    if (rep.strongly_generic) {
        for (std::size_t a = 0; a < rep.factors.size(); ++a)
            for (std::size_t b = a + 1; b < rep.factors.size(); ++b)
                if (rep.factors[a].label == rep.factors[b].label)
                    throw CheckError("socle factors of a strongly generic character collide");
    }
    return rep;
}

DistinctnessReport distinctness_check(const TorusCharacter& chi, const ClosedRootSubset& psi,
                                      const std::vector<WeylElement>& weyl) {
    DistinctnessReport rep;
    if (genericity(chi, weyl) != Genericity::strongly_generic) return rep;

    std::vector<Constituent> all;
    for (const WeylElement& w : w_psi_set(weyl, psi)) {
        std::vector<int> cap = delta_cap(w, psi);
        for (auto& I : orthogonal_subsets(chi.datum(), cap))
            all.push_back(make_constituent(chi, w, std::move(I)));
    }
    bool labels_distinct = true;
    bool elements_distinct = true;
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            if (all[a].label == all[b].label) labels_distinct = false;
            if (all[a].labeling_element == all[b].labeling_element) elements_distinct = false;
        }
    bool identities = true;
    for (const auto& c : all)
        if (!verify_I_identity(chi.datum(), psi, c.w_psi, c.I)) identities = false;

    rep.verdict = labels_distinct ? DistinctnessVerdict::holds : DistinctnessVerdict::fails;
    rep.identity_route = elements_distinct && identities;
    return rep;
}

std::vector<MultiplicityRow> multiplicity_report(const BHLattice& lat) {
    std::vector<MultiplicityRow> rows;
    for (std::size_t i = 0; i < lat.constituents.size(); ++i)
        rows.push_back(MultiplicityRow{static_cast<int>(i), 1, lat.socle_degree[i]});
    return rows;
}

namespace {

std::string constituent_name(const RootDatum& d, const Constituent& c) {
    std::ostringstream os;
    os << "C(";
    if (c.w_psi.word().empty())
        os << "e";
    else
        for (int i : c.w_psi.word()) os << "s" << (i + 1);
    os << ";";
    if (c.I.empty()) {
        os << "0";
    } else {
        for (std::size_t k = 0; k < c.I.size(); ++k) {
            if (k) os << ",";
            os << "a" << (c.I[k] + 1);
        }
    }
    os << ")";
    (void)d;
    return os.str();
}

std::string family_name(const std::vector<std::uint32_t>& fam, const std::vector<int>& I) {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < fam.size(); ++k) {
        if (k) os << " ";
        if (fam[k] == 0) {
            os << "0";
            continue;
        }
        bool first = true;
        for (std::size_t b = 0; b < I.size(); ++b)
            if (fam[k] & (1u << b)) {
                if (!first) os << "+";
                os << "a" << (I[b] + 1);
                first = false;
            }
    }
    os << "}";
    return os.str();
}

} // namespace

std::string lattice_dot(const BHLattice& lat) {
    std::ostringstream os;
    os << "graph ext_graph {\n";
    for (std::size_t i = 0; i < lat.constituents.size(); ++i)
        os << "  n" << i << " [label=\"" << constituent_name(lat.chi.datum(), lat.constituents[i])
           << "\"];\n";
    for (const auto& [a, b] : lat.ext_edges)
        if (a < b) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

std::string subrep_hasse_dot(const BHLattice& lat, int constituent_index) {
    const auto& I = lat.constituents.at(constituent_index).I;
    auto families = down_closed_families(static_cast<int>(I.size()));
    std::ostringstream os;
    os << "digraph subrep_hasse {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < families.size(); ++i)
        os << "  f" << i << " [label=\"" << family_name(families[i], I) << "\"];\n";
    // cover edges: f -> g when f subset g with |g| = |f| + 1
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = 0; j < families.size(); ++j) {
            if (families[j].size() != families[i].size() + 1) continue;
            bool subset = true;
            for (std::uint32_t m : families[i])
                if (std::find(families[j].begin(), families[j].end(), m) == families[j].end())
                    subset = false;
            if (subset) os << "  f" << i << " -> f" << j << ";\n";
        }
    os << "}\n";
    return os.str();
}

} // namespace weylchar
