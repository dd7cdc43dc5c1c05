#include "weylchar/ord_parts.hpp"

#include <algorithm>
#include <set>

namespace weylchar {

Vec alpha_tilde(const WeylElement& rep) {
    const RootDatum& d = rep.datum();
    Vec sum(d.rank(), 0);
    for (int k : inversion_roots(rep)) sum = add(sum, d.positive_root(k).coords);

    // Same character through the complementary description: the roots kept
    // positive by w_0 * rep.
    WeylElement w0rep = longest_element(d).times(rep);
    Vec sum2(d.rank(), 0);
    for (int k : n_w_roots(w0rep)) sum2 = add(sum2, d.positive_root(k).coords);
    if (sum != sum2) throw CheckError("the two twist-character formulas disagree");
    return sum;
}

Vec alpha_tilde_simple(const WeylElement& rep) {
    const RootDatum& d = rep.datum();
    Vec sum(d.num_simple(), 0);
    for (int k : inversion_roots(rep)) sum = add(sum, d.positive_root(k).simple_coords);
    return sum;
}

std::vector<GradedPiece> graded_pieces(const ParabolicDatum& p, const TorusCharacter& chi, int n,
                                       int d, const std::vector<WeylElement>& kostant) {
    if (p.datum != &chi.datum()) throw ConfigError("graded_pieces: datum mismatch");
    if (d < 1) throw ConfigError("degree parameter d must be >= 1");
    if (n < 0) throw ConfigError("cohomological degree must be >= 0");
    std::vector<GradedPiece> out;
    for (const WeylElement& rep : kostant) {
        if (static_cast<long long>(d) * rep.length() != n) continue;
        Vec tw = alpha_tilde(rep);
        TorusCharacter oc = conj_by(chi, rep).times(
            omega_twist(chi.datum(), chi.p(), chi.q(), neg(tw)));
        out.push_back(GradedPiece{n, rep, tw, alpha_tilde_simple(rep), std::move(oc)});
    }
    return out;
}

std::vector<GradedPiece> graded_pieces(const ParabolicDatum& p, const TorusCharacter& chi, int n,
                                       int d, std::size_t cap) {
    return graded_pieces(p, chi, n, d, kostant_representatives(p, cap));
}

bool theta_twist_check(const ParabolicDatum& p, const TorusCharacter& chi) {
    const RootDatum& d = *p.datum;
    TorusCharacter theta_tw = omega_twist(chi.datum(), chi.p(), chi.q(), neg(d.theta()));
    TorusCharacter input = chi.times(theta_tw);
    for (const GradedPiece& piece : graded_pieces(p, input, 1, 1)) {
        if (piece.rep.length() != 1) throw CheckError("degree-1 piece with wrong length");
        TorusCharacter expect = weyl_act(piece.rep, chi).times(theta_tw);
        if (piece.out_char != expect) return false;
    }
    return true;
}

BruhatStrata bruhat_strata(const ParabolicDatum& p, std::size_t cap) {
    BruhatStrata s;
    auto reps = kostant_representatives(p, cap);
    auto inner = generate_subgroup(*p.datum, p.delta_L, cap);
    for (const auto& rep : reps) {
        StratumCell cell{rep, rep.length(), {}};
        for (const auto& wl : inner) cell.inner.emplace_back(wl, wl.length());
        s.cells.push_back(std::move(cell));
    }
    s.closure_leq.assign(reps.size(), std::vector<bool>(reps.size(), false));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = 0; j < reps.size(); ++j)
            s.closure_leq[i][j] = bruhat_leq(reps[i], reps[j]);
    return s;
}

bool levi_irreducibility_criterion(const ParabolicDatum& p, const TorusCharacter& eta) {
    SmoothCharQp om = SmoothCharQp::omega(eta.p(), eta.q());
    for (int k : p.phi_L_pos) {
        SmoothCharQp c = eta.compose_coroot(k);
        if (c == om || c == om.inverse()) return false;
    }
    return true;
}

const char* to_string(RowStatus s) {
    switch (s) {
    case RowStatus::proved_n0: return "proved_n0";
    case RowStatus::proved_d_nmid_n: return "proved_d_nmid_n";
    case RowStatus::proved_irreducible_case: return "proved_irreducible_case";
    case RowStatus::conjectural: return "conjectural";
    }
    return "?";
}

std::vector<OrdTableRow> ord_table(const ParabolicDatum& p, const std::optional<TorusCharacter>& chi,
                                   int d, std::size_t cap) {
    if (d < 1) throw ConfigError("degree parameter d must be >= 1");
    auto kostant = kostant_representatives(p, cap);
    int max_len = 0;
    for (const auto& rep : kostant) max_len = std::max(max_len, rep.length());

    std::vector<OrdTableRow> rows;
    for (int n = 0; n <= d * max_len; ++n) {
        OrdTableRow row;
        row.degree = n;
        if (chi) row.pieces = graded_pieces(p, *chi, n, d, kostant);
        if (n == 0) {
            row.status = RowStatus::proved_n0;
        } else if (n % d != 0) {
            row.status = RowStatus::proved_d_nmid_n;
        } else if (chi) {
            bool all_irred = !row.pieces.empty();
            for (const auto& piece : row.pieces)
                if (!levi_irreducibility_criterion(p, piece.out_char)) all_irred = false;
            row.status = all_irred ? RowStatus::proved_irreducible_case : RowStatus::conjectural;
        } else {
            row.status = RowStatus::conjectural;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

namespace {

// Positive-root index sets used by the chain computation.
std::set<int> np_roots(const ParabolicDatum& p, const WeylElement& w) {
    // roots of N_P kept positive by w
    const RootDatum& d = *p.datum;
    std::set<int> out;
    for (int k = 0; k < d.num_positive(); ++k) {
        if (p.levi_contains_positive(k)) continue;
        auto img = d.lookup_root(w.act_char(d.positive_root(k).coords));
        if (img->second > 0) out.insert(k);
    }
    return out;
}

std::vector<WeylElement> right_prefixes(const WeylElement& rep) {
    // v_k = product of the last k letters of the canonical word
    const RootDatum& d = rep.datum();
    std::vector<WeylElement> v{WeylElement::identity(d)};
    const auto& word = rep.word();
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        v.push_back(WeylElement::simple_reflection(d, *it).times(v.back()));
    return v;
}

} // namespace

std::vector<Vec> alpha_chain(const ParabolicDatum& p, const WeylElement& rep) {
    const RootDatum& d = *p.datum;
    std::vector<int> inv_list = inversion_roots(rep);
    std::set<int> inv(inv_list.begin(), inv_list.end());
    std::vector<Vec> chain;
    for (const WeylElement& v : right_prefixes(rep)) {
        Vec sum(d.rank(), 0);
        for (int k = 0; k < d.num_positive(); ++k) {
            if (!inv.count(k)) continue;
            auto img = d.lookup_root(v.act_char(d.positive_root(k).coords));
            if (img->second > 0) sum = add(sum, d.positive_root(k).coords);
        }
        chain.push_back(std::move(sum));
    }
    return chain;
}

bool alpha_chain_relation_holds(const ParabolicDatum& p, const WeylElement& rep,
                                const WeylElement& w_L) {
    const RootDatum& d = *p.datum;
    auto prefixes = right_prefixes(rep);
    auto chain = alpha_chain(p, rep);
    if (!chain.empty()) {
        if (chain.front() != alpha_tilde(rep)) return false;
        if (!is_zero(chain.back())) return false;
    }
    for (std::size_t k = 0; k + 1 < prefixes.size(); ++k) {
        WeylElement vk_wl = prefixes[k].times(w_L);
        WeylElement vk1_wl = prefixes[k + 1].times(w_L);
        std::set<int> big = np_roots(p, vk_wl);
        std::set<int> small = np_roots(p, vk1_wl);
        std::vector<int> dropped;
        for (int r : big)
            if (!small.count(r)) dropped.push_back(r);
        if (dropped.size() != 1 || small.size() + 1 != big.size()) return false;
        Vec gamma = d.positive_root(dropped.front()).coords;
        // alpha_{k+1} + w_L(gamma_k) = alpha_k
        if (add(chain[k + 1], w_L.act_char(gamma)) != chain[k]) return false;
    }
    return true;
}

} // namespace weylchar
