// Acceptance suite: one criterion per section, one PASS/FAIL line each,
// exact combinatorial targets, stated runtime limits enforced.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "weylchar/json_io.hpp"

using namespace weylchar;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& what, bool ok, double seconds, double limit) {
    bool in_time = seconds <= limit;
    if (!ok || !in_time) ++g_failures;
    std::printf("%s criterion %d: %s (%.2fs, limit %.0fs)%s\n", ok && in_time ? "PASS" : "FAIL",
                criterion, what.c_str(), seconds, limit, ok ? "" : " [target missed]");
}

struct Timer {
    Clock::time_point start = Clock::now();
    double seconds() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

std::vector<int> levi_from_mask(const RootDatum& d, std::size_t mask) {
    std::vector<int> levi;
    for (int i = 0; i < d.num_simple(); ++i)
        if (mask & (std::size_t{1} << i)) levi.push_back(i);
    return levi;
}

ClosedRootSubset full_psi(const RootDatum& d) {
    std::vector<int> v;
    for (int k = 0; k < d.num_positive(); ++k) v.push_back(k);
    return make_closed(d, v);
}

// All data of semisimple rank <= 3 exercised by criteria 5-7.
const std::vector<std::string> kRank3Data = {"gl2",   "gl3",   "gl4",   "gsp4",  "g2",
                                             "sc-a1", "sc-a2", "sc-b2", "sc-a3", "sc-b3",
                                             "sc-c3"};

// ---------------------------------------------------------------------------

void criterion1() {
    Timer t;
    bool ok = true;
    for (Int p : {5, 3}) {
        RootDatum g2 = build_g2();
        TorusCharacter chi = quadratic_g2_character(g2, p);
        WeylElement w0 = longest_element(g2);
        ok = ok && genericity(chi) == Genericity::generic;
        ok = ok && weyl_act(w0, chi) == chi;
        ok = ok && w0.length() == 6;
        ok = ok && w0.word() == std::vector<int>({0, 1, 0, 1, 0, 1});
    }
    report(1, "order-two G2 character: generic, w0-fixed, alternating word of length 6", ok,
           t.seconds(), 1.0);
}

// Per-element data for the first-letter / unique-letter criteria.
struct WordModes {
    std::vector<int> first_letter_alphas; // candidates for the first-letter mode
    bool has_unique_letter = false;
};

WordModes word_modes(const RootDatum& d, const WeylElement& w) {
    WordModes m;
    if (w.is_identity()) return m;
    std::set<int> firsts;
    for (const auto& word : all_reduced_words(w)) {
        std::vector<int> count(d.num_simple(), 0);
        for (int i : word) ++count[i];
        for (int i : word)
            if (count[i] == 1) m.has_unique_letter = true;
        if (count[word.back()] == 1) firsts.insert(word.back());
    }
    m.first_letter_alphas.assign(firsts.begin(), firsts.end());
    return m;
}

void criterion2_and_3() {
    Timer t;
    bool ok = true;
    bool g2_witness = false;
    for (const char* name : {"gl2xgl2", "gl3", "gsp4", "g2"}) {
        RootDatum d = build_datum_from_name(name);
        if (!d.connected_center()) ok = false;
        auto weyl = enumerate_weyl(d);
        std::vector<WordModes> modes;
        modes.reserve(weyl.size());
        for (const auto& w : weyl) modes.push_back(word_modes(d, w));

        for (const auto& chi : enumerate_characters(d, 5, 5)) {
            bool generic = is_generic(chi);
            for (std::size_t k = 0; k < weyl.size(); ++k) {
                const WeylElement& w = weyl[k];
                if (w.length() < 1) continue;
                bool moved = weyl_act(w, chi) != chi;
                if (w.length() <= 5) {
                    if (generic && !moved) ok = false; // short-word criterion
                    bool mode_i = false;
                    for (int a : modes[k].first_letter_alphas)
                        if (!chi.compose_coroot(d.simple_pos_index(a)).trivial()) mode_i = true;
                    if (mode_i && !moved) ok = false;
                    if (generic && modes[k].has_unique_letter && !moved) ok = false;
                } else if (std::string(name) == "g2" && w.length() == 6 && generic && !moved) {
                    g2_witness = true;
                }
            }
        }
    }
    report(2, "exhaustive short-word sweep (A1xA1, A2, B2/C2, G2 at p=5): zero violations", ok,
           t.seconds(), 60.0);

    Timer t3;
    report(3, "optimality witness: generic G2 character fixed by a length-6 element", g2_witness,
           t3.seconds(), 60.0);
}

void criterion4() {
    Timer t;
    bool ok = true;
    for (const char* name : {"gl2", "gl3", "gsp4", "g2"}) {
        RootDatum d = build_datum_from_name(name);
        for (const auto& chi : enumerate_characters(d, 5, 5))
            if (!generic_iff_coroot(chi)) ok = false;
    }
    report(4, "reflection-vs-coroot equivalence on GL2, GL3, GSp4, G2 at p=5: zero violations", ok,
           t.seconds(), 60.0);
}

void criterion5() {
    Timer t;
    bool ok = true;
    for (const auto& name : kRank3Data) {
        RootDatum d = build_datum_from_name(name);
        auto weyl = enumerate_weyl(d);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d.num_simple()); ++mask) {
            ParabolicDatum p = make_parabolic(d, levi_from_mask(d, mask));
            auto reps = kostant_representatives(p);
            auto sub = generate_subgroup(d, p.delta_L);
            if (reps.size() * sub.size() != weyl.size()) ok = false;
            for (const auto& w : weyl) {
                auto [wt, wl] = kostant_decompose(w, p);
                if (wt.times(wl) != w || wt.length() + wl.length() != w.length()) ok = false;
                if (!kostant_characterization_holds(w, p)) ok = false;
                if (!semidirect_partition_holds(w, p)) ok = false;
            }
            if (!bruhat_projection_monotone(p)) ok = false;
        }
    }
    report(5, "Kostant machinery on all rank <= 3 data and all Levi subsets", ok, t.seconds(),
           30.0);
}

void criterion6() {
    Timer t;
    bool ok = true;

    // (a) + (b): twist characters at identity / simple reflections, and the
    // two-formula agreement on every Kostant representative.
    for (const auto& name : kRank3Data) {
        RootDatum d = build_datum_from_name(name);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d.num_simple()); ++mask) {
            ParabolicDatum p = make_parabolic(d, levi_from_mask(d, mask));
            for (const auto& rep : kostant_representatives(p)) {
                Vec tw;
                try {
                    tw = alpha_tilde(rep); // internal two-route assertion
                } catch (const CheckError&) {
                    ok = false;
                    continue;
                }
                if (rep.is_identity() && !is_zero(tw)) ok = false;
                if (rep.length() == 1) {
                    int i = rep.word().front();
                    if (p.contains_simple(i) || tw != d.simple_root(i)) ok = false;
                }
            }
        }
    }

    // (c) divisibility: no pieces when d does not divide n.
    for (const char* name : {"gl3", "gsp4", "g2"}) {
        RootDatum d = build_datum_from_name(name);
        TorusCharacter chi = TorusCharacter::trivial(d, 5, 5);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d.num_simple()); ++mask) {
            ParabolicDatum p = make_parabolic(d, levi_from_mask(d, mask));
            auto reps = kostant_representatives(p);
            int max_len = 0;
            for (const auto& r : reps) max_len = std::max(max_len, r.length());
            for (int dd : {2, 3})
                for (int n = 0; n <= dd * max_len; ++n)
                    if (n % dd != 0 && !graded_pieces(p, chi, n, dd, reps).empty()) ok = false;
        }
    }

    // (d) Borel piece counts match the length generating function.
    {
        RootDatum a2 = build_gl(3);
        TorusCharacter chi = TorusCharacter::trivial(a2, 5, 5);
        ParabolicDatum b = make_parabolic(a2, {});
        const std::size_t a2_counts[] = {1, 2, 2, 1};
        for (int n = 0; n <= 3; ++n)
            if (graded_pieces(b, chi, n, 1).size() != a2_counts[n]) ok = false;

        RootDatum g2 = build_g2();
        TorusCharacter chig = TorusCharacter::trivial(g2, 5, 5);
        ParabolicDatum bg = make_parabolic(g2, {});
        const std::size_t g2_counts[] = {1, 2, 2, 2, 2, 2, 1};
        for (int n = 0; n <= 6; ++n)
            if (graded_pieces(bg, chig, n, 1).size() != g2_counts[n]) ok = false;
    }

    // (e) theta-twist cancellation for all maximal parabolics of GL3 and
    // GSp4, exhaustively over the characters at p = 5.
    for (const char* name : {"gl3", "gsp4"}) {
        RootDatum d = build_datum_from_name(name);
        std::vector<ParabolicDatum> maximal;
        for (int drop = 0; drop < d.num_simple(); ++drop) {
            std::vector<int> levi;
            for (int i = 0; i < d.num_simple(); ++i)
                if (i != drop) levi.push_back(i);
            maximal.push_back(make_parabolic(d, levi));
        }
        for (const auto& chi : enumerate_characters(d, 5, 5))
            for (const auto& p : maximal)
                if (!theta_twist_check(p, chi)) ok = false;
    }

    // (f) twist chain relation along one fixed reduced word per Kostant
    // representative on A2 and B2.
    for (const char* name : {"gl3", "gsp4", "sc-b2"}) {
        RootDatum d = build_datum_from_name(name);
        for (std::size_t mask = 0; mask < (std::size_t{1} << d.num_simple()); ++mask) {
            ParabolicDatum p = make_parabolic(d, levi_from_mask(d, mask));
            auto wl_list = generate_subgroup(d, p.delta_L);
            for (const auto& rep : kostant_representatives(p))
                for (const auto& wl : wl_list)
                    if (!alpha_chain_relation_holds(p, rep, wl)) ok = false;
        }
    }

    report(6, "graded skeleton: twists, divisibility, Poincare counts, theta twist, chain", ok,
           t.seconds(), 60.0);
}

void criterion7() {
    Timer t;
    bool ok = true;

    // A3, Psi = Phi+, w = 1.
    {
        RootDatum d = build_gl(4);
        auto weyl = enumerate_weyl(d);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 2, 3});
        if (genericity(chi, weyl) != Genericity::strongly_generic) ok = false;
        BHLattice lat = build_lattice(chi, full_psi(d), WeylElement::identity(d), weyl);
        if (lat.constituents.size() != 5) ok = false;
        if (lat.socle_degree != std::vector<int>({0, 1, 1, 1, 2})) ok = false;

        std::set<std::pair<int, int>> proper;
        int self_loops = 0;
        for (const auto& [a, b] : lat.ext_edges)
            a == b ? void(++self_loops)
                   : void(proper.insert({std::min(a, b), std::max(a, b)}));
        if (self_loops != 5) ok = false;
        if (proper != std::set<std::pair<int, int>>({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}}))
            ok = false;

        if (down_closed_families(2).size() != 6) ok = false; // I = {a1, a3}
        for (const auto& row : multiplicity_report(lat))
            if (row.multiplicity != 1) ok = false;

        if (distinctness_check(chi, full_psi(d), weyl).verdict != DistinctnessVerdict::holds)
            ok = false;
    }

    // A2, Psi = {highest root}.
    {
        RootDatum d = build_gl(3);
        auto weyl = enumerate_weyl(d);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
        ClosedRootSubset psi = make_closed(d, {d.positive_root_index(Vec{1, 0, -1})});
        if (w_psi_set(weyl, psi).size() != 3) ok = false;
        if (pi_psi_socle(chi, psi, weyl).factors.size() != 3) ok = false;
        if (distinctness_check(chi, psi, weyl).verdict != DistinctnessVerdict::holds) ok = false;
    }

    // I-identity for every (w, I) over all closed Psi on all rank <= 3 data.
    for (const auto& name : kRank3Data) {
        RootDatum d = build_datum_from_name(name);
        auto weyl = enumerate_weyl(d);
        for (const auto& psi : enumerate_closed_subsets(d))
            for (const auto& w : w_psi_set(weyl, psi))
                for (const auto& I : orthogonal_subsets(d, delta_cap(w, psi)))
                    if (!verify_I_identity(d, psi, w, I)) ok = false;
    }

    report(7, "constituent lattices: A3 shape, A2 socle, I-identity over all closed subsets", ok,
           t.seconds(), 120.0);
}

void criterion8() {
    Timer t;
    bool ok = true;

    RootDatum d = build_gl(3);
    TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
    if (genericity(chi) != Genericity::strongly_generic) ok = false;
    WeylElement s[2] = {WeylElement::simple_reflection(d, 0), WeylElement::simple_reflection(d, 1)};
    for (int b = 0; b < 2; ++b) {
        TorusCharacter mid = weyl_act(s[b], chi);
        for (int a = 0; a < 2; ++a) {
            if (a == b) continue;
            if (classify_chain(chi, mid, weyl_act(s[a], mid)).verdict != ChainVerdict::excluded)
                ok = false;
        }
        if (classify_chain(chi, mid, chi).verdict != ChainVerdict::unique_chain) ok = false;
    }
    TorusCharacter w0chi = weyl_act(longest_element(d), chi);
    if (classify_chain(chi, w0chi, chi).verdict != ChainVerdict::no_edge) ok = false;
    if (classify_chain(chi, w0chi, w0chi).verdict != ChainVerdict::no_edge) ok = false;

    // dispatch total and exclusive over the 64 ordered parabolic pairs of GL4
    RootDatum gl4 = build_gl(4);
    SupersingularLabel pi{"pi", {}, Vec(gl4.rank(), 0)};
    SupersingularLabel other{"pi'", {}, Vec(gl4.rank(), 0)};
    int dispatched = 0;
    for (std::size_t ma = 0; ma < 8; ++ma)
        for (std::size_t mb = 0; mb < 8; ++mb) {
            InductionPair pair{make_parabolic(gl4, levi_from_mask(gl4, ma)),
                               make_parabolic(gl4, levi_from_mask(gl4, mb)), pi, other};
            try {
                classify_parabolic_ext(pair, 1);
                ++dispatched;
            } catch (...) {
                ok = false;
            }
        }
    if (dispatched != 64) ok = false;

    report(8, "chain classifier on GL3 and total parabolic dispatch on GL4", ok, t.seconds(),
           60.0);
}

// ---- criterion 9: CLI determinism -------------------------------------------

std::string run_cli(const std::string& cli, const std::string& args, int* exit_code) {
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* f = popen(cmd.c_str(), "r");
    if (!f) {
        *exit_code = -1;
        return {};
    }
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
    int status = pclose(f);
    *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return out;
}

void criterion9() {
    Timer t;
    bool ok = true;
    const char* cli_env = std::getenv("WEYLCHAR_CLI");
    std::string cli = cli_env ? cli_env : "./weylchar";

    // character spec consumed by the file-based suites
    {
        RootDatum d = build_gl(3);
        TorusCharacter chi = TorusCharacter::unramified(d, 5, 5, {0, 1, 3});
        std::ofstream f("acceptance_chi_gl3.json");
        f << character_json(chi).dump(2) << "\n";
    }

    const std::vector<std::string> suites = {
        "verify example313 --p 5",
        "verify lemma314 --datum g2 --p 5",
        "ord report --datum gl3 --levi a1 --d 1 --char acceptance_chi_gl3.json",
        "bh build --datum gl3 --char acceptance_chi_gl3.json --psi phi+ --wpsi e",
        "bh socle --datum gl3 --char acceptance_chi_gl3.json --psi phi+",
        "char generic --datum gl3 --spec acceptance_chi_gl3.json",
        "weyl kostant --datum gsp4 --levi a2",
        "roots orth --datum gl4 --set a1,a2,a3",
        "ext conj343 --datum gl4 --P a1 --Pp a1 --pi-prime-twist a3",
        "char sweep-lemma314 --datum gsp4 --p 5",
    };
    for (const auto& args : suites) {
        int ec1 = 0, ec2 = 0;
        std::string out1 = run_cli(cli, args, &ec1);
        std::string out2 = run_cli(cli, args, &ec2);
        if (ec1 != 0 || ec2 != 0 || out1.empty() || out1 != out2) {
            std::printf("  non-deterministic or failing suite: %s (exits %d/%d)\n", args.c_str(),
                        ec1, ec2);
            ok = false;
        }
    }

    // file-emitting suite: byte-identical artifacts across runs
    auto slurp = [](const std::string& path) {
        std::ifstream f(path, std::ios::binary);
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };
    const std::string graphs_args =
        "bh graphs --datum gl3 --char acceptance_chi_gl3.json --psi phi+ --wpsi e --out ";
    std::vector<std::string> contents[2];
    for (int run = 0; run < 2; ++run) {
        std::string dir = "acceptance_graphs_" + std::to_string(run);
        if (std::system(("mkdir -p " + dir).c_str()) != 0) ok = false;
        int ec = 0;
        run_cli(cli, graphs_args + dir, &ec);
        if (ec != 0) ok = false;
        for (const char* name : {"/ext_graph.dot", "/lattice.json", "/subrep_hasse.dot"})
            contents[run].push_back(slurp(dir + name));
    }
    for (std::size_t i = 0; i < contents[0].size(); ++i)
        if (contents[0][i].empty() || contents[0][i] != contents[1][i]) ok = false;

    report(9, "CLI determinism: byte-identical JSON across repeated runs", ok, t.seconds(), 60.0);
}

} // namespace

int main() {
    criterion1();
    criterion2_and_3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
