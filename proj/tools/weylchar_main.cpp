#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "weylchar/json_io.hpp"
#include "weylchar/selftest.hpp"

using namespace weylchar;

namespace {

// Exit codes: 0 ok, 2 config/parse, 3 capability, 4 bound, 5 failed checks.
constexpr int kExitConfig = 2;
constexpr int kExitCapability = 3;
constexpr int kExitBound = 4;
constexpr int kExitCheck = 5;

struct GlobalOpts {
    std::string datum = "gl3";
    long long p = 5;
    long long q = 0; // 0 = same as p
    int d = 1;
    std::string out;
    std::string format = "json";
    long long seed = 0;
    std::size_t cap_weyl = kDefaultWeylCap;
    bool selftest = false;
};

void emit(const GlobalOpts& g, const Json& j) {
    std::string text = j.dump(2);
    text += "\n";
    if (g.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.out);
        if (!f) throw ConfigError("cannot write " + g.out);
        f << text;
    }
}

Json base_report() {
    Json j;
    j["schema_version"] = kSchemaVersion;
    return j;
}

int run_group_selftest(const GlobalOpts& g, const std::string& group) {
    auto checks = run_selftest(group);
    Json j = base_report();
    j["selftest"] = group;
    Json arr = Json::array();
    int failures = 0;
    for (const auto& c : checks) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        arr.push_back(cj);
        if (!c.passed) ++failures;
    }
    j["checks"] = arr;
    j["failures"] = failures;
    emit(g, j);
    return failures == 0 ? 0 : kExitCheck;
}

long long effective_q(const GlobalOpts& g) { return g.q == 0 ? g.p : g.q; }

// The character spec file is authoritative for p and q; --p and --q govern
// the file-less commands (example313, sweeps).
TorusCharacter char_from_opts(const RootDatum& d, const GlobalOpts&, const std::string& path) {
    if (path.empty()) throw ConfigError("this command needs --char <file>");
    return load_character(d, path);
}

// ---- datum ------------------------------------------------------------------

int cmd_datum_describe(const GlobalOpts& g, const std::string& kind, int n, const std::string& type,
                       int rank, const std::string& spec) {
    RootDatum d = [&]() {
        if (!spec.empty()) return load_datum_spec(spec);
        if (kind == "gl") return build_gl(n);
        if (kind == "gsp") return build_gsp4();
        if (kind == "g2") return build_g2();
        if (kind == "sc") {
            if (type.size() != 1) throw ConfigError("--type must be one of a,b,c,d,f,g");
            return build_simply_connected(type[0], rank);
        }
        if (kind == "name") return build_datum_from_name(g.datum);
        throw ConfigError("unknown --kind (use gl, gsp, sc, g2 or name)");
    }();
    Json j = base_report();
    j.update(datum_json(d));
    emit(g, j);
    return 0;
}

// ---- weyl -------------------------------------------------------------------

int cmd_weyl_enum(const GlobalOpts& g) {
    RootDatum d = build_datum_from_name(g.datum);
    Json j = base_report();
    j["datum"] = d.name();
    Json arr = Json::array();
    for (const auto& w : enumerate_weyl(d, g.cap_weyl)) arr.push_back(word_json(w));
    j["elements"] = arr;
    j["order"] = arr.size();
    emit(g, j);
    return 0;
}

int cmd_weyl_kostant(const GlobalOpts& g, const std::string& levi) {
    RootDatum d = build_datum_from_name(g.datum);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    Json j = base_report();
    j["datum"] = d.name();
    j["levi"] = levi_string(p.delta_L);
    Json arr = Json::array();
    for (const auto& w : kostant_representatives(p, g.cap_weyl)) arr.push_back(word_json(w));
    j["representatives"] = arr;
    j["count"] = arr.size();
    emit(g, j);
    return 0;
}

int cmd_weyl_bruhat(const GlobalOpts& g, const std::vector<std::string>& pair) {
    if (pair.size() != 2) throw ConfigError("weyl bruhat needs --leq W1 W2");
    RootDatum d = build_datum_from_name(g.datum);
    WeylElement w1 = WeylElement::from_word(d, parse_word_string(pair.at(0), d.num_simple()));
    WeylElement w2 = WeylElement::from_word(d, parse_word_string(pair.at(1), d.num_simple()));
    Json j = base_report();
    j["datum"] = d.name();
    j["w1"] = word_json(w1);
    j["w2"] = word_json(w2);
    j["leq"] = bruhat_leq(w1, w2);
    emit(g, j);
    return 0;
}

// ---- char -------------------------------------------------------------------

int cmd_char_generic(const GlobalOpts& g, const std::string& spec) {
    RootDatum d = build_datum_from_name(g.datum);
    TorusCharacter chi = char_from_opts(d, g, spec);
    Json j = base_report();
    j["datum"] = d.name();
    j["character"] = character_json(chi);
    j["genericity"] = to_string(genericity(chi, g.cap_weyl));
    emit(g, j);
    return 0;
}

Json example313_report(long long p, const std::string& datum_name) {
    RootDatum d = build_datum_from_name(datum_name);
    TorusCharacter chi = quadratic_g2_character(d, p);
    WeylElement w0 = longest_element(d);
    Json j = base_report();
    j["p"] = p;
    j["generic"] = (genericity(chi) == Genericity::generic);
    j["w0_fixed"] = (weyl_act(w0, chi) == chi);
    j["length_w0"] = w0.length();
    j["w0_word"] = word_json(w0);
    j["character"] = character_json(chi);
    return j;
}

int cmd_char_example313(const GlobalOpts& g, bool datum_explicit) {
    emit(g, example313_report(g.p, datum_explicit ? g.datum : "g2"));
    return 0;
}

Json lemma314_sweep_report(const std::string& datum_name, long long p, long long q,
                           std::size_t cap) {
    RootDatum d = build_datum_from_name(datum_name);
    auto weyl = enumerate_weyl(d, cap);
    auto chars = enumerate_characters(d, p, q);

    long long pairs = 0, violations = 0;
    bool witness6 = false;
    for (const auto& chi : chars) {
        if (!is_generic(chi)) continue;
        for (const auto& w : weyl) {
            if (w.length() >= 1 && w.length() <= 5) {
                ++pairs;
                if (weyl_act(w, chi) == chi) ++violations;
            }
            if (w.length() == 6 && weyl_act(w, chi) == chi) witness6 = true;
        }
    }
    Json j = base_report();
    j["datum"] = d.name();
    j["p"] = p;
    j["characters_swept"] = chars.size();
    j["pairs_checked"] = pairs;
    j["violations"] = violations;
    j["optimality_witness_at_length_6"] = witness6;
    return j;
}

int cmd_char_sweep(const GlobalOpts& g) {
    emit(g, lemma314_sweep_report(g.datum, g.p, effective_q(g), g.cap_weyl));
    return 0;
}

// ---- roots ------------------------------------------------------------------

ClosedRootSubset psi_from_path(const RootDatum& d, const std::string& psi_path) {
    std::vector<int> roots;
    if (psi_path == "phi+") {
        for (int k = 0; k < d.num_positive(); ++k) roots.push_back(k);
    } else if (psi_path == "empty") {
        // empty set
    } else {
        roots = load_root_subset(d, psi_path);
    }
    return make_closed(d, roots);
}

int cmd_roots_wpsi(const GlobalOpts& g, const std::string& psi_path) {
    RootDatum d = build_datum_from_name(g.datum);
    ClosedRootSubset psi = psi_from_path(d, psi_path);
    Json j = base_report();
    j["datum"] = d.name();
    j["psi"] = root_subset_json(d, psi.roots);
    Json arr = Json::array();
    for (const auto& w : w_psi_set(d, psi, g.cap_weyl)) arr.push_back(word_json(w));
    j["w_psi"] = arr;
    j["count"] = arr.size();
    emit(g, j);
    return 0;
}

int cmd_roots_orth(const GlobalOpts& g, const std::string& set) {
    RootDatum d = build_datum_from_name(g.datum);
    std::vector<int> simples = parse_levi_string(set, d.num_simple());
    Json j = base_report();
    j["datum"] = d.name();
    j["set"] = levi_string(simples);
    Json arr = Json::array();
    for (const auto& I : orthogonal_subsets(d, simples)) arr.push_back(levi_string(I));
    j["orthogonal_subsets"] = arr;
    emit(g, j);
    return 0;
}

// ---- ord --------------------------------------------------------------------

int cmd_ord_rhs(const GlobalOpts& g, const std::string& levi, int deg, const std::string& spec) {
    RootDatum d = build_datum_from_name(g.datum);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    TorusCharacter chi = char_from_opts(d, g, spec);
    Json j = base_report();
    j["datum"] = d.name();
    j["levi"] = levi_string(p.delta_L);
    j["degree"] = deg;
    j["d"] = g.d;
    Json arr = Json::array();
    for (const auto& piece : graded_pieces(p, chi, deg, g.d, g.cap_weyl)) {
        RowStatus st = piece.degree == 0 ? RowStatus::proved_n0
                       : levi_irreducibility_criterion(p, piece.out_char)
                           ? RowStatus::proved_irreducible_case
                           : RowStatus::conjectural;
        arr.push_back(graded_piece_json(piece, st));
    }
    j["pieces"] = arr;
    emit(g, j);
    return 0;
}

int cmd_ord_report(const GlobalOpts& g, const std::string& levi, const std::string& spec) {
    RootDatum d = build_datum_from_name(g.datum);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    std::optional<TorusCharacter> chi;
    if (!spec.empty()) chi = char_from_opts(d, g, spec);
    Json j = base_report();
    j["datum"] = d.name();
    j["levi"] = levi_string(p.delta_L);
    j["d"] = g.d;
    j["rows"] = ord_table_json(ord_table(p, chi, g.d, g.cap_weyl), p);
    emit(g, j);
    return 0;
}

// ---- bh ---------------------------------------------------------------------


int cmd_bh_build(const GlobalOpts& g, const std::string& spec, const std::string& psi_path,
                 const std::string& wpsi) {
    RootDatum d = build_datum_from_name(g.datum);
    TorusCharacter chi = char_from_opts(d, g, spec);
    ClosedRootSubset psi = psi_from_path(d, psi_path);
    WeylElement w = WeylElement::from_word(d, parse_word_string(wpsi, d.num_simple()));
    auto weyl = enumerate_weyl(d, g.cap_weyl);
    BHLattice lat = build_lattice(chi, psi, w, weyl);
    if (g.format == "dot") {
        if (g.out.empty()) {
            std::cout << lattice_dot(lat);
        } else {
            std::ofstream f(g.out);
            if (!f) throw ConfigError("cannot write " + g.out);
            f << lattice_dot(lat);
        }
        return 0;
    }
    Json j = base_report();
    j["datum"] = d.name();
    j.update(lattice_json(lat));
    emit(g, j);
    return 0;
}

int cmd_bh_socle(const GlobalOpts& g, const std::string& spec, const std::string& psi_path) {
    RootDatum d = build_datum_from_name(g.datum);
    TorusCharacter chi = char_from_opts(d, g, spec);
    ClosedRootSubset psi = psi_from_path(d, psi_path);
    auto weyl = enumerate_weyl(d, g.cap_weyl);
    SocleReport rep = pi_psi_socle(chi, psi, weyl);
    Json j = base_report();
    j["datum"] = d.name();
    j["strongly_generic"] = rep.strongly_generic;
    Json arr = Json::array();
    for (const auto& f : rep.factors) {
        Json fj;
        fj["w_psi"] = word_json(f.w_psi);
        fj["character"] = character_json(f.label);
        arr.push_back(fj);
    }
    j["socle_factors"] = arr;
    emit(g, j);
    return 0;
}

int cmd_bh_graphs(const GlobalOpts& g, const std::string& spec, const std::string& psi_path,
                  const std::string& wpsi) {
    RootDatum d = build_datum_from_name(g.datum);
    TorusCharacter chi = char_from_opts(d, g, spec);
    ClosedRootSubset psi = psi_from_path(d, psi_path);
    WeylElement w = WeylElement::from_word(d, parse_word_string(wpsi, d.num_simple()));
    auto weyl = enumerate_weyl(d, g.cap_weyl);
    BHLattice lat = build_lattice(chi, psi, w, weyl);

    std::string dir = g.out.empty() ? "." : g.out;
    auto write_file = [&](const std::string& name, const std::string& text) {
        std::ofstream f(dir + "/" + name);
        if (!f) throw ConfigError("cannot write " + dir + "/" + name);
        f << text;
    };
    write_file("ext_graph.dot", lattice_dot(lat));
    Json lj = base_report();
    lj.update(lattice_json(lat));
    write_file("lattice.json", lj.dump(2) + "\n");
    // Hasse diagram of the subrepresentation lattice of the largest I.
    int biggest = 0;
    for (std::size_t i = 0; i < lat.constituents.size(); ++i)
        if (lat.constituents[i].I.size() >= lat.constituents[biggest].I.size())
            biggest = static_cast<int>(i);
    write_file("subrep_hasse.dot", subrep_hasse_dot(lat, biggest));

    Json j = base_report();
    j["written"] = Json::array({dir + "/ext_graph.dot", dir + "/lattice.json", dir + "/subrep_hasse.dot"});
    std::cout << j.dump(2) << "\n";
    return 0;
}

// ---- ext --------------------------------------------------------------------

int cmd_ext_chain(const GlobalOpts& g, const std::string& f1, const std::string& f2,
                  const std::string& f3) {
    RootDatum d = build_datum_from_name(g.datum);
    TorusCharacter chi = char_from_opts(d, g, f1);
    TorusCharacter chi1 = char_from_opts(d, g, f2);
    TorusCharacter chi2 = char_from_opts(d, g, f3);
    Json j = base_report();
    j["datum"] = d.name();
    j.update(chain_report_json(classify_chain(chi, chi1, chi2)));
    emit(g, j);
    return 0;
}

int cmd_ext_conj343(const GlobalOpts& g, const std::string& P, const std::string& Pp,
                    const std::string& pi_name, const std::string& pi_p_name,
                    const std::string& twist) {
    RootDatum d = build_datum_from_name(g.datum);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(P, d.num_simple()));
    ParabolicDatum pp = make_parabolic(d, parse_levi_string(Pp, d.num_simple()));
    SupersingularLabel pi{pi_name, {}, Vec(d.rank(), 0)};
    SupersingularLabel pi_p{pi_p_name, {}, Vec(d.rank(), 0)};
    if (!twist.empty()) {
        auto idx = parse_levi_string(twist, d.num_simple());
        if (idx.size() != 1) throw ConfigError("--pi-prime-twist takes a single simple root");
        pi_p = conj_twist(d, pi, idx.front());
    }
    InductionPair pair{p, pp, pi, pi_p};
    Json j = base_report();
    j["datum"] = d.name();
    j["P"] = levi_string(p.delta_L);
    j["Pp"] = levi_string(pp.delta_L);
    j.update(parabolic_ext_report_json(classify_parabolic_ext(pair, g.d)));
    emit(g, j);
    return 0;
}

int cmd_ext_prop345(const GlobalOpts& g, const std::string& levi, const std::string& spec) {
    RootDatum d = build_datum_from_name(g.datum);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    Json j = base_report();
    j["datum"] = d.name();
    j["levi"] = levi_string(p.delta_L);
    j["d"] = g.d;
    ExtComparisonRule rule = ext_comparison_rule(g.d);
    j["unconditional_iso"] = rule.unconditional_iso;
    if (rule.defer_to_d1_table) {
        TorusCharacter chi = char_from_opts(d, g, spec);
        j.update(ext_transfer_json(ext_transfer_hypotheses(p, chi)));
    }
    emit(g, j);
    return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify_example313(const GlobalOpts& g, bool datum_explicit) {
    Json j = example313_report(g.p, datum_explicit ? g.datum : "g2");
    bool ok = j["generic"].get<bool>() && j["w0_fixed"].get<bool>() && j["length_w0"] == 6;
    emit(g, j);
    return ok ? 0 : kExitCheck;
}

int cmd_verify_lemma314(const GlobalOpts& g) {
    Json j = lemma314_sweep_report(g.datum, g.p, effective_q(g), g.cap_weyl);
    emit(g, j);
    return j["violations"].get<long long>() == 0 ? 0 : kExitCheck;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of root data, Weyl groups and smooth mod-p characters"};
    app.require_subcommand(1);
    GlobalOpts g;

    auto add_global = [&](CLI::App* cmd) {
        cmd->add_option("--datum", g.datum, "datum name (gl3, gsp4, g2, sc-b3, gl2xgl2, ...)")
            ->envname("WEYLCHAR_DATUM");
        cmd->add_option("--p", g.p, "odd prime p")->envname("WEYLCHAR_P");
        cmd->add_option("--q", g.q, "field size q = p^k (default p)")->envname("WEYLCHAR_Q");
        cmd->add_option("--d", g.d, "degree parameter d = [F:Q_p]")->envname("WEYLCHAR_D");
        cmd->add_option("--out", g.out, "write JSON here instead of stdout")->envname("WEYLCHAR_OUT");
        cmd->add_option("--format", g.format, "json|dot")
            ->check(CLI::IsMember({"json", "dot"}))
            ->envname("WEYLCHAR_FORMAT");
        cmd->add_option("--seed", g.seed, "seed for sampled sweeps (sweeps are exhaustive by default)")
            ->envname("WEYLCHAR_SEED");
        cmd->add_option("--cap-weyl", g.cap_weyl, "Weyl enumeration cap")->envname("WEYLCHAR_CAP_WEYL");
        cmd->add_flag("--selftest", g.selftest, "run this group's invariant suite");
    };

    // datum
    auto* datum = app.add_subcommand("datum", "root datum inspection");
    auto* describe = datum->add_subcommand("describe", "print the datum as JSON");
    std::string kind = "name", sc_type = "a", datum_spec;
    int gl_n = 3, sc_rank = 2;
    describe->add_option("--kind", kind, "gl | gsp | sc | g2 | name");
    describe->add_option("--spec", datum_spec, "datum spec file (JSON or key=value)");
    describe->add_option("--n", gl_n, "n for --kind gl");
    describe->add_option("--type", sc_type, "type letter for --kind sc");
    describe->add_option("--rank", sc_rank, "rank for --kind sc");
    add_global(describe);
    add_global(datum);

    // weyl
    auto* weyl = app.add_subcommand("weyl", "Weyl group operations");
    auto* wenum = weyl->add_subcommand("enum", "list all elements");
    add_global(wenum);
    auto* wkostant = weyl->add_subcommand("kostant", "minimal coset representatives");
    std::string levi;
    wkostant->add_option("--levi", levi, "Levi subset, e.g. a1,a3");
    add_global(wkostant);
    auto* wbruhat = weyl->add_subcommand("bruhat", "Bruhat comparison");
    std::vector<std::string> bruhat_pair;
    wbruhat->add_option("--leq", bruhat_pair, "two words W1 W2; reports W1 <= W2")->expected(2);
    add_global(wbruhat);
    add_global(weyl);

    // char
    auto* chr = app.add_subcommand("char", "smooth character calculus");
    std::string char_spec;
    auto* cgeneric = chr->add_subcommand("generic", "genericity of a character");
    cgeneric->add_option("--spec", char_spec, "character spec file");
    add_global(cgeneric);
    auto* cex = chr->add_subcommand("example313", "the order-two G2 character");
    add_global(cex);
    auto* csweep = chr->add_subcommand("sweep-lemma314", "exhaustive short-word sweep");
    add_global(csweep);
    add_global(chr);

    // roots
    auto* roots = app.add_subcommand("roots", "closed subsets of the positive roots");
    auto* rwpsi = roots->add_subcommand("wpsi", "elements mapping Psi into Phi+");
    std::string psi_path;
    rwpsi->add_option("--psi", psi_path, "root subset file (or phi+ / empty)");
    add_global(rwpsi);
    auto* rorth = roots->add_subcommand("orth", "pairwise-orthogonal subsets");
    std::string orth_set;
    rorth->add_option("--set", orth_set, "simple roots, e.g. a1,a3");
    add_global(rorth);
    add_global(roots);

    // ord
    auto* ord = app.add_subcommand("ord", "graded pieces of derived ordinary parts");
    auto* orhs = ord->add_subcommand("rhs", "pieces in one degree");
    int deg = 0;
    orhs->add_option("--deg", deg, "cohomological degree n");
    orhs->add_option("--levi", levi, "Levi subset");
    orhs->add_option("--char", char_spec, "character spec file");
    add_global(orhs);
    auto* oreport = ord->add_subcommand("report", "full degree table with statuses");
    oreport->add_option("--levi", levi, "Levi subset");
    oreport->add_option("--char", char_spec, "character spec file (optional)");
    add_global(oreport);
    add_global(ord);

    // bh
    auto* bh = app.add_subcommand("bh", "constituent lattices");
    std::string wpsi_word;
    auto* bbuild = bh->add_subcommand("build", "build one lattice");
    bbuild->add_option("--char", char_spec, "character spec file");
    bbuild->add_option("--psi", psi_path, "root subset file (or phi+ / empty)");
    bbuild->add_option("--wpsi", wpsi_word, "element of W_Psi as a word");
    add_global(bbuild);
    auto* bsocle = bh->add_subcommand("socle", "socle of the direct sum over W_Psi");
    bsocle->add_option("--char", char_spec, "character spec file");
    bsocle->add_option("--psi", psi_path, "root subset file (or phi+ / empty)");
    add_global(bsocle);
    auto* bgraphs = bh->add_subcommand("graphs", "emit DOT/JSON artifacts; --out names the directory");
    bgraphs->add_option("--char", char_spec, "character spec file");
    bgraphs->add_option("--psi", psi_path, "root subset file (or phi+ / empty)");
    bgraphs->add_option("--wpsi", wpsi_word, "element of W_Psi as a word");
    add_global(bgraphs);
    add_global(bh);

    // ext
    auto* ext = app.add_subcommand("ext", "extension classifiers");
    std::string chi_f, chiP_f, chiPP_f, P_str, Pp_str, pi_name = "pi", pi_p_name = "pi'", twist;
    auto* echain = ext->add_subcommand("chain", "three-step chain classification");
    echain->add_option("--chi", chi_f, "socle character spec");
    echain->add_option("--chiP", chiP_f, "middle character spec");
    echain->add_option("--chiPP", chiPP_f, "cosocle character spec");
    add_global(echain);
    auto* econj = ext->add_subcommand("conj343", "parabolic case dispatch");
    econj->add_option("--P", P_str, "Levi subset of P");
    econj->add_option("--Pp", Pp_str, "Levi subset of P'");
    econj->add_option("--pi", pi_name, "label for pi");
    econj->add_option("--pi-prime", pi_p_name, "label for pi'");
    econj->add_option("--pi-prime-twist", twist, "set pi' = pi^alpha twist, e.g. a3");
    add_global(econj);
    auto* eprop = ext->add_subcommand("prop345", "d=1 transfer hypothesis table");
    eprop->add_option("--levi", levi, "Levi subset");
    eprop->add_option("--char", char_spec, "character spec file");
    add_global(eprop);
    add_global(ext);

    // verify
    auto* verify = app.add_subcommand("verify", "reproducibility suites");
    auto* vex = verify->add_subcommand("example313", "order-two G2 character report");
    add_global(vex);
    auto* vlem = verify->add_subcommand("lemma314", "short-word sweep with violation count");
    add_global(vlem);
    add_global(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        auto group_selftest = [&](CLI::App* grp, const char* name) -> std::optional<int> {
            if (grp->parsed() && g.selftest) return run_group_selftest(g, name);
            return std::nullopt;
        };
        if (auto r = group_selftest(datum, "datum")) return *r;
        if (auto r = group_selftest(weyl, "weyl")) return *r;
        if (auto r = group_selftest(chr, "char")) return *r;
        if (auto r = group_selftest(roots, "roots")) return *r;
        if (auto r = group_selftest(ord, "ord")) return *r;
        if (auto r = group_selftest(bh, "bh")) return *r;
        if (auto r = group_selftest(ext, "ext")) return *r;
        if (verify->parsed() && g.selftest) return run_group_selftest(g, "all");

        if (describe->parsed()) return cmd_datum_describe(g, kind, gl_n, sc_type, sc_rank, datum_spec);
        if (wenum->parsed()) return cmd_weyl_enum(g);
        if (wkostant->parsed()) return cmd_weyl_kostant(g, levi);
        if (wbruhat->parsed()) return cmd_weyl_bruhat(g, bruhat_pair);
        if (cgeneric->parsed()) return cmd_char_generic(g, char_spec);
        if (cex->parsed()) return cmd_char_example313(g, cex->count("--datum") > 0);
        if (csweep->parsed()) return cmd_char_sweep(g);
        if (rwpsi->parsed()) return cmd_roots_wpsi(g, psi_path);
        if (rorth->parsed()) return cmd_roots_orth(g, orth_set);
        if (orhs->parsed()) return cmd_ord_rhs(g, levi, deg, char_spec);
        if (oreport->parsed()) return cmd_ord_report(g, levi, char_spec);
        if (bbuild->parsed()) return cmd_bh_build(g, char_spec, psi_path, wpsi_word);
        if (bsocle->parsed()) return cmd_bh_socle(g, char_spec, psi_path);
        if (bgraphs->parsed()) return cmd_bh_graphs(g, char_spec, psi_path, wpsi_word);
        if (echain->parsed()) return cmd_ext_chain(g, chi_f, chiP_f, chiPP_f);
        if (econj->parsed()) return cmd_ext_conj343(g, P_str, Pp_str, pi_name, pi_p_name, twist);
        if (eprop->parsed()) return cmd_ext_prop345(g, levi, char_spec);
        if (vex->parsed()) return cmd_verify_example313(g, vex->count("--datum") > 0);
        if (vlem->parsed()) return cmd_verify_lemma314(g);
        throw ConfigError("no subcommand selected");
    } catch (const CapabilityError& e) {
        std::cerr << "error: capability: " << e.what() << "\n";
        return kExitCapability;
    } catch (const BoundError& e) {
        std::cerr << "error: bound: " << e.what() << "\n";
        return kExitBound;
    } catch (const CheckError& e) {
        std::cerr << "error: check: " << e.what() << "\n";
        return kExitCheck;
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return kExitConfig;
    }
}
