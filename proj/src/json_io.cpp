#include "weylchar/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace weylchar {

namespace {

Json vec_json(const Vec& v) {
    Json arr = Json::array();
    for (Int x : v) arr.push_back(x);
    return arr;
}

Int parse_val_p(const RootDatum&, Int p, Int q, const Json& v) {
    if (v.is_number_integer()) {
        if (q != p)
            throw ConfigError("integer val_p is supported only for q = p; use \"g^k\"");
        Int residue = v.get<Int>();
        return dlog_mod_p(p, residue);
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s.rfind("g^", 0) != 0) throw ConfigError("val_p string must look like \"g^k\"");
        try {
            Int k = std::stoll(s.substr(2));
            Int m = k % (q - 1);
            return m < 0 ? m + (q - 1) : m;
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            throw ConfigError("bad val_p string: " + s);
        }
    }
    throw ConfigError("val_p must be \"g^k\" or an integer residue");
}

} // namespace

Json character_json(const TorusCharacter& chi) {
    Json j;
    j["p"] = chi.p();
    j["q"] = chi.q();
    if (chi.q() == chi.p()) j["generator"] = smallest_primitive_root(chi.p());
    Json comps = Json::array();
    for (const auto& c : chi.components()) {
        Json cj;
        cj["val_p"] = "g^" + std::to_string(c.val);
        cj["e"] = c.e;
        comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
}

TorusCharacter parse_character(const RootDatum& d, const Json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("components"))
        throw ConfigError("character spec needs fields p and components");
    Int p = j.at("p").get<Int>();
    Int q = j.contains("q") ? j.at("q").get<Int>() : p;
    if (!is_prime(p)) throw ConfigError("character spec: p must be prime");
    const Json& comps = j.at("components");
    if (!comps.is_array() || static_cast<int>(comps.size()) != d.rank())
        throw ConfigError("character spec: need one component per cocharacter basis vector (" +
                          std::to_string(d.rank()) + ")");
    std::vector<SmoothCharQp> out;
    for (const Json& cj : comps) {
        Int val = cj.contains("val_p") ? parse_val_p(d, p, q, cj.at("val_p")) : 0;
        Int e = cj.contains("e") ? cj.at("e").get<Int>() : 0;
        e %= (p - 1);
        if (e < 0) e += p - 1;
        out.push_back(SmoothCharQp{p, q, val, e});
    }
    return TorusCharacter(d, p, q, std::move(out));
}

TorusCharacter load_character(const RootDatum& d, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open character spec: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("bad JSON in " + path + ": " + e.what());
    }
    return parse_character(d, j);
}

Json word_json(const WeylElement& w) {
    Json arr = Json::array();
    for (int i : w.word()) arr.push_back(i + 1);
    return arr;
}

std::vector<int> parse_word_string(const std::string& s, int num_simple) {
    std::vector<int> word;
    auto push = [&](long v) {
        if (v < 1 || v > num_simple) throw ConfigError("word letter out of range: s" + std::to_string(v));
        word.push_back(static_cast<int>(v - 1));
    };
    if (s.empty() || s == "e" || s == "id") return word;
    if (s.find('s') != std::string::npos) {
        std::size_t pos = 0;
        while (pos < s.size()) {
            if (s[pos] == 's') {
                std::size_t end = pos + 1;
                while (end < s.size() && isdigit(static_cast<unsigned char>(s[end]))) ++end;
                if (end == pos + 1) throw ConfigError("bad word string: " + s);
                push(std::stol(s.substr(pos + 1, end - pos - 1)));
                pos = end;
            } else if (s[pos] == '*' || s[pos] == ' ' || s[pos] == ',') {
                ++pos;
            } else {
                throw ConfigError("bad word string: " + s);
            }
        }
        return word;
    }
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        std::string tok = s.substr(pos, end == std::string::npos ? end : end - pos);
        try {
            push(std::stol(tok));
        } catch (const ConfigError&) {
            throw;
        } catch (...) {
            throw ConfigError("bad word string: " + s);
        }
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return word;
}

Json root_subset_json(const RootDatum& d, const std::vector<int>& roots) {
    Json arr = Json::array();
    for (int k : roots) arr.push_back(vec_json(d.positive_root(k).simple_coords));
    return arr;
}

std::vector<int> parse_root_subset(const RootDatum& d, const Json& j) {
    if (!j.is_array()) throw ConfigError("root subset must be a list of simple-coordinate vectors");
    std::vector<int> out;
    for (const Json& rj : j) {
        if (!rj.is_array() || static_cast<int>(rj.size()) != d.num_simple())
            throw ConfigError("root subset entry must have one coordinate per simple root");
        Vec sc;
        for (const Json& x : rj) sc.push_back(x.get<Int>());
        Vec coords(d.rank(), 0);
        for (int i = 0; i < d.num_simple(); ++i)
            coords = add(coords, scale(sc[i], d.simple_root(i)));
        out.push_back(d.positive_root_index(coords));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> load_root_subset(const RootDatum& d, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open root subset file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError("bad JSON in " + path + ": " + e.what());
    }
    return parse_root_subset(d, j);
}

std::vector<int> parse_levi_string(const std::string& s, int num_simple) {
    std::vector<int> out;
    if (s.empty() || s == "-" || s == "none") return out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find(',', pos);
        std::string tok = s.substr(pos, end == std::string::npos ? end : end - pos);
        if (tok.size() < 2 || tok[0] != 'a') throw ConfigError("bad Levi token: " + tok);
        long v = 0;
        try {
            v = std::stol(tok.substr(1));
        } catch (...) {
            throw ConfigError("bad Levi token: " + tok);
        }
        if (v < 1 || v > num_simple) throw ConfigError("Levi simple index out of range: " + tok);
        out.push_back(static_cast<int>(v - 1));
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string levi_string(const std::vector<int>& levi) {
    std::string s;
    for (std::size_t i = 0; i < levi.size(); ++i) {
        if (i) s += ",";
        s += "a" + std::to_string(levi[i] + 1);
    }
    return s;
}

Json datum_json(const RootDatum& d) {
    Json j;
    j["name"] = d.name();
    j["rank"] = d.rank();
    j["connected_center"] = d.connected_center();
    Json simples = Json::array();
    for (int i = 0; i < d.num_simple(); ++i) simples.push_back(vec_json(d.simple_root(i)));
    j["simple_roots"] = simples;
    Json coroots = Json::array();
    for (int i = 0; i < d.num_simple(); ++i) coroots.push_back(vec_json(d.simple_coroot(i)));
    j["simple_coroots"] = coroots;
    Json pos = Json::array();
    for (int k = 0; k < d.num_positive(); ++k) pos.push_back(vec_json(d.positive_root(k).simple_coords));
    j["positive_roots"] = pos;
    Json cartan = Json::array();
    for (int i = 0; i < d.num_simple(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < d.num_simple(); ++k) row.push_back(d.cartan(i, k));
        cartan.push_back(row);
    }
    j["cartan_matrix"] = cartan;
    j["theta"] = vec_json(d.theta());
    if (d.coweights_available()) {
        Json cw = Json::array();
        for (int i = 0; i < d.num_simple(); ++i) cw.push_back(vec_json(d.fundamental_coweight(i)));
        j["fundamental_coweights"] = cw;
    } else {
        j["fundamental_coweights"] = nullptr;
    }
    return j;
}

Json graded_piece_json(const GradedPiece& piece, RowStatus status) {
    Json j;
    j["degree"] = piece.degree;
    j["kostant_rep"] = word_json(piece.rep);
    j["alpha_tilde"] = vec_json(piece.twist_simple);
    j["output_character"] = character_json(piece.out_char);
    j["status"] = to_string(status);
    return j;
}

namespace {

RowStatus piece_status(const ParabolicDatum& p, const GradedPiece& piece) {
    if (piece.degree == 0) return RowStatus::proved_n0;
    return levi_irreducibility_criterion(p, piece.out_char) ? RowStatus::proved_irreducible_case
                                                            : RowStatus::conjectural;
}

} // namespace

Json ord_table_json(const std::vector<OrdTableRow>& rows, const ParabolicDatum& p) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json rj;
        rj["degree"] = row.degree;
        Json pieces = Json::array();
        for (const auto& piece : row.pieces)
            pieces.push_back(graded_piece_json(piece, piece_status(p, piece)));
        rj["pieces"] = pieces;
        rj["status"] = to_string(row.status);
        arr.push_back(rj);
    }
    return arr;
}

RootDatum load_datum_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open datum spec: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::map<std::string, std::string> kv;
    Json j = Json::value_t::discarded;
    try {
        j = Json::parse(text);
    } catch (...) {
        // fall through to key=value parsing
    }
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_string())
                kv[it.key()] = it.value().get<std::string>();
            else
                kv[it.key()] = it.value().dump();
        }
    } else {
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            auto eq = line.find('=');
            if (line.empty() || line[0] == '#') continue;
            if (eq == std::string::npos) throw ConfigError("datum spec line is not key=value: " + line);
            kv[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    auto get = [&](const std::string& key) -> std::string {
        auto it = kv.find(key);
        if (it == kv.end()) throw ConfigError("datum spec is missing key " + key);
        return it->second;
    };
    std::string kind = get("kind");
    if (kind == "gl") return build_gl(std::stoi(get("n")));
    if (kind == "gsp4" || kind == "gsp") return build_gsp4();
    if (kind == "g2") return build_g2();
    if (kind == "sc") return build_simply_connected(get("type").at(0), std::stoi(get("rank")));
    if (kind == "name") return build_datum_from_name(get("name"));
    throw ConfigError("datum spec: unknown kind " + kind);
}

Json lattice_json(const BHLattice& lat) {
    Json j;
    Json cons = Json::array();
    for (const auto& c : lat.constituents) {
        Json cj;
        cj["w_psi"] = word_json(c.w_psi);
        Json I = Json::array();
        for (int i : c.I) I.push_back(i + 1);
        cj["I"] = I;
        cj["character"] = character_json(c.label);
        cons.push_back(cj);
    }
    j["constituents"] = cons;
    Json edges = Json::array();
    for (const auto& [a, b] : lat.ext_edges) edges.push_back(Json::array({a, b}));
    j["edges"] = edges;
    Json degs = Json::object();
    for (std::size_t i = 0; i < lat.socle_degree.size(); ++i)
        degs[std::to_string(i)] = lat.socle_degree[i];
    j["socle_degrees"] = degs;
    j["hypothesis_regime"] = to_string(lat.regime);
    j["irreducibility_assumed"] = true;
    j["irreducibility_criterion"] = lat.irreducibility_criterion;
    return j;
}

Json chain_report_json(const ChainReport& rep) {
    Json j;
    j["verdict"] = to_string(rep.verdict);
    if (rep.alpha >= 0) j["alpha"] = "a" + std::to_string(rep.alpha + 1);
    j["irreducibility_unchecked"] = rep.irreducibility_unchecked;
    return j;
}

Json parabolic_ext_report_json(const ParabolicExtReport& rep) {
    Json j;
    j["case"] = to_string(rep.which);
    j["prediction"] = rep.prediction;
    j["delta_L_perp"] = levi_string(rep.delta_L_perp);
    if (rep.alpha >= 0) j["alpha"] = "a" + std::to_string(rep.alpha + 1);
    j["irreducible_or_podd_unchecked"] = rep.irreducible_or_podd_unchecked;
    return j;
}

Json ext_transfer_json(const ExtTransferReport& rep) {
    Json j;
    Json table = Json::array();
    for (const auto& e : rep.table) {
        Json ej;
        ej["alpha"] = "a" + std::to_string(e.alpha + 1);
        ej["beta"] = "a" + std::to_string(e.beta + 1);
        ej["nontrivial"] = e.nontrivial;
        table.push_back(ej);
    }
    j["table"] = table;
    j["all_nontrivial"] = rep.all_nontrivial;
    Json moves = Json::array();
    for (const auto& [a, m] : rep.twist_moves) {
        Json mj;
        mj["alpha"] = "a" + std::to_string(a + 1);
        mj["label_differs_from_chi"] = m;
        moves.push_back(mj);
    }
    j["twist_moves"] = moves;
    return j;
}

} // namespace weylchar
