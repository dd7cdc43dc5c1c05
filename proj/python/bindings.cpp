#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weylchar/json_io.hpp"
#include "weylchar/selftest.hpp"

namespace py = pybind11;
using namespace weylchar;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const auto& x : j) out.append(json_to_py(x));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (auto it = j.begin(); it != j.end(); ++it)
            out[py::str(it.key())] = json_to_py(it.value());
        return out;
    }
    default: return py::none();
    }
}

Json py_to_json(const py::handle& h) {
    if (h.is_none()) return nullptr;
    if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
    if (py::isinstance<py::int_>(h)) return h.cast<long long>();
    if (py::isinstance<py::float_>(h)) return h.cast<double>();
    if (py::isinstance<py::str>(h)) return h.cast<std::string>();
    if (py::isinstance<py::list>(h) || py::isinstance<py::tuple>(h)) {
        Json arr = Json::array();
        for (const auto& x : h) arr.push_back(py_to_json(x));
        return arr;
    }
    if (py::isinstance<py::dict>(h)) {
        Json obj = Json::object();
        for (const auto& kv : h.cast<py::dict>())
            obj[kv.first.cast<std::string>()] = py_to_json(kv.second);
        return obj;
    }
    throw ConfigError("unsupported python value in character/root-subset spec");
}

TorusCharacter char_from_py(const RootDatum& d, const py::handle& spec) {
    return parse_character(d, py_to_json(spec));
}

ClosedRootSubset psi_from_py(const RootDatum& d, const py::handle& spec) {
    if (py::isinstance<py::str>(spec)) {
        std::string s = spec.cast<std::string>();
        std::vector<int> roots;
        if (s == "phi+") {
            for (int k = 0; k < d.num_positive(); ++k) roots.push_back(k);
        } else if (s != "empty") {
            throw ConfigError("psi must be \"phi+\", \"empty\" or a list of coordinate vectors");
        }
        return make_closed(d, roots);
    }
    return make_closed(d, parse_root_subset(d, py_to_json(spec)));
}

py::dict describe_datum(const std::string& name) {
    RootDatum d = build_datum_from_name(name);
    return json_to_py(datum_json(d));
}

py::list weyl_words(const std::string& name, std::size_t cap) {
    RootDatum d = build_datum_from_name(name);
    py::list out;
    for (const auto& w : enumerate_weyl(d, cap)) out.append(json_to_py(word_json(w)));
    return out;
}

py::list kostant_words(const std::string& name, const std::string& levi) {
    RootDatum d = build_datum_from_name(name);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    py::list out;
    for (const auto& w : kostant_representatives(p)) out.append(json_to_py(word_json(w)));
    return out;
}

bool bruhat_leq_words(const std::string& name, const std::string& w1, const std::string& w2) {
    RootDatum d = build_datum_from_name(name);
    return bruhat_leq(WeylElement::from_word(d, parse_word_string(w1, d.num_simple())),
                      WeylElement::from_word(d, parse_word_string(w2, d.num_simple())));
}

std::string genericity_of(const std::string& name, const py::handle& spec) {
    RootDatum d = build_datum_from_name(name);
    return to_string(genericity(char_from_py(d, spec)));
}

py::dict example313(long long p) {
    RootDatum d = build_g2();
    TorusCharacter chi = quadratic_g2_character(d, p);
    WeylElement w0 = longest_element(d);
    Json j;
    j["p"] = p;
    j["generic"] = (genericity(chi) == Genericity::generic);
    j["w0_fixed"] = (weyl_act(w0, chi) == chi);
    j["length_w0"] = w0.length();
    j["w0_word"] = word_json(w0);
    j["character"] = character_json(chi);
    return json_to_py(j);
}

py::dict lemma314_sweep(const std::string& name, long long p) {
    RootDatum d = build_datum_from_name(name);
    auto weyl = enumerate_weyl(d);
    long long pairs = 0, violations = 0;
    long long swept = 0;
    bool witness6 = false;
    for (const auto& chi : enumerate_characters(d, p, p)) {
        ++swept;
        if (!is_generic(chi)) continue;
        for (const auto& w : weyl) {
            if (w.length() >= 1 && w.length() <= 5) {
                ++pairs;
                if (weyl_act(w, chi) == chi) ++violations;
            }
            if (w.length() == 6 && weyl_act(w, chi) == chi) witness6 = true;
        }
    }
    Json j;
    j["datum"] = d.name();
    j["p"] = p;
    j["characters_swept"] = swept;
    j["pairs_checked"] = pairs;
    j["violations"] = violations;
    j["optimality_witness_at_length_6"] = witness6;
    return json_to_py(j);
}

py::list ord_report(const std::string& name, const std::string& levi, int d_param,
                    const py::handle& spec) {
    RootDatum d = build_datum_from_name(name);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    std::optional<TorusCharacter> chi;
    if (!spec.is_none()) chi = char_from_py(d, spec);
    return json_to_py(ord_table_json(ord_table(p, chi, d_param), p));
}

py::dict bh_build(const std::string& name, const py::handle& char_spec, const py::handle& psi_spec,
                  const std::string& wpsi) {
    RootDatum d = build_datum_from_name(name);
    TorusCharacter chi = char_from_py(d, char_spec);
    ClosedRootSubset psi = psi_from_py(d, psi_spec);
    WeylElement w = WeylElement::from_word(d, parse_word_string(wpsi, d.num_simple()));
    return json_to_py(lattice_json(build_lattice(chi, psi, w, enumerate_weyl(d))));
}

py::dict bh_socle(const std::string& name, const py::handle& char_spec, const py::handle& psi_spec) {
    RootDatum d = build_datum_from_name(name);
    TorusCharacter chi = char_from_py(d, char_spec);
    ClosedRootSubset psi = psi_from_py(d, psi_spec);
    SocleReport rep = pi_psi_socle(chi, psi, enumerate_weyl(d));
    Json j;
    j["strongly_generic"] = rep.strongly_generic;
    Json arr = Json::array();
    for (const auto& f : rep.factors) {
        Json fj;
        fj["w_psi"] = word_json(f.w_psi);
        fj["character"] = character_json(f.label);
        arr.push_back(fj);
    }
    j["socle_factors"] = arr;
    return json_to_py(j);
}

py::dict chain(const std::string& name, const py::handle& chi_s, const py::handle& chi1_s,
               const py::handle& chi2_s) {
    RootDatum d = build_datum_from_name(name);
    return json_to_py(chain_report_json(
        classify_chain(char_from_py(d, chi_s), char_from_py(d, chi1_s), char_from_py(d, chi2_s))));
}

py::dict conj343(const std::string& name, const std::string& P, const std::string& Pp, int d_param,
                 const std::string& pi_name, const std::string& pi_p_name,
                 const std::string& twist) {
    RootDatum d = build_datum_from_name(name);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(P, d.num_simple()));
    ParabolicDatum pp = make_parabolic(d, parse_levi_string(Pp, d.num_simple()));
    SupersingularLabel pi{pi_name, {}, Vec(d.rank(), 0)};
    SupersingularLabel pi_p{pi_p_name, {}, Vec(d.rank(), 0)};
    if (!twist.empty()) {
        auto idx = parse_levi_string(twist, d.num_simple());
        if (idx.size() != 1) throw ConfigError("twist takes a single simple root like \"a3\"");
        pi_p = conj_twist(d, pi, idx.front());
    }
    InductionPair pair{p, pp, pi, pi_p};
    return json_to_py(parabolic_ext_report_json(classify_parabolic_ext(pair, d_param)));
}

py::dict prop345(const std::string& name, const std::string& levi, const py::handle& spec) {
    RootDatum d = build_datum_from_name(name);
    ParabolicDatum p = make_parabolic(d, parse_levi_string(levi, d.num_simple()));
    return json_to_py(ext_transfer_json(ext_transfer_hypotheses(p, char_from_py(d, spec))));
}

py::dict selftest(const std::string& group) {
    Json j;
    Json arr = Json::array();
    int failures = 0;
    for (const auto& c : run_selftest(group)) {
        Json cj;
        cj["name"] = c.name;
        cj["passed"] = c.passed;
        arr.push_back(cj);
        if (!c.passed) ++failures;
    }
    j["checks"] = arr;
    j["failures"] = failures;
    return json_to_py(j);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact combinatorics of root data, Weyl groups and smooth mod-p characters";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<CapabilityError>(m, "CapabilityError");
    py::register_exception<BoundError>(m, "BoundError");
    py::register_exception<CheckError>(m, "CheckError");

    m.def("describe_datum", &describe_datum, py::arg("datum"),
          "Root datum description: simple roots, positive roots, Cartan matrix, theta, coweights.");
    m.def("weyl_words", &weyl_words, py::arg("datum"), py::arg("cap") = kDefaultWeylCap,
          "Canonical reduced words of all Weyl elements, ordered by (length, word).");
    m.def("kostant_words", &kostant_words, py::arg("datum"), py::arg("levi"),
          "Minimal-length coset representatives for the given Levi subset.");
    m.def("bruhat_leq", &bruhat_leq_words, py::arg("datum"), py::arg("w1"), py::arg("w2"));
    m.def("genericity", &genericity_of, py::arg("datum"), py::arg("character"),
          "One of not_weakly_generic, weakly_generic, generic, strongly_generic.");
    m.def("example313", &example313, py::arg("p") = 5);
    m.def("lemma314_sweep", &lemma314_sweep, py::arg("datum") = "g2", py::arg("p") = 5);
    m.def("ord_report", &ord_report, py::arg("datum"), py::arg("levi"), py::arg("d") = 1,
          py::arg("character") = py::none());
    m.def("bh_build", &bh_build, py::arg("datum"), py::arg("character"), py::arg("psi") = "phi+",
          py::arg("wpsi") = "");
    m.def("bh_socle", &bh_socle, py::arg("datum"), py::arg("character"), py::arg("psi") = "phi+");
    m.def("chain", &chain, py::arg("datum"), py::arg("chi"), py::arg("chi_mid"), py::arg("chi_top"));
    m.def("conj343", &conj343, py::arg("datum"), py::arg("P"), py::arg("Pp"), py::arg("d") = 1,
          py::arg("pi") = "pi", py::arg("pi_prime") = "pi'", py::arg("pi_prime_twist") = "");
    m.def("prop345", &prop345, py::arg("datum"), py::arg("levi"), py::arg("character"));
    m.def("selftest", &selftest, py::arg("group") = "all");
}
