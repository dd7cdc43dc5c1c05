#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "weylchar/bh_lattice.hpp"
#include "weylchar/chars.hpp"
#include "weylchar/closed_roots.hpp"
#include "weylchar/ext_rules.hpp"
#include "weylchar/ord_parts.hpp"

namespace weylchar {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// ---- characters -----------------------------------------------------------
// {"p": 5, "q": 5, "generator": 2, "components": [{"val_p": "g^1", "e": 2}, ...]}
// val_p accepts "g^k" (k the discrete log with respect to the documented
// generator) or, when q = p, an integer residue mod p.  The generator field
// is emitted for q = p only (the smallest primitive root mod p).
Json character_json(const TorusCharacter& chi);
TorusCharacter parse_character(const RootDatum& d, const Json& j);
TorusCharacter load_character(const RootDatum& d, const std::string& path);

// ---- words and root subsets ------------------------------------------------
// Weyl elements print as canonical reduced words with 1-based simple indices;
// the empty list is the identity.  Accepted string forms: "s1s2s1", "1,2,1",
// "e" or "" for the identity.
Json word_json(const WeylElement& w);
std::vector<int> parse_word_string(const std::string& s, int num_simple);

// Root subsets print as lists of simple-coordinate vectors.
Json root_subset_json(const RootDatum& d, const std::vector<int>& roots);
std::vector<int> parse_root_subset(const RootDatum& d, const Json& j);
std::vector<int> load_root_subset(const RootDatum& d, const std::string& path);

// Levi subsets: "a1,a3" (1-based), "" or "-" for the empty set.
std::vector<int> parse_levi_string(const std::string& s, int num_simple);
std::string levi_string(const std::vector<int>& levi);

// Datum spec files: JSON object {"kind": "gl", "n": 3} / {"kind": "sc",
// "type": "b", "rank": 3} / {"kind": "gsp4"} / {"kind": "name", "name":
// "gl2xgl2"}, or line-oriented key=value with the same keys.
RootDatum load_datum_spec(const std::string& path);

// ---- report objects ---------------------------------------------------------
Json datum_json(const RootDatum& d);
// Per-piece status: proved_n0 in degree 0, otherwise proved_irreducible_case
// when the piece's Levi irreducibility criterion holds, else conjectural.
Json graded_piece_json(const GradedPiece& piece, RowStatus status);
Json ord_table_json(const std::vector<OrdTableRow>& rows, const ParabolicDatum& p);
Json lattice_json(const BHLattice& lat);
Json chain_report_json(const ChainReport& rep);
Json parabolic_ext_report_json(const ParabolicExtReport& rep);
Json ext_transfer_json(const ExtTransferReport& rep);

} // namespace weylchar
