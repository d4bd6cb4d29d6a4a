#include "gkforge/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace gkforge {

using ordered_json = nlohmann::ordered_json;

std::vector<std::string> builtin_names() {
    return {"ab2", "ab3", "ab4", "ab5", "ab6", "ab6_twisted", "heis3", "heis3_r", "kt4", "kt4_twisted", "t4kahler"};
}

static Mat complex_block_j(int m) {
    // J e_{2k+1} = e_{2k+2}
    Mat j(m, m);
    for (int k = 0; 2 * k + 1 < m; ++k) {
        j.at(2 * k + 1, 2 * k) = CRat(1);
        j.at(2 * k, 2 * k + 1) = CRat(-1);
    }
    return j;
}

static Form two_form(int m, std::initializer_list<std::tuple<int, int, int>> terms) {
    // entries (i, j, sign) with 1-based indices
    Form f(m);
    for (auto [i, j, s] : terms) f += Form::monomial(m, (1u << (i - 1)) | (1u << (j - 1)), CRat(s));
    return f;
}

CatalogEntry builtin(const std::string& name) {
    auto names = builtin_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        std::string list;
        for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
        throw UnknownEntry("unknown catalog entry '" + name + "'; available: " + list);
    }

    CatalogEntry e;
    e.name = name;
    if (name == "ab6_twisted") {
        // abelian dim 6 with a real closed twist whose (3,0)-part vanishes for
        // the standard complex structure: the complex-type structure stays
        // integrable and its holomorphic volume form is d_H-closed, but the
        // twisted brackets on the eigenspace are nonzero.
        e.g = LieAlgebra::abelian(6);
        Form h(6);
        h += Form::monomial(6, 0b010101u, CRat(1));  // e1^e3^e5
        h += Form::monomial(6, 0b101001u, CRat(1));  // e1^e4^e6
        h += Form::monomial(6, 0b100110u, CRat(1));  // e2^e3^e6
        h += Form::monomial(6, 0b011010u, CRat(-1)); // e2^e4^e5
        e.twist = make_twist(e.g, h);
        e.structures.emplace_back("complex", StructureDef{false, gcs_from_complex_structure(e.g, complex_block_j(6), e.twist).j, "", ""});
        e.expected = {{"jacobi", true},
                      {"nilpotent", true},
                      {"gcs.complex", true},
                      {"typen.complex", true},
                      {"holtrivial.complex", true},
                      {"eq3.complex", true},
                      {"abelian.complex", false},
                      {"nonformal.complex", true}};
        return e;
    }
    if (name.rfind("ab", 0) == 0) {
        int dim = name[2] - '0';
        e.g = LieAlgebra::abelian(dim);
        e.twist = zero_twist(e.g);
        e.expected = {{"jacobi", true}, {"nilpotent", true}};
        return e;
    }
    if (name == "heis3") {
        e.g = LieAlgebra::from_terms(3, {{0, 1, 2, Rat(1)}});
        e.twist = zero_twist(e.g);
        e.expected = {{"jacobi", true}, {"nilpotent", true}, {"witness", true}};
        return e;
    }
    if (name == "heis3_r") {
        e.g = LieAlgebra::from_terms(4, {{0, 1, 2, Rat(1)}});
        e.twist = zero_twist(e.g);
        Form omega = two_form(4, {{1, 4, 1}, {2, 3, 1}});
        e.structures.emplace_back("symplectic", StructureDef{false, gcs_from_symplectic(e.g, omega, e.twist).j, "", ""});
        e.expected = {{"jacobi", true},
                      {"nilpotent", true},
                      {"witness", true},
                      {"gcs.symplectic", true},
                      {"type0.symplectic", true},
                      {"holtrivial.symplectic", true},
                      {"eq3.symplectic", true},
                      {"abelian.symplectic", false},
                      {"nonformal.symplectic", true}};
        return e;
    }
    if (name == "kt4") {
        e.g = LieAlgebra::from_terms(4, {{0, 1, 2, Rat(1)}});
        e.twist = zero_twist(e.g);
        Form omega = two_form(4, {{1, 3, 1}, {2, 4, 1}});
        e.structures.emplace_back("symplectic", StructureDef{false, gcs_from_symplectic(e.g, omega, e.twist).j, "", ""});
        e.structures.emplace_back("complex", StructureDef{false, gcs_from_complex_structure(e.g, complex_block_j(4), e.twist).j, "", ""});
        e.expected = {{"jacobi", true},
                      {"nilpotent", true},
                      {"witness", true},
                      {"gcs.symplectic", true},
                      {"gcs.complex", true},
                      {"type0.symplectic", true},
                      {"typen.complex", true},
                      {"holtrivial.symplectic", true},
                      {"holtrivial.complex", true},
                      {"eq3.symplectic", true},
                      {"eq3.complex", true},
                      {"abelian.symplectic", false},
                      {"abelian.complex", false},
                      {"nonformal.symplectic", true}};
        return e;
    }
    if (name == "kt4_twisted") {
        e.g = LieAlgebra::from_terms(4, {{0, 1, 2, Rat(1)}});
        Form h(4);
        h += Form::monomial(4, 0b1011u, CRat(1)); // e1^e2^e4
        e.twist = make_twist(e.g, h);
        Form omega = two_form(4, {{1, 3, 1}, {2, 4, 1}});
        GCStructure sympl = gcs_from_symplectic(e.g, omega, zero_twist(e.g));
        // Shear by -e3^e4: integrable for this twist (the shear carries the
        // untwisted bracket to the one twisted by d(-e3^e4) = e1^e2^e4).
        GCStructure sheared = b_field_transform(sympl, two_form(4, {{3, 4, -1}}), e.twist);
        e.structures.emplace_back("symplectic_b", StructureDef{false, sheared.j, "", ""});
        e.expected = {{"jacobi", true},
                      {"nilpotent", true},
                      {"gcs.symplectic_b", true},
                      {"type0.symplectic_b", true},
                      {"holtrivial.symplectic_b", true},
                      {"eq3.symplectic_b", true},
                      {"nonformal.symplectic_b", true}};
        return e;
    }
    // t4kahler
    e.g = LieAlgebra::abelian(4);
    e.twist = zero_twist(e.g);
    Form omega = two_form(4, {{1, 2, 1}, {3, 4, 1}});
    e.structures.emplace_back("complex", StructureDef{false, gcs_from_complex_structure(e.g, complex_block_j(4), e.twist).j, "", ""});
    e.structures.emplace_back("symplectic", StructureDef{false, gcs_from_symplectic(e.g, omega, e.twist).j, "", ""});
    e.structures.emplace_back("kahler", StructureDef{true, Mat(), "complex", "symplectic"});
    e.expected = {{"jacobi", true},
                  {"nilpotent", true},
                  {"gcs.complex", true},
                  {"gcs.symplectic", true},
                  {"typen.complex", true},
                  {"type0.symplectic", true},
                  {"holtrivial.complex", true},
                  {"holtrivial.symplectic", true},
                  {"eq3.complex", true},
                  {"eq3.symplectic", true},
                  {"abelian.complex", true},
                  {"abelian.symplectic", true},
                  {"gk.kahler", true},
                  {"ddbar.kahler", true},
                  {"noobstruction.kahler", true}};
    return e;
}

static Rat parse_rat_field(const ordered_json& j, const std::string& where) {
    if (!j.is_string()) throw CatalogParseError(where + ": rational must be a string \"p/q\"");
    auto r = Rat::parse(j.get<std::string>());
    if (!r) throw CatalogParseError(where + ": malformed rational '" + j.get<std::string>() + "'");
    return *r;
}

static int parse_index(const ordered_json& j, int dim, const std::string& where) {
    if (!j.is_number_integer()) throw CatalogParseError(where + ": index must be an integer");
    int v = j.get<int>();
    if (v < 1 || v > dim)
        throw CatalogParseError(where + ": index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    return v;
}

CatalogEntry parse_entry(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw CatalogParseError(std::string("invalid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw CatalogParseError("top level must be an object");

    CatalogEntry e;
    e.name = doc.value("name", "unnamed");
    if (!doc.contains("dim")) throw CatalogParseError("missing field 'dim'");
    if (!doc["dim"].is_number_integer() || doc["dim"].get<int>() < 1)
        throw CatalogParseError("dim: must be a positive integer");
    int dim = doc["dim"].get<int>();

    std::vector<BracketTerm> terms;
    if (doc.contains("brackets")) {
        if (!doc["brackets"].is_array()) throw CatalogParseError("brackets: must be an array");
        int idx = 0;
        for (const auto& b : doc["brackets"]) {
            std::string where = "brackets[" + std::to_string(idx++) + "]";
            if (!b.is_object() || !b.contains("i") || !b.contains("j") || !b.contains("k") || !b.contains("c"))
                throw CatalogParseError(where + ": need fields i, j, k, c");
            BracketTerm t;
            t.i = parse_index(b["i"], dim, where + ".i") - 1;
            t.j = parse_index(b["j"], dim, where + ".j") - 1;
            t.k = parse_index(b["k"], dim, where + ".k") - 1;
            t.c = parse_rat_field(b["c"], where + ".c");
            terms.push_back(std::move(t));
        }
    }
    try {
        e.g = LieAlgebra::from_terms(dim, terms);
    } catch (const std::invalid_argument& ex) {
        throw CatalogParseError(std::string("brackets: ") + ex.what());
    }

    Form h(dim);
    if (doc.contains("H")) {
        if (!doc["H"].is_array()) throw CatalogParseError("H: must be an array");
        int idx = 0;
        for (const auto& t : doc["H"]) {
            std::string where = "H[" + std::to_string(idx++) + "]";
            if (!t.is_object() || !t.contains("i") || !t.contains("j") || !t.contains("k") || !t.contains("c"))
                throw CatalogParseError(where + ": need fields i, j, k, c");
            int i = parse_index(t["i"], dim, where + ".i");
            int j = parse_index(t["j"], dim, where + ".j");
            int k = parse_index(t["k"], dim, where + ".k");
            if (!(i < j && j < k))
                throw CatalogParseError(where + ": indices must satisfy i < j < k (got " + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");
            Rat c = parse_rat_field(t["c"], where + ".c");
            h += Form::monomial(dim, (1u << (i - 1)) | (1u << (j - 1)) | (1u << (k - 1)), CRat(c));
        }
    }
    try {
        e.twist = make_twist(e.g, std::move(h));
    } catch (const NonClosedTwist& ex) {
        throw CatalogParseError(std::string("H: ") + ex.what());
    } catch (const std::invalid_argument& ex) {
        throw CatalogParseError(std::string("H: ") + ex.what());
    }

    if (doc.contains("structures")) {
        if (!doc["structures"].is_object()) throw CatalogParseError("structures: must be an object");
        for (const auto& [sname, sval] : doc["structures"].items()) {
            std::string where = "structures." + sname;
            StructureDef def;
            if (sval.contains("J")) {
                const auto& jm = sval["J"];
                if (!jm.is_array() || static_cast<int>(jm.size()) != 2 * dim)
                    throw CatalogParseError(where + ".J: must be a " + std::to_string(2 * dim) + "x" +
                                            std::to_string(2 * dim) + " array");
                def.j = Mat(2 * dim, 2 * dim);
                for (int r = 0; r < 2 * dim; ++r) {
                    if (!jm[r].is_array() || static_cast<int>(jm[r].size()) != 2 * dim)
                        throw CatalogParseError(where + ".J: row " + std::to_string(r) + " has wrong length");
                    for (int c = 0; c < 2 * dim; ++c)
                        def.j.at(r, c) = CRat(parse_rat_field(jm[r][c], where + ".J[" + std::to_string(r) + "][" +
                                                                            std::to_string(c) + "]"));
                }
            } else if (sval.contains("pair")) {
                const auto& p = sval["pair"];
                if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
                    throw CatalogParseError(where + ".pair: must be [name, name]");
                def.is_pair = true;
                def.first = p[0].get<std::string>();
                def.second = p[1].get<std::string>();
                for (const std::string& ref : {def.first, def.second}) {
                    bool found = false;
                    for (const auto& [n, d] : e.structures)
                        if (n == ref && !d.is_pair) found = true;
                    if (!found)
                        throw CatalogParseError(where + ".pair: '" + ref + "' does not name an earlier structure");
                }
            } else {
                throw CatalogParseError(where + ": need either 'J' or 'pair'");
            }
            e.structures.emplace_back(sname, std::move(def));
        }
    }

    if (doc.contains("expected")) {
        if (!doc["expected"].is_object()) throw CatalogParseError("expected: must be an object");
        for (const auto& [k, v] : doc["expected"].items()) {
            if (!v.is_boolean()) throw CatalogParseError("expected." + k + ": must be a boolean");
            e.expected.emplace_back(k, v.get<bool>());
        }
    }
    return e;
}

std::string serialize_entry(const CatalogEntry& e) {
    ordered_json doc;
    doc["name"] = e.name;
    doc["dim"] = e.g.dim();
    ordered_json brackets = ordered_json::array();
    int m = e.g.dim();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                const Rat& c = e.g.c(k, i, j);
                if (c.is_zero()) continue;
                brackets.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", c.str()}});
            }
    doc["brackets"] = std::move(brackets);
    ordered_json hterms = ordered_json::array();
    for (const auto& [mask, c] : e.twist.h.terms) {
        std::vector<int> idx;
        for (int b = 0; b < m; ++b)
            if (mask & (1u << b)) idx.push_back(b + 1);
        hterms.push_back({{"i", idx[0]}, {"j", idx[1]}, {"k", idx[2]}, {"c", c.re.str()}});
    }
    doc["H"] = std::move(hterms);
    ordered_json structures = ordered_json::object();
    for (const auto& [name, def] : e.structures) {
        if (def.is_pair) {
            structures[name] = {{"pair", {def.first, def.second}}};
        } else {
            ordered_json rows = ordered_json::array();
            for (int r = 0; r < def.j.rows; ++r) {
                ordered_json row = ordered_json::array();
                for (int c = 0; c < def.j.cols; ++c) row.push_back(def.j.at(r, c).re.str());
                rows.push_back(std::move(row));
            }
            structures[name] = {{"J", std::move(rows)}};
        }
    }
    doc["structures"] = std::move(structures);
    ordered_json expected = ordered_json::object();
    for (const auto& [k, v] : e.expected) expected[k] = v;
    doc["expected"] = std::move(expected);
    return doc.dump(2) + "\n";
}

GCStructure structure_gcs(const CatalogEntry& e, const std::string& name) {
    for (const auto& [n, def] : e.structures)
        if (n == name) {
            if (def.is_pair) throw UnknownEntry("structure '" + name + "' is a pair, not a single structure");
            return GCStructure{def.j, e.twist};
        }
    throw UnknownEntry("entry '" + e.name + "' has no structure named '" + name + "'");
}

GKPair structure_pair(const CatalogEntry& e, const std::string& name) {
    for (const auto& [n, def] : e.structures)
        if (n == name) {
            if (!def.is_pair) throw UnknownEntry("structure '" + name + "' is not a pair");
            return GKPair{structure_gcs(e, def.first), structure_gcs(e, def.second)};
        }
    throw UnknownEntry("entry '" + e.name + "' has no pair named '" + name + "'");
}

} // namespace gkforge
