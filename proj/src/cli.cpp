#include "gkforge/cli.hpp"

#include "gkforge/catalog.hpp"
#include "gkforge/prng.hpp"
#include "gkforge/report.hpp"

#include <CLI11.hpp>

#include <bit>
#include <fstream>
#include <sstream>

namespace gkforge {

namespace {

using ordered_json = nlohmann::ordered_json;

CatalogEntry load_input(const std::string& input) {
    auto names = builtin_names();
    for (const auto& n : names)
        if (n == input) return builtin(input);
    std::ifstream f(input);
    if (!f) throw UnknownEntry("no builtin or readable file named '" + input + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_entry(buf.str());
}

Report base_report(std::string command, const CatalogEntry& e) {
    Report r;
    r.command = std::move(command);
    r.input_name = e.name;
    r.input_digest = hex64(fnv1a64(serialize_entry(e)));
    return r;
}

GCStructure pick_gcs(const CatalogEntry& e, const std::string& name) {
    if (!name.empty()) return structure_gcs(e, name);
    for (const auto& [n, def] : e.structures)
        if (!def.is_pair) return GCStructure{def.j, e.twist};
    throw UnknownEntry("entry '" + e.name + "' declares no generalized complex structure");
}

GKPair pick_pair(const CatalogEntry& e, const std::string& name) {
    if (!name.empty()) return structure_pair(e, name);
    for (const auto& [n, def] : e.structures)
        if (def.is_pair) return structure_pair(e, n);
    throw UnknownEntry("entry '" + e.name + "' declares no structure pair");
}

std::vector<int> subspace_dims(const std::vector<Subspace>& v) {
    std::vector<int> d;
    for (const auto& s : v) d.push_back(s.dim());
    return d;
}

// ---------------------------------------------------------------- lie

Report report_lie_check(const CatalogEntry& e) {
    Report r = base_report("lie check", e);
    JacobiReport jac = check_jacobi(e.g);
    r.add("jacobi_identity", jac.ok,
          jac.ok ? "cyclic triple sums vanish"
                 : "fails on basis triple (" + std::to_string(jac.i + 1) + "," + std::to_string(jac.j + 1) + "," +
                       std::to_string(jac.k + 1) + ")");
    bool dsq = true;
    std::string dsq_detail = "d^2 = 0 on every generator";
    try {
        ce_differential(e.g);
    } catch (const DgaError& ex) {
        dsq = false;
        dsq_detail = ex.what();
    }
    r.add("ce_d_squared_zero", dsq, dsq_detail);
    r.data["dim"] = e.g.dim();
    if (jac.ok) {
        LcsReport lcs = lower_central_series(e.g);
        r.data["nilpotent"] = lcs.nilpotent;
        r.data["lower_central_series_dims"] = subspace_dims(lcs.series);
        if (lcs.step) r.data["nilpotency_step"] = *lcs.step;
        BracketJacobiReport br = check_bracket_jacobi(e.g, e.twist);
        r.add("twisted_bracket_jacobi", br.ok,
              br.ok ? "Courant bracket satisfies Jacobi on all basis triples of the double"
                    : "fails on double-basis triple (" + std::to_string(br.a + 1) + "," + std::to_string(br.b + 1) +
                          "," + std::to_string(br.c + 1) + ")");
    }
    r.human_data = r.data;
    return r;
}

Report report_lie_cohomology(const CatalogEntry& e) {
    Report r = base_report("lie cohomology", e);
    try {
        Dga a = ce_differential(e.g);
        Cohomology h = cohomology(a);
        r.data["betti"] = h.betti;
        int chi = 0;
        for (size_t k = 0; k < h.betti.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * h.betti[k];
        r.add("euler_characteristic_zero", chi == 0, "alternating Betti sum = " + std::to_string(chi));
        ordered_json per = ordered_json::array();
        ordered_json reps = ordered_json::array();
        for (size_t k = 0; k < h.betti.size(); ++k) {
            per.push_back({{"degree", k}, {"closed", h.closed[k].dim()}, {"exact", h.exact[k].dim()}, {"betti", h.betti[k]}});
            ordered_json degree_reps = ordered_json::array();
            for (const Form& f : h.reps[k]) degree_reps.push_back(form_to_string(f));
            reps.push_back(std::move(degree_reps));
        }
        r.data["degrees"] = std::move(per);
        r.data["representatives"] = std::move(reps);
        r.human_data["betti"] = h.betti;
    } catch (const DgaError& ex) {
        r.add("ce_d_squared_zero", false, ex.what());
    }
    return r;
}

Report report_lie_filtration(const CatalogEntry& e) {
    Report r = base_report("lie filtration", e);
    try {
        Filtration f = filtration(e.g);
        r.add("filtration_completes", true, "reaches the full dual space in " + std::to_string(f.s) + " steps");
        bool minimal = check_minimal_basis(e.g, f.basis);
        r.add("compatible_basis_minimal", minimal,
              minimal ? "each d(basis element) lies on strictly earlier elements" : "minimality violated");
        r.data["steps"] = subspace_dims(f.steps);
        r.data["s"] = f.s;
        ordered_json basis = ordered_json::array();
        for (const Vec& v : f.basis) basis.push_back(form_to_string(form_from_degree_coords(e.g.dim(), 1, v)));
        r.data["basis"] = std::move(basis);
        r.human_data["steps"] = subspace_dims(f.steps);
        r.human_data["s"] = f.s;
    } catch (const NotNilpotentError& ex) {
        r.add("filtration_completes", false, ex.what());
    } catch (const DgaError& ex) {
        r.add("ce_d_squared_zero", false, ex.what());
    }
    return r;
}

// ---------------------------------------------------------------- gcs

void append_gcs_verdicts(Report& r, const CatalogEntry& e, const GCStructure& s, const std::string& prefix = "") {
    VerdictReport v = check_gcs(e.g, s);
    for (auto& x : v.verdicts) r.add(prefix + x.check, x.pass, x.details);
}

Report report_gcs_check(const CatalogEntry& e, const std::string& sname) {
    GCStructure s = pick_gcs(e, sname);
    Report r = base_report("gcs check", e);
    append_gcs_verdicts(r, e, s);
    if (r.all_pass()) {
        Eigenbundle eb = i_eigenspace(s);
        r.data["dim_L"] = eb.l.dim();
        r.data["type"] = type_of(s);
        r.data["abelian"] = is_abelian_gcs(e.g, s);
        r.human_data = r.data;
    }
    return r;
}

Report report_gcs_type(const CatalogEntry& e, const std::string& sname) {
    GCStructure s = pick_gcs(e, sname);
    Report r = base_report("gcs type", e);
    append_gcs_verdicts(r, e, s);
    if (r.all_pass()) {
        r.data["type"] = type_of(s);
        r.human_data = r.data;
    }
    return r;
}

Report report_gcs_canonical(const CatalogEntry& e, const std::string& sname) {
    GCStructure s = pick_gcs(e, sname);
    Report r = base_report("gcs canonical", e);
    append_gcs_verdicts(r, e, s);
    if (!r.all_pass()) return r;
    try {
        SpinorLine line = canonical_line(i_eigenspace(s));
        r.add("canonical_line_one_dimensional", true, "joint Clifford kernel is a line");
        bool closed = check_hol_trivial(e.g, s, line);
        r.add("canonical_generator_dh_closed", closed, closed ? "d_H rho = 0" : "d_H rho != 0");
        r.data["rho"] = form_to_string(line.rho);
        r.human_data["rho"] = form_to_string(line.rho);
    } catch (const std::invalid_argument& ex) {
        r.add("canonical_line_one_dimensional", false, ex.what());
    }
    return r;
}

Report report_gcs_decompose(const CatalogEntry& e, const std::string& sname) {
    GCStructure s = pick_gcs(e, sname);
    Report r = base_report("gcs decompose", e);
    append_gcs_verdicts(r, e, s);
    if (!r.all_pass()) return r;
    try {
        UkDecomposition u = uk_decomposition(e.g, s);
        std::vector<int> dims = u.dims();
        bool binomial = true;
        for (int j = 0; j <= u.m; ++j) {
            long expect = 1;
            for (int t = 0; t < j; ++t) expect = expect * (u.m - t) / (t + 1);
            if (dims[j] != expect) binomial = false;
        }
        r.add("uk_dimensions_binomial", binomial, "dim U^k = C(m, n-k) for every level");
        r.add("uk_direct_sum", true, "levels sum directly to the full form space");
        ordered_json levels = ordered_json::array();
        for (int j = 0; j <= u.m; ++j) levels.push_back({{"k", u.half - j}, {"dim", dims[j]}});
        r.data["levels"] = levels;
        r.human_data["levels"] = levels;
        try {
            del_delbar(e.g, s, u);
            r.add("dh_adjacent_levels", true, "d_H maps U^k into U^{k+1} (+) U^{k-1} with zero residuals");
        } catch (const NotIntegrable& ex) {
            r.add("dh_adjacent_levels", false, ex.what());
        }
    } catch (const std::invalid_argument& ex) {
        r.add("uk_direct_sum", false, ex.what());
    }
    return r;
}

Report report_gcs_eq3(const CatalogEntry& e, const std::string& sname) {
    GCStructure s = pick_gcs(e, sname);
    Report r = base_report("gcs eq3", e);
    append_gcs_verdicts(r, e, s);
    if (!r.all_pass()) return r;
    try {
        SpinorLine line = canonical_line(i_eigenspace(s));
        bool closed = check_hol_trivial(e.g, s, line);
        r.add("canonical_generator_dh_closed", closed, closed ? "d_H rho = 0" : "d_H rho != 0");
        if (!closed) return r;
        Eq3Report eq = verify_eq3(e.g, s);
        r.add("dbar_matches_algebroid_differential", eq.ok,
              eq.ok ? "dbar(alpha . rho) = (d_L alpha) . rho for all basis alpha"
                    : "identity fails on basis alpha with generator mask " + std::to_string(eq.failing_alpha));
    } catch (const std::invalid_argument& ex) {
        r.add("dbar_matches_algebroid_differential", false, ex.what());
    } catch (const NotIntegrable& ex) {
        r.add("dbar_matches_algebroid_differential", false, ex.what());
    } catch (const NotInvolutive& ex) {
        r.add("dbar_matches_algebroid_differential", false, ex.what());
    }
    return r;
}

// ---------------------------------------------------------------- gk

Report report_gk_check(const CatalogEntry& e, const std::string& sname, std::uint64_t seed) {
    GKPair pair = pick_pair(e, sname);
    Report r = base_report("gk check", e);
    VerdictReport v = check_gk(e.g, pair);
    for (auto& x : v.verdicts) r.add(x.check, x.pass, x.details);
    if (!r.all_pass()) return r;

    IntersectionDims dims = intersection_dims(pair);
    r.add("l1_splits_under_j2", dims.splits, "L1 = (L1 cap L2) (+) (L1 cap conj L2)");
    r.add("dim_l1_twice_intersection", dims.identity,
          "dim L1 = " + std::to_string(dims.dim_l1) + ", dim(L1 cap L2) = " + std::to_string(dims.dim_l1_l2));
    r.data["dim_L1"] = dims.dim_l1;
    r.data["dim_L1_cap_L2"] = dims.dim_l1_l2;
    r.data["dim_L1_cap_conjL2"] = dims.dim_l1_l2bar;

    Bigrading big = l1_bigrading(e.g, pair);
    r.add("d_l1_two_components", big.only_two_components,
          "d_{L1} has only (+1,0) and (0,+1) bidegree components");

    // Leibniz on seeded random homogeneous pairs for both components.
    int m = e.g.dim();
    SplitMix64 rng(seed);
    auto random_homogeneous = [&](int deg) {
        Form f(m);
        for (std::uint32_t mask : degree_masks(m, deg))
            f += Form::monomial(m, mask, CRat(Rat(rng.small(2)), Rat(rng.small(2))));
        return f;
    };
    bool leibniz = true;
    for (int trial = 0; trial < 8 && leibniz; ++trial) {
        int da = 1 + static_cast<int>(rng.below(m - 1));
        int db = 1 + static_cast<int>(rng.below(m - 1));
        Form a = random_homogeneous(da), b = random_homogeneous(db);
        for (const Mat* op : {&big.del_full, &big.delbar_full}) {
            Vec lhs = op->apply(form_to_coords(wedge(a, b)));
            Form da_f = form_from_coords(m, op->apply(form_to_coords(a)));
            Form db_f = form_from_coords(m, op->apply(form_to_coords(b)));
            Form rhs = wedge(da_f, b);
            Form second = wedge(a, db_f);
            if (da % 2) second = -second;
            rhs += second;
            if (lhs != form_to_coords(rhs)) leibniz = false;
        }
    }
    r.add("bigrading_components_leibniz", leibniz, "del_{L1} and dbar_{L1} satisfy the Leibniz rule on sampled pairs");
    r.data["seed"] = seed;
    r.human_data = r.data;
    return r;
}

Report report_gk_ddbar(const CatalogEntry& e, const std::string& sname) {
    GKPair pair = pick_pair(e, sname);
    Report r = base_report("gk ddbar", e);
    VerdictReport v = check_gk(e.g, pair);
    bool ok = v.all_pass();
    r.add("pair_valid", ok, ok ? "both structures valid, commuting, positive Gram" : "pair fails validity");
    if (!ok) return r;
    UpqDecomposition u = upq_decomposition(e.g, pair);
    r.add("upq_direct_sum", u.direct_sum_ok, "U^{p,q} spaces sum directly to the form space");
    r.add("dh_four_corners", u.four_corners_ok, "d_H lands in the four (p+-1, q+-1) corners");
    DeltaOps delta = delta_pm(e.g, pair, u);
    r.add("delta_sum_is_dbar1", delta.sum_is_dbar1, "delta_+ + delta_- = dbar of J1");
    DdbarReport dd = ddbar_lemma_check(delta.plus, delta.minus);
    r.add("ddbar_subspaces_equal", dd.equal,
          "Im d+ cap Ker d- = Im d- cap Ker d+ = Im(d+ d-), dims " + std::to_string(dd.im_plus_ker_minus.dim()) +
              "/" + std::to_string(dd.im_minus_ker_plus.dim()) + "/" + std::to_string(dd.im_plus_minus.dim()));
    ordered_json spaces = ordered_json::array();
    for (const auto& [j, t, sp] : u.spaces)
        spaces.push_back({{"p", u.half - j}, {"q", u.half - t}, {"dim", sp.dim()}});
    r.data["upq"] = spaces;
    r.data["dims"] = {dd.im_plus_ker_minus.dim(), dd.im_minus_ker_plus.dim(), dd.im_plus_minus.dim()};
    r.human_data["dims"] = r.data["dims"];
    return r;
}

Report report_gk_correspondence(const CatalogEntry& e, const std::string& sname) {
    GKPair pair = pick_pair(e, sname);
    Report r = base_report("gk correspondence", e);
    bool ok = check_gk(e.g, pair).all_pass();
    r.add("pair_valid", ok, ok ? "both structures valid, commuting, positive Gram" : "pair fails validity");
    if (!ok) return r;
    CorrespondenceReport c = gk_correspondence(e.g, pair);
    std::string which = c.del_is_plus && c.del_is_minus ? "both (all operators vanish)"
                        : c.del_is_plus               ? "del_{L1} <-> delta_+, dbar_{L1} <-> delta_-"
                        : c.del_is_minus              ? "del_{L1} <-> delta_-, dbar_{L1} <-> delta_+"
                                                      : "none";
    r.add("operator_pairing_uniform", c.ok, which);
    r.data["pairing"] = which;
    r.human_data["pairing"] = which;
    return r;
}

Report report_gk_formality(const CatalogEntry& e, const std::string& sname, int maxdeg) {
    Report r = base_report("gk formality", e);
    GCStructure j1{};
    bool used_pair = false;
    if (!sname.empty()) {
        bool found = false;
        for (const auto& [n, def] : e.structures)
            if (n == sname) {
                found = true;
                if (def.is_pair) {
                    j1 = structure_pair(e, sname).j1;
                    used_pair = true;
                } else {
                    j1 = structure_gcs(e, sname);
                }
            }
        if (!found) throw UnknownEntry("entry '" + e.name + "' has no structure named '" + sname + "'");
    } else {
        bool found = false;
        for (const auto& [n, def] : e.structures)
            if (def.is_pair && !found) {
                j1 = structure_pair(e, n).j1;
                used_pair = true;
                found = true;
            }
        if (!found) j1 = pick_gcs(e, "");
    }
    try {
        FormalityReport f = formality_algebroid(e.g, j1, maxdeg);
        bool nonformal = f.verdict != "no obstruction found up to degree bound";
        if (used_pair)
            r.add("no_obstruction_found", !nonformal, f.verdict);
        else
            r.add("nonformality_certified", nonformal, f.verdict);
        r.data["verdict"] = f.verdict;
        r.data["algebroid_nilpotent"] = f.lie_nilpotent;
        r.data["betti"] = f.betti;
        if (f.witness_ran) {
            r.data["witness_found"] = f.witness.found;
            if (f.witness.found) {
                r.data["witness_product"] = form_to_string(f.witness.product, "f");
                r.data["witness_preimage"] = form_to_string(f.witness.preimage, "f");
                r.data["witness_top"] = form_to_string(f.witness.top, "f");
            }
        }
        r.data["massey_nonvanishing"] = f.massey_nonvanishing.size();
        r.human_data["verdict"] = f.verdict;
    } catch (const std::invalid_argument& ex) {
        r.add(used_pair ? "no_obstruction_found" : "nonformality_certified", false, ex.what());
    }
    return r;
}

// ---------------------------------------------------------------- dga

Report report_dga_massey(const CatalogEntry& e, int maxdeg) {
    Report r = base_report("dga massey", e);
    try {
        Dga a = ce_differential(e.g);
        Cohomology h = cohomology(a);
        if (maxdeg <= 0) maxdeg = e.g.dim();
        auto certs = massey_search(a, h, maxdeg);
        r.add("nonvanishing_massey_found", !certs.empty(),
              certs.empty() ? "all defined triple products vanish up to the degree bound"
                            : std::to_string(certs.size()) + " nonvanishing triple product(s)");
        ordered_json list = ordered_json::array();
        for (const auto& c : certs)
            list.push_back({{"a", form_to_string(c.a)},
                            {"b", form_to_string(c.b)},
                            {"c", form_to_string(c.c)},
                            {"representative", form_to_string(c.result.rep)},
                            {"indeterminacy_dim", c.result.indeterminacy.dim()}});
        r.data["certificates"] = std::move(list);
        r.data["max_degree"] = maxdeg;
        r.human_data["nonvanishing"] = certs.size();
    } catch (const DgaError& ex) {
        r.add("ce_d_squared_zero", false, ex.what());
    }
    return r;
}

Report report_dga_witness(const CatalogEntry& e) {
    Report r = base_report("dga witness", e);
    try {
        Dga a = ce_differential(e.g);
        Filtration f = filtration(e.g);
        WitnessReport w = nonformality_witness(a, f.basis);
        std::string detail;
        if (w.found)
            detail = form_to_string(w.product) + " is exact with nonzero volume class " + form_to_string(w.top);
        else if (!w.product_exact)
            detail = form_to_string(w.product) + " is not exact";
        else
            detail = "top class vanishes";
        r.add("nonformality_witness_found", w.found, detail);
        r.data["product"] = form_to_string(w.product);
        r.data["product_exact"] = w.product_exact;
        r.data["top_class_nonzero"] = w.top_class_nonzero;
        if (w.product_exact) r.data["preimage"] = form_to_string(w.preimage);
        r.human_data["witness"] = detail;
    } catch (const NotNilpotentError& ex) {
        r.add("nonformality_witness_found", false, ex.what());
    } catch (const DgaError& ex) {
        r.add("ce_d_squared_zero", false, ex.what());
    }
    return r;
}

// ---------------------------------------------------------------- catalog

Report report_catalog_list() {
    Report r;
    r.command = "catalog list";
    r.input_name = "builtins";
    r.input_digest = hex64(fnv1a64("builtins"));
    r.data["entries"] = builtin_names();
    r.human_data["entries"] = builtin_names();
    return r;
}

Report report_catalog_show(const CatalogEntry& e) {
    Report r = base_report("catalog show", e);
    r.data["name"] = e.name;
    r.data["dim"] = e.g.dim();
    int nonzero = 0;
    for (int i = 0; i < e.g.dim(); ++i)
        for (int j = i + 1; j < e.g.dim(); ++j)
            for (int k = 0; k < e.g.dim(); ++k)
                if (!e.g.c(k, i, j).is_zero()) ++nonzero;
    r.data["bracket_terms"] = nonzero;
    r.data["H"] = form_to_string(e.twist.h);
    ordered_json structures = ordered_json::array();
    for (const auto& [n, def] : e.structures)
        structures.push_back({{"name", n}, {"kind", def.is_pair ? "pair" : "gcs"}});
    r.data["structures"] = std::move(structures);
    ordered_json expected = ordered_json::object();
    for (const auto& [k, v] : e.expected) expected[k] = v;
    r.data["expected"] = std::move(expected);
    r.human_data = r.data;
    return r;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact verifier for generalized complex and generalized Kahler structures on Lie algebras"};
    app.require_subcommand(1);

    std::string input, structure, show_name;
    bool json = false;
    int maxdeg = 0;
    std::uint64_t seed = 1;

    auto add_common = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input) cmd->add_option("--input", input, "builtin name or catalog file")->required();
        cmd->add_flag("--json", json, "emit the machine-readable report");
    };

    CLI::App* lie = app.add_subcommand("lie", "Lie algebra pipelines");
    lie->require_subcommand(1);
    CLI::App* lie_check = lie->add_subcommand("check", "Jacobi, d^2 = 0, nilpotency, twisted bracket");
    CLI::App* lie_cohomology = lie->add_subcommand("cohomology", "Betti numbers of the exterior complex");
    CLI::App* lie_filtration = lie->add_subcommand("filtration", "kernel filtration and compatible basis");
    for (CLI::App* c : {lie_check, lie_cohomology, lie_filtration}) add_common(c, true);

    CLI::App* gcs = app.add_subcommand("gcs", "generalized complex structure pipelines");
    gcs->require_subcommand(1);
    CLI::App* gcs_check = gcs->add_subcommand("check", "structure axioms and involutivity");
    CLI::App* gcs_type = gcs->add_subcommand("type", "anchor kernel dimension");
    CLI::App* gcs_canonical = gcs->add_subcommand("canonical", "canonical spinor line");
    CLI::App* gcs_decompose = gcs->add_subcommand("decompose", "U^k decomposition and d_H containment");
    CLI::App* gcs_eq3 = gcs->add_subcommand("eq3", "spinor/algebroid differential correspondence");
    for (CLI::App* c : {gcs_check, gcs_type, gcs_canonical, gcs_decompose, gcs_eq3}) {
        add_common(c, true);
        c->add_option("--structure", structure, "structure name inside the entry");
    }

    CLI::App* gk = app.add_subcommand("gk", "generalized Kahler pipelines");
    gk->require_subcommand(1);
    CLI::App* gk_check = gk->add_subcommand("check", "pair axioms, splitting, Leibniz");
    CLI::App* gk_ddbar = gk->add_subcommand("ddbar", "delta+/delta- subspace identity");
    CLI::App* gk_corr = gk->add_subcommand("correspondence", "algebroid/spinor operator pairing");
    CLI::App* gk_formality = gk->add_subcommand("formality", "formality analysis of the algebroid complex");
    for (CLI::App* c : {gk_check, gk_ddbar, gk_corr, gk_formality}) {
        add_common(c, true);
        c->add_option("--structure", structure, "structure or pair name inside the entry");
    }
    gk_check->add_option("--seed", seed, "seed for randomized property checks");
    gk_formality->add_option("--max-degree", maxdeg, "Massey enumeration degree bound");

    CLI::App* dga = app.add_subcommand("dga", "differential graded algebra pipelines");
    dga->require_subcommand(1);
    CLI::App* dga_massey = dga->add_subcommand("massey", "triple Massey product enumeration");
    CLI::App* dga_witness = dga->add_subcommand("witness", "volume-form quasi-isomorphism obstruction");
    add_common(dga_massey, true);
    add_common(dga_witness, true);
    dga_massey->add_option("--max-degree", maxdeg, "enumeration degree bound");

    CLI::App* catalog = app.add_subcommand("catalog", "built-in entries and files");
    catalog->require_subcommand(1);
    CLI::App* catalog_list = catalog->add_subcommand("list", "list builtin entries");
    CLI::App* catalog_show = catalog->add_subcommand("show", "summarize one entry");
    catalog_list->add_flag("--json", json, "emit the machine-readable report");
    catalog_show->add_flag("--json", json, "emit the machine-readable report");
    catalog_show->add_option("name", show_name, "builtin name or catalog file")->required();

    std::vector<std::string> argv = args;
    try {
        std::vector<const char*> cargs;
        cargs.push_back("gkforge");
        for (const auto& a : argv) cargs.push_back(a.c_str());
        app.parse(static_cast<int>(cargs.size()), cargs.data());
    } catch (const CLI::ParseError& ex) {
        if (ex.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << ex.what() << "\n";
        return 2;
    }

    try {
        Report r;
        if (catalog_list->parsed()) r = report_catalog_list();
        else if (catalog_show->parsed()) r = report_catalog_show(load_input(show_name));
        else {
            CatalogEntry e = load_input(input);
            if (lie_check->parsed()) r = report_lie_check(e);
            else if (lie_cohomology->parsed()) r = report_lie_cohomology(e);
            else if (lie_filtration->parsed()) r = report_lie_filtration(e);
            else if (gcs_check->parsed()) r = report_gcs_check(e, structure);
            else if (gcs_type->parsed()) r = report_gcs_type(e, structure);
            else if (gcs_canonical->parsed()) r = report_gcs_canonical(e, structure);
            else if (gcs_decompose->parsed()) r = report_gcs_decompose(e, structure);
            else if (gcs_eq3->parsed()) r = report_gcs_eq3(e, structure);
            else if (gk_check->parsed()) r = report_gk_check(e, structure, seed);
            else if (gk_ddbar->parsed()) r = report_gk_ddbar(e, structure);
            else if (gk_corr->parsed()) r = report_gk_correspondence(e, structure);
            else if (gk_formality->parsed()) r = report_gk_formality(e, structure, maxdeg);
            else if (dga_massey->parsed()) r = report_dga_massey(e, maxdeg);
            else if (dga_witness->parsed()) r = report_dga_witness(e);
        }
        out << (json ? render_json(r) : render_human(r));
        return r.all_pass() ? 0 : 1;
    } catch (const CatalogParseError& ex) {
        err << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const UnknownEntry& ex) {
        err << "input error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        // precondition violations that no verdict covers (wrong dimensions,
        // malformed structures) count as input errors
        err << "input error: " << ex.what() << "\n";
        return 2;
    }
}

} // namespace gkforge
