// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every verdict is an exact identity of rational or Gaussian-rational
// objects, so there are no numeric tolerances to tune.

#include "gkforge/catalog.hpp"
#include "gkforge/cli.hpp"
#include "gkforge/prng.hpp"
#include "gkforge/report.hpp"
#include "oracles.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace gkforge;

namespace {

int failures = 0;

void criterion(int n, const std::string& desc, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& ex) {
        note = std::string(" (exception: ") + ex.what() + ")";
    }
    std::cout << "criterion " << n << " " << (pass ? "PASS" : "FAIL") << ": " << desc << note << "\n";
    if (!pass) ++failures;
}

std::vector<std::pair<std::string, std::string>> catalog_gcs_structures() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& entry : builtin_names()) {
        CatalogEntry e = builtin(entry);
        for (const auto& [sname, def] : e.structures)
            if (!def.is_pair) out.emplace_back(entry, sname);
    }
    return out;
}

// The generator images of the exterior differential, assembled directly from
// the structure constants (no Dga construction, which would reject d^2 != 0).
std::vector<Form> raw_ce_images(const LieAlgebra& g) {
    int m = g.dim();
    std::vector<Form> images;
    for (int k = 0; k < m; ++k) {
        Form img(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (!g.c(k, i, j).is_zero())
                    img += Form::monomial(m, (1u << i) | (1u << j), CRat(-g.c(k, i, j)));
        images.push_back(std::move(img));
    }
    return images;
}

// Betti numbers recomputed with the naive forward-elimination oracle only.
std::vector<int> oracle_betti(const LieAlgebra& g) {
    int m = g.dim();
    std::vector<Form> images = raw_ce_images(g);
    std::vector<int> ranks(m + 1, 0);
    for (int k = 0; k <= m; ++k) {
        std::vector<Vec> rows;
        bool nonempty = false;
        for (std::uint32_t mask : degree_masks(m, k)) {
            Form img = derivation_apply(images, Form::monomial(m, mask, CRat(1)));
            Vec coords = form_to_degree_coords(img, k + 1);
            if (!coords.empty()) nonempty = true;
            rows.push_back(std::move(coords));
        }
        if (!rows.empty() && nonempty) ranks[k] = oracles::naive_rank(rows);
    }
    std::vector<int> betti;
    for (int k = 0; k <= m; ++k) {
        long dim_k = static_cast<long>(degree_masks(m, k).size());
        betti.push_back(static_cast<int>(dim_k - ranks[k] - (k > 0 ? ranks[k - 1] : 0)));
    }
    return betti;
}

std::string run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return "exit=" + std::to_string(code) + "\n" + out.str() + err.str();
}

std::string fixture_text(const std::string& name) {
    std::ifstream f(std::string(GKFORGE_FIXTURES_DIR) + "/" + name);
    std::stringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

int main() {
    criterion(1, "Jacobi <=> d^2 = 0 on 200+ random antisymmetric constant sets, dims 3-5", [] {
        SplitMix64 rng(20240501);
        int agree = 0, total = 0;
        for (int trial = 0; trial < 210; ++trial) {
            int dim = 3 + static_cast<int>(rng.below(3));
            LieAlgebra g = LieAlgebra::from_terms(dim, oracles::random_structure_constants(rng, dim));
            bool jac = check_jacobi(g).ok;
            bool dsq = !d_squared_failing_gen(dim, raw_ce_images(g)).has_value();
            ++total;
            if (jac == dsq) ++agree;
        }
        return agree == total && total >= 200;
    });

    criterion(2, "Betti numbers heis3 (1,2,2,1) and kt4 (1,3,4,3,1), cross-checked by the elimination oracle", [] {
        CatalogEntry h = builtin("heis3"), k = builtin("kt4");
        std::vector<int> bh = cohomology(ce_differential(h.g)).betti;
        std::vector<int> bk = cohomology(ce_differential(k.g)).betti;
        return bh == std::vector<int>{1, 2, 2, 1} && bk == std::vector<int>{1, 3, 4, 3, 1} &&
               oracle_betti(h.g) == bh && oracle_betti(k.g) == bk;
    });

    criterion(3, "twisted bracket Jacobi on every catalog algebra and twist; dim-5 non-closed twist rejected", [] {
        for (const auto& name : builtin_names()) {
            CatalogEntry e = builtin(name);
            if (!check_bracket_jacobi(e.g, e.twist).ok) return false;
            if (!check_bracket_jacobi(e.g, zero_twist(e.g)).ok) return false;
        }
        try {
            parse_entry(fixture_text("heis3_r2_nonclosed_h.json"));
            return false;
        } catch (const CatalogParseError&) {
            return true;
        }
    });

    criterion(4, "complex-type structures have type n, symplectic-type structures type 0", [] {
        for (const auto& [entry, sname] : catalog_gcs_structures()) {
            CatalogEntry e = builtin(entry);
            GCStructure s = structure_gcs(e, sname);
            int t = type_of(s);
            if (sname.rfind("complex", 0) == 0 && t != e.g.dim() / 2) return false;
            if (sname.rfind("symplectic", 0) == 0 && t != 0) return false;
        }
        return true;
    });

    criterion(5, "spinor decomposition: binomial dims, 2^m total, 1-dim canonical line, d_H adjacency", [] {
        for (const auto& [entry, sname] : catalog_gcs_structures()) {
            CatalogEntry e = builtin(entry);
            GCStructure s = structure_gcs(e, sname);
            int m = e.g.dim();
            UkDecomposition u = uk_decomposition(e.g, s); // throws unless the line is 1-dim and the sum direct
            long total = 0, binom = 1;
            for (int j = 0; j <= m; ++j) {
                if (u.levels[j].dim() != binom) return false;
                total += u.levels[j].dim();
                binom = binom * (m - j) / (j + 1);
            }
            if (total != (1L << m)) return false;
            del_delbar(e.g, s, u); // throws on any residual outside U^{k+1} (+) U^{k-1}
        }
        return true;
    });

    criterion(6, "dbar(alpha.rho) = (d_L alpha).rho for every basis alpha on every catalog structure", [] {
        for (const auto& [entry, sname] : catalog_gcs_structures()) {
            CatalogEntry e = builtin(entry);
            GCStructure s = structure_gcs(e, sname);
            if (!check_hol_trivial(e.g, s, canonical_line(i_eigenspace(s)))) return false;
            if (!verify_eq3(e.g, s).ok) return false;
        }
        return true;
    });

    criterion(7, "subspace identity Im d+ cap Ker d- = Im d- cap Ker d+ = Im(d+ d-) on t4kahler; violation detected", [] {
        CatalogEntry e = builtin("t4kahler");
        GKPair pair = structure_pair(e, "kahler");
        UpqDecomposition u = upq_decomposition(e.g, pair);
        DeltaOps d = delta_pm(e.g, pair, u);
        if (!ddbar_lemma_check(d.plus, d.minus).equal) return false;
        Mat plus(2, 2), minus(2, 2);
        plus.at(1, 0) = CRat(1);
        return !ddbar_lemma_check(plus, minus).equal;
    });

    criterion(8, "non-formality certificates for kt4/heis3_r symplectic structures, kt4 Massey triple, torus clean", [] {
        for (const char* entry : {"kt4", "heis3_r"}) {
            CatalogEntry e = builtin(entry);
            FormalityReport f = formality_algebroid(e.g, structure_gcs(e, "symplectic"));
            if (f.verdict != "non-formal (witness)") return false;
            if (!f.witness.found) return false;
        }
        CatalogEntry kt = builtin("kt4");
        Dga a = ce_differential(kt.g);
        Cohomology h = cohomology(a);
        MasseyResult m = massey_triple(a, h, Form::gen(4, 0), Form::gen(4, 1), Form::gen(4, 1));
        if (m.rep != Form::monomial(4, 0b0110, CRat(1)) || m.vanishes) return false;
        CatalogEntry t4 = builtin("t4kahler");
        FormalityReport torus = formality_algebroid(t4.g, structure_pair(t4, "kahler").j1, t4.g.dim());
        return torus.verdict == "no obstruction found up to degree bound";
    });

    criterion(9, "GK identities on accepted pairs: dim L1 = 2 dim(L1 cap L2), Leibniz, positive Gram", [] {
        CatalogEntry e = builtin("t4kahler");
        GKPair pair = structure_pair(e, "kahler");
        if (!check_gk(e.g, pair).all_pass()) return false;
        IntersectionDims dims = intersection_dims(pair);
        if (!dims.identity || !dims.splits) return false;
        Bigrading big = l1_bigrading(e.g, pair);
        SplitMix64 rng(9);
        int m = e.g.dim();
        for (int trial = 0; trial < 20; ++trial) {
            int da = 1 + static_cast<int>(rng.below(m - 1));
            int db = 1 + static_cast<int>(rng.below(m - 1));
            Form a = oracles::random_form(rng, m, da);
            Form b = oracles::random_form(rng, m, db);
            for (const Mat* op : {&big.del_full, &big.delbar_full}) {
                Vec lhs = op->apply(form_to_coords(wedge(a, b)));
                Form da_f = form_from_coords(m, op->apply(form_to_coords(a)));
                Form db_f = form_from_coords(m, op->apply(form_to_coords(b)));
                Form rhs = wedge(da_f, b);
                Form second = wedge(a, db_f);
                if (da % 2) second = -second;
                rhs += second;
                if (lhs != form_to_coords(rhs)) return false;
            }
        }
        return true;
    });

    criterion(10, "CLI reports are byte-identical across two runs with the same input and seed", [] {
        std::vector<std::vector<std::string>> cases = {
            {"gk", "ddbar", "--input", "t4kahler", "--json"},
            {"gk", "check", "--input", "t4kahler", "--seed", "42", "--json"},
            {"gk", "formality", "--input", "kt4", "--structure", "symplectic", "--json"},
            {"dga", "massey", "--input", "kt4", "--json"},
            {"dga", "witness", "--input", "heis3", "--json"},
            {"gcs", "decompose", "--input", "kt4_twisted", "--json"},
            {"gcs", "eq3", "--input", "heis3_r", "--json"},
            {"lie", "cohomology", "--input", "kt4"},
            {"catalog", "show", "t4kahler", "--json"},
        };
        for (const auto& args : cases)
            if (run_cli(args) != run_cli(args)) return false;
        return true;
    });

    std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: FAILURES") << "\n";
    return failures == 0 ? 0 : 1;
}
