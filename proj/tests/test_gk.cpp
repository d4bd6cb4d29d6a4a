#include "gkforge/gk.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <bit>
#include <map>

using namespace gkforge;

namespace {

LieAlgebra kt4() { return LieAlgebra::from_terms(4, {{0, 1, 2, Rat(1)}}); }
LieAlgebra ab4() { return LieAlgebra::abelian(4); }

Form mono(int n, std::initializer_list<int> gens, Rat num = Rat(1)) {
    std::uint32_t mask = 0;
    for (int g : gens) mask |= 1u << (g - 1);
    return Form::monomial(n, mask, CRat(num));
}

Mat standard_complex_j() {
    Mat j(4, 4);
    j.at(1, 0) = CRat(1);
    j.at(0, 1) = CRat(-1);
    j.at(3, 2) = CRat(1);
    j.at(2, 3) = CRat(-1);
    return j;
}

GKPair t4kahler_pair() {
    LieAlgebra g = ab4();
    GCStructure j1 = gcs_from_complex_structure(g, standard_complex_j(), zero_twist(g));
    GCStructure j2 = gcs_from_symplectic(g, mono(4, {1, 2}) + mono(4, {3, 4}), zero_twist(g));
    return GKPair{j1, j2};
}

} // namespace

TEST_CASE("check_gk: the torus pair passes, degenerate pairs fail pointedly") {
    CHECK(check_gk(ab4(), t4kahler_pair()).all_pass());

    // (J, J) with complex J: <J1 J2 v, v> = -<v, v> is indefinite
    GKPair same{t4kahler_pair().j1, t4kahler_pair().j1};
    VerdictReport rep = check_gk(ab4(), same);
    CHECK(rep.find("structures_commute")->pass);
    CHECK(!rep.find("gram_positive_definite")->pass);

    // perturbed symplectic form: no longer commutes with the complex structure
    GCStructure j2p = gcs_from_symplectic(ab4(), mono(4, {1, 2}) + mono(4, {3, 4}) + mono(4, {1, 3}), zero_twist(ab4()));
    CHECK(check_gcs(ab4(), j2p).all_pass());
    VerdictReport rep2 = check_gk(ab4(), GKPair{t4kahler_pair().j1, j2p});
    CHECK(!rep2.find("structures_commute")->pass);
}

TEST_CASE("intersection dims on the torus pair") {
    IntersectionDims d = intersection_dims(t4kahler_pair());
    CHECK(d.dim_l1 == 4);
    CHECK(d.dim_l1_l2 == 2);
    CHECK(d.dim_l1_l2bar == 2);
    CHECK(d.splits);
    CHECK(d.identity);

    GCStructure j2p = gcs_from_symplectic(ab4(), mono(4, {1, 2}) + mono(4, {3, 4}) + mono(4, {1, 3}), zero_twist(ab4()));
    CHECK_THROWS_AS(intersection_dims(GKPair{t4kahler_pair().j1, j2p}), std::invalid_argument);
}

TEST_CASE("bigrading on the torus pair: flat algebroid, mask counting") {
    Bigrading big = l1_bigrading(ab4(), t4kahler_pair());
    CHECK(big.half == 2);
    CHECK(big.only_two_components);
    for (int k = 0; k < 4; ++k) {
        CHECK(big.del_images[k].is_zero());
        CHECK(big.delbar_images[k].is_zero());
    }
    CHECK(big.del_full.is_zero());
    CHECK(big.delbar_full.is_zero());

    // wedge^{p,q} dimensions are products of binomials and sum to 2^m
    std::map<std::pair<int, int>, int> counts;
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        int p = std::popcount(mask & 0b0011u);
        int q = std::popcount(mask & 0b1100u);
        counts[{p, q}]++;
    }
    int total = 0;
    for (auto [pq, c] : counts) {
        auto binom = [](int n, int k) { return k == 0 || k == n ? 1 : n; }; // n = 2 here
        CHECK(c == binom(2, pq.first) * binom(2, pq.second));
        total += c;
    }
    CHECK(total == 16);
}

TEST_CASE("U^{p,q} decomposition and delta operators on the torus pair") {
    GKPair pair = t4kahler_pair();
    UpqDecomposition u = upq_decomposition(ab4(), pair);
    CHECK(u.direct_sum_ok);
    CHECK(u.four_corners_ok);
    int total = 0;
    for (const auto& [j, t, s] : u.spaces) total += s.dim();
    CHECK(total == 16);

    DeltaOps delta = delta_pm(ab4(), pair, u);
    CHECK(delta.sum_is_dbar1);
    // flat torus: every operator vanishes, squares included
    CHECK(delta.plus.is_zero());
    CHECK(delta.minus.is_zero());

    DdbarReport dd = ddbar_lemma_check(delta.plus, delta.minus);
    CHECK(dd.equal);
    CHECK(dd.im_plus_ker_minus.dim() == 0);
    CHECK(dd.im_minus_ker_plus.dim() == 0);
    CHECK(dd.im_plus_minus.dim() == 0);
}

TEST_CASE("U^{p,q} dimension diamond of the flat torus pair") {
    UpqDecomposition u = upq_decomposition(ab4(), t4kahler_pair());
    std::map<std::pair<int, int>, int> dims;
    for (const auto& [j, t, s] : u.spaces) dims[{u.half - j, u.half - t}] = s.dim();
    std::map<std::pair<int, int>, int> expect = {{{2, 0}, 1},  {{1, 1}, 2},  {{1, -1}, 2}, {{0, 2}, 1}, {{0, 0}, 4},
                                                 {{0, -2}, 1}, {{-1, 1}, 2}, {{-1, -1}, 2}, {{-2, 0}, 1}};
    CHECK(dims == expect);
}

TEST_CASE("the bigrading components sum to the algebroid differential under the spinor correspondence") {
    // (del_{L1} + dbar_{L1}) alpha . rho = dbar_1 (alpha . rho) for all basis alpha
    GKPair pair = t4kahler_pair();
    Bigrading big = l1_bigrading(ab4(), pair);
    UkDecomposition u1 = uk_decomposition(ab4(), pair.j1);
    Mat dbar1 = del_delbar(ab4(), pair.j1, u1).delbar;
    Form rho = u1.line.rho;
    Mat sum = mat_add(big.del_full, big.delbar_full);
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
        Form alpha = Form::monomial(4, mask, CRat(1));
        Form lhs = clifford_act_multi(big.alg.dual_gens, form_from_coords(4, sum.apply(form_to_coords(alpha))), rho);
        Vec rhs = dbar1.apply(form_to_coords(clifford_act_multi(big.alg.dual_gens, alpha, rho)));
        CHECK(form_to_coords(lhs) == rhs);
    }
}

TEST_CASE("hand-built complex violating the subspace identity is detected") {
    // delta_+ maps b1 -> b2, delta_- = 0: Im+ cap Ker- = <b2> != 0 = Im(+-)
    Mat plus(2, 2), minus(2, 2);
    plus.at(1, 0) = CRat(1);
    DdbarReport dd = ddbar_lemma_check(plus, minus);
    CHECK(!dd.equal);
    CHECK(dd.im_plus_ker_minus.dim() == 1);
    CHECK(dd.im_plus_minus.dim() == 0);
}

TEST_CASE("operator correspondence is trivially consistent on the torus pair") {
    CorrespondenceReport c = gk_correspondence(ab4(), t4kahler_pair());
    CHECK(c.ok);
    CHECK(c.del_is_plus);
    CHECK(c.del_is_minus);
}

TEST_CASE("formality: no obstruction for the torus pair, certificates for the nilpotent structures") {
    FormalityReport torus = formality_algebroid(ab4(), t4kahler_pair().j1);
    CHECK(torus.verdict == "no obstruction found up to degree bound");
    CHECK(torus.lie_nilpotent);
    CHECK(torus.minimal_ok);
    CHECK(torus.witness_ran);
    CHECK(!torus.witness.found);
    CHECK(torus.massey_nonvanishing.empty());
    CHECK(torus.betti == std::vector<int>{1, 4, 6, 4, 1});

    GCStructure sympl = gcs_from_symplectic(kt4(), mono(4, {1, 3}) + mono(4, {2, 4}), zero_twist(kt4()));
    FormalityReport f = formality_algebroid(kt4(), sympl);
    CHECK(f.verdict == "non-formal (witness)");
    CHECK(f.lie_nilpotent);
    CHECK(f.witness.found);
    CHECK(!f.massey_nonvanishing.empty()); // the Massey route fires too
    CHECK(f.betti == std::vector<int>{1, 3, 4, 3, 1});

    GCStructure sympl_r = gcs_from_symplectic(kt4(), mono(4, {1, 4}) + mono(4, {2, 3}), zero_twist(kt4()));
    FormalityReport fr = formality_algebroid(kt4(), sympl_r);
    CHECK(fr.verdict == "non-formal (witness)");
}

TEST_CASE("formality requires a d_H-closed canonical generator") {
    Mat jbad(4, 4);
    jbad.at(3, 0) = CRat(1);
    jbad.at(0, 3) = CRat(-1);
    jbad.at(2, 1) = CRat(1);
    jbad.at(1, 2) = CRat(-1);
    GCStructure s = gcs_from_complex_structure(kt4(), jbad, zero_twist(kt4()));
    CHECK_THROWS_AS(formality_algebroid(kt4(), s), std::invalid_argument);
}

TEST_CASE("a solvable Kahler pair: nonzero delta operators, definite pairing, failed subspace identity") {
    // [e1,e2] = e2 with J e1 = e2 and omega = e1^e2: both structures are
    // valid, commute, and the Gram form is positive definite, but the algebra
    // has no compact quotient and the delta+/delta- subspace identity fails.
    LieAlgebra g = LieAlgebra::from_terms(2, {{0, 1, 1, Rat(1)}});
    Mat j(2, 2);
    j.at(1, 0) = CRat(1);
    j.at(0, 1) = CRat(-1);
    GCStructure jc = gcs_from_complex_structure(g, j, zero_twist(g));
    GCStructure js = gcs_from_symplectic(g, Form::monomial(2, 0b11, CRat(1)), zero_twist(g));
    GKPair pair{js, jc}; // symplectic side first: its canonical generator is d-closed
    CHECK(check_gk(g, pair).all_pass());
    CHECK(verify_eq3(g, js).ok);

    IntersectionDims d = intersection_dims(pair);
    CHECK(d.dim_l1 == 2);
    CHECK(d.dim_l1_l2 == 1);
    CHECK(d.identity);

    Bigrading big = l1_bigrading(g, pair);
    CHECK(big.only_two_components);
    bool nonzero = false;
    for (int k = 0; k < 2; ++k)
        if (!big.del_images[k].is_zero() || !big.delbar_images[k].is_zero()) nonzero = true;
    CHECK(nonzero);

    UpqDecomposition u = upq_decomposition(g, pair);
    CHECK(u.direct_sum_ok);
    CHECK(u.four_corners_ok);
    DeltaOps delta = delta_pm(g, pair, u);
    CHECK(delta.sum_is_dbar1);
    CHECK(!delta.plus.is_zero());
    CHECK(!delta.minus.is_zero());

    // the operator pairing is uniform and nontrivial: del_{L1} <-> delta_-
    CorrespondenceReport c = gk_correspondence(g, pair);
    CHECK(c.ok);
    CHECK(!c.del_is_plus);
    CHECK(c.del_is_minus);

    // without a compact-type algebra the three subspaces genuinely differ
    DdbarReport dd = ddbar_lemma_check(delta.plus, delta.minus);
    CHECK(!dd.equal);
    CHECK(dd.im_plus_ker_minus.dim() == 1);
    CHECK(dd.im_minus_ker_plus.dim() == 1);
    CHECK(dd.im_plus_minus.dim() == 0);

    // the algebroid is not nilpotent, so the witness route is skipped
    FormalityReport f = formality_algebroid(g, js);
    CHECK(!f.lie_nilpotent);
    CHECK(!f.witness_ran);
    CHECK(f.verdict == "no obstruction found up to degree bound");

    // the complex-type side is not holomorphically trivial here
    CHECK(!check_hol_trivial(g, jc, canonical_line(i_eigenspace(jc))));
}

TEST_CASE("bigrading components square to zero and anticommute on the torus pair") {
    Bigrading big = l1_bigrading(ab4(), t4kahler_pair());
    CHECK(mat_mul(big.del_full, big.del_full).is_zero());
    CHECK(mat_mul(big.delbar_full, big.delbar_full).is_zero());
    Mat anti = mat_add(mat_mul(big.del_full, big.delbar_full), mat_mul(big.delbar_full, big.del_full));
    CHECK(anti.is_zero());
}
