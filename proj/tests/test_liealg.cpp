#include "gkforge/liealg.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace gkforge;

namespace {

LieAlgebra heis3() { return LieAlgebra::from_terms(3, {{0, 1, 2, Rat(1)}}); }

// filiform: [e1, e_i] = e_{i+1} for i = 2..dim-1
LieAlgebra filiform(int dim) {
    std::vector<BracketTerm> terms;
    for (int i = 1; i + 1 < dim; ++i) terms.push_back({0, i, i + 1, Rat(1)});
    return LieAlgebra::from_terms(dim, terms);
}

} // namespace

TEST_CASE("construction validates antisymmetry and ranges") {
    CHECK_THROWS_AS(LieAlgebra::from_terms(3, {{0, 0, 2, Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra::from_terms(3, {{0, 1, 5, Rat(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(LieAlgebra::from_terms(3, {{0, 1, 2, Rat(1)}, {1, 0, 2, Rat(1)}}), std::invalid_argument);
    LieAlgebra g = LieAlgebra::from_terms(3, {{0, 1, 2, Rat(1)}, {1, 0, 2, Rat(-1)}});
    CHECK(g.c(2, 0, 1) == Rat(1));
    CHECK(g.c(2, 1, 0) == Rat(-1));
}

TEST_CASE("Jacobi verdicts with failing-triple report") {
    CHECK(check_jacobi(LieAlgebra::abelian(4)).ok);
    CHECK(check_jacobi(heis3()).ok);

    // [e1,e2] = e3, [e1,e3] = e1: Jacobiator(e1,e2,e3) = -e3
    LieAlgebra bad = LieAlgebra::from_terms(3, {{0, 1, 2, Rat(1)}, {0, 2, 0, Rat(1)}});
    JacobiReport rep = check_jacobi(bad);
    REQUIRE(!rep.ok);
    CHECK(rep.i == 0);
    CHECK(rep.j == 1);
    CHECK(rep.k == 2);
    Vec expect(3);
    expect[2] = CRat(-1);
    CHECK(rep.jacobiator == expect);
}

TEST_CASE("Jacobi is equivalent to d^2 = 0 on random antisymmetric constants") {
    SplitMix64 rng(808);
    int agreements = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int dim = 3 + static_cast<int>(rng.below(4));
        LieAlgebra g = LieAlgebra::from_terms(dim, oracles::random_structure_constants(rng, dim));
        bool jac = check_jacobi(g).ok;
        bool dsq = true;
        try {
            ce_differential(g);
        } catch (const DgaError&) {
            dsq = false;
        }
        CHECK(jac == dsq);
        if (jac == dsq) ++agreements;
    }
    CHECK(agreements == 60);
}

TEST_CASE("lower central series") {
    LcsReport ab = lower_central_series(LieAlgebra::abelian(5));
    CHECK(ab.nilpotent);
    CHECK(ab.step == 1);

    LcsReport h = lower_central_series(heis3());
    CHECK(h.nilpotent);
    CHECK(h.step == 2);
    REQUIRE(h.series.size() == 3);
    CHECK(h.series[1].dim() == 1);
    Vec e3(3);
    e3[2] = CRat(1);
    CHECK(contains(h.series[1], e3));

    LcsReport solv = lower_central_series(LieAlgebra::from_terms(2, {{0, 1, 1, Rat(1)}}));
    CHECK(!solv.nilpotent);
    CHECK(solv.series.back().dim() == 1);

    // series length <= dim for nilpotent algebras
    for (int dim = 3; dim <= 6; ++dim) {
        LcsReport f = lower_central_series(filiform(dim));
        CHECK(f.nilpotent);
        CHECK(*f.step <= dim);
    }
}

TEST_CASE("CE differential conventions") {
    Dga a = ce_differential(heis3());
    CHECK(a.d_gen(0).is_zero());
    CHECK(a.d_gen(1).is_zero());
    CHECK(a.d_gen(2) == Form::monomial(3, 0b011, CRat(-1))); // d e3 = -e1^e2
    CHECK_NOTHROW(ce_differential(LieAlgebra::from_terms(4, {{0, 1, 2, Rat(1)}})));
    CHECK(ce_differential(LieAlgebra::abelian(4)).d(Form::gen(4, 2)).is_zero());
}

TEST_CASE("kernel and image of the heis3 differential on degree 1") {
    Dga a = ce_differential(heis3());
    Subspace ker = kernel(a.d_matrix(1));
    CHECK(subspace_equal(ker, span_of(3, {form_to_degree_coords(Form::gen(3, 0), 1),
                                          form_to_degree_coords(Form::gen(3, 1), 1)})));
    Subspace img = image(a.d_matrix(1));
    CHECK(img.dim() == 1);
    CHECK(contains(img, form_to_degree_coords(Form::monomial(3, 0b011, CRat(1)), 2)));
}

TEST_CASE("filtration on heis3, abelian, and a non-nilpotent algebra") {
    Filtration f = filtration(heis3());
    CHECK(f.s == 2);
    REQUIRE(f.steps.size() == 2);
    CHECK(subspace_equal(f.steps[0], span_of(3, {form_to_degree_coords(Form::gen(3, 0), 1),
                                                 form_to_degree_coords(Form::gen(3, 1), 1)})));
    REQUIRE(f.basis.size() == 3);
    CHECK(f.basis[0] == form_to_degree_coords(Form::gen(3, 0), 1));
    CHECK(f.basis[1] == form_to_degree_coords(Form::gen(3, 1), 1));
    CHECK(f.basis[2] == form_to_degree_coords(Form::gen(3, 2), 1));

    CHECK(filtration(LieAlgebra::abelian(4)).s == 1);

    try {
        filtration(LieAlgebra::from_terms(2, {{0, 1, 1, Rat(1)}}));
        FAIL("expected NotNilpotentError");
    } catch (const NotNilpotentError& ex) {
        CHECK(ex.stalled_step == 1);
    }
}

TEST_CASE("minimal basis check matches the filtration order") {
    LieAlgebra g = heis3();
    std::vector<Vec> good = {form_to_degree_coords(Form::gen(3, 0), 1), form_to_degree_coords(Form::gen(3, 1), 1),
                             form_to_degree_coords(Form::gen(3, 2), 1)};
    CHECK(check_minimal_basis(g, good));
    std::vector<Vec> bad = {good[2], good[0], good[1]};
    CHECK(!check_minimal_basis(g, bad));
    CHECK(check_minimal_basis(LieAlgebra::abelian(3), bad));
}

TEST_CASE("filtration basis is always minimal for nilpotent algebras") {
    std::vector<LieAlgebra> algebras = {heis3(), LieAlgebra::from_terms(4, {{0, 1, 2, Rat(1)}}),
                                        LieAlgebra::abelian(4), filiform(4), filiform(5), filiform(6)};
    for (const auto& g : algebras) {
        Filtration f = filtration(g);
        CHECK(check_minimal_basis(g, f.basis));
        CHECK(static_cast<int>(f.steps.size()) <= g.dim());
    }
}
