#pragma once

#include "gkforge/gcs.hpp"

namespace gkforge {

// Candidate generalized Kahler pair: two structures sharing one twist.
struct GKPair {
    GCStructure j1, j2;
};

// Separate verdicts: each side is a GCS, the two commute, and the symmetrized
// Gram matrix of <J1 J2 . , .> is positive definite (exact pivot test).
VerdictReport check_gk(const LieAlgebra& g, const GKPair& pair);

struct IntersectionDims {
    int dim_l1 = 0, dim_l1_l2 = 0, dim_l1_l2bar = 0;
    bool splits = false; // L1 = (L1 cap L2) (+) (L1 cap conj L2)
    bool identity = false; // dim L1 = 2 dim(L1 cap L2)
};

IntersectionDims intersection_dims(const GKPair& pair);

// Complex structure J2|_{L1} splits the algebroid complex: generators dual to
// the L1 cap L2 block land in conj(L1) cap conj(L2) and carry bidegree (1,0);
// generators dual to the L1 cap conj(L2) block carry (0,1). d_{L1} then has
// only (+1,0) and (0,+1) components, its two derivation summands.
struct Bigrading {
    AlgebroidDga alg;   // adapted generator basis
    int half = 0;       // generators 0..half-1 have bidegree (1,0), rest (0,1)
    std::vector<Form> del_images, delbar_images;
    Mat del_full, delbar_full; // derivations on the 2^m generator-mask space
    bool only_two_components = true;
    int stray_generator = -1;
};

Bigrading l1_bigrading(const LieAlgebra& g, const GKPair& pair);

struct UpqDecomposition {
    int m = 0, half = 0;
    // levels (j, t): U^{p,q} with p = half - j, q = half - t; nonzero spaces
    // in increasing (j, t) order.
    std::vector<std::tuple<int, int, Subspace>> spaces;
    Mat basis_cols, basis_inv;
    std::vector<std::pair<int, int>> col_level;
    bool direct_sum_ok = false;
    bool four_corners_ok = false; // d_H lands in the four (p+-1, q+-1) corners
};

UpqDecomposition upq_decomposition(const LieAlgebra& g, const GKPair& pair);

struct DeltaOps {
    Mat plus;  // delta_+ : U^{p,q} -> U^{p-1,q+1}, ambient coordinates
    Mat minus; // delta_- : U^{p,q} -> U^{p-1,q-1}
    bool sum_is_dbar1 = false;
};

DeltaOps delta_pm(const LieAlgebra& g, const GKPair& pair, const UpqDecomposition& u);

struct DdbarReport {
    Subspace im_plus_ker_minus, im_minus_ker_plus, im_plus_minus;
    bool equal = false;
};

// Im d+ cap Ker d- = Im d- cap Ker d+ = Im(d+ d-) as an exact subspace
// identity; takes raw operators so hand-built complexes can be tested.
DdbarReport ddbar_lemma_check(const Mat& delta_plus, const Mat& delta_minus);

struct CorrespondenceReport {
    bool ok = false;
    bool del_is_plus = false;  // (del_{L1} a).rho = delta_+(a.rho) pairing holds
    bool del_is_minus = false; // the swapped pairing holds
};

// Which of the two operator pairings is realized, uniformly over all basis
// alpha; both hold exactly when all operators vanish.
CorrespondenceReport gk_correspondence(const LieAlgebra& g, const GKPair& pair);

struct FormalityReport {
    bool lie_nilpotent = false; // filtration of the algebroid DGA completes
    bool minimal_ok = false;
    bool witness_ran = false;
    WitnessReport witness;
    std::vector<MasseyCertificate> massey_nonvanishing;
    std::string verdict; // "non-formal (witness)" | "non-formal (Massey certificate)"
                         // | "no obstruction found up to degree bound"
    std::vector<int> betti;
};

// Formality analysis of the algebroid DGA of J1; requires a d_H-closed
// canonical generator (throws otherwise). max_total_degree bounds the Massey
// enumeration; pass 0 to default to the generator count.
FormalityReport formality_algebroid(const LieAlgebra& g, const GCStructure& j1, int max_total_degree = 0);

} // namespace gkforge
