#pragma once

#include "gkforge/courant.hpp"

namespace gkforge {

struct Verdict {
    std::string check;
    bool pass = false;
    std::string details;
};

struct VerdictReport {
    std::vector<Verdict> verdicts;
    bool all_pass() const;
    const Verdict* find(const std::string& check) const;
};

// Generalized complex structure candidate on g (+) g*: a real rational 2m x 2m
// matrix together with a closed twist.
struct GCStructure {
    Mat j;
    Twist twist;
};

// Reports J^2 = -1, pairing preservation and Courant involutivity of the
// i-eigenspace as separate verdicts; failures are verdicts, not errors.
VerdictReport check_gcs(const LieAlgebra& g, const GCStructure& s);

struct Eigenbundle {
    Subspace l;    // i-eigenspace in C^{2m}
    Subspace lbar; // conjugate
};

// Kernel of (J - i) over Q(i); verifies dim = m, isotropy, and L cap Lbar = 0.
Eigenbundle i_eigenspace(const GCStructure& s);

// dim ker(pi : L -> g_C) = m - rank of the vector parts of L.
int type_of(const GCStructure& s);

// True iff the twisted Courant bracket vanishes on every basis pair of L.
bool is_abelian_gcs(const LieAlgebra& g, const GCStructure& s);

struct SpinorLine {
    Form rho; // generator, lowest nonzero mask coefficient scaled to 1
};

// Joint kernel of the Clifford action of a basis of L on the full form space;
// throws when that kernel is not a line.
SpinorLine canonical_line(const Eigenbundle& e);

struct SpinorData {
    Form rho;                  // e^{B+i omega} ^ Omega
    bool nondegenerate = false; // Omega ^ conj(Omega) ^ omega^{n-k} != 0
};

// Builds the pure-spinor form from (B, omega, Omega); Omega must be
// decomposable (the divisor space {theta : theta ^ Omega = 0} has dim = deg).
SpinorData spinor_from_data(int m, const Form& b2, const Form& omega, const Form& omega_factor);

// d_H rho = 0 for the canonical generator.
bool check_hol_trivial(const LieAlgebra& g, const GCStructure& s, const SpinorLine& line);

struct UkDecomposition {
    int m = 0, half = 0;          // half = m/2
    SpinorLine line;
    std::vector<Subspace> levels; // levels[j] = U^{half-j} = wedge^j Lbar . rho
    Mat basis_cols, basis_inv;    // ambient change of basis, columns grouped by level
    std::vector<int> col_level;
    std::vector<int> dims() const;
};

// Requires dim g even; verifies dim U^k = C(m, j) and the direct sum.
UkDecomposition uk_decomposition(const LieAlgebra& g, const GCStructure& s);

struct NotIntegrable : std::runtime_error {
    Form offending;
    NotIntegrable(Form f, const std::string& msg) : std::runtime_error(msg), offending(std::move(f)) {}
};

struct DelDelbar {
    Mat del;    // projection of d_H one level up (U^k -> U^{k+1}), ambient coords
    Mat delbar; // one level down
};

// Splits d_H across adjacent levels; a residual on any other level throws
// NotIntegrable with the offending basis form.
DelDelbar del_delbar(const LieAlgebra& g, const GCStructure& s, const UkDecomposition& u);

struct NotInvolutive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chevalley-Eilenberg DGA of the complex Lie algebra (L, Courant bracket),
// written on generators mu^k in Lbar dual to the chosen L basis via
// 2<mu^k, l_j> = delta_kj.
struct AlgebroidDga {
    std::vector<Vec> l_basis;   // vectors in C^{2m}
    std::vector<Vec> dual_gens; // mu^k in C^{2m}
    Dga dga;
};

AlgebroidDga algebroid_dga(const LieAlgebra& g, const GCStructure& s);
AlgebroidDga algebroid_dga_with_basis(const LieAlgebra& g, const GCStructure& s,
                                      const std::vector<Vec>& l_basis);

// (mu^{k1} ^ ... ^ mu^{kp}) . rho = mu^{k1} . ( ... (mu^{kp} . rho)), extended
// linearly in alpha (given in generator-mask coordinates).
Form clifford_act_multi(const std::vector<Vec>& gen_doubles, const Form& alpha, const Form& rho);

struct Eq3Report {
    bool ok = true;
    std::uint32_t failing_alpha = 0; // generator mask, meaningful when !ok
    AlgebroidDga algebroid;
};

// dbar(alpha . rho) = (d_L alpha) . rho for every basis alpha of wedge Lbar.
Eq3Report verify_eq3(const LieAlgebra& g, const GCStructure& s);

// Constructors for the catalog: complex-structure block form, symplectic block
// form, and the B-field shear conjugation.
GCStructure gcs_from_complex_structure(const LieAlgebra& g, const Mat& j_small, Twist t);
GCStructure gcs_from_symplectic(const LieAlgebra& g, const Form& omega, Twist t);
// Shear X+xi -> X + xi + i_X B conjugation; twist of the result is passed by
// the caller (unchanged for closed B).
GCStructure b_field_transform(const GCStructure& s, const Form& b2, Twist result_twist);

} // namespace gkforge
