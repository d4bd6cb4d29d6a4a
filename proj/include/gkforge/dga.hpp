#pragma once

#include "gkforge/form.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gkforge {

struct DgaError : std::runtime_error {
    int failing_generator;
    DgaError(int gen, const std::string& msg) : std::runtime_error(msg), failing_generator(gen) {}
};

// Extend degree-2 generator images to the degree-1 derivation they determine.
Form derivation_apply(const std::vector<Form>& images, const Form& f);
// Matrix of that derivation on the full 2^n ambient (mask coordinates).
Mat derivation_full_matrix(int n, const std::vector<Form>& images);

// First generator whose image breaks d^2 = 0, if any. Images must be pure
// degree 2 (or zero).
std::optional<int> d_squared_failing_gen(int n, const std::vector<Form>& images);

// Exterior DGA on n degree-1 generators over Q(i); d given on generators and
// extended as a derivation. Degreewise matrices are cached at construction and
// the value is immutable afterwards.
class Dga {
public:
    static Dga make(int n, std::vector<Form> images); // throws DgaError when d^2 != 0

    int gens() const { return n_; }
    const Form& d_gen(int i) const { return images_[i]; }
    const std::vector<Form>& images() const { return images_; }

    Form d(const Form& f) const { return derivation_apply(images_, f); }
    // d restricted to degree k, C(n,k+1) x C(n,k) in degree coordinates.
    const Mat& d_matrix(int k) const { return dmat_[k]; }

private:
    int n_ = 0;
    std::vector<Form> images_;
    std::vector<Mat> dmat_;
};

struct Cohomology {
    std::vector<Subspace> closed;          // per degree, in degree coordinates
    std::vector<Subspace> exact;
    std::vector<int> betti;
    std::vector<std::vector<Form>> reps;   // canonical echelon complement of exact inside closed
};

Cohomology cohomology(const Dga& a);

struct MasseyUndefined : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MasseyResult {
    Form rep;              // x^c - (-1)^|a| a^y, closed of degree |a|+|b|+|c|-1
    Form x, y;             // canonical primitives dx = a^b, dy = b^c
    Subspace indeterminacy; // [a].H + H.[c] lifted to forms, exact included,
                            // so class membership is form membership
    bool vanishes = false;
};

MasseyResult massey_triple(const Dga& a, const Cohomology& h, const Form& fa, const Form& fb, const Form& fc);

struct DgaFiltration {
    std::vector<Subspace> steps; // ascending subspaces of the generator space C^n
    bool complete = false;       // reached the whole degree-1 space
    std::vector<Vec> basis;      // ordered flag-refining basis (complete or not)
};

// V_1 = ker d on the generator span, V_i = { v : dv in Wedge^2 V_{i-1} }.
DgaFiltration dga_filtration(const Dga& a);

// True iff each basis vector's differential lies in the exterior square of the
// span of the strictly earlier ones. Throws when the basis does not span.
bool minimal_basis(const Dga& a, const std::vector<Vec>& basis);

struct WitnessReport {
    bool found = false;
    bool product_exact = false;   // b_1 ^ ... ^ b_{n-1} exact
    bool top_class_nonzero = false;
    Form product;                 // b_1 ^ ... ^ b_{n-1}
    Form preimage;                // canonical x with dx = product (when exact)
    Form top;                     // b_1 ^ ... ^ b_n
};

// Quasi-isomorphism obstruction for a minimal exterior DGA: the product of all
// but the last basis element is exact while the full product represents a
// nonzero top class, so no DGA map onto the cohomology can exist.
WitnessReport nonformality_witness(const Dga& a, const std::vector<Vec>& basis);

struct MasseyCertificate {
    Form a, b, c;
    MasseyResult result;
};

// Enumerate triples of canonical H^1/H^2 representatives with total degree at
// most max_total_degree; returns the defined, nonvanishing products.
std::vector<MasseyCertificate> massey_search(const Dga& a, const Cohomology& h, int max_total_degree);

} // namespace gkforge
