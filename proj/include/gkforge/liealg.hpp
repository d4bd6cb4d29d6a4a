#pragma once

#include "gkforge/dga.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace gkforge {

struct BracketTerm {
    int i = 0, j = 0, k = 0; // 0-based: [e_i, e_j] gains c * e_k
    Rat c;
};

// Finite-dimensional Lie algebra given by antisymmetric rational structure
// constants. Antisymmetry is enforced at construction; the Jacobi identity is
// checked, not assumed.
class LieAlgebra {
public:
    static LieAlgebra abelian(int dim);
    // Validates index ranges, i != j, and antisymmetry across duplicate terms.
    static LieAlgebra from_terms(int dim, const std::vector<BracketTerm>& terms);

    int dim() const { return dim_; }
    const Rat& c(int k, int i, int j) const { return c_[(static_cast<size_t>(k) * dim_ + i) * dim_ + j]; }
    bool is_abelian() const;

    // Bracket of complex coordinate vectors.
    Vec bracket(const Vec& x, const Vec& y) const;

private:
    int dim_ = 0;
    std::vector<Rat> c_;
};

struct JacobiReport {
    bool ok = true;
    int i = -1, j = -1, k = -1; // first failing triple
    Vec jacobiator;             // its value
};

JacobiReport check_jacobi(const LieAlgebra& g);

struct LcsReport {
    std::vector<Subspace> series; // g, [g,g], [g,[g,g]], ...
    bool nilpotent = false;
    std::optional<int> step; // smallest s with series[s] = 0
};

LcsReport lower_central_series(const LieAlgebra& g);

// Chevalley-Eilenberg complex: d e^k = -sum_{i<j} c^k_ij e^i ^ e^j, extended
// as a derivation. Throws DgaError (d^2 != 0) exactly when Jacobi fails.
Dga ce_differential(const LieAlgebra& g);

struct NotNilpotentError : std::runtime_error {
    int stalled_step;
    NotNilpotentError(int step, const std::string& msg) : std::runtime_error(msg), stalled_step(step) {}
};

struct Filtration {
    std::vector<Subspace> steps; // ascending, last = whole dual space
    int s = 0;                   // number of steps
    std::vector<Vec> basis;      // compatible ordered basis of degree-1 forms
};

Filtration filtration(const LieAlgebra& g); // throws NotNilpotentError when it stalls

bool check_minimal_basis(const LieAlgebra& g, const std::vector<Vec>& basis);

} // namespace gkforge
