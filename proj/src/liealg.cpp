#include "gkforge/liealg.hpp"

namespace gkforge {

LieAlgebra LieAlgebra::abelian(int dim) {
    LieAlgebra g;
    g.dim_ = dim;
    g.c_.assign(static_cast<size_t>(dim) * dim * dim, Rat(0));
    return g;
}

LieAlgebra LieAlgebra::from_terms(int dim, const std::vector<BracketTerm>& terms) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
    LieAlgebra g = abelian(dim);
    std::vector<bool> given(static_cast<size_t>(dim) * dim * dim, false);
    auto idx = [&](int k, int i, int j) { return (static_cast<size_t>(k) * dim + i) * dim + j; };
    for (const auto& t : terms) {
        if (t.i < 0 || t.i >= dim || t.j < 0 || t.j >= dim || t.k < 0 || t.k >= dim)
            throw std::invalid_argument("bracket index out of range");
        if (t.i == t.j) throw std::invalid_argument("bracket [e_i, e_i] must vanish: antisymmetry violated");
        if (given[idx(t.k, t.i, t.j)] && g.c_[idx(t.k, t.i, t.j)] != t.c)
            throw std::invalid_argument("conflicting structure constants: antisymmetry violated");
        if (given[idx(t.k, t.j, t.i)] && g.c_[idx(t.k, t.j, t.i)] != -t.c)
            throw std::invalid_argument("conflicting structure constants: antisymmetry violated");
        g.c_[idx(t.k, t.i, t.j)] = t.c;
        g.c_[idx(t.k, t.j, t.i)] = -t.c;
        given[idx(t.k, t.i, t.j)] = given[idx(t.k, t.j, t.i)] = true;
    }
    return g;
}

bool LieAlgebra::is_abelian() const {
    for (const Rat& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
        throw std::invalid_argument("bracket: coordinate size mismatch");
    Vec z(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            CRat f = x[i] * y[j];
            for (int k = 0; k < dim_; ++k) {
                const Rat& cc = c(k, i, j);
                if (!cc.is_zero()) z[k] += f * CRat(cc);
            }
        }
    }
    return z;
}

JacobiReport check_jacobi(const LieAlgebra& g) {
    int m = g.dim();
    auto basis = [&](int i) {
        Vec v(m);
        v[i] = CRat(1);
        return v;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                Vec jac = vec_add(vec_add(g.bracket(g.bracket(basis(i), basis(j)), basis(k)),
                                          g.bracket(g.bracket(basis(j), basis(k)), basis(i))),
                                  g.bracket(g.bracket(basis(k), basis(i)), basis(j)));
                if (!vec_is_zero(jac)) return {false, i, j, k, jac};
            }
    return {};
}

LcsReport lower_central_series(const LieAlgebra& g) {
    int m = g.dim();
    LcsReport rep;
    Subspace cur = Subspace::full(m);
    rep.series.push_back(cur);
    auto basis = [&](int i) {
        Vec v(m);
        v[i] = CRat(1);
        return v;
    };
    while (cur.dim() > 0) {
        std::vector<Vec> gens;
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < cur.dim(); ++r) gens.push_back(g.bracket(basis(i), cur.basis.row(r)));
        Subspace next = span_of(m, gens);
        if (subspace_equal(next, cur)) { // stabilized above zero
            rep.nilpotent = false;
            return rep;
        }
        rep.series.push_back(next);
        cur = next;
    }
    rep.nilpotent = true;
    rep.step = static_cast<int>(rep.series.size()) - 1;
    return rep;
}

Dga ce_differential(const LieAlgebra& g) {
    int m = g.dim();
    std::vector<Form> images;
    images.reserve(m);
    for (int k = 0; k < m; ++k) {
        Form img(m);
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j) {
                const Rat& cc = g.c(k, i, j);
                if (!cc.is_zero()) img += Form::monomial(m, (1u << i) | (1u << j), CRat(-cc));
            }
        images.push_back(std::move(img));
    }
    return Dga::make(m, std::move(images));
}

Filtration filtration(const LieAlgebra& g) {
    DgaFiltration f = dga_filtration(ce_differential(g));
    if (!f.complete)
        throw NotNilpotentError(static_cast<int>(f.steps.size()),
                                "filtration stalls at step " + std::to_string(f.steps.size()) +
                                    " with dimension " + std::to_string(f.steps.back().dim()) +
                                    " < " + std::to_string(g.dim()) + ": algebra is not nilpotent");
    Filtration out;
    out.steps = std::move(f.steps);
    out.s = static_cast<int>(out.steps.size());
    out.basis = std::move(f.basis);
    return out;
}

bool check_minimal_basis(const LieAlgebra& g, const std::vector<Vec>& basis) {
    return minimal_basis(ce_differential(g), basis);
}

} // namespace gkforge
