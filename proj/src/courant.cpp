#include "gkforge/courant.hpp"

#include <bit>

namespace gkforge {

CRat pairing(const Vec& v, const Vec& w) {
    if (v.size() != w.size() || v.size() % 2 != 0) throw std::invalid_argument("pairing: size mismatch");
    int m = static_cast<int>(v.size()) / 2;
    CRat acc;
    for (int k = 0; k < m; ++k) acc += w[m + k] * v[k] + v[m + k] * w[k];
    return acc * CRat(Rat(1, 2));
}

Mat pairing_gram(int m) {
    Mat p(2 * m, 2 * m);
    for (int k = 0; k < m; ++k) {
        p.at(k, m + k) = CRat(Rat(1, 2));
        p.at(m + k, k) = CRat(Rat(1, 2));
    }
    return p;
}

Twist make_twist(const LieAlgebra& g, Form h) {
    if (h.n != g.dim()) throw std::invalid_argument("twist generator count mismatch");
    for (const auto& [mask, c] : h.terms)
        if (!c.is_real()) throw std::invalid_argument("twist must have real coefficients");
    if (!h.is_zero() && h.homogeneous_degree() != 3)
        throw std::invalid_argument("twist must be a 3-form");
    if (!ce_differential(g).d(h).is_zero())
        throw NonClosedTwist("twist 3-form is not closed: dH != 0");
    return Twist{std::move(h)};
}

Twist zero_twist(const LieAlgebra& g) { return Twist{Form::zero(g.dim())}; }

Vec basis_double(int m, int a) {
    Vec v(2 * m);
    v[a] = CRat(1);
    return v;
}

static Vec vector_part(const Vec& v, int m) { return Vec(v.begin(), v.begin() + m); }
static Vec covector_part(const Vec& v, int m) { return Vec(v.begin() + m, v.end()); }

static Form covector_form(int m, const Vec& xi) {
    Form f(m);
    for (int k = 0; k < m; ++k)
        if (!xi[k].is_zero()) f.terms[1u << k] = xi[k];
    return f;
}

Vec courant_bracket(const LieAlgebra& g, const Twist& t, const Vec& v, const Vec& w) {
    int m = g.dim();
    if (static_cast<int>(v.size()) != 2 * m || static_cast<int>(w.size()) != 2 * m)
        throw std::invalid_argument("courant_bracket: size mismatch");
    Vec x = vector_part(v, m), xi = covector_part(v, m);
    Vec y = vector_part(w, m), eta = covector_part(w, m);

    Vec out(2 * m);
    Vec xy = g.bracket(x, y);
    for (int k = 0; k < m; ++k) out[k] = xy[k];

    auto lie_derivative = [&](const Vec& vx, const Vec& cov) {
        Vec r(m);
        for (int j = 0; j < m; ++j) {
            Vec ej(m);
            ej[j] = CRat(1);
            Vec br = g.bracket(vx, ej);
            CRat val;
            for (int k = 0; k < m; ++k) val += cov[k] * br[k];
            r[j] = -val;
        }
        return r;
    };
    Vec lx_eta = lie_derivative(x, eta);
    Vec ly_xi = lie_derivative(y, xi);
    for (int j = 0; j < m; ++j) out[m + j] = lx_eta[j] - ly_xi[j];

    if (!t.h.is_zero()) {
        // Twist term H(Y,X,.): the sign placement that makes eigenspace
        // involutivity agree with d_H mapping U^k into U^{k+1} (+) U^{k-1},
        // pinned by the derived-bracket identity [[d_H, v.], w.] rho.
        Form hterm = contract(contract(t.h, y), x);
        for (const auto& [mask, c] : hterm.terms) {
            int j = std::countr_zero(mask);
            out[m + j] += c;
        }
    }
    return out;
}

BracketJacobiReport check_bracket_jacobi(const LieAlgebra& g, const Twist& t) {
    int m = g.dim();
    for (int a = 0; a < 2 * m; ++a)
        for (int b = 0; b < 2 * m; ++b)
            for (int c = 0; c < 2 * m; ++c) {
                Vec va = basis_double(m, a), vb = basis_double(m, b), vc = basis_double(m, c);
                Vec jac = vec_add(vec_add(courant_bracket(g, t, courant_bracket(g, t, va, vb), vc),
                                          courant_bracket(g, t, courant_bracket(g, t, vb, vc), va)),
                                  courant_bracket(g, t, courant_bracket(g, t, vc, va), vb));
                if (!vec_is_zero(jac)) return {false, a, b, c};
            }
    return {};
}

Form d_h(const LieAlgebra& g, const Twist& t, const Form& f) {
    Form out = ce_differential(g).d(f);
    if (!t.h.is_zero()) out += wedge(t.h, f);
    return out;
}

Mat d_h_matrix(const LieAlgebra& g, const Twist& t) {
    int m = g.dim();
    Dga ce = ce_differential(g);
    int dim = 1 << m;
    Mat out(dim, dim);
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(dim); ++mask) {
        Form mono = Form::monomial(m, mask, CRat(1));
        Form img = ce.d(mono);
        if (!t.h.is_zero()) img += wedge(t.h, mono);
        for (const auto& [om, c] : img.terms) out.at(static_cast<int>(om), static_cast<int>(mask)) = c;
    }
    return out;
}

Form clifford_act(const Vec& v, const Form& rho) {
    int m = rho.n;
    if (static_cast<int>(v.size()) != 2 * m) throw std::invalid_argument("clifford_act: size mismatch");
    Form out = contract(rho, vector_part(v, m));
    out += wedge(covector_form(m, covector_part(v, m)), rho);
    return out;
}

Mat clifford_matrix(int m, const Vec& v) {
    int dim = 1 << m;
    Mat out(dim, dim);
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(dim); ++mask) {
        Form img = clifford_act(v, Form::monomial(m, mask, CRat(1)));
        for (const auto& [om, c] : img.terms) out.at(static_cast<int>(om), static_cast<int>(mask)) = c;
    }
    return out;
}

} // namespace gkforge
