#include "gkforge/gcs.hpp"

#include <bit>

namespace gkforge {

bool VerdictReport::all_pass() const {
    for (const auto& v : verdicts)
        if (!v.pass) return false;
    return true;
}

const Verdict* VerdictReport::find(const std::string& check) const {
    for (const auto& v : verdicts)
        if (v.check == check) return &v;
    return nullptr;
}

static void require_real_square(const Mat& j) {
    if (j.rows != j.cols || j.rows % 2 != 0) throw std::invalid_argument("structure matrix must be square of even size");
    for (const auto& x : j.a)
        if (!x.is_real()) throw std::invalid_argument("structure matrix must be real rational");
}

static bool squares_to_minus_one(const Mat& j) {
    Mat sq = mat_mul(j, j);
    Mat minus_id = mat_scale(CRat(-1), Mat::identity(j.rows));
    return sq == minus_id;
}

static bool preserves_pairing(const Mat& j) {
    Mat p = pairing_gram(j.rows / 2);
    return mat_mul(j.transpose(), mat_mul(p, j)) == p;
}

static Subspace eigenspace_i(const Mat& j) {
    Mat shifted = j;
    for (int r = 0; r < j.rows; ++r) shifted.at(r, r) -= CRat::i();
    return kernel(shifted);
}

VerdictReport check_gcs(const LieAlgebra& g, const GCStructure& s) {
    require_real_square(s.j);
    if (g.dim() % 2 != 0)
        throw std::invalid_argument("generalized complex structures need an even-dimensional algebra");
    if (s.j.rows != 2 * g.dim()) throw std::invalid_argument("structure matrix size does not match the double");
    VerdictReport rep;

    bool sq = squares_to_minus_one(s.j);
    rep.verdicts.push_back({"j_squares_to_minus_one", sq, sq ? "J^2 = -1" : "J^2 != -1"});

    bool pp = preserves_pairing(s.j);
    rep.verdicts.push_back({"pairing_preserved", pp, pp ? "<Jv,Jw> = <v,w>" : "Gram mismatch: <Jv,Jw> != <v,w>"});

    if (!sq) {
        rep.verdicts.push_back({"eigenspace_involutive", false, "not evaluated: J^2 != -1"});
        return rep;
    }
    Subspace l = eigenspace_i(s.j);
    if (l.dim() != g.dim()) {
        rep.verdicts.push_back({"eigenspace_involutive", false,
                                "i-eigenspace has dimension " + std::to_string(l.dim()) +
                                    ", expected " + std::to_string(g.dim())});
        return rep;
    }
    bool inv = true;
    std::string detail = "all basis-pair brackets stay in L";
    for (int r = 0; r < l.dim() && inv; ++r)
        for (int t = r + 1; t < l.dim() && inv; ++t) {
            Vec br = courant_bracket(g, s.twist, l.basis.row(r), l.basis.row(t));
            if (!contains(l, br)) {
                inv = false;
                detail = "bracket of basis pair (" + std::to_string(r + 1) + "," + std::to_string(t + 1) +
                         ") leaves L";
            }
        }
    rep.verdicts.push_back({"eigenspace_involutive", inv, detail});
    return rep;
}

Eigenbundle i_eigenspace(const GCStructure& s) {
    require_real_square(s.j);
    int m = s.j.rows / 2;
    if (!squares_to_minus_one(s.j)) throw std::invalid_argument("i_eigenspace: J^2 != -1");
    Eigenbundle e;
    e.l = eigenspace_i(s.j);
    if (e.l.dim() != m)
        throw std::invalid_argument("i_eigenspace: dimension " + std::to_string(e.l.dim()) +
                                    " != " + std::to_string(m));
    for (int r = 0; r < m; ++r)
        for (int t = r; t < m; ++t)
            if (!pairing(e.l.basis.row(r), e.l.basis.row(t)).is_zero())
                throw std::invalid_argument("i_eigenspace: L is not isotropic");
    std::vector<Vec> conj_rows;
    for (int r = 0; r < m; ++r) conj_rows.push_back(vec_conj(e.l.basis.row(r)));
    e.lbar = span_of(2 * m, conj_rows);
    if (intersect(e.l, e.lbar).dim() != 0)
        throw std::invalid_argument("i_eigenspace: L cap conj(L) != 0");
    return e;
}

int type_of(const GCStructure& s) {
    Eigenbundle e = i_eigenspace(s);
    int m = s.j.rows / 2;
    std::vector<Vec> vector_parts;
    for (int r = 0; r < m; ++r) {
        Vec row = e.l.basis.row(r);
        vector_parts.emplace_back(row.begin(), row.begin() + m);
    }
    return m - span_of(m, vector_parts).dim();
}

bool is_abelian_gcs(const LieAlgebra& g, const GCStructure& s) {
    Eigenbundle e = i_eigenspace(s);
    for (int r = 0; r < e.l.dim(); ++r)
        for (int t = r + 1; t < e.l.dim(); ++t)
            if (!vec_is_zero(courant_bracket(g, s.twist, e.l.basis.row(r), e.l.basis.row(t))))
                return false;
    return true;
}

SpinorLine canonical_line(const Eigenbundle& e) {
    int m = e.l.ambient / 2;
    int dim = 1 << m;
    Mat stacked(m * dim, dim);
    for (int r = 0; r < m; ++r) {
        Mat cm = clifford_matrix(m, e.l.basis.row(r));
        for (int a = 0; a < dim; ++a)
            for (int b = 0; b < dim; ++b) stacked.at(r * dim + a, b) = cm.at(a, b);
    }
    Subspace joint = kernel(stacked);
    if (joint.dim() != 1)
        throw std::invalid_argument("canonical line: joint Clifford kernel has dimension " +
                                    std::to_string(joint.dim()) + ", expected 1");
    // rref scales the lowest nonzero mask coordinate to 1 already.
    return SpinorLine{form_from_coords(m, joint.basis.row(0))};
}

SpinorData spinor_from_data(int m, const Form& b2, const Form& omega, const Form& omega_factor) {
    for (const Form* f : {&b2, &omega})
        for (const auto& [mask, c] : f->terms)
            if (!c.is_real()) throw std::invalid_argument("B and omega must be real 2-forms");
    if ((!b2.is_zero() && b2.homogeneous_degree() != 2) || (!omega.is_zero() && omega.homogeneous_degree() != 2))
        throw std::invalid_argument("B and omega must be 2-forms");
    int k = omega_factor.is_zero() ? -1 : omega_factor.homogeneous_degree();
    if (k < 0) throw std::invalid_argument("Omega must be a nonzero homogeneous form");

    // Decomposability: the divisor space {theta : theta ^ Omega = 0} must have
    // dimension deg(Omega).
    std::vector<Vec> images;
    for (int j = 0; j < m; ++j)
        images.push_back(form_to_degree_coords(wedge(Form::gen(m, j), omega_factor), k + 1));
    Mat div_map = Mat::from_cols(images, static_cast<int>(degree_masks(m, k + 1).size()));
    if (kernel(div_map).dim() != k)
        throw std::invalid_argument("Omega is not decomposable");

    Form exponent = Form(m);
    exponent += b2;
    exponent += scale(CRat::i(), omega);
    Form expo = Form::unit(m);
    Form power = Form::unit(m);
    Rat factorial(1);
    for (int j = 1; 2 * j <= m; ++j) {
        power = wedge(power, exponent);
        factorial *= Rat(j);
        expo += scale(CRat(Rat(1) / factorial), power);
    }

    SpinorData out;
    out.rho = wedge(expo, omega_factor);
    // Nondegeneracy: Omega ^ conj(Omega) ^ omega^{n-k} != 0 with 2n = m.
    if (m % 2 != 0) throw std::invalid_argument("nondegeneracy check needs even dimension");
    int n = m / 2;
    Form check = wedge(omega_factor, omega_factor.conj());
    for (int j = 0; j < n - k; ++j) check = wedge(check, omega);
    out.nondegenerate = !check.is_zero();
    return out;
}

bool check_hol_trivial(const LieAlgebra& g, const GCStructure& s, const SpinorLine& line) {
    return d_h(g, s.twist, line.rho).is_zero();
}

std::vector<int> UkDecomposition::dims() const {
    std::vector<int> d;
    for (const auto& u : levels) d.push_back(u.dim());
    return d;
}

UkDecomposition uk_decomposition(const LieAlgebra& g, const GCStructure& s) {
    int m = g.dim();
    if (m % 2 != 0) throw std::invalid_argument("uk_decomposition needs even-dimensional g");
    Eigenbundle e = i_eigenspace(s);
    UkDecomposition u;
    u.m = m;
    u.half = m / 2;
    u.line = canonical_line(e);
    int dim = 1 << m;

    std::vector<Vec> lbar_rows;
    for (int r = 0; r < m; ++r) lbar_rows.push_back(e.lbar.basis.row(r));

    u.levels.push_back(span_of(dim, {form_to_coords(u.line.rho)}));
    for (int j = 1; j <= m; ++j) {
        std::vector<Vec> gens;
        const Subspace& prev = u.levels.back();
        for (int r = 0; r < prev.dim(); ++r) {
            Form w = form_from_coords(m, prev.basis.row(r));
            for (int t = 0; t < m; ++t) gens.push_back(form_to_coords(clifford_act(lbar_rows[t], w)));
        }
        u.levels.push_back(span_of(dim, gens));
    }

    Subspace acc = Subspace::zero(dim);
    int total = 0;
    for (int j = 0; j <= m; ++j) {
        total += u.levels[j].dim();
        acc = subspace_sum(acc, u.levels[j]);
    }
    if (acc.dim() != total || total != dim)
        throw std::invalid_argument("uk_decomposition: levels do not form a direct sum of the form space");

    std::vector<Vec> cols;
    for (int j = 0; j <= m; ++j)
        for (int r = 0; r < u.levels[j].dim(); ++r) {
            cols.push_back(u.levels[j].basis.row(r));
            u.col_level.push_back(j);
        }
    u.basis_cols = Mat::from_cols(cols, dim);
    u.basis_inv = inverse(u.basis_cols);
    return u;
}

DelDelbar del_delbar(const LieAlgebra& g, const GCStructure& s, const UkDecomposition& u) {
    int dim = 1 << u.m;
    Mat dh = d_h_matrix(g, s.twist);
    Mat up_cols(dim, dim), down_cols(dim, dim);
    for (int col = 0; col < dim; ++col) {
        int j = u.col_level[col];
        Vec w = u.basis_cols.col(col);
        Vec y = u.basis_inv.apply(dh.apply(w));
        // level j-1 carries U^{k+1}, level j+1 carries U^{k-1}
        Vec up(dim), down(dim);
        for (int row = 0; row < dim; ++row) {
            if (y[row].is_zero()) continue;
            int lr = u.col_level[row];
            if (lr == j - 1) up[row] = y[row];
            else if (lr == j + 1) down[row] = y[row];
            else
                throw NotIntegrable(form_from_coords(u.m, w),
                                    "d_H leaks from level " + std::to_string(j) + " to level " +
                                        std::to_string(lr) + ": structure is not integrable");
        }
        Vec up_amb = u.basis_cols.apply(up), down_amb = u.basis_cols.apply(down);
        for (int row = 0; row < dim; ++row) {
            up_cols.at(row, col) = up_amb[row];
            down_cols.at(row, col) = down_amb[row];
        }
    }
    DelDelbar out;
    out.del = mat_mul(up_cols, u.basis_inv);
    out.delbar = mat_mul(down_cols, u.basis_inv);
    return out;
}

AlgebroidDga algebroid_dga(const LieAlgebra& g, const GCStructure& s) {
    Eigenbundle e = i_eigenspace(s);
    std::vector<Vec> rows;
    for (int r = 0; r < e.l.dim(); ++r) rows.push_back(e.l.basis.row(r));
    return algebroid_dga_with_basis(g, s, rows);
}

AlgebroidDga algebroid_dga_with_basis(const LieAlgebra& g, const GCStructure& s,
                                      const std::vector<Vec>& l_basis) {
    int m = g.dim();
    if (static_cast<int>(l_basis.size()) != m) throw std::invalid_argument("algebroid basis must have m elements");
    Mat basis_cols = Mat::from_cols(l_basis, 2 * m);

    // Structure constants of (L, Courant bracket) in the given basis.
    std::vector<Form> images(m, Form(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Vec br = courant_bracket(g, s.twist, l_basis[i], l_basis[j]);
            auto gamma = solve(basis_cols, br);
            if (!gamma) throw NotInvolutive("Courant bracket of L basis pair leaves L");
            for (int k = 0; k < m; ++k)
                if (!(*gamma)[k].is_zero())
                    images[k] += Form::monomial(m, (1u << i) | (1u << j), -(*gamma)[k]);
        }

    // Dual generators mu^k in conj(L): 2<mu^k, l_j> = delta_kj.
    Mat gram(m, m);
    std::vector<Vec> lbar;
    for (int t = 0; t < m; ++t) lbar.push_back(vec_conj(l_basis[t]));
    for (int t = 0; t < m; ++t)
        for (int j = 0; j < m; ++j) gram.at(t, j) = CRat(Rat(2)) * pairing(lbar[t], l_basis[j]);
    Mat beta = inverse(gram); // beta * gram = I
    AlgebroidDga out;
    out.l_basis = l_basis;
    for (int k = 0; k < m; ++k) {
        Vec mu(2 * m);
        for (int t = 0; t < m; ++t) {
            const CRat& b = beta.at(k, t);
            if (b.is_zero()) continue;
            for (int c = 0; c < 2 * m; ++c) mu[c] += b * lbar[t][c];
        }
        out.dual_gens.push_back(std::move(mu));
    }
    out.dga = Dga::make(m, std::move(images));
    return out;
}

Form clifford_act_multi(const std::vector<Vec>& gen_doubles, const Form& alpha, const Form& rho) {
    Form out(rho.n);
    for (const auto& [mask, c] : alpha.terms) {
        Form w = rho;
        std::vector<int> bits;
        std::uint32_t mm = mask;
        while (mm) {
            bits.push_back(std::countr_zero(mm));
            mm &= mm - 1;
        }
        for (auto it = bits.rbegin(); it != bits.rend(); ++it) w = clifford_act(gen_doubles[*it], w);
        out += scale(c, w);
    }
    return out;
}

Eq3Report verify_eq3(const LieAlgebra& g, const GCStructure& s) {
    int m = g.dim();
    UkDecomposition u = uk_decomposition(g, s);
    DelDelbar ops = del_delbar(g, s, u);
    Eq3Report rep;
    rep.algebroid = algebroid_dga(g, s);
    const Form& rho = u.line.rho;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Form alpha = Form::monomial(m, mask, CRat(1));
        Form lhs_input = clifford_act_multi(rep.algebroid.dual_gens, alpha, rho);
        Vec lhs = ops.delbar.apply(form_to_coords(lhs_input));
        Form rhs = clifford_act_multi(rep.algebroid.dual_gens, rep.algebroid.dga.d(alpha), rho);
        if (lhs != form_to_coords(rhs)) {
            rep.ok = false;
            rep.failing_alpha = mask;
            return rep;
        }
    }
    return rep;
}

static Mat two_form_lowering(int m, const Form& omega) {
    // column j = coordinates of i_{e_j} omega
    Mat w(m, m);
    for (int j = 0; j < m; ++j) {
        Vec ej(m);
        ej[j] = CRat(1);
        Form c = contract(omega, ej);
        for (const auto& [mask, coef] : c.terms) w.at(std::countr_zero(mask), j) = coef;
    }
    return w;
}

GCStructure gcs_from_complex_structure(const LieAlgebra& g, const Mat& j_small, Twist t) {
    int m = g.dim();
    if (j_small.rows != m || j_small.cols != m) throw std::invalid_argument("complex structure must be m x m");
    if (mat_mul(j_small, j_small) != mat_scale(CRat(-1), Mat::identity(m)))
        throw std::invalid_argument("complex structure must square to -1");
    Mat big(2 * m, 2 * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            big.at(r, c) = -j_small.at(r, c);
            big.at(m + r, m + c) = j_small.at(c, r);
        }
    return GCStructure{std::move(big), std::move(t)};
}

GCStructure gcs_from_symplectic(const LieAlgebra& g, const Form& omega, Twist t) {
    int m = g.dim();
    if (omega.is_zero() || omega.homogeneous_degree() != 2)
        throw std::invalid_argument("symplectic form must be a nonzero 2-form");
    Mat w = two_form_lowering(m, omega);
    Mat winv = inverse(w); // nondegeneracy
    Mat big(2 * m, 2 * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            big.at(r, m + c) = -winv.at(r, c);
            big.at(m + r, c) = w.at(r, c);
        }
    return GCStructure{std::move(big), std::move(t)};
}

GCStructure b_field_transform(const GCStructure& s, const Form& b2, Twist result_twist) {
    int m = s.j.rows / 2;
    if (!b2.is_zero() && b2.homogeneous_degree() != 2) throw std::invalid_argument("B must be a 2-form");
    for (const auto& [mask, c] : b2.terms)
        if (!c.is_real()) throw std::invalid_argument("B must be real");
    Mat bt = two_form_lowering(m, b2);
    Mat shear = Mat::identity(2 * m);
    Mat unshear = Mat::identity(2 * m);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) {
            shear.at(m + r, c) = bt.at(r, c);
            unshear.at(m + r, c) = -bt.at(r, c);
        }
    return GCStructure{mat_mul(shear, mat_mul(s.j, unshear)), std::move(result_twist)};
}

} // namespace gkforge
