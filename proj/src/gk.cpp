#include "gkforge/gk.hpp"

#include <bit>
#include <cstdlib>

namespace gkforge {

static void require_shared_twist(const GKPair& pair) {
    if (pair.j1.twist.h != pair.j2.twist.h)
        throw std::invalid_argument("generalized Kahler pair must share one twist");
}

static bool commute(const GKPair& pair) {
    return mat_mul(pair.j1.j, pair.j2.j) == mat_mul(pair.j2.j, pair.j1.j);
}

VerdictReport check_gk(const LieAlgebra& g, const GKPair& pair) {
    require_shared_twist(pair);
    VerdictReport rep;
    for (const auto& [tag, s] : {std::pair<std::string, const GCStructure*>{"j1", &pair.j1}, {"j2", &pair.j2}}) {
        VerdictReport r = check_gcs(g, *s);
        for (auto& v : r.verdicts) rep.verdicts.push_back({tag + "_" + v.check, v.pass, v.details});
    }
    bool comm = commute(pair);
    rep.verdicts.push_back({"structures_commute", comm, comm ? "J1 J2 = J2 J1" : "J1 J2 != J2 J1"});

    // Gram of the bilinear form <J1 J2 v, w>, symmetrized before the pivot test.
    Mat gprod = mat_mul(pair.j1.j, pair.j2.j);
    Mat gram = mat_mul(gprod.transpose(), pairing_gram(g.dim()));
    Mat sym = mat_scale(CRat(Rat(1, 2)), mat_add(gram, gram.transpose()));
    bool pd = is_positive_definite(sym);
    rep.verdicts.push_back({"gram_positive_definite", pd,
                            pd ? "<J1 J2 v, v> > 0 for v != 0" : "<J1 J2 v, v> is not positive definite"});
    return rep;
}

IntersectionDims intersection_dims(const GKPair& pair) {
    require_shared_twist(pair);
    if (!commute(pair)) throw std::invalid_argument("intersection_dims: structures do not commute");
    Eigenbundle e1 = i_eigenspace(pair.j1);
    Eigenbundle e2 = i_eigenspace(pair.j2);
    IntersectionDims out;
    out.dim_l1 = e1.l.dim();
    Subspace a = intersect(e1.l, e2.l);
    Subspace b = intersect(e1.l, e2.lbar);
    out.dim_l1_l2 = a.dim();
    out.dim_l1_l2bar = b.dim();
    out.splits = out.dim_l1_l2 + out.dim_l1_l2bar == out.dim_l1 &&
                 subspace_equal(subspace_sum(a, b), e1.l);
    out.identity = out.dim_l1 == 2 * out.dim_l1_l2;
    return out;
}

Bigrading l1_bigrading(const LieAlgebra& g, const GKPair& pair) {
    require_shared_twist(pair);
    if (!commute(pair)) throw std::invalid_argument("l1_bigrading: structures do not commute");
    int m = g.dim();
    Eigenbundle e1 = i_eigenspace(pair.j1);
    Eigenbundle e2 = i_eigenspace(pair.j2);
    Subspace a = intersect(e1.l, e2.l);     // +i eigenspace of J2 on L1
    Subspace b = intersect(e1.l, e2.lbar);  // -i eigenspace
    if (a.dim() + b.dim() != m || a.dim() != b.dim())
        throw std::invalid_argument("l1_bigrading: L1 does not split evenly under J2");

    std::vector<Vec> l_basis;
    for (int r = 0; r < a.dim(); ++r) l_basis.push_back(a.basis.row(r));
    for (int r = 0; r < b.dim(); ++r) l_basis.push_back(b.basis.row(r));

    Bigrading big;
    big.half = a.dim();
    big.alg = algebroid_dga_with_basis(g, pair.j1, l_basis);

    // Dual generators of the first block must land in conj(L1) cap conj(L2),
    // dual generators of the second block in conj(L1) cap L2.
    Subspace pbar = intersect(e1.lbar, e2.lbar);
    Subspace qbar = intersect(e1.lbar, e2.l);
    for (int k = 0; k < m; ++k)
        if (!contains(k < big.half ? pbar : qbar, big.alg.dual_gens[k]))
            throw std::logic_error("l1_bigrading: dual generator falls outside its bidegree block");

    std::uint32_t low = (1u << big.half) - 1;
    auto bidegree = [&](std::uint32_t mask) {
        return std::pair<int, int>(std::popcount(mask & low), std::popcount(mask & ~low));
    };
    big.del_images.assign(m, Form(m));
    big.delbar_images.assign(m, Form(m));
    for (int k = 0; k < m; ++k) {
        auto [pk, qk] = bidegree(1u << k);
        for (const auto& [mask, c] : big.alg.dga.d_gen(k).terms) {
            auto [p, q] = bidegree(mask);
            if (p == pk + 1 && q == qk) big.del_images[k] += Form::monomial(m, mask, c);
            else if (p == pk && q == qk + 1) big.delbar_images[k] += Form::monomial(m, mask, c);
            else {
                big.only_two_components = false;
                big.stray_generator = k;
            }
        }
    }
    if (!big.only_two_components)
        throw std::invalid_argument("l1_bigrading: J2 restriction is not integrable on L1 (stray bidegree on generator " +
                                    std::to_string(big.stray_generator + 1) + ")");
    big.del_full = derivation_full_matrix(m, big.del_images);
    big.delbar_full = derivation_full_matrix(m, big.delbar_images);
    return big;
}

UpqDecomposition upq_decomposition(const LieAlgebra& g, const GKPair& pair) {
    require_shared_twist(pair);
    if (!commute(pair)) throw std::invalid_argument("upq_decomposition: structures do not commute");
    int m = g.dim();
    int dim = 1 << m;
    UkDecomposition u1 = uk_decomposition(g, pair.j1);
    UkDecomposition u2 = uk_decomposition(g, pair.j2);
    UpqDecomposition out;
    out.m = m;
    out.half = m / 2;

    int total = 0;
    Subspace acc = Subspace::zero(dim);
    std::vector<Vec> cols;
    for (int j = 0; j <= m; ++j)
        for (int t = 0; t <= m; ++t) {
            Subspace s = intersect(u1.levels[j], u2.levels[t]);
            if (s.dim() == 0) continue;
            total += s.dim();
            acc = subspace_sum(acc, s);
            for (int r = 0; r < s.dim(); ++r) {
                cols.push_back(s.basis.row(r));
                out.col_level.emplace_back(j, t);
            }
            out.spaces.emplace_back(j, t, std::move(s));
        }
    out.direct_sum_ok = total == dim && acc.dim() == dim;
    if (!out.direct_sum_ok)
        throw std::invalid_argument("upq_decomposition: U^{p,q} spaces do not form a direct sum");
    out.basis_cols = Mat::from_cols(cols, dim);
    out.basis_inv = inverse(out.basis_cols);

    Mat dh = d_h_matrix(g, pair.j1.twist);
    out.four_corners_ok = true;
    for (int col = 0; col < dim && out.four_corners_ok; ++col) {
        auto [j, t] = out.col_level[col];
        Vec y = out.basis_inv.apply(dh.apply(out.basis_cols.col(col)));
        for (int row = 0; row < dim; ++row) {
            if (y[row].is_zero()) continue;
            auto [jr, tr] = out.col_level[row];
            if (std::abs(jr - j) != 1 || std::abs(tr - t) != 1) {
                out.four_corners_ok = false;
                break;
            }
        }
    }
    return out;
}

DeltaOps delta_pm(const LieAlgebra& g, const GKPair& pair, const UpqDecomposition& u) {
    int dim = 1 << u.m;
    Mat dh = d_h_matrix(g, pair.j1.twist);
    Mat plus_cols(dim, dim), minus_cols(dim, dim);
    for (int col = 0; col < dim; ++col) {
        auto [j, t] = u.col_level[col];
        Vec y = u.basis_inv.apply(dh.apply(u.basis_cols.col(col)));
        Vec plus(dim), minus(dim);
        for (int row = 0; row < dim; ++row) {
            if (y[row].is_zero()) continue;
            auto [jr, tr] = u.col_level[row];
            // delta_+ : (p,q) -> (p-1,q+1) is levels (j+1, t-1);
            // delta_- : (p,q) -> (p-1,q-1) is levels (j+1, t+1).
            if (jr == j + 1 && tr == t - 1) plus[row] = y[row];
            else if (jr == j + 1 && tr == t + 1) minus[row] = y[row];
        }
        Vec pa = u.basis_cols.apply(plus), ma = u.basis_cols.apply(minus);
        for (int row = 0; row < dim; ++row) {
            plus_cols.at(row, col) = pa[row];
            minus_cols.at(row, col) = ma[row];
        }
    }
    DeltaOps out;
    out.plus = mat_mul(plus_cols, u.basis_inv);
    out.minus = mat_mul(minus_cols, u.basis_inv);
    UkDecomposition u1 = uk_decomposition(g, pair.j1);
    out.sum_is_dbar1 = mat_add(out.plus, out.minus) == del_delbar(g, pair.j1, u1).delbar;
    return out;
}

DdbarReport ddbar_lemma_check(const Mat& delta_plus, const Mat& delta_minus) {
    DdbarReport rep;
    rep.im_plus_ker_minus = intersect(image(delta_plus), kernel(delta_minus));
    rep.im_minus_ker_plus = intersect(image(delta_minus), kernel(delta_plus));
    rep.im_plus_minus = image(mat_mul(delta_plus, delta_minus));
    rep.equal = subspace_equal(rep.im_plus_ker_minus, rep.im_minus_ker_plus) &&
                subspace_equal(rep.im_minus_ker_plus, rep.im_plus_minus);
    return rep;
}

CorrespondenceReport gk_correspondence(const LieAlgebra& g, const GKPair& pair) {
    int m = g.dim();
    Bigrading big = l1_bigrading(g, pair);
    UpqDecomposition u = upq_decomposition(g, pair);
    DeltaOps delta = delta_pm(g, pair, u);
    Form rho = canonical_line(i_eigenspace(pair.j1)).rho;

    CorrespondenceReport rep;
    rep.del_is_plus = rep.del_is_minus = true;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Form alpha = Form::monomial(m, mask, CRat(1));
        Vec arho = form_to_coords(clifford_act_multi(big.alg.dual_gens, alpha, rho));
        auto act = [&](const Mat& op) {
            Form img = form_from_coords(m, op.apply(form_to_coords(alpha)));
            return form_to_coords(clifford_act_multi(big.alg.dual_gens, img, rho));
        };
        Vec del_side = act(big.del_full);
        Vec delbar_side = act(big.delbar_full);
        Vec plus_side = delta.plus.apply(arho);
        Vec minus_side = delta.minus.apply(arho);
        if (del_side != plus_side || delbar_side != minus_side) rep.del_is_plus = false;
        if (del_side != minus_side || delbar_side != plus_side) rep.del_is_minus = false;
        if (!rep.del_is_plus && !rep.del_is_minus) break;
    }
    rep.ok = rep.del_is_plus || rep.del_is_minus;
    return rep;
}

FormalityReport formality_algebroid(const LieAlgebra& g, const GCStructure& j1, int max_total_degree) {
    int m = g.dim();
    Eigenbundle e = i_eigenspace(j1);
    SpinorLine line = canonical_line(e);
    if (!check_hol_trivial(g, j1, line))
        throw std::invalid_argument("formality_algebroid: canonical generator is not d_H-closed");
    AlgebroidDga alg = algebroid_dga(g, j1);

    FormalityReport rep;
    if (max_total_degree <= 0) max_total_degree = m;
    DgaFiltration filt = dga_filtration(alg.dga);
    rep.lie_nilpotent = filt.complete;
    if (filt.complete) {
        rep.minimal_ok = minimal_basis(alg.dga, filt.basis);
        if (rep.minimal_ok) {
            rep.witness = nonformality_witness(alg.dga, filt.basis);
            rep.witness_ran = true;
        }
    }
    Cohomology h = cohomology(alg.dga);
    rep.betti = h.betti;
    rep.massey_nonvanishing = massey_search(alg.dga, h, max_total_degree);

    if (rep.witness_ran && rep.witness.found) rep.verdict = "non-formal (witness)";
    else if (!rep.massey_nonvanishing.empty()) rep.verdict = "non-formal (Massey certificate)";
    else rep.verdict = "no obstruction found up to degree bound";
    return rep;
}

} // namespace gkforge
