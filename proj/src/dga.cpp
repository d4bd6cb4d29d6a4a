#include "gkforge/dga.hpp"

#include <bit>

namespace gkforge {

Form derivation_apply(const std::vector<Form>& images, const Form& f) {
    int n = f.n;
    Form out(n);
    for (const auto& [mask, c] : f.terms) {
        std::uint32_t rest = mask;
        int pos = 0;
        while (rest) {
            int bit = std::countr_zero(rest);
            rest &= rest - 1;
            const Form& img = images[bit];
            if (!img.is_zero()) {
                std::uint32_t before = mask & ((1u << bit) - 1);
                std::uint32_t after = mask & ~((1u << (bit + 1)) - 1);
                CRat coeff = c;
                if (pos % 2) coeff = -coeff;
                Form term = wedge(Form::monomial(n, before, coeff), wedge(img, Form::monomial(n, after, CRat(1))));
                out += term;
            }
            ++pos;
        }
    }
    return out;
}

Mat derivation_full_matrix(int n, const std::vector<Form>& images) {
    int dim = 1 << n;
    Mat m(dim, dim);
    for (std::uint32_t mask = 0; mask < static_cast<std::uint32_t>(dim); ++mask) {
        Form img = derivation_apply(images, Form::monomial(n, mask, CRat(1)));
        for (const auto& [om, c] : img.terms) m.at(static_cast<int>(om), static_cast<int>(mask)) = c;
    }
    return m;
}

static void check_images(int n, const std::vector<Form>& images) {
    if (static_cast<int>(images.size()) != n) throw std::invalid_argument("need one differential image per generator");
    for (int i = 0; i < n; ++i) {
        if (images[i].n != n) throw std::invalid_argument("image generator count mismatch");
        if (!images[i].is_zero() && images[i].homogeneous_degree() != 2)
            throw std::invalid_argument("differential image must have pure degree 2");
    }
}

std::optional<int> d_squared_failing_gen(int n, const std::vector<Form>& images) {
    check_images(n, images);
    for (int i = 0; i < n; ++i)
        if (!derivation_apply(images, images[i]).is_zero()) return i;
    return std::nullopt;
}

Dga Dga::make(int n, std::vector<Form> images) {
    if (auto bad = d_squared_failing_gen(n, images))
        throw DgaError(*bad, "d^2 != 0 on generator " + std::to_string(*bad + 1));
    Dga a;
    a.n_ = n;
    a.images_ = std::move(images);
    a.dmat_.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        auto src = degree_masks(n, k);
        auto dst = degree_masks(n, k + 1);
        Mat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t col = 0; col < src.size(); ++col) {
            Form img = derivation_apply(a.images_, Form::monomial(n, src[col], CRat(1)));
            Vec coords = form_to_degree_coords(img, k + 1);
            for (size_t row = 0; row < dst.size(); ++row) m.at(static_cast<int>(row), static_cast<int>(col)) = coords[row];
        }
        a.dmat_.push_back(std::move(m));
    }
    return a;
}

Cohomology cohomology(const Dga& a) {
    int n = a.gens();
    Cohomology h;
    h.closed.reserve(n + 1);
    h.exact.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        h.closed.push_back(kernel(a.d_matrix(k)));
        h.exact.push_back(k == 0 ? Subspace::zero(h.closed[0].ambient) : image(a.d_matrix(k - 1)));
        h.betti.push_back(h.closed[k].dim() - h.exact[k].dim());
        // Canonical representatives: rows of the closed echelon basis whose
        // pivot is not a pivot of the exact subspace.
        std::vector<Form> reps;
        auto piv_closed = rref(h.closed[k].basis).pivots;
        auto piv_exact = rref(h.exact[k].basis).pivots;
        std::vector<bool> is_exact_piv(h.closed[k].ambient + 1, false);
        for (int p : piv_exact) is_exact_piv[p] = true;
        for (int r = 0; r < h.closed[k].dim(); ++r)
            if (!is_exact_piv[piv_closed[r]])
                reps.push_back(form_from_degree_coords(n, k, h.closed[k].basis.row(r)));
        h.reps.push_back(std::move(reps));
    }
    return h;
}

static int checked_degree(const Form& f, const char* what) {
    int d = f.homogeneous_degree();
    if (d < 0) throw std::invalid_argument(std::string(what) + ": form must be homogeneous");
    return d;
}

MasseyResult massey_triple(const Dga& a, const Cohomology& h, const Form& fa, const Form& fb, const Form& fc) {
    int n = a.gens();
    int da = checked_degree(fa, "massey"), db = checked_degree(fb, "massey"), dc = checked_degree(fc, "massey");
    for (const Form* f : {&fa, &fb, &fc})
        if (!a.d(*f).is_zero()) throw std::invalid_argument("massey: arguments must be closed");

    auto primitive = [&](const Form& w, int deg) -> std::optional<Form> {
        // canonical x of degree deg-1 with dx = w; free variables zero
        if (deg > n) return Form::zero(n); // w is zero beyond top degree
        if (deg == 0) {                    // nothing maps into degree 0
            if (w.is_zero()) return Form::zero(n);
            return std::nullopt;
        }
        Vec rhs = form_to_degree_coords(w, deg);
        auto x = solve(a.d_matrix(deg - 1), rhs);
        if (!x) return std::nullopt;
        return form_from_degree_coords(n, deg - 1, *x);
    };

    Form ab = wedge(fa, fb);
    Form bc = wedge(fb, fc);
    auto x = primitive(ab, da + db);
    if (!x) throw MasseyUndefined("undefined Massey product: [a][b] != 0");
    auto y = primitive(bc, db + dc);
    if (!y) throw MasseyUndefined("undefined Massey product: [b][c] != 0");

    MasseyResult res;
    res.x = *x;
    res.y = *y;
    Form ay = wedge(fa, *y);
    if (da % 2) ay = -ay;
    res.rep = wedge(*x, fc) - ay;

    int deg = da + db + dc - 1;
    if (deg > n || deg < 0) {
        res.indeterminacy = Subspace::zero(0);
        res.vanishes = res.rep.is_zero();
        return res;
    }
    std::vector<Vec> gens;
    if (db + dc - 1 >= 0 && db + dc - 1 <= n)
        for (const Form& rep : h.reps[db + dc - 1])
            gens.push_back(form_to_degree_coords(wedge(fa, rep), deg));
    if (da + db - 1 >= 0 && da + db - 1 <= n)
        for (const Form& rep : h.reps[da + db - 1])
            gens.push_back(form_to_degree_coords(wedge(rep, fc), deg));
    for (int r = 0; r < h.exact[deg].dim(); ++r) gens.push_back(h.exact[deg].basis.row(r));
    res.indeterminacy = span_of(static_cast<int>(degree_masks(n, deg).size()), gens);
    res.vanishes = contains(res.indeterminacy, form_to_degree_coords(res.rep, deg));
    return res;
}

// Matrix of the reduction map y -> y - sum_r y[pivot_r] w_r; its kernel is
// exactly the row space of w.
static Mat quotient_reduction(const Subspace& w) {
    Mat q = Mat::identity(w.ambient);
    auto piv = rref(w.basis).pivots;
    for (int r = 0; r < w.dim(); ++r)
        for (int j = 0; j < w.ambient; ++j) q.at(j, piv[r]) -= w.basis.at(r, j);
    return q;
}

static Subspace wedge_square_span(int n, const Subspace& v) {
    std::vector<Vec> gens;
    for (int r = 0; r < v.dim(); ++r)
        for (int s = r + 1; s < v.dim(); ++s) {
            Form w = wedge(form_from_degree_coords(n, 1, v.basis.row(r)),
                           form_from_degree_coords(n, 1, v.basis.row(s)));
            gens.push_back(form_to_degree_coords(w, 2));
        }
    return span_of(static_cast<int>(degree_masks(n, 2).size()), gens);
}

DgaFiltration dga_filtration(const Dga& a) {
    int n = a.gens();
    DgaFiltration f;
    Subspace cur = kernel(a.d_matrix(1));
    f.steps.push_back(cur);
    while (cur.dim() < n) {
        Mat q = quotient_reduction(wedge_square_span(n, cur));
        Subspace next = kernel(mat_mul(q, a.d_matrix(1)));
        if (subspace_equal(next, cur)) break; // stalled below the full space
        cur = next;
        f.steps.push_back(cur);
    }
    f.complete = cur.dim() == n;
    // Flag-refining basis: extend by echelon rows of each step, lowest pivot first.
    std::vector<Vec> chosen;
    for (const Subspace& step : f.steps) {
        for (int r = 0; r < step.dim(); ++r) {
            Vec v = step.basis.row(r);
            if (!contains(span_of(n, chosen), v)) chosen.push_back(std::move(v));
        }
    }
    f.basis = std::move(chosen);
    return f;
}

bool minimal_basis(const Dga& a, const std::vector<Vec>& basis) {
    int n = a.gens();
    if (static_cast<int>(basis.size()) != n || span_of(n, basis).dim() != n)
        throw std::invalid_argument("minimal_basis: basis does not span the generator space");
    std::vector<Vec> earlier;
    for (const Vec& b : basis) {
        Form db = a.d(form_from_degree_coords(n, 1, b));
        if (!db.is_zero()) {
            Subspace w = wedge_square_span(n, span_of(n, earlier));
            if (!contains(w, form_to_degree_coords(db, 2))) return false;
        }
        earlier.push_back(b);
    }
    return true;
}

WitnessReport nonformality_witness(const Dga& a, const std::vector<Vec>& basis) {
    int n = a.gens();
    if (!minimal_basis(a, basis)) throw std::invalid_argument("nonformality_witness: basis is not minimal");
    WitnessReport rep;
    Form prod = Form::unit(n);
    for (int i = 0; i + 1 < n; ++i) prod = wedge(prod, form_from_degree_coords(n, 1, basis[i]));
    rep.product = prod;
    rep.top = wedge(prod, form_from_degree_coords(n, 1, basis[n - 1]));

    if (n >= 2) {
        auto x = solve(a.d_matrix(n - 2), form_to_degree_coords(prod, n - 1));
        rep.product_exact = x.has_value();
        if (x) rep.preimage = form_from_degree_coords(n, n - 2, *x);
    }

    Subspace exact_top = image(a.d_matrix(n - 1));
    rep.top_class_nonzero = !rep.top.is_zero() && !contains(exact_top, form_to_degree_coords(rep.top, n));

    rep.found = rep.product_exact && rep.top_class_nonzero;
    return rep;
}

std::vector<MasseyCertificate> massey_search(const Dga& a, const Cohomology& h, int max_total_degree) {
    std::vector<Form> pool;
    for (int k = 1; k <= 2 && k <= a.gens(); ++k)
        for (const Form& r : h.reps[k]) pool.push_back(r);
    std::vector<MasseyCertificate> out;
    for (const Form& fa : pool)
        for (const Form& fb : pool)
            for (const Form& fc : pool) {
                int total = fa.homogeneous_degree() + fb.homogeneous_degree() + fc.homogeneous_degree();
                if (total > max_total_degree) continue;
                try {
                    MasseyResult r = massey_triple(a, h, fa, fb, fc);
                    if (!r.vanishes) out.push_back({fa, fb, fc, std::move(r)});
                } catch (const MasseyUndefined&) {
                    continue;
                }
            }
    return out;
}

} // namespace gkforge
