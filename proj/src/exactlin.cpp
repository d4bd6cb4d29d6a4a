#include "gkforge/exactlin.hpp"

#include <stdexcept>

namespace gkforge {

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const CRat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Vec vec_conj(const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i].conj();
    return r;
}

bool vec_is_zero(const Vec& a) {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CRat(1);
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows_in, int cols) {
    Mat m(static_cast<int>(rows_in.size()), cols);
    for (int r = 0; r < m.rows; ++r) {
        if (static_cast<int>(rows_in[r].size()) != cols)
            throw std::invalid_argument("row length mismatch");
        for (int c = 0; c < cols; ++c) m.at(r, c) = rows_in[r][c];
    }
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols_in, int rows) {
    Mat m(rows, static_cast<int>(cols_in.size()));
    for (int c = 0; c < m.cols; ++c) {
        if (static_cast<int>(cols_in[c].size()) != rows)
            throw std::invalid_argument("column length mismatch");
        for (int r = 0; r < rows; ++r) m.at(r, c) = cols_in[c][r];
    }
    return m;
}

Vec Mat::row(int r) const {
    Vec v(cols);
    for (int c = 0; c < cols; ++c) v[c] = at(r, c);
    return v;
}

Vec Mat::col(int c) const {
    Vec v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

Vec Mat::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("apply: size mismatch");
    Vec y(rows);
    for (int r = 0; r < rows; ++r) {
        CRat acc;
        for (int c = 0; c < cols; ++c) acc += at(r, c) * x[c];
        y[r] = acc;
    }
    return y;
}

Mat Mat::transpose() const {
    Mat t(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
    return t;
}

Mat Mat::conj() const {
    Mat t(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) t.at(r, c) = at(r, c).conj();
    return t;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("mat_mul: dimension mismatch");
    Mat z(x.rows, y.cols);
    for (int r = 0; r < x.rows; ++r)
        for (int k = 0; k < x.cols; ++k) {
            const CRat& xv = x.at(r, k);
            if (xv.is_zero()) continue;
            for (int c = 0; c < y.cols; ++c) {
                const CRat& yv = y.at(k, c);
                if (!yv.is_zero()) z.at(r, c) += xv * yv;
            }
        }
    return z;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_add: dimension mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("mat_sub: dimension mismatch");
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

Mat mat_scale(const CRat& c, const Mat& x) {
    Mat z(x.rows, x.cols);
    for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = c * x.a[i];
    return z;
}

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.r = m;
    Mat& r = res.r;
    int lead = 0;
    for (int col = 0; col < r.cols && lead < r.rows; ++col) {
        int piv = -1;
        for (int i = lead; i < r.rows; ++i)
            if (!r.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != lead)
            for (int c = 0; c < r.cols; ++c) std::swap(r.at(piv, c), r.at(lead, c));
        CRat inv = CRat(1) / r.at(lead, col);
        for (int c = col; c < r.cols; ++c) r.at(lead, c) *= inv;
        for (int i = 0; i < r.rows; ++i) {
            if (i == lead) continue;
            CRat f = r.at(i, col);
            if (f.is_zero()) continue;
            for (int c = col; c < r.cols; ++c) r.at(i, c) -= f * r.at(lead, c);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = lead;
    return res;
}

Subspace Subspace::zero(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat(0, ambient);
    return s;
}

Subspace Subspace::full(int ambient) {
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat::identity(ambient);
    return s;
}

Subspace span_of(int ambient, const std::vector<Vec>& vectors) {
    Mat m = Mat::from_rows(vectors, ambient);
    RrefResult rr = rref(m);
    Subspace s;
    s.ambient = ambient;
    s.basis = Mat(rr.rank, ambient);
    for (int r = 0; r < rr.rank; ++r)
        for (int c = 0; c < ambient; ++c) s.basis.at(r, c) = rr.r.at(r, c);
    return s;
}

Subspace kernel(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    std::vector<Vec> gens;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols);
        v[f] = CRat(1);
        for (int r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.r.at(r, f);
        gens.push_back(std::move(v));
    }
    return span_of(m.cols, gens);
}

Subspace image(const Mat& m) {
    std::vector<Vec> cols;
    cols.reserve(m.cols);
    for (int c = 0; c < m.cols; ++c) cols.push_back(m.col(c));
    return span_of(m.rows, cols);
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw std::invalid_argument("intersect: ambient dimension mismatch");
    int d1 = s1.dim(), d2 = s2.dim();
    // x^T B1 = y^T B2 <=> [B1^T | -B2^T] (x;y) = 0
    Mat sys(s1.ambient, d1 + d2);
    for (int r = 0; r < s1.ambient; ++r) {
        for (int c = 0; c < d1; ++c) sys.at(r, c) = s1.basis.at(c, r);
        for (int c = 0; c < d2; ++c) sys.at(r, d1 + c) = -s2.basis.at(c, r);
    }
    Subspace k = kernel(sys);
    std::vector<Vec> gens;
    for (int r = 0; r < k.dim(); ++r) {
        Vec v(s1.ambient);
        for (int c = 0; c < d1; ++c) {
            const CRat& x = k.basis.at(r, c);
            if (x.is_zero()) continue;
            for (int j = 0; j < s1.ambient; ++j) v[j] += x * s1.basis.at(c, j);
        }
        gens.push_back(std::move(v));
    }
    return span_of(s1.ambient, gens);
}

Subspace subspace_sum(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw std::invalid_argument("sum: ambient dimension mismatch");
    std::vector<Vec> gens;
    for (int r = 0; r < s1.dim(); ++r) gens.push_back(s1.basis.row(r));
    for (int r = 0; r < s2.dim(); ++r) gens.push_back(s2.basis.row(r));
    return span_of(s1.ambient, gens);
}

bool contains(const Subspace& s, const Vec& v) {
    if (static_cast<int>(v.size()) != s.ambient) throw std::invalid_argument("contains: ambient dimension mismatch");
    Vec w = v;
    RrefResult rr = rref(s.basis); // already canonical, but recover pivots
    for (int r = 0; r < s.dim(); ++r) {
        const CRat& f = w[rr.pivots[r]];
        if (f.is_zero()) continue;
        CRat c = f;
        for (int j = 0; j < s.ambient; ++j) w[j] -= c * s.basis.at(r, j);
    }
    return vec_is_zero(w);
}

bool subspace_equal(const Subspace& s1, const Subspace& s2) {
    if (s1.ambient != s2.ambient) throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
    return s1.basis == s2.basis;
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: size mismatch");
    Mat aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    RrefResult rr = rref(aug);
    Vec x(m.cols);
    for (int r = 0; r < rr.rank; ++r) {
        if (rr.pivots[r] == m.cols) return std::nullopt; // inconsistent
        x[rr.pivots[r]] = rr.r.at(r, m.cols);
    }
    return x;
}

Mat inverse(const Mat& m) {
    if (m.rows != m.cols) throw std::domain_error("inverse: non-square matrix");
    int n = m.rows;
    Mat aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = CRat(1);
    }
    RrefResult rr = rref(aug);
    for (int r = 0; r < n; ++r)
        if (r >= rr.rank || rr.pivots[r] != r) throw std::domain_error("inverse: singular matrix");
    Mat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = rr.r.at(r, n + c);
    return inv;
}

static Rat real_entry(const Mat& s, int r, int c) {
    if (!s.at(r, c).is_real()) throw std::invalid_argument("expected a real matrix");
    return s.at(r, c).re;
}

static std::vector<std::vector<Rat>> check_real_symmetric(const Mat& s) {
    if (s.rows != s.cols) throw std::invalid_argument("expected a square matrix");
    int n = s.rows;
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a[r][c] = real_entry(s, r, c);
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c)
            if (a[r][c] != a[c][r]) throw std::invalid_argument("expected a symmetric matrix");
    return a;
}

bool is_positive_definite(const Mat& s) {
    auto a = check_real_symmetric(s);
    int n = s.rows;
    // Sylvester: positive definite iff every leading pivot of the symmetric
    // elimination is > 0; a zero or negative pivot ends the test.
    for (int k = 0; k < n; ++k) {
        const Rat piv = a[k][k];
        if (piv.sign() <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / piv;
            if (f.is_zero()) continue;
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return true;
}

SignatureResult signature(const Mat& s) {
    auto a = check_real_symmetric(s);
    int n = s.rows;
    SignatureResult sig;
    auto swap_rowcol = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto add_rowcol = [&](int dst, int src) { // congruence by E = I + e_dst e_src^T
        for (int c = 0; c < n; ++c) a[dst][c] += a[src][c];
        for (int r = 0; r < n; ++r) a[r][dst] += a[r][src];
    };
    for (int k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            int jd = -1, jo = -1;
            for (int j = k + 1; j < n; ++j) {
                if (jd < 0 && !a[j][j].is_zero()) jd = j;
                if (jo < 0 && !a[k][j].is_zero()) jo = j;
            }
            if (jd >= 0) swap_rowcol(k, jd);
            else if (jo >= 0) add_rowcol(k, jo); // a[k][k] becomes 2*a[k][jo] != 0
            else { sig.zero++; continue; }
        }
        const Rat piv = a[k][k];
        if (piv.sign() > 0) sig.pos++; else sig.neg++;
        // Row operations alone leave the trailing block equal to the symmetric
        // Schur complement; row/column k is then cleared.
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / piv;
            if (f.is_zero()) continue;
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (int j = k + 1; j < n; ++j) { a[k][j] = Rat(0); a[j][k] = Rat(0); }
    }
    return sig;
}

} // namespace gkforge
