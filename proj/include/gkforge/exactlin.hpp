#pragma once

#include "gkforge/scalar.hpp"

#include <optional>
#include <vector>

namespace gkforge {

using Vec = std::vector<CRat>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const CRat& c, const Vec& a);
Vec vec_conj(const Vec& a);
bool vec_is_zero(const Vec& a);

// Dense matrix over the Gaussian rationals.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<CRat> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static Mat identity(int n);
    static Mat from_rows(const std::vector<Vec>& rows_in, int cols);
    static Mat from_cols(const std::vector<Vec>& cols_in, int rows);

    CRat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const CRat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Vec row(int r) const;
    Vec col(int c) const;
    Vec apply(const Vec& x) const; // M x
    Mat transpose() const;
    Mat conj() const;
    bool is_zero() const;

    friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat mat_scale(const CRat& c, const Mat& x);

struct RrefResult {
    Mat r;
    int rank = 0;
    std::vector<int> pivots; // pivot column per nonzero row
};

// Unique reduced row-echelon form over Q(i).
RrefResult rref(const Mat& m);

// Subspace of a fixed ambient coordinate space, held as its canonical
// reduced-echelon basis (rows). Equality of subspaces is equality of bases.
struct Subspace {
    int ambient = 0;
    Mat basis; // rref rows, all nonzero

    int dim() const { return basis.rows; }
    static Subspace zero(int ambient);
    static Subspace full(int ambient);
};

Subspace span_of(int ambient, const std::vector<Vec>& vectors);
Subspace kernel(const Mat& m);            // {v : Mv = 0}
Subspace image(const Mat& m);             // column span
Subspace intersect(const Subspace& s1, const Subspace& s2); // throws on ambient mismatch
Subspace subspace_sum(const Subspace& s1, const Subspace& s2);
bool contains(const Subspace& s, const Vec& v);
bool subspace_equal(const Subspace& s1, const Subspace& s2);

// Canonical solution of M x = b: reduced echelon elimination, free variables
// set to zero. nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

Mat inverse(const Mat& m); // throws std::domain_error when singular

// Exact Sylvester test via symmetric elimination: positive definite iff every
// pivot stays positive. Input must be square, symmetric, with real entries.
bool is_positive_definite(const Mat& s);

struct SignatureResult {
    int pos = 0, neg = 0, zero = 0;
};

// Signature of a real symmetric matrix by exact congruence diagonalization.
SignatureResult signature(const Mat& s);

} // namespace gkforge
