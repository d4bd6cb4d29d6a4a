#pragma once

// Independent test oracles. These deliberately avoid the library's elimination
// and wedge code paths: the eliminator is a plain textbook forward pass, the
// wedge oracle counts permutation inversions on explicit index lists.

#include "gkforge/form.hpp"
#include "gkforge/liealg.hpp"
#include "gkforge/prng.hpp"

#include <algorithm>
#include <vector>

namespace oracles {

using gkforge::CRat;
using gkforge::Form;
using gkforge::Rat;
using gkforge::Vec;

// Textbook forward elimination, first nonzero pivot, no back substitution.
inline int naive_rank(std::vector<Vec> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows.size(); ++col) {
        size_t piv = row;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[row]);
        for (size_t r = row + 1; r < rows.size(); ++r) {
            if (rows[r][col].is_zero()) continue;
            CRat f = rows[r][col] / rows[row][col];
            for (size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Sign of sorting the concatenation of two strictly increasing index lists;
// 0 on a repeated index.
inline int concat_sign(std::vector<int> idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    return sign;
}

inline std::vector<int> mask_indices(std::uint32_t mask) {
    std::vector<int> idx;
    for (int b = 0; b < 32; ++b)
        if (mask & (1u << b)) idx.push_back(b);
    return idx;
}

// Wedge by explicit permutation-sign expansion.
inline Form perm_sign_wedge(const Form& a, const Form& b) {
    Form out(a.n);
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::vector<int> idx = mask_indices(ma);
            for (int i : mask_indices(mb)) idx.push_back(i);
            int s = concat_sign(idx);
            if (s == 0) continue;
            CRat coeff = ca * cb;
            if (s < 0) coeff = -coeff;
            out += Form::monomial(a.n, ma | mb, coeff);
        }
    return out;
}

inline Rat random_rat(gkforge::SplitMix64& rng, long range = 4) {
    long num = rng.small(range);
    long den = 1 + static_cast<long>(rng.below(3));
    return Rat(num, den);
}

inline CRat random_crat(gkforge::SplitMix64& rng, long range = 4) {
    return CRat(random_rat(rng, range), random_rat(rng, range));
}

inline Vec random_vec(gkforge::SplitMix64& rng, int len, long range = 4) {
    Vec v(len);
    for (auto& x : v) x = random_crat(rng, range);
    return v;
}

inline Form random_form(gkforge::SplitMix64& rng, int n, int degree, long range = 2) {
    Form f(n);
    for (std::uint32_t mask : gkforge::degree_masks(n, degree))
        f += Form::monomial(n, mask, random_crat(rng, range));
    return f;
}

// Random antisymmetric structure constants (usually violating Jacobi).
inline std::vector<gkforge::BracketTerm> random_structure_constants(gkforge::SplitMix64& rng, int dim) {
    std::vector<gkforge::BracketTerm> terms;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                if (rng.below(3) == 0) continue;
                gkforge::BracketTerm t;
                t.i = i;
                t.j = j;
                t.k = k;
                t.c = random_rat(rng, 2);
                terms.push_back(std::move(t));
            }
    return terms;
}

} // namespace oracles
