#pragma once

#include "gkforge/exactlin.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gkforge {

// Sparse element of the exterior algebra on n degree-1 generators over Q(i).
// A basis monomial is a generator subset encoded as a bitmask; coefficients
// are stored without zeros, so equality of maps is equality of elements.
// The ambient coordinate order is increasing mask value.
struct Form {
    int n = 0;
    std::map<std::uint32_t, CRat> terms;

    Form() = default;
    explicit Form(int n_gens) : n(n_gens) {}

    static Form zero(int n) { return Form(n); }
    static Form unit(int n); // the scalar 1
    static Form gen(int n, int i);
    static Form monomial(int n, std::uint32_t mask, CRat coeff);

    bool is_zero() const { return terms.empty(); }
    // Degree when homogeneous (zero counts as every degree); -1 when mixed.
    int homogeneous_degree() const;
    CRat coeff(std::uint32_t mask) const;
    void set(std::uint32_t mask, CRat c); // erases on zero

    Form operator-() const;
    Form& operator+=(const Form& o);
    Form& operator-=(const Form& o);
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend bool operator==(const Form& a, const Form& b) { return a.n == b.n && a.terms == b.terms; }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

    Form conj() const;
};

Form scale(const CRat& c, const Form& f);
Form wedge(const Form& a, const Form& b);

// Interior product i_X with X given by its n complex coordinates.
Form contract(const Form& f, const Vec& x);

Form degree_part(const Form& f, int k);

// Sign of reordering the concatenation (sorted a, sorted b) into sorted order;
// 0 when the masks overlap.
int merge_sign(std::uint32_t a, std::uint32_t b);

// Ambient coordinates of the whole exterior algebra (length 2^n, mask order).
Vec form_to_coords(const Form& f);
Form form_from_coords(int n, const Vec& v);

// Masks of the degree-k monomials in increasing order.
std::vector<std::uint32_t> degree_masks(int n, int k);
Vec form_to_degree_coords(const Form& f, int k); // requires f homogeneous of degree k (or zero)
Form form_from_degree_coords(int n, int k, const Vec& v);

std::string form_to_string(const Form& f, const std::string& gen_prefix = "e");

} // namespace gkforge
