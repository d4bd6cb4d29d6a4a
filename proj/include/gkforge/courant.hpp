#pragma once

#include "gkforge/liealg.hpp"

namespace gkforge {

// Elements of the double g (+) g* are complex coordinate vectors of length 2m
// in the ordered basis (e_1..e_m, e^1..e^m): vector part first, covector part
// second.

// Natural split pairing <X+xi, Y+eta> = (eta(X) + xi(Y)) / 2.
CRat pairing(const Vec& v, const Vec& w);
Mat pairing_gram(int m); // of the 2m basis doubles

struct NonClosedTwist : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Closed real 3-form twisting the Courant bracket and the differential.
struct Twist {
    Form h; // validated: real coefficients, pure degree 3 (or zero), dh = 0
};

Twist make_twist(const LieAlgebra& g, Form h); // throws NonClosedTwist / invalid_argument
Twist zero_twist(const LieAlgebra& g);

// Invariant-level twisted Courant bracket
//   [[X+xi, Y+eta]] = [X,Y] + L_X eta - L_Y xi + i_Y i_X H
// with (L_X eta)(Z) = -eta([X,Z]); the exact term of the manifold formula
// vanishes because eta(X) is a constant.
Vec courant_bracket(const LieAlgebra& g, const Twist& t, const Vec& v, const Vec& w);

struct BracketJacobiReport {
    bool ok = true;
    int a = -1, b = -1, c = -1; // first failing basis triple of the double
};

BracketJacobiReport check_bracket_jacobi(const LieAlgebra& g, const Twist& t);

// d_H = d + H ^ . on the complexified forms; output mixes degrees +1 and +3.
Form d_h(const LieAlgebra& g, const Twist& t, const Form& f);
Mat d_h_matrix(const LieAlgebra& g, const Twist& t); // 2^m x 2^m in mask coordinates

// Clifford action (X + xi) . rho = i_X rho + xi ^ rho.
Form clifford_act(const Vec& v, const Form& rho);
Mat clifford_matrix(int m, const Vec& v);

Vec basis_double(int m, int a); // a < m: e_a; a >= m: e^{a-m}

} // namespace gkforge
