#pragma once

#include <vector>

#include "bireg/mvpoly.hpp"

namespace bireg {

/// Degree-1 monogenic polynomial, certified at construction.
/// Left:  z_j = x_j + e_1 e_j x_1  (d_xvec z_j = 0),
/// Right: w_j = y_j + y_1 e_j e_1  (w_j d_yvec = 0), for 2 <= j <= m.
struct FueterVariable {
    Side side;
    int index;
    CliffPoly poly;
};

FueterVariable fueter_variable(Side side, int j, int m);

/// (1/k!) sum over all orderings of the product of the Fueter variables
/// named by `indices`. Homogeneous of degree k = |indices| and certified
/// left- (Left) or right- (Right) monogenic. Empty list gives 1.
CliffPoly symmetrized_product(const std::vector<int>& indices, Side side, int m);

/// Homogeneous polynomial P_{k,l}, independent of x0 and y0, of degree k
/// in the x-vector variables and l in the y-vector variables, with
/// d_xvec P = P d_yvec = 0 certified at construction.
struct BiregularPoly {
    CliffPoly poly;
    int m;
    int k;
    int l;
};

/// P_k(xvec) * Q_l(yvec) from the symmetrized-product family.
BiregularPoly biregular_poly(const std::vector<int>& left_indices,
                             const std::vector<int>& right_indices, int m);

}  // namespace bireg
