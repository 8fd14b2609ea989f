#pragma once

#include "bireg/axial.hpp"

namespace bireg {

/// One application of the biregular Fueter map: odd m, a holomorphic
/// quadruple with the exact-substitution parity pattern, and a matching
/// homogeneous biregular polynomial.
struct FueterJob {
    int m;
    int k;
    int l;
    HolomorphicQuadruple quad;
    BiregularPoly P;
};

/// prod_{j=1}^n (2k + m - (2j - 1)); the empty product is 1. Equals
/// (2k+m-1)!! when n = k + (m-1)/2 and m is odd.
Integer double_factorial_product(int k, int m, int n);

void validate_job(const FueterJob& job);

/// Direct route: substitute the quadruple against P, then apply
/// Laplacian powers k+(m-1)/2 in x and l+(m-1)/2 in y.
CliffPoly fueter_map(const FueterJob& job);

/// Closed-form route: the operator coefficients (A, B, C, D)
/// substituted and scaled by both double-factorial constants.
CliffPoly fueter_map_closed_form(const FueterJob& job);

struct FueterResult {
    CliffPoly direct;
    CliffPoly closed_form;
    Integer constant;  // product of the two double-factorial constants
    std::pair<CliffPoly, CliffPoly> residuals;
    bool biregular;
};

/// Runs both routes, aborts on route disagreement (arithmetic bug), and
/// reports the biregularity residuals of the direct route.
FueterResult run_and_certify(const FueterJob& job);

/// Monogenic Fueter map recovered as the y-free degenerate case:
/// Delta_x^{k+(m-1)/2} applied to (a + w b) P_k with a + i b = (x0 + i r)^n.
CliffPoly classical_fueter(int m, int k, int n, const std::vector<int>& left_indices);

}  // namespace bireg
