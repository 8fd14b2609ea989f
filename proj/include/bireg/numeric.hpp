#pragma once

#include <functional>
#include <vector>

#include "bireg/axial.hpp"

namespace bireg {

/// Floating-point sample point (x0..xm, y0..ym).
struct EvalPoint {
    std::vector<double> x;  // length m+1
    std::vector<double> y;  // length m+1

    double r() const;
    double rho() const;
};

struct FdConfig {
    double step = 1e-3;
    int order = 4;  // 2 or 4
    double tol = 1e-6;
};

/// Blade -> double evaluation of a CliffPoly; terms are summed in
/// graded-lex order so results are deterministic.
std::map<BladeMask, double> eval_poly(const CliffPoly& p, const EvalPoint& pt);

using PointFunction = std::function<std::map<BladeMask, double>(const EvalPoint&)>;

PointFunction poly_function(const CliffPoly& p);

/// Central-difference approximation of a generalized Cauchy-Riemann
/// operator applied to a black-box function; returns the max-norm over
/// blade components of the result.
double fd_cr_residual(const PointFunction& f, int m, const OperatorSpec& spec,
                      const EvalPoint& pt, const FdConfig& cfg);

/// Numerical residual of Delta_xvec w = -((m-1)/r^2) w at pt (max-norm
/// over the m components of w = xvec/r).
double fd_omega_laplacian_residual(int m, const EvalPoint& pt, const FdConfig& cfg);

/// Numerical residual of the n = 1 closed-form Laplacian identity
///   Delta_x(h P) = (2k+m-1) D_r(1){h} P
/// for axial h that need not have substitutable parity (the exact layer
/// refuses those). Requires r, rho bounded away from zero.
double fd_lemma2_plain_residual(const AxialFunction& h, int k, int l, int m,
                                const BiregularPoly& P, const EvalPoint& pt, const FdConfig& cfg);

}  // namespace bireg
