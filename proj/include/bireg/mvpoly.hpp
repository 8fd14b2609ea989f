#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bireg/clifford.hpp"

namespace bireg {

enum class Block { X, Y };
enum class Side { Left, Right };

/// Coordinate variable x_index or y_index, 0 <= index <= m.
struct VarId {
    Block block;
    int index;
};

/// One of the four generalized Cauchy-Riemann operators. Left side
/// multiplies the units e_j from the left (d_x, d_xvec acting on the
/// left); right side appends them on the right (f d_y, f d_yvec).
/// include_scalar_direction adds the d/dx0 (resp. d/dy0) term.
struct OperatorSpec {
    Block block;
    Side side;
    bool include_scalar_direction;
};

/// Exponent vector of length 2(m+1), ordered x0..xm, y0..ym.
using Exponents = std::vector<int>;

/// Graded-lexicographic term order: total degree first, then
/// lexicographic on the exponent vector. Canonical order for
/// serialization and deterministic evaluation.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial in x0..xm, y0..ym with Multivector
/// coefficients. Variables are scalar-valued and commute with everything;
/// coefficient non-commutativity is the only non-commutativity.
class CliffPoly {
public:
    explicit CliffPoly(int m);

    static CliffPoly constant(int m, const Multivector& c);
    static CliffPoly constant(int m, const Rational& c);
    static CliffPoly variable(int m, VarId v);
    /// The vector variable of one block: sum_j v_j e_j.
    static CliffPoly vector_variable(int m, Block block);
    /// The paravector v0 + sum_j v_j e_j.
    static CliffPoly paravector(int m, Block block);

    int generators() const { return m_; }
    int num_vars() const { return 2 * (m_ + 1); }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Multivector, GradedLexLess>& terms() const { return terms_; }

    CliffPoly operator+(const CliffPoly& rhs) const;
    CliffPoly operator-(const CliffPoly& rhs) const;
    CliffPoly operator-() const;
    CliffPoly operator*(const CliffPoly& rhs) const;
    CliffPoly operator*(const Rational& s) const;

    /// Coefficient multiplication from one side, preserving order:
    /// left: a * p, right: p * a.
    CliffPoly mul_multivector(const Multivector& a, Side side) const;

    bool operator==(const CliffPoly& rhs) const = default;

    std::string str() const;

    void accumulate(const Exponents& exps, const Multivector& coef);

private:
    int m_;
    std::map<Exponents, Multivector, GradedLexLess> terms_;
};

inline CliffPoly operator*(const Rational& s, const CliffPoly& p) { return p * s; }

int var_position(const VarId& v, int m);

/// Exact coordinate partial derivative.
CliffPoly partial(const CliffPoly& p, VarId v);

/// Applies a generalized Cauchy-Riemann operator.
/// Left:  sum_j e_j d_{v_j} p (+ d_{v_0} p), Right: sum_j (d_{v_j} p) e_j (+ d_{v_0} p).
CliffPoly apply_cr(const CliffPoly& p, const OperatorSpec& spec);

/// The conjugate operator: d_{v_0} -+ sum e_j d_{v_j} with the vector part
/// negated relative to apply_cr.
CliffPoly apply_cr_conjugate(const CliffPoly& p, const OperatorSpec& spec);

/// sum_{j=0}^m d^2/dv_j^2.
CliffPoly laplacian(const CliffPoly& p, Block block);
CliffPoly laplacian_power(const CliffPoly& p, Block block, int n);

/// (d_x p, p d_y); p is biregular iff both are zero.
std::pair<CliffPoly, CliffPoly> biregular_residuals(const CliffPoly& p);

}  // namespace bireg
