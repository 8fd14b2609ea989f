#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>

#include "bireg/generators.hpp"
#include "bireg/rational.hpp"

namespace bireg {

/// The four axial symbols, in exponent-tuple order.
enum class AxialVar { X0 = 0, R = 1, Y0 = 2, Rho = 3 };

/// Exponents (a, b, c, d) of x0^a r^b y0^c rho^d. All four may be
/// negative (Laurent); substitution later rejects what it cannot use.
using AxialExps = std::array<int, 4>;

/// Laurent polynomial in (x0, r, y0, rho) with rational coefficients.
/// Carrier of the axial calculus; all operations are exact.
class AxialFunction {
public:
    AxialFunction() = default;

    static AxialFunction constant(const Rational& c);
    static AxialFunction monomial(const AxialExps& exps, const Rational& c);
    static AxialFunction variable(AxialVar v);

    bool is_zero() const { return terms_.empty(); }
    const std::map<AxialExps, Rational>& terms() const { return terms_; }

    AxialFunction operator+(const AxialFunction& rhs) const;
    AxialFunction operator-(const AxialFunction& rhs) const;
    AxialFunction operator-() const;
    AxialFunction operator*(const AxialFunction& rhs) const;
    AxialFunction operator*(const Rational& s) const;

    bool operator==(const AxialFunction& rhs) const = default;

    std::string str() const;

    double eval(double x0, double r, double y0, double rho) const;

    void accumulate(const AxialExps& exps, const Rational& coef);

private:
    std::map<AxialExps, Rational> terms_;
};

inline AxialFunction operator*(const Rational& s, const AxialFunction& f) { return f * s; }

AxialFunction axial_partial(const AxialFunction& f, AxialVar v);

/// Division by the symbol (exponent shift into the Laurent range).
AxialFunction axial_div(const AxialFunction& f, AxialVar v);

/// D_t(n){f} = ((1/t) d/dt)^n f.
AxialFunction d_lower(const AxialFunction& f, AxialVar v, int n);

/// D^t(n){f} = d/dt (D^t(n-1){f} / t), D^t(0){f} = f.
AxialFunction d_upper(const AxialFunction& f, AxialVar v, int n);

/// Left minus right side of one of the five operator identities relating
/// D_t and D^t; zero for every input.
enum class Lemma1Identity { I, II, III, IV, V };
AxialFunction lemma1_residual(Lemma1Identity which, const AxialFunction& f, AxialVar v, int n);

enum class Parity { Even, Odd, Mixed };

struct ParitySignature {
    Parity in_r;
    Parity in_rho;
};

ParitySignature parity_signature(const AxialFunction& f);

/// True if every term's r-exponent (resp. rho-exponent) has the wanted
/// parity. The zero function is compatible with anything.
bool parity_compatible(const AxialFunction& f, Parity want_r, Parity want_rho);

/// (d2/dx0^2 + d2/dr^2, d2/dy0^2 + d2/drho^2) applied to h; h is
/// admissible for the closed-form Laplacian formulas iff both vanish.
std::pair<AxialFunction, AxialFunction> harmonic_pair_residuals(const AxialFunction& h);

/// Quadruple (u1, v1, u2, v2) with u1 + i v1, u2 + i v2 holomorphic in
/// x0 + i r and u1 + i u2, v1 + i v2 holomorphic in y0 + i rho.
/// The eight Cauchy-Riemann equations are certified at construction;
/// parity_ok records whether the standard substitution parity pattern
/// (EE, OE, EO, OO) holds.
struct HolomorphicQuadruple {
    AxialFunction u1, v1, u2, v2;
    bool parity_ok = false;
};

/// The eight CR residuals of a candidate quadruple, in the order
/// (u1,v1), (u2,v2) in x0+ir then (u1,u2), (v1,v2) in y0+irho.
std::array<AxialFunction, 8> quadruple_cr_residuals(const AxialFunction& u1, const AxialFunction& v1,
                                                    const AxialFunction& u2, const AxialFunction& v2);

/// Real and imaginary parts of (re + i im)^n; building block for
/// separable holomorphic data and harmonic test families.
std::pair<AxialFunction, AxialFunction> axial_complex_power(AxialVar re, AxialVar im, int n);

/// From (x0 + i r)^n = a + i b and (y0 + i rho)^p = c + i d, the quadruple
/// (ac, bc, ad, bd). Always satisfies CR and the parity pattern.
HolomorphicQuadruple quadruple_from_separable(int n, int p);

/// The (u, v, v, -u) quadruple from a holomorphic function of two complex
/// variables. CR violation is an error; parity violation only clears
/// parity_ok (usable numerically, not for exact substitution).
HolomorphicQuadruple quadruple_from_two_variable(const AxialFunction& u, const AxialFunction& v);

/// Axial coefficients of F = A P + B w P + C P n + D w P n.
struct AxialCoefficients {
    AxialFunction A, B, C, D;
};

/// The eight Vekua-system expressions; all zero iff the system holds.
std::array<AxialFunction, 8> vekua_residuals(const AxialCoefficients& f, int k, int l, int m);

/// A = D_r(k+(m-1)/2) D_rho(l+(m-1)/2){u1}, B likewise with D^r of v1,
/// C with D^rho of u2, D with both upper operators of v2. Requires m odd.
AxialCoefficients closed_form_abcd(const HolomorphicQuadruple& q, int k, int l, int m);

/// Exact polynomial substitution of the axial form
///   A P + B w P + C P n + D w P n,   w = xvec/r, n = yvec/rho,
/// replacing even powers of r, rho by sums of squares and absorbing one
/// r (rho) into xvec (yvec). Requires the parity pattern (EE, OE, EO, OO)
/// and non-negative Laurent exponents after reduction.
CliffPoly substitute(const AxialCoefficients& f, const BiregularPoly& P);
CliffPoly substitute(const HolomorphicQuadruple& q, const BiregularPoly& P);

/// Which closed-form Laplacian identity to instantiate.
enum class Lemma2Form { DxPlain, DxOmega, DyPlain, DyNu };

/// Both sides of the closed-form Laplacian-power identity for a harmonic
/// axial function h: left is the mvpoly Laplacian power of the
/// substituted polynomial, right is the operator closed form (with its
/// product constant) substituted. Equality certifies the instance.
std::pair<CliffPoly, CliffPoly> lemma2_check(const AxialFunction& h, int n, int k, int l, int m,
                                             const BiregularPoly& P, Lemma2Form form);

}  // namespace bireg
