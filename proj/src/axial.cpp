#include "bireg/axial.hpp"

#include <cmath>
#include <sstream>

#include "bireg/error.hpp"

namespace bireg {

AxialFunction AxialFunction::constant(const Rational& c)
{
    return monomial({0, 0, 0, 0}, c);
}

AxialFunction AxialFunction::monomial(const AxialExps& exps, const Rational& c)
{
    if (exps[0] < 0 || exps[2] < 0)
        throw precondition_error("x0 and y0 exponents must be non-negative");
    AxialFunction f;
    f.accumulate(exps, c);
    return f;
}

AxialFunction AxialFunction::variable(AxialVar v)
{
    AxialExps e{0, 0, 0, 0};
    e[static_cast<int>(v)] = 1;
    return monomial(e, 1);
}

void AxialFunction::accumulate(const AxialExps& exps, const Rational& coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

AxialFunction AxialFunction::operator+(const AxialFunction& rhs) const
{
    AxialFunction out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.accumulate(e, c);
    return out;
}

AxialFunction AxialFunction::operator-(const AxialFunction& rhs) const
{
    AxialFunction out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.accumulate(e, -c);
    return out;
}

AxialFunction AxialFunction::operator-() const
{
    AxialFunction out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

AxialFunction AxialFunction::operator*(const AxialFunction& rhs) const
{
    AxialFunction out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_)
            out.accumulate({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
    return out;
}

AxialFunction AxialFunction::operator*(const Rational& s) const
{
    AxialFunction out;
    if (s == 0)
        return out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, c * s);
    return out;
}

std::string AxialFunction::str() const
{
    if (terms_.empty())
        return "0";
    static const char* names[4] = {"x0", "r", "y0", "rho"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << rational_to_string(c);
        for (int i = 0; i < 4; ++i)
            if (e[i] != 0) {
                os << "*" << names[i];
                if (e[i] != 1)
                    os << "^" << e[i];
            }
    }
    return os.str();
}

double AxialFunction::eval(double x0, double r, double y0, double rho) const
{
    double vals[4] = {x0, r, y0, rho};
    double sum = 0.0;
    for (const auto& [e, c] : terms_) {
        double t = to_double(c);
        for (int i = 0; i < 4; ++i)
            if (e[i] != 0)
                t *= std::pow(vals[i], e[i]);
        sum += t;
    }
    return sum;
}

AxialFunction axial_partial(const AxialFunction& f, AxialVar v)
{
    int pos = static_cast<int>(v);
    AxialFunction out;
    for (const auto& [e, c] : f.terms()) {
        if (e[pos] == 0)
            continue;
        AxialExps d = e;
        d[pos] -= 1;
        out.accumulate(d, c * Rational(e[pos]));
    }
    return out;
}

AxialFunction axial_div(const AxialFunction& f, AxialVar v)
{
    int pos = static_cast<int>(v);
    AxialFunction out;
    for (const auto& [e, c] : f.terms()) {
        AxialExps d = e;
        d[pos] -= 1;
        out.accumulate(d, c);
    }
    return out;
}

AxialFunction d_lower(const AxialFunction& f, AxialVar v, int n)
{
    if (n < 0)
        throw precondition_error("d_lower requires n >= 0");
    AxialFunction g = f;
    for (int i = 0; i < n; ++i)
        g = axial_div(axial_partial(g, v), v);
    return g;
}

AxialFunction d_upper(const AxialFunction& f, AxialVar v, int n)
{
    if (n < 0)
        throw precondition_error("d_upper requires n >= 0");
    AxialFunction g = f;
    for (int i = 0; i < n; ++i)
        g = axial_partial(axial_div(g, v), v);
    return g;
}

AxialFunction lemma1_residual(Lemma1Identity which, const AxialFunction& f, AxialVar v, int n)
{
    if (n < 1)
        throw precondition_error("lemma1_residual requires n >= 1");
    auto d = [&](const AxialFunction& g) { return axial_partial(g, v); };
    switch (which) {
    case Lemma1Identity::I:
        return d(d(d_lower(f, v, n))) - (d_lower(d(d(f)), v, n) - Rational(2 * n) * d_lower(f, v, n + 1));
    case Lemma1Identity::II:
        return d(d_lower(axial_div(f, v), v, n - 1)) - d_upper(f, v, n);
    case Lemma1Identity::III:
        return d_upper(d(f), v, n) - d(d_lower(f, v, n));
    case Lemma1Identity::IV:
        return d_lower(d(f), v, n) - d(d_upper(f, v, n)) -
               Rational(2 * n) * axial_div(d_upper(f, v, n), v);
    case Lemma1Identity::V:
        return d(d(d_upper(f, v, n))) - (d_upper(d(d(f)), v, n) - Rational(2 * n) * d_upper(f, v, n + 1));
    }
    throw precondition_error("unknown identity");
}

ParitySignature parity_signature(const AxialFunction& f)
{
    bool even_r = false, odd_r = false, even_rho = false, odd_rho = false;
    for (const auto& [e, c] : f.terms()) {
        ((e[1] % 2 + 2) % 2 == 0 ? even_r : odd_r) = true;
        ((e[3] % 2 + 2) % 2 == 0 ? even_rho : odd_rho) = true;
    }
    auto classify = [](bool even, bool odd) {
        if (even && odd)
            return Parity::Mixed;
        return odd ? Parity::Odd : Parity::Even;  // zero function reads as Even
    };
    return {classify(even_r, odd_r), classify(even_rho, odd_rho)};
}

bool parity_compatible(const AxialFunction& f, Parity want_r, Parity want_rho)
{
    for (const auto& [e, c] : f.terms()) {
        bool r_even = ((e[1] % 2 + 2) % 2) == 0;
        bool rho_even = ((e[3] % 2 + 2) % 2) == 0;
        if ((want_r == Parity::Even) != r_even || (want_rho == Parity::Even) != rho_even)
            return false;
    }
    return true;
}

std::pair<AxialFunction, AxialFunction> harmonic_pair_residuals(const AxialFunction& h)
{
    auto d2 = [&](AxialVar v) { return axial_partial(axial_partial(h, v), v); };
    return {d2(AxialVar::X0) + d2(AxialVar::R), d2(AxialVar::Y0) + d2(AxialVar::Rho)};
}

std::array<AxialFunction, 8> quadruple_cr_residuals(const AxialFunction& u1, const AxialFunction& v1,
                                                    const AxialFunction& u2, const AxialFunction& v2)
{
    auto d = [](const AxialFunction& f, AxialVar v) { return axial_partial(f, v); };
    using V = AxialVar;
    return {
        d(u1, V::X0) - d(v1, V::R),  d(u1, V::R) + d(v1, V::X0),
        d(u2, V::X0) - d(v2, V::R),  d(u2, V::R) + d(v2, V::X0),
        d(u1, V::Y0) - d(u2, V::Rho), d(u1, V::Rho) + d(u2, V::Y0),
        d(v1, V::Y0) - d(v2, V::Rho), d(v1, V::Rho) + d(v2, V::Y0),
    };
}

namespace {

bool standard_parity_pattern(const AxialFunction& u1, const AxialFunction& v1,
                             const AxialFunction& u2, const AxialFunction& v2)
{
    return parity_compatible(u1, Parity::Even, Parity::Even) &&
           parity_compatible(v1, Parity::Odd, Parity::Even) &&
           parity_compatible(u2, Parity::Even, Parity::Odd) &&
           parity_compatible(v2, Parity::Odd, Parity::Odd);
}

}  // namespace

std::pair<AxialFunction, AxialFunction> axial_complex_power(AxialVar re, AxialVar im, int n)
{
    AxialFunction a = AxialFunction::constant(1);
    AxialFunction b;
    AxialFunction t0 = AxialFunction::variable(re);
    AxialFunction t = AxialFunction::variable(im);
    for (int i = 0; i < n; ++i) {
        AxialFunction na = a * t0 - b * t;
        AxialFunction nb = a * t + b * t0;
        a = na;
        b = nb;
    }
    return {a, b};
}

HolomorphicQuadruple quadruple_from_separable(int n, int p)
{
    if (n < 0 || p < 0)
        throw precondition_error("separable quadruple requires n, p >= 0");
    auto [a, b] = axial_complex_power(AxialVar::X0, AxialVar::R, n);
    auto [c, d] = axial_complex_power(AxialVar::Y0, AxialVar::Rho, p);
    HolomorphicQuadruple q{a * c, b * c, a * d, b * d, true};
    for (const auto& res : quadruple_cr_residuals(q.u1, q.v1, q.u2, q.v2))
        if (!res.is_zero())
            throw math_error("separable quadruple failed its CR certificate");
    if (!standard_parity_pattern(q.u1, q.v1, q.u2, q.v2))
        throw math_error("separable quadruple failed its parity certificate");
    return q;
}

HolomorphicQuadruple quadruple_from_two_variable(const AxialFunction& u, const AxialFunction& v)
{
    HolomorphicQuadruple q{u, v, v, -u, false};
    for (const auto& res : quadruple_cr_residuals(q.u1, q.v1, q.u2, q.v2))
        if (!res.is_zero())
            throw precondition_error("(u, v) does not satisfy the two-variable Cauchy-Riemann systems");
    q.parity_ok = standard_parity_pattern(q.u1, q.v1, q.u2, q.v2);
    return q;
}

std::array<AxialFunction, 8> vekua_residuals(const AxialCoefficients& f, int k, int l, int m)
{
    const auto& [A, B, C, D] = f;
    Rational cx(2 * k + m - 1);
    Rational cy(2 * l + m - 1);
    auto d = [](const AxialFunction& g, AxialVar v) { return axial_partial(g, v); };
    auto over = [](const AxialFunction& g, AxialVar v) { return axial_div(g, v); };
    using V = AxialVar;
    return {
        d(A, V::X0) - d(B, V::R) - cx * over(B, V::R),
        d(B, V::X0) + d(A, V::R),
        d(C, V::X0) - d(D, V::R) - cx * over(D, V::R),
        d(D, V::X0) + d(C, V::R),
        d(A, V::Y0) - d(C, V::Rho) - cy * over(C, V::Rho),
        d(C, V::Y0) + d(A, V::Rho),
        d(B, V::Y0) - d(D, V::Rho) - cy * over(D, V::Rho),
        d(D, V::Y0) + d(B, V::Rho),
    };
}

AxialCoefficients closed_form_abcd(const HolomorphicQuadruple& q, int k, int l, int m)
{
    if (m < 1 || m % 2 == 0)
        throw precondition_error("closed-form operators require odd m");
    if (k < 0 || l < 0)
        throw precondition_error("closed_form_abcd requires k, l >= 0");
    int nx = k + (m - 1) / 2;
    int ny = l + (m - 1) / 2;
    return {
        d_lower(d_lower(q.u1, AxialVar::Rho, ny), AxialVar::R, nx),
        d_lower(d_upper(q.v1, AxialVar::R, nx), AxialVar::Rho, ny),
        d_upper(d_lower(q.u2, AxialVar::R, nx), AxialVar::Rho, ny),
        d_upper(d_upper(q.v2, AxialVar::R, nx), AxialVar::Rho, ny),
    };
}

namespace {

// Substitutes r^2 -> sum x_j^2, rho^2 -> sum y_j^2 into an axial function
// whose r- and rho-exponents are all even and non-negative. Scalar result.
CliffPoly axial_to_scalar_poly(const AxialFunction& f, int m, const char* slot)
{
    CliffPoly out(m);
    CliffPoly sumx2(m), sumy2(m);
    for (int j = 1; j <= m; ++j) {
        CliffPoly xj = CliffPoly::variable(m, {Block::X, j});
        CliffPoly yj = CliffPoly::variable(m, {Block::Y, j});
        sumx2 = sumx2 + xj * xj;
        sumy2 = sumy2 + yj * yj;
    }
    for (const auto& [e, c] : f.terms()) {
        if (e[1] < 0 || e[3] < 0)
            throw precondition_error(std::string("substitution of slot ") + slot +
                                     " is not polynomial (negative Laurent exponent)");
        if (e[1] % 2 != 0 || e[3] % 2 != 0)
            throw precondition_error(std::string("parity violation in slot ") + slot);
        CliffPoly term = CliffPoly::constant(m, c);
        if (e[0] > 0) {
            CliffPoly x0 = CliffPoly::variable(m, {Block::X, 0});
            for (int i = 0; i < e[0]; ++i)
                term = term * x0;
        }
        if (e[2] > 0) {
            CliffPoly y0 = CliffPoly::variable(m, {Block::Y, 0});
            for (int i = 0; i < e[2]; ++i)
                term = term * y0;
        }
        for (int i = 0; i < e[1] / 2; ++i)
            term = term * sumx2;
        for (int i = 0; i < e[3] / 2; ++i)
            term = term * sumy2;
        out = out + term;
    }
    return out;
}

}  // namespace

CliffPoly substitute(const AxialCoefficients& f, const BiregularPoly& P)
{
    int m = P.m;
    if (!parity_compatible(f.A, Parity::Even, Parity::Even) ||
        !parity_compatible(f.B, Parity::Odd, Parity::Even) ||
        !parity_compatible(f.C, Parity::Even, Parity::Odd) ||
        !parity_compatible(f.D, Parity::Odd, Parity::Odd))
        throw precondition_error("axial coefficients violate the (EE, OE, EO, OO) parity pattern");

    CliffPoly sa = axial_to_scalar_poly(f.A, m, "A");
    CliffPoly sb = axial_to_scalar_poly(axial_div(f.B, AxialVar::R), m, "B");
    CliffPoly sc = axial_to_scalar_poly(axial_div(f.C, AxialVar::Rho), m, "C");
    CliffPoly sd = axial_to_scalar_poly(axial_div(axial_div(f.D, AxialVar::R), AxialVar::Rho), m, "D");

    CliffPoly xv = CliffPoly::vector_variable(m, Block::X);
    CliffPoly yv = CliffPoly::vector_variable(m, Block::Y);

    // B w = xvec (B/r) etc.; xvec factors stay left of P, yvec right.
    return sa * P.poly + sb * (xv * P.poly) + sc * (P.poly * yv) + sd * (xv * P.poly * yv);
}

CliffPoly substitute(const HolomorphicQuadruple& q, const BiregularPoly& P)
{
    return substitute(AxialCoefficients{q.u1, q.v1, q.u2, q.v2}, P);
}

namespace {

Rational laplacian_constant(int kk, int m, int n)
{
    Rational c(1);
    for (int j = 1; j <= n; ++j)
        c *= Rational(2 * kk + m - (2 * j - 1));
    return c;
}

}  // namespace

std::pair<CliffPoly, CliffPoly> lemma2_check(const AxialFunction& h, int n, int k, int l, int m,
                                             const BiregularPoly& P, Lemma2Form form)
{
    auto [hr1, hr2] = harmonic_pair_residuals(h);
    if (!hr1.is_zero() || !hr2.is_zero())
        throw precondition_error("h is not harmonic in both (x0, r) and (y0, rho)");
    if (n < 0)
        throw precondition_error("lemma2_check requires n >= 0");

    AxialCoefficients lhs_slots, rhs_slots;
    Block block;
    Rational c;
    switch (form) {
    case Lemma2Form::DxPlain:
        lhs_slots.A = h;
        rhs_slots.A = d_lower(h, AxialVar::R, n);
        block = Block::X;
        c = laplacian_constant(k, m, n);
        break;
    case Lemma2Form::DxOmega:
        lhs_slots.B = h;
        rhs_slots.B = d_upper(h, AxialVar::R, n);
        block = Block::X;
        c = laplacian_constant(k, m, n);
        break;
    case Lemma2Form::DyPlain:
        lhs_slots.A = h;
        rhs_slots.A = d_lower(h, AxialVar::Rho, n);
        block = Block::Y;
        c = laplacian_constant(l, m, n);
        break;
    case Lemma2Form::DyNu:
        lhs_slots.C = h;
        rhs_slots.C = d_upper(h, AxialVar::Rho, n);
        block = Block::Y;
        c = laplacian_constant(l, m, n);
        break;
    default:
        throw precondition_error("unknown lemma2 form");
    }

    CliffPoly lhs = laplacian_power(substitute(lhs_slots, P), block, n);
    CliffPoly rhs = substitute(rhs_slots, P) * c;
    return {lhs, rhs};
}

}  // namespace bireg
