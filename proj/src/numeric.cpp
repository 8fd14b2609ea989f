#include "bireg/numeric.hpp"

#include <cmath>

#include "bireg/error.hpp"

namespace bireg {

namespace {

constexpr double kSingularFloor = 1e-6;

double norm(const std::vector<double>& v)
{
    double s = 0.0;
    for (size_t i = 1; i < v.size(); ++i)
        s += v[i] * v[i];
    return std::sqrt(s);
}

using BladeValues = std::map<BladeMask, double>;

void accumulate(BladeValues& acc, const BladeValues& inc, double scale)
{
    for (const auto& [mask, v] : inc)
        acc[mask] += scale * v;
}

BladeValues unit_mul(const BladeValues& a, int j, Side side)
{
    BladeMask ej = BladeMask(1) << (j - 1);
    BladeValues out;
    for (const auto& [mask, v] : a) {
        int sign = side == Side::Left ? blade_product_sign(ej, mask) : blade_product_sign(mask, ej);
        out[mask ^ ej] += sign * v;
    }
    return out;
}

double max_norm(const BladeValues& a)
{
    double mx = 0.0;
    for (const auto& [mask, v] : a)
        mx = std::max(mx, std::abs(v));
    return mx;
}

EvalPoint perturbed(const EvalPoint& pt, Block block, int idx, double delta)
{
    EvalPoint out = pt;
    (block == Block::X ? out.x : out.y)[idx] += delta;
    return out;
}

// Central-difference first derivative of f along one coordinate.
BladeValues fd_partial(const PointFunction& f, const EvalPoint& pt, Block block, int idx,
                       const FdConfig& cfg)
{
    double h = cfg.step;
    BladeValues out;
    if (cfg.order == 2) {
        accumulate(out, f(perturbed(pt, block, idx, h)), 1.0 / (2 * h));
        accumulate(out, f(perturbed(pt, block, idx, -h)), -1.0 / (2 * h));
    } else if (cfg.order == 4) {
        accumulate(out, f(perturbed(pt, block, idx, 2 * h)), -1.0 / (12 * h));
        accumulate(out, f(perturbed(pt, block, idx, h)), 8.0 / (12 * h));
        accumulate(out, f(perturbed(pt, block, idx, -h)), -8.0 / (12 * h));
        accumulate(out, f(perturbed(pt, block, idx, -2 * h)), 1.0 / (12 * h));
    } else {
        throw precondition_error("fd order must be 2 or 4");
    }
    return out;
}

// Central-difference second derivative along one coordinate.
BladeValues fd_second(const PointFunction& f, const EvalPoint& pt, Block block, int idx,
                      const FdConfig& cfg)
{
    double h = cfg.step;
    BladeValues out;
    if (cfg.order == 2) {
        accumulate(out, f(perturbed(pt, block, idx, h)), 1.0 / (h * h));
        accumulate(out, f(pt), -2.0 / (h * h));
        accumulate(out, f(perturbed(pt, block, idx, -h)), 1.0 / (h * h));
    } else if (cfg.order == 4) {
        accumulate(out, f(perturbed(pt, block, idx, 2 * h)), -1.0 / (12 * h * h));
        accumulate(out, f(perturbed(pt, block, idx, h)), 16.0 / (12 * h * h));
        accumulate(out, f(pt), -30.0 / (12 * h * h));
        accumulate(out, f(perturbed(pt, block, idx, -h)), 16.0 / (12 * h * h));
        accumulate(out, f(perturbed(pt, block, idx, -2 * h)), -1.0 / (12 * h * h));
    } else {
        throw precondition_error("fd order must be 2 or 4");
    }
    return out;
}

}  // namespace

double EvalPoint::r() const { return norm(x); }
double EvalPoint::rho() const { return norm(y); }

std::map<BladeMask, double> eval_poly(const CliffPoly& p, const EvalPoint& pt)
{
    int m = p.generators();
    if (static_cast<int>(pt.x.size()) != m + 1 || static_cast<int>(pt.y.size()) != m + 1)
        throw precondition_error("evaluation point has wrong dimension");
    BladeValues out;
    for (const auto& [e, coef] : p.terms()) {
        double mono = 1.0;
        for (int i = 0; i <= m; ++i) {
            for (int k = 0; k < e[i]; ++k)
                mono *= pt.x[i];
            for (int k = 0; k < e[m + 1 + i]; ++k)
                mono *= pt.y[i];
        }
        for (const auto& [mask, c] : coef.terms())
            out[mask] += mono * to_double(c);
    }
    return out;
}

PointFunction poly_function(const CliffPoly& p)
{
    return [p](const EvalPoint& pt) { return eval_poly(p, pt); };
}

double fd_cr_residual(const PointFunction& f, int m, const OperatorSpec& spec,
                      const EvalPoint& pt, const FdConfig& cfg)
{
    BladeValues out;
    for (int j = 1; j <= m; ++j)
        accumulate(out, unit_mul(fd_partial(f, pt, spec.block, j, cfg), j, spec.side), 1.0);
    if (spec.include_scalar_direction)
        accumulate(out, fd_partial(f, pt, spec.block, 0, cfg), 1.0);
    return max_norm(out);
}

double fd_omega_laplacian_residual(int m, const EvalPoint& pt, const FdConfig& cfg)
{
    double r = pt.r();
    if (r < kSingularFloor)
        throw precondition_error("point too close to the r = 0 axis");

    double worst = 0.0;
    for (int i = 1; i <= m; ++i) {
        PointFunction omega_i = [i](const EvalPoint& q) {
            BladeValues v;
            v[0] = q.x[i] / q.r();
            return v;
        };
        BladeValues lap;
        for (int j = 1; j <= m; ++j)
            accumulate(lap, fd_second(omega_i, pt, Block::X, j, cfg), 1.0);
        double residual = lap[0] + (m - 1) / (r * r) * (pt.x[i] / r);
        worst = std::max(worst, std::abs(residual));
    }
    return worst;
}

double fd_lemma2_plain_residual(const AxialFunction& h, int k, int l, int m,
                                const BiregularPoly& P, const EvalPoint& pt, const FdConfig& cfg)
{
    (void)l;
    if (pt.r() < kSingularFloor || pt.rho() < kSingularFloor)
        throw precondition_error("point too close to the singular axis");

    CliffPoly Ppoly = P.poly;
    PointFunction g = [h, Ppoly](const EvalPoint& q) {
        BladeValues v = eval_poly(Ppoly, q);
        double scale = h.eval(q.x[0], q.r(), q.y[0], q.rho());
        for (auto& [mask, val] : v)
            val *= scale;
        return v;
    };

    BladeValues lap;
    for (int j = 0; j <= m; ++j)
        accumulate(lap, fd_second(g, pt, Block::X, j, cfg), 1.0);

    AxialFunction dh = d_lower(h, AxialVar::R, 1);
    double rhs_scale = (2 * k + m - 1) * dh.eval(pt.x[0], pt.r(), pt.y[0], pt.rho());
    accumulate(lap, eval_poly(Ppoly, pt), -rhs_scale);
    return max_norm(lap);
}

}  // namespace bireg
