#include "bireg/fueter.hpp"

#include "bireg/error.hpp"

namespace bireg {

Integer double_factorial_product(int k, int m, int n)
{
    if (n < 0)
        throw precondition_error("double_factorial_product requires n >= 0");
    Integer prod = 1;
    for (int j = 1; j <= n; ++j)
        prod *= 2 * k + m - (2 * j - 1);
    return prod;
}

void validate_job(const FueterJob& job)
{
    if (job.m < 1 || job.m % 2 == 0)
        throw precondition_error("m must be odd, got m=" + std::to_string(job.m));
    if (job.k < 0 || job.l < 0)
        throw precondition_error("k and l must be non-negative");
    if (job.P.m != job.m || job.P.k != job.k || job.P.l != job.l)
        throw precondition_error("P_{k,l} does not match the job's (m, k, l)");
    if (!job.quad.parity_ok)
        throw precondition_error("quadruple lacks the parity pattern required for exact substitution");
}

CliffPoly fueter_map(const FueterJob& job)
{
    validate_job(job);
    CliffPoly f0 = substitute(job.quad, job.P);
    int half = (job.m - 1) / 2;
    return laplacian_power(laplacian_power(f0, Block::X, job.k + half), Block::Y, job.l + half);
}

CliffPoly fueter_map_closed_form(const FueterJob& job)
{
    validate_job(job);
    AxialCoefficients abcd = closed_form_abcd(job.quad, job.k, job.l, job.m);
    int half = (job.m - 1) / 2;
    Rational c(double_factorial_product(job.k, job.m, job.k + half) *
               double_factorial_product(job.l, job.m, job.l + half));
    return substitute(abcd, job.P) * c;
}

FueterResult run_and_certify(const FueterJob& job)
{
    CliffPoly direct = fueter_map(job);
    CliffPoly closed = fueter_map_closed_form(job);
    if (!(direct == closed))
        throw math_error("route disagreement: Laplacian route != closed-form route");
    int half = (job.m - 1) / 2;
    FueterResult res{direct, closed,
                     double_factorial_product(job.k, job.m, job.k + half) *
                         double_factorial_product(job.l, job.m, job.l + half),
                     biregular_residuals(direct), false};
    res.biregular = res.residuals.first.is_zero() && res.residuals.second.is_zero();
    return res;
}

CliffPoly classical_fueter(int m, int k, int n, const std::vector<int>& left_indices)
{
    if (m < 1 || m % 2 == 0)
        throw precondition_error("m must be odd, got m=" + std::to_string(m));
    if (static_cast<int>(left_indices.size()) != k)
        throw precondition_error("left index list must have length k");
    HolomorphicQuadruple q = quadruple_from_separable(n, 0);  // c = 1, d = 0 branch
    BiregularPoly P = biregular_poly(left_indices, {}, m);
    CliffPoly f0 = substitute(q, P);
    return laplacian_power(f0, Block::X, k + (m - 1) / 2);
}

}  // namespace bireg
