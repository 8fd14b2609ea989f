#include "bireg/generators.hpp"

#include <algorithm>
#include <numeric>

#include "bireg/error.hpp"

namespace bireg {

FueterVariable fueter_variable(Side side, int j, int m)
{
    if (m < 2)
        throw precondition_error("Fueter variables require m >= 2");
    if (j < 2 || j > m)
        throw precondition_error("Fueter variable index must satisfy 2 <= j <= m, got j=" + std::to_string(j));

    Block block = side == Side::Left ? Block::X : Block::Y;
    CliffPoly vj = CliffPoly::variable(m, {block, j});
    CliffPoly v1 = CliffPoly::variable(m, {block, 1});
    Multivector e1ej = side == Side::Left
                           ? Multivector::unit(m, 1) * Multivector::unit(m, j)
                           : Multivector::unit(m, j) * Multivector::unit(m, 1);
    CliffPoly poly = vj + v1.mul_multivector(e1ej, Side::Left);

    CliffPoly residual = side == Side::Left
                             ? apply_cr(poly, {Block::X, Side::Left, false})
                             : apply_cr(poly, {Block::Y, Side::Right, false});
    if (!residual.is_zero())
        throw math_error("Fueter variable failed its monogenicity certificate");
    return {side, j, poly};
}

CliffPoly symmetrized_product(const std::vector<int>& indices, Side side, int m)
{
    if (indices.empty())
        return CliffPoly::constant(m, Rational(1));

    std::vector<CliffPoly> factors;
    factors.reserve(indices.size());
    for (int j : indices)
        factors.push_back(fueter_variable(side, j, m).poly);

    // Sum over all k! orderings of the factor positions, then divide by k!.
    std::vector<int> perm(indices.size());
    std::iota(perm.begin(), perm.end(), 0);
    CliffPoly sum(m);
    Integer count = 0;
    do {
        CliffPoly prod = factors[perm[0]];
        for (size_t i = 1; i < perm.size(); ++i)
            prod = prod * factors[perm[i]];
        sum = sum + prod;
        ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CliffPoly out = sum * Rational(Integer(1), count);

    CliffPoly residual = side == Side::Left
                             ? apply_cr(out, {Block::X, Side::Left, false})
                             : apply_cr(out, {Block::Y, Side::Right, false});
    if (!residual.is_zero())
        throw math_error("symmetrized product failed its monogenicity certificate");
    return out;
}

BiregularPoly biregular_poly(const std::vector<int>& left_indices,
                             const std::vector<int>& right_indices, int m)
{
    if (m < 1)
        throw precondition_error("biregular_poly requires m >= 1");
    if (m == 1 && (!left_indices.empty() || !right_indices.empty()))
        throw precondition_error("for m = 1 only the constant P_{0,0} is available");

    CliffPoly p = symmetrized_product(left_indices, Side::Left, m);
    CliffPoly q = symmetrized_product(right_indices, Side::Right, m);
    CliffPoly prod = p * q;

    auto [rx, ry] = std::pair(apply_cr(prod, {Block::X, Side::Left, false}),
                              apply_cr(prod, {Block::Y, Side::Right, false}));
    if (!rx.is_zero() || !ry.is_zero())
        throw math_error("biregular polynomial failed its residual certificate");

    return {prod, m, static_cast<int>(left_indices.size()), static_cast<int>(right_indices.size())};
}

}  // namespace bireg
