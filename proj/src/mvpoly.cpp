#include "bireg/mvpoly.hpp"

#include <numeric>
#include <sstream>

#include "bireg/error.hpp"

namespace bireg {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const
{
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a < b;
}

int var_position(const VarId& v, int m)
{
    if (v.index < 0 || v.index > m)
        throw precondition_error("variable index out of range: " + std::to_string(v.index));
    return (v.block == Block::X ? 0 : m + 1) + v.index;
}

CliffPoly::CliffPoly(int m) : m_(m)
{
    if (m < 1 || m > kMaxGenerators)
        throw precondition_error("polynomial context requires 1 <= m <= 16, got m=" + std::to_string(m));
}

CliffPoly CliffPoly::constant(int m, const Multivector& c)
{
    CliffPoly p(m);
    p.accumulate(Exponents(2 * (m + 1), 0), c);
    return p;
}

CliffPoly CliffPoly::constant(int m, const Rational& c)
{
    return constant(m, Multivector::scalar(m, c));
}

CliffPoly CliffPoly::variable(int m, VarId v)
{
    CliffPoly p(m);
    Exponents e(2 * (m + 1), 0);
    e[var_position(v, m)] = 1;
    p.accumulate(e, Multivector::scalar(m, 1));
    return p;
}

CliffPoly CliffPoly::vector_variable(int m, Block block)
{
    CliffPoly p(m);
    for (int j = 1; j <= m; ++j) {
        Exponents e(2 * (m + 1), 0);
        e[var_position({block, j}, m)] = 1;
        p.accumulate(e, Multivector::unit(m, j));
    }
    return p;
}

CliffPoly CliffPoly::paravector(int m, Block block)
{
    return variable(m, {block, 0}) + vector_variable(m, block);
}

void CliffPoly::accumulate(const Exponents& exps, const Multivector& coef)
{
    if (coef.is_zero())
        return;
    if (static_cast<int>(exps.size()) != num_vars())
        throw precondition_error("exponent vector length mismatch");
    auto [it, inserted] = terms_.try_emplace(exps, coef);
    if (!inserted) {
        it->second = it->second + coef;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

namespace {
void require_same_context(const CliffPoly& a, const CliffPoly& b)
{
    if (a.generators() != b.generators())
        throw precondition_error("polynomial context mismatch: m=" + std::to_string(a.generators()) +
                                 " vs m=" + std::to_string(b.generators()));
}
}  // namespace

CliffPoly CliffPoly::operator+(const CliffPoly& rhs) const
{
    require_same_context(*this, rhs);
    CliffPoly out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.accumulate(e, c);
    return out;
}

CliffPoly CliffPoly::operator-(const CliffPoly& rhs) const
{
    require_same_context(*this, rhs);
    CliffPoly out = *this;
    for (const auto& [e, c] : rhs.terms_)
        out.accumulate(e, -c);
    return out;
}

CliffPoly CliffPoly::operator-() const
{
    CliffPoly out(m_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, -c);
    return out;
}

CliffPoly CliffPoly::operator*(const CliffPoly& rhs) const
{
    require_same_context(*this, rhs);
    CliffPoly out(m_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(ea.size());
            for (size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.accumulate(e, ca * cb);
        }
    return out;
}

CliffPoly CliffPoly::operator*(const Rational& s) const
{
    CliffPoly out(m_);
    if (s == 0)
        return out;
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(e, c * s);
    return out;
}

CliffPoly CliffPoly::mul_multivector(const Multivector& a, Side side) const
{
    CliffPoly out(m_);
    for (const auto& [e, c] : terms_)
        out.accumulate(e, side == Side::Left ? a * c : c * a);
    return out;
}

std::string CliffPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << "  +  ";
        first = false;
        os << "(" << c.str() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            int mp1 = static_cast<int>(e.size()) / 2;
            os << " " << (static_cast<int>(i) < mp1 ? "x" : "y") << (static_cast<int>(i) % mp1);
            if (e[i] > 1)
                os << "^" << e[i];
        }
    }
    return os.str();
}

CliffPoly partial(const CliffPoly& p, VarId v)
{
    int pos = var_position(v, p.generators());
    CliffPoly out(p.generators());
    for (const auto& [e, c] : p.terms()) {
        if (e[pos] == 0)
            continue;
        Exponents d = e;
        d[pos] -= 1;
        out.accumulate(d, c * Rational(e[pos]));
    }
    return out;
}

CliffPoly apply_cr(const CliffPoly& p, const OperatorSpec& spec)
{
    int m = p.generators();
    CliffPoly out(m);
    for (int j = 1; j <= m; ++j) {
        CliffPoly dj = partial(p, {spec.block, j});
        out = out + dj.mul_multivector(Multivector::unit(m, j), spec.side);
    }
    if (spec.include_scalar_direction)
        out = out + partial(p, {spec.block, 0});
    return out;
}

CliffPoly apply_cr_conjugate(const CliffPoly& p, const OperatorSpec& spec)
{
    int m = p.generators();
    CliffPoly out(m);
    for (int j = 1; j <= m; ++j) {
        CliffPoly dj = partial(p, {spec.block, j});
        out = out - dj.mul_multivector(Multivector::unit(m, j), spec.side);
    }
    if (spec.include_scalar_direction)
        out = out + partial(p, {spec.block, 0});
    return out;
}

CliffPoly laplacian(const CliffPoly& p, Block block)
{
    CliffPoly out(p.generators());
    for (int j = 0; j <= p.generators(); ++j) {
        VarId v{block, j};
        out = out + partial(partial(p, v), v);
    }
    return out;
}

CliffPoly laplacian_power(const CliffPoly& p, Block block, int n)
{
    if (n < 0)
        throw precondition_error("laplacian_power requires n >= 0");
    CliffPoly out = p;
    for (int i = 0; i < n; ++i)
        out = laplacian(out, block);
    return out;
}

std::pair<CliffPoly, CliffPoly> biregular_residuals(const CliffPoly& p)
{
    return {apply_cr(p, {Block::X, Side::Left, true}),
            apply_cr(p, {Block::Y, Side::Right, true})};
}

}  // namespace bireg
