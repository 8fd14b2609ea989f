#include "bireg/clifford.hpp"

#include <bit>
#include <sstream>

#include "bireg/error.hpp"

namespace bireg {

int blade_grade(BladeMask mask)
{
    return std::popcount(mask);
}

int blade_product_sign(BladeMask a, BladeMask b)
{
    // For each generator in b, count the generators of a with larger index
    // that it must be transposed past.
    int swaps = 0;
    BladeMask t = a >> 1;
    while (t) {
        swaps += std::popcount(t & b);
        t >>= 1;
    }
    swaps += std::popcount(a & b);  // e_j^2 = -1 per annihilated pair
    return (swaps & 1) ? -1 : 1;
}

int blade_conjugation_sign(BladeMask mask)
{
    int k = blade_grade(mask);
    return ((k * (k + 1) / 2) & 1) ? -1 : 1;
}

std::string blade_key(BladeMask mask)
{
    if (mask == 0)
        return "1";
    std::string s = "e";
    for (int j = 1; j <= kMaxGenerators; ++j)
        if (mask & (BladeMask(1) << (j - 1)))
            s += std::to_string(j);
    return s;
}

BladeMask parse_blade_key(std::string_view key, int m)
{
    if (key == "1")
        return 0;
    if (key.empty() || key[0] != 'e' || key.size() < 2)
        throw schema_error("invalid blade key: '" + std::string(key) + "'");
    if (m > 9)
        throw schema_error("blade keys are only supported for m <= 9");
    BladeMask mask = 0;
    int prev = 0;
    for (char c : key.substr(1)) {
        if (c < '1' || c > '9')
            throw schema_error("invalid blade key: '" + std::string(key) + "'");
        int j = c - '0';
        if (j <= prev || j > m)
            throw schema_error("blade key out of range or unordered: '" + std::string(key) + "'");
        mask |= BladeMask(1) << (j - 1);
        prev = j;
    }
    return mask;
}

Multivector::Multivector(int m) : m_(m)
{
    if (m < 1 || m > kMaxGenerators)
        throw precondition_error("algebra context requires 1 <= m <= 16, got m=" + std::to_string(m));
}

Multivector Multivector::scalar(int m, const Rational& value)
{
    Multivector a(m);
    a.accumulate(0, value);
    return a;
}

Multivector Multivector::unit(int m, int j)
{
    if (j < 1 || j > m)
        throw precondition_error("generator index out of range: e" + std::to_string(j));
    return blade(m, BladeMask(1) << (j - 1), 1);
}

Multivector Multivector::blade(int m, BladeMask mask, const Rational& coef)
{
    Multivector a(m);
    if (mask >= (BladeMask(1) << m))
        throw precondition_error("blade mask out of range for m=" + std::to_string(m));
    a.accumulate(mask, coef);
    return a;
}

bool Multivector::is_scalar() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Multivector::scalar_part() const
{
    return coefficient(0);
}

Rational Multivector::coefficient(BladeMask mask) const
{
    auto it = terms_.find(mask);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::accumulate(BladeMask mask, const Rational& coef)
{
    if (coef == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(mask, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void require_same_context(const Multivector& a, const Multivector& b)
{
    if (a.generators() != b.generators())
        throw precondition_error("algebra context mismatch: m=" + std::to_string(a.generators()) +
                                 " vs m=" + std::to_string(b.generators()));
}

Multivector Multivector::operator+(const Multivector& rhs) const
{
    require_same_context(*this, rhs);
    Multivector out = *this;
    for (const auto& [mask, c] : rhs.terms_)
        out.accumulate(mask, c);
    return out;
}

Multivector Multivector::operator-(const Multivector& rhs) const
{
    require_same_context(*this, rhs);
    Multivector out = *this;
    for (const auto& [mask, c] : rhs.terms_)
        out.accumulate(mask, -c);
    return out;
}

Multivector Multivector::operator-() const
{
    Multivector out(m_);
    for (const auto& [mask, c] : terms_)
        out.terms_.emplace(mask, -c);
    return out;
}

Multivector Multivector::operator*(const Multivector& rhs) const
{
    require_same_context(*this, rhs);
    Multivector out(m_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Rational c = ca * cb;
            if (blade_product_sign(ma, mb) < 0)
                c = -c;
            out.accumulate(ma ^ mb, c);
        }
    return out;
}

Multivector Multivector::operator*(const Rational& s) const
{
    Multivector out(m_);
    if (s == 0)
        return out;
    for (const auto& [mask, c] : terms_)
        out.terms_.emplace(mask, c * s);
    return out;
}

Multivector Multivector::conjugate() const
{
    Multivector out(m_);
    for (const auto& [mask, c] : terms_)
        out.terms_.emplace(mask, blade_conjugation_sign(mask) < 0 ? -c : c);
    return out;
}

std::string Multivector::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mask, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << rational_to_string(c);
        if (mask != 0)
            os << "*" << blade_key(mask);
    }
    return os.str();
}

}  // namespace bireg
