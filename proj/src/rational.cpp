#include "bireg/rational.hpp"

#include <cctype>

#include "bireg/error.hpp"

namespace bireg {

std::string rational_to_string(const Rational& q)
{
    if (denominator(q) == 1)
        return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational parse_rational(std::string_view s)
{
    auto is_int = [](std::string_view t) {
        if (!t.empty() && (t[0] == '-' || t[0] == '+'))
            t.remove_prefix(1);
        if (t.empty())
            return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                return false;
        return true;
    };

    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den))
        throw schema_error("invalid rational literal: '" + std::string(s) + "'");
    Integer numerator_value{std::string(num)};
    Integer denominator_value{std::string(den)};
    if (denominator_value == 0)
        throw schema_error("zero denominator in rational literal: '" + std::string(s) + "'");
    return Rational(numerator_value, denominator_value);
}

double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

}  // namespace bireg
