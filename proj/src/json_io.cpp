#include "bireg/json_io.hpp"

#include <cstdio>
#include <fstream>

#include "bireg/error.hpp"

namespace bireg {

namespace {

int require_int(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_number_integer())
        throw schema_error(std::string("missing or non-integer field '") + key + "'");
    return j[key].get<int>();
}

std::vector<int> int_list(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_array())
        throw schema_error(std::string("missing or non-array field '") + key + "'");
    std::vector<int> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw schema_error(std::string("non-integer entry in '") + key + "'");
        out.push_back(v.get<int>());
    }
    return out;
}

std::string require_string(const json& j, const char* key)
{
    if (!j.contains(key) || !j[key].is_string())
        throw schema_error(std::string("missing or non-string field '") + key + "'");
    return j[key].get<std::string>();
}

}  // namespace

json poly_to_json(const CliffPoly& p)
{
    int m = p.generators();
    json vars = json::array();
    for (int i = 0; i <= m; ++i)
        vars.push_back("x" + std::to_string(i));
    for (int i = 0; i <= m; ++i)
        vars.push_back("y" + std::to_string(i));

    json terms = json::array();
    for (const auto& [e, coef] : p.terms()) {  // map order is graded-lex
        json coefs = json::object();
        for (const auto& [mask, c] : coef.terms())
            coefs[blade_key(mask)] = rational_to_string(c);
        terms.push_back(json{{"exps", e}, {"coef", coefs}});
    }
    return json{{"m", m}, {"vars", vars}, {"terms", terms}};
}

CliffPoly poly_from_json(const json& j)
{
    if (!j.is_object())
        throw schema_error("polynomial document must be an object");
    int m = require_int(j, "m");
    if (m < 1 || m > 9)
        throw schema_error("polynomial m out of supported range 1..9");
    CliffPoly p(m);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw schema_error("missing 'terms' array");
    for (const auto& t : j["terms"]) {
        std::vector<int> exps = int_list(t, "exps");
        if (static_cast<int>(exps.size()) != 2 * (m + 1))
            throw schema_error("exponent vector has wrong length");
        for (int e : exps)
            if (e < 0)
                throw schema_error("negative exponent in polynomial term");
        if (!t.contains("coef") || !t["coef"].is_object())
            throw schema_error("missing 'coef' object");
        Multivector coef(m);
        for (const auto& [key, val] : t["coef"].items()) {
            if (!val.is_string())
                throw schema_error("coefficient values must be rational strings");
            coef.accumulate(parse_blade_key(key, m), parse_rational(val.get<std::string>()));
        }
        p.accumulate(exps, coef);
    }
    return p;
}

json axial_to_json(const AxialFunction& f)
{
    json terms = json::array();
    for (const auto& [e, c] : f.terms())
        terms.push_back(json{{"a", e[0]}, {"b", e[1]}, {"c", e[2]}, {"d", e[3]},
                             {"coef", rational_to_string(c)}});
    return json{{"terms", terms}};
}

AxialFunction axial_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw schema_error("axial function document must be {\"terms\": [...]}");
    AxialFunction f;
    for (const auto& t : j["terms"]) {
        AxialExps e{require_int(t, "a"), require_int(t, "b"), require_int(t, "c"),
                    require_int(t, "d")};
        if (e[0] < 0 || e[2] < 0)
            throw schema_error("x0/y0 exponents must be non-negative");
        f.accumulate(e, parse_rational(require_string(t, "coef")));
    }
    return f;
}

json quadruple_to_json(const HolomorphicQuadruple& q)
{
    return json{{"u1", axial_to_json(q.u1)},
                {"v1", axial_to_json(q.v1)},
                {"u2", axial_to_json(q.u2)},
                {"v2", axial_to_json(q.v2)},
                {"parity_ok", q.parity_ok}};
}

GeneratorDescriptor generator_from_json(const json& j)
{
    if (!j.is_object())
        throw schema_error("generator descriptor must be an object");
    return {int_list(j, "left"), int_list(j, "right")};
}

json generator_to_json(const GeneratorDescriptor& g)
{
    return json{{"left", g.left}, {"right", g.right}};
}

std::vector<int> default_indices(int k, int m)
{
    if (k > 0 && m < 2)
        throw precondition_error("positive-degree generators require m >= 2");
    std::vector<int> out;
    for (int i = 0; i < k; ++i)
        out.push_back(2 + i % (m - 1));
    return out;
}

FueterJob build_job(const JobDescriptor& d)
{
    if (d.m < 1 || d.m % 2 == 0)
        throw precondition_error("m must be odd, got m=" + std::to_string(d.m));
    if (d.k < 0 || d.l < 0)
        throw precondition_error("k and l must be non-negative");
    if (d.n < 0 || d.p < 0)
        throw precondition_error("n and p must be non-negative");
    GeneratorDescriptor g = d.P ? *d.P
                                : GeneratorDescriptor{default_indices(d.k, d.m),
                                                      default_indices(d.l, d.m)};
    if (static_cast<int>(g.left.size()) != d.k || static_cast<int>(g.right.size()) != d.l)
        throw precondition_error("generator descriptor does not match (k, l)");
    return FueterJob{d.m, d.k, d.l, quadruple_from_separable(d.n, d.p),
                     biregular_poly(g.left, g.right, d.m)};
}

json job_descriptor_to_json(const JobDescriptor& d)
{
    json j{{"m", d.m}, {"k", d.k}, {"l", d.l},
           {"quad", json{{"separable", json{{"n", d.n}, {"p", d.p}}}}}};
    if (d.P)
        j["P"] = generator_to_json(*d.P);
    return j;
}

namespace {

JobDescriptor parse_single_job(const json& j)
{
    JobDescriptor d;
    d.m = require_int(j, "m");
    d.k = require_int(j, "k");
    d.l = require_int(j, "l");
    if (!j.contains("quad") || !j["quad"].is_object() || !j["quad"].contains("separable"))
        throw schema_error("job requires quad.separable with fields n and p");
    const json& sep = j["quad"]["separable"];
    d.n = require_int(sep, "n");
    d.p = require_int(sep, "p");
    if (j.contains("P"))
        d.P = generator_from_json(j["P"]);
    return d;
}

}  // namespace

std::vector<JobDescriptor> parse_job_file(const json& j)
{
    if (!j.is_object())
        throw schema_error("job file must be a JSON object");

    bool grid = j.contains("m") && j["m"].is_array();
    if (!grid)
        return {parse_single_job(j)};

    std::vector<int> ms = int_list(j, "m"), ks = int_list(j, "k"), ls = int_list(j, "l"),
                     ns = int_list(j, "n"), ps = int_list(j, "p");
    std::optional<GeneratorDescriptor> P;
    if (j.contains("P"))
        P = generator_from_json(j["P"]);
    std::vector<JobDescriptor> out;
    for (int m : ms)
        for (int k : ks)
            for (int l : ls)
                for (int n : ns)
                    for (int p : ps)
                        out.push_back(JobDescriptor{m, k, l, n, p, P});
    if (out.empty())
        throw schema_error("grid specification produces no jobs");
    return out;
}

json result_to_json(const JobDescriptor& d, const FueterResult& r)
{
    long long constant = r.constant.convert_to<long long>();
    return json{{"job", job_descriptor_to_json(d)},
                {"constant", constant},
                {"biregular", r.biregular},
                {"direct", poly_to_json(r.direct)},
                {"closed_form", poly_to_json(r.closed_form)},
                {"residual_dx", poly_to_json(r.residuals.first)},
                {"residual_dy", poly_to_json(r.residuals.second)}};
}

PointSet points_from_json(const json& j, int m)
{
    if (!j.is_array())
        throw schema_error("points file must be a JSON array");
    PointSet out;
    for (const auto& pj : j) {
        if (!pj.is_object() || !pj.contains("x") || !pj.contains("y"))
            throw schema_error("each point must be {\"x\": [...], \"y\": [...]}");
        EvalPoint pt;
        for (const auto& v : pj["x"])
            pt.x.push_back(v.get<double>());
        for (const auto& v : pj["y"])
            pt.y.push_back(v.get<double>());
        if (static_cast<int>(pt.x.size()) != m + 1 || static_cast<int>(pt.y.size()) != m + 1)
            throw schema_error("point has wrong dimension for m=" + std::to_string(m));
        out.points.push_back(std::move(pt));
    }
    return out;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw schema_error("cannot open file: " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw schema_error("malformed JSON in file: " + path);
    return j;
}

void write_json_file(const std::string& path, const json& j)
{
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            throw schema_error("cannot write file: " + tmp);
        out << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw schema_error("cannot rename output into place: " + path);
}

}  // namespace bireg
