#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bireg/fueter.hpp"
#include "bireg/numeric.hpp"

namespace bireg {

using json = nlohmann::json;

json poly_to_json(const CliffPoly& p);
CliffPoly poly_from_json(const json& j);

json axial_to_json(const AxialFunction& f);
AxialFunction axial_from_json(const json& j);

json quadruple_to_json(const HolomorphicQuadruple& q);

/// Generator descriptor {"left": [ints], "right": [ints]}.
struct GeneratorDescriptor {
    std::vector<int> left;
    std::vector<int> right;
};
GeneratorDescriptor generator_from_json(const json& j);
json generator_to_json(const GeneratorDescriptor& g);

/// Job descriptor for one Fueter-map run. `P` is optional in grid files;
/// when absent, the default index family for (m, k, l) is used.
struct JobDescriptor {
    int m, k, l, n, p;
    std::optional<GeneratorDescriptor> P;
};

/// Default symmetrized-product indices of degree k: 2, 3, ..., m, 2, 3, ...
std::vector<int> default_indices(int k, int m);

FueterJob build_job(const JobDescriptor& d);
json job_descriptor_to_json(const JobDescriptor& d);

/// A job file holds either one descriptor or a grid specification with
/// integer arrays for m, k, l, n, p. Throws schema errors on malformed
/// documents, precondition errors on invalid math parameters.
std::vector<JobDescriptor> parse_job_file(const json& j);

json result_to_json(const JobDescriptor& d, const FueterResult& r);

struct PointSet {
    std::vector<EvalPoint> points;
};
PointSet points_from_json(const json& j, int m);

json load_json_file(const std::string& path);

/// Writes via a temp file plus rename so readers never see partial output.
void write_json_file(const std::string& path, const json& j);

}  // namespace bireg
