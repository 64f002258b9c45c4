#pragma once

#include "pw/heap/heap.hpp"
#include "pw/hopf/hopf.hpp"

#include <json.hpp>

#include <string>

namespace pw::hopf {

/// Raised on malformed input files; the CLI maps it to exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Ordered JSON keeps report output byte-identical across runs.
using json = nlohmann::ordered_json;

/// Scalars serialize as plain integers when integral, "a/b" strings otherwise.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

json hopf_to_json(const HopfAlgebra& h);
HopfAlgebra hopf_from_json(const json& j);

HopfAlgebra load_hopf(const std::string& path);
void save_hopf(const HopfAlgebra& h, const std::string& path);

json heap_to_json(const heap::FiniteHeap& h);
heap::FiniteHeap heap_from_json(const json& j);

json load_json_file(const std::string& path);
void save_json_file(const json& j, const std::string& path);

}  // namespace pw::hopf
