#pragma once

#include <string>

#include "json.hpp"
#include "secanta/tensor.hpp"

namespace secanta {

using Json = nlohmann::ordered_json;

/// Schema tag carried by every document the CLI emits.
inline constexpr const char* kSchema = "secanta/1";

Json spec_to_json(const SystemSpec& spec);
SystemSpec spec_from_json(const Json& doc);

/// Canonical text tensor: kind, L, dims, and the nonzero packed entries as
/// [i_1, ..., i_L, re, im] rows with 0-based canonical indices.
Json tensor_to_json(const Tensor& t);
Tensor tensor_from_json(const Json& doc);

Tensor read_tensor_file(const std::string& path);

Json complex_to_json(cd z);

}  // namespace secanta
