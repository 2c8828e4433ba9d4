#include "secanta/tensor_io.hpp"

#include <fstream>
#include <sstream>

namespace secanta {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key))
    throw Error(ErrorCode::InvalidDocument, std::string("missing field '") + key + "'");
  return doc.at(key);
}

}  // namespace

Json spec_to_json(const SystemSpec& spec) {
  Json out;
  out["kind"] = to_string(spec.kind());
  out["L"] = spec.particles();
  out["dims"] = spec.dims();
  return out;
}

SystemSpec spec_from_json(const Json& doc) {
  try {
    const Kind kind = kind_from_string(require(doc, "kind").get<std::string>());
    const int particles = require(doc, "L").get<int>();
    auto dims = require(doc, "dims").get<std::vector<int>>();
    return SystemSpec::make(kind, particles, std::move(dims));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
}

Json complex_to_json(cd z) { return Json::array({z.real(), z.imag()}); }

Json tensor_to_json(const Tensor& t) {
  Json out = spec_to_json(t.spec());
  Json rows = Json::array();
  const auto indices = packed_indices(t.spec());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const cd v = t.entries()[static_cast<Eigen::Index>(i)];
    if (v == cd(0.0)) continue;
    Json row = Json::array();
    for (int k : indices[i]) row.push_back(k);
    row.push_back(v.real());
    row.push_back(v.imag());
    rows.push_back(std::move(row));
  }
  out["entries"] = std::move(rows);
  return out;
}

Tensor tensor_from_json(const Json& doc) {
  const SystemSpec spec = spec_from_json(doc);
  const Json& rows = require(doc, "entries");
  if (!rows.is_array()) throw Error(ErrorCode::InvalidDocument, "'entries' must be a list");
  const auto particles = static_cast<std::size_t>(spec.particles());
  SparseEntries entries;
  try {
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != particles + 2)
        throw Error(ErrorCode::InvalidDocument, "each entry must be [i_1, ..., i_L, re, im]");
      MultiIndex idx;
      for (std::size_t j = 0; j < particles; ++j) idx.push_back(row[j].get<int>());
      for (std::size_t j = 1; j < idx.size(); ++j) {
        if (spec.kind() == Kind::Fermionic && idx[j] <= idx[j - 1])
          throw Error(ErrorCode::InvalidDocument, "fermionic entries need strictly increasing indices");
        if (spec.kind() == Kind::Bosonic && idx[j] < idx[j - 1])
          throw Error(ErrorCode::InvalidDocument, "bosonic entries need weakly increasing indices");
      }
      entries.emplace_back(std::move(idx), cd(row[particles].get<double>(), row[particles + 1].get<double>()));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  return make_tensor(spec, entries);
}

Tensor read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidDocument, "cannot open '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidDocument, e.what());
  }
  // Catalog entries and CLI documents wrap the tensor under "state"; a
  // catalog listing with a single entry is accepted as well.
  if (doc.is_object() && doc.contains("catalog") && doc["catalog"].is_array() && doc["catalog"].size() == 1)
    doc = doc["catalog"][0];
  if (doc.is_object() && doc.contains("state") && doc["state"].is_object()) return tensor_from_json(doc["state"]);
  return tensor_from_json(doc);
}

}  // namespace secanta
