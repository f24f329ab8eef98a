// Copyright 2026 The pbij Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "pbij/family_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pbij/error.hpp"
#include "pbij/topology.hpp"

namespace pbij {

namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string source) : source_(std::move(source)) {}

  [[noreturn]] void fail(const std::string& pointer, const std::string& what) const {
    throw ParseError(source_ + ":" + (pointer.empty() ? "/" : pointer), what);
  }

  const json& field(const json& obj, const std::string& key, const std::string& at) const {
    auto it = obj.find(key);
    if (it == obj.end()) fail(at, "missing field '" + key + "'");
    return *it;
  }

  Point natural(const json& v, const std::string& at) const {
    if (!v.is_number_unsigned()) fail(at, "expected a natural number");
    return v.get<Point>();
  }

  std::vector<Point> naturals(const json& v, const std::string& at) const {
    if (!v.is_array()) fail(at, "expected an array of natural numbers");
    std::vector<Point> out;
    for (std::size_t k = 0; k < v.size(); ++k) out.push_back(natural(v[k], at + "/" + std::to_string(k)));
    return out;
  }

  SetDescriptor block(const json& v, const std::string& at) const {
    if (v.is_string()) {
      try {
        return SetDescriptor::parse(v.get<std::string>());
      } catch (const ParseError& e) {
        fail(at, e.what());
      }
    }
    if (!v.is_object()) fail(at, "expected a descriptor string or object");
    for (const auto& [key, _] : v.items()) {
      if (key != "finite" && key != "tail" && key != "remove") fail(at + "/" + key, "unknown field");
    }
    std::vector<Point> add, remove, residues;
    Point modulus = 1;
    if (v.contains("finite")) add = naturals(v["finite"], at + "/finite");
    if (v.contains("remove")) remove = naturals(v["remove"], at + "/remove");
    if (v.contains("tail")) {
      const auto& tail = v["tail"];
      const std::string t = at + "/tail";
      if (!tail.is_object()) fail(t, "expected an object");
      modulus = natural(field(tail, "mod", t), t + "/mod");
      if (modulus == 0) fail(t + "/mod", "modulus must be positive");
      if (modulus > kMaxModulus) fail(t + "/mod", "modulus exceeds " + std::to_string(kMaxModulus));
      residues = naturals(field(tail, "residues", t), t + "/residues");
      for (std::size_t k = 0; k < residues.size(); ++k) {
        if (residues[k] >= modulus) fail(t + "/residues/" + std::to_string(k), "residue not below modulus");
      }
    }
    return SetDescriptor::from_parts(add, modulus, residues, remove);
  }

 private:
  std::string source_;
};

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

}  // namespace

FamilySpec parse_family(std::string_view json_text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ":" + line_column(json_text, e.byte), "malformed JSON");
  }
  Reader r(source);
  if (!doc.is_object()) r.fail("", "expected an object");
  const auto schema = r.natural(r.field(doc, "schema", ""), "/schema");
  if (schema != 1) r.fail("/schema", "unsupported schema version " + std::to_string(schema));

  FamilySpec spec;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) r.fail("/name", "expected a string");
    spec.name = doc["name"].get<std::string>();
  }
  if (doc.contains("uniform_n")) spec.declared_uniform_n = r.natural(doc["uniform_n"], "/uniform_n");

  const bool has_blocks = doc.contains("blocks");
  const bool has_generator = doc.contains("generator");
  if (has_blocks == has_generator) r.fail("", "exactly one of 'blocks' and 'generator' is required");

  if (has_generator) {
    const auto& g = doc["generator"];
    if (!g.is_object()) r.fail("/generator", "expected an object");
    const auto& kind = r.field(g, "kind", "/generator");
    if (!kind.is_string() || kind.get<std::string>() != "two_adic") r.fail("/generator/kind", "expected \"two_adic\"");
    std::size_t prefix = 6;
    if (doc.contains("prefix")) prefix = r.natural(doc["prefix"], "/prefix");
    if (prefix == 0 || prefix > TwoAdicFamily::kMaxIndex + 1) {
      r.fail("/prefix", "prefix must lie in [1, " + std::to_string(TwoAdicFamily::kMaxIndex + 1) + "]");
    }
    TwoAdicFamily fam;
    for (std::size_t n = 0; n < prefix; ++n) spec.blocks.push_back(fam.block(n));
    spec.two_adic = true;
    return spec;
  }

  const auto& blocks = doc["blocks"];
  if (!blocks.is_array() || blocks.empty()) r.fail("/blocks", "expected a nonempty array");
  for (std::size_t k = 0; k < blocks.size(); ++k) spec.blocks.push_back(r.block(blocks[k], "/blocks/" + std::to_string(k)));
  return spec;
}

FamilySpec load_family(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_family(buf.str(), path);
}

BlockFamily build_family(const FamilySpec& spec) { return BlockFamily::create(spec.blocks, spec.name); }

}  // namespace pbij
