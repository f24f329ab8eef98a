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


#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbij/block_family.hpp"
#include "pbij/set_descriptor.hpp"

namespace pbij {

/// A family as written in a config file, before validation.
///
///     {"schema": 1, "name": "...", "blocks": [<block>, ...], "uniform_n": 1}
///     {"schema": 1, "name": "...", "generator": {"kind": "two_adic"}, "prefix": 6}
///
/// A block is a descriptor string or
/// {"finite": [...], "tail": {"mod": m, "residues": [...]}, "remove": [...]}.
struct FamilySpec {
  std::string name;
  std::vector<SetDescriptor> blocks;
  /// The blocks are a prefix of the infinite two-adic family.
  bool two_adic = false;
  std::optional<std::size_t> declared_uniform_n;
};

/// Throws ParseError whose location is `source:line:column` for malformed
/// JSON and `source:/json/pointer` for malformed content.
FamilySpec parse_family(std::string_view json_text, const std::string& source = "<input>");
/// Reads and parses a family file; unreadable files raise ParseError too.
FamilySpec load_family(const std::string& path);

/// Throws NotAlmostDisjoint and ContractViolation as BlockFamily::create.
BlockFamily build_family(const FamilySpec& spec);

}  // namespace pbij
