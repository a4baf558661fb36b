// Copyright 2026 The ivfg Authors
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

// Line-oriented graph document:
//
//   # comment
//   v <id> <mu> <nu>
//   e <id1> <id2> <mu> <nu>
//
// Blank lines are ignored. Numbers are plain decimals with at most four
// fractional digits. Vertices may be declared after the edges that use
// them.

#ifndef IVFG_DOCUMENT_HPP
#define IVFG_DOCUMENT_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "ivfg/graph.hpp"

namespace ivfg {

/// Parses without running validate(). Throws SyntaxError, DuplicateVertex,
/// DuplicateEdge, UnknownEndpoint (all carry the 1-based line number).
IvfGraph parse_unchecked(std::string_view document);

/// parse_unchecked, then throws ValidationFailed unless the graph is valid.
IvfGraph parse(std::string_view document);

/// Vertices then edges, each in lexicographic order, four decimals.
std::string serialize(const IvfGraph& g);

/// Reads the whole file; throws std::runtime_error if it cannot be opened.
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace ivfg

#endif  // IVFG_DOCUMENT_HPP
