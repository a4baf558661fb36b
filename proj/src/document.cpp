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

#include "ivfg/document.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ivfg {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

Scalar number(std::string_view token, std::size_t line) {
  auto s = Scalar::parse(token);
  if (!s) {
    throw SyntaxError(line, "expected a decimal with at most 4 fractional digits, got '" +
                                std::string(token) + "'");
  }
  return *s;
}

struct PendingEdge {
  std::string a;
  std::string b;
  MembershipInterval m;
  std::size_t line;
};

}  // namespace

IvfGraph parse_unchecked(std::string_view document) {
  IvfGraph g;
  std::vector<PendingEdge> edges;
  std::map<EdgeKey, std::size_t> edge_lines;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= document.size()) {
    const std::size_t end = std::min(document.find('\n', pos), document.size());
    const std::string_view line = document.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    const std::string_view tag = tokens.front();
    if (tag == "v") {
      if (tokens.size() != 4) throw SyntaxError(line_no, "vertex line needs: v <id> <mu> <nu>");
      const std::string id(tokens[1]);
      if (g.has_vertex(id)) throw DuplicateVertex(line_no, "vertex '" + id + "' declared twice");
      g.set_vertex(id, number(tokens[2], line_no), number(tokens[3], line_no));
    } else if (tag == "e") {
      if (tokens.size() != 5) {
        throw SyntaxError(line_no, "edge line needs: e <id1> <id2> <mu> <nu>");
      }
      PendingEdge e{std::string(tokens[1]), std::string(tokens[2]),
                    {number(tokens[3], line_no), number(tokens[4], line_no)}, line_no};
      if (!edge_lines.emplace(EdgeKey(e.a, e.b), line_no).second) {
        throw DuplicateEdge(line_no, "edge " + e.a + "-" + e.b + " declared twice");
      }
      edges.push_back(std::move(e));
    } else {
      throw SyntaxError(line_no, "unknown line tag '" + std::string(tag) + "'");
    }
  }

  for (const auto& e : edges) {
    for (const auto* end : {&e.a, &e.b}) {
      if (!g.has_vertex(*end)) {
        throw UnknownEndpoint(e.line, "edge " + e.a + "-" + e.b + " uses undeclared vertex '" +
                                          *end + "'");
      }
    }
    g.set_edge(e.a, e.b, e.m);
  }
  return g;
}

IvfGraph parse(std::string_view document) {
  IvfGraph g = parse_unchecked(document);
  auto report = validate(g);
  if (!report.empty()) throw ValidationFailed(std::move(report));
  return g;
}

std::string serialize(const IvfGraph& g) {
  std::string out;
  for (const auto& [id, m] : g.vertices()) {
    out += "v " + id + " " + m.mu.to_string() + " " + m.nu.to_string() + "\n";
  }
  for (const auto& [key, m] : g.edges()) {
    out += "e " + key.first() + " " + key.second() + " " + m.mu.to_string() + " " +
           m.nu.to_string() + "\n";
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace ivfg
