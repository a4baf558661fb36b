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

#include "ivfg/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <set>
#include <sstream>

#include "ivfg/antipodal.hpp"
#include "ivfg/document.hpp"
#include "ivfg/generate.hpp"
#include "ivfg/metrics.hpp"
#include "ivfg/morphism.hpp"
#include "ivfg/status.hpp"

namespace ivfg::cli {

namespace {

std::string join(const std::set<VertexId>& ids) {
  if (ids.empty()) return "(none)";
  std::string out;
  for (const auto& id : ids) {
    if (!out.empty()) out += ' ';
    out += id;
  }
  return out;
}

IvfGraph load(const std::string& path) { return parse(read_file(path)); }

void emit_document(const std::string& document, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << document;
  } else {
    write_file(output, document);
  }
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const IvfGraph g = parse_unchecked(read_file(file));
  const auto report = validate(g);
  if (report.empty()) {
    out << "valid\n";
    return kOk;
  }
  out << "invalid: " << report.size() << " violation(s)\n";
  for (const auto& v : report) out << "  " << v.message << "\n";
  return kNegative;
}

int cmd_report(const std::string& file, std::ostream& out) {
  const IvfGraph g = load(file);
  const MetricsReport r = analyze(g, MetricsLimits::from_environment());
  const auto& ids = r.distances.ids();
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "distances:\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      out << "delta(" << ids[i] << "," << ids[j] << ") = " << r.distances.at(i, j) << "\n";
    }
  }
  out << "eccentricities:\n";
  for (const auto& [id, e] : r.eccentricities) out << "e(" << id << ") = " << e << "\n";
  out << "radius = " << r.radius << "\n";
  out << "diameter = " << r.diameter << "\n";
  return kOk;
}

int cmd_antipodal(const std::string& file, const std::string& output, std::ostream& out) {
  const IvfGraph g = load(file);
  const AntipodalResult a = antipodal_graph(g, MetricsLimits::from_environment());
  std::ostringstream doc;
  doc << "# diameter = " << a.diameter_used << "\n";
  doc << "# antipodal pairs: " << a.antipodal_pairs.size() << "\n";
  for (const auto& p : a.antipodal_pairs) {
    doc << "# pair " << p.first << " " << p.second << " " << clause_name(p.clause) << "\n";
  }
  if (output.empty()) {
    out << doc.str() << serialize(a.graph);
  } else {
    out << doc.str();
    write_file(output, serialize(a.graph));
  }
  return kOk;
}

int cmd_complement(const std::string& file, const std::string& output, std::ostream& out,
                   std::ostream& err) {
  const IvfGraph g = load(file);
  const IvfGraph c = complement(g);
  for (const auto& v : validate(c)) {
    err << "warning: complement is not a valid graph: " << v.message << "\n";
  }
  emit_document(serialize(c), output, out);
  return kOk;
}

int cmd_status(const std::string& file, std::ostream& out) {
  const IvfGraph g = load(file);
  const StatusSummary s = status_summary(g, MetricsLimits::from_environment());
  for (const auto& [id, p] : s.per_vertex) out << "S(" << id << ") = " << p << "\n";
  out << "minimum = " << s.minimum << "\n";
  out << "maximum = " << s.maximum << "\n";
  out << "total = " << s.total << "\n";
  out << "mu-minimizers: " << join(s.mu_minimizers) << "\n";
  out << "nu-minimizers: " << join(s.nu_minimizers) << "\n";
  out << "median: " << join(s.median) << "\n";
  out << "self-median: " << (s.self_median ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_iso(const std::string& first, const std::string& second, MorphismKind kind,
            std::ostream& out) {
  const IvfGraph g1 = load(first);
  const IvfGraph g2 = load(second);
  const auto witness = find_morphism(g1, g2, kind);
  out << "kind: " << morphism_kind_name(kind) << "\n";
  if (!witness) {
    out << "NotFound\n";
    return kNegative;
  }
  for (const auto& [u, hu] : witness->mapping) out << u << " -> " << hu << "\n";
  return kOk;
}

int cmd_gen(GraphFamily family, std::size_t n, const std::string& vertex,
            const std::vector<std::string>& edges, const std::string& output, std::ostream& out) {
  GeneratorParams params;
  const auto v = parse_interval(vertex);
  if (!v) throw BadParams("bad --vertex interval '" + vertex + "'");
  params.vertex = *v;
  for (const auto& text : edges) {
    const auto e = parse_interval(text);
    if (!e) throw BadParams("bad --edge interval '" + text + "'");
    params.edges.push_back(*e);
  }
  emit_document(serialize(generate(family, n, params)), output, out);
  return kOk;
}

}  // namespace

std::optional<MembershipInterval> parse_interval(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']') {
    text = text.substr(1, text.size() - 2);
  }
  const auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  const auto mu = Scalar::parse(trim(text.substr(0, comma)));
  const auto nu = Scalar::parse(trim(text.substr(comma + 1)));
  if (!mu || !nu) return std::nullopt;
  return MembershipInterval{*mu, *nu};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interval-valued fuzzy graph analysis"};
  app.name(args.empty() ? "ivfg" : args.front());
  app.require_subcommand(1);

  std::string file, file2, output, kind_name, vertex;
  std::vector<std::string> edge_args;
  std::size_t n = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check a graph document");
  validate_cmd->add_option("FILE", file)->required();

  auto* report_cmd = app.add_subcommand("report", "Distances, eccentricities, radius, diameter");
  report_cmd->add_option("FILE", file)->required();

  auto* antipodal_cmd = app.add_subcommand("antipodal", "Build the antipodal graph");
  antipodal_cmd->add_option("FILE", file)->required();
  antipodal_cmd->add_option("-o,--output", output, "Write the graph here");

  auto* complement_cmd = app.add_subcommand("complement", "Build the complement");
  complement_cmd->add_option("FILE", file)->required();
  complement_cmd->add_option("-o,--output", output, "Write the graph here");

  auto* status_cmd = app.add_subcommand("status", "Status table, median, self-median verdict");
  status_cmd->add_option("FILE", file)->required();

  auto* iso_cmd = app.add_subcommand("iso", "Search for a homomorphism or isomorphism");
  iso_cmd->add_option("FILE1", file)->required();
  iso_cmd->add_option("FILE2", file2)->required();
  iso_cmd->add_option("--kind", kind_name, "hom | iso | co-weak")
      ->required()
      ->check(CLI::IsMember({"hom", "iso", "co-weak"}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph family");
  gen_cmd->add_option("--kind", kind_name, "complete-constant | even-cycle-alternating | path")
      ->required()
      ->check(CLI::IsMember({"complete-constant", "even-cycle-alternating", "path"}));
  gen_cmd->add_option("-n,--n", n, "Vertex count")->required();
  gen_cmd->add_option("--vertex", vertex, "Vertex interval, e.g. 0.5,0.5")->required();
  gen_cmd->add_option("--edge", edge_args, "Edge interval; repeat as the family requires")
      ->allow_extra_args(false);
  gen_cmd->add_option("-o,--output", output, "Write the graph here");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("ivfg");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(file, out);
    if (report_cmd->parsed()) return cmd_report(file, out);
    if (antipodal_cmd->parsed()) return cmd_antipodal(file, output, out);
    if (complement_cmd->parsed()) return cmd_complement(file, output, out, err);
    if (status_cmd->parsed()) return cmd_status(file, out);
    if (iso_cmd->parsed()) return cmd_iso(file, file2, *parse_morphism_kind(kind_name), out);
    if (gen_cmd->parsed()) {
      return cmd_gen(*parse_family(kind_name), n, vertex, edge_args, output, out);
    }
  } catch (const ValidationFailed& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& v : e.report()) err << "  " << v.message << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace ivfg::cli
