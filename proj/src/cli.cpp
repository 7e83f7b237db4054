#include "procco/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "procco/errors.hpp"
#include "procco/parser.hpp"
#include "procco/query.hpp"
#include "procco/refinement.hpp"
#include "procco/schema_dump.hpp"
#include "procco/text.hpp"
#include "procco/validator.hpp"

namespace procco::cli {

namespace {

struct Loaded {
  std::optional<InstanceGraph> graph;
  std::string diagnostics;  // rendered, one per line
};

std::optional<std::string> read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  buf << file.rdbuf();
  return buf.str();
}

Loaded load(const std::string& path, const std::optional<std::string>& content) {
  Loaded out;
  const std::string origin = path == "-" ? "<stdin>" : path;
  if (!content) {
    out.diagnostics = origin + ": cannot read file\n";
    return out;
  }
  auto result = parse(SourceDocument{*content, origin});
  for (const auto& d : result.diagnostics) out.diagnostics += render(d, origin) + "\n";
  out.graph = std::move(result.graph);
  return out;
}

struct FileOutcome {
  ExitCode code = ExitCode::clean;
  std::string report;
  std::string diagnostics;
};

std::string stats(const InstanceGraph& graph) {
  const auto& schema = builtin_schema();
  std::map<std::string_view, int> kinds;
  std::map<std::string, int> rels;
  std::map<std::string_view, int> flavors;
  for (const auto& [id, e] : graph.entities()) ++kinds[schema.name(e.kind)];
  for (const auto& r : graph.relations()) ++rels[text::underscored(r.rel)];
  for (const auto& c : graph.composition()) ++flavors[to_string(c.flavor)];
  std::ostringstream out;
  out << "entities " << graph.entities().size() << '\n';
  for (const auto& [k, n] : kinds) out << "entity " << k << ' ' << n << '\n';
  out << "relations " << graph.relations().size() << '\n';
  for (const auto& [k, n] : rels) out << "relation " << k << ' ' << n << '\n';
  out << "composition " << graph.composition().size() << '\n';
  for (const auto& [k, n] : flavors) out << "composition " << k << ' ' << n << '\n';
  return out.str();
}

}  // namespace

ExitCode run(std::span<const std::string> args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Validate process models against the ProcessCO v1.3 core ontology", "procco"};
  app.require_subcommand(1);

  std::vector<std::string> files;
  std::string file;
  bool strict = false;
  bool transitive = false;
  bool check = false;
  std::string partitions_path;
  std::string output_format = "text";
  const std::vector<std::string> report_formats{"text", "canonical"};

  auto add_validation_flags = [&](CLI::App* sub) {
    sub->add_option("files", files, "Model files (.pco), '-' for stdin")->required();
    sub->add_flag("--strict", strict, "Enforce matrix cards literally; warnings become errors");
    sub->add_option("--partitions", partitions_path, "Partition override file");
    sub->add_option("--format", output_format, "Report format")->check(CLI::IsMember(report_formats));
    sub->add_flag("--transitive", transitive, "Axiom parts range over all descendants");
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check a model; exit 1 on errors");
  add_validation_flags(validate_cmd);
  auto* lint_cmd = app.add_subcommand("lint", "Report every finding as a warning; exit 0");
  add_validation_flags(lint_cmd);

  auto* query_cmd = app.add_subcommand("query", "Descendant, closure and witness queries");
  std::string op, id, rel, axiom;
  std::vector<std::string> subjects;
  query_cmd->add_option("file", file, "Model file, '-' for stdin")->required();
  query_cmd->add_option("--op", op, "Query")
      ->required()
      ->check(CLI::IsMember({"descendants", "closure", "witness"}));
  query_cmd->add_option("--id", id, "Entity for descendants/closure");
  query_cmd->add_option("--rel", rel, "consumes, produces or involves (closure)");
  query_cmd->add_option("--axiom", axiom, "A1..A6 (witness)");
  query_cmd->add_option("--subjects", subjects, "Axiom binding, e.g. wp1,pe1 (witness)")
      ->delimiter(',');
  query_cmd->add_flag("--transitive", transitive, "Transitive descendants / axiom reading");

  auto* matrix_cmd = app.add_subcommand("matrix", "Print the ProcessCO/ThingFO verification matrix");
  matrix_cmd->add_flag("--check", check, "Append the refinement consistency report");
  matrix_cmd->add_option("--format", output_format, "Output format")->check(CLI::IsMember(report_formats));

  auto* schema_cmd = app.add_subcommand("schema", "Print the built-in ontology schema");
  schema_cmd->add_option("--format", output_format, "Output format")->check(CLI::IsMember(report_formats));

  auto* export_cmd = app.add_subcommand("export", "Write a model in canonical form");
  std::string export_format = "canonical";
  export_cmd->add_option("file", file, "Model file, '-' for stdin")->required();
  export_cmd->add_option("--format", export_format, "canonical or dsl")
      ->check(CLI::IsMember({"canonical", "dsl"}));

  auto* stats_cmd = app.add_subcommand("stats", "Entity and edge counts per kind");
  stats_cmd->add_option("file", file, "Model file, '-' for stdin")->required();

  std::vector<const char*> argv{"procco"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::clean;
  } catch (const CLI::ParseError& e) {
    err << "procco: " << e.what() << "\n\n" << app.help();
    return ExitCode::usage;
  }

  auto load_one = [&](const std::string& path, Loaded& loaded) {
    loaded = load(path, read_input(path, in));
    err << loaded.diagnostics;
    return loaded.graph.has_value();
  };

  if (matrix_cmd->parsed()) {
    if (output_format == "canonical") {
      out << render_matrix_canonical();
      if (check) out << render_refinement_check_canonical();
    } else {
      out << render_matrix_text();
      if (check) out << render_refinement_check_text();
    }
    return ExitCode::clean;
  }

  if (schema_cmd->parsed()) {
    out << (output_format == "canonical" ? render_schema_canonical() : render_schema_text());
    return ExitCode::clean;
  }

  if (validate_cmd->parsed() || lint_cmd->parsed()) {
    const bool lint = lint_cmd->parsed();
    ValidationOptions options;
    options.mode = strict ? Mode::strict : Mode::lenient;
    options.reading = transitive ? AxiomReading::transitive : AxiomReading::direct;
    if (!partitions_path.empty()) {
      try {
        options.partitions = PartitionConfig::load(partitions_path);
      } catch (const Error& e) {
        err << "procco: " << e.what() << '\n';
        return ExitCode::usage;
      }
    }
    // stdin is read up front so worker threads never touch the stream
    std::map<std::string, std::optional<std::string>> contents;
    for (const auto& f : files) {
      if (!contents.contains(f)) contents[f] = read_input(f, in);
    }
    std::vector<std::future<FileOutcome>> jobs;
    for (const auto& f : files) {
      jobs.push_back(std::async(std::launch::async, [&, f] {
        FileOutcome outcome;
        Loaded loaded = load(f, contents.at(f));
        outcome.diagnostics = loaded.diagnostics;
        if (!loaded.graph) {
          outcome.code = ExitCode::parse_failure;
          return outcome;
        }
        auto report = procco::validate(*loaded.graph, options);
        if (lint) {
          for (auto& finding : report.findings) finding.severity = Severity::warning;
        } else if (report.has_errors()) {
          outcome.code = ExitCode::findings;
        }
        outcome.report = output_format == "canonical" ? render_canonical(report) : render_text(report);
        return outcome;
      }));
    }
    ExitCode worst = ExitCode::clean;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
      auto outcome = jobs[i].get();
      err << outcome.diagnostics;
      if (files.size() > 1) {
        out << (output_format == "canonical" ? "file " : "== ") << files[i]
            << (output_format == "canonical" ? "\n" : " ==\n");
      }
      out << outcome.report;
      worst = std::max(worst, outcome.code);
    }
    return worst;
  }

  Loaded loaded;
  if (!load_one(file, loaded)) return ExitCode::parse_failure;
  const InstanceGraph& graph = *loaded.graph;

  if (export_cmd->parsed()) {
    out << (export_format == "dsl" ? format(graph).text : export_canonical(graph));
    return ExitCode::clean;
  }
  if (stats_cmd->parsed()) {
    out << stats(graph);
    return ExitCode::clean;
  }

  // query
  try {
    if (op == "descendants" || op == "closure") {
      if (id.empty()) {
        err << "procco: --op " << op << " needs --id\n";
        return ExitCode::usage;
      }
      if (op == "descendants") {
        for (const auto& d : query::descendants(graph, id, transitive)) out << d.str() << '\n';
      } else {
        if (rel.empty()) {
          err << "procco: --op closure needs --rel\n";
          return ExitCode::usage;
        }
        for (const auto& d : query::closure(graph, id, rel)) out << d.str() << '\n';
      }
      return ExitCode::clean;
    }
    auto ax = parse_axiom(axiom);
    if (!ax) {
      err << "procco: --op witness needs --axiom A1..A6\n";
      return ExitCode::usage;
    }
    auto w = query::axiom_witness(graph, *ax, subjects,
                                  transitive ? AxiomReading::transitive : AxiomReading::direct);
    out << (w.satisfied ? "satisfied " + w.witness->str() : std::string("unsatisfied")) << '\n';
    return ExitCode::clean;
  } catch (const Error& e) {
    err << "procco: " << e.what() << '\n';
    return ExitCode::usage;
  }
}

}  // namespace procco::cli
