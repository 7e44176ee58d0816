#include "typik_cli/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "typik/asp_emit.hpp"
#include "typik/entailment.hpp"
#include "typik/error.hpp"
#include "typik/kb_io.hpp"
#include "typik/network.hpp"
#include "typik/report.hpp"

namespace typik::cli {
namespace {

class UsageError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "usage"; }
};

PhiConfig parse_phi_flag(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    parts.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  try {
    if (parts[0] == "logistic" && parts.size() <= 2) {
      return PhiConfig::logistic(parts.size() == 2 ? Rational::parse_decimal(parts[1]) : Rational(1, 1));
    }
    if (parts[0] == "clamped-linear" && parts.size() == 3) {
      return PhiConfig::clamped_linear(Rational::parse_decimal(parts[1]), Rational::parse_decimal(parts[2]));
    }
  } catch (const ParseError& e) {
    throw UsageError("--phi: " + std::string(e.what()));
  }
  throw UsageError("--phi expects logistic[:GAIN] or clamped-linear:SLOPE:OFFSET, got '" + text + "'");
}

AlgebraKind parse_algebra_flag(const std::string& text) {
  const auto kind = parse_algebra_kind(text);
  if (!kind) throw UsageError("--algebra expects goedel or lukasiewicz, got '" + text + "'");
  return *kind;
}

std::uint64_t node_cap_from_env() {
  const char* raw = std::getenv("TYPIK_NODE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultNodeCap;
  const std::string text(raw);
  std::uint64_t cap = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), cap);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || cap == 0) {
    throw UsageError("TYPIK_NODE_CAP must be a positive integer, got '" + text + "'");
  }
  return cap;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << content;
  if (!out) throw IoError("cannot write '" + path + "'");
}

struct Options {
  bool json = false;
  bool timing = false;
  unsigned threads = 0;
  std::optional<int> n;
  std::string algebra;
  std::string phi;

  std::string kb_path;
  std::string query;
  std::size_t limit = 20;

  std::string net_path;
  std::string out_path;
  std::string pref_out_path;
  bool real_inputs = false;
  bool sum_weights = false;
};

// Applies --n/--algebra/--phi; validation runs afterwards.
WeightedKB load_kb(const Options& o) {
  WeightedKB kb = parse_kb_unchecked(read_text_file(o.kb_path));
  if (o.n) kb.n = *o.n;
  if (!o.algebra.empty()) kb.algebra = parse_algebra_flag(o.algebra);
  if (!o.phi.empty()) kb.phi = parse_phi_flag(o.phi);
  return kb;
}

EnumerationOptions enumeration_options(const Options& o) {
  EnumerationOptions e;
  e.node_cap = node_cap_from_env();
  e.threads = o.threads;
  return e;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const WeightedKB kb = load_kb(o);
  auto diagnostics = validate_kb(kb);
  if (!diagnostics.empty()) throw ValidationError(std::move(diagnostics));
  if (o.json) {
    out << diagnostics_to_json({});
  } else {
    out << "valid: " << kb.concept_names.size() << " concepts, " << kb.typicality_tbox.size() << " distinguished, "
        << kb.typicality_count() << " typicality inclusions, " << kb.strict_tbox.size() << " strict inclusions, "
        << kb.abox.size() << " assertions\n";
  }
  return kExitOk;
}

int cmd_models(const Options& o, std::ostream& out) {
  const WeightedKB kb = load_kb(o);
  require_valid(kb);
  const auto models = list_models(kb, o.limit, enumeration_options(o));
  out << (o.json ? models_to_json(models) : models_to_text(models));
  return kExitOk;
}

int cmd_entail(const Options& o, std::ostream& out) {
  const WeightedKB kb = load_kb(o);
  require_valid(kb);
  const TypicalityQuery query = parse_query(o.query);
  EntailmentVerdict verdict = entails(kb, query, enumeration_options(o));
  if (!o.timing) verdict.stats.elapsed_ms.reset();
  out << (o.json ? verdict_to_json(verdict) : verdict_to_text(verdict, query));
  return verdict.entailed ? kExitOk : kExitNegative;
}

int cmd_satisfiable(const Options& o, std::ostream& out) {
  const WeightedKB kb = load_kb(o);
  require_valid(kb);
  const auto result = check_satisfiable(kb, enumeration_options(o));
  out << (o.json ? satisfiability_to_json(result) : satisfiability_to_text(result));
  return result.satisfiable ? kExitOk : kExitNegative;
}

int cmd_import_nn(const Options& o, std::ostream& out) {
  const Network net = load_network_file(o.net_path);
  ImportOptions io;
  io.n = o.n.value_or(1);
  if (!o.algebra.empty()) io.algebra = parse_algebra_flag(o.algebra);
  if (!o.phi.empty()) io.phi = parse_phi_flag(o.phi);
  io.binary_inputs = !o.real_inputs;
  const std::string text = serialize_kb(network_to_kb(net, io));
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_file(o.out_path, text);
    if (o.json) {
      out << "{\"written\": \"" << o.out_path << "\"}\n";
    } else {
      out << "wrote " << o.out_path << "\n";
    }
  }
  return kExitOk;
}

int cmd_emit_asp(const Options& o, std::ostream& out) {
  const WeightedKB kb = load_kb(o);
  require_valid(kb);
  const TypicalityQuery query = parse_query(o.query);
  AspEmitOptions opts;
  opts.aggregate_weights = o.sum_weights;
  const std::string program = emit_program(kb, query, opts).to_string();
  if (o.out_path.empty()) {
    out << program;
  } else {
    write_file(o.out_path, program);
  }
  if (!o.pref_out_path.empty()) write_file(o.pref_out_path, emit_preference());
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Reasoner for weighted conditional knowledge bases with typicality", "typik"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_flag("--timing", o.timing, "Report elapsed time in entailment statistics");
  app.add_option("--threads", o.threads, "Worker threads for enumeration (0 = available parallelism)");
  app.add_option("--n", o.n, "Override the truth-chain resolution n")->check(CLI::Range(1, kMaxResolution));
  app.add_option("--algebra", o.algebra, "Override the algebra: goedel | lukasiewicz");
  app.add_option("--phi", o.phi, "Override phi: logistic[:GAIN] | clamped-linear:SLOPE:OFFSET");

  auto* validate = app.add_subcommand("validate", "Check a KB document");
  validate->add_option("kb", o.kb_path, "KB file")->required();

  auto* models = app.add_subcommand("models", "List feasible valuations in canonical order");
  models->add_option("kb", o.kb_path, "KB file")->required();
  models->add_option("--limit", o.limit, "Maximum number of valuations")->capture_default_str();

  auto* entail = app.add_subcommand("entail", "Decide T(C) -> D rel alpha; exit 0 entailed, 1 not entailed");
  entail->add_option("kb", o.kb_path, "KB file")->required();
  entail->add_option("query", o.query, "Query, e.g. \"T(bird) -> fly >= 0.8\"")->required();

  auto* satisfiable = app.add_subcommand("satisfiable", "Check for a phi_n-coherent model; exit 0 yes, 1 no");
  satisfiable->add_option("kb", o.kb_path, "KB file")->required();

  auto* import_nn = app.add_subcommand("import-nn", "Convert a feedforward network into a KB document");
  import_nn->add_option("network", o.net_path, "Network file")->required();
  import_nn->add_option("--out", o.out_path, "Output path (stdout if omitted)");
  import_nn->add_flag("--real-inputs", o.real_inputs, "Let input concepts range over all of 0..n");

  auto* emit_asp = app.add_subcommand("emit-asp", "Emit the ASP encoding of a KB and query");
  emit_asp->add_option("kb", o.kb_path, "KB file")->required();
  emit_asp->add_option("query", o.query, "Query")->required();
  emit_asp->add_option("--out", o.out_path, "Program output path (stdout if omitted)");
  emit_asp->add_option("--pref-out", o.pref_out_path, "Preference program output path");
  emit_asp->add_flag("--sum-weights", o.sum_weights, "Single #sum aggregate instead of per-concept weight rules");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << error_to_json(UsageError(e.what()));
    return kExitError;
  }

  try {
    if (validate->parsed()) return cmd_validate(o, out);
    if (models->parsed()) return cmd_models(o, out);
    if (entail->parsed()) return cmd_entail(o, out);
    if (satisfiable->parsed()) return cmd_satisfiable(o, out);
    if (import_nn->parsed()) return cmd_import_nn(o, out);
    if (emit_asp->parsed()) return cmd_emit_asp(o, out);
  } catch (const Error& e) {
    err << error_to_json(e);
    return kExitError;
  } catch (const std::exception& e) {
    err << error_to_json(Error(e.what()));
    return kExitError;
  }
  return kExitError;
}

}  // namespace typik::cli
