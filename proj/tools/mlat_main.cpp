// mlat: command-line front end for finite multiplicative lattices.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlat/baer.hpp"
#include "mlat/corpus.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"
#include "mlat/io.hpp"
#include "mlat/verifier.hpp"

namespace {

using namespace mlat;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path to an MLAT file, or a specifier such as fixture:N4 or chain:3*zn:6.
MultLattice load(const std::string& source) {
  if (std::filesystem::exists(source)) return read_mlat_file(source);
  if (source.find(':') != std::string::npos) return realize(LatticeSpecifier::parse(source));
  throw Error(ErrorKind::InvalidArgument, "cannot open '" + source + "'");
}

ElementId element(const MultLattice& M, const std::string& text) {
  for (auto x : M.elements())
    if (M.label(x) == text) return x;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || pos == 0 || v >= M.size())
    throw UsageError("no element '" + text + "'");
  return ElementId(static_cast<std::uint32_t>(v));
}

std::string labels(const MultLattice& M, const ElementSet& xs) {
  std::string out;
  for (auto x : xs) {
    if (!out.empty()) out += ' ';
    out += M.label(x);
  }
  return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int cmd_info(const MultLattice& M) {
  std::cout << "size: " << M.size() << '\n'
            << "bottom: " << M.label(M.bottom()) << '\n'
            << "top: " << M.label(M.top()) << '\n';
  const bool reduced = is_reduced(M);
  std::cout << "reduced: " << yn(reduced) << '\n'
            << "semisimple: " << yn(is_semisimple(M)) << '\n'
            << "domain: " << yn(is_domain(M)) << '\n'
            << "B-multiplicative: " << yn(is_B_multiplicative(M)) << '\n'
            << "distributive: " << yn(distributivity_witness(M.lattice()).empty()) << '\n';
  return kOk;
}

int cmd_frame(const MultLattice& M) {
  if (!is_reduced(M)) throw Error(ErrorKind::PreconditionViolated, "input is not reduced");
  std::cout << emit_mlat(baer_frame(M).frame);
  return kOk;
}

int cmd_gen(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("gen needs KIND");
  const auto& kind = args[0];
  std::string spec;
  if (kind == "product") {
    if (args.size() < 3) throw UsageError("gen product needs at least two specifiers");
    for (std::size_t i = 1; i < args.size(); ++i) spec += (i > 1 ? "*" : "") + args[i];
  } else {
    if (args.size() != 2) throw UsageError("gen " + kind + " takes one parameter");
    spec = kind + ":" + args[1];
  }
  std::cout << emit_mlat(realize(LatticeSpecifier::parse(spec)));
  return kOk;
}

int cmd_search(unsigned max_n, const std::string& predicate, bool reduced, bool no_dedup) {
  EnumerationConfig config;
  config.max_n = max_n;
  config.dedup = !no_dedup;
  config.require_reduced = reduced;
  const auto result = search(config, predicate);
  if (!result.hit) {
    std::cout << "none-found (" << result.examined << " structures examined)\n";
    return kOk;
  }
  std::cout << "found after " << result.examined << " structures\n";
  if (!result.witness.empty()) {
    std::cout << "witness:";
    for (auto x : result.witness) std::cout << ' ' << x.value;
    std::cout << '\n';
  }
  std::cout << emit_mlat(*result.hit);
  return kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiplicative lattices: Baer elements, closures and checks"};
  app.require_subcommand(1);

  std::string file, elt;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "MLAT file or lattice specifier")->required();
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate an MLAT file");
  add_file(validate);
  auto* info = app.add_subcommand("info", "Summary properties");
  add_file(info);
  auto* baer = app.add_subcommand("baer", "List the Baer elements");
  add_file(baer);
  auto* closure = app.add_subcommand("closure", "cz and d of an element");
  add_file(closure);
  closure->add_option("ELT", elt, "element index or name")->required();
  auto* radical_cmd = app.add_subcommand("radical", "Radical of an element");
  add_file(radical_cmd);
  radical_cmd->add_option("ELT", elt, "element index or name")->required();
  auto* annihilator_cmd = app.add_subcommand("annihilator", "Annihilator of an element");
  add_file(annihilator_cmd);
  annihilator_cmd->add_option("ELT", elt, "element index or name")->required();
  auto* frame = app.add_subcommand("frame", "Emit the Baer frame as MLAT");
  add_file(frame);

  auto* check = app.add_subcommand("check", "Run the theorem checks");
  add_file(check);
  std::vector<std::string> only;
  bool json = false;
  check->add_option("--only", only, "check ids, e.g. T16 or T16.3");
  check->add_flag("--json", json, "JSON report");

  auto* gen = app.add_subcommand("gen", "Generate a lattice: chain K, boolean K, zn N, fixture NAME, product SPEC SPEC..");
  std::vector<std::string> gen_args;
  gen->add_option("ARGS", gen_args, "KIND PARAMS")->required();

  auto* search_cmd = app.add_subcommand("search", "Counterexample search over enumerated structures");
  unsigned max_n = 4;
  std::string predicate;
  bool reduced = false, no_dedup = false;
  search_cmd->add_option("--max-n", max_n, "largest lattice size (<= 6)")->required();
  search_cmd->add_option("--predicate", predicate, "predicate name")->required();
  search_cmd->add_flag("--reduced", reduced, "only reduced structures");
  search_cmd->add_flag("--no-dedup", no_dedup, "keep isomorphic copies");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as Graphviz DOT");
  add_file(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_args);
    if (search_cmd->parsed()) return cmd_search(max_n, predicate, reduced, no_dedup);

    std::optional<MultLattice> loaded;
    try {
      loaded = load(file);
    } catch (const ValidationError& e) {
      std::cerr << "invalid: " << e.what() << '\n';
      return validate->parsed() ? kFail : kUsage;
    }
    const MultLattice& M = *loaded;

    if (validate->parsed()) {
      std::cout << "ok: " << M.size() << " elements\n";
      return kOk;
    }
    if (info->parsed()) return cmd_info(M);
    if (baer->parsed()) {
      std::cout << labels(M, baer_elements(M)) << '\n';
      return kOk;
    }
    if (closure->parsed()) {
      const auto x = element(M, elt);
      std::cout << "cz: " << M.label(baer_closure(M)(x)) << '\n'
                << "d: " << M.label(d_closure(M)(x)) << '\n';
      return kOk;
    }
    if (radical_cmd->parsed()) {
      std::cout << M.label(radical(M, element(M, elt))) << '\n';
      return kOk;
    }
    if (annihilator_cmd->parsed()) {
      std::cout << M.label(annihilator(M, element(M, elt))) << '\n';
      return kOk;
    }
    if (frame->parsed()) return cmd_frame(M);
    if (dot->parsed()) {
      std::cout << emit_dot(M);
      return kOk;
    }
    if (check->parsed()) {
      SuiteOptions opts;
      opts.only = only;
      const auto report = run_suite(M, opts, file);
      std::cout << (json ? report.to_json() : report.to_text());
      return report.passed() ? kOk : kFail;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::ParseError:
      case ErrorKind::InvalidArgument:
      case ErrorKind::UnknownFixture:
      case ErrorKind::UnknownPredicate:
        return kUsage;
      default:
        return kFail;
    }
  }
  return kUsage;
}
