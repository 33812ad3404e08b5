// Command-line interface: analyze | oracle | chain | corpus.
//
// Exit codes: 0 all checks passed, 2 input error, 3 check or verification
// failure, 4 guard exceeded.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "algchain/io.hpp"

namespace fs = std::filesystem;
using namespace algchain;

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::GuardExceeded:
      return 4;
    case Errc::MaximalityFail:
    case Errc::ClassificationMismatch:
    case Errc::Internal:
      return 3;
    default:
      return 2;
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) fail(Errc::ParseError, "cannot write '" + out_path + "'");
    out << text;
  }
}

ReportDocument run_report(const ParsedDefinition& def, bool with_oracle,
                          std::string* lattice_dump) {
  if (std::holds_alternative<InvariantInput>(def.payload)) {
    if (with_oracle) fail(Errc::ValidationError, "the oracle needs a concrete algebra");
    return analyze_symbolic(std::get<InvariantInput>(def.payload), def.field_class, def.options);
  }
  if (std::holds_alternative<AlgebraTable<FiniteField>>(def.payload))
    return analyze_algebra(std::get<AlgebraTable<FiniteField>>(def.payload), def.field_class,
                           def.options, with_oracle, lattice_dump);
  return analyze_algebra(std::get<AlgebraTable<RationalField>>(def.payload), def.field_class,
                         def.options, with_oracle, lattice_dump);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chain-theoretic invariants of finite-dimensional associative algebras"};
  app.require_subcommand(1);

  std::string file, out_path, dump_path, cache_path, kind = "max", strategy = "auto",
                               verify_mode = "structural", corpus_dir;
  std::uint64_t guard_override = 0;
  int workers_override = 0;

  auto* analyze = app.add_subcommand("analyze", "structural invariants and formula checks");
  analyze->add_option("file", file, "definition file")->required();
  analyze->add_option("--out", out_path, "write the report to a file");

  auto* oracle_cmd =
      app.add_subcommand("oracle", "exhaustive subalgebra lattice with exact length and depth");
  oracle_cmd->add_option("file", file, "definition file")->required();
  oracle_cmd->add_option("--guard", guard_override, "maximum subspace count");
  oracle_cmd->add_option("--workers", workers_override, "enumeration worker threads");
  oracle_cmd->add_option("--dump-lattice", dump_path, "write the lattice to a file");
  oracle_cmd->add_option("--out", out_path, "write the report to a file");

  auto* chain_cmd = app.add_subcommand("chain", "build and verify chain certificates");
  chain_cmd->add_option("file", file, "definition file")->required();
  chain_cmd->add_option("--kind", kind, "max | depth")
      ->check(CLI::IsMember({"max", "depth"}));
  chain_cmd->add_option("--strategy", strategy, "auto | halving | subfield_tower | goldbach")
      ->check(CLI::IsMember({"auto", "halving", "subfield_tower", "goldbach"}));
  chain_cmd->add_option("--verify", verify_mode, "structural | exhaustive")
      ->check(CLI::IsMember({"structural", "exhaustive"}));
  chain_cmd->add_option("--out", out_path, "write the certificate to a file");

  auto* corpus_cmd = app.add_subcommand("corpus", "analyze every definition file in a directory");
  corpus_cmd->add_option("directory", corpus_dir, "directory of definition files")->required();
  corpus_cmd->add_option("--cache", cache_path, "cache file (default: $ALGCHAIN_CACHE)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze) {
      auto def = parse_definition(slurp(file));
      auto doc = run_report(def, false, nullptr);
      emit(doc.text, out_path);
      return doc.all_checks_passed ? 0 : 3;
    }

    if (*oracle_cmd) {
      auto def = parse_definition(slurp(file));
      if (guard_override) def.options.guard = guard_override;
      if (workers_override) def.options.workers = workers_override;
      std::string lattice;
      auto doc = run_report(def, true, dump_path.empty() ? nullptr : &lattice);
      if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        dump << lattice;
      }
      emit(doc.text, out_path);
      return doc.all_checks_passed ? 0 : 3;
    }

    if (*chain_cmd) {
      auto def = parse_definition(slurp(file));
      if (!std::holds_alternative<AlgebraTable<FiniteField>>(def.payload))
        fail(Errc::ValidationError, "chain certificates require a finite ground field");
      const auto& A = std::get<AlgebraTable<FiniteField>>(def.payload);
      ChainCertificate cert;
      if (kind == "max") {
        cert = build_max_chain(A);
      } else {
        WitnessStrategy s = WitnessStrategy::auto_pick;
        if (strategy == "halving") s = WitnessStrategy::halving;
        if (strategy == "subfield_tower") s = WitnessStrategy::subfield_tower;
        if (strategy == "goldbach") s = WitnessStrategy::goldbach;
        cert = build_depth_witness(A, s);
      }
      auto mode = verify_mode == "exhaustive" ? VerifyMode::exhaustive : VerifyMode::structural;
      verify_chain(A, cert, mode);
      auto text = write_certificate(cert, A.field);
      emit(text, out_path);
      std::cerr << "chain length " << cert.length() << ", " << verify_mode
                << " verification passed\n";
      return 0;
    }

    if (*corpus_cmd) {
      if (cache_path.empty()) {
        if (const char* env = std::getenv("ALGCHAIN_CACHE")) cache_path = env;
        else cache_path = "algchain-cache.json";
      }
      ResultCache cache(cache_path);
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      int failures = 0, hits = 0;
      for (const auto& path : files) {
        std::string status, detail;
        try {
          auto def = parse_definition(slurp(path.string()));
          std::string key;
          if (std::holds_alternative<AlgebraTable<FiniteField>>(def.payload))
            key = ResultCache::key_for(
                serialize_algebra(std::get<AlgebraTable<FiniteField>>(def.payload)));
          else if (std::holds_alternative<AlgebraTable<RationalField>>(def.payload))
            key = ResultCache::key_for(
                serialize_algebra(std::get<AlgebraTable<RationalField>>(def.payload)));
          bool cached = false;
          std::string report;
          if (!key.empty()) {
            if (auto hit = cache.lookup(key)) {
              report = *hit;
              cached = true;
              ++hits;
            }
          }
          if (!cached) {
            bool with_oracle = false;
            if (std::holds_alternative<AlgebraTable<FiniteField>>(def.payload)) {
              const auto& A = std::get<AlgebraTable<FiniteField>>(def.payload);
              with_oracle =
                  subspace_count_estimate(A.dim, A.field.q()) <= def.options.guard;
            }
            auto doc = run_report(def, with_oracle, nullptr);
            report = doc.text;
            if (!key.empty()) cache.store(key, report);
            if (!doc.all_checks_passed) {
              status = "FAIL";
              ++failures;
            }
          }
          if (status.empty()) {
            // a cached report still carries its verdict in the text
            status = report.find(": FAIL") == std::string::npos ? "ok" : "FAIL";
            if (status == "FAIL") ++failures;
          }
          if (cached) status += " (cached)";
        } catch (const Error& e) {
          status = "ERROR";
          detail = e.what();
          ++failures;
        }
        std::cout << path.filename().string() << ": " << status;
        if (!detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
      }
      cache.save();
      std::cout << files.size() << " files, " << failures << " failures, " << hits
                << " cache hits\n";
      return failures == 0 ? 0 : 3;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
