#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadrep/quadrep.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitUsage = 2;
constexpr int kExitFailure = 3;

struct MapDeleter {
  void operator()(qr_map* m) const { qr_map_free(m); }
};
using MapPtr = std::unique_ptr<qr_map, MapDeleter>;

struct StringDeleter {
  void operator()(char* s) const { qr_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

// A failed library call carries the exit code its status maps to.
struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(qr_status s) {
  switch (s) {
    case QR_OK: return kExitPass;
    case QR_ERR_INVALID_ARGUMENT:
    case QR_ERR_DIMENSION:
    case QR_ERR_FORMAT:
    case QR_ERR_TOO_LARGE: return kExitUsage;
    default: return kExitFailure;
  }
}

void check(qr_status s) {
  if (s != QR_OK) throw Failure{exit_code_for(s), qr_last_error()};
}

// "catalog:<target>" names a catalog map directly; anything else is a document path.
MapPtr load(const std::string& input) {
  qr_map* raw = nullptr;
  if (input.rfind("catalog:", 0) == 0) {
    check(qr_catalog(input.c_str() + 8, 0, &raw));
    return MapPtr(raw);
  }
  std::ifstream in(input, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot open '" + input + "'"};
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  check(qr_read_document(text.data(), text.size(), &raw));
  return MapPtr(raw);
}

void emit_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Failure{kExitUsage, "cannot write '" + path + "'"};
}

json map_summary(const qr_map* map) {
  qr_map_info info{};
  check(qr_map_info_get(map, &info));
  char* label = nullptr;
  check(qr_map_label(map, &label));
  OwnedString owned(label);
  json j;
  j["label"] = std::string(label);
  j["domain_dim"] = info.domain_dim;
  j["codomain_dim"] = info.codomain_dim;
  j["order"] = info.has_order ? json(info.order) : json(nullptr);
  return j;
}

class Reporter {
 public:
  explicit Reporter(std::vector<std::string> argv) : start_(std::chrono::steady_clock::now()) {
    report_["command"] = std::move(argv);
  }
  json& body() { return report_; }
  void print() {
    report_["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    std::cout << report_.dump() << "\n";
  }

 private:
  std::chrono::steady_clock::time_point start_;
  json report_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified polynomial representatives of homotopy classes of spheres"};
  app.require_subcommand(1);
  unsigned threads = 0;
  app.add_option("--threads", threads, "worker threads (0: all cores)")->envname("QUADREP_THREADS");

  std::string target, input, output, mode = "exact", check_name;
  std::size_t samples = 0, budget = 0;
  std::uint64_t seed = 0;

  auto* gen = app.add_subcommand("generate", "write the certified catalog map for a target");
  gen->add_option("target", target, "pi_n:n,d | pi_np1:n | pi_np2:n | pi3_s2:d | pi_np3:n")->required();
  gen->add_option("-o,--output", output, "output path (default: stdout)");
  gen->add_option("--budget", budget, "expansion budget in coefficient products");

  auto* ver = app.add_subcommand("verify", "re-certify a map document");
  ver->add_option("input", input, "document path or catalog:<target>")->required();
  ver->add_option("--mode", mode, "exact | grid | sampled")->check(CLI::IsMember({"exact", "grid", "sampled"}));
  ver->add_option("--samples", samples, "sample count for sampled mode");
  ver->add_option("--seed", seed, "seed for sampled points");

  auto* inv = app.add_subcommand("invariants", "numeric invariants of a map");
  inv->add_option("input", input, "document path or catalog:<target>")->required();
  inv->add_option("--check", check_name, "degree | hopf | hemisphere | homotopies")
      ->required()
      ->check(CLI::IsMember({"degree", "hopf", "hemisphere", "homotopies"}));
  inv->add_option("--samples", samples, "sample count");
  inv->add_option("--seed", seed, "seed");

  auto* exp = app.add_subcommand("export", "write the canonical document for a map");
  exp->add_option("input", input, "document path or catalog:<target>")->required();
  exp->add_option("-o,--output", output, "output path (default: stdout)");
  exp->add_option("--budget", budget, "expansion budget in coefficient products");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  qr_set_threads(threads);
  Reporter reporter(std::vector<std::string>(argv, argv + argc));
  try {
    if (*gen) {
      qr_map* raw = nullptr;
      check(qr_catalog(target.c_str(), 0, &raw));
      MapPtr map(raw);
      char* text = nullptr;
      check(qr_write_document(map.get(), budget, &text));
      OwnedString owned(text);
      emit_text(output, text);
      if (!output.empty() && output != "-") {
        reporter.body()["map"] = map_summary(map.get());
        reporter.body()["output"] = output;
        reporter.body()["pass"] = true;
        reporter.print();
      }
      return kExitPass;
    }
    if (*exp) {
      MapPtr map = load(input);
      char* text = nullptr;
      check(qr_write_document(map.get(), budget, &text));
      OwnedString owned(text);
      emit_text(output, text);
      return kExitPass;
    }

    MapPtr map = load(input);
    int pass = 0;
    char* text = nullptr;
    if (*ver) {
      qr_verify_options opt{};
      opt.mode = mode == "exact" ? QR_VERIFY_EXACT : mode == "grid" ? QR_VERIFY_GRID : QR_VERIFY_SAMPLED;
      opt.samples = samples;
      opt.seed = seed;
      check(qr_verify(map.get(), &opt, &pass, &text));
    } else {
      const qr_check which = check_name == "degree"       ? QR_CHECK_DEGREE
                             : check_name == "hopf"       ? QR_CHECK_HOPF
                             : check_name == "hemisphere" ? QR_CHECK_HEMISPHERE
                                                          : QR_CHECK_HOMOTOPIES;
      const qr_invariant_options opt{samples, seed};
      check(qr_invariant(map.get(), which, &opt, &pass, &text));
    }
    OwnedString owned(text);
    reporter.body()["map"] = map_summary(map.get());
    const json result = json::parse(text);
    for (const auto& [k, v] : result.items()) reporter.body()[k] = v;
    reporter.print();
    return pass ? kExitPass : kExitFailure;
  } catch (const Failure& f) {
    std::cerr << "quadrep: " << f.message << "\n";
    return f.exit_code;
  }
}
