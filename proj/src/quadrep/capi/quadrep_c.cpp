#include "quadrep/quadrep.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "quadrep/error.hpp"
#include "quadrep/io/document.hpp"
#include "quadrep/maps/catalog.hpp"
#include "quadrep/numeric/hopf.hpp"
#include "quadrep/numeric/quadric.hpp"
#include "quadrep/numeric/topology.hpp"
#include "quadrep/parallel.hpp"

struct qr_map {
  quadrep::MapDocument doc;
};

namespace {

using json = nlohmann::ordered_json;
using namespace quadrep;

constexpr std::size_t kExportBudget = 50'000'000;
constexpr double kResidualTol = 1e-9;

thread_local std::string g_last_error;

qr_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return QR_ERR_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return QR_ERR_DIMENSION;
    case ErrorCode::Format: return QR_ERR_FORMAT;
    case ErrorCode::Certification: return QR_ERR_CERTIFICATION;
    case ErrorCode::Numeric: return QR_ERR_NUMERIC;
    case ErrorCode::TooLarge: return QR_ERR_TOO_LARGE;
    case ErrorCode::Internal: return QR_ERR_INTERNAL;
  }
  return QR_ERR_INTERNAL;
}

template <class F>
qr_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return QR_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return QR_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QR_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* owned_copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json certificate_summary(const PHCertificate& c) {
  json j;
  j["identity"] = c.identity;
  j["claimed_order"] = c.claimed_order;
  j["method"] = std::string(to_string(c.method));
  j["grid"] = std::string(to_string(c.grid));
  j["points"] = c.points;
  j["degree_bound"] = c.degree_bound;
  j["total_degree"] = c.total_degree;
  j["failure_bound"] = c.failure_bound;
  j["pass"] = c.pass;
  j["witness"] = c.witness;
  return j;
}

json residual_check(const std::string& name, double value, double tol) {
  json j;
  j["name"] = name;
  j["pass"] = value < tol;
  j["value"] = value;
  j["tolerance"] = tol;
  return j;
}

json finish(json checks, int* pass) {
  bool all = true;
  for (const auto& c : checks) all = all && c["pass"].get<bool>();
  json report;
  report["pass"] = all;
  report["checks"] = std::move(checks);
  *pass = all ? 1 : 0;
  return report;
}

json verify_report(const MapDocument& doc, const qr_verify_options& opt, int* pass) {
  const PolyMap& map = doc.map;
  json checks = json::array();
  const std::size_t samples = opt.samples ? opt.samples : 10'000;
  if (opt.mode == QR_VERIFY_SAMPLED) {
    const ResidualScan scan = quadric_residual_scan(map, samples, opt.seed);
    json c = residual_check("quadric_residual_scan", scan.max_residual, kResidualTol);
    c["samples"] = scan.samples;
    c["seed"] = opt.seed;
    c["real_max"] = scan.real_max;
    c["complex_max"] = scan.complex_max;
    checks.push_back(std::move(c));
  } else {
    const auto order = doc.order ? doc.order : map.order();
    if (!order) fail(ErrorCode::InvalidArgument, "the map carries no order to verify");
    CertifyOptions co;
    co.seed = opt.seed;
    if (opt.mode == QR_VERIFY_EXACT) {
      co.mode = CertifyMode::FullExpansion;
      co.expansion_budget = 200'000'000;
    } else {
      co.mode = CertifyMode::ExactEvaluation;
      co.grid_budget = 2'000'000;
    }
    const PHCertificate cert = certify_order(map, *order, co);
    json c;
    c["name"] = "certify_order";
    c["pass"] = cert.pass;
    c["order"] = *order;
    c["certificate"] = certificate_summary(cert);
    checks.push_back(std::move(c));
  }
  json report = finish(std::move(checks), pass);
  json out;
  out["mode"] = opt.mode == QR_VERIFY_EXACT ? "exact" : opt.mode == QR_VERIFY_GRID ? "grid" : "sampled";
  for (auto& [k, v] : report.items()) out[k] = v;
  return out;
}

json degree_check(const PolyMap& map, std::size_t samples) {
  json c;
  if (map.domain_dim() == 2 && map.codomain_dim() == 2) {
    const DegreeResult d = winding_degree(map, samples ? samples : 4096);
    c["name"] = "winding_degree";
    c["value"] = d.degree;
    c["raw"] = d.raw;
    c["defect"] = d.defect;
    c["tolerance"] = 0.01;
    c["pass"] = d.defect < 0.01;
  } else if (map.domain_dim() == 3 && map.codomain_dim() == 3) {
    const DegreeResult d = degree_s2(map);
    c["name"] = "degree_s2";
    c["value"] = d.degree;
    c["raw"] = d.raw;
    c["defect"] = d.defect;
    c["tolerance"] = 0.05;
    c["grid"] = "400x200";
    c["pass"] = d.defect < 0.05;
  } else {
    fail(ErrorCode::DimensionMismatch, "degree needs a map C^2 -> C^2 or C^3 -> C^3");
  }
  return c;
}

json hopf_check(const PolyMap& map, std::uint64_t seed) {
  HopfOptions opt;
  opt.seed = seed ? seed : opt.seed;
  const HopfResult h = hopf_invariant(map, opt);
  json c;
  c["name"] = "hopf_invariant";
  c["value"] = h.invariant;
  c["linking"] = h.linking;
  c["defect"] = h.defect;
  c["tolerance"] = 0.05;
  c["value_a"] = h.value_a;
  c["value_b"] = h.value_b;
  c["perturbations"] = h.perturbations;
  std::size_t points = 0;
  for (const auto* family : {&h.a, &h.b})
    for (const auto& curve : *family) points += curve.points.size();
  c["components"] = {h.a.size(), h.b.size()};
  c["curve_points"] = points;
  c["note"] = h.note;
  c["pass"] = h.defect < 0.05;
  return c;
}

json hemisphere_report(const PolyMap& map, std::size_t samples, std::uint64_t seed) {
  const HemisphereReport h = hemisphere_check(map, samples ? samples : 1000, seed ? seed : 3);
  json c;
  c["name"] = "hemisphere_check";
  c["pass"] = h.pass;
  c["ell"] = h.ell;
  c["samples"] = h.samples;
  c["max_deviation"] = h.max_deviation;
  c["min_rho"] = h.min_rho;
  c["sign_violations"] = h.sign_violations;
  c["equator_max"] = h.equator_max;
  c["detail"] = h.detail;
  c["scope"] = "checks the equator and hemisphere hypothesis of the suspension, not its homotopy class";
  return c;
}

json homotopy_checks(const MapDocument& doc, std::size_t samples, std::uint64_t seed) {
  const PolyMap& map = doc.map;
  const std::size_t n = samples ? samples : 1000;
  json checks = json::array();
  const ResidualScan scan = quadric_residual_scan(map, 10 * n, seed + 11);
  checks.push_back(residual_check("quadric_residual_scan", scan.max_residual, kResidualTol));
  for (const std::size_t dim : {map.domain_dim(), map.codomain_dim()}) {
    if (dim < 2) continue;
    json c = residual_check("retraction_homotopy_residual", retraction_homotopy_residual(dim, n, 11, seed + 7),
                            kResidualTol);
    c["m"] = dim;
    checks.push_back(std::move(c));
  }
  const auto order = doc.order ? doc.order : map.order();
  if (order && *order > 0 && *order % 2 == 0) {
    const NullhomotopyReport r = even_order_nullhomotopy_residual(map, 11, n, seed + 5, order);
    json c = residual_check("even_order_nullhomotopy_residual", r.max_residual, kResidualTol);
    c["start_error"] = r.start_error;
    c["end_error"] = r.end_error;
    c["pass"] = c["pass"].get<bool>() && r.start_error < kResidualTol && r.end_error < kResidualTol;
    checks.push_back(std::move(c));
  }
  return checks;
}

}  // namespace

extern "C" {

const char* qr_last_error(void) { return g_last_error.c_str(); }

const char* qr_version(void) { return "1.0.0"; }

void qr_set_threads(unsigned n) { set_thread_count(n); }

unsigned qr_threads(void) { return thread_count(); }

qr_status qr_catalog(const char* target, size_t expansion_budget, qr_map** out) {
  return guarded([&] {
    require(target, "target");
    require(out, "out");
    BuildOptions opt;
    if (expansion_budget) opt.expansion_budget = expansion_budget;
    PolyMap map = catalog(CatalogTarget::parse(target), opt);
    MapDocument doc{map, map.order(), {}};
    if (map.certificate()) doc.certificates.push_back(*map.certificate());
    *out = new qr_map{std::move(doc)};
  });
}

qr_status qr_read_document(const char* text, size_t length, qr_map** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new qr_map{read_document(std::string_view(text, length))};
  });
}

qr_status qr_write_document(const qr_map* map, size_t expansion_budget, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    MapDocument doc = map->doc;
    if (!doc.map.is_expanded()) doc.map = expand(doc.map, expansion_budget ? expansion_budget : kExportBudget);
    *out = owned_copy(write_document(doc));
  });
}

void qr_map_free(qr_map* map) { delete map; }

void qr_string_free(char* s) { std::free(s); }

qr_status qr_map_info_get(const qr_map* map, qr_map_info* out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    const PolyMap& m = map->doc.map;
    out->domain_dim = m.domain_dim();
    out->codomain_dim = m.codomain_dim();
    const auto order = map->doc.order;
    out->has_order = order ? 1 : 0;
    out->order = order ? *order : 0;
    out->expanded = m.is_expanded() ? 1 : 0;
    out->terms = 0;
    if (m.is_expanded())
      for (const auto& p : m.components()) out->terms += p.size();
  });
}

qr_status qr_map_label(const qr_map* map, char** out) {
  return guarded([&] {
    require(map, "map");
    require(out, "out");
    *out = owned_copy(map->doc.map.label());
  });
}

qr_status qr_verify(const qr_map* map, const qr_verify_options* options, int* pass, char** report) {
  return guarded([&] {
    require(map, "map");
    require(options, "options");
    require(pass, "pass");
    require(report, "report");
    if (options->mode != QR_VERIFY_EXACT && options->mode != QR_VERIFY_GRID && options->mode != QR_VERIFY_SAMPLED)
      fail(ErrorCode::InvalidArgument, "unknown verify mode");
    *report = owned_copy(verify_report(map->doc, *options, pass).dump());
  });
}

qr_status qr_invariant(const qr_map* map, qr_check check, const qr_invariant_options* options, int* pass,
                       char** report) {
  return guarded([&] {
    require(map, "map");
    require(pass, "pass");
    require(report, "report");
    const qr_invariant_options opt = options ? *options : qr_invariant_options{0, 0};
    json checks = json::array();
    const char* name = "";
    switch (check) {
      case QR_CHECK_DEGREE:
        name = "degree";
        checks.push_back(degree_check(map->doc.map, opt.samples));
        break;
      case QR_CHECK_HOPF:
        name = "hopf";
        checks.push_back(hopf_check(map->doc.map, opt.seed));
        break;
      case QR_CHECK_HEMISPHERE:
        name = "hemisphere";
        checks.push_back(hemisphere_report(map->doc.map, opt.samples, opt.seed));
        break;
      case QR_CHECK_HOMOTOPIES:
        name = "homotopies";
        checks = homotopy_checks(map->doc, opt.samples, opt.seed);
        break;
      default: fail(ErrorCode::InvalidArgument, "unknown check");
    }
    json body = finish(std::move(checks), pass);
    json out;
    out["check"] = name;
    for (auto& [k, v] : body.items()) out[k] = v;
    *report = owned_copy(out.dump());
  });
}

}  // extern "C"
