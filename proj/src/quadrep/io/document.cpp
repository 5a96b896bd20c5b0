#include "quadrep/io/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quadrep/error.hpp"

namespace quadrep {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Format, "map document: " + what); }

const json& field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) bad(std::string("missing '") + key + "'");
  return *it;
}

void only_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) bad(where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!allowed.contains(k)) bad("unexpected key '" + k + "' in " + where);
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_unsigned()) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string text(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

bool flag(const json& j, const char* what) {
  if (!j.is_boolean()) bad(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

Rational canonical_rational(const json& j, const char* what) {
  const std::string s = text(j, what);
  Rational r = Rational::parse(s);
  if (r.str() != s) bad(std::string(what) + " '" + s + "' is not in reduced a/b form");
  return r;
}

json certificate_json(const PHCertificate& c) {
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

PHCertificate certificate_from(const json& j) {
  only_keys(j,
            {"identity", "claimed_order", "method", "grid", "points", "degree_bound", "total_degree", "failure_bound",
             "pass", "witness"},
            "certificate");
  PHCertificate c;
  c.identity = text(field(j, "identity"), "identity");
  c.claimed_order = static_cast<unsigned>(count(field(j, "claimed_order"), "claimed_order"));
  const std::string method = text(field(j, "method"), "method");
  if (method == to_string(CertMethod::FullExpansion))
    c.method = CertMethod::FullExpansion;
  else if (method == to_string(CertMethod::ExactEvaluation))
    c.method = CertMethod::ExactEvaluation;
  else
    bad("unknown certificate method '" + method + "'");
  const std::string grid = text(field(j, "grid"), "grid");
  if (grid == to_string(GridKind::None))
    c.grid = GridKind::None;
  else if (grid == to_string(GridKind::TensorGrid))
    c.grid = GridKind::TensorGrid;
  else if (grid == to_string(GridKind::Sampled))
    c.grid = GridKind::Sampled;
  else
    bad("unknown certificate grid '" + grid + "'");
  c.points = count(field(j, "points"), "points");
  c.degree_bound = static_cast<unsigned>(count(field(j, "degree_bound"), "degree_bound"));
  c.total_degree = static_cast<unsigned>(count(field(j, "total_degree"), "total_degree"));
  const json& fb = field(j, "failure_bound");
  if (!fb.is_number()) bad("failure_bound must be a number");
  c.failure_bound = fb.get<double>();
  c.pass = flag(field(j, "pass"), "pass");
  c.witness = text(field(j, "witness"), "witness");
  return c;
}

}  // namespace

MapDocument make_document(const PolyMap& map) {
  if (!map.is_expanded())
    fail(ErrorCode::InvalidArgument, "only expanded maps can be written as documents");
  MapDocument doc{map, map.order(), {}};
  if (map.certificate()) doc.certificates.push_back(*map.certificate());
  return doc;
}

std::string write_document(const MapDocument& doc) {
  const PolyMap& map = doc.map;
  json j;
  j["format_version"] = kFormatVersion;
  j["label"] = map.label();
  j["domain_dim"] = map.domain_dim();
  j["codomain_dim"] = map.codomain_dim();
  j["order"] = doc.order ? json(*doc.order) : json(nullptr);
  json components = json::array();
  for (const Polynomial& p : map.components()) {
    json terms = json::array();
    for (std::size_t t = 0; t < p.size(); ++t) {
      const auto e = p.exponents(t);
      json term;
      term["exponents"] = std::vector<std::uint64_t>(e.begin(), e.end());
      term["re"] = p.coefficient(t).re().str();
      term["im"] = p.coefficient(t).im().str();
      terms.push_back(std::move(term));
    }
    components.push_back(std::move(terms));
  }
  j["components"] = std::move(components);
  json certs = json::array();
  for (const auto& c : doc.certificates) certs.push_back(certificate_json(c));
  j["certificates"] = std::move(certs);
  return j.dump(-1, ' ', false, json::error_handler_t::strict) + "\n";
}

MapDocument read_document(std::string_view input) {
  json j;
  try {
    j = json::parse(input.begin(), input.end());
  } catch (const json::parse_error& e) {
    bad(std::string("not valid JSON: ") + e.what());
  }
  only_keys(j, {"format_version", "label", "domain_dim", "codomain_dim", "order", "components", "certificates"},
            "document");
  const json& version = field(j, "format_version");
  if (!version.is_number_integer() || version.get<long long>() != kFormatVersion)
    bad("unsupported format_version (expected 1)");
  const std::string label = text(field(j, "label"), "label");
  const std::size_t m = count(field(j, "domain_dim"), "domain_dim");
  const std::size_t r = count(field(j, "codomain_dim"), "codomain_dim");
  if (m == 0 || r == 0) bad("dimensions must be positive");
  std::optional<unsigned> order;
  if (const json& o = field(j, "order"); !o.is_null()) order = static_cast<unsigned>(count(o, "order"));

  const json& comps = field(j, "components");
  if (!comps.is_array() || comps.size() != r) bad("components must be an array of codomain_dim entries");
  std::vector<Polynomial> polys;
  polys.reserve(r);
  for (std::size_t c = 0; c < r; ++c) {
    const json& terms = comps[c];
    if (!terms.is_array()) bad("component " + std::to_string(c + 1) + " must be an array of terms");
    std::vector<Polynomial::Term> list;
    list.reserve(terms.size());
    for (const json& term : terms) {
      only_keys(term, {"exponents", "re", "im"}, "term");
      const json& ex = field(term, "exponents");
      if (!ex.is_array() || ex.size() != m) bad("term exponents must have domain_dim entries");
      Polynomial::Term t;
      t.exponents.reserve(m);
      for (const json& e : ex) {
        const std::size_t v = count(e, "exponent");
        if (v > 1'000'000) bad("exponent too large");
        t.exponents.push_back(static_cast<Exponent>(v));
      }
      t.coefficient = GaussianRational(canonical_rational(field(term, "re"), "re"),
                                       canonical_rational(field(term, "im"), "im"));
      if (t.coefficient.is_zero()) bad("zero coefficient in component " + std::to_string(c + 1));
      if (!list.empty() && !grlex_before(list.back().exponents, t.exponents))
        bad("terms of component " + std::to_string(c + 1) + " are not in descending graded-lex order");
      list.push_back(std::move(t));
    }
    polys.push_back(Polynomial::from_terms(m, std::move(list)));
  }

  const json& certs = field(j, "certificates");
  if (!certs.is_array()) bad("certificates must be an array");
  MapDocument doc{PolyMap::from_components(std::move(polys), label), order, {}};
  for (const json& c : certs) doc.certificates.push_back(certificate_from(c));
  for (const auto& c : doc.certificates) {
    if (order && c.pass && c.claimed_order == *order) {
      doc.map = doc.map.with_certificate(c);
      break;
    }
  }
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) fail(ErrorCode::InvalidArgument, "write to '" + path + "' failed");
}

}  // namespace quadrep
