#include <doctest.h>

#include <string>

#include "helpers.hpp"
#include "quadrep/error.hpp"
#include "quadrep/io/document.hpp"
#include "quadrep/maps/catalog.hpp"

using namespace quadrep;
using namespace testing;

namespace {

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("document") {
  TEST_CASE("round trip is bit-exact") {
    for (const char* target : {"pi_n:2,3", "pi_np1:3", "pi_np1:4", "pi3_s2:2", "pi_np2:2"}) {
      const PolyMap map = catalog(CatalogTarget::parse(target));
      const std::string text = write_document(make_document(map));
      CHECK(text.back() == '\n');
      const MapDocument doc = read_document(text);
      CHECK(doc.order == map.order());
      CHECK(doc.map.components() == map.components());
      CHECK(doc.map.label() == map.label());
      CHECK(write_document(doc) == text);
    }
  }

  TEST_CASE("small document layout") {
    const PolyMap id = identity_map(1).with_certificate(certify_order(identity_map(1), 1));
    const std::string text = write_document(make_document(id));
    CHECK(text.starts_with(R"({"format_version":1,"label":)"));
    CHECK(text.find(R"("components":[[{"exponents":[1],"re":"1/1","im":"0/1"}]])") != std::string::npos);
    CHECK(text.find(R"("order":1)") != std::string::npos);
  }

  TEST_CASE("uncertified maps write a null order") {
    const PolyMap raw = PolyMap::from_components(hopf_pair().f.components(), "raw");
    const MapDocument doc = read_document(write_document(make_document(raw)));
    CHECK_FALSE(doc.order);
    CHECK(doc.certificates.empty());
  }

  TEST_CASE("non-canonical and malformed input is rejected") {
    const std::string text = write_document(make_document(catalog(CatalogTarget::parse("pi_n:2,2"))));
    const std::string bad[] = {
        replace_once(text, R"("format_version":1)", R"("format_version":2)"),
        replace_once(text, R"("re":"1/1")", R"("re":"2/2")"),
        replace_once(text, R"("re":"1/1")", R"("re":"1")"),
        replace_once(text, R"("re":"1/1")", R"("re":"0/1")"),
        replace_once(text, R"("label")", R"("extra":0,"label")"),
        text.substr(0, text.size() / 2),
        "",
        "[]\n",
    };
    for (const auto& b : bad) CHECK_THROWS_AS(read_document(b), Error);
  }

  TEST_CASE("terms out of order are rejected") {
    const PolyMap m = PolyMap::from_components({var(2, 0) + var(2, 1)}, "two terms");
    const std::string text = write_document(make_document(m));
    const std::string swapped = replace_once(replace_once(text, "[1,0]", "[X]"), "[0,1]", "[1,0]");
    CHECK_THROWS_AS(read_document(replace_once(swapped, "[X]", "[0,1]")), Error);
  }

  TEST_CASE("a document with a false order claim does not keep the order") {
    const std::string text = write_document(make_document(catalog(CatalogTarget::parse("pi_n:2,2"))));
    const std::string corrupt = replace_once(text, R"("re":"1/1")", R"("re":"2/1")");
    const MapDocument doc = read_document(corrupt);
    const PHCertificate recheck = certify_order(doc.map, 3);
    CHECK_FALSE(recheck.pass);
  }

  TEST_CASE("structured maps cannot be written without expansion") {
    const PolyMap t3 = catalog(CatalogTarget::parse("pi_np3:3"));
    CHECK_FALSE(t3.is_expanded());
    CHECK_THROWS_AS(make_document(t3), Error);
  }
}
