// Exercises the shared library through its C interface only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "quadrep/quadrep.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  qr_string_free(s);
  return out;
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("catalog, info and round trip") {
    qr_map* map = nullptr;
    REQUIRE(qr_catalog("pi_np1:3", 0, &map) == QR_OK);
    qr_map_info info{};
    REQUIRE(qr_map_info_get(map, &info) == QR_OK);
    CHECK(info.domain_dim == 5);
    CHECK(info.codomain_dim == 4);
    CHECK(info.has_order == 1);
    CHECK(info.order == 3);
    CHECK(info.expanded == 1);

    char* text = nullptr;
    REQUIRE(qr_write_document(map, 0, &text) == QR_OK);
    const std::string doc = take(text);
    qr_map* back = nullptr;
    REQUIRE(qr_read_document(doc.data(), doc.size(), &back) == QR_OK);
    REQUIRE(qr_write_document(back, 0, &text) == QR_OK);
    CHECK(take(text) == doc);
    qr_map_free(back);
    qr_map_free(map);
  }

  TEST_CASE("errors are reported through status and message") {
    qr_map* map = nullptr;
    CHECK(qr_catalog("pi_np1:2", 0, &map) == QR_ERR_INVALID_ARGUMENT);
    CHECK(map == nullptr);
    CHECK(std::strlen(qr_last_error()) > 0);
    CHECK(qr_read_document("{}", 2, &map) == QR_ERR_FORMAT);
    CHECK(qr_catalog(nullptr, 0, &map) == QR_ERR_INVALID_ARGUMENT);

    REQUIRE(qr_catalog("pi_n:2,1", 0, &map) == QR_OK);
    int pass = 0;
    char* report = nullptr;
    const qr_invariant_options opt{0, 0};
    CHECK(qr_invariant(map, QR_CHECK_HOPF, &opt, &pass, &report) == QR_ERR_DIMENSION);
    qr_map_free(map);
  }

  TEST_CASE("verify and invariants") {
    qr_map* map = nullptr;
    REQUIRE(qr_catalog("pi_n:2,-2", 0, &map) == QR_OK);
    int pass = 0;
    char* report = nullptr;
    const qr_verify_options vopt{QR_VERIFY_EXACT, 0, 0};
    REQUIRE(qr_verify(map, &vopt, &pass, &report) == QR_OK);
    CHECK(pass == 1);
    CHECK(take(report).find("\"certify_order\"") != std::string::npos);

    const qr_invariant_options iopt{0, 0};
    REQUIRE(qr_invariant(map, QR_CHECK_DEGREE, &iopt, &pass, &report) == QR_OK);
    CHECK(pass == 1);
    CHECK(take(report).find("\"value\":-2") != std::string::npos);
    qr_map_free(map);
  }

  TEST_CASE("a corrupted document fails verification") {
    qr_map* map = nullptr;
    REQUIRE(qr_catalog("pi_n:2,2", 0, &map) == QR_OK);
    char* text = nullptr;
    REQUIRE(qr_write_document(map, 0, &text) == QR_OK);
    std::string doc = take(text);
    qr_map_free(map);
    const auto pos = doc.find("\"re\":\"1/1\"");
    REQUIRE(pos != std::string::npos);
    doc.replace(pos, 10, "\"re\":\"2/1\"");
    REQUIRE(qr_read_document(doc.data(), doc.size(), &map) == QR_OK);
    int pass = 1;
    char* report = nullptr;
    const qr_verify_options vopt{QR_VERIFY_EXACT, 0, 0};
    // The claimed order is kept on read and re-certified from the components.
    REQUIRE(qr_verify(map, &vopt, &pass, &report) == QR_OK);
    CHECK(pass == 0);
    qr_string_free(report);
    qr_map_free(map);
  }

  TEST_CASE("thread setting") {
    qr_set_threads(2);
    CHECK(qr_threads() == 2);
    qr_set_threads(0);
    CHECK(qr_threads() >= 1);
    CHECK(std::strlen(qr_version()) > 0);
  }
}
