#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadrep/certificate.hpp"
#include "quadrep/maps/poly_map.hpp"

namespace quadrep {

inline constexpr int kFormatVersion = 1;

// On-disk form of an expanded map:
//
//   {"format_version":1,"label":...,"domain_dim":m,"codomain_dim":r,"order":k|null,
//    "components":[[{"exponents":[...],"re":"a/b","im":"c/d"},...],...],
//    "certificates":[{...},...]}
//
// Terms are in graded-lex descending order and rationals in reduced "a/b"
// form. Reading rejects anything else, so a document that reads
// successfully writes back byte for byte.
struct MapDocument {
  PolyMap map;
  std::optional<unsigned> order;
  std::vector<PHCertificate> certificates;
};

// The document for a map: its order and certificate as recorded on the map.
// Throws InvalidArgument for maps that are not expanded.
MapDocument make_document(const PolyMap& map);

// Compact JSON, UTF-8, newline-terminated.
std::string write_document(const MapDocument& doc);
// Throws Format on malformed or non-canonical input.
MapDocument read_document(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace quadrep
