#pragma once

#include <string>
#include <string_view>

#include "spancon/container.hpp"
#include "spancon/verify.hpp"

namespace spancon {

// Container JSON, schema 1. The writer is canonical: fixed key order and
// one path per line, so equal containers give identical bytes.
std::string to_json(const Container& c);

// Throws InputError on malformed text, a wrong schema or missing fields.
// Vertices are taken as written; judging them is validate_container's job.
Container container_from_json(std::string_view text);

// {"ok": bool, "violations": [{"code": ..., "detail": ...}]}
std::string report_to_json(const ValidationReport& r);

// Undirected DOT graph with text-form vertex names, each edge once.
// Limited to n <= 5.
std::string to_dot(const Arrangement& g);

}  // namespace spancon
