#include "spancon/io.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "spancon/error.hpp"

namespace spancon {
namespace {

using nlohmann::json;

void write_labels(std::ostringstream& out, const Vertex& x) {
  out << '[';
  bool first = true;
  for (Label a : x.labels()) {
    out << (first ? "" : ",") << a;
    first = false;
  }
  out << ']';
}

Vertex read_vertex(const json& j, int k, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != k) {
    throw InputError(std::string(what) + ": expected an array of " + std::to_string(k) + " labels");
  }
  std::vector<Label> labels;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw InputError(std::string(what) + ": labels must be integers");
    labels.push_back(x.get<Label>());
  }
  return Vertex(std::move(labels));
}

int read_int(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw InputError(std::string("missing integer field \"") + key + "\"");
  }
  return doc[key].get<int>();
}

}  // namespace

std::string to_json(const Container& c) {
  std::ostringstream out;
  out << "{\"schema\":1,\"n\":" << c.n << ",\"k\":" << c.k << ",\"u\":";
  write_labels(out, c.u);
  out << ",\"v\":";
  write_labels(out, c.v);
  out << ",\"l\":" << c.l << ",\"paths\":[\n";
  for (std::size_t i = 0; i < c.paths.size(); ++i) {
    out << '[';
    for (std::size_t j = 0; j < c.paths[i].size(); ++j) {
      if (j > 0) out << ',';
      write_labels(out, c.paths[i][j]);
    }
    out << ']' << (i + 1 < c.paths.size() ? "," : "") << '\n';
  }
  out << "]}\n";
  return out.str();
}

Container container_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("container JSON must be an object");
  if (read_int(doc, "schema") != 1) throw InputError("unsupported schema version");
  Container c;
  c.n = read_int(doc, "n");
  c.k = read_int(doc, "k");
  if (c.k < 1 || c.k >= c.n || c.n > 32) throw InputError("bad graph parameters");
  c.l = read_int(doc, "l");
  if (!doc.contains("u") || !doc.contains("v")) throw InputError("missing endpoint");
  c.u = read_vertex(doc["u"], c.k, "u");
  c.v = read_vertex(doc["v"], c.k, "v");
  if (!doc.contains("paths") || !doc["paths"].is_array()) throw InputError("missing \"paths\" array");
  for (const auto& p : doc["paths"]) {
    if (!p.is_array()) throw InputError("each path must be an array of vertices");
    Path path;
    for (const auto& x : p) path.push_back(read_vertex(x, c.k, "path vertex"));
    c.paths.push_back(std::move(path));
  }
  return c;
}

std::string report_to_json(const ValidationReport& r) {
  json violations = json::array();
  for (const auto& issue : r.issues) violations.push_back({{"code", to_string(issue.code)}, {"detail", issue.message}});
  json doc = {{"ok", r.ok()}, {"violations", violations}};
  return doc.dump() + "\n";
}

std::string to_dot(const Arrangement& g) {
  const int n = g.n();
  if (n > 5) throw InputError("DOT export is limited to n <= 5");
  std::ostringstream out;
  out << "graph A_" << n << "_" << g.k() << " {\n";
  const auto vs = g.vertices();
  for (const auto& x : vs) out << "  \"" << to_text(x, n) << "\";\n";
  for (const auto& x : vs) {
    for (const auto& y : g.neighbors(x)) {
      if (x < y) out << "  \"" << to_text(x, n) << "\" -- \"" << to_text(y, n) << "\";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace spancon
