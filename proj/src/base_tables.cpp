#include <sstream>

#include "construct.hpp"

namespace spancon {
namespace {

// Paths separated by ';', vertices by ' '.
Container parse_table(int n, int k, const char* u, const char* v, const char* paths) {
  Container c{n, k, parse_vertex(u, n), parse_vertex(v, n), 0, {}};
  std::stringstream all(paths);
  std::string chunk;
  while (std::getline(all, chunk, ';')) {
    std::stringstream words(chunk);
    Path p;
    std::string word;
    while (words >> word) p.push_back(parse_vertex(word, n));
    c.paths.push_back(std::move(p));
  }
  c.l = static_cast<int>(c.paths.size());
  return c;
}

}  // namespace

const std::vector<Container>& a42_tables() {
  static const std::vector<Container> tables = {
      parse_table(4, 2, "12", "13", "12 13; 12 14 13; 12 42 43 41 21 31 32 34 24 23 13"),
      parse_table(4, 2, "12", "34", "12 14 34; 12 42 32 34; 12 13 43 23 24 21 41 31 34"),
      parse_table(4, 2, "12", "23", "12 13 43 23; 12 14 34 24 23; 12 42 32 31 41 21 23"),
      parse_table(4, 2, "12", "21", "12 13 43 23 21; 12 14 34 24 21; 12 42 32 31 41 21"),
      parse_table(4, 2, "12", "13", "12 13; 12 14 13; 12 42 43 13; 12 32 34 31 41 21 24 23 13"),
      parse_table(4, 2, "12", "34", "12 13 43 23 24 34; 12 14 34; 12 32 34; 12 42 41 21 31 34"),
      parse_table(4, 2, "12", "23", "12 13 23; 12 14 24 23; 12 32 34 31 21 23; 12 42 41 43 23"),
      parse_table(4, 2, "12", "21", "12 13 43 23 21; 12 14 34 24 21; 12 32 31 21; 12 42 41 21"),
  };
  return tables;
}

const std::vector<Container>& a52_disjoint_tables() {
  static const std::vector<Container> tables = {
      // The third path is routed through 54 because 52 and 34 are not
      // adjacent; the long path gives 54 up in exchange.
      parse_table(5, 2, "12", "34",
                  "12 14 34; 12 32 34; 12 52 54 34;"
                  "12 42 43 13 53 23 21 31 51 41 45 35 15 25 24 34"),
      parse_table(5, 2, "12", "34",
                  "12 14 34; 12 15 25 45 35 34; 12 32 34; 12 52 54 34;"
                  "12 42 43 23 13 53 51 41 31 21 24 34"),
      parse_table(5, 2, "12", "34",
                  "12 14 34; 12 13 53 43 23 24 34; 12 15 25 45 35 34;"
                  "12 32 34; 12 42 41 51 21 31 34; 12 52 54 34"),
  };
  return tables;
}

Container base_table_a42(const Vertex& u, const Vertex& v, int l) {
  Arrangement g(4, 2);
  g.require_vertex(u);
  g.require_vertex(v);
  if (u == v) throw InputError("endpoints must differ");
  if (l != 3 && l != 4) throw InputError("stored A(4,2) containers exist for l = 3 and l = 4 only");

  // Pair types: adjacent, disjoint, one label crossing, both labels crossing.
  int type;
  if (g.adjacent(u, v)) {
    type = 0;
  } else if (!v.contains(u.at(1)) && !v.contains(u.at(2))) {
    type = 1;
  } else if (v.at(1) == u.at(2) && v.at(2) == u.at(1)) {
    type = 3;
  } else {
    type = 2;
  }
  const Container& stored = a42_tables()[static_cast<std::size_t>((l - 3) * 4 + type)];
  auto f = automorphism_transport(g, stored.u, stored.v, u, v);
  if (!f) throw ConstructionError("no automorphism onto " + to_text(u, 4) + " -> " + to_text(v, 4));
  std::vector<Path> paths;
  for (const auto& p : stored.paths) paths.push_back((*f)(p));
  return detail::finish(g, u, v, std::move(paths));
}

}  // namespace spancon
