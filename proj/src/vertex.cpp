#include "spancon/vertex.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "spancon/error.hpp"

namespace spancon {

bool Vertex::contains(Label label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int Vertex::position_of(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? 0 : static_cast<int>(it - labels_.begin()) + 1;
}

Vertex Vertex::with(int position, Label label) const {
  if (position < 1 || position > static_cast<int>(size())) {
    throw InputError("position " + std::to_string(position) + " out of range");
  }
  std::vector<Label> out = labels_;
  out[static_cast<std::size_t>(position - 1)] = label;
  return Vertex(std::move(out));
}

Vertex Vertex::swapped(Label old_label, Label new_label) const {
  int p = position_of(old_label);
  if (p == 0) throw InputError("label " + std::to_string(old_label) + " not present");
  if (contains(new_label)) throw InputError("label " + std::to_string(new_label) + " already present");
  return with(p, new_label);
}

std::string to_text(const Vertex& v, int n) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (n > 9 && i > 0) out += ',';
    out += std::to_string(v.labels()[i]);
  }
  return out;
}

std::string to_text(const Path& p, int n) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_text(p[i], n);
  }
  return out + ">";
}

Vertex parse_vertex(std::string_view text, int n) {
  std::vector<Label> labels;
  auto bad = [&] { return InputError("cannot parse vertex '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  if (text.find(',') != std::string_view::npos || n > 9) {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view part = text.substr(start, end - start);
      Label value = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) throw bad();
      labels.push_back(value);
      start = end + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') throw bad();
      labels.push_back(c - '0');
    }
  }
  return Vertex(std::move(labels));
}

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  int max_label = 0;
  for (Label x : v.labels()) max_label = std::max(max_label, x);
  return os << to_text(v, max_label);
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Label x : v.labels()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
  return h;
}

Path reversed(Path p) {
  std::reverse(p.begin(), p.end());
  return p;
}

}  // namespace spancon
