#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spancon {

using Label = int;

// An ordered tuple of distinct labels. Positions are 1-based.
class Vertex {
 public:
  Vertex() = default;
  explicit Vertex(std::vector<Label> labels) : labels_(std::move(labels)) {}
  Vertex(std::initializer_list<Label> labels) : labels_(labels) {}

  std::size_t size() const { return labels_.size(); }
  Label at(int position) const { return labels_[static_cast<std::size_t>(position - 1)]; }
  std::span<const Label> labels() const { return labels_; }

  bool contains(Label label) const;
  // 0 when the label is absent.
  int position_of(Label label) const;

  Vertex with(int position, Label label) const;
  // Replace old_label by new_label in place. Throws InputError when
  // old_label is absent or new_label already present.
  Vertex swapped(Label old_label, Label new_label) const;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
  friend bool operator==(const Vertex&, const Vertex&) = default;

 private:
  std::vector<Label> labels_;
};

using Path = std::vector<Vertex>;

// Digits run together when n <= 9, otherwise labels are comma separated.
std::string to_text(const Vertex& v, int n);
std::string to_text(const Path& p, int n);
Vertex parse_vertex(std::string_view text, int n);

std::ostream& operator<<(std::ostream& os, const Vertex& v);

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

Path reversed(Path p);

}  // namespace spancon
