#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relrigid/field.hpp"

namespace relrigid {

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

class Quiver {
 public:
  std::size_t add_vertex(const std::string& label);
  std::size_t add_arrow(const std::string& name, std::size_t source, std::size_t target);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& vertex_labels() const noexcept { return labels_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<std::size_t> find_vertex(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& name) const;

  std::vector<std::size_t> arrows_from(std::size_t v) const;
  std::vector<std::size_t> arrows_into(std::size_t v) const;

  // Same vertices, every arrow reversed (arrow indices are preserved).
  Quiver opposite() const;

 private:
  std::vector<std::string> labels_;
  std::vector<Arrow> arrows_;
};

// A path stored in traversal order: arrows[0] is applied first.
struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;

  static Path lazy(std::size_t v) { return Path{v, v, {}}; }
  static Path of_arrow(const Quiver& q, std::size_t a);

  std::size_t length() const noexcept { return arrows.size(); }
  bool is_lazy() const noexcept { return arrows.empty(); }

  // The path "this, then `next`".
  Path then(const Path& next) const;

  // Right-to-left notation, e.g. "b*a" for a then b; "e1" for a lazy path.
  std::string to_string(const Quiver& q) const;

  friend auto operator<=>(const Path&, const Path&) = default;
  friend bool operator==(const Path&, const Path&) = default;
};

// A linear combination of parallel paths.
struct Relation {
  std::vector<std::pair<Rational, Path>> terms;

  std::string to_string(const Quiver& q) const;
};

// Checks parallelism and the length >= 2 admissibility condition.
void validate_relation(const Quiver& q, const Relation& r);

Relation opposite_relation(const Relation& r);

}  // namespace relrigid
