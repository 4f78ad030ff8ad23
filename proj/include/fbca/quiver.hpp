#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fbca {

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
  std::string label; // display label; defaults to name
};

// Finite directed multigraph. Vertices and arrows are addressed by index;
// names are for I/O only. Parallel arrows and loops are allowed.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  int vertex_index(const std::string &name) const; // -1 if absent
  int arrow_index(const std::string &name) const;  // -1 if absent
  std::vector<std::vector<int>> arrows_by_source() const;
  std::vector<std::vector<int>> arrows_by_target() const;
};

// Throws std::invalid_argument on dangling endpoints or duplicate names.
void validate_quiver(const Quiver &q);

// A path stored in traversal order: word[0] is the first arrow traversed.
// Products compose right-to-left, so a word [a,b,c] prints "c·b·a".
// base is the source vertex; for trivial paths the word is empty.
struct Path {
  int base = 0;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool trivial() const { return word.empty(); }
  bool operator==(const Path &o) const { return base == o.base && word == o.word; }
  bool operator!=(const Path &o) const { return !(*this == o); }
};

inline Path trivial_path(int vertex) { return Path{vertex, {}}; }

// Canonical order: length, then lexicographic on the arrow word, then base.
bool canonical_less(const Path &a, const Path &b);

struct PathLess {
  bool operator()(const Path &a, const Path &b) const { return canonical_less(a, b); }
};

int path_source(const Quiver &q, const Path &p);
int path_target(const Quiver &q, const Path &p);
bool path_valid(const Quiver &q, const Path &p);

// Right-to-left product: the result traverses `earlier` first. Absent when
// target(earlier) != source(later).
std::optional<Path> compose(const Quiver &q, const Path &later, const Path &earlier);

// Contiguous word factor (factors of positive length only).
bool word_contains(const std::vector<int> &word, const std::vector<int> &factor);

// Factor of p: any contiguous subword, or a trivial path based at a vertex
// p passes through.
bool is_factor(const Quiver &q, const Path &factor, const Path &p);

std::string display(const Quiver &q, const Path &p); // e.g. "α2·α1", "e_1"

Path path_from_names(const Quiver &q, const std::vector<std::string> &arrow_names);

} // namespace fbca
