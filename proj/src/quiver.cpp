#include "fbca/quiver.hpp"

#include <algorithm>
#include <set>

namespace fbca {

int Quiver::vertex_index(const std::string &name) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return static_cast<int>(i);
  return -1;
}

int Quiver::arrow_index(const std::string &name) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> Quiver::arrows_by_source() const {
  std::vector<std::vector<int>> out(vertices.size());
  for (size_t i = 0; i < arrows.size(); ++i) out[arrows[i].source].push_back(static_cast<int>(i));
  return out;
}

std::vector<std::vector<int>> Quiver::arrows_by_target() const {
  std::vector<std::vector<int>> out(vertices.size());
  for (size_t i = 0; i < arrows.size(); ++i) out[arrows[i].target].push_back(static_cast<int>(i));
  return out;
}

void validate_quiver(const Quiver &q) {
  std::set<std::string> names;
  for (const auto &v : q.vertices)
    if (!names.insert("v:" + v).second)
      throw std::invalid_argument("duplicate vertex name: " + v);
  for (const auto &a : q.arrows) {
    if (a.source < 0 || a.source >= static_cast<int>(q.vertices.size()) || a.target < 0 ||
        a.target >= static_cast<int>(q.vertices.size()))
      throw std::invalid_argument("arrow " + a.name + " has a dangling endpoint");
    if (!names.insert("a:" + a.name).second)
      throw std::invalid_argument("duplicate arrow name: " + a.name);
  }
}

bool canonical_less(const Path &a, const Path &b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  if (a.word != b.word) return a.word < b.word;
  return a.base < b.base;
}

int path_source(const Quiver &q, const Path &p) {
  return p.word.empty() ? p.base : q.arrows[p.word.front()].source;
}

int path_target(const Quiver &q, const Path &p) {
  return p.word.empty() ? p.base : q.arrows[p.word.back()].target;
}

bool path_valid(const Quiver &q, const Path &p) {
  if (p.base < 0 || p.base >= static_cast<int>(q.vertices.size())) return false;
  for (int a : p.word)
    if (a < 0 || a >= static_cast<int>(q.arrows.size())) return false;
  if (!p.word.empty() && q.arrows[p.word.front()].source != p.base) return false;
  for (size_t i = 0; i + 1 < p.word.size(); ++i)
    if (q.arrows[p.word[i]].target != q.arrows[p.word[i + 1]].source) return false;
  return true;
}

std::optional<Path> compose(const Quiver &q, const Path &later, const Path &earlier) {
  if (path_target(q, earlier) != path_source(q, later)) return std::nullopt;
  Path out;
  out.base = path_source(q, earlier);
  out.word = earlier.word;
  out.word.insert(out.word.end(), later.word.begin(), later.word.end());
  return out;
}

bool word_contains(const std::vector<int> &word, const std::vector<int> &factor) {
  if (factor.empty() || factor.size() > word.size()) return false;
  return std::search(word.begin(), word.end(), factor.begin(), factor.end()) != word.end();
}

bool is_factor(const Quiver &q, const Path &factor, const Path &p) {
  if (factor.trivial()) {
    if (p.trivial()) return p.base == factor.base;
    if (q.arrows[p.word.front()].source == factor.base) return true;
    for (int a : p.word)
      if (q.arrows[a].target == factor.base) return true;
    return false;
  }
  return word_contains(p.word, factor.word);
}

std::string display(const Quiver &q, const Path &p) {
  if (p.trivial()) return "e_" + q.vertices[p.base];
  std::string out;
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) {
    if (!out.empty()) out += "·";
    const Arrow &a = q.arrows[*it];
    out += a.label.empty() ? a.name : a.label;
  }
  return out;
}

Path path_from_names(const Quiver &q, const std::vector<std::string> &arrow_names) {
  if (arrow_names.empty()) throw std::invalid_argument("empty arrow word");
  Path p;
  p.word.reserve(arrow_names.size());
  for (const auto &n : arrow_names) {
    int idx = q.arrow_index(n);
    if (idx < 0) throw std::invalid_argument("unknown arrow: " + n);
    p.word.push_back(idx);
  }
  if (!p.word.empty()) p.base = q.arrows[p.word.front()].source;
  if (!path_valid(q, p)) throw std::invalid_argument("arrow word is not composable");
  return p;
}

} // namespace fbca
