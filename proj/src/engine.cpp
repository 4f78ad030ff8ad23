#include "fbca/engine.hpp"

#include "fbca/monomial.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace fbca {

bool PathSpaceModel::has_monomial_factor(const std::vector<int> &word) const {
  for (const auto &m : monomial_words_)
    if (word_contains(word, m)) return true;
  return false;
}

std::map<int, Rat> PathSpaceModel::reduce(std::map<int, Rat> row) const {
  while (!row.empty()) {
    int lead = row.rbegin()->first;
    auto it = pivot_rows_.find(lead);
    if (it == pivot_rows_.end()) break;
    Rat c = row.rbegin()->second;
    for (const auto &[col, coeff] : it->second) {
      Rat &cell = row[col];
      cell -= c * coeff;
      if (cell == 0) row.erase(col);
    }
  }
  return row;
}

bool PathSpaceModel::build(long bound) {
  bound_ = bound;
  columns_.clear();
  col_index_.clear();
  pivot_rows_.clear();
  basis_.clear();

  // Columns: monomial-factor-free paths of length <= bound, breadth first.
  auto by_source = pres_.quiver.arrows_by_source();
  std::deque<Path> queue;
  for (size_t v = 0; v < pres_.quiver.vertices.size(); ++v)
    queue.push_back(trivial_path(static_cast<int>(v)));
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    columns_.push_back(p);
    if (columns_.size() > opt_.column_cap)
      throw NotFiniteDimensional("column enumeration exceeded cap " +
                                 std::to_string(opt_.column_cap) + " at bound " +
                                 std::to_string(bound));
    if (p.length() >= bound) continue;
    for (int a : by_source[path_target(pres_.quiver, p)]) {
      Path ext = p;
      ext.word.push_back(a);
      bool dead = false;
      for (const auto &m : monomial_words_) {
        if (m.size() > ext.word.size()) continue;
        if (std::equal(m.begin(), m.end(), ext.word.end() - m.size())) { dead = true; break; }
      }
      if (!dead) queue.push_back(std::move(ext));
    }
  }
  std::sort(columns_.begin(), columns_.end(), canonical_less);
  for (size_t i = 0; i < columns_.size(); ++i) col_index_[columns_[i]] = static_cast<int>(i);

  // Group columns per endpoint for the u, v enumeration below.
  size_t nv = pres_.quiver.vertices.size();
  std::vector<std::vector<int>> cols_by_target(nv), cols_by_source(nv);
  for (size_t i = 0; i < columns_.size(); ++i) {
    cols_by_target[path_target(pres_.quiver, columns_[i])].push_back(static_cast<int>(i));
    cols_by_source[path_source(pres_.quiver, columns_[i])].push_back(static_cast<int>(i));
  }

  // Rows: truncations of u*r*v (v traversed first); terms that leave the
  // column set are in the ideal and are dropped.
  for (const Relation &r : binomials_) {
    int rsrc = path_source(pres_.quiver, r.terms.front().second);
    int rtgt = path_target(pres_.quiver, r.terms.front().second);
    long min_term = r.terms.front().second.length();
    for (const auto &[c, p] : r.terms) min_term = std::min<long>(min_term, p.length());
    for (int vi : cols_by_target[rsrc]) {
      const Path &v = columns_[vi];
      if (v.length() + min_term > bound) continue;
      for (int ui : cols_by_source[rtgt]) {
        const Path &u = columns_[ui];
        if (v.length() + min_term + u.length() > bound) continue;
        std::map<int, Rat> row;
        for (const auto &[c, p] : r.terms) {
          std::vector<int> w = v.word;
          w.insert(w.end(), p.word.begin(), p.word.end());
          w.insert(w.end(), u.word.begin(), u.word.end());
          if (static_cast<long>(w.size()) > bound || has_monomial_factor(w)) continue;
          Path q{v.base, std::move(w)};
          Rat &cell = row[col_index_.at(q)];
          cell += c;
          if (cell == 0) row.erase(col_index_.at(q));
        }
        row = reduce(std::move(row));
        if (!row.empty()) {
          int lead = row.rbegin()->first;
          Rat inv = row.rbegin()->second;
          for (auto &[col, coeff] : row) coeff /= inv;
          pivot_rows_.emplace(lead, std::move(row));
        }
      }
    }
  }

  dim_ = columns_.size() - pivot_rows_.size();
  for (size_t i = 0; i < columns_.size(); ++i)
    if (!pivot_rows_.count(static_cast<int>(i))) basis_.push_back(columns_[i]);

  // Certificate: every surviving length-N column lies in the row span, so
  // every longer path is in the ideal.
  for (const Path &b : basis_)
    if (b.length() >= bound) return false;
  return true;
}

PathSpaceModel::PathSpaceModel(const Presentation &P, EngineOptions opt)
    : pres_(P), opt_(opt) {
  validate_quiver(pres_.quiver);
  long max_term = 1;
  for (const Relation &r : pres_.relations) {
    if (r.terms.empty()) throw std::invalid_argument("relation with no terms");
    int src = path_source(pres_.quiver, r.terms.front().second);
    int tgt = path_target(pres_.quiver, r.terms.front().second);
    for (const auto &[c, p] : r.terms) {
      if (!path_valid(pres_.quiver, p) || p.trivial() || c == 0)
        throw std::invalid_argument("relation terms must be nonzero multiples of paths of positive length");
      if (path_source(pres_.quiver, p) != src || path_target(pres_.quiver, p) != tgt)
        throw std::invalid_argument("relation terms must be parallel");
      max_term = std::max<long>(max_term, p.length());
    }
    if (r.terms.size() == 1)
      monomial_words_.push_back(r.terms.front().second.word);
    else
      binomials_.push_back(r);
  }

  long bound = opt_.initial_bound > 0 ? opt_.initial_bound : max_term + 1;
  for (;;) {
    if (build(bound)) return;
    if (bound >= opt_.bound_cap)
      throw BoundCapExceeded("length certificate still failing at bound " +
                             std::to_string(bound));
    bound = std::min(bound * 2, opt_.bound_cap);
  }
}

bool PathSpaceModel::in_ideal(const std::vector<std::pair<Rat, Path>> &element) const {
  return normal_form(element).empty();
}

std::vector<std::pair<Rat, Path>> PathSpaceModel::normal_form(
    const std::vector<std::pair<Rat, Path>> &element) const {
  std::map<int, Rat> row;
  for (const auto &[c, p] : element) {
    if (!path_valid(pres_.quiver, p)) throw std::invalid_argument("element term is not a path");
    if (p.length() > bound_ || has_monomial_factor(p.word)) continue;
    int idx = col_index_.at(p);
    Rat &cell = row[idx];
    cell += c;
    if (cell == 0) row.erase(idx);
  }
  row = reduce(std::move(row));
  std::vector<std::pair<Rat, Path>> out;
  for (const auto &[idx, c] : row) out.emplace_back(c, columns_[idx]);
  return out;
}

bool PathSpaceModel::path_in_ideal(const Path &p) const {
  return in_ideal({{Rat(1), p}});
}

std::vector<Path> PathSpaceModel::minimal_zero_paths() const {
  std::vector<Path> zeros;
  auto contains_zero = [&](const std::vector<int> &w) {
    for (const Path &z : zeros)
      if (word_contains(w, z.word)) return true;
    return false;
  };
  auto by_source = pres_.quiver.arrows_by_source();
  std::deque<Path> queue;
  for (size_t a = 0; a < pres_.quiver.arrows.size(); ++a)
    queue.push_back(Path{pres_.quiver.arrows[a].source, {static_cast<int>(a)}});
  while (!queue.empty()) {
    Path p = std::move(queue.front());
    queue.pop_front();
    if (contains_zero(p.word)) continue;
    if (p.length() > bound_ || path_in_ideal(p)) {
      zeros.push_back(std::move(p));
      continue;
    }
    for (int a : by_source[path_target(pres_.quiver, p)]) {
      Path ext = p;
      ext.word.push_back(a);
      queue.push_back(std::move(ext));
    }
  }
  std::sort(zeros.begin(), zeros.end(), canonical_less);
  return zeros;
}

size_t dimension(const Presentation &P, EngineOptions opt) {
  return PathSpaceModel(P, opt).dimension();
}

namespace {

struct IsoSearch {
  const Presentation &p1, &p2;
  const PathSpaceModel &m1, &m2;
  std::vector<char> in_dom, in_img; // constrained arrow sets
  size_t budget;
  IsoResult result;

  std::vector<int> vmap, vused, amap, aused;

  bool tick() {
    ++result.nodes;
    if (result.nodes > budget) {
      result.budget_exhausted = true;
      return false;
    }
    return true;
  }

  static std::array<int, 3> vertex_sig(const Quiver &q, int v) {
    std::array<int, 3> s{0, 0, 0};
    for (const Arrow &a : q.arrows) {
      if (a.source == v) ++s[0];
      if (a.target == v) ++s[1];
      if (a.source == v && a.target == v) ++s[2];
    }
    return s;
  }

  Relation map_relation(const Relation &r) const {
    Relation out;
    out.kind = RelKind::external;
    for (const auto &[c, p] : r.terms) {
      Path q;
      q.base = vmap[p.base];
      for (int a : p.word) q.word.push_back(amap[a]);
      out.terms.emplace_back(c, std::move(q));
    }
    return out;
  }

  Relation unmap_relation(const Relation &r, const std::vector<int> &vinv,
                          const std::vector<int> &ainv) const {
    Relation out;
    out.kind = RelKind::external;
    for (const auto &[c, p] : r.terms) {
      Path q;
      q.base = vinv[p.base];
      for (int a : p.word) q.word.push_back(ainv[a]);
      out.terms.emplace_back(c, std::move(q));
    }
    return out;
  }

  bool verify() {
    for (const Relation &r : p1.relations)
      if (!m2.in_ideal(map_relation(r))) return false;
    std::vector<int> vinv(vmap.size()), ainv(amap.size());
    for (size_t i = 0; i < vmap.size(); ++i) vinv[vmap[i]] = static_cast<int>(i);
    for (size_t i = 0; i < amap.size(); ++i) ainv[amap[i]] = static_cast<int>(i);
    for (const Relation &r : p2.relations)
      if (!m1.in_ideal(unmap_relation(r, vinv, ainv))) return false;
    return true;
  }

  bool assign_arrows(size_t i) {
    if (i == p1.quiver.arrows.size()) return verify();
    const Arrow &a = p1.quiver.arrows[i];
    for (size_t b = 0; b < p2.quiver.arrows.size(); ++b) {
      if (aused[b]) continue;
      const Arrow &img = p2.quiver.arrows[b];
      if (img.source != vmap[a.source] || img.target != vmap[a.target]) continue;
      if (!in_dom.empty() && in_dom[i] != in_img[b]) continue;
      if (!tick()) return false;
      amap[i] = static_cast<int>(b);
      aused[b] = 1;
      if (assign_arrows(i + 1)) return true;
      if (result.budget_exhausted) return false;
      aused[b] = 0;
    }
    return false;
  }

  bool assign_vertices(size_t i) {
    if (i == p1.quiver.vertices.size()) {
      amap.assign(p1.quiver.arrows.size(), -1);
      aused.assign(p2.quiver.arrows.size(), 0);
      return assign_arrows(0);
    }
    auto sig = vertex_sig(p1.quiver, static_cast<int>(i));
    for (size_t w = 0; w < p2.quiver.vertices.size(); ++w) {
      if (vused[w]) continue;
      if (vertex_sig(p2.quiver, static_cast<int>(w)) != sig) continue;
      if (!tick()) return false;
      vmap[i] = static_cast<int>(w);
      vused[w] = 1;
      if (assign_vertices(i + 1)) return true;
      if (result.budget_exhausted) return false;
      vused[w] = 0;
    }
    return false;
  }
};

} // namespace

IsoResult presentations_isomorphic(const Presentation &P1, const Presentation &P2,
                                   const std::vector<int> *arrow_dom,
                                   const std::vector<int> *arrow_img, size_t budget,
                                   EngineOptions opt) {
  IsoResult fail;
  if (P1.quiver.vertices.size() != P2.quiver.vertices.size()) return fail;
  if (P1.quiver.arrows.size() != P2.quiver.arrows.size()) return fail;
  if ((arrow_dom == nullptr) != (arrow_img == nullptr))
    throw std::invalid_argument("arrow constraint requires both sets");
  if (arrow_dom && arrow_dom->size() != arrow_img->size()) return fail;

  PathSpaceModel m1(P1, opt), m2(P2, opt);
  if (m1.dimension() != m2.dimension()) return fail;

  IsoSearch s{P1, P2, m1, m2, {}, {}, budget, {}, {}, {}, {}, {}};
  if (arrow_dom) {
    s.in_dom.assign(P1.quiver.arrows.size(), 0);
    s.in_img.assign(P2.quiver.arrows.size(), 0);
    for (int a : *arrow_dom) s.in_dom.at(a) = 1;
    for (int a : *arrow_img) s.in_img.at(a) = 1;
  }
  s.vmap.assign(P1.quiver.vertices.size(), -1);
  s.vused.assign(P2.quiver.vertices.size(), 0);
  if (s.assign_vertices(0)) {
    s.result.found = true;
    s.result.vertex_map = s.vmap;
    s.result.arrow_map = s.amap;
  }
  return s.result;
}

} // namespace fbca
