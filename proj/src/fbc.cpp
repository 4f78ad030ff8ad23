#include "fbca/fbc.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fbca {

int Fbc::gpow(int e, long k) const {
  long n = orbit_size(e);
  long r = ((k % n) + n) % n;
  int out = e;
  for (long i = 0; i < r; ++i) out = g[out];
  return out;
}

int Fbc::angle_index(const std::string &name) const {
  for (size_t i = 0; i < angles.size(); ++i)
    if (angles[i] == name) return static_cast<int>(i);
  return -1;
}

Fbc make_fbc(std::vector<std::string> angles, const std::map<std::string, std::string> &g,
             const std::vector<std::vector<std::string>> &p_blocks,
             const std::vector<std::vector<std::string>> &l_blocks,
             const std::map<std::string, long> &d) {
  Fbc E;
  E.angles = std::move(angles);
  int n = E.n_angles();
  {
    std::set<std::string> seen(E.angles.begin(), E.angles.end());
    if (static_cast<int>(seen.size()) != n) throw MalformedFbc("duplicate angle names");
  }

  auto idx = [&](const std::string &name) {
    int i = E.angle_index(name);
    if (i < 0) throw MalformedFbc("unknown angle: " + name);
    return i;
  };

  E.g.assign(n, -1);
  for (const auto &[from, to] : g) E.g[idx(from)] = idx(to);
  std::vector<int> hit(n, 0);
  for (int e = 0; e < n; ++e) {
    if (E.g[e] < 0) throw MalformedFbc("g undefined on angle " + E.angles[e]);
    hit[E.g[e]]++;
  }
  for (int e = 0; e < n; ++e)
    if (hit[e] != 1) throw MalformedFbc("g is not a bijection (at angle " + E.angles[e] + ")");
  E.ginv.assign(n, -1);
  for (int e = 0; e < n; ++e) E.ginv[E.g[e]] = e;

  auto load_partition = [&](const std::vector<std::vector<std::string>> &blocks,
                            std::vector<int> &of, std::vector<std::vector<int>> &out,
                            const char *what) {
    of.assign(n, -1);
    for (const auto &block : blocks) {
      std::vector<int> members;
      for (const auto &name : block) {
        int e = idx(name);
        if (of[e] >= 0) throw MalformedFbc(std::string(what) + " blocks overlap at " + name);
        of[e] = static_cast<int>(out.size());
        members.push_back(e);
      }
      if (members.empty()) throw MalformedFbc(std::string(what) + " contains an empty block");
      out.push_back(std::move(members));
    }
    for (int e = 0; e < n; ++e)
      if (of[e] < 0) throw MalformedFbc(std::string(what) + " does not cover angle " + E.angles[e]);
  };
  load_partition(p_blocks, E.p_of, E.p_blocks, "P");
  load_partition(l_blocks, E.l_of, E.l_blocks, "L");

  // Orbits of <g>.
  E.orbit_of.assign(n, -1);
  for (int e = 0; e < n; ++e) {
    if (E.orbit_of[e] >= 0) continue;
    std::vector<int> orbit;
    int cur = e;
    do {
      E.orbit_of[cur] = static_cast<int>(E.orbits.size());
      orbit.push_back(cur);
      cur = E.g[cur];
    } while (cur != e);
    E.orbits.push_back(std::move(orbit));
  }

  E.degree.assign(n, 0);
  if (d.empty()) {
    for (int e = 0; e < n; ++e) E.degree[e] = E.orbit_size(e); // trivial degree
  } else {
    for (int e = 0; e < n; ++e) {
      auto it = d.find(E.angles[e]);
      if (it == d.end()) throw MalformedFbc("d undefined on angle " + E.angles[e]);
      if (it->second < 1) throw MalformedFbc("d must be positive at angle " + E.angles[e]);
      E.degree[e] = it->second;
    }
  }
  return E;
}

bool AxiomReport::all_pass() const {
  for (const auto &it : items)
    if (!it.pass) return false;
  return true;
}

std::string AxiomReport::summary() const {
  std::string out;
  for (const auto &it : items) {
    out += it.axiom;
    out += it.pass ? ": pass" : (": FAIL (" + it.witness + ")");
    out += "\n";
  }
  return out;
}

static std::vector<int> full_word(const Fbc &E, int e) {
  std::vector<int> w;
  for (long i = 0; i < E.degree[e]; ++i) w.push_back(E.l_of[E.gpow(e, i)]);
  return w;
}

AxiomReport check_axioms(const Fbc &E) {
  AxiomReport rep;
  int n = E.n_angles();
  auto add = [&](const std::string &axiom, bool pass, const std::string &witness) {
    rep.items.push_back({axiom, pass, pass ? "" : witness});
  };

  // (f1) L(e) subset of P(e)
  {
    bool ok = true;
    std::string w;
    for (int e = 0; e < n && ok; ++e)
      for (int h : E.l_blocks[E.l_of[e]])
        if (E.p_of[h] != E.p_of[e]) {
          ok = false;
          w = "L(" + E.angles[e] + ") contains " + E.angles[h] + " outside P(" + E.angles[e] + ")";
          break;
        }
    add("f1", ok, w);
  }

  // (f2) g maps each L-block into a single P-block
  {
    bool ok = true;
    std::string w;
    for (const auto &block : E.l_blocks) {
      int target = E.p_of[E.g[block.front()]];
      for (int h : block)
        if (E.p_of[E.g[h]] != target) {
          ok = false;
          w = "angles " + E.angles[block.front()] + ", " + E.angles[h] +
              " share an L-block but P(g(.)) differs";
          break;
        }
      if (!ok) break;
    }
    add("f2", ok, w);
  }

  // (f3) d constant on orbits
  bool f3 = true;
  {
    std::string w;
    for (const auto &orbit : E.orbits) {
      long d0 = E.degree[orbit.front()];
      for (int h : orbit)
        if (E.degree[h] != d0) {
          f3 = false;
          w = "orbit of " + E.angles[orbit.front()] + " has non-constant d";
          break;
        }
      if (!f3) break;
    }
    add("f3", f3, w);
  }

  // (f4)/(f5): P(e1)=P(e2) <=> P(sigma e1)=P(sigma e2), likewise for L.
  // sigma needs (f3) to be well-defined on orbits; check pairwise regardless
  // using each angle's own degree.
  {
    bool ok4 = true, ok5 = true;
    std::string w4, w5;
    for (int e1 = 0; e1 < n; ++e1)
      for (int e2 = e1 + 1; e2 < n; ++e2) {
        int s1 = E.gpow(e1, E.degree[e1]);
        int s2 = E.gpow(e2, E.degree[e2]);
        if (ok4 && (E.p_of[e1] == E.p_of[e2]) != (E.p_of[s1] == E.p_of[s2])) {
          ok4 = false;
          w4 = "pair (" + E.angles[e1] + ", " + E.angles[e2] + ")";
        }
        if (ok5 && (E.l_of[e1] == E.l_of[e2]) != (E.l_of[s1] == E.l_of[s2])) {
          ok5 = false;
          w5 = "pair (" + E.angles[e1] + ", " + E.angles[e2] + ")";
        }
      }
    add("f4", ok4, w4);
    add("f5", ok5, w5);
  }

  // (f6) no full-sequence arrow word is a proper contiguous factor of another.
  {
    bool ok = true;
    std::string w;
    for (int e = 0; e < n && ok; ++e) {
      auto we = full_word(E, e);
      for (int h = 0; h < n; ++h) {
        auto wh = full_word(E, h);
        if (we.size() < wh.size() && word_contains(wh, we)) {
          ok = false;
          w = "special path of " + E.angles[e] + " is a proper factor of that of " + E.angles[h];
          break;
        }
      }
    }
    add("f6", ok, w);
  }
  return rep;
}

std::vector<int> nakayama(const Fbc &E) {
  std::vector<int> sigma(E.n_angles());
  for (int e = 0; e < E.n_angles(); ++e) sigma[e] = E.gpow(e, E.degree[e]);
  return sigma;
}

bool is_symmetric(const Fbc &E) {
  auto sigma = nakayama(E);
  for (int e = 0; e < E.n_angles(); ++e)
    if (sigma[e] != e) return false;
  return true;
}

std::pair<long, long> f_degree(const Fbc &E, int orbit) {
  long d = E.degree[E.orbits[orbit].front()];
  long sz = static_cast<long>(E.orbits[orbit].size());
  long g = std::gcd(d, sz);
  return {d / g, sz / g};
}

bool has_trivial_degree(const Fbc &E) {
  for (int e = 0; e < E.n_angles(); ++e)
    if (E.degree[e] != E.orbit_size(e)) return false;
  return true;
}

bool is_full(const Fbc &E, const StdSeq &p) { return p.len == E.degree[p.base]; }

StdSeq wedge_left(const Fbc &E, const StdSeq &p) {
  long d = E.degree[p.base];
  if (p.len == 0) return {p.base, d};
  if (p.len == d) return {E.gpow(p.base, d), 0};
  return {E.gpow(p.base, p.len), d - p.len};
}

StdSeq wedge_right(const Fbc &E, const StdSeq &p) {
  long d = E.degree[p.base];
  if (p.len == 0) return {E.gpow(p.base, -d), d};
  if (p.len == d) return {p.base, 0};
  return {E.gpow(p.base, p.len - d), d - p.len};
}

static std::string least_angle(const Fbc &E, const std::vector<int> &block) {
  std::string best = E.angles[block.front()];
  for (int e : block) best = std::min(best, E.angles[e]);
  return best;
}

FbcQuiver build_quiver(const Fbc &E) {
  FbcQuiver out;
  for (size_t b = 0; b < E.p_blocks.size(); ++b) {
    std::string name = b < E.p_labels.size() && !E.p_labels[b].empty()
                           ? E.p_labels[b]
                           : least_angle(E, E.p_blocks[b]);
    out.quiver.vertices.push_back(name);
  }
  for (size_t b = 0; b < E.l_blocks.size(); ++b) {
    const auto &block = E.l_blocks[b];
    int src = E.p_of[block.front()];
    int tgt = E.p_of[E.g[block.front()]];
    for (int e : block) {
      if (E.p_of[e] != src || E.p_of[E.g[e]] != tgt)
        throw MalformedFbc("L-block of " + E.angles[block.front()] +
                           " spans two source or target polygons");
    }
    std::string name = b < E.l_labels.size() && !E.l_labels[b].empty()
                           ? E.l_labels[b]
                           : "L(" + least_angle(E, block) + ")";
    out.quiver.arrows.push_back({name, src, tgt, name});
  }
  validate_quiver(out.quiver);
  for (int e = 0; e < E.n_angles(); ++e) out.special.push_back(full_word(E, e));
  return out;
}

Path l_word(const Fbc &E, const FbcQuiver &Q, const StdSeq &p) {
  (void)Q;
  Path out;
  out.base = E.p_of[p.base];
  for (long i = 0; i < p.len; ++i) out.word.push_back(E.l_of[E.gpow(p.base, i)]);
  return out;
}

std::vector<std::vector<StdSeq>> sequence_classes(const Fbc &E, const FbcQuiver &Q) {
  std::map<Path, std::vector<StdSeq>, PathLess> by_word;
  for (int e = 0; e < E.n_angles(); ++e)
    for (long n = 0; n <= E.degree[e]; ++n) by_word[l_word(E, Q, {e, n})].push_back({e, n});
  std::vector<std::vector<StdSeq>> out;
  for (auto &[word, members] : by_word) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

F7Result check_f7(const Fbc &E, const FbcQuiver &Q) {
  auto classes = sequence_classes(E, Q);
  std::map<StdSeq, int> class_of;
  for (size_t c = 0; c < classes.size(); ++c)
    for (const StdSeq &s : classes[c]) class_of[s] = static_cast<int>(c);

  auto closure = [&](const std::set<StdSeq> &xs) {
    std::set<StdSeq> out;
    for (const StdSeq &s : xs) {
      const auto &cls = classes[class_of.at(s)];
      out.insert(cls.begin(), cls.end());
    }
    return out;
  };
  auto double_wedge = [&](const StdSeq &p) {
    // [[^p]^]
    std::set<StdSeq> x = closure({wedge_left(E, p)});
    std::set<StdSeq> y;
    for (const StdSeq &s : x) y.insert(wedge_right(E, s));
    return closure(y);
  };

  for (const auto &cls : classes) {
    auto ref = double_wedge(cls.front());
    for (size_t i = 1; i < cls.size(); ++i) {
      if (double_wedge(cls[i]) != ref) {
        auto name = [&](const StdSeq &s) {
          return "(" + E.angles[s.base] + ", n=" + std::to_string(s.len) + ")";
        };
        return {false, name(cls.front()) + " == " + name(cls[i]) + " but [[^p]^] differ"};
      }
    }
  }
  return {true, ""};
}

} // namespace fbca
