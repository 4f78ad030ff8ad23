#include "fbca/presentation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fbca {

std::string rel_kind_name(RelKind k) {
  switch (k) {
    case RelKind::type1: return "type1";
    case RelKind::type2: return "type2";
    case RelKind::type3: return "type3";
    case RelKind::r1prime: return "r1prime";
    case RelKind::r2prime: return "r2prime";
    case RelKind::external: return "external";
  }
  return "?";
}

bool relation_less(const Relation &a, const Relation &b) {
  if (a.terms.size() != b.terms.size()) return a.terms.size() < b.terms.size();
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].second != b.terms[i].second)
      return canonical_less(a.terms[i].second, b.terms[i].second);
    if (a.terms[i].first != b.terms[i].first) return a.terms[i].first < b.terms[i].first;
  }
  return false;
}

static Relation monomial_relation(const Quiver &q, std::vector<int> word, RelKind kind) {
  Relation r;
  r.kind = kind;
  Path p;
  p.word = std::move(word);
  p.base = q.arrows[p.word.front()].source;
  r.terms.emplace_back(Rat(1), std::move(p));
  return r;
}

static Relation binomial_relation(const Quiver &q, std::vector<int> w1, std::vector<int> w2,
                                  RelKind kind) {
  Path p1{q.arrows[w1.front()].source, std::move(w1)};
  Path p2{q.arrows[w2.front()].source, std::move(w2)};
  Relation r;
  r.kind = kind;
  if (canonical_less(p2, p1)) std::swap(p1, p2);
  r.terms.emplace_back(Rat(1), std::move(p1));
  r.terms.emplace_back(Rat(-1), std::move(p2));
  return r;
}

static std::vector<Relation> sorted_unique(std::vector<Relation> rels) {
  std::sort(rels.begin(), rels.end(), relation_less);
  rels.erase(std::unique(rels.begin(), rels.end(),
                         [](const Relation &a, const Relation &b) {
                           return !relation_less(a, b) && !relation_less(b, a);
                         }),
             rels.end());
  return rels;
}

static std::vector<Relation> r1_core(const Fbc &E, const FbcQuiver &Q, RelKind kind) {
  std::vector<Relation> out;
  int n = E.n_angles();
  for (int e = 0; e < n; ++e)
    for (int h = e + 1; h < n; ++h) {
      if (E.p_of[e] != E.p_of[h]) continue;
      long de = E.degree[e], dh = E.degree[h];
      for (long k = 0; k < std::min(de, dh); ++k) {
        if (k > 0 && E.l_of[E.gpow(e, de - k)] != E.l_of[E.gpow(h, dh - k)]) break;
        std::vector<int> we(Q.special[e].begin(), Q.special[e].begin() + (de - k));
        std::vector<int> wh(Q.special[h].begin(), Q.special[h].begin() + (dh - k));
        if (we == wh) continue;
        out.push_back(binomial_relation(Q.quiver, we, wh, kind));
      }
    }
  return sorted_unique(std::move(out));
}

std::vector<Relation> relations_r1(const Fbc &E, const FbcQuiver &Q) {
  return r1_core(E, Q, RelKind::type1);
}

std::vector<Relation> relations_r1prime(const Fbc &E, const FbcQuiver &Q) {
  return r1_core(E, Q, RelKind::r1prime);
}

std::vector<Relation> relations_r2(const Fbc &E, const FbcQuiver &Q) {
  // Carry the running intersection I_n = /\ g^{n-i}(L(e_i)); extending the
  // word by arrow a gives I_{n+1} = g(I_n) /\ members(a).
  long maxlen = 1;
  for (int e = 0; e < E.n_angles(); ++e) maxlen = std::max(maxlen, E.degree[e] + 1);

  auto members = [&](int arrow) {
    std::set<int> s(E.l_blocks[arrow].begin(), E.l_blocks[arrow].end());
    return s;
  };
  auto translate = [&](const std::set<int> &s) {
    std::set<int> out;
    for (int e : s) out.insert(E.g[e]);
    return out;
  };
  auto intersect = [](const std::set<int> &a, const std::set<int> &b) {
    std::set<int> out;
    for (int x : a)
      if (b.count(x)) out.insert(x);
    return out;
  };
  auto word_intersection = [&](const std::vector<int> &word) {
    std::set<int> acc = members(word.front());
    for (size_t i = 1; i < word.size(); ++i) acc = intersect(translate(acc), members(word[i]));
    return acc;
  };

  auto by_source = Q.quiver.arrows_by_source();
  std::vector<Relation> out;
  struct State {
    std::vector<int> word;
    std::set<int> inter;
  };
  std::deque<State> queue;
  for (size_t a = 0; a < Q.quiver.arrows.size(); ++a)
    queue.push_back({{static_cast<int>(a)}, members(static_cast<int>(a))});
  while (!queue.empty()) {
    State st = std::move(queue.front());
    queue.pop_front();
    if (st.inter.empty()) {
      // Proper factors are the prefix (nonempty by construction) and the
      // suffix; any other factor is contained in one of those.
      std::vector<int> suffix(st.word.begin() + 1, st.word.end());
      if (suffix.empty() || !word_intersection(suffix).empty())
        out.push_back(monomial_relation(Q.quiver, st.word, RelKind::type2));
      continue;
    }
    if (static_cast<long>(st.word.size()) >= maxlen) continue; // covered by R3 multiples
    int at = Q.quiver.arrows[st.word.back()].target;
    for (int a : by_source[at]) {
      State next;
      next.word = st.word;
      next.word.push_back(a);
      next.inter = intersect(translate(st.inter), members(a));
      queue.push_back(std::move(next));
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Relation> relations_r3(const Fbc &E, const FbcQuiver &Q) {
  std::vector<Relation> out;
  for (int e = 0; e < E.n_angles(); ++e) {
    std::vector<int> word;
    for (long i = 0; i <= E.degree[e]; ++i) word.push_back(E.l_of[E.gpow(e, i)]);
    out.push_back(monomial_relation(Q.quiver, word, RelKind::type3));
  }
  return sorted_unique(std::move(out));
}

std::vector<Relation> relations_r2prime(const Fbc &, const FbcQuiver &Q) {
  std::set<std::vector<int>> factors;
  for (const auto &sp : Q.special)
    for (size_t i = 0; i < sp.size(); ++i)
      for (size_t len = 1; i + len <= sp.size(); ++len)
        factors.insert(std::vector<int>(sp.begin() + i, sp.begin() + i + len));

  auto by_source = Q.quiver.arrows_by_source();
  std::vector<Relation> out;
  std::deque<std::vector<int>> queue;
  for (size_t a = 0; a < Q.quiver.arrows.size(); ++a) {
    std::vector<int> w{static_cast<int>(a)};
    if (factors.count(w))
      queue.push_back(std::move(w));
    else
      out.push_back(monomial_relation(Q.quiver, w, RelKind::r2prime));
  }
  while (!queue.empty()) {
    std::vector<int> w = std::move(queue.front());
    queue.pop_front();
    int at = Q.quiver.arrows[w.back()].target;
    for (int a : by_source[at]) {
      std::vector<int> next = w;
      next.push_back(a);
      if (factors.count(next)) {
        queue.push_back(std::move(next));
      } else {
        std::vector<int> suffix(next.begin() + 1, next.end());
        if (factors.count(suffix))
          out.push_back(monomial_relation(Q.quiver, next, RelKind::r2prime));
      }
    }
  }
  return sorted_unique(std::move(out));
}

Sf7Result check_sf7(const Fbc &E, const FbcQuiver &Q) {
  if (!is_symmetric(E))
    throw NotSymmetric("(sf7) requires a symmetric f-BC (Nakayama automorphism = id)");

  std::set<std::vector<int>> special(Q.special.begin(), Q.special.end());
  auto rels = relations_r1(E, Q);

  auto joined = [&](const Path &later, const Path &earlier) {
    std::vector<int> w = earlier.word;
    w.insert(w.end(), later.word.begin(), later.word.end());
    return w;
  };
  auto composable = [&](const Path &later, const Path &earlier) {
    return path_target(Q.quiver, earlier) == path_source(Q.quiver, later);
  };

  for (const Relation &r1 : rels)
    for (const Relation &r2 : rels)
      for (int flip1 = 0; flip1 < 2; ++flip1)
        for (int flip2 = 0; flip2 < 2; ++flip2) {
          const Path &p = r1.terms[flip1].second;
          const Path &q = r1.terms[1 - flip1].second;
          const Path &pp = r2.terms[flip2].second;
          const Path &qq = r2.terms[1 - flip2].second;
          if (!composable(p, pp)) continue;
          if (special.count(joined(p, pp)) && special.count(joined(q, pp)) &&
              special.count(joined(p, qq)) && !special.count(joined(q, qq)))
            return {false, display(Q.quiver, p) + " - " + display(Q.quiver, q) + " and " +
                               display(Q.quiver, pp) + " - " + display(Q.quiver, qq) +
                               ": three products are special cycles but " +
                               display(Q.quiver, q) + "·" + display(Q.quiver, qq) + " is not"};
        }
  return {true, ""};
}

Presentation presentation(const Fbc &E, bool primed, bool require_type_s) {
  auto axioms = check_axioms(E);
  if (!axioms.all_pass()) throw MalformedFbc("axioms (f1)-(f6) fail:\n" + axioms.summary());
  FbcQuiver Q = build_quiver(E);
  if (require_type_s) {
    if (is_symmetric(E)) {
      auto sf7 = check_sf7(E, Q);
      if (!sf7.ok) throw NotTypeS("(sf7) fails: " + sf7.witness);
    } else {
      auto f7 = check_f7(E, Q);
      if (!f7.ok) throw NotTypeS("(f7) fails: " + f7.witness);
    }
  }
  std::vector<Relation> rels;
  auto append = [&](std::vector<Relation> v) {
    rels.insert(rels.end(), v.begin(), v.end());
  };
  if (primed) {
    append(relations_r1prime(E, Q));
    append(relations_r2prime(E, Q));
  } else {
    append(relations_r1(E, Q));
    append(relations_r2(E, Q));
    append(relations_r3(E, Q));
  }
  return {Q.quiver, std::move(rels)};
}

std::string display_relation(const Quiver &q, const Relation &r) {
  std::string out;
  for (size_t i = 0; i < r.terms.size(); ++i) {
    const auto &[c, p] = r.terms[i];
    if (i == 0) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += rat_to_string(c) + "·";
    } else {
      out += c < 0 ? " - " : " + ";
      Rat a = abs(c);
      if (a != 1) out += rat_to_string(a) + "·";
    }
    out += display(q, p);
  }
  return out;
}

} // namespace fbca
