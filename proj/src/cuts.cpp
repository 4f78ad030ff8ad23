#include "fbca/cuts.hpp"

#include "fbca/ea.hpp"
#include "fbca/presentation.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fbca {

static std::vector<int> least_rotation(const std::vector<int> &w) {
  std::vector<int> best = w;
  std::vector<int> cur = w;
  for (size_t i = 1; i < w.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

std::vector<SpecialCycleClass> special_cycle_classes(const Fbc &E, const FbcQuiver &Q) {
  if (!is_symmetric(E))
    throw NotSymmetric("special cycle classes require a symmetric f-BC");
  if (!has_trivial_degree(E))
    throw std::invalid_argument("special cycle classes require the trivial degree function");

  std::map<std::vector<int>, std::set<std::vector<int>>> by_rep;
  for (int e = 0; e < E.n_angles(); ++e) {
    const auto &w = Q.special[e];
    int src = Q.quiver.arrows[w.front()].source;
    int tgt = Q.quiver.arrows[w.back()].target;
    if (src != tgt) throw std::logic_error("special path is not a cycle");
    by_rep[least_rotation(w)].insert(w);
  }
  std::vector<SpecialCycleClass> out;
  for (auto &[rep, members] : by_rep) {
    SpecialCycleClass c;
    c.rep = rep;
    c.members.assign(members.begin(), members.end());
    std::set<int> arrows(rep.begin(), rep.end());
    c.arrows.assign(arrows.begin(), arrows.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return a.rep.size() != b.rep.size() ? a.rep.size() < b.rep.size() : a.rep < b.rep;
  });
  return out;
}

std::vector<CuttingSet> enumerate_cutting_sets(const std::vector<SpecialCycleClass> &classes) {
  std::vector<CuttingSet> out;
  std::vector<int> choice(classes.size(), 0);
  for (;;) {
    CuttingSet cs;
    for (size_t i = 0; i < classes.size(); ++i) cs.choice.push_back(classes[i].arrows[choice[i]]);
    std::set<int> distinct(cs.choice.begin(), cs.choice.end());
    cs.arrows.assign(distinct.begin(), distinct.end());
    cs.admissible = distinct.size() == classes.size();
    cs.exact = true;
    for (const auto &cl : classes) {
      // Occurrence count in the cycle word: an arrow repeated in one cycle
      // (possible in E_A special cycles) must not count as a single hit.
      int hits = 0;
      for (int a : cl.rep)
        if (distinct.count(a)) ++hits;
      if (hits != 1) { cs.exact = false; break; }
    }
    out.push_back(std::move(cs));
    size_t i = classes.size();
    while (i > 0) {
      if (++choice[i - 1] < static_cast<int>(classes[i - 1].arrows.size())) break;
      choice[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

CutResult cut_algebra(const Presentation &P, const std::vector<int> &D, EngineOptions opt) {
  Presentation cutP = P;
  for (int a : D) {
    Relation r;
    r.kind = RelKind::external;
    r.terms.emplace_back(Rat(1), Path{P.quiver.arrows.at(a).source, {a}});
    cutP.relations.push_back(std::move(r));
  }
  PathSpaceModel model(cutP, opt);

  CutResult out;
  out.dim = model.dimension();

  auto zeros = model.minimal_zero_paths();
  std::set<int> killed; // D plus any other arrow in the ideal
  std::vector<Path> long_zeros;
  for (const Path &z : zeros)
    (z.length() == 1 ? (void)killed.insert(z.word[0]) : (void)long_zeros.push_back(z));

  out.subquiver.vertices = P.quiver.vertices;
  std::vector<int> old_to_new(P.quiver.arrows.size(), -1);
  for (size_t a = 0; a < P.quiver.arrows.size(); ++a)
    if (!killed.count(static_cast<int>(a))) {
      old_to_new[a] = static_cast<int>(out.subquiver.arrows.size());
      out.subquiver.arrows.push_back(P.quiver.arrows[a]);
      out.arrow_map.push_back(static_cast<int>(a));
    }
  // Minimal zeros of length >= 2 avoid killed arrows (their proper factors
  // are nonzero), so they translate to the subquiver.
  for (const Path &z : long_zeros) {
    Path g = z;
    for (int &a : g.word) a = old_to_new[a];
    out.generators.push_back(std::move(g));
  }

  out.algebra = make_monomial_algebra(out.subquiver, out.generators);
  out.monomial = out.algebra.dimension() == out.dim;
  if (!out.monomial) {
    // Two monomially-nonzero parallel paths must collide modulo the ideal;
    // find a pair by normal form.
    std::map<std::string, std::pair<Path, Rat>> seen;
    for (const Path &p : out.algebra.basis) {
      Path orig = p;
      for (int &a : orig.word) a = out.arrow_map[a];
      auto nf = model.normal_form({{Rat(1), orig}});
      if (nf.empty()) continue;
      Rat lead = nf.back().first;
      std::ostringstream key;
      for (const auto &[c, q] : nf) {
        key << rat_to_string(c / lead) << "|" << q.base;
        for (int a : q.word) key << "," << a;
        key << ";";
      }
      auto [it, fresh] = seen.emplace(key.str(), std::make_pair(p, lead));
      if (!fresh) {
        Rat ratio = it->second.second / lead; // prev = ratio * p mod I
        std::string rhs = display(out.subquiver, p);
        if (ratio != 1) rhs = rat_to_string(ratio) + "·" + rhs;
        out.witness = display(out.subquiver, it->second.first) + " - " + rhs;
        break;
      }
    }
  }
  return out;
}

Presentation monomial_presentation(const MonomialAlgebra &A) {
  Presentation P;
  P.quiver = A.quiver;
  for (const Path &g : A.generators) {
    Relation r;
    r.kind = RelKind::external;
    r.terms.emplace_back(Rat(1), g);
    P.relations.push_back(std::move(r));
  }
  return P;
}

Presentation cut_presentation(const CutResult &cut) {
  Presentation P;
  P.quiver = cut.subquiver;
  for (const Path &g : cut.generators) {
    Relation r;
    r.kind = RelKind::external;
    r.terms.emplace_back(Rat(1), g);
    P.relations.push_back(std::move(r));
  }
  return P;
}

static bool check_admissible(Report &rep, const std::vector<SpecialCycleClass> &classes,
                             const std::vector<int> &D) {
  std::set<int> dset(D.begin(), D.end());
  bool sizes = dset.size() == classes.size();
  rep.add("|D| = t", sizes,
          std::to_string(dset.size()) + " vs t = " + std::to_string(classes.size()));
  bool one_each = true;
  std::string detail;
  for (size_t i = 0; i < classes.size(); ++i) {
    int hits = 0;
    for (int a : classes[i].rep)
      if (dset.count(a)) ++hits;
    if (hits != 1) {
      one_each = false;
      detail = "class " + std::to_string(i) + " meets D in " + std::to_string(hits) +
               " arrow occurrences";
      break;
    }
  }
  rep.add("one arrow occurrence of D per special cycle", one_each, detail);
  return sizes && one_each;
}

Report verify_theorem_5_4(const MonomialAlgebra &A, size_t iso_budget) {
  Report rep;
  EaResult ea = build_ea(A);
  FbcQuiver Q = build_quiver(ea.fbc);
  auto classes = special_cycle_classes(ea.fbc, Q);
  std::vector<int> D;
  for (size_t b = 0; b < ea.maximal_of_lblock.size(); ++b)
    if (ea.maximal_of_lblock[b] >= 0) D.push_back(static_cast<int>(b));

  check_admissible(rep, classes, D);

  Presentation pres = presentation(ea.fbc);
  CutResult cut = cut_algebra(pres, D);
  rep.add("cut algebra is monomial", cut.monomial, cut.witness);
  rep.add("dim cut = dim A", cut.dim == A.dimension(),
          std::to_string(cut.dim) + " vs " + std::to_string(A.dimension()));
  IsoResult iso =
      presentations_isomorphic(cut_presentation(cut), monomial_presentation(A), nullptr,
                               nullptr, iso_budget);
  rep.add("cut algebra isomorphic to A", iso.found,
          iso.budget_exhausted ? "search budget exhausted" : "no isomorphism found");
  return rep;
}

Report verify_theorem_5_5(const Fbc &E, const std::vector<int> &D, size_t iso_budget) {
  Report rep;
  FbcQuiver Q = build_quiver(E);
  auto classes = special_cycle_classes(E, Q);
  check_admissible(rep, classes, D);

  Presentation pres = presentation(E);
  CutResult cut = cut_algebra(pres, D);
  rep.add("cut algebra is monomial", cut.monomial, cut.witness);
  if (!cut.monomial) return rep;
  const MonomialAlgebra &A = cut.algebra;

  // Every special cycle splits at its unique D-arrow as p·alpha·q with
  // q·p (traversal: p then q) maximal in A.
  std::set<int> dset(D.begin(), D.end());
  std::vector<int> old_to_new(Q.quiver.arrows.size(), -1);
  for (size_t a = 0; a < cut.arrow_map.size(); ++a)
    old_to_new[cut.arrow_map[a]] = static_cast<int>(a);
  std::set<std::vector<int>> words(Q.special.begin(), Q.special.end());
  bool split_ok = true;
  std::string detail;
  for (const auto &w : words) {
    std::vector<size_t> hits;
    for (size_t i = 0; i < w.size(); ++i)
      if (dset.count(w[i])) hits.push_back(i);
    if (hits.size() != 1) {
      split_ok = false;
      detail = "special cycle has " + std::to_string(hits.size()) + " D-arrows";
      break;
    }
    size_t i = hits[0];
    Path m;
    m.base = Q.quiver.arrows[w[i]].target;
    for (size_t j = i + 1; j < w.size(); ++j) m.word.push_back(old_to_new[w[j]]);
    for (size_t j = 0; j < i; ++j) m.word.push_back(old_to_new[w[j]]);
    if (!std::binary_search(A.maximal.begin(), A.maximal.end(), m, PathLess{})) {
      split_ok = false;
      detail = display(A.quiver, m) + " is not a maximal path of the cut algebra";
      break;
    }
  }
  rep.add("special cycles split as p·α·q with qp maximal", split_ok, detail);

  EaResult eaA = build_ea(A);
  IsoResult iso = presentations_isomorphic(presentation(eaA.fbc), pres, nullptr, nullptr,
                                           iso_budget);
  rep.add("T(cut algebra) isomorphic to Lambda", iso.found,
          iso.budget_exhausted ? "search budget exhausted" : "no isomorphism found");
  return rep;
}

Report bijection_harness(const std::vector<MonomialAlgebra> &algebras,
                         const std::vector<std::pair<Fbc, std::vector<int>>> &pairs,
                         size_t iso_budget) {
  Report rep;
  for (size_t i = 0; i < algebras.size(); ++i) {
    Report r = verify_theorem_5_4(algebras[i], iso_budget);
    rep.add("phi^{-1}(phi(A[" + std::to_string(i) + "])) = A", r.all_pass(),
            r.all_pass() ? "" : r.summary());
  }
  for (size_t j = 0; j < pairs.size(); ++j) {
    const auto &[E, D] = pairs[j];
    std::string tag = "phi(phi^{-1}((E,D)[" + std::to_string(j) + "])) = (E,D)";
    Presentation pres = presentation(E);
    CutResult cut = cut_algebra(pres, D);
    if (!cut.monomial) {
      rep.add(tag, false, "cut algebra is not monomial: " + cut.witness);
      continue;
    }
    EaResult eaA = build_ea(cut.algebra);
    std::vector<int> Dprime;
    for (size_t b = 0; b < eaA.maximal_of_lblock.size(); ++b)
      if (eaA.maximal_of_lblock[b] >= 0) Dprime.push_back(static_cast<int>(b));
    IsoResult iso = presentations_isomorphic(presentation(eaA.fbc), pres, &Dprime, &D,
                                             iso_budget);
    rep.add(tag, iso.found,
            iso.budget_exhausted ? "search budget exhausted" : "no D'-to-D isomorphism found");
  }
  return rep;
}

} // namespace fbca
