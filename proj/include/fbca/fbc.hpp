#pragma once

#include "fbca/quiver.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fbca {

struct MalformedFbc : std::runtime_error {
  explicit MalformedFbc(const std::string &what) : std::runtime_error(what) {}
};

// Fractional Brauer configuration (E, P, L, d). The Z-action is stored as a
// single permutation g; powers are taken modulo the orbit size, so infinite
// orbits are unrepresentable.
struct Fbc {
  std::vector<std::string> angles;
  std::vector<int> g, ginv;
  std::vector<int> p_of, l_of; // angle -> block id
  std::vector<std::vector<int>> p_blocks, l_blocks;
  std::vector<long> degree; // per angle

  // Optional display names for Q_E vertices/arrows (set by build_ea). When
  // empty, names default to the block's least angle.
  std::vector<std::string> p_labels, l_labels;

  std::vector<std::vector<int>> orbits;
  std::vector<int> orbit_of;

  int n_angles() const { return static_cast<int>(angles.size()); }
  long orbit_size(int e) const { return static_cast<long>(orbits[orbit_of[e]].size()); }
  int gpow(int e, long k) const; // g^k(e), k may be negative
  int angle_index(const std::string &name) const;
};

// Builds the derived tables and validates that g is a bijection and that P
// and L cover every angle exactly once (else MalformedFbc). d may be empty
// to request the trivial degree d(e) = |orbit(e)|.
Fbc make_fbc(std::vector<std::string> angles, const std::map<std::string, std::string> &g,
             const std::vector<std::vector<std::string>> &p_blocks,
             const std::vector<std::vector<std::string>> &l_blocks,
             const std::map<std::string, long> &d);

struct AxiomReport {
  struct Item {
    std::string axiom;
    bool pass;
    std::string witness; // empty on pass
  };
  std::vector<Item> items;
  bool all_pass() const;
  std::string summary() const;
};

// Verdicts for (f1)..(f6), each with a witness on failure. Witnesses report
// the lexicographically least offending pair.
AxiomReport check_axioms(const Fbc &E);

std::vector<int> nakayama(const Fbc &E); // sigma(e) = g^{d(e)}(e); requires (f3)
bool is_symmetric(const Fbc &E);

// d(v)/|v| as a reduced fraction for the given orbit index.
std::pair<long, long> f_degree(const Fbc &E, int orbit);

bool has_trivial_degree(const Fbc &E);

// Standard sequence (g^{len-1}(base), ..., g(base), base), 0 <= len <= d(base).
struct StdSeq {
  int base = 0;
  long len = 0;
  bool operator==(const StdSeq &o) const { return base == o.base && len == o.len; }
  bool operator<(const StdSeq &o) const { return base != o.base ? base < o.base : len < o.len; }
};

bool is_full(const Fbc &E, const StdSeq &p);

// The three-case definitions of ^p and p^; ^p·p and p·p^ are full sequences.
StdSeq wedge_left(const Fbc &E, const StdSeq &p);
StdSeq wedge_right(const Fbc &E, const StdSeq &p);

// The quiver Q_E: vertices are P-blocks, arrows are L-blocks with
// s(L(e)) = P(e), t(L(e)) = P(g(e)).
struct FbcQuiver {
  Quiver quiver;                  // vertex i <-> P-block i, arrow j <-> L-block j
  std::vector<std::vector<int>> special; // per angle: special path word (arrow ids)
};

// Requires (f1)-(f3); throws MalformedFbc when an L-block spans two source
// or target polygons ((f2) failure).
FbcQuiver build_quiver(const Fbc &E);

// L(p): the path in Q_E through the L-classes of the sequence's angles;
// trivial path at P(base) for the trivial sequence.
Path l_word(const Fbc &E, const FbcQuiver &Q, const StdSeq &p);

// All standard sequences grouped by l_word (including endpoints).
std::vector<std::vector<StdSeq>> sequence_classes(const Fbc &E, const FbcQuiver &Q);

struct F7Result {
  bool ok = true;
  std::string witness;
};

// Direct (f7) check: for every p == q, [[^p]^] = [[^q]^] as sets of
// standard sequences.
F7Result check_f7(const Fbc &E, const FbcQuiver &Q);

} // namespace fbca
