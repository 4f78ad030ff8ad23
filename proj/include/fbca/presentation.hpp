#pragma once

#include "fbca/fbc.hpp"
#include "fbca/quiver.hpp"
#include "fbca/rational.hpp"

#include <string>
#include <vector>

namespace fbca {

enum class RelKind { type1, type2, type3, r1prime, r2prime, external };

std::string rel_kind_name(RelKind k);

// A rational combination of pairwise parallel paths of positive length.
// Binomials carry coefficients +1, -1; monomials a single +1 term.
struct Relation {
  std::vector<std::pair<Rat, Path>> terms;
  RelKind kind = RelKind::external;
};

struct Presentation {
  Quiver quiver;
  std::vector<Relation> relations;
};

bool relation_less(const Relation &a, const Relation &b); // deterministic order

// Type-1 binomials: truncated special paths of angle pairs sharing a polygon
// whose top k arrows agree. Identical-word binomials are skipped.
std::vector<Relation> relations_r1(const Fbc &E, const FbcQuiver &Q);

// Type-2 monomials: factor-minimal composable words whose running
// g-translate intersection is empty.
std::vector<Relation> relations_r2(const Fbc &E, const FbcQuiver &Q);

// Type-3 monomials: the length d(e)+1 word over each angle's special path.
std::vector<Relation> relations_r3(const Fbc &E, const FbcQuiver &Q);

// The primed generating set: (R1') binomials and (R2') minimal words that
// are not factors of any special path while every proper factor is.
std::vector<Relation> relations_r1prime(const Fbc &E, const FbcQuiver &Q);
std::vector<Relation> relations_r2prime(const Fbc &E, const FbcQuiver &Q);

struct NotSymmetric : std::runtime_error {
  explicit NotSymmetric(const std::string &what) : std::runtime_error(what) {}
};

struct Sf7Result {
  bool ok = true;
  std::string witness;
};

// The symmetric-case type-S criterion on pairs of type-1 binomials.
// Throws NotSymmetric when the Nakayama automorphism is not the identity.
Sf7Result check_sf7(const Fbc &E, const FbcQuiver &Q);

struct NotTypeS : std::runtime_error {
  explicit NotTypeS(const std::string &what) : std::runtime_error(what) {}
};

// kQ_E / I_E with I_E generated by R1 u R2 u R3 (primed=false) or by
// R1' u R2'. Verifies (f1)-(f6) and the type-S condition first; throws
// MalformedFbc / NotTypeS on failure unless require_type_s is false.
Presentation presentation(const Fbc &E, bool primed = false, bool require_type_s = true);

std::string display_relation(const Quiver &q, const Relation &r);

} // namespace fbca
