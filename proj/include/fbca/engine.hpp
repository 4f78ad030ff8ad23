#pragma once

#include "fbca/presentation.hpp"

#include <map>
#include <optional>
#include <vector>

namespace fbca {

struct BoundCapExceeded : std::runtime_error {
  explicit BoundCapExceeded(const std::string &what) : std::runtime_error(what) {}
};

struct EngineOptions {
  long initial_bound = 0;    // 0: start at 1 + max relation term length
  long bound_cap = 64;       // doubling past this throws BoundCapExceeded
  size_t column_cap = 200000; // more columns at one bound: NotFiniteDimensional
};

// Linear model of kQ/I truncated at path length N. Columns are the paths of
// length <= N with no monomial relation as a factor; rows are truncations of
// u*r*v for the multi-term relations. N is doubled until every surviving
// length-N column reduces to zero, which certifies that all longer paths lie
// in the ideal.
class PathSpaceModel {
 public:
  explicit PathSpaceModel(const Presentation &P, EngineOptions opt = {});

  size_t dimension() const { return dim_; }
  long bound() const { return bound_; }
  const std::vector<Path> &columns() const { return columns_; }

  // Canonically least paths spanning the quotient (the non-pivot columns,
  // with row pivots taken on the canonically largest column).
  const std::vector<Path> &quotient_basis() const { return basis_; }

  // Membership of a path combination in the ideal. Terms with a monomial
  // factor or with length > bound() are in the ideal and are dropped.
  bool in_ideal(const std::vector<std::pair<Rat, Path>> &element) const;
  bool in_ideal(const Relation &r) const { return in_ideal(r.terms); }
  bool path_in_ideal(const Path &p) const;

  // Reduced representative over the columns; in_ideal(x) iff normal_form(x)
  // is empty. Terms sorted by canonical path order.
  std::vector<std::pair<Rat, Path>> normal_form(
      const std::vector<std::pair<Rat, Path>> &element) const;

  // Paths in the ideal none of whose proper factors is; finite because every
  // path of length bound() is in the ideal.
  std::vector<Path> minimal_zero_paths() const;

  const Presentation &presentation() const { return pres_; }

 private:
  bool has_monomial_factor(const std::vector<int> &word) const;
  bool build(long bound); // false when the length-N certificate fails
  std::map<int, Rat> reduce(std::map<int, Rat> row) const;

  Presentation pres_;
  EngineOptions opt_;
  long bound_ = 0;
  size_t dim_ = 0;
  std::vector<std::vector<int>> monomial_words_;
  std::vector<Relation> binomials_;
  std::vector<Path> columns_;
  std::map<Path, int, PathLess> col_index_;
  std::map<int, std::map<int, Rat>> pivot_rows_; // pivot column -> unit row
  std::vector<Path> basis_;
};

size_t dimension(const Presentation &P, EngineOptions opt = {});

struct IsoResult {
  bool found = false;
  std::vector<int> vertex_map; // P1 vertex -> P2 vertex
  std::vector<int> arrow_map;  // P1 arrow -> P2 arrow
  size_t nodes = 0;
  bool budget_exhausted = false;
};

// Searches for a quiver isomorphism carrying I1 onto I2 (verified by
// two-sided ideal membership of the mapped relation generators). When
// arrow_dom/arrow_img are given, the arrow bijection must map that arrow
// set of P1 onto that of P2.
IsoResult presentations_isomorphic(const Presentation &P1, const Presentation &P2,
                                   const std::vector<int> *arrow_dom = nullptr,
                                   const std::vector<int> *arrow_img = nullptr,
                                   size_t budget = 1000000, EngineOptions opt = {});

} // namespace fbca
