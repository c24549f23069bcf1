#ifndef HADSCHEME_BUILDER_HPP
#define HADSCHEME_BUILDER_HPP

#include <optional>
#include <vector>

#include "hadscheme/hadamard.hpp"
#include "hadscheme/scheme.hpp"

namespace hadscheme {

// Cover point: base point x doubled twice, side a (row side 0 / column
// side 1) and phase b (sign bit).  Index 4x + 2a + b.
struct CoverPoint {
  int base = 0;
  int side = 0;
  int phase = 0;
};

inline int cover_index(const CoverPoint &p) {
  return 4 * p.base + 2 * p.side + p.phase;
}
inline CoverPoint cover_point(int idx) {
  return {idx / 4, (idx / 2) & 1, idx & 1};
}

// Scheme on 4n points built from a base scheme of order n and a Hadamard
// matrix of the same order.  Labels: 0 identity, 1 antipode (same point and
// side, opposite phase), s+1 for base relation s between same-side points,
// then the two cross-side relations split by the sign test
// H^(side)[x][y] = (-1)^(phase sum).
struct CoverScheme {
  AssociationScheme scheme;
  int base_rank = 0;

  int antipode_label() const { return 1; }
  int lifted_label(int s) const { return s + 1; }
  int plus_label() const { return base_rank + 1; }
  int minus_label() const { return base_rank + 2; }
};

// Throws DimensionMismatch when orders differ; the returned scheme has
// passed verify_scheme.
CoverScheme build_cover_scheme(const AssociationScheme &base,
                               const HadamardMatrix &h);

// Cover of the rank-2 base: the plus relation is the Hadamard graph.
// Checks by BFS that the graph is bipartite with diameter 4 and that the
// distance classes are exactly identity, plus, lifted, minus, antipode.
// Throws DistanceMismatch otherwise.
CoverScheme hadamard_graph_scheme(const HadamardMatrix &h);

// For every lifted relation t and (y,x) in t there must be exactly one z
// with (x,z) antipodal and (y,z) in t.
bool fission_check(const CoverScheme &cs);

// If point_map sends every relation of src onto a single relation of dst,
// returns that relation bijection.
std::optional<std::vector<int>>
induced_relation_map(const AssociationScheme &src,
                     const AssociationScheme &dst,
                     const std::vector<int> &point_map);

// Point maps on the 4n cover points.
std::vector<int> cover_transpose_map(int n);        // side swap
std::vector<int> cover_row_flip_map(int n, int y);  // phase swap at (y, side 0)
std::vector<int> cover_col_flip_map(int n, int y);  // phase swap at (y, side 1)
std::vector<int> cover_negate_rows_map(int n);      // phase swap on side 0
std::vector<int> cover_negate_cols_map(int n);      // phase swap on side 1

// The five structural isomorphisms: side swap onto the cover of H^T, phase
// swaps onto covers of row/column negated H, and the two global phase swaps
// onto the cover of -H.
struct StandardIsoReport {
  bool transpose_map = false;
  bool row_negation_maps = false;
  bool col_negation_maps = false;
  bool negate_rows_map = false;
  bool negate_cols_map = false;
  bool all() const {
    return transpose_map && row_negation_maps && col_negation_maps &&
           negate_rows_map && negate_cols_map;
  }
};
StandardIsoReport standard_isomorphisms_check(const AssociationScheme &base,
                                              const HadamardMatrix &h);

} // namespace hadscheme

#endif
