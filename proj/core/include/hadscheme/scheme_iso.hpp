#ifndef HADSCHEME_SCHEME_ISO_HPP
#define HADSCHEME_SCHEME_ISO_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hadscheme/scheme.hpp"

namespace hadscheme {

struct SchemeIso {
  std::vector<int> point_map;    // point of s1 -> point of s2
  std::vector<int> relation_map; // label of s1 -> label of s2
};

// Combinatorial isomorphism search, order <= 32.  Candidate relation
// bijections come from the algebraic test; for each, points are matched by
// individualization with joint colour refinement over relation-indexed
// neighbour colour multisets.
std::optional<SchemeIso> scheme_isomorphic(const AssociationScheme &s1,
                                           const AssociationScheme &s2);

// Number of point permutations fixing every relation, order <= 16.
// Brute force below 9 points, otherwise orbit-stabilizer style counting
// driven by the same refinement machinery.
std::uint64_t scheme_aut_order(const AssociationScheme &s);

} // namespace hadscheme

#endif
