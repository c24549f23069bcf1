#ifndef HADSCHEME_SCHEME_HPP
#define HADSCHEME_SCHEME_HPP

#include <functional>
#include <optional>
#include <vector>

#include "hadscheme/error.hpp"

namespace hadscheme {

// Homogeneous coherent configuration on points 0..n-1.  rel holds one label
// per ordered pair, label 0 is the identity relation.  star and tensor are
// filled in by verify_scheme; tensor[(s*r+t)*r+u] counts, for any (x,y) in
// relation u, the points z with (x,z) in s and (z,y) in t.
struct AssociationScheme {
  int n = 0;
  int r = 0;
  std::vector<int> rel;
  std::vector<int> star;
  std::vector<int> tensor;

  int rel_at(int x, int y) const { return rel[x * n + y]; }
  int c(int s, int t, int u) const { return tensor[(s * r + t) * r + u]; }
  int valency(int s) const { return c(s, star[s], 0); }
  std::vector<int> valencies() const {
    std::vector<int> v(r);
    for (int s = 0; s < r; ++s) v[s] = valency(s);
    return v;
  }
};

// Checks the defining axioms and computes star + tensor.
// Throws Error with code NotAPartition, BadIdentity, NotClosedUnderTranspose
// or NonConstantIntersection (message carries a witness).
AssociationScheme verify_scheme(int n, std::vector<int> rel);
AssociationScheme verify_scheme(const std::vector<std::vector<int>> &rel);

// Rank-2 scheme (rank 1 when n = 1).
AssociationScheme trivial_scheme(int n);

// Thin scheme of the group given by its multiplication table
// (table[x][g] = x*g, identity must be element 0).  Throws NotAGroup.
AssociationScheme thin_group_scheme(const std::vector<std::vector<int>> &table);

// Points (w,y) indexed y*|W| + w; within a fibre the W-relations apply,
// across fibres the label depends only on the Y-relation.
AssociationScheme wreath_product(const AssociationScheme &w,
                                 const AssociationScheme &y);

// Smallest closed relation set containing every supp(s s*), as sorted labels.
std::vector<int> thin_residue(const AssociationScheme &s);

// Relation bijections preserving identity, valency, star and all
// intersection numbers.  Callback may return true to stop the enumeration.
void for_each_algebraic_isomorphism(
    const AssociationScheme &s1, const AssociationScheme &s2,
    const std::function<bool(const std::vector<int> &)> &cb);

// First such bijection if one exists.
std::optional<std::vector<int>>
algebraic_isomorphism(const AssociationScheme &s1, const AssociationScheme &s2);

} // namespace hadscheme

#endif
