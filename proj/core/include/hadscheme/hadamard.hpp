#ifndef HADSCHEME_HADAMARD_HPP
#define HADSCHEME_HADAMARD_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hadscheme/error.hpp"
#include "hadscheme/perm.hpp"

namespace hadscheme {

// Sign matrix, one 64-bit word per row; bit y of rows[x] is set iff the
// entry at (x,y) is -1.
struct HadamardMatrix {
  int n = 0;
  std::vector<std::uint64_t> rows;

  int entry(int x, int y) const { return (rows[x] >> y) & 1 ? -1 : 1; }
  std::uint64_t row_mask() const {
    return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
  }
  // Row-major packing of the whole matrix, needs n*n <= 64.
  std::uint64_t packed() const;
  HadamardMatrix transposed() const;
  HadamardMatrix negated() const;

  bool operator==(const HadamardMatrix &) const = default;
};

HadamardMatrix hadamard_from_rows(int n, std::vector<std::uint64_t> rows);
HadamardMatrix hadamard_from_packed(int n, std::uint64_t word);

// Checks entries are +-1, the order is 1, 2 or a multiple of 4, and all
// row pairs are orthogonal.  Throws BadInput / BadOrder / NotOrthogonal.
HadamardMatrix verify_hadamard(const std::vector<std::vector<int>> &entries);
// Same checks on an already packed matrix.
void check_hadamard(const HadamardMatrix &h);

// Doubling construction, order 2^k, k <= 6.
HadamardMatrix sylvester(int k);

// A pair of signed permutation matrices (P,Q) acting by H -> P^-1 H Q.
// P is the permutation of row_perm followed by the row_signs diagonal,
// so (P^-1 H Q)[x][y] = rs[x]*cs[y]*H[row_perm[x]][col_perm[y]].
struct MonomialPair {
  Perm row_perm;
  std::uint64_t row_signs = 0; // bit x set iff sign -1
  Perm col_perm;
  std::uint64_t col_signs = 0;

  static MonomialPair identity(int n) {
    return {identity_perm(n), 0, identity_perm(n), 0};
  }
  bool operator==(const MonomialPair &) const = default;
};

// Acting by p and then by q is one action by compose_pairs(p, q).
MonomialPair compose_pairs(const MonomialPair &p, const MonomialPair &q);
MonomialPair inverse_pair(const MonomialPair &p);
HadamardMatrix apply_pair(const MonomialPair &p, const HadamardMatrix &h);
MonomialPair random_pair(int n, std::mt19937_64 &rng);

// Sign normal form: negate columns that start with -1, then rows that start
// with -1.  result[x][y] = row_signs[x]*h[x][y]*col_signs[y] (masks, bit set
// iff -1); applying the same signs again recovers the input.
struct NormalizeResult {
  HadamardMatrix h;
  std::uint64_t row_signs = 0;
  std::uint64_t col_signs = 0;
};
NormalizeResult normalize(const HadamardMatrix &h);

struct PermPairGroup {
  int n = 0;
  std::vector<std::pair<Perm, Perm>> elements;
  std::uint64_t order() const { return elements.size(); }
};

// All pairs of plain permutations (sigma, tau), both fixing x0, with
// H[sigma(x)][tau(y)] = H[x][y] everywhere.  Backtracking over sigma row by
// row with column-signature pruning; tau is forced at full depth.
PermPairGroup aut_pairs_fixing(const HadamardMatrix &h, int x0);

// Whether some signed permutation pair carries a onto b.  n <= 12.
bool equivalence_check(const HadamardMatrix &a, const HadamardMatrix &b);

} // namespace hadscheme

#endif
