#ifndef HADSCHEME_ACTIONS_HPP
#define HADSCHEME_ACTIONS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hadscheme/hadamard.hpp"
#include "hadscheme/scheme.hpp"

namespace hadscheme {

// Explicit element list; degree <= 8 keeps every group below |Sym(8)|.
struct PermGroup {
  int degree = 0;
  std::vector<Perm> elements; // sorted
  std::uint64_t order() const { return elements.size(); }
  bool contains(const Perm &p) const;
};

// Point permutations preserving every relation (DegreeTooLarge when n > 8).
PermGroup aut_group(const AssociationScheme &s);
// Point permutations inducing some permutation of the relations.
PermGroup iso_group(const AssociationScheme &s);

// Greedy: add elements not yet generated, close, repeat.
std::vector<Perm> small_generating_set(const PermGroup &g);

// Whether h2 or its transpose can be written as signed-permuted h1 with both
// permutation parts in iso_group and their ratio in aut_group.  The sign
// vectors exist iff the entrywise product of the permuted h1 with h2 has
// rank one over signs, which reduces to an xor test per row.
bool similar_check(const HadamardMatrix &h1, const HadamardMatrix &h2,
                   const AssociationScheme &s);
bool similar_check(const HadamardMatrix &h1, const HadamardMatrix &h2,
                   const PermGroup &aut, const PermGroup &iso);

enum class OrbitMode { full, normalized };

struct OrbitOptions {
  OrbitMode mode = OrbitMode::full;
  int threads = 1;
};

// Orbits on one equivalence class of Hadamard matrices under the pairs whose
// permutation parts lie in iso_group with ratio in aut_group, with sign parts
// free.  full mode walks every matrix of the class, normalized mode walks
// sign normal forms only (sign moves fix them, so each state stands for
// 2^(2n-1) matrices).  Orbits are numbered by their smallest packed state;
// orbits meeting via transposition are merged into similarity classes.
struct OrbitPartition {
  OrbitMode mode = OrbitMode::full;
  int n = 0;
  std::uint64_t per_state = 1; // matrices represented by one state
  std::vector<std::uint64_t> states; // sorted packed states of the class
  std::vector<int> orbit_id;         // per state index
  int orbit_count = 0;
  std::vector<std::uint64_t> orbit_sizes; // matrix counts per orbit id
  std::vector<int> class_of_orbit;        // similarity class per orbit id
  int similarity_class_count = 0;
  std::uint64_t class_size = 0;
  std::uint64_t states_enumerated = 0;

  int state_index(const HadamardMatrix &h) const; // -1 when not in the class
  int orbit_index(const HadamardMatrix &h) const;
  int similarity_class_index(const HadamardMatrix &h) const;
  std::vector<std::uint64_t> sizes_sorted_desc() const;
};

OrbitPartition similarity_orbits(const AssociationScheme &s,
                                 const HadamardMatrix &h0,
                                 const OrbitOptions &opt = {});

// Exact rational (n-1)!^2 / (2 * aut_fix * aut * iso) with its ceiling,
// all as decimal strings.
struct BoundResult {
  std::string numerator;
  std::string denominator;
  std::string ceiling;
  double approx = 0.0;
};
BoundResult class_count_lower_bound(int n, std::uint64_t aut_fix_order,
                                    std::uint64_t aut_order,
                                    std::uint64_t iso_order);
// Closed form for the doubling matrices of order 2^k, k <= 6.
BoundResult sylvester_class_lower_bound(int k);

// Order-4 cross checks of the counting identities behind the bound:
// stabilizer of the normalized h0 in the x0-fixing signed pair group versus
// twice the plain automorphism count, the direct order of the similarity
// pair group versus |Iso||Aut||D|^2, and the x0-fixing orbit size versus
// orbit-stabilizer.
struct CountingReport {
  std::uint64_t stabilizer_order = 0;
  std::uint64_t aut_fix_order = 0;
  std::uint64_t k_order_direct = 0;
  std::uint64_t k_order_formula = 0;
  std::uint64_t x0_orbit_size = 0;
  std::uint64_t x0_orbit_formula = 0;
  bool ok() const {
    return stabilizer_order == 2 * aut_fix_order &&
           k_order_direct == k_order_formula &&
           x0_orbit_size == x0_orbit_formula;
  }
};
CountingReport counting_checks(const AssociationScheme &s,
                               const HadamardMatrix &h0, int x0);

} // namespace hadscheme

#endif
