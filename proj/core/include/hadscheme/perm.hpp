#ifndef HADSCHEME_PERM_HPP
#define HADSCHEME_PERM_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace hadscheme {

// p[i] = image of i; (compose(p, q))[i] = p[q[i]], so q acts first.
using Perm = std::vector<int>;

inline Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm compose(const Perm &p, const Perm &q) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

inline Perm inverse(const Perm &p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = (int)i;
  return r;
}

inline bool is_identity(const Perm &p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != (int)i) return false;
  return true;
}

} // namespace hadscheme

#endif
