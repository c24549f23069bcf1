#ifndef HADSCHEME_TEST_HELPERS_HPP
#define HADSCHEME_TEST_HELPERS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "hadscheme/hadamard.hpp"
#include "hadscheme/scheme.hpp"

// Dense +-1 / integer matrix arithmetic used as an oracle against the packed
// implementations.
namespace testutil {

using Dense = std::vector<std::vector<int>>;

inline Dense dense_of(const hadscheme::HadamardMatrix &h) {
  Dense d(h.n, std::vector<int>(h.n));
  for (int x = 0; x < h.n; ++x)
    for (int y = 0; y < h.n; ++y) d[x][y] = h.entry(x, y);
  return d;
}

inline Dense dense_mult(const Dense &a, const Dense &b) {
  int n = (int)a.size(), m = (int)b[0].size(), k = (int)b.size();
  Dense c(n, std::vector<int>(m, 0));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < k; ++l)
      for (int j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline Dense dense_transpose(const Dense &a) {
  int n = (int)a.size(), m = (int)a[0].size();
  Dense t(m, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) t[j][i] = a[i][j];
  return t;
}

// P^-1 = D_rowsigns * P_sigma and Q = columns picked by tau with signs, so
// (P^-1 H Q)[x][y] = rs[x] cs[y] H[sigma(x)][tau(y)].
inline Dense dense_pinv(const hadscheme::MonomialPair &p, int n) {
  Dense m(n, std::vector<int>(n, 0));
  for (int x = 0; x < n; ++x)
    m[x][p.row_perm[x]] = (p.row_signs >> x) & 1 ? -1 : 1;
  return m;
}

inline Dense dense_q(const hadscheme::MonomialPair &p, int n) {
  Dense m(n, std::vector<int>(n, 0));
  for (int y = 0; y < n; ++y)
    m[p.col_perm[y]][y] = (p.col_signs >> y) & 1 ? -1 : 1;
  return m;
}

inline bool dense_is_hadamard(const Dense &a) {
  int n = (int)a.size();
  auto at = dense_mult(a, dense_transpose(a));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at[i][j] != (i == j ? n : 0)) return false;
  return true;
}

inline hadscheme::HadamardMatrix from_dense(const Dense &d) {
  return hadscheme::verify_hadamard(d);
}

// Relation product support computed densely from the relation matrix alone.
inline std::vector<int> dense_thin_residue(const hadscheme::AssociationScheme &s) {
  auto support = [&](int a, int b) {
    std::vector<char> out(s.r, 0);
    for (int x = 0; x < s.n; ++x)
      for (int y = 0; y < s.n; ++y) {
        for (int z = 0; z < s.n; ++z)
          if (s.rel_at(x, z) == a && s.rel_at(z, y) == b) {
            out[s.rel_at(x, y)] = 1;
            break;
          }
      }
    return out;
  };
  std::vector<char> in(s.r, 0);
  for (int a = 0; a < s.r; ++a) {
    auto sup = support(a, s.star[a]);
    for (int u = 0; u < s.r; ++u) in[u] |= sup[u];
  }
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < s.r; ++a)
      for (int b = 0; b < s.r; ++b) {
        if (!in[a] || !in[b]) continue;
        auto sup = support(a, b);
        for (int u = 0; u < s.r; ++u)
          if (sup[u] && !in[u]) in[u] = 1, grew = true;
      }
  }
  std::vector<int> out;
  for (int u = 0; u < s.r; ++u)
    if (in[u]) out.push_back(u);
  return out;
}

inline std::uint64_t brute_aut_order(const hadscheme::AssociationScheme &s) {
  auto p = hadscheme::identity_perm(s.n);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      for (int y = 0; y < s.n && ok; ++y)
        ok = s.rel_at(p[x], p[y]) == s.rel_at(x, y);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline hadscheme::HadamardMatrix random_equivalent(
    const hadscheme::HadamardMatrix &h, std::mt19937_64 &rng) {
  return apply_pair(hadscheme::random_pair(h.n, rng), h);
}

} // namespace testutil

#endif
