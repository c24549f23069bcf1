#include "hadscheme/scheme.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace hadscheme {

namespace {

std::string pair_str(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

} // namespace

AssociationScheme verify_scheme(int n, std::vector<int> rel) {
  if (n < 1 || (int)rel.size() != n * n)
    throw Error(ErrorCode::BadInput, "relation matrix must be n*n with n >= 1");

  int maxlab = 0;
  for (int v : rel) {
    if (v < 0) throw Error(ErrorCode::NotAPartition, "negative label");
    maxlab = std::max(maxlab, v);
  }
  int r = maxlab + 1;
  std::vector<char> seen(r, 0);
  for (int v : rel) seen[v] = 1;
  for (int s = 0; s < r; ++s)
    if (!seen[s])
      throw Error(ErrorCode::NotAPartition,
                  "label " + std::to_string(s) + " never occurs");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int v = rel[x * n + y];
      if (x == y && v != 0)
        throw Error(ErrorCode::BadIdentity,
                    "diagonal entry " + pair_str(x, x) + " has label " +
                        std::to_string(v));
      if (x != y && v == 0)
        throw Error(ErrorCode::BadIdentity,
                    "off-diagonal pair " + pair_str(x, y) + " has label 0");
    }

  std::vector<int> star(r, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int s = rel[x * n + y];
      int t = rel[y * n + x];
      if (star[s] == -1) star[s] = t;
      else if (star[s] != t)
        throw Error(ErrorCode::NotClosedUnderTranspose,
                    "transpose of label " + std::to_string(s) + " is " +
                        std::to_string(star[s]) + " at one pair but " +
                        std::to_string(t) + " at " + pair_str(x, y));
    }

  AssociationScheme out;
  out.n = n;
  out.r = r;
  out.rel = std::move(rel);
  out.star = std::move(star);
  out.tensor.assign((std::size_t)r * r * r, 0);

  std::vector<std::array<int, 2>> first(r, {-1, -1});
  std::vector<int> cnt((std::size_t)r * r, 0);
  std::vector<int> touched;
  touched.reserve(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int u = out.rel[x * n + y];
      touched.clear();
      for (int z = 0; z < n; ++z) {
        int idx = out.rel[x * n + z] * r + out.rel[z * n + y];
        if (cnt[idx]++ == 0) touched.push_back(idx);
      }
      if (first[u][0] == -1) {
        first[u] = {x, y};
        for (int idx : touched)
          out.tensor[(std::size_t)idx * r + u] = cnt[idx];
      } else {
        for (int s = 0; s < r; ++s)
          for (int t = 0; t < r; ++t) {
            int have = out.tensor[((std::size_t)(s * r + t)) * r + u];
            int got = cnt[s * r + t];
            if (have != got)
              throw Error(ErrorCode::NonConstantIntersection,
                          "c[" + std::to_string(s) + "][" + std::to_string(t) +
                              "][" + std::to_string(u) + "] is " +
                              std::to_string(have) + " at " +
                              pair_str(first[u][0], first[u][1]) + " but " +
                              std::to_string(got) + " at " + pair_str(x, y));
          }
      }
      for (int idx : touched) cnt[idx] = 0;
    }
  return out;
}

AssociationScheme verify_scheme(const std::vector<std::vector<int>> &rel) {
  int n = (int)rel.size();
  std::vector<int> flat;
  flat.reserve((std::size_t)n * n);
  for (const auto &row : rel) {
    if ((int)row.size() != n)
      throw Error(ErrorCode::BadInput, "relation matrix is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return verify_scheme(n, std::move(flat));
}

AssociationScheme trivial_scheme(int n) {
  if (n < 1) throw Error(ErrorCode::BadInput, "order must be positive");
  std::vector<int> rel((std::size_t)n * n, 1);
  for (int x = 0; x < n; ++x) rel[x * n + x] = 0;
  if (n == 1) rel[0] = 0;
  return verify_scheme(n, std::move(rel));
}

AssociationScheme
thin_group_scheme(const std::vector<std::vector<int>> &table) {
  int m = (int)table.size();
  if (m < 1) throw Error(ErrorCode::NotAGroup, "empty table");
  for (const auto &row : table) {
    if ((int)row.size() != m)
      throw Error(ErrorCode::NotAGroup, "table is not square");
    for (int v : row)
      if (v < 0 || v >= m)
        throw Error(ErrorCode::NotAGroup, "entry out of range");
  }
  for (int g = 0; g < m; ++g)
    if (table[0][g] != g || table[g][0] != g)
      throw Error(ErrorCode::NotAGroup, "element 0 is not an identity");
  for (int x = 0; x < m; ++x) {
    std::vector<char> row(m, 0), col(m, 0);
    for (int g = 0; g < m; ++g) {
      row[table[x][g]] = 1;
      col[table[g][x]] = 1;
    }
    for (int g = 0; g < m; ++g)
      if (!row[g] || !col[g])
        throw Error(ErrorCode::NotAGroup,
                    "row or column " + std::to_string(x) +
                        " is not a permutation");
  }
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw Error(ErrorCode::NotAGroup,
                      "associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");

  // rel[x][y] = the g with x*g = y
  std::vector<int> solve((std::size_t)m * m, 0);
  for (int x = 0; x < m; ++x)
    for (int g = 0; g < m; ++g) solve[x * m + table[x][g]] = g;
  return verify_scheme(m, std::move(solve));
}

AssociationScheme wreath_product(const AssociationScheme &w,
                                 const AssociationScheme &y) {
  int nw = w.n, ny = y.n;
  int n = nw * ny;
  std::vector<int> rel((std::size_t)n * n, 0);
  for (int y1 = 0; y1 < ny; ++y1)
    for (int w1 = 0; w1 < nw; ++w1)
      for (int y2 = 0; y2 < ny; ++y2)
        for (int w2 = 0; w2 < nw; ++w2) {
          int p = y1 * nw + w1, q = y2 * nw + w2;
          rel[p * n + q] = (y1 == y2) ? w.rel_at(w1, w2)
                                      : w.r + y.rel_at(y1, y2) - 1;
        }
  return verify_scheme(n, std::move(rel));
}

std::vector<int> thin_residue(const AssociationScheme &s) {
  int r = s.r;
  std::vector<char> in(r, 0);
  for (int a = 0; a < r; ++a)
    for (int u = 0; u < r; ++u)
      if (s.c(a, s.star[a], u) > 0) in[u] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a < r; ++a)
      if (in[a])
        for (int b = 0; b < r; ++b)
          if (in[b])
            for (int u = 0; u < r; ++u)
              if (!in[u] && s.c(a, b, u) > 0) {
                in[u] = 1;
                grew = true;
              }
  }
  std::vector<int> out;
  for (int u = 0; u < r; ++u)
    if (in[u]) out.push_back(u);
  return out;
}

void for_each_algebraic_isomorphism(
    const AssociationScheme &s1, const AssociationScheme &s2,
    const std::function<bool(const std::vector<int> &)> &cb) {
  if (s1.n != s2.n || s1.r != s2.r) return;
  int r = s1.r;
  auto v1 = s1.valencies(), v2 = s2.valencies();
  {
    auto a = v1, b = v2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  std::vector<int> map(r, -1);
  std::vector<char> used(r, 0);
  map[0] = 0;
  used[0] = 1;
  bool stop = false;
  std::function<void(int)> rec = [&](int k) {
    if (stop) return;
    if (k == r) {
      stop = cb(map);
      return;
    }
    for (int m = 1; m < r && !stop; ++m) {
      if (used[m] || v1[k] != v2[m]) continue;
      int sk = s1.star[k];
      if (sk == k && s2.star[m] != m) continue;
      if (sk != k && map[sk] >= 0 && map[sk] != s2.star[m]) continue;
      map[k] = m;
      used[m] = 1;
      bool ok = true;
      for (int a = 0; a <= k && ok; ++a)
        for (int b = 0; b <= k && ok; ++b)
          for (int u = 0; u <= k && ok; ++u)
            if (s1.c(a, b, u) != s2.c(map[a], map[b], map[u])) ok = false;
      if (ok) rec(k + 1);
      map[k] = -1;
      used[m] = 0;
    }
  };
  rec(1);
}

std::optional<std::vector<int>>
algebraic_isomorphism(const AssociationScheme &s1, const AssociationScheme &s2) {
  std::optional<std::vector<int>> out;
  for_each_algebraic_isomorphism(s1, s2, [&](const std::vector<int> &m) {
    out = m;
    return true;
  });
  return out;
}

} // namespace hadscheme
