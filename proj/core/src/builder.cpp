#include "hadscheme/builder.hpp"

#include <numeric>
#include <queue>
#include <string>

namespace hadscheme {

CoverScheme build_cover_scheme(const AssociationScheme &base,
                               const HadamardMatrix &h) {
  if (base.n != h.n)
    throw Error(ErrorCode::DimensionMismatch,
                "base order " + std::to_string(base.n) +
                    " != matrix order " + std::to_string(h.n));
  int n = base.n;
  int n4 = 4 * n;
  int plus = base.r + 1, minus = base.r + 2;
  std::vector<int> rel((std::size_t)n4 * n4, 0);
  for (int u = 0; u < n4; ++u) {
    CoverPoint P = cover_point(u);
    for (int v = 0; v < n4; ++v) {
      CoverPoint Q = cover_point(v);
      int lab;
      if (u == v) lab = 0;
      else if (P.side == Q.side) {
        if (P.base == Q.base) lab = 1;
        else lab = base.rel_at(P.base, Q.base) + 1;
      } else {
        int sign = P.side == 0 ? h.entry(P.base, Q.base)
                               : h.entry(Q.base, P.base);
        int want = ((P.phase + Q.phase) & 1) ? -1 : 1;
        lab = (sign == want) ? plus : minus;
      }
      rel[(std::size_t)u * n4 + v] = lab;
    }
  }
  CoverScheme cs;
  cs.base_rank = base.r;
  cs.scheme = verify_scheme(n4, std::move(rel));
  return cs;
}

CoverScheme hadamard_graph_scheme(const HadamardMatrix &h) {
  CoverScheme cs = build_cover_scheme(trivial_scheme(h.n), h);
  const AssociationScheme &s = cs.scheme;
  int n4 = s.n;
  int plus = cs.plus_label();

  std::vector<std::vector<int>> adj(n4);
  for (int u = 0; u < n4; ++u)
    for (int v = 0; v < n4; ++v)
      if (s.rel_at(u, v) == plus) adj[u].push_back(v);

  auto expect = [&](int dist) {
    switch (dist) {
    case 0: return 0;
    case 1: return cs.plus_label();
    case 2: return cs.lifted_label(1);
    case 3: return cs.minus_label();
    case 4: return cs.antipode_label();
    }
    return -1;
  };

  for (int u = 0; u < n4; ++u) {
    std::vector<int> dist(n4, -1);
    std::queue<int> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
      int a = q.front();
      q.pop();
      for (int b : adj[a])
        if (dist[b] == -1) {
          dist[b] = dist[a] + 1;
          q.push(b);
        }
    }
    int diameter = 0;
    for (int v = 0; v < n4; ++v) {
      if (dist[v] == -1)
        throw Error(ErrorCode::DistanceMismatch,
                    "graph is disconnected from point " + std::to_string(u));
      diameter = std::max(diameter, dist[v]);
      if (s.rel_at(u, v) != expect(dist[v]))
        throw Error(ErrorCode::DistanceMismatch,
                    "pair (" + std::to_string(u) + "," + std::to_string(v) +
                        ") at distance " + std::to_string(dist[v]) +
                        " has label " + std::to_string(s.rel_at(u, v)));
      int side_u = cover_point(u).side, side_v = cover_point(v).side;
      if ((side_u ^ side_v) != (dist[v] & 1))
        throw Error(ErrorCode::DistanceMismatch,
                    "parity of distance does not follow the sides");
    }
    if (diameter != 4)
      throw Error(ErrorCode::DistanceMismatch,
                  "diameter from point " + std::to_string(u) + " is " +
                      std::to_string(diameter));
  }
  return cs;
}

bool fission_check(const CoverScheme &cs) {
  const AssociationScheme &s = cs.scheme;
  int n4 = s.n;
  int anti = cs.antipode_label();
  for (int t = 2; t <= cs.base_rank; ++t)
    for (int y = 0; y < n4; ++y)
      for (int x = 0; x < n4; ++x) {
        if (s.rel_at(y, x) != t) continue;
        int hits = 0;
        for (int z = 0; z < n4; ++z)
          if (s.rel_at(x, z) == anti && s.rel_at(y, z) == t) ++hits;
        if (hits != 1) return false;
      }
  return true;
}

std::optional<std::vector<int>>
induced_relation_map(const AssociationScheme &src,
                     const AssociationScheme &dst,
                     const std::vector<int> &point_map) {
  if (src.n != dst.n || (int)point_map.size() != src.n || src.r != dst.r)
    return std::nullopt;
  std::vector<char> hit(src.n, 0);
  for (int v : point_map) {
    if (v < 0 || v >= src.n || hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  std::vector<int> map(src.r, -1);
  for (int u = 0; u < src.n; ++u)
    for (int v = 0; v < src.n; ++v) {
      int s = src.rel_at(u, v);
      int t = dst.rel_at(point_map[u], point_map[v]);
      if (map[s] == -1) map[s] = t;
      else if (map[s] != t) return std::nullopt;
    }
  std::vector<char> used(src.r, 0);
  for (int t : map) {
    if (t < 0 || used[t]) return std::nullopt;
    used[t] = 1;
  }
  return map;
}

std::vector<int> cover_transpose_map(int n) {
  std::vector<int> m(4 * n);
  for (int i = 0; i < 4 * n; ++i) {
    CoverPoint p = cover_point(i);
    p.side ^= 1;
    m[i] = cover_index(p);
  }
  return m;
}

namespace {

std::vector<int> phase_swap_map(int n, int side, int only_base) {
  std::vector<int> m(4 * n);
  std::iota(m.begin(), m.end(), 0);
  for (int x = 0; x < n; ++x) {
    if (only_base >= 0 && x != only_base) continue;
    int i = cover_index({x, side, 0});
    std::swap(m[i], m[i + 1]);
  }
  return m;
}

} // namespace

std::vector<int> cover_row_flip_map(int n, int y) {
  return phase_swap_map(n, 0, y);
}
std::vector<int> cover_col_flip_map(int n, int y) {
  return phase_swap_map(n, 1, y);
}
std::vector<int> cover_negate_rows_map(int n) {
  return phase_swap_map(n, 0, -1);
}
std::vector<int> cover_negate_cols_map(int n) {
  return phase_swap_map(n, 1, -1);
}

StandardIsoReport standard_isomorphisms_check(const AssociationScheme &base,
                                              const HadamardMatrix &h) {
  StandardIsoReport rep;
  int n = h.n;
  CoverScheme src = build_cover_scheme(base, h);

  auto maps_onto = [&](const HadamardMatrix &target,
                       const std::vector<int> &pm) {
    CoverScheme dst = build_cover_scheme(base, target);
    return induced_relation_map(src.scheme, dst.scheme, pm).has_value();
  };

  rep.transpose_map = maps_onto(h.transposed(), cover_transpose_map(n));

  rep.row_negation_maps = true;
  rep.col_negation_maps = true;
  for (int y = 0; y < n; ++y) {
    HadamardMatrix row_neg = h;
    row_neg.rows[y] ^= h.row_mask();
    if (!maps_onto(row_neg, cover_row_flip_map(n, y)))
      rep.row_negation_maps = false;
    HadamardMatrix col_neg = h;
    for (int x = 0; x < n; ++x) col_neg.rows[x] ^= 1ULL << y;
    if (!maps_onto(col_neg, cover_col_flip_map(n, y)))
      rep.col_negation_maps = false;
  }

  rep.negate_rows_map = maps_onto(h.negated(), cover_negate_rows_map(n));
  rep.negate_cols_map = maps_onto(h.negated(), cover_negate_cols_map(n));
  return rep;
}

} // namespace hadscheme
