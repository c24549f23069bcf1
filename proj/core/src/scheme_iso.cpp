#include "hadscheme/scheme_iso.hpp"
#include "hadscheme/perm.hpp"

#include <algorithm>
#include <map>

namespace hadscheme {

namespace {

// Two schemes with relation labels already matched through lmap
// (label s of side a corresponds to lmap[s] of side b).
struct Pairing {
  const AssociationScheme &a;
  const AssociationScheme &b;
  std::vector<int> lmap;

  std::vector<int> signature(const AssociationScheme &s, int x,
                             const std::vector<int> &colors, bool mapped) const {
    std::vector<int> sig;
    sig.push_back(colors[x]);
    for (int t = 0; t < a.r; ++t) {
      int lab = mapped ? lmap[t] : t;
      std::vector<int> nb;
      for (int y = 0; y < s.n; ++y)
        if (s.rel_at(x, y) == lab) nb.push_back(colors[y]);
      std::sort(nb.begin(), nb.end());
      sig.push_back(-1);
      sig.insert(sig.end(), nb.begin(), nb.end());
    }
    return sig;
  }

  // refine both colourings until stable; false when the colour histograms
  // of the two sides drift apart (no isomorphism respects the colouring)
  bool refine(std::vector<int> &ca, std::vector<int> &cb) const {
    int n = a.n;
    while (true) {
      std::map<std::vector<int>, int> rank;
      std::vector<std::vector<int>> siga(n), sigb(n);
      for (int x = 0; x < n; ++x) {
        siga[x] = signature(a, x, ca, false);
        sigb[x] = signature(b, x, cb, true);
        rank.emplace(siga[x], 0);
        rank.emplace(sigb[x], 0);
      }
      int next = 0;
      for (auto &kv : rank) kv.second = next++;
      std::vector<int> na(n), nb(n);
      std::vector<int> hista(next, 0), histb(next, 0);
      for (int x = 0; x < n; ++x) {
        na[x] = rank[siga[x]];
        nb[x] = rank[sigb[x]];
        ++hista[na[x]];
        ++histb[nb[x]];
      }
      if (hista != histb) return false;
      int old_count = 1 + *std::max_element(ca.begin(), ca.end());
      bool stable = next <= old_count && na == ca && nb == cb;
      ca = std::move(na);
      cb = std::move(nb);
      if (stable) return true;
    }
  }
};

bool extend(const Pairing &pr, std::vector<int> &ca, std::vector<int> &cb,
            std::vector<int> &map, std::vector<char> &used, int assigned) {
  int n = pr.a.n;
  if (assigned == n) return true;

  // unassigned point in the smallest colour cell
  int maxc = 0;
  for (int x = 0; x < n; ++x) maxc = std::max(maxc, ca[x]);
  std::vector<int> cellsize(maxc + 1, 0);
  for (int x = 0; x < n; ++x)
    if (map[x] < 0) ++cellsize[ca[x]];
  int best = -1;
  for (int x = 0; x < n; ++x) {
    if (map[x] >= 0) continue;
    if (best < 0 || cellsize[ca[x]] < cellsize[ca[best]]) best = x;
  }

  for (int y = 0; y < n; ++y) {
    if (used[y] || cb[y] != ca[best]) continue;
    bool ok = true;
    for (int z = 0; z < n && ok; ++z) {
      if (map[z] < 0) continue;
      if (pr.b.rel_at(y, map[z]) != pr.lmap[pr.a.rel_at(best, z)]) ok = false;
      if (pr.b.rel_at(map[z], y) != pr.lmap[pr.a.rel_at(z, best)]) ok = false;
    }
    if (!ok) continue;
    std::vector<int> ca2 = ca, cb2 = cb;
    int fresh = 0;
    for (int x = 0; x < n; ++x) fresh = std::max({fresh, ca[x] + 1, cb[x] + 1});
    ca2[best] = fresh;
    cb2[y] = fresh;
    if (!pr.refine(ca2, cb2)) continue;
    map[best] = y;
    used[y] = 1;
    if (extend(pr, ca2, cb2, map, used, assigned + 1)) return true;
    map[best] = -1;
    used[y] = 0;
  }
  return false;
}

std::optional<std::vector<int>> point_isomorphism(const AssociationScheme &s1,
                                                  const AssociationScheme &s2,
                                                  const std::vector<int> &lmap,
                                                  int fix_x, int fix_y) {
  Pairing pr{s1, s2, lmap};
  std::vector<int> ca(s1.n, 0), cb(s2.n, 0);
  if (fix_x >= 0) {
    ca[fix_x] = 1;
    cb[fix_y] = 1;
  }
  if (!pr.refine(ca, cb)) return std::nullopt;
  std::vector<int> map(s1.n, -1);
  std::vector<char> used(s1.n, 0);
  if (fix_x >= 0) {
    map[fix_x] = fix_y;
    used[fix_y] = 1;
    if (!extend(pr, ca, cb, map, used, 1)) return std::nullopt;
  } else if (!extend(pr, ca, cb, map, used, 0))
    return std::nullopt;
  return map;
}

} // namespace

std::optional<SchemeIso> scheme_isomorphic(const AssociationScheme &s1,
                                           const AssociationScheme &s2) {
  if (s1.n > 32 || s2.n > 32)
    throw Error(ErrorCode::OrderTooLarge, "isomorphism search capped at 32");
  std::optional<SchemeIso> out;
  for_each_algebraic_isomorphism(
      s1, s2, [&](const std::vector<int> &lmap) {
        auto pm = point_isomorphism(s1, s2, lmap, -1, -1);
        if (pm) {
          out = SchemeIso{*pm, lmap};
          return true;
        }
        return false;
      });
  return out;
}

namespace {

std::uint64_t aut_order_rec(const AssociationScheme &s,
                            const std::vector<int> &base_colors,
                            const std::vector<int> &pinned_x,
                            const std::vector<int> &pinned_y) {
  // colourings with the pinned points individualized on each side; the
  // sides only differ in where the pins go
  int n = s.n;
  std::vector<int> identity_map(s.r);
  for (int t = 0; t < s.r; ++t) identity_map[t] = t;
  Pairing pr{s, s, identity_map};

  std::vector<int> ca = base_colors, cb = base_colors;
  int fresh = 1 + *std::max_element(base_colors.begin(), base_colors.end());
  for (std::size_t i = 0; i < pinned_x.size(); ++i) {
    ca[pinned_x[i]] = fresh + (int)i;
    cb[pinned_y[i]] = fresh + (int)i;
  }
  if (!pr.refine(ca, cb)) return 0;

  // smallest cell with at least two points
  int maxc = *std::max_element(ca.begin(), ca.end());
  std::vector<int> cellsize(maxc + 1, 0);
  for (int x = 0; x < n; ++x) ++cellsize[ca[x]];
  int target = -1;
  for (int x = 0; x < n; ++x)
    if (cellsize[ca[x]] > 1 &&
        (target < 0 || cellsize[ca[x]] < cellsize[ca[target]] ||
         (cellsize[ca[x]] == cellsize[ca[target]] && x < target)))
      target = x;
  if (target < 0) return 1; // discrete colouring, identity only

  // orbit of target inside its cell: y is reachable iff some automorphism
  // consistent with the pins maps target to y
  std::uint64_t orbit = 0;
  for (int y = 0; y < n; ++y) {
    if (ca[y] != ca[target]) continue;
    if (y == target) {
      ++orbit;
      continue;
    }
    auto px = pinned_x, py = pinned_y;
    px.push_back(target);
    py.push_back(y);
    std::vector<int> ca2 = base_colors, cb2 = base_colors;
    for (std::size_t i = 0; i < px.size(); ++i) {
      ca2[px[i]] = fresh + (int)i;
      cb2[py[i]] = fresh + (int)i;
    }
    if (!pr.refine(ca2, cb2)) continue;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    for (std::size_t i = 0; i < px.size(); ++i) {
      map[px[i]] = py[i];
      used[py[i]] = 1;
    }
    bool consistent = true;
    for (std::size_t i = 0; i < px.size() && consistent; ++i)
      for (std::size_t j = 0; j < px.size() && consistent; ++j)
        if (s.rel_at(py[i], py[j]) != s.rel_at(px[i], px[j]))
          consistent = false;
    if (consistent && extend(pr, ca2, cb2, map, used, (int)px.size())) ++orbit;
  }

  auto px = pinned_x, py = pinned_y;
  px.push_back(target);
  py.push_back(target);
  return orbit * aut_order_rec(s, base_colors, px, py);
}

} // namespace

std::uint64_t scheme_aut_order(const AssociationScheme &s) {
  if (s.n > 16)
    throw Error(ErrorCode::OrderTooLarge, "automorphism count capped at 16");
  if (s.n <= 8) {
    std::uint64_t cnt = 0;
    Perm p = identity_perm(s.n);
    do {
      bool ok = true;
      for (int x = 0; x < s.n && ok; ++x)
        for (int y = 0; y < s.n && ok; ++y)
          if (s.rel_at(p[x], p[y]) != s.rel_at(x, y)) ok = false;
      if (ok) ++cnt;
    } while (std::next_permutation(p.begin(), p.end()));
    return cnt;
  }
  return aut_order_rec(s, std::vector<int>(s.n, 0), {}, {});
}

} // namespace hadscheme
