#include "hadscheme/actions.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <unordered_map>
#include <unordered_set>

namespace hadscheme {

bool PermGroup::contains(const Perm &p) const {
  return std::binary_search(elements.begin(), elements.end(), p);
}

namespace {

void require_degree(int n) {
  if (n > 8)
    throw Error(ErrorCode::DegreeTooLarge,
                "group enumeration over Sym(n) capped at n = 8");
}

std::uint32_t pack_perm(const Perm &p) {
  std::uint32_t w = 0;
  for (std::size_t i = 0; i < p.size(); ++i) w |= (std::uint32_t)p[i] << (3 * i);
  return w;
}

} // namespace

PermGroup aut_group(const AssociationScheme &s) {
  require_degree(s.n);
  PermGroup g;
  g.degree = s.n;
  Perm p = identity_perm(s.n);
  do {
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      for (int y = 0; y < s.n && ok; ++y)
        if (s.rel_at(p[x], p[y]) != s.rel_at(x, y)) ok = false;
    if (ok) g.elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return g;
}

PermGroup iso_group(const AssociationScheme &s) {
  require_degree(s.n);
  PermGroup g;
  g.degree = s.n;
  Perm p = identity_perm(s.n);
  std::vector<int> relmap(s.r);
  do {
    std::fill(relmap.begin(), relmap.end(), -1);
    bool ok = true;
    for (int x = 0; x < s.n && ok; ++x)
      for (int y = 0; y < s.n && ok; ++y) {
        int a = s.rel_at(x, y), b = s.rel_at(p[x], p[y]);
        if (relmap[a] == -1) relmap[a] = b;
        else if (relmap[a] != b) ok = false;
      }
    if (ok) g.elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return g;
}

std::vector<Perm> small_generating_set(const PermGroup &g) {
  std::vector<Perm> gens;
  std::unordered_set<std::uint32_t> closure;
  std::vector<Perm> frontier;
  closure.insert(pack_perm(identity_perm(g.degree)));

  auto close_over = [&]() {
    frontier.clear();
    closure.clear();
    Perm id = identity_perm(g.degree);
    closure.insert(pack_perm(id));
    frontier.push_back(id);
    while (!frontier.empty()) {
      Perm cur = frontier.back();
      frontier.pop_back();
      for (const Perm &h : gens) {
        Perm nx = compose(h, cur);
        if (closure.insert(pack_perm(nx)).second) frontier.push_back(nx);
      }
    }
  };

  for (const Perm &e : g.elements)
    if (!closure.count(pack_perm(e))) {
      gens.push_back(e);
      close_over();
    }
  return gens;
}

namespace {

std::uint64_t gather_row(std::uint64_t src, const Perm &p) {
  std::uint64_t out = 0;
  for (std::size_t y = 0; y < p.size(); ++y) out |= ((src >> p[y]) & 1) << y;
  return out;
}

bool sign_rank_one(const std::vector<std::uint64_t> &e, int n,
                   std::uint64_t mask) {
  for (int x = 1; x < n; ++x) {
    std::uint64_t d = (e[x] ^ e[0]) & mask;
    if (d != 0 && d != mask) return false;
  }
  return true;
}

} // namespace

bool similar_check(const HadamardMatrix &h1, const HadamardMatrix &h2,
                   const PermGroup &aut, const PermGroup &iso) {
  if (h1.n != h2.n || h1.n != aut.degree)
    throw Error(ErrorCode::DimensionMismatch, "orders differ");
  int n = h1.n;
  std::uint64_t mask = h1.row_mask();
  HadamardMatrix h2t = h2.transposed();
  std::vector<std::uint64_t> e(n), et(n);
  for (const Perm &sigma : iso.elements)
    for (const Perm &alpha : aut.elements) {
      Perm tau = compose(sigma, alpha);
      for (int x = 0; x < n; ++x) {
        std::uint64_t m = gather_row(h1.rows[sigma[x]], tau);
        e[x] = m ^ h2.rows[x];
        et[x] = m ^ h2t.rows[x];
      }
      if (sign_rank_one(e, n, mask) || sign_rank_one(et, n, mask)) return true;
    }
  return false;
}

bool similar_check(const HadamardMatrix &h1, const HadamardMatrix &h2,
                   const AssociationScheme &s) {
  return similar_check(h1, h2, aut_group(s), iso_group(s));
}

// ---- packed word helpers for orbit walks --------------------------------

namespace {

struct WordOps {
  int n;
  std::uint64_t rowmask;

  std::uint64_t row(std::uint64_t w, int x) const {
    return (w >> (n * x)) & rowmask;
  }
  std::uint64_t build(const std::vector<std::uint64_t> &rows) const {
    std::uint64_t w = 0;
    for (int x = 0; x < n; ++x) w |= rows[x] << (n * x);
    return w;
  }
  std::uint64_t permute(std::uint64_t w, const Perm &rp, const Perm &cp) const {
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x) {
      std::uint64_t src = row(w, rp[x]);
      std::uint64_t dst = 0;
      for (int y = 0; y < n; ++y) dst |= ((src >> cp[y]) & 1) << y;
      out |= dst << (n * x);
    }
    return out;
  }
  std::uint64_t negate_row(std::uint64_t w, int x) const {
    return w ^ (rowmask << (n * x));
  }
  std::uint64_t negate_col(std::uint64_t w, int y) const {
    std::uint64_t m = 0;
    for (int x = 0; x < n; ++x) m |= 1ULL << (n * x + y);
    return w ^ m;
  }
  std::uint64_t swap_rows(std::uint64_t w, int i, int j) const {
    std::uint64_t ri = row(w, i), rj = row(w, j);
    w &= ~((rowmask << (n * i)) | (rowmask << (n * j)));
    return w | (rj << (n * i)) | (ri << (n * j));
  }
  std::uint64_t swap_cols(std::uint64_t w, int i, int j) const {
    std::uint64_t out = w;
    for (int x = 0; x < n; ++x) {
      std::uint64_t bi = (w >> (n * x + i)) & 1, bj = (w >> (n * x + j)) & 1;
      out &= ~((1ULL << (n * x + i)) | (1ULL << (n * x + j)));
      out |= (bj << (n * x + i)) | (bi << (n * x + j));
    }
    return out;
  }
  std::uint64_t transpose(std::uint64_t w) const {
    std::uint64_t out = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        out |= ((w >> (n * x + y)) & 1) << (n * y + x);
    return out;
  }
  std::uint64_t normal_form(std::uint64_t w) const {
    std::uint64_t c = row(w, 0);
    for (int x = 0; x < n; ++x) w ^= c << (n * x);
    for (int x = 0; x < n; ++x)
      if ((w >> (n * x)) & 1) w ^= rowmask << (n * x);
    return w;
  }
};

using Move = std::function<std::uint64_t(std::uint64_t)>;

// breadth first closure of seeds under moves; expansion may be chunked
// across threads, the visited set is updated serially so the result set is
// the plain closure either way
void bfs_closure(std::vector<std::uint64_t> seeds, const std::vector<Move> &moves,
                 std::unordered_set<std::uint64_t> &visited, int threads) {
  std::vector<std::uint64_t> frontier;
  for (std::uint64_t s : seeds)
    if (visited.insert(s).second) frontier.push_back(s);
  while (!frontier.empty()) {
    std::vector<std::uint64_t> produced;
    if (threads <= 1 || frontier.size() < 64) {
      for (std::uint64_t w : frontier)
        for (const Move &m : moves) produced.push_back(m(w));
    } else {
      std::size_t chunk = (frontier.size() + threads - 1) / threads;
      std::vector<std::future<std::vector<std::uint64_t>>> futs;
      for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
        std::size_t hi = std::min(frontier.size(), lo + chunk);
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() {
          std::vector<std::uint64_t> out;
          out.reserve((hi - lo) * moves.size());
          for (std::size_t i = lo; i < hi; ++i)
            for (const Move &m : moves) out.push_back(m(frontier[i]));
          return out;
        }));
      }
      for (auto &f : futs) {
        auto part = f.get();
        produced.insert(produced.end(), part.begin(), part.end());
      }
    }
    frontier.clear();
    for (std::uint64_t w : produced)
      if (visited.insert(w).second) frontier.push_back(w);
  }
}

} // namespace

int OrbitPartition::state_index(const HadamardMatrix &h) const {
  if (h.n != n) return -1;
  WordOps ops{n, h.row_mask()};
  std::uint64_t w = h.packed();
  if (mode == OrbitMode::normalized) w = ops.normal_form(w);
  auto it = std::lower_bound(states.begin(), states.end(), w);
  if (it == states.end() || *it != w) return -1;
  return (int)(it - states.begin());
}

int OrbitPartition::orbit_index(const HadamardMatrix &h) const {
  int i = state_index(h);
  return i < 0 ? -1 : orbit_id[i];
}

int OrbitPartition::similarity_class_index(const HadamardMatrix &h) const {
  int o = orbit_index(h);
  return o < 0 ? -1 : class_of_orbit[o];
}

std::vector<std::uint64_t> OrbitPartition::sizes_sorted_desc() const {
  std::vector<std::uint64_t> v = orbit_sizes;
  std::sort(v.rbegin(), v.rend());
  return v;
}

OrbitPartition similarity_orbits(const AssociationScheme &s,
                                 const HadamardMatrix &h0,
                                 const OrbitOptions &opt) {
  int n = h0.n;
  if (s.n != n)
    throw Error(ErrorCode::DimensionMismatch, "scheme and matrix orders differ");
  if (n * n > 64 || (opt.mode == OrbitMode::full && n > 4))
    throw Error(ErrorCode::OrderUnsupported,
                "full mode walks all matrices, order must stay at 4; "
                "use normalized mode up to order 8");
  check_hadamard(h0);

  WordOps ops{n, h0.row_mask()};
  bool norm = opt.mode == OrbitMode::normalized;
  auto canon = [&](std::uint64_t w) { return norm ? ops.normal_form(w) : w; };

  PermGroup aut = aut_group(s), iso = iso_group(s);
  std::vector<Perm> agens = small_generating_set(aut);
  std::vector<Perm> igens = small_generating_set(iso);
  Perm id = identity_perm(n);

  std::vector<Move> class_moves, k_moves;
  for (int i = 0; i + 1 < n; ++i) {
    class_moves.push_back(
        [=](std::uint64_t w) { return canon(ops.swap_rows(w, i, i + 1)); });
    class_moves.push_back(
        [=](std::uint64_t w) { return canon(ops.swap_cols(w, i, i + 1)); });
  }
  if (!norm)
    for (int i = 0; i < n; ++i) {
      class_moves.push_back(
          [=](std::uint64_t w) { return ops.negate_row(w, i); });
      class_moves.push_back(
          [=](std::uint64_t w) { return ops.negate_col(w, i); });
      k_moves.push_back([=](std::uint64_t w) { return ops.negate_row(w, i); });
      k_moves.push_back([=](std::uint64_t w) { return ops.negate_col(w, i); });
    }
  for (const Perm &g : agens)
    k_moves.push_back(
        [=](std::uint64_t w) { return canon(ops.permute(w, g, id)); });
  for (const Perm &g : igens)
    k_moves.push_back(
        [=](std::uint64_t w) { return canon(ops.permute(w, g, g)); });

  OrbitPartition part;
  part.mode = opt.mode;
  part.n = n;
  part.per_state = norm ? (1ULL << (2 * n - 1)) : 1;

  std::unordered_set<std::uint64_t> cls;
  bfs_closure({canon(h0.packed())}, class_moves, cls, opt.threads);
  part.states.assign(cls.begin(), cls.end());
  std::sort(part.states.begin(), part.states.end());
  part.states_enumerated = part.states.size();
  part.class_size = part.states.size() * part.per_state;

  std::unordered_map<std::uint64_t, int> index;
  index.reserve(part.states.size() * 2);
  for (std::size_t i = 0; i < part.states.size(); ++i)
    index[part.states[i]] = (int)i;

  part.orbit_id.assign(part.states.size(), -1);
  for (std::size_t i = 0; i < part.states.size(); ++i) {
    if (part.orbit_id[i] != -1) continue;
    int oid = part.orbit_count++;
    std::unordered_set<std::uint64_t> orbit;
    bfs_closure({part.states[i]}, k_moves, orbit, opt.threads);
    std::uint64_t members = 0;
    for (std::uint64_t w : orbit) {
      auto it = index.find(w);
      if (it == index.end())
        throw Error(ErrorCode::OrderUnsupported,
                    "orbit walk left the enumerated class");
      part.orbit_id[it->second] = oid;
      ++members;
    }
    part.orbit_sizes.push_back(members * part.per_state);
  }

  // transposition merge via union-find on orbit ids
  std::vector<int> root(part.orbit_count);
  for (int i = 0; i < part.orbit_count; ++i) root[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  std::vector<std::uint64_t> rep(part.orbit_count, ~0ULL);
  for (std::size_t i = 0; i < part.states.size(); ++i) {
    int o = part.orbit_id[i];
    if (rep[o] == ~0ULL) rep[o] = part.states[i]; // states sorted, min first
  }
  for (int o = 0; o < part.orbit_count; ++o) {
    std::uint64_t t = canon(ops.transpose(rep[o]));
    auto it = index.find(t);
    if (it == index.end()) continue; // class not closed under transposition
    int p = find(part.orbit_id[it->second]), q = find(o);
    if (p != q) root[std::max(p, q)] = std::min(p, q);
  }
  part.class_of_orbit.assign(part.orbit_count, -1);
  for (int o = 0; o < part.orbit_count; ++o) {
    int r = find(o);
    if (part.class_of_orbit[r] == -1)
      part.class_of_orbit[r] = part.similarity_class_count++;
    part.class_of_orbit[o] = part.class_of_orbit[r];
  }
  return part;
}

CountingReport counting_checks(const AssociationScheme &s,
                               const HadamardMatrix &h0, int x0) {
  int n = h0.n;
  if (n != 4 || s.n != 4)
    throw Error(ErrorCode::OrderUnsupported, "counting checks run at order 4");
  if (x0 < 0 || x0 >= n)
    throw Error(ErrorCode::BadInput, "fixed index out of range");
  check_hadamard(h0);

  CountingReport rep;
  HadamardMatrix h0n = normalize(h0).h;
  rep.aut_fix_order = aut_pairs_fixing(h0n, x0).order();

  // permutations fixing x0
  std::vector<Perm> fix;
  Perm p = identity_perm(n);
  do {
    if (p[x0] == x0) fix.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::uint64_t nsigns = 1ULL << n;
  std::uint64_t stab = 0;
  for (const Perm &sigma : fix)
    for (const Perm &tau : fix)
      for (std::uint64_t rs = 0; rs < nsigns; ++rs)
        for (std::uint64_t cs = 0; cs < nsigns; ++cs) {
          MonomialPair mp{sigma, rs, tau, cs};
          if (apply_pair(mp, h0n) == h0n) ++stab;
        }
  rep.stabilizer_order = stab;

  PermGroup aut = aut_group(s), iso = iso_group(s);
  std::uint64_t pairs = 0;
  for (const Perm &sigma : iso.elements)
    for (const Perm &tau : iso.elements)
      if (aut.contains(compose(sigma, inverse(tau)))) ++pairs;
  rep.k_order_direct = pairs * nsigns * nsigns;
  rep.k_order_formula = iso.order() * aut.order() * nsigns * nsigns;

  WordOps ops{n, h0.row_mask()};
  std::vector<Move> moves;
  for (int i = 0; i < n; ++i) {
    moves.push_back([=](std::uint64_t w) { return ops.negate_row(w, i); });
    moves.push_back([=](std::uint64_t w) { return ops.negate_col(w, i); });
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (i == x0 || j == x0) continue;
      moves.push_back([=](std::uint64_t w) { return ops.swap_rows(w, i, j); });
      moves.push_back([=](std::uint64_t w) { return ops.swap_cols(w, i, j); });
    }
  std::unordered_set<std::uint64_t> orbit;
  bfs_closure({h0n.packed()}, moves, orbit, 1);
  rep.x0_orbit_size = orbit.size();

  std::uint64_t fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;
  std::uint64_t g_x0 = (fact * nsigns) * (fact * nsigns);
  rep.x0_orbit_formula = stab == 0 ? 0 : g_x0 / stab;
  return rep;
}

} // namespace hadscheme
