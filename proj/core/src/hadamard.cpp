#include "hadscheme/hadamard.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

namespace hadscheme {

std::uint64_t HadamardMatrix::packed() const {
  if (n * n > 64)
    throw Error(ErrorCode::OrderUnsupported, "packing needs n*n <= 64");
  std::uint64_t w = 0;
  for (int x = 0; x < n; ++x) w |= rows[x] << (n * x);
  return w;
}

HadamardMatrix HadamardMatrix::transposed() const {
  HadamardMatrix t;
  t.n = n;
  t.rows.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t.rows[y] |= ((rows[x] >> y) & 1) << x;
  return t;
}

HadamardMatrix HadamardMatrix::negated() const {
  HadamardMatrix m = *this;
  for (auto &row : m.rows) row ^= row_mask();
  return m;
}

HadamardMatrix hadamard_from_rows(int n, std::vector<std::uint64_t> rows) {
  if (n < 1 || n > 64 || (int)rows.size() != n)
    throw Error(ErrorCode::BadInput, "need n rows, 1 <= n <= 64");
  HadamardMatrix h;
  h.n = n;
  h.rows = std::move(rows);
  for (auto &row : h.rows) row &= h.row_mask();
  return h;
}

HadamardMatrix hadamard_from_packed(int n, std::uint64_t word) {
  if (n < 1 || n * n > 64)
    throw Error(ErrorCode::BadInput, "packed form needs n*n <= 64");
  HadamardMatrix h;
  h.n = n;
  h.rows.assign(n, 0);
  std::uint64_t mask = (n == 8) ? 0xffULL : ((1ULL << n) - 1);
  for (int x = 0; x < n; ++x) h.rows[x] = (word >> (n * x)) & mask;
  return h;
}

void check_hadamard(const HadamardMatrix &h) {
  if (h.n != 1 && h.n != 2 && h.n % 4 != 0)
    throw Error(ErrorCode::BadOrder,
                "order " + std::to_string(h.n) + " is not 1, 2 or 4k");
  for (int i = 0; i < h.n; ++i)
    for (int j = i + 1; j < h.n; ++j)
      if (std::popcount(h.rows[i] ^ h.rows[j]) * 2 != h.n)
        throw Error(ErrorCode::NotOrthogonal,
                    "rows " + std::to_string(i) + " and " + std::to_string(j) +
                        " are not orthogonal");
}

HadamardMatrix verify_hadamard(const std::vector<std::vector<int>> &entries) {
  int n = (int)entries.size();
  if (n < 1 || n > 64)
    throw Error(ErrorCode::BadInput, "order out of range");
  HadamardMatrix h;
  h.n = n;
  h.rows.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    if ((int)entries[x].size() != n)
      throw Error(ErrorCode::BadInput, "matrix is not square");
    for (int y = 0; y < n; ++y) {
      if (entries[x][y] != 1 && entries[x][y] != -1)
        throw Error(ErrorCode::BadInput, "entries must be +-1");
      if (entries[x][y] == -1) h.rows[x] |= 1ULL << y;
    }
  }
  check_hadamard(h);
  return h;
}

HadamardMatrix sylvester(int k) {
  if (k < 0 || k > 6)
    throw Error(ErrorCode::OrderTooLarge, "doubling supported up to 2^6");
  HadamardMatrix h;
  h.n = 1;
  h.rows = {0};
  for (int step = 0; step < k; ++step) {
    int m = h.n;
    std::uint64_t mask = (1ULL << m) - 1;
    HadamardMatrix d;
    d.n = 2 * m;
    d.rows.assign(2 * m, 0);
    for (int x = 0; x < m; ++x) {
      d.rows[x] = h.rows[x] | (h.rows[x] << m);
      d.rows[m + x] = h.rows[x] | (((h.rows[x] ^ mask) & mask) << m);
    }
    h = std::move(d);
  }
  return h;
}

namespace {

std::uint64_t gather_bits(std::uint64_t src, const Perm &p) {
  std::uint64_t out = 0;
  for (std::size_t y = 0; y < p.size(); ++y) out |= ((src >> p[y]) & 1) << y;
  return out;
}

} // namespace

MonomialPair compose_pairs(const MonomialPair &p, const MonomialPair &q) {
  MonomialPair r;
  r.row_perm = compose(p.row_perm, q.row_perm);
  r.col_perm = compose(p.col_perm, q.col_perm);
  int n = (int)p.row_perm.size();
  for (int x = 0; x < n; ++x) {
    std::uint64_t rb =
        ((p.row_signs >> q.row_perm[x]) ^ (q.row_signs >> x)) & 1;
    r.row_signs |= rb << x;
    std::uint64_t cb =
        ((p.col_signs >> q.col_perm[x]) ^ (q.col_signs >> x)) & 1;
    r.col_signs |= cb << x;
  }
  return r;
}

MonomialPair inverse_pair(const MonomialPair &p) {
  MonomialPair r;
  r.row_perm = inverse(p.row_perm);
  r.col_perm = inverse(p.col_perm);
  int n = (int)p.row_perm.size();
  for (int x = 0; x < n; ++x) {
    r.row_signs |= ((p.row_signs >> r.row_perm[x]) & 1) << x;
    r.col_signs |= ((p.col_signs >> r.col_perm[x]) & 1) << x;
  }
  return r;
}

HadamardMatrix apply_pair(const MonomialPair &p, const HadamardMatrix &h) {
  if ((int)p.row_perm.size() != h.n)
    throw Error(ErrorCode::DimensionMismatch, "pair degree != matrix order");
  HadamardMatrix out;
  out.n = h.n;
  out.rows.assign(h.n, 0);
  for (int x = 0; x < h.n; ++x) {
    std::uint64_t row = gather_bits(h.rows[p.row_perm[x]], p.col_perm);
    if ((p.row_signs >> x) & 1) row ^= h.row_mask();
    out.rows[x] = (row ^ p.col_signs) & h.row_mask();
  }
  return out;
}

MonomialPair random_pair(int n, std::mt19937_64 &rng) {
  MonomialPair p = MonomialPair::identity(n);
  std::shuffle(p.row_perm.begin(), p.row_perm.end(), rng);
  std::shuffle(p.col_perm.begin(), p.col_perm.end(), rng);
  std::uint64_t mask = n >= 64 ? ~0ULL : ((1ULL << n) - 1);
  p.row_signs = rng() & mask;
  p.col_signs = rng() & mask;
  return p;
}

NormalizeResult normalize(const HadamardMatrix &h) {
  NormalizeResult res;
  res.h = h;
  res.col_signs = h.rows[0];
  for (auto &row : res.h.rows) row ^= res.col_signs;
  for (int x = 0; x < h.n; ++x)
    if (res.h.rows[x] & 1) {
      res.h.rows[x] ^= h.row_mask();
      res.row_signs |= 1ULL << x;
    }
  return res;
}

PermPairGroup aut_pairs_fixing(const HadamardMatrix &h, int x0) {
  int n = h.n;
  if (n > 12)
    throw Error(ErrorCode::OrderTooLarge, "automorphism search capped at 12");
  if (x0 < 0 || x0 >= n)
    throw Error(ErrorCode::BadInput, "fixed index out of range");

  // domain rows in assignment order: x0 first
  std::vector<int> xs;
  xs.push_back(x0);
  for (int x = 0; x < n; ++x)
    if (x != x0) xs.push_back(x);

  std::vector<int> img(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> sig_dom(n, 0), sig_img(n, 0);
  PermPairGroup group;
  group.n = n;

  auto multiset_ok = [&](int depth) {
    std::vector<std::uint32_t> a(sig_dom), b(sig_img);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    (void)depth;
    return a == b && sig_dom[x0] == sig_img[x0];
  };

  std::function<void(int)> rec = [&](int k) {
    if (k == n) {
      // full signatures are distinct columns, so tau is forced
      Perm sigma(n), tau(n);
      for (int i = 0; i < n; ++i) sigma[xs[i]] = img[i];
      std::vector<int> where(1 << n, -1);
      for (int c = 0; c < n; ++c) where[sig_img[c]] = c;
      for (int y = 0; y < n; ++y) {
        int c = where[sig_dom[y]];
        if (c < 0) return;
        tau[y] = c;
      }
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (h.entry(sigma[x], tau[y]) != h.entry(x, y)) return;
      group.elements.emplace_back(std::move(sigma), std::move(tau));
      return;
    }
    int x = xs[k];
    int lo = (k == 0) ? x0 : 0;
    int hi = (k == 0) ? x0 + 1 : n;
    for (int cand = lo; cand < hi; ++cand) {
      if (used[cand]) continue;
      for (int y = 0; y < n; ++y) {
        sig_dom[y] |= ((h.rows[x] >> y) & 1) << k;
        sig_img[y] |= ((h.rows[cand] >> y) & 1) << k;
      }
      used[cand] = 1;
      img[k] = cand;
      if (multiset_ok(k)) rec(k + 1);
      used[cand] = 0;
      img[k] = -1;
      std::uint32_t clear = ~(1u << k);
      for (int y = 0; y < n; ++y) {
        sig_dom[y] &= clear;
        sig_img[y] &= clear;
      }
    }
  };
  rec(0);

  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

bool equivalence_check(const HadamardMatrix &a, const HadamardMatrix &b) {
  if (a.n != b.n)
    throw Error(ErrorCode::BadInput, "orders differ");
  int n = a.n;
  if (n > 12)
    throw Error(ErrorCode::OrderTooLarge, "equivalence search capped at 12");
  if (a == b) return true;

  // Assign rows of b, top down, to signed rows of a.  Column signatures are
  // kept up to a global column sign by xoring with their first bit, which
  // absorbs the free column signs; the per-level row sign is branched on.
  std::vector<std::uint32_t> sig_dom(n, 0), sig_img(n, 0);
  std::vector<char> used(n, 0);

  auto canon_ok = [&](int depth) {
    std::uint32_t all = (1u << (depth + 1)) - 1;
    std::vector<std::uint32_t> p(n), q(n);
    for (int y = 0; y < n; ++y) {
      p[y] = (sig_dom[y] & 1) ? sig_dom[y] ^ all : sig_dom[y];
      q[y] = (sig_img[y] & 1) ? sig_img[y] ^ all : sig_img[y];
    }
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    return p == q;
  };

  std::function<bool(int)> rec = [&](int k) {
    if (k == n) return true;
    for (int rr = 0; rr < n; ++rr) {
      if (used[rr]) continue;
      for (int e = 0; e < (k == 0 ? 1 : 2); ++e) {
        for (int y = 0; y < n; ++y) {
          std::uint32_t db = ((a.rows[rr] >> y) & 1) ^ (std::uint32_t)e;
          sig_dom[y] |= db << k;
          sig_img[y] |= ((b.rows[k] >> y) & 1) << k;
        }
        used[rr] = 1;
        bool ok = canon_ok(k) && rec(k + 1);
        used[rr] = 0;
        std::uint32_t clear = ~(1u << k);
        for (int y = 0; y < n; ++y) {
          sig_dom[y] &= clear;
          sig_img[y] &= clear;
        }
        if (ok) return true;
      }
    }
    return false;
  };
  return rec(0);
}

} // namespace hadscheme
