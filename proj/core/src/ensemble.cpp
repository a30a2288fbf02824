#include "ffmom/ensemble.hpp"

#include <chrono>
#include <cstring>
#include <stdexcept>
#include <thread>
#include <vector>

#include "ffmom/charsum.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/factor.hpp"

namespace ffmom {

namespace {

constexpr int kMaxDeg = 63;

/* squarefree test on a raw monic coefficient buffer: gcd(D, D') trivial */
bool squarefree_raw(const Fq& F, const int32_t* d, int n) {
  int32_t a[kMaxDeg + 1], b[kMaxDeg + 1];
  std::memcpy(a, d, sizeof(int32_t) * static_cast<size_t>(n + 1));
  int da = n, db = -1;
  for (int i = 1; i <= n; ++i) {
    b[i - 1] = F.mul(d[i], F.reduce(i));
    if (b[i - 1] != 0) db = i - 1;
  }
  if (db < 0) return false;
  /* Euclid on (a, b); squarefree iff the gcd is a nonzero constant */
  for (;;) {
    /* a <- a mod b */
    int32_t linv = F.inv(b[db]);
    while (da >= db) {
      int32_t c = a[da];
      if (c != 0) {
        int32_t s = F.mul(c, linv);
        for (int j = 0; j < db; ++j) a[da - db + j] = F.sub(a[da - db + j], F.mul(s, b[j]));
        a[da] = 0;
      }
      --da;
    }
    while (da >= 0 && a[da] == 0) --da;
    if (da < 0) return db == 0 ? true : false;
    if (da == 0) return true;
    std::swap(da, db);
    for (int i = 0; i <= std::max(da, db); ++i) std::swap(a[i], b[i]);
  }
}

struct ChunkSum {
  bigint a = 0;
  bigint b = 0;
  uint64_t count = 0;
};

/* integer pair (A, B) with L(1/2)^k = (A + B sqrt q) / q^(k ceil(g/2)),
   accumulated over one contiguous index range of monic degree-(2g+1) polys */
void sweep_chunk(const Fq& F, int g, unsigned k, uint64_t begin, uint64_t end,
                 ChunkSum* out) {
  const int n = 2 * g + 1;
  const int64_t q = F.q();
  const int hg = (g + 1) / 2;

  int32_t d[kMaxDeg + 1];
  std::memset(d, 0, sizeof(d));
  d[n] = 1;
  {
    uint64_t idx = begin;
    for (int i = 0; i < n; ++i) {
      d[i] = static_cast<int32_t>(idx % static_cast<uint64_t>(q));
      idx /= static_cast<uint64_t>(q);
    }
  }

  /* q^e for the per-coefficient scale factors */
  int64_t qpow[32];
  qpow[0] = 1;
  for (int i = 1; i < 32 && i <= hg + 1; ++i) qpow[i] = qpow[i - 1] * q;

  int32_t fbuf[kMaxDeg + 1], dbuf[kMaxDeg + 1];

  for (uint64_t idx = begin; idx < end; ++idx) {
    if (squarefree_raw(F, d, n)) {
      /* S_m = sum_{f in M_m} (D / f) for m = 1..g */
      int64_t A = 0, B = 0;
      /* n = 0 term, counted twice unless g = 0 */
      A += (g == 0 ? 1 : 2) * qpow[hg];
      for (int m = 1; m <= g; ++m) {
        int64_t s = 0;
        std::memset(fbuf, 0, sizeof(int32_t) * static_cast<size_t>(m + 1));
        fbuf[m] = 1;
        uint64_t fcount = 1;
        for (int i = 0; i < m; ++i) fcount *= static_cast<uint64_t>(q);
        for (uint64_t fi = 0;; ++fi) {
          std::memcpy(dbuf, d, sizeof(int32_t) * static_cast<size_t>(n + 1));
          int32_t fcopy[kMaxDeg + 1];
          std::memcpy(fcopy, fbuf, sizeof(int32_t) * static_cast<size_t>(m + 1));
          s += jacobi_raw(F, dbuf, n, fcopy, m);
          if (fi + 1 == fcount) break;
          for (int i = 0; i < m; ++i) {
            if (++fbuf[i] < q) break;
            fbuf[i] = 0;
          }
        }
        int64_t w = (m <= g - 1) ? 2 : 1;
        if (m % 2 == 0)
          A += w * s * qpow[hg - m / 2];
        else
          B += w * s * qpow[hg - (m + 1) / 2];
      }
      /* (A + B sqrt q)^k */
      bigint pa = 1, pb = 0;
      for (unsigned i = 0; i < k; ++i) {
        bigint na = pa * A + q * (pb * B);
        bigint nb = pa * B + pb * A;
        pa = std::move(na);
        pb = std::move(nb);
      }
      out->a += pa;
      out->b += pb;
      ++out->count;
    }
    if (idx + 1 == end) break;
    for (int i = 0; i < n; ++i) {
      if (++d[i] < q) break;
      d[i] = 0;
    }
  }
}

}  // namespace

MomentResult first_moment(const Fq& F, int g, unsigned k, unsigned threads,
                          uint64_t ceiling) {
  if (g < 0) throw std::invalid_argument("first_moment: g must be >= 0");
  if (k < 1) throw std::invalid_argument("first_moment: k must be >= 1");
  if (threads < 1) throw std::invalid_argument("first_moment: threads must be >= 1");
  if (2 * g + 1 > kMaxDeg) throw std::invalid_argument("first_moment: g too large");
  uint64_t family = 1;
  for (int i = 0; i < 2 * g; ++i) {
    family *= static_cast<uint64_t>(F.q());
    if (family > ceiling)
      throw std::invalid_argument("first_moment: q^(2g) exceeds the ensemble ceiling");
  }

  auto t0 = std::chrono::steady_clock::now();
  uint64_t total = monic_count(F, 2 * g + 1);
  auto ranges = chunk_ranges(total, threads);
  std::vector<ChunkSum> partial(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(sweep_chunk, std::cref(F), g, k, ranges[t].first,
                      ranges[t].second, &partial[t]);
  sweep_chunk(F, g, k, ranges[0].first, ranges[0].second, &partial[0]);
  for (auto& th : pool) th.join();

  /* merge in chunk order */
  bigint A = 0, B = 0;
  uint64_t count = 0;
  for (const auto& p : partial) {
    A += p.a;
    B += p.b;
    count += p.count;
  }
  bigint scale = boost::multiprecision::pow(bigint(F.q()),
                                            static_cast<unsigned>(k * ((g + 1) / 2)));
  auto t1 = std::chrono::steady_clock::now();

  MomentResult res;
  res.q = F.q();
  res.g = g;
  res.k = k;
  res.count = count;
  res.moment = QuadExt(rational(A, scale), rational(B, scale));
  res.wall_seconds = std::chrono::duration<double>(t1 - t0).count();
  res.threads = threads;
  return res;
}

FirstpointCheck firstpoint_check(const Fq& F, const Poly& f, int g) {
  if (!f.is_monic() || f.deg() < 1)
    throw std::invalid_argument("firstpoint_check: f must be monic of degree >= 1");
  if (g < 1) throw std::invalid_argument("firstpoint_check: g must be >= 1");

  int64_t lhs = 0;
  int n = 2 * g + 1;
  for_each_monic(F, n, 0, monic_count(F, n), [&](uint64_t, const Poly& D) {
    if (is_squarefree(F, D)) lhs += jacobi_symbol(F, D, f);
  });

  /* count C | f^inf by degree: knapsack over the distinct prime degrees */
  Factorization fac = factorize(F, f);
  std::vector<int64_t> ways(static_cast<size_t>(g) + 1, 0);
  ways[0] = 1;
  for (const auto& pp : fac.factors) {
    int dp = pp.p.deg();
    for (int j = dp; j <= g; ++j) ways[static_cast<size_t>(j)] += ways[static_cast<size_t>(j - dp)];
  }

  auto char_sum = [&](int m) {
    int64_t s = 0;
    for_each_monic(F, m, 0, monic_count(F, m), [&](uint64_t, const Poly& h) {
      s += jacobi_symbol(F, h, f);
    });
    return s;
  };

  int64_t rhs = 0;
  for (int j = 0; j <= g; ++j)
    if (ways[static_cast<size_t>(j)] != 0)
      rhs += ways[static_cast<size_t>(j)] * char_sum(2 * g + 1 - 2 * j);
  for (int j = 0; j <= g - 1; ++j)
    if (ways[static_cast<size_t>(j)] != 0)
      rhs -= F.q() * ways[static_cast<size_t>(j)] * char_sum(2 * g - 1 - 2 * j);

  return {lhs, rhs, lhs == rhs};
}

}  // namespace ffmom
