#include "ffmom/enumerate.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ffmom {

uint64_t monic_count(const Fq& F, int n) {
  if (n < 0) throw std::invalid_argument("monic_count: negative degree");
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > UINT64_MAX / static_cast<uint64_t>(F.q()))
      throw std::overflow_error("monic_count: q^n exceeds 64 bits");
    total *= static_cast<uint64_t>(F.q());
  }
  return total;
}

Poly monic_of_index(const Fq& F, int n, uint64_t idx) {
  if (n < 0) throw std::invalid_argument("monic_of_index: negative degree");
  std::vector<int32_t> c(static_cast<size_t>(n) + 1, 0);
  c[static_cast<size_t>(n)] = 1;
  uint64_t q = static_cast<uint64_t>(F.q());
  for (int i = 0; i < n; ++i) {
    c[static_cast<size_t>(i)] = static_cast<int32_t>(idx % q);
    idx /= q;
  }
  if (idx != 0) throw std::out_of_range("monic_of_index: index out of range");
  return Poly::from_canonical(std::move(c));
}

uint64_t index_of_monic(const Fq& F, const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("index_of_monic: not monic");
  uint64_t idx = 0;
  for (int i = f.deg() - 1; i >= 0; --i)
    idx = idx * static_cast<uint64_t>(F.q()) + static_cast<uint64_t>(f.coeff(i));
  return idx;
}

void for_each_monic(const Fq& F, int n, uint64_t begin, uint64_t end,
                    const std::function<void(uint64_t, const Poly&)>& fn) {
  if (begin >= end) return;
  if (end > monic_count(F, n)) throw std::out_of_range("for_each_monic: range");
  uint64_t q = static_cast<uint64_t>(F.q());
  Poly f = monic_of_index(F, n, begin);
  std::vector<int32_t> c(f.coeffs());
  for (uint64_t idx = begin; idx < end; ++idx) {
    fn(idx, f);
    if (idx + 1 == end) break;
    /* base-q increment of the low n coefficients */
    for (int i = 0; i < n; ++i) {
      if (++c[static_cast<size_t>(i)] < static_cast<int32_t>(q)) break;
      c[static_cast<size_t>(i)] = 0;
    }
    f = Poly::from_canonical(std::vector<int32_t>(c));
  }
}

std::vector<Poly> enumerate(const Fq& F, PolyClass cls, int n) {
  std::vector<Poly> out;
  uint64_t total = monic_count(F, n);
  for_each_monic(F, n, 0, total, [&](uint64_t, const Poly& f) {
    switch (cls) {
      case PolyClass::Monic:
        out.push_back(f);
        break;
      case PolyClass::SquarefreeMonic:
        if (n == 0 || is_squarefree(F, f)) out.push_back(f);
        break;
      case PolyClass::IrreducibleMonic:
        if (n >= 1 && is_irreducible(F, f)) out.push_back(f);
        break;
    }
  });
  return out;
}

std::vector<std::pair<uint64_t, uint64_t>> chunk_ranges(uint64_t total, unsigned parts) {
  if (parts == 0) throw std::invalid_argument("chunk_ranges: zero parts");
  std::vector<std::pair<uint64_t, uint64_t>> out;
  out.reserve(parts);
  for (unsigned i = 0; i < parts; ++i) {
    uint64_t b = total / parts * i + std::min<uint64_t>(i, total % parts);
    uint64_t e = total / parts * (i + 1) + std::min<uint64_t>(i + 1, total % parts);
    out.emplace_back(b, e);
  }
  return out;
}

static int mobius(int n) {
  int m = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
  }
  if (n > 1) m = -m;
  return m;
}

bigint irreducible_count(const Fq& F, int n) {
  if (n < 1) throw std::invalid_argument("irreducible_count: degree must be >= 1");
  bigint total = 0;
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    int mu = mobius(d);
    if (mu == 0) continue;
    bigint p = boost::multiprecision::pow(bigint(F.q()), static_cast<unsigned>(n / d));
    total += mu * p;
  }
  return total / n;
}

bool is_irreducible(const Fq& F, const Poly& f) {
  int n = f.deg();
  if (n < 1 || !f.is_monic()) return false;
  if (n == 1) return true;
  /* f irreducible iff x^(q^n) = x (mod f) and gcd(x^(q^(n/p)) - x, f) = 1
     for every prime p dividing n */
  Poly x = Poly::x();
  Poly xq = pow_mod(F, x, static_cast<uint64_t>(F.q()), f);
  std::vector<Poly> frob;  /* frob[k] = x^(q^(k+1)) mod f */
  frob.push_back(xq);
  for (int k = 2; k <= n; ++k) {
    /* compose by repeated q-th powering of the previous iterate */
    Poly next = pow_mod(F, frob.back(), static_cast<uint64_t>(F.q()), f);
    frob.push_back(next);
  }
  if (frob[static_cast<size_t>(n - 1)] != mod(F, x, f)) return false;
  int m = n;
  for (int p = 2; p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    Poly g = gcd(F, sub(F, frob[static_cast<size_t>(n / p - 1)], x), f);
    if (!g.is_one()) return false;
  }
  return true;
}

Poly first_irreducible(const Fq& F, int n) {
  if (n < 1) throw std::invalid_argument("first_irreducible: degree must be >= 1");
  uint64_t total = monic_count(F, n);
  for (uint64_t idx = 0; idx < total; ++idx) {
    Poly f = monic_of_index(F, n, idx);
    if (is_irreducible(F, f)) return f;
  }
  throw std::logic_error("first_irreducible: none found");
}

const std::vector<Poly>& irreducible_table(const Fq& F, int n) {
  static std::mutex m;
  static std::map<std::pair<int64_t, int>, std::unique_ptr<std::vector<Poly>>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(F.q(), n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto table = std::make_unique<std::vector<Poly>>(
        enumerate(F, PolyClass::IrreducibleMonic, n));
    it = cache.emplace(key, std::move(table)).first;
  }
  return *it->second;
}

}  // namespace ffmom
