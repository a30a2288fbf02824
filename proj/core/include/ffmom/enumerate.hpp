#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ffmom/poly.hpp"

namespace ffmom {

using bigint = boost::multiprecision::cpp_int;

/*
 * Monic degree-n polynomials are indexed by the base-q digits of their n free
 * coefficients, the degree-(n-1) coefficient most significant, so index order
 * equals the (degree, top-down coefficient) total order on Poly.  The indexing
 * is the contract that lets ensemble sweeps be partitioned into contiguous
 * chunks with bit-identical results for any worker count.
 */
uint64_t monic_count(const Fq& F, int n);
Poly monic_of_index(const Fq& F, int n, uint64_t idx);
uint64_t index_of_monic(const Fq& F, const Poly& f);

enum class PolyClass { Monic, SquarefreeMonic, IrreducibleMonic };

/* materialized listing in index order; meant for small degree */
std::vector<Poly> enumerate(const Fq& F, PolyClass cls, int n);

/* streaming sweep over monic degree-n indices [begin, end) */
void for_each_monic(const Fq& F, int n, uint64_t begin, uint64_t end,
                    const std::function<void(uint64_t, const Poly&)>& fn);

/* contiguous [begin, end) ranges covering [0, total), sizes differing by <= 1 */
std::vector<std::pair<uint64_t, uint64_t>> chunk_ranges(uint64_t total, unsigned parts);

/*
 * Number of monic irreducibles of degree n:
 *     pi_q(n) = (1/n) * sum_{d | n} mu(d) q^(n/d),
 * exact in big integers.  They satisfy sum_{d | n} d * pi_q(d) = q^n.
 */
bigint irreducible_count(const Fq& F, int n);

bool is_irreducible(const Fq& F, const Poly& f);

/* irreducible monic of degree n with the smallest enumeration index */
Poly first_irreducible(const Fq& F, int n);

/* cached listing of all monic irreducibles of degree n, in index order */
const std::vector<Poly>& irreducible_table(const Fq& F, int n);

}  // namespace ffmom
