#ifndef CRDCACHE_CONSTRUCT_HPP
#define CRDCACHE_CONSTRUCT_HPP

#include <map>
#include <vector>

#include "crdcache/design.hpp"
#include "crdcache/rational.hpp"

namespace crdcache {

// Digit-pattern designs over the point set {0,...,q^m-1}. Write each
// point y in base q, least significant digit first: y = sum_i y_i q^i.
// For a t-subset J = {j_0 < ... < j_{t-1}} of digit positions and a tuple
// a in {0,...,q-1}^t, the block
//
//   B(J, a) = { y : y_{j_p} = a_p for all p }
//
// fixes the digits on J. One parallel class per subset J; q^t blocks per
// class. The result is resolvable with v = q^m, r = C(m,t), b = q^t *
// C(m,t), k = q^{m-t}; for t = 1 it is a maximal cross resolvable design
// with mu_z = q^{m-z} for every z in {2,...,m}.

struct ConstructionParams {
    int q = 0; // alphabet size, >= 2
    int m = 0; // expansion length, >= 2
    int t = 1; // fixed digit positions per block, 0 < t < m
};

// Closed-form parameters of the construction (no materialization).
// mu is populated only for t = 1.
struct PredictedParams {
    BigInt v, b, r, k, b_r;
    std::map<int, BigInt> mu; // z -> q^{m-z}, z in {2,...,m}; empty for t >= 2
};

// Base-q digits of y, least significant first, padded to length m.
// Throws out_of_range unless 0 <= y < q^m.
std::vector<int> qary_expand(long long y, int q, int m);

// Materializes the design with its natural resolution. Canonical order:
// classes follow the lexicographic order of the position subsets J;
// within a class, blocks follow the tuple a read as a base-q integer
// (leftmost position most significant). The result always passes
// validate_resolution. Throws invalid_params when q < 2, m < 2, t
// outside (0, m), or when the materialized size is unreasonable
// (v must fit in int and b*k point slots must stay below 2^28).
Resolution construct(const ConstructionParams& params);

// Lemma-level predicted parameters; throws invalid_params on bad params.
PredictedParams predicted_params(const ConstructionParams& params);

} // namespace crdcache

#endif
