#ifndef CRDCACHE_METRICS_HPP
#define CRDCACHE_METRICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crdcache/rational.hpp"

namespace crdcache {

// Closed-form rate / subpacketization / coding-gain calculators for the
// digit-pattern multi-access scheme ("proposed") and the comparison
// schemes, all in exact rational arithmetic. A ComparisonRow mirrors one
// column of the comparison tables: absent fields mean the quantity has no
// stated formula at those parameters (they render as empty CSV cells);
// `applicable = false` (with a reason) marks rows entirely outside a
// scheme's stated regime. Values are never silently extrapolated.

struct ComparisonRow {
    std::string scheme;
    BigInt caches = 0;
    std::optional<Rational> M_over_N;
    int z = 0;
    std::optional<BigInt> K;
    std::optional<BigInt> F;
    std::optional<Rational> R;
    std::optional<Rational> R_per_K;
    std::optional<Rational> gain;
    bool applicable = true;
    std::string reason; // non-empty iff !applicable
};

// Dedicated-cache scheme (one cache per user, z = 1):
// R = K(1 - g)/(1 + Kg) with g = M/N and K = caches. Subpacketization
// F = C(K, Kg) and gain 1 + Kg are emitted only when Kg is an integer
// (the corner points of the scheme); both stay empty otherwise.
// Throws invalid_params unless 0 <= M/N <= 1.
ComparisonRow man_metrics(const BigInt& caches, const Rational& file_fraction);

// Cyclic multi-access rate R = (K - Kz*g)/(1 + Kg) for g <= 1/z, else 0.
// Throws invalid_params when K < 1 or z < 1 or g outside [0, 1].
Rational hkd_rate(const BigInt& K, int z, const Rational& file_fraction);

// Cyclic multi-access scheme with C caches = C users, memory point
// M = iN/C: R = C(1 - z*i/C)^2 while z*i/C <= 1, else 0; subpacketization
// F = C(C - iz + i - 1, i - 1) * C/i for i >= 1 when that value is a
// positive integer (empty otherwise, as at i = 0).
// Throws invalid_memory_point unless 0 <= i <= ceil(C/z).
ComparisonRow rk_metrics(const BigInt& caches, int z, const BigInt& i);

// Subpacketization F = C(C - 2z + 2)/4 of the shared-cache scheme stated
// for the C*M/N = 2 memory point. Throws non_integer_result when the
// expression is not a positive integer.
BigInt spe_subpacketization(const BigInt& caches, int z);

// Shared-link multi-access scheme at caches = qm, M/N = 1/q:
// per-user rate (1 - z/q)/(1 + m) clamped to 0 for z >= q; K = qm;
// F = qm * C(m(q - z + 1), m) when z <= q (empty otherwise); gain 1 + m.
// Throws invalid_params when q < 1, m < 1 or z < 1.
ComparisonRow clwzc_metrics(int q, int m, int z);

// Ratio of the dedicated-cache per-user rate to the proposed per-user
// rate at equal cache count qm and fraction 1/q:
// (q/(q-1))^{z-1} * 2^z / (1 + m). Throws invalid_params unless q >= 2
// and 2 <= z <= m.
Rational access_gain(int q, int m, int z);

// Prior-work CRD families at matched cache count and fraction, paired
// with the proposed scheme at its maximum access degree.
//   affine:  caches q(q^m'-1)/(q-1), M/N = 1/q; prior z = 2 with
//            K = q^3(q^m'-1)(q^{m'-1}-1)/(2(q-1)^2), F = q^m',
//            R/K = ((q-1)/2q)^2, gain 4; proposed has m = z = L where
//            L = (q^m'-1)/(q-1).
//   hadamard: caches 2(4n-1), M/N = 1/2; prior z = 2 with
//            K = 4(2n-1)(4n-1), F = 4n, R = (2n-1)(4n-1)/4, R/K = 1/16,
//            gain 4; proposed has q = 2, m = z = 4n-1.
// Returns {prior row, proposed row}. Throws invalid_params (affine needs
// q >= 2, m' >= 2; hadamard needs n >= 1).
enum class KmrKind { affine, hadamard };
struct KmrParams {
    int q = 0;      // affine only
    int mprime = 0; // affine only
    int n = 0;      // hadamard only
};
std::pair<ComparisonRow, ComparisonRow> kmr_rows(KmrKind kind, const KmrParams& params);

// The proposed scheme as a table row: caches qm, values from the closed
// forms (K = q^z C(m,z), M/N = 1/q, F = q^m, R = C(m,z)((q-1)/2)^z,
// gain 2^z). Rows with z < 2 or z > m come back non-applicable.
ComparisonRow proposed_row(int q, int m, int z);

// Parameter sweep driving figure reproduction. Scheme names: proposed,
// man, hkd, rk, spe, clwzc, kmr_affine, kmr_hadamard.
//   - mprime non-empty: affine comparison; grid = q x mprime, proposed
//     evaluated at m = z = (q^m'-1)/(q-1), man at caches = qL.
//   - n non-empty: hadamard comparison; grid = n, q fixed at 2.
//   - otherwise: grid = q x m x z; man collapses to one row per (q, m)
//     (its rate does not involve z), spe rows are applicable only at
//     m = 2, z = 2 (the C*M/N = 2 regime).
// Rows are ordered scheme-first (in the order requested), then by sweep
// order. Throws invalid_params on unknown scheme names or empty grids.
struct SweepSpec {
    std::vector<std::string> schemes;
    std::vector<int> q;
    std::vector<int> m;
    std::vector<int> z;
    std::vector<int> mprime;
    std::vector<int> n;
};
std::vector<ComparisonRow> comparison_table(const SweepSpec& request);

// CSV export. Columns:
//   scheme,caches,M_over_N,z,K,F,R,R_per_K,gain,applicable,reason,
//   M_over_N_decimal,R_decimal,R_per_K_decimal
// Exact values render as integers or "p/q" fractions; the trailing
// columns repeat the rationals as 12-significant-digit decimals. Header
// always emitted; UTF-8; LF line endings.
std::string to_csv(const std::vector<ComparisonRow>& rows);

// Sweep syntax: "a..b" (inclusive range) or comma-separated integers.
// Throws parse_error on malformed input.
std::vector<int> parse_sweep(const std::string& text);

} // namespace crdcache

#endif
