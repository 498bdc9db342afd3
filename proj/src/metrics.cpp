#include "crdcache/metrics.hpp"

#include <algorithm>
#include <charconv>

#include "crdcache/errors.hpp"
#include "crdcache/scheme.hpp"

namespace crdcache {

namespace {

bool is_integer(const Rational& value) { return denominator(value) == 1; }

unsigned to_unsigned(const BigInt& value, const char* what) {
    if (value < 0 || value > 4000000000LL) {
        fail(Errc::invalid_params, std::string(what) + " out of supported range: " + value.str());
    }
    return static_cast<unsigned>(value);
}

bool is_prime_power(int q) {
    if (q < 2) return false;
    for (int p = 2; static_cast<long long>(p) * p <= q; ++p) {
        if (q % p == 0) {
            while (q % p == 0) q /= p;
            return q == 1;
        }
    }
    return true; // prime
}

void check_fraction(const Rational& gamma) {
    if (gamma < 0 || gamma > 1) {
        fail(Errc::invalid_params, "file fraction outside [0, 1]: " + to_fraction_string(gamma));
    }
}

} // namespace

ComparisonRow man_metrics(const BigInt& caches, const Rational& file_fraction) {
    if (caches < 1) fail(Errc::invalid_params, "cache count must be >= 1, got " + caches.str());
    check_fraction(file_fraction);

    ComparisonRow row;
    row.scheme = "man";
    row.caches = caches;
    row.M_over_N = file_fraction;
    row.z = 1;
    row.K = caches;

    const Rational K(caches);
    const Rational Kg = K * file_fraction;
    row.R = K * (1 - file_fraction) / (1 + Kg);
    row.R_per_K = *row.R / K;
    if (is_integer(Kg)) {
        // Corner point of the scheme: F and the per-transmission gain have
        // stated values only here.
        row.F = binomial(to_unsigned(caches, "cache count"),
                         to_unsigned(numerator(Kg), "cached fraction times caches"));
        row.gain = Kg + 1;
    }
    return row;
}

Rational hkd_rate(const BigInt& K, int z, const Rational& file_fraction) {
    if (K < 1) fail(Errc::invalid_params, "user count must be >= 1, got " + K.str());
    if (z < 1) fail(Errc::invalid_params, "access degree must be >= 1, got " + std::to_string(z));
    check_fraction(file_fraction);
    if (file_fraction >= Rational(1, z)) return 0;
    const Rational k(K);
    return (k - k * z * file_fraction) / (1 + k * file_fraction);
}

ComparisonRow rk_metrics(const BigInt& caches, int z, const BigInt& i) {
    if (caches < 1) fail(Errc::invalid_params, "cache count must be >= 1, got " + caches.str());
    if (z < 1) fail(Errc::invalid_params, "access degree must be >= 1, got " + std::to_string(z));
    const BigInt ceil_cz = (caches + z - 1) / z;
    if (i < 0 || i > ceil_cz) {
        fail(Errc::invalid_memory_point, "memory point i = " + i.str() + " outside [0, " +
                                             ceil_cz.str() + "] for " + caches.str() +
                                             " caches and z = " + std::to_string(z));
    }

    ComparisonRow row;
    row.scheme = "rk";
    row.caches = caches;
    row.M_over_N = Rational(i, caches);
    row.z = z;
    row.K = caches;

    const Rational zg = Rational(z) * *row.M_over_N;
    row.R = zg >= 1 ? Rational(0) : Rational(caches) * (1 - zg) * (1 - zg);
    row.R_per_K = *row.R / Rational(caches);

    if (i >= 1) {
        const BigInt top = caches - i * z + i - 1;
        if (top >= i - 1) {
            const Rational f = Rational(binomial(to_unsigned(top, "subpacketization argument"),
                                                 to_unsigned(i - 1, "memory point"))) *
                               Rational(caches, i);
            if (is_integer(f) && f >= 1) row.F = numerator(f);
        }
    }
    return row;
}

BigInt spe_subpacketization(const BigInt& caches, int z) {
    if (caches < 1) fail(Errc::invalid_params, "cache count must be >= 1, got " + caches.str());
    if (z < 1) fail(Errc::invalid_params, "access degree must be >= 1, got " + std::to_string(z));
    const BigInt num = caches * (caches - 2 * z + 2);
    if (num <= 0 || num % 4 != 0) {
        fail(Errc::non_integer_result, "C(C - 2z + 2)/4 is not a positive integer at C = " +
                                           caches.str() + ", z = " + std::to_string(z));
    }
    return num / 4;
}

ComparisonRow clwzc_metrics(int q, int m, int z) {
    if (q < 1 || m < 1 || z < 1) {
        fail(Errc::invalid_params, "q, m, z must all be >= 1");
    }
    ComparisonRow row;
    row.scheme = "clwzc";
    row.caches = BigInt(q) * m;
    row.M_over_N = Rational(1, q);
    row.z = z;
    row.K = row.caches;
    row.R_per_K = z >= q ? Rational(0) : Rational(q - z, q) / (1 + m);
    row.R = *row.R_per_K * Rational(row.caches);
    row.gain = Rational(1 + m);
    if (z <= q) {
        row.F = row.caches * binomial(static_cast<unsigned>(m) * static_cast<unsigned>(q - z + 1),
                                      static_cast<unsigned>(m));
    }
    return row;
}

Rational access_gain(int q, int m, int z) {
    if (q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
    if (z < 2 || z > m) {
        fail(Errc::invalid_params, "z must satisfy 2 <= z <= m, got z = " + std::to_string(z) +
                                       " with m = " + std::to_string(m));
    }
    return rational_pow(Rational(q, q - 1), static_cast<unsigned>(z - 1)) *
           Rational(ipow(2, static_cast<unsigned>(z)), 1 + m);
}

ComparisonRow proposed_row(int q, int m, int z) {
    if (q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
    if (m < 1) fail(Errc::invalid_params, "m must be >= 1, got " + std::to_string(m));

    ComparisonRow row;
    row.scheme = "proposed";
    row.caches = BigInt(q) * m;
    row.M_over_N = Rational(1, q);
    row.z = z;
    if (z < 2 || z > m) {
        row.applicable = false;
        row.reason = "access degree must satisfy 2 <= z <= m";
        return row;
    }
    const SchemeParams params = scheme_params(q, m, z);
    row.K = params.K;
    row.F = params.F;
    row.R = params.R;
    row.R_per_K = params.R_per_K;
    row.gain = Rational(params.gain);
    return row;
}

namespace {

// L = (q^m' - 1)/(q - 1): parallel-class count matching the affine-family
// cache budget.
BigInt affine_class_count(int q, int mprime) {
    return (ipow(BigInt(q), static_cast<unsigned>(mprime)) - 1) / (q - 1);
}

int affine_class_count_int(int q, int mprime) {
    const BigInt L = affine_class_count(q, mprime);
    if (L > 100000) {
        fail(Errc::invalid_params,
             "(q^m' - 1)/(q - 1) too large to evaluate the proposed scheme: " + L.str());
    }
    return static_cast<int>(L);
}

} // namespace

std::pair<ComparisonRow, ComparisonRow> kmr_rows(KmrKind kind, const KmrParams& params) {
    if (kind == KmrKind::affine) {
        const int q = params.q;
        const int mprime = params.mprime;
        if (q < 2 || !is_prime_power(q)) {
            fail(Errc::invalid_params,
                 "affine comparison needs q a prime power >= 2, got " + std::to_string(q));
        }
        if (mprime < 2) {
            fail(Errc::invalid_params, "affine comparison needs m' >= 2, got " + std::to_string(mprime));
        }
        const int L = affine_class_count_int(q, mprime);
        const BigInt caches = BigInt(q) * L;

        ComparisonRow prior;
        prior.scheme = "kmr_affine";
        prior.caches = caches;
        prior.M_over_N = Rational(1, q);
        prior.z = 2;
        const BigInt qmp = ipow(BigInt(q), static_cast<unsigned>(mprime));
        const BigInt qmp1 = ipow(BigInt(q), static_cast<unsigned>(mprime - 1));
        const Rational users =
            Rational(ipow(BigInt(q), 3) * (qmp - 1) * (qmp1 - 1), 2 * BigInt(q - 1) * (q - 1));
        if (!is_integer(users)) fail(Errc::invalid_params, "non-integral user count");
        prior.K = numerator(users);
        prior.F = qmp;
        prior.R = Rational(BigInt(q) * (qmp - 1) * (qmp1 - 1), 8);
        prior.R_per_K = rational_pow(Rational(q - 1, 2 * q), 2);
        prior.gain = Rational(4);

        ComparisonRow proposed = proposed_row(q, L, L);
        return {prior, proposed};
    }

    const int n = params.n;
    if (n < 1) fail(Errc::invalid_params, "hadamard comparison needs n >= 1, got " + std::to_string(n));
    if (n > 10000) fail(Errc::invalid_params, "n too large to evaluate: " + std::to_string(n));
    const int m = 4 * n - 1;

    ComparisonRow prior;
    prior.scheme = "kmr_hadamard";
    prior.caches = 2 * m;
    prior.M_over_N = Rational(1, 2);
    prior.z = 2;
    prior.K = BigInt(4) * (2 * n - 1) * m;
    prior.F = 4 * n;
    prior.R = Rational(BigInt(2 * n - 1) * m, 4);
    prior.R_per_K = Rational(1, 16);
    prior.gain = Rational(4);

    ComparisonRow proposed = proposed_row(2, m, m);
    return {prior, proposed};
}

namespace {

const std::vector<std::string>& known_schemes() {
    static const std::vector<std::string> names = {"proposed", "man",   "hkd",        "rk",
                                                   "spe",      "clwzc", "kmr_affine", "kmr_hadamard"};
    return names;
}

[[noreturn]] void unknown_scheme(const std::string& name) {
    std::string list;
    for (const auto& s : known_schemes()) {
        if (!list.empty()) list += ", ";
        list += s;
    }
    fail(Errc::invalid_params, "unknown scheme '" + name + "' (known: " + list + ")");
}

void require_empty(const std::vector<int>& sweep, const char* name, const char* mode) {
    if (!sweep.empty()) {
        fail(Errc::invalid_params,
             std::string("the ") + mode + " sweep determines " + name + "; drop it");
    }
}

} // namespace

std::vector<ComparisonRow> comparison_table(const SweepSpec& request) {
    if (request.schemes.empty()) fail(Errc::invalid_params, "no schemes requested");
    for (const auto& name : request.schemes) {
        if (std::find(known_schemes().begin(), known_schemes().end(), name) ==
            known_schemes().end()) {
            unknown_scheme(name);
        }
    }
    const bool affine_mode = !request.mprime.empty();
    const bool hadamard_mode = !request.n.empty();
    if (affine_mode && hadamard_mode) {
        fail(Errc::invalid_params, "mprime and n sweeps are mutually exclusive");
    }

    std::vector<ComparisonRow> rows;

    if (affine_mode) {
        if (request.q.empty()) fail(Errc::invalid_params, "the mprime sweep needs a q sweep");
        require_empty(request.m, "m", "mprime");
        require_empty(request.z, "z", "mprime");
        for (const auto& scheme : request.schemes) {
            for (int q : request.q) {
                for (int mprime : request.mprime) {
                    if (q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
                    if (mprime < 2) {
                        fail(Errc::invalid_params, "m' must be >= 2, got " + std::to_string(mprime));
                    }
                    const int L = affine_class_count_int(q, mprime);
                    if (scheme == "kmr_affine") {
                        if (!is_prime_power(q)) {
                            ComparisonRow row;
                            row.scheme = "kmr_affine";
                            row.caches = BigInt(q) * L;
                            row.M_over_N = Rational(1, q);
                            row.z = 2;
                            row.applicable = false;
                            row.reason = "q must be a prime power";
                            rows.push_back(std::move(row));
                        } else {
                            rows.push_back(kmr_rows(KmrKind::affine, {q, mprime, 0}).first);
                        }
                    } else if (scheme == "proposed") {
                        rows.push_back(proposed_row(q, L, L));
                    } else if (scheme == "man") {
                        rows.push_back(man_metrics(BigInt(q) * L, Rational(1, q)));
                    } else {
                        fail(Errc::invalid_params, "scheme '" + scheme +
                                                       "' is not part of the mprime comparison "
                                                       "(use kmr_affine, proposed, man)");
                    }
                }
            }
        }
        return rows;
    }

    if (hadamard_mode) {
        require_empty(request.q, "q", "n");
        require_empty(request.m, "m", "n");
        require_empty(request.z, "z", "n");
        for (const auto& scheme : request.schemes) {
            for (int n : request.n) {
                if (n < 1) fail(Errc::invalid_params, "n must be >= 1, got " + std::to_string(n));
                if (scheme == "kmr_hadamard") {
                    rows.push_back(kmr_rows(KmrKind::hadamard, {0, 0, n}).first);
                } else if (scheme == "proposed") {
                    rows.push_back(proposed_row(2, 4 * n - 1, 4 * n - 1));
                } else if (scheme == "man") {
                    rows.push_back(man_metrics(BigInt(2) * (4 * n - 1), Rational(1, 2)));
                } else {
                    fail(Errc::invalid_params, "scheme '" + scheme +
                                                   "' is not part of the n comparison "
                                                   "(use kmr_hadamard, proposed, man)");
                }
            }
        }
        return rows;
    }

    if (request.q.empty() || request.m.empty()) {
        fail(Errc::invalid_params, "a comparison sweep needs q and m (plus z for z-dependent schemes)");
    }
    for (const auto& scheme : request.schemes) {
        const bool needs_z = scheme != "man";
        if (needs_z && request.z.empty()) {
            fail(Errc::invalid_params, "scheme '" + scheme + "' needs a z sweep");
        }
        if (scheme == "kmr_affine" || scheme == "kmr_hadamard") {
            fail(Errc::invalid_params, "scheme '" + scheme + "' needs its own sweep (" +
                                           (scheme == "kmr_affine" ? "--mprime" : "--n") + ")");
        }
        for (int q : request.q) {
            if (q < 2) fail(Errc::invalid_params, "q must be >= 2, got " + std::to_string(q));
            for (int m : request.m) {
                if (m < 1) fail(Errc::invalid_params, "m must be >= 1, got " + std::to_string(m));
                if (scheme == "man") {
                    rows.push_back(man_metrics(BigInt(q) * m, Rational(1, q)));
                    continue;
                }
                for (int z : request.z) {
                    if (scheme == "proposed") {
                        rows.push_back(proposed_row(q, m, z));
                    } else if (scheme == "hkd") {
                        ComparisonRow row;
                        row.scheme = "hkd";
                        row.caches = BigInt(q) * m;
                        row.M_over_N = Rational(1, q);
                        row.z = z;
                        row.K = row.caches;
                        row.R = hkd_rate(row.caches, z, Rational(1, q));
                        row.R_per_K = *row.R / Rational(row.caches);
                        rows.push_back(std::move(row));
                    } else if (scheme == "rk") {
                        try {
                            rows.push_back(rk_metrics(BigInt(q) * m, z, m));
                        } catch (const Error& err) {
                            if (err.code() != Errc::invalid_memory_point) throw;
                            ComparisonRow row;
                            row.scheme = "rk";
                            row.caches = BigInt(q) * m;
                            row.M_over_N = Rational(1, q);
                            row.z = z;
                            row.applicable = false;
                            row.reason = "memory point i = m exceeds ceil(caches/z)";
                            rows.push_back(std::move(row));
                        }
                    } else if (scheme == "spe") {
                        ComparisonRow row;
                        row.scheme = "spe";
                        row.caches = BigInt(q) * m;
                        row.M_over_N = Rational(1, q);
                        row.z = z;
                        if (m == 2 && z == 2) {
                            row.K = row.caches;
                            row.F = spe_subpacketization(row.caches, 2);
                        } else {
                            row.applicable = false;
                            row.reason = "stated only for caches*M/N = 2 (m = 2 and z = 2)";
                        }
                        rows.push_back(std::move(row));
                    } else if (scheme == "clwzc") {
                        rows.push_back(clwzc_metrics(q, m, z));
                    }
                }
            }
        }
    }
    return rows;
}

namespace {

std::string csv_escape(const std::string& text) {
    std::string out = text;
    std::replace(out.begin(), out.end(), ',', ';');
    return out;
}

std::string opt_int(const std::optional<BigInt>& value) { return value ? value->str() : ""; }

std::string opt_fraction(const std::optional<Rational>& value) {
    return value ? to_fraction_string(*value) : "";
}

std::string opt_decimal(const std::optional<Rational>& value) {
    return value ? to_decimal_string(*value) : "";
}

} // namespace

std::string to_csv(const std::vector<ComparisonRow>& rows) {
    std::string out = "scheme,caches,M_over_N,z,K,F,R,R_per_K,gain,applicable,reason,"
                      "M_over_N_decimal,R_decimal,R_per_K_decimal\n";
    for (const ComparisonRow& row : rows) {
        out += csv_escape(row.scheme);
        out += ',';
        out += row.caches.str();
        out += ',';
        out += opt_fraction(row.M_over_N);
        out += ',';
        out += std::to_string(row.z);
        out += ',';
        out += opt_int(row.K);
        out += ',';
        out += opt_int(row.F);
        out += ',';
        out += opt_fraction(row.R);
        out += ',';
        out += opt_fraction(row.R_per_K);
        out += ',';
        out += opt_fraction(row.gain);
        out += ',';
        out += row.applicable ? "true" : "false";
        out += ',';
        out += csv_escape(row.reason);
        out += ',';
        out += opt_decimal(row.M_over_N);
        out += ',';
        out += opt_decimal(row.R);
        out += ',';
        out += opt_decimal(row.R_per_K);
        out += '\n';
    }
    return out;
}

namespace {

int parse_int(const std::string& text) {
    int value = 0;
    const char* begin = text.data();
    const char* end = begin + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        fail(Errc::parse_error, "not an integer: '" + text + "'");
    }
    return value;
}

} // namespace

std::vector<int> parse_sweep(const std::string& text) {
    if (text.empty()) fail(Errc::parse_error, "empty sweep");
    const std::size_t dots = text.find("..");
    if (dots != std::string::npos) {
        const int lo = parse_int(text.substr(0, dots));
        const int hi = parse_int(text.substr(dots + 2));
        if (lo > hi) fail(Errc::parse_error, "descending range: '" + text + "'");
        if (static_cast<long long>(hi) - lo >= 1000000) {
            fail(Errc::parse_error, "range too large: '" + text + "'");
        }
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::vector<int> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::size_t stop = comma == std::string::npos ? text.size() : comma;
        out.push_back(parse_int(text.substr(start, stop - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

} // namespace crdcache
