#include "adesign/bounds.hpp"

#include <numeric>
#include <stdexcept>

namespace adesign {

namespace {

long long cdiv(long long a, long long b) { return (a + b - 1) / b; }
long long fdiv(long long a, long long b) { return a / b; }

void check_range(long long v, long long k, long long lambda, long long k_min) {
    if (k < k_min || k >= v) throw std::invalid_argument("need k_min <= k < v");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
}

long long binomial_checked(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (__int128{1} << 62)) throw std::invalid_argument("binomial overflow");
    }
    return static_cast<long long>(r);
}

Fraction make_fraction(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g > 0) {
        num /= g;
        den /= g;
    }
    return Fraction{num, den};
}

}  // namespace

long long schonheim_bound(long long v, long long k, long long lambda) {
    check_range(v, k, lambda, 2);
    return cdiv(v * cdiv(lambda * (v - 1), k - 1), k);
}

long long johnson_bound(long long v, long long k, long long lambda) {
    check_range(v, k, lambda, 2);
    return fdiv(v * fdiv(lambda * (v - 1), k - 1), k);
}

std::optional<HorsleyBound> horsley_covering(long long v, long long k, long long lambda) {
    check_range(v, k, lambda, 3);
    // lambda*(v-1) = r*(k-1) - d with 0 <= d < k-1 has the unique solution
    long long r = cdiv(lambda * (v - 1), k - 1);
    long long d = r * (k - 1) - lambda * (v - 1);
    if (d >= r - lambda) return std::nullopt;
    return HorsleyBound{cdiv(v * (r + 1), k + 1), r, d};
}

std::optional<HorsleyBound> horsley_packing(long long v, long long k, long long lambda) {
    check_range(v, k, lambda, 3);
    // lambda*(v-1) = r*(k-1) + d with 0 <= d < k-1
    long long r = fdiv(lambda * (v - 1), k - 1);
    long long d = lambda * (v - 1) - r * (k - 1);
    if (d >= r - lambda) return std::nullopt;
    return HorsleyBound{fdiv(v * (r - 1), k - 1), r, d};
}

BoundReport adesign_block_window(long long v, long long k, long long lambda) {
    check_range(v, k, lambda, 3);
    BoundReport rep;
    rep.v = v;
    rep.k = k;
    rep.lambda = lambda;
    rep.schonheim = schonheim_bound(v, k, lambda);
    rep.johnson = johnson_bound(v, k, lambda + 1);
    rep.horsley_cov = horsley_covering(v, k, lambda);
    rep.horsley_pack = horsley_packing(v, k, lambda + 1);
    // Tightest available bound on each side; the refined values are valid
    // but not always stronger than the classical ones.
    rep.lower = rep.schonheim;
    if (rep.horsley_cov) rep.lower = std::max(rep.lower, rep.horsley_cov->value);
    rep.upper = rep.johnson;
    if (rep.horsley_pack) rep.upper = std::min(rep.upper, rep.horsley_pack->value);
    return rep;
}

FeasibilityReport feasibility(long long v, long long k, int t, long long lambda) {
    if (t < 1 || t >= k || k >= v) throw std::invalid_argument("need 0 < t < k < v");
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    FeasibilityReport rep;
    rep.v = v;
    rep.k = k;
    rep.t = t;
    rep.lambda = lambda;
    rep.ratio_condition = 2 * (k - t) > (v - t);
    rep.adesign_lambda = cdiv(lambda * (v - t), k - t);
    rep.design_lambda_lo = rep.adesign_lambda;
    rep.design_lambda_hi = rep.adesign_lambda + 1;
    rep.floor_identity_lo = lambda == fdiv(rep.design_lambda_lo * (k - t), v - t);
    rep.floor_identity_hi = lambda == fdiv(rep.design_lambda_hi * (k - t), v - t);
    long long cv = binomial_checked(v, t + 1);
    long long ck = binomial_checked(k, t + 1);
    rep.block_lower = make_fraction(lambda * cv, ck);
    rep.block_upper = make_fraction((lambda + 1) * cv, ck);
    return rep;
}

bool strictly_inside(const FeasibilityReport& rep, long long b) {
    return rep.block_lower.num < b * rep.block_lower.den &&
           b * rep.block_upper.den < rep.block_upper.num;
}

long long covering_bound(long long v, long long k, long long lambda) {
    if (k >= 3) {
        auto h = horsley_covering(v, k, lambda);
        if (h) return h->value;
    }
    return schonheim_bound(v, k, lambda);
}

bool is_minimal_covering(const IncidenceStructure& S, long long lambda) {
    auto k = S.uniform_block_size();
    if (!k) throw std::invalid_argument("covering check needs a uniform block size");
    ReplicationHistogram h = replication_histogram(S, 2);
    if (h.counts.front().first < lambda)
        throw std::invalid_argument("not a lambda-covering: some pair is under-covered");
    return S.block_count() == covering_bound(S.points(), *k, lambda);
}

}  // namespace adesign
