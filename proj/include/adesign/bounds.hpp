#pragma once

#include <optional>

#include "adesign/incidence.hpp"

namespace adesign {

// Classical covering bound  C = ceil(v/k * ceil(lambda*(v-1)/(k-1))).
long long schonheim_bound(long long v, long long k, long long lambda);

// Classical packing bound  P = floor(v/k * floor(lambda*(v-1)/(k-1))).
long long johnson_bound(long long v, long long k, long long lambda);

struct HorsleyBound {
    long long value = 0;
    long long r = 0;
    long long d = 0;
};

// Refined covering bound ceil(v*(r+1)/(k+1)) from the decomposition
// lambda*(v-1) = r*(k-1) - d, 0 <= d < k-1; applies only when d < r - lambda.
std::optional<HorsleyBound> horsley_covering(long long v, long long k, long long lambda);

// Refined packing bound floor(v*(r-1)/(k-1)) from lambda*(v-1) = r*(k-1) + d.
std::optional<HorsleyBound> horsley_packing(long long v, long long k, long long lambda);

// Block-count window for a 2-(v,k,lambda) adesign: it is simultaneously a
// (v,k,lambda)-covering and a (v,k,lambda+1)-packing. The window keeps the
// tightest applicable bound on each side.
struct BoundReport {
    long long v = 0, k = 0, lambda = 0;
    long long schonheim = 0;       // covering side, at lambda
    long long johnson = 0;         // packing side, at lambda + 1
    std::optional<HorsleyBound> horsley_cov;   // at lambda
    std::optional<HorsleyBound> horsley_pack;  // at lambda + 1
    long long lower = 0;  // C*
    long long upper = 0;  // P*
};

BoundReport adesign_block_window(long long v, long long k, long long lambda);

// Exact rational, reduced, den > 0.
struct Fraction {
    long long num = 0;
    long long den = 1;
};

// What a (t+1)-(v,k,lambda) adesign can look like one level down.
struct FeasibilityReport {
    long long v = 0, k = 0;
    int t = 0;
    long long lambda = 0;        // the (t+1)-level value
    bool ratio_condition = false;  // (k-t)/(v-t) > 1/2
    long long adesign_lambda = 0;  // ceil(lambda*(v-t)/(k-t))
    long long design_lambda_lo = 0;
    long long design_lambda_hi = 0;
    bool floor_identity_lo = false;  // lambda == floor(lambda'*(k-t)/(v-t))
    bool floor_identity_hi = false;
    Fraction block_lower;  // strict open interval for the block count
    Fraction block_upper;
};

FeasibilityReport feasibility(long long v, long long k, int t, long long lambda);

// Strict containment of an integer in the report's open block interval.
bool strictly_inside(const FeasibilityReport& rep, long long b);

// Applicable covering bound: the refined value when its condition holds,
// the classical one otherwise.
long long covering_bound(long long v, long long k, long long lambda);

// True iff S covers every pair at least lambda times and meets the
// applicable covering bound with equality. Throws when S is not a
// lambda-covering.
bool is_minimal_covering(const IncidenceStructure& S, long long lambda);

}  // namespace adesign
