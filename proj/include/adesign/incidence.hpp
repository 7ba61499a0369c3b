#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "adesign/matrix.hpp"

namespace adesign {

// Point set 0..v-1 plus a list of blocks (sorted lists of distinct points).
// Immutable after construction. A structure is simple when no block repeats;
// multiset block lists must be requested explicitly.
class IncidenceStructure {
public:
    // Canonicalizes: sorts points within blocks and the block list
    // lexicographically. Rejects empty blocks, repeated points inside a
    // block, out-of-range indices, and repeated blocks unless allow_multiset.
    static IncidenceStructure from_blocks(long long v,
                                          std::vector<std::vector<long long>> blocks,
                                          bool allow_multiset = false);

    // Same validation, but keeps the block order given by the caller.
    // Transforms and builders use this so block indices stay meaningful.
    static IncidenceStructure from_ordered_blocks(long long v,
                                                  std::vector<std::vector<long long>> blocks,
                                                  bool allow_multiset = false);

    long long points() const { return v_; }
    long long block_count() const { return static_cast<long long>(blocks_.size()); }
    const std::vector<std::vector<long long>>& blocks() const { return blocks_; }

    bool multiset_allowed() const { return allow_multiset_; }
    bool has_repeated_blocks() const { return has_repeats_; }

    // Common block size, or nullopt when block sizes differ.
    std::optional<long long> uniform_block_size() const;

private:
    IncidenceStructure() = default;

    long long v_ = 0;
    std::vector<std::vector<long long>> blocks_;
    bool allow_multiset_ = false;
    bool has_repeats_ = false;
};

enum class Verdict { Design, Adesign, Neither, NotUniformBlockSize };

std::string to_string(Verdict v);

// Outcome of the exhaustive t-subset scan. For Design/Adesign, lambda is the
// low replication value and count_low/count_high split C(v,t) between the
// two levels (count_high = 0 for a design).
struct Classification {
    int t = 0;
    Verdict verdict = Verdict::Neither;
    long long lambda = -1;
    long long r_min = -1;
    long long r_max = -1;
    long long count_low = 0;
    long long count_high = 0;
    long long v = 0;
    long long b = 0;
    long long k = -1;

    bool operator==(const Classification&) const = default;
};

// Replication counts r_Y over all C(v,t) subsets Y, as a histogram
// (value, #subsets) sorted by value.
struct ReplicationHistogram {
    long long subsets = 0;
    std::vector<std::pair<long long, long long>> counts;

    bool operator==(const ReplicationHistogram&) const = default;
};

// Number of blocks containing every point of Y (multiset-aware).
long long replication(const IncidenceStructure& S, std::span<const long long> Y);

// Bitset kernels, parallelized over subsets with a deterministic reduction.
ReplicationHistogram replication_histogram(const IncidenceStructure& S, int t);
// Plain nested-loop rescan, kept serial and independent as the reference
// oracle for the optimized kernels.
ReplicationHistogram replication_histogram_reference(const IncidenceStructure& S, int t);

// Exhaustive classification at level t. Non-uniform block sizes yield the
// NotUniformBlockSize verdict; t > k (or t out of range) throws. t = k is
// legal: a t-subset can only lie in blocks equal to it.
Classification classify(const IncidenceStructure& S, int t);
Classification classify_reference(const IncidenceStructure& S, int t);

// Which of the two standard 2-design parameter identities hold.
struct DesignIdentityReport {
    bool bk_equals_vr = false;        // b*k = v*r
    bool replication_identity = false;  // r*(k-1) = (v-1)*lambda
};
DesignIdentityReport design_identities(long long v, long long k, long long lambda,
                                       long long b, long long r);

// Points and blocks interchanged: point i of the dual is block i, block j of
// the dual is the support of point j. dual(dual(S)) == S blockwise.
IncidenceStructure dual(const IncidenceStructure& S);

// Each block replaced by its complement in the point set.
IncidenceStructure complement_blocks(const IncidenceStructure& S);

// Concatenated block lists over a common point set.
IncidenceStructure union_structures(const IncidenceStructure& a, const IncidenceStructure& b,
                                    bool allow_multiset = false);

// Blocks through p with p removed; ground set reindexed to 0..v-2.
IncidenceStructure contraction(const IncidenceStructure& S, long long p);

// v x b 0/1 matrix, entry (i, j) = 1 iff point i lies in block j.
IntMatrix incidence_matrix(const IncidenceStructure& S);

enum class MatrixVerdict { Holds, Fails, NotUniformBlockSize, NonConstantReplication };

std::string to_string(MatrixVerdict v);

struct MatrixCheck {
    MatrixVerdict verdict = MatrixVerdict::Fails;
    long long r = -1;
    long long lambda = -1;
};

// Literal check of N*N^T = r*I + lambda*(J - I) together with constant
// column sums k, N the incidence matrix.
MatrixCheck check_design_matrix_identity(const IncidenceStructure& S);

// Literal check of N*N^T = r*I + lambda*S + (lambda+1)*(J - I - S) for the
// 0/1 zero-diagonal S extracted from the off-diagonal of N*N^T; requires
// both values lambda, lambda+1 to occur.
MatrixCheck check_adesign_matrix_identity(const IncidenceStructure& S);

}  // namespace adesign
