#include "adesign/incidence.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace adesign {

namespace {

void validate_and_sort_blocks(long long v, std::vector<std::vector<long long>>& blocks) {
    if (v < 1) throw std::invalid_argument("structure needs at least one point");
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("blocks must be nonempty");
        std::sort(b.begin(), b.end());
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] < 0 || b[i] >= v) throw std::invalid_argument("point index out of range");
            if (i > 0 && b[i] == b[i - 1])
                throw std::invalid_argument("repeated point inside a block");
        }
    }
}

bool find_repeats(const std::vector<std::vector<long long>>& blocks) {
    std::set<std::vector<long long>> seen;
    for (const auto& b : blocks)
        if (!seen.insert(b).second) return true;
    return false;
}

}  // namespace

IncidenceStructure IncidenceStructure::from_blocks(long long v,
                                                   std::vector<std::vector<long long>> blocks,
                                                   bool allow_multiset) {
    validate_and_sort_blocks(v, blocks);
    std::sort(blocks.begin(), blocks.end());
    IncidenceStructure s;
    s.v_ = v;
    s.blocks_ = std::move(blocks);
    s.allow_multiset_ = allow_multiset;
    s.has_repeats_ = false;
    for (std::size_t i = 1; i < s.blocks_.size(); ++i)
        if (s.blocks_[i] == s.blocks_[i - 1]) {
            s.has_repeats_ = true;
            break;
        }
    if (s.has_repeats_ && !allow_multiset)
        throw std::invalid_argument("repeated block in a simple structure");
    return s;
}

IncidenceStructure IncidenceStructure::from_ordered_blocks(
    long long v, std::vector<std::vector<long long>> blocks, bool allow_multiset) {
    validate_and_sort_blocks(v, blocks);
    IncidenceStructure s;
    s.v_ = v;
    s.blocks_ = std::move(blocks);
    s.allow_multiset_ = allow_multiset;
    s.has_repeats_ = find_repeats(s.blocks_);
    if (s.has_repeats_ && !allow_multiset)
        throw std::invalid_argument("repeated block in a simple structure");
    return s;
}

std::optional<long long> IncidenceStructure::uniform_block_size() const {
    if (blocks_.empty()) return std::nullopt;
    std::size_t k = blocks_[0].size();
    for (const auto& b : blocks_)
        if (b.size() != k) return std::nullopt;
    return static_cast<long long>(k);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Design: return "Design";
        case Verdict::Adesign: return "Adesign";
        case Verdict::Neither: return "Neither";
        case Verdict::NotUniformBlockSize: return "NotUniformBlockSize";
    }
    return "?";
}

std::string to_string(MatrixVerdict v) {
    switch (v) {
        case MatrixVerdict::Holds: return "Holds";
        case MatrixVerdict::Fails: return "Fails";
        case MatrixVerdict::NotUniformBlockSize: return "NotUniformBlockSize";
        case MatrixVerdict::NonConstantReplication: return "NonConstantReplication";
    }
    return "?";
}

long long replication(const IncidenceStructure& S, std::span<const long long> Y) {
    for (long long p : Y)
        if (p < 0 || p >= S.points()) throw std::invalid_argument("point index out of range");
    std::vector<long long> y(Y.begin(), Y.end());
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    long long count = 0;
    for (const auto& b : S.blocks())
        if (std::includes(b.begin(), b.end(), y.begin(), y.end())) ++count;
    return count;
}

DesignIdentityReport design_identities(long long v, long long k, long long lambda,
                                       long long b, long long r) {
    if (v <= 0 || k <= 0 || lambda <= 0 || b <= 0 || r <= 0)
        throw std::invalid_argument("design identity arguments must be positive");
    DesignIdentityReport rep;
    rep.bk_equals_vr = (b * k == v * r);
    rep.replication_identity = (r * (k - 1) == (v - 1) * lambda);
    return rep;
}

IncidenceStructure dual(const IncidenceStructure& S) {
    long long b = S.block_count();
    std::vector<std::vector<long long>> supports(static_cast<std::size_t>(S.points()));
    for (long long j = 0; j < b; ++j)
        for (long long p : S.blocks()[static_cast<std::size_t>(j)])
            supports[static_cast<std::size_t>(p)].push_back(j);
    for (const auto& s : supports)
        if (s.empty())
            throw std::invalid_argument("dual requires every point to lie in some block");
    return IncidenceStructure::from_ordered_blocks(b, std::move(supports), true);
}

IncidenceStructure complement_blocks(const IncidenceStructure& S) {
    long long v = S.points();
    std::vector<std::vector<long long>> out;
    out.reserve(S.blocks().size());
    for (const auto& blk : S.blocks()) {
        if (static_cast<long long>(blk.size()) == v)
            throw std::invalid_argument("a block equal to the point set has empty complement");
        std::vector<long long> c;
        c.reserve(static_cast<std::size_t>(v) - blk.size());
        std::size_t i = 0;
        for (long long p = 0; p < v; ++p) {
            if (i < blk.size() && blk[i] == p) {
                ++i;
                continue;
            }
            c.push_back(p);
        }
        out.push_back(std::move(c));
    }
    return IncidenceStructure::from_ordered_blocks(v, std::move(out), S.multiset_allowed());
}

IncidenceStructure union_structures(const IncidenceStructure& a, const IncidenceStructure& b,
                                    bool allow_multiset) {
    if (a.points() != b.points())
        throw std::invalid_argument("union requires a common point set");
    std::vector<std::vector<long long>> blocks = a.blocks();
    blocks.insert(blocks.end(), b.blocks().begin(), b.blocks().end());
    return IncidenceStructure::from_ordered_blocks(a.points(), std::move(blocks), allow_multiset);
}

IncidenceStructure contraction(const IncidenceStructure& S, long long p) {
    if (p < 0 || p >= S.points()) throw std::invalid_argument("point index out of range");
    std::vector<std::vector<long long>> out;
    for (const auto& blk : S.blocks()) {
        if (!std::binary_search(blk.begin(), blk.end(), p)) continue;
        if (blk.size() == 1)
            throw std::invalid_argument("contraction at a singleton block would be empty");
        std::vector<long long> c;
        c.reserve(blk.size() - 1);
        for (long long q : blk) {
            if (q == p) continue;
            c.push_back(q > p ? q - 1 : q);
        }
        out.push_back(std::move(c));
    }
    if (out.empty()) throw std::invalid_argument("the point lies in no block");
    return IncidenceStructure::from_ordered_blocks(S.points() - 1, std::move(out),
                                                   S.multiset_allowed());
}

IntMatrix incidence_matrix(const IncidenceStructure& S) {
    IntMatrix N(S.points(), S.block_count());
    for (long long j = 0; j < S.block_count(); ++j)
        for (long long p : S.blocks()[static_cast<std::size_t>(j)]) N(p, j) = 1;
    return N;
}

namespace {

// Shared preamble of both matrix identity checks: uniform block size,
// constant replication, and the Gram matrix N*N^T.
struct GramSetup {
    MatrixVerdict verdict = MatrixVerdict::Holds;
    long long r = -1;
    long long k = -1;
    IntMatrix gram;
};

GramSetup gram_setup(const IncidenceStructure& S) {
    GramSetup g;
    auto k = S.uniform_block_size();
    if (!k) {
        g.verdict = MatrixVerdict::NotUniformBlockSize;
        return g;
    }
    g.k = *k;
    IntMatrix N = incidence_matrix(S);
    long long r = N.row_sum(0);
    for (long long i = 1; i < N.rows(); ++i)
        if (N.row_sum(i) != r) {
            g.verdict = MatrixVerdict::NonConstantReplication;
            return g;
        }
    g.r = r;
    g.gram = N * N.transpose();
    return g;
}

}  // namespace

MatrixCheck check_design_matrix_identity(const IncidenceStructure& S) {
    GramSetup g = gram_setup(S);
    MatrixCheck out;
    if (g.verdict != MatrixVerdict::Holds) {
        out.verdict = g.verdict;
        return out;
    }
    long long v = S.points();
    if (v < 2) {
        out.verdict = MatrixVerdict::Fails;
        return out;
    }
    long long lambda = g.gram(0, 1);
    for (long long i = 0; i < v; ++i)
        for (long long j = 0; j < v; ++j) {
            long long want = (i == j) ? g.r : lambda;
            if (g.gram(i, j) != want) {
                out.verdict = MatrixVerdict::Fails;
                return out;
            }
        }
    out.verdict = MatrixVerdict::Holds;
    out.r = g.r;
    out.lambda = lambda;
    return out;
}

MatrixCheck check_adesign_matrix_identity(const IncidenceStructure& S) {
    GramSetup g = gram_setup(S);
    MatrixCheck out;
    if (g.verdict != MatrixVerdict::Holds) {
        out.verdict = g.verdict;
        return out;
    }
    long long v = S.points();
    if (v < 2) {
        out.verdict = MatrixVerdict::Fails;
        return out;
    }
    long long lo = -1, hi = -1;
    for (long long i = 0; i < v; ++i)
        for (long long j = 0; j < v; ++j) {
            if (i == j) continue;
            long long x = g.gram(i, j);
            if (lo == -1) {
                lo = hi = x;
            } else {
                lo = std::min(lo, x);
                hi = std::max(hi, x);
            }
        }
    // Exactly the two adjacent values lambda, lambda+1 must occur; a single
    // value is a design, not an adesign.
    if (hi != lo + 1) {
        out.verdict = MatrixVerdict::Fails;
        return out;
    }
    long long lambda = lo;
    IntMatrix Smat(v, v);
    for (long long i = 0; i < v; ++i)
        for (long long j = 0; j < v; ++j) {
            if (i == j) continue;
            long long x = g.gram(i, j);
            if (x == lambda) {
                Smat(i, j) = 1;
            } else if (x != lambda + 1) {
                out.verdict = MatrixVerdict::Fails;
                return out;
            }
        }
    // Literal recheck of the extracted identity.
    for (long long i = 0; i < v; ++i)
        for (long long j = 0; j < v; ++j) {
            long long want = (i == j) ? g.r : lambda * Smat(i, j) + (lambda + 1) * (1 - Smat(i, j));
            if (g.gram(i, j) != want) {
                out.verdict = MatrixVerdict::Fails;
                return out;
            }
        }
    out.verdict = MatrixVerdict::Holds;
    out.r = g.r;
    out.lambda = lambda;
    return out;
}

}  // namespace adesign
