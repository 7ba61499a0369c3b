#include <algorithm>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "adesign/bitset.hpp"
#include "adesign/incidence.hpp"

namespace adesign {

namespace {

// One membership bitset per point over the block list.
std::vector<Bitset> point_index(const IncidenceStructure& S) {
    std::vector<Bitset> idx(static_cast<std::size_t>(S.points()),
                            Bitset(static_cast<std::size_t>(S.block_count())));
    for (long long j = 0; j < S.block_count(); ++j)
        for (long long p : S.blocks()[static_cast<std::size_t>(j)])
            idx[static_cast<std::size_t>(p)].set(static_cast<std::size_t>(j));
    return idx;
}

long long binomial_ll(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

ReplicationHistogram finish(std::vector<long long> hist, long long subsets) {
    ReplicationHistogram h;
    h.subsets = subsets;
    for (std::size_t r = 0; r < hist.size(); ++r)
        if (hist[r] > 0) h.counts.emplace_back(static_cast<long long>(r), hist[r]);
    return h;
}

void check_level(const IncidenceStructure& S, int t) {
    if (t < 1) throw std::invalid_argument("subset size must be positive");
    if (t > S.points()) throw std::invalid_argument("subset size exceeds the point count");
    if (S.block_count() < 1) throw std::invalid_argument("classification needs at least one block");
}

// General-t enumeration with a running AND stack; serial fallback for the
// levels the optimized paths do not cover.
void scan_general(const std::vector<Bitset>& idx, long long v, int t, long long b,
                  std::vector<long long>& hist) {
    std::vector<long long> pick(static_cast<std::size_t>(t));
    std::vector<Bitset> acc(static_cast<std::size_t>(t), Bitset(static_cast<std::size_t>(b)));
    int d = 0;
    pick[0] = -1;
    while (d >= 0) {
        ++pick[static_cast<std::size_t>(d)];
        if (pick[static_cast<std::size_t>(d)] > v - (t - d)) {
            --d;
            continue;
        }
        const Bitset& cur = idx[static_cast<std::size_t>(pick[static_cast<std::size_t>(d)])];
        if (d == 0) {
            acc[0] = cur;
        } else {
            Bitset::and_into(acc[static_cast<std::size_t>(d)], acc[static_cast<std::size_t>(d - 1)],
                             cur);
        }
        if (d == t - 1) {
            ++hist[acc[static_cast<std::size_t>(d)].count()];
        } else {
            ++d;
            pick[static_cast<std::size_t>(d)] = pick[static_cast<std::size_t>(d - 1)];
        }
    }
}

}  // namespace

ReplicationHistogram replication_histogram(const IncidenceStructure& S, int t) {
    check_level(S, t);
    const long long v = S.points();
    const long long b = S.block_count();
    const auto idx = point_index(S);
    std::vector<long long> hist(static_cast<std::size_t>(b) + 1, 0);

    if (t == 1) {
        for (long long x = 0; x < v; ++x) ++hist[idx[static_cast<std::size_t>(x)].count()];
    } else if (t == 2) {
#pragma omp parallel
        {
            std::vector<long long> local(hist.size(), 0);
#pragma omp for schedule(dynamic, 4)
            for (long long x = 0; x < v - 1; ++x)
                for (long long y = x + 1; y < v; ++y)
                    ++local[Bitset::and_count(idx[static_cast<std::size_t>(x)],
                                              idx[static_cast<std::size_t>(y)])];
#pragma omp critical
            for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
        }
    } else if (t == 3) {
#pragma omp parallel
        {
            std::vector<long long> local(hist.size(), 0);
            Bitset pair(static_cast<std::size_t>(b));
#pragma omp for schedule(dynamic, 2)
            for (long long x = 0; x < v - 2; ++x)
                for (long long y = x + 1; y < v - 1; ++y) {
                    Bitset::and_into(pair, idx[static_cast<std::size_t>(x)],
                                     idx[static_cast<std::size_t>(y)]);
                    if (pair.count() == 0) {
                        // every extension of an uncovered pair is uncovered
                        local[0] += v - 1 - y;
                        continue;
                    }
                    for (long long z = y + 1; z < v; ++z)
                        ++local[Bitset::and_count(pair, idx[static_cast<std::size_t>(z)])];
                }
#pragma omp critical
            for (std::size_t i = 0; i < hist.size(); ++i) hist[i] += local[i];
        }
    } else {
        scan_general(idx, v, t, b, hist);
    }
    return finish(std::move(hist), binomial_ll(v, t));
}

ReplicationHistogram replication_histogram_reference(const IncidenceStructure& S, int t) {
    check_level(S, t);
    const long long v = S.points();
    const long long b = S.block_count();
    std::vector<long long> hist(static_cast<std::size_t>(b) + 1, 0);
    std::vector<long long> pick(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) pick[static_cast<std::size_t>(i)] = i;
    while (true) {
        long long r = 0;
        for (const auto& blk : S.blocks())
            if (std::includes(blk.begin(), blk.end(), pick.begin(), pick.end())) ++r;
        ++hist[static_cast<std::size_t>(r)];
        // next t-combination in lexicographic order
        int i = t - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == v - t + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < t; ++j)
            pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
    return finish(std::move(hist), binomial_ll(v, t));
}

namespace {

Classification classify_from(const IncidenceStructure& S, int t,
                             ReplicationHistogram (*histogram)(const IncidenceStructure&, int)) {
    Classification c;
    c.t = t;
    c.v = S.points();
    c.b = S.block_count();
    auto k = S.uniform_block_size();
    if (!k) {
        c.verdict = Verdict::NotUniformBlockSize;
        return c;
    }
    c.k = *k;
    if (t > c.k) throw std::invalid_argument("subset size exceeds the block size");
    ReplicationHistogram h = histogram(S, t);
    c.r_min = h.counts.front().first;
    c.r_max = h.counts.back().first;
    c.lambda = c.r_min;
    for (const auto& [r, n] : h.counts) {
        if (r == c.r_min) c.count_low = n;
        if (r == c.r_min + 1) c.count_high = n;
    }
    if (c.r_min == c.r_max)
        c.verdict = Verdict::Design;
    else if (c.r_max == c.r_min + 1)
        c.verdict = Verdict::Adesign;
    else
        c.verdict = Verdict::Neither;
    return c;
}

}  // namespace

Classification classify(const IncidenceStructure& S, int t) {
    return classify_from(S, t, replication_histogram);
}

Classification classify_reference(const IncidenceStructure& S, int t) {
    return classify_from(S, t, replication_histogram_reference);
}

}  // namespace adesign
