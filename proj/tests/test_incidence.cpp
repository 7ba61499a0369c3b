#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <set>

#include "adesign/incidence.hpp"

using namespace adesign;

namespace {

IncidenceStructure fano() {
    return IncidenceStructure::from_blocks(
        7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

IncidenceStructure triangle() {
    return IncidenceStructure::from_blocks(3, {{0, 1}, {1, 2}, {0, 2}});
}

long long binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

TEST_CASE("from_blocks canonicalizes and validates") {
    auto t = IncidenceStructure::from_blocks(3, {{1, 0}, {2, 1}, {0, 2}});
    CHECK(t.block_count() == 3);
    CHECK(t.blocks()[0] == std::vector<long long>{0, 1});  // sorted within and across

    CHECK_THROWS(IncidenceStructure::from_blocks(3, {{0, 1}, {0, 1}}));  // duplicate, simple
    CHECK_NOTHROW(IncidenceStructure::from_blocks(3, {{0, 1}, {0, 1}}, true));
    CHECK_THROWS(IncidenceStructure::from_blocks(3, {{0, 3}}));   // out of range
    CHECK_THROWS(IncidenceStructure::from_blocks(3, {{0, 0}}));   // repeated point
    CHECK_THROWS(IncidenceStructure::from_blocks(3, {{}}));       // empty block
}

TEST_CASE("replication counts") {
    auto F = fano();
    std::array<long long, 2> pair{0, 1};
    CHECK(replication(F, pair) == 1);
    CHECK(replication(F, std::span<const long long>{}) == 7);  // empty subset: every block
    std::array<long long, 3> all{0, 1, 2};
    CHECK(replication(triangle(), all) == 0);
}

TEST_CASE("classify: Fano plane is a 2-(7,3,1) design") {
    auto c = classify(fano(), 2);
    CHECK(c.verdict == Verdict::Design);
    CHECK(c.lambda == 1);
    CHECK(c.r_min == 1);
    CHECK(c.r_max == 1);
    CHECK(c.count_low == 21);
    CHECK(c.count_high == 0);
    CHECK(c.k == 3);
}

TEST_CASE("classify verdicts and errors") {
    auto tri = classify(triangle(), 2);
    CHECK(tri.verdict == Verdict::Design);
    CHECK(tri.lambda == 1);

    auto nonuniform = IncidenceStructure::from_blocks(4, {{0, 1}, {0, 1, 2}});
    CHECK(classify(nonuniform, 2).verdict == Verdict::NotUniformBlockSize);

    CHECK_THROWS(classify(fano(), 4));  // t exceeds the block size
    CHECK_THROWS(classify(fano(), 0));

    // t = k is legal: blocks of size t cover exactly the t-subsets they equal
    auto c3 = classify(fano(), 3);
    CHECK(c3.verdict == Verdict::Adesign);
    CHECK(c3.lambda == 0);
    CHECK(c3.count_low + c3.count_high == binom(7, 3));
}

TEST_CASE("design identities") {
    auto ok = design_identities(7, 3, 1, 7, 3);
    CHECK(ok.bk_equals_vr);
    CHECK(ok.replication_identity);

    auto th = design_identities(13, 6, 5, 26, 12);
    CHECK(th.bk_equals_vr);
    CHECK(th.replication_identity);

    auto bad = design_identities(7, 3, 1, 8, 3);
    CHECK_FALSE(bad.bk_equals_vr);
}

TEST_CASE("dual: shapes and involution") {
    auto d = dual(fano());
    CHECK(d.points() == 7);
    CHECK(d.block_count() == 7);
    for (const auto& b : d.blocks()) CHECK(b.size() == 3);
    CHECK(dual(d).blocks() == fano().blocks());

    auto t = triangle();
    CHECK(dual(dual(t)).blocks() == t.blocks());

    auto single = IncidenceStructure::from_blocks(2, {{0, 1}});
    auto ds = dual(single);
    CHECK(ds.points() == 1);
    CHECK(ds.block_count() == 2);
    for (const auto& b : ds.blocks()) CHECK(b.size() == 1);
}

TEST_CASE("complement_blocks") {
    auto cf = complement_blocks(fano());
    auto c = classify(cf, 2);
    CHECK(c.verdict == Verdict::Design);
    CHECK(c.lambda == 2);
    CHECK(c.k == 4);
    CHECK(complement_blocks(cf).blocks() == fano().blocks());

    auto ct = complement_blocks(triangle());
    for (const auto& b : ct.blocks()) CHECK(b.size() == 1);

    CHECK_THROWS(complement_blocks(IncidenceStructure::from_blocks(4, {{0, 1, 2, 3}})));
}

TEST_CASE("union_structures") {
    auto t = triangle();
    auto u = union_structures(t, complement_blocks(t));
    CHECK(u.block_count() == 6);
    CHECK_THROWS(union_structures(t, t));  // identical blocks under simple
    CHECK(union_structures(t, t, true).block_count() == 6);
    CHECK_THROWS(union_structures(t, fano()));  // point-count mismatch
}

TEST_CASE("contraction of the Fano plane is a 2-(6,2,1) adesign with 3 blocks") {
    for (long long p = 0; p < 7; ++p) {
        auto c = contraction(fano(), p);
        CHECK(c.points() == 6);
        CHECK(c.block_count() == 3);
        auto cls = classify(c, 2);
        CHECK(cls.verdict == Verdict::Adesign);
        CHECK(cls.lambda == 0);
    }
    auto side = IncidenceStructure::from_blocks(4, {{1, 2}, {2, 3}});
    CHECK_THROWS(contraction(side, 0));  // point in no block
}

TEST_CASE("incidence matrix shapes and sums") {
    auto N = incidence_matrix(fano());
    CHECK(N.rows() == 7);
    CHECK(N.cols() == 7);
    for (long long i = 0; i < 7; ++i) {
        CHECK(N.row_sum(i) == 3);
        CHECK(N.col_sum(i) == 3);
    }
    auto single = incidence_matrix(IncidenceStructure::from_blocks(2, {{0}}));
    CHECK(single(0, 0) == 1);
    CHECK(single(1, 0) == 0);
}

TEST_CASE("matrix identity checks agree with classification") {
    auto fd = check_design_matrix_identity(fano());
    CHECK(fd.verdict == MatrixVerdict::Holds);
    CHECK(fd.r == 3);
    CHECK(fd.lambda == 1);
    CHECK(check_adesign_matrix_identity(fano()).verdict == MatrixVerdict::Fails);

    auto td = check_design_matrix_identity(triangle());
    CHECK(td.verdict == MatrixVerdict::Holds);
    CHECK(td.r == 2);
    CHECK(td.lambda == 1);

    auto nonuniform = IncidenceStructure::from_blocks(4, {{0, 1}, {0, 1, 2}});
    CHECK(check_design_matrix_identity(nonuniform).verdict ==
          MatrixVerdict::NotUniformBlockSize);

    auto lopsided = IncidenceStructure::from_blocks(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(check_design_matrix_identity(lopsided).verdict ==
          MatrixVerdict::NonConstantReplication);
}

TEST_CASE("double counting: block sizes vs subset replications") {
    auto check_structure = [](const IncidenceStructure& S, int t) {
        auto h = replication_histogram(S, t);
        long long lhs = 0;
        for (const auto& blk : S.blocks()) lhs += binom(static_cast<long long>(blk.size()), t);
        long long rhs = 0;
        for (auto [r, n] : h.counts) rhs += r * n;
        CHECK(lhs == rhs);
        long long total = 0;
        for (auto [r, n] : h.counts) total += n;
        CHECK(total == binom(S.points(), t));
    };
    check_structure(fano(), 1);
    check_structure(fano(), 2);
    check_structure(fano(), 3);
    check_structure(triangle(), 2);
}

TEST_CASE("optimized classification equals the reference oracle on random structures") {
    std::mt19937_64 rng(0x5eed1);
    for (int iter = 0; iter < 60; ++iter) {
        long long v = 5 + static_cast<long long>(rng() % 11);  // 5..15
        long long k = 3 + static_cast<long long>(rng() % std::min<long long>(4, v - 3));
        long long want_b = 1 + static_cast<long long>(rng() % 40);
        bool multiset = (iter % 4 == 0);
        std::vector<std::vector<long long>> blocks;
        std::vector<long long> pool(static_cast<std::size_t>(v));
        std::iota(pool.begin(), pool.end(), 0);
        std::set<std::vector<long long>> seen;
        for (int attempt = 0; attempt < 200 && static_cast<long long>(blocks.size()) < want_b;
             ++attempt) {
            std::shuffle(pool.begin(), pool.end(), rng);
            std::vector<long long> blk(pool.begin(), pool.begin() + k);
            std::sort(blk.begin(), blk.end());
            if (!multiset && !seen.insert(blk).second) continue;
            blocks.push_back(std::move(blk));
        }
        auto S = IncidenceStructure::from_ordered_blocks(v, blocks, multiset);
        for (int t = 1; t <= 3; ++t) {
            CHECK(replication_histogram(S, t) == replication_histogram_reference(S, t));
            CHECK(classify(S, t) == classify_reference(S, t));
        }
        // the general-t fallback against the reference
        if (k >= 4) CHECK(replication_histogram(S, 4) == replication_histogram_reference(S, 4));
    }
}
