#include <doctest.h>

#include <vector>

#include "adesign/graphs.hpp"

using namespace adesign;

namespace {

IntMatrix petersen() {
    IntMatrix A(10, 10);
    auto edge = [&](long long a, long long b) {
        A(a, b) = 1;
        A(b, a) = 1;
    };
    for (long long i = 0; i < 5; ++i) {
        edge(i, (i + 1) % 5);          // outer cycle
        edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edge(i, 5 + i);                // spokes
    }
    return A;
}

IntMatrix cycle(long long n) {
    IntMatrix A(n, n);
    for (long long i = 0; i < n; ++i) {
        A(i, (i + 1) % n) = 1;
        A((i + 1) % n, i) = 1;
    }
    return A;
}

// rotational tournament on Z_n with arc x -> x + d for d in D
IntMatrix rotational_tournament(long long n, const std::vector<long long>& D) {
    IntMatrix A(n, n);
    for (long long x = 0; x < n; ++x)
        for (long long d : D) A(x, (x + d) % n) = 1;
    return A;
}

}  // namespace

TEST_CASE("is_srg recognizes the classics and rejects the 6-cycle") {
    auto p13 = is_srg(paley_graph(13));
    REQUIRE(p13.has_value());
    CHECK(*p13 == SrgParams{13, 6, 2, 3});
    CHECK(is_paley_type(*p13));

    auto pet = is_srg(petersen());
    REQUIRE(pet.has_value());
    CHECK(*pet == SrgParams{10, 3, 0, 1});
    CHECK_FALSE(is_paley_type(*pet));

    CHECK_FALSE(is_srg(cycle(6)).has_value());

    IntMatrix bad(4, 4);
    bad(0, 1) = 1;  // asymmetric
    CHECK_THROWS(is_srg(bad));
    IntMatrix loop = IntMatrix::identity(4);
    CHECK_THROWS(is_srg(loop));  // nonzero diagonal
}

TEST_CASE("counting route and matrix-identity route agree") {
    std::vector<IntMatrix> graphs;
    graphs.push_back(paley_graph(13));
    graphs.push_back(paley_graph(9));
    graphs.push_back(paley_graph(25));
    graphs.push_back(petersen());
    graphs.push_back(latin_square_graph(5, 2));
    graphs.push_back(cycle(6));
    graphs.push_back(cycle(8));
    for (const auto& A : graphs) {
        auto p = is_srg(A);
        if (p) {
            CHECK(srg_identity_holds(A, *p));
        } else {
            // no parameter guess can satisfy the identity; spot check a few
            long long n = A.rows();
            long long k = A.row_sum(0);
            for (long long lam = 0; lam <= 2; ++lam)
                for (long long mu = 0; mu <= 3; ++mu)
                    CHECK_FALSE(srg_identity_holds(A, SrgParams{n, k, lam, mu}));
        }
    }
}

TEST_CASE("complement graph parameters") {
    auto pent = paley_graph(5);
    auto cp = is_srg(complement_graph(pent));
    REQUIRE(cp.has_value());
    CHECK(*cp == SrgParams{5, 2, 0, 1});  // self-complementary parameters

    auto cpet = is_srg(complement_graph(petersen()));
    REQUIRE(cpet.has_value());
    CHECK(*cpet == SrgParams{10, 6, 3, 4});
    CHECK(complement_srg_params(SrgParams{10, 3, 0, 1}) == SrgParams{10, 6, 3, 4});
}

TEST_CASE("Paley graphs are self-complementary in parameters for q <= 29") {
    for (long long q : {5LL, 9LL, 13LL, 17LL, 25LL, 29LL}) {
        auto A = paley_graph(q);
        auto p = is_srg(A);
        REQUIRE(p.has_value());
        CHECK(is_paley_type(*p));
        auto c = is_srg(complement_graph(A));
        REQUIRE(c.has_value());
        CHECK(*c == *p);
    }
    CHECK_THROWS(paley_graph(7));   // wrong residue class
    CHECK_THROWS(paley_graph(12));  // not a prime power
}

TEST_CASE("doubly regular tournaments") {
    auto p7 = is_doubly_regular_tournament(paley_tournament(7));
    REQUIRE(p7.has_value());
    CHECK(p7->n == 7);
    CHECK(p7->common_out_neighbors == 1);

    CHECK_FALSE(is_doubly_regular_tournament(rotational_tournament(5, {1, 2})).has_value());

    IntMatrix two_cycle(3, 3);
    two_cycle(0, 1) = 1;
    two_cycle(1, 0) = 1;  // both arcs present
    CHECK_THROWS(is_doubly_regular_tournament(two_cycle));
    CHECK_THROWS(paley_tournament(13));
}

TEST_CASE("doubly regular tournaments: degree and pair counts by brute force") {
    for (long long q : {7LL, 11LL, 19LL}) {
        auto A = paley_tournament(q);
        REQUIRE(is_doubly_regular_tournament(A).has_value());
        long long n = q;
        for (long long x = 0; x < n; ++x) {
            CHECK(A.row_sum(x) == (n - 1) / 2);
            CHECK(A.col_sum(x) == (n - 1) / 2);
        }
        for (long long x = 0; x < n; ++x)
            for (long long y = x + 1; y < n; ++y) {
                long long out = 0, in = 0;
                for (long long w = 0; w < n; ++w) {
                    if (A(x, w) && A(y, w)) ++out;
                    if (A(w, x) && A(w, y)) ++in;
                }
                CHECK(out == (n - 3) / 4);
                CHECK(in == (n - 3) / 4);
            }
    }
}

TEST_CASE("conference matrices from graphs and tournaments") {
    auto C6 = conference_from_srg(paley_graph(5));
    CHECK(C6.rows() == 6);
    CHECK(is_conference_matrix(C6) == ConferenceType::SymmetricType);
    CHECK(C6 * C6.transpose() == IntMatrix::identity(6).scaled(5));

    auto C4 = conference_from_tournament(paley_tournament(3));
    CHECK(C4.rows() == 4);
    CHECK(is_conference_matrix(C4) == ConferenceType::SkewType);
    CHECK(C4 * C4.transpose() == IntMatrix::identity(4).scaled(3));

    IntMatrix allones(4, 4);
    for (long long i = 0; i < 4; ++i)
        for (long long j = 0; j < 4; ++j)
            if (i != j) allones(i, j) = 1;
    CHECK(is_conference_matrix(allones) == ConferenceType::None);
    IntMatrix bad(3, 3, 2);
    CHECK_THROWS(is_conference_matrix(bad));
}

TEST_CASE("conference core extraction and normalization invariance") {
    auto C6 = conference_from_srg(paley_graph(5));
    auto core = conference_core_graph(C6);
    CHECK(core == paley_graph(5));  // round trip

    // random-looking row/column negations leave the core unchanged
    IntMatrix C = C6;
    for (long long i : {1LL, 3LL})
        for (long long j = 0; j < 6; ++j) C(i, j) = -C(i, j);
    for (long long j : {2LL, 5LL})
        for (long long i = 0; i < 6; ++i) C(i, j) = -C(i, j);
    CHECK(is_conference_matrix(C) == ConferenceType::SymmetricType);
    CHECK(conference_core_graph(C) == core);

    auto C4 = conference_from_tournament(paley_tournament(3));
    auto drt_core = conference_core_graph(C4);
    CHECK(is_doubly_regular_tournament(drt_core).has_value());
}

TEST_CASE("graph -> conference -> graph round trip for larger Paley graphs") {
    for (long long q : {9LL, 13LL, 17LL, 25LL}) {
        auto A = paley_graph(q);
        auto C = conference_from_srg(A);
        CHECK(is_conference_matrix(C) ==
              ((q + 1) % 4 == 2 ? ConferenceType::SymmetricType : ConferenceType::SkewType));
        CHECK(conference_core_graph(C) == A);
    }
}

TEST_CASE("Latin-square graphs") {
    auto rook = is_srg(latin_square_graph(5, 2));
    REQUIRE(rook.has_value());
    CHECK(*rook == SrgParams{25, 8, 3, 2});

    auto l3 = is_srg(latin_square_graph(5, 3));
    REQUIRE(l3.has_value());
    CHECK(*l3 == SrgParams{25, 12, 5, 6});
    CHECK(is_paley_type(*l3));

    auto k333 = is_srg(latin_square_graph(3, 3));
    REQUIRE(k333.has_value());
    CHECK(*k333 == SrgParams{9, 6, 3, 6});

    CHECK_THROWS(latin_square_graph(5, 1));
    CHECK_THROWS(latin_square_graph(5, 6));
}
