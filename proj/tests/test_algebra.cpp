#include <doctest.h>

#include <algorithm>
#include <set>

#include "adesign/algebra.hpp"

using namespace adesign;

namespace {

// Odd prime powers up to 49, both residue classes mod 4.
const long long kOddPrimePowers[] = {3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29,
                                     31, 37, 41, 43, 47, 49};

long long multiplicative_order(const FiniteField& F, long long a) {
    long long x = a, ord = 1;
    while (x != 1) {
        x = F.mul(x, a);
        ++ord;
        REQUIRE(ord <= F.order());
    }
    return ord;
}

}  // namespace

TEST_CASE("prime field generators are the smallest primitive roots") {
    CHECK(FiniteField::make(5, 1).generator() == 2);   // 2 has order 4 mod 5
    CHECK(FiniteField::make(13, 1).generator() == 2);  // order 12 mod 13
    CHECK(FiniteField::make(7, 1).generator() == 3);
    CHECK(multiplicative_order(FiniteField::make(5, 1), 2) == 4);
    CHECK(multiplicative_order(FiniteField::make(13, 1), 2) == 12);
}

TEST_CASE("GF(9) uses the smallest primitive modulus and gamma = x") {
    FiniteField F = FiniteField::make(3, 2);
    CHECK(F.order() == 9);
    CHECK(F.modulus() == std::vector<long long>{2, 1, 1});  // x^2 + x + 2
    CHECK(F.generator() == 3);                              // the class of x
    long long g = F.generator();
    long long x = g;
    for (int k = 1; k < 8; ++k) {
        CHECK(x != 1);
        x = F.mul(x, g);
    }
    CHECK(x == 1);  // gamma^8 = 1
}

TEST_CASE("field constructor rejections") {
    CHECK_THROWS(FiniteField::make(4, 1));   // not prime
    CHECK_THROWS(FiniteField::make(2, 3));   // even characteristic
    CHECK_THROWS(FiniteField::make(3, 20));  // above the order cap
    CHECK_THROWS(FiniteField::of_order(12));
}

TEST_CASE("field axioms hold exhaustively for q <= 25") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL}) {
        FiniteField F = FiniteField::of_order(q);
        for (long long a = 0; a < q; ++a) {
            for (long long b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
                for (long long c = 0; c < std::min(q, 11LL); ++c) {
                    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
                    CHECK(F.add(a, F.add(b, c)) == F.add(F.add(a, b), c));
                }
            }
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }
}

TEST_CASE("cyclotomic classes: frozen small cases") {
    FiniteField F13 = FiniteField::of_order(13);
    CHECK(cyclotomic_class(F13, 2, 0) ==
          std::vector<long long>{1, 3, 4, 9, 10, 12});  // squares mod 13

    FiniteField F5 = FiniteField::of_order(5);
    CHECK(cyclotomic_class(F5, 4, 0) == std::vector<long long>{1});

    FiniteField F7 = FiniteField::of_order(7);
    CHECK(cyclotomic_class(F7, 2, 1) == std::vector<long long>{3, 5, 6});  // nonsquares

    CHECK_THROWS(cyclotomic_class(F7, 4, 0));   // 4 does not divide 6
    CHECK_THROWS(cyclotomic_class(F7, 2, 2));   // index out of range
}

TEST_CASE("cyclotomic classes partition the nonzero elements") {
    for (long long q : kOddPrimePowers) {
        FiniteField F = FiniteField::of_order(q);
        for (long long e = 1; e <= q - 1; ++e) {
            if ((q - 1) % e != 0) continue;
            std::set<long long> all;
            for (long long i = 0; i < e; ++i) {
                auto cls = cyclotomic_class(F, e, i);
                CHECK(cls.size() == static_cast<std::size_t>((q - 1) / e));
                all.insert(cls.begin(), cls.end());
            }
            CHECK(all.size() == static_cast<std::size_t>(q - 1));
            CHECK(all.count(0) == 0);
        }
    }
}

TEST_CASE("order-2 cyclotomic numbers: frozen examples") {
    FiniteField F13 = FiniteField::of_order(13);
    CHECK(cyclotomic_number(F13, 2, 0, 0) == 2);
    CHECK(cyclotomic_number(F13, 2, 0, 1) == 3);
    CHECK(cyclotomic_number(F13, 2, 1, 0) == 3);
    CHECK(cyclotomic_number(F13, 2, 1, 1) == 3);

    FiniteField F7 = FiniteField::of_order(7);
    CHECK(cyclotomic_number(F7, 2, 0, 1) == 2);
    CHECK(cyclotomic_number(F7, 2, 0, 0) == 1);
    CHECK(cyclotomic_number(F7, 2, 1, 0) == 1);
    CHECK(cyclotomic_number(F7, 2, 1, 1) == 1);

    FiniteField F5 = FiniteField::of_order(5);
    CHECK(cyclotomic_number(F5, 2, 0, 0) == 0);
}

TEST_CASE("order-2 closed forms hold for every odd prime power q <= 49") {
    for (long long q : kOddPrimePowers) {
        FiniteField F = FiniteField::of_order(q);
        if (q % 4 == 1) {
            CHECK(cyclotomic_number(F, 2, 0, 0) == (q - 5) / 4);
            CHECK(cyclotomic_number(F, 2, 0, 1) == (q - 1) / 4);
            CHECK(cyclotomic_number(F, 2, 1, 0) == (q - 1) / 4);
            CHECK(cyclotomic_number(F, 2, 1, 1) == (q - 1) / 4);
        } else {
            CHECK(cyclotomic_number(F, 2, 0, 1) == (q + 1) / 4);
            CHECK(cyclotomic_number(F, 2, 0, 0) == (q - 3) / 4);
            CHECK(cyclotomic_number(F, 2, 1, 0) == (q - 3) / 4);
            CHECK(cyclotomic_number(F, 2, 1, 1) == (q - 3) / 4);
        }
    }
}

TEST_CASE("cyclotomic number row and column sums") {
    // sum_j (i,j) counts D_i minus the element 1; sum_i (i,j) counts D_j + 1
    // minus the element 0, i.e. the -1 membership correction.
    for (long long q : kOddPrimePowers) {
        FiniteField F = FiniteField::of_order(q);
        for (long long e : {2LL, 4LL}) {
            if ((q - 1) % e != 0) continue;
            long long f = (q - 1) / e;
            for (long long i = 0; i < e; ++i) {
                long long row = 0, col = 0;
                for (long long j = 0; j < e; ++j) {
                    row += cyclotomic_number(F, e, i, j);
                    col += cyclotomic_number(F, e, j, i);
                }
                auto cls = cyclotomic_class(F, e, i);
                bool has_one = std::binary_search(cls.begin(), cls.end(), 1LL);
                bool has_minus_one =
                    std::binary_search(cls.begin(), cls.end(), F.neg(1));
                CHECK(row == f - (has_one ? 1 : 0));
                CHECK(col == f - (has_minus_one ? 1 : 0));
            }
        }
    }
}

TEST_CASE("abelian group enumeration and arithmetic") {
    AbelianGroup z3({3});
    auto e3 = group_elements(z3);
    REQUIRE(e3.size() == 3);
    CHECK(e3[0] == std::vector<long long>{0});
    CHECK(e3[2] == std::vector<long long>{2});

    AbelianGroup z22({2, 2});
    auto e22 = group_elements(z22);
    REQUIRE(e22.size() == 4);
    CHECK(e22[1] == std::vector<long long>{0, 1});
    CHECK(e22[2] == std::vector<long long>{1, 0});

    AbelianGroup z53({5, 3});
    auto e53 = group_elements(z53);
    REQUIRE(e53.size() == 15);
    std::set<std::vector<long long>> uniq(e53.begin(), e53.end());
    CHECK(uniq.size() == 15);

    // index round trip and additive structure
    for (long long a = 0; a < z53.order(); ++a) {
        CHECK(z53.index_of(z53.tuple_of(a)) == a);
        CHECK(z53.add(a, z53.neg(a)) == 0);
        for (long long b = 0; b < z53.order(); ++b)
            CHECK(z53.sub(z53.add(a, b), b) == a);
    }

    CHECK_THROWS(AbelianGroup({1}));
    CHECK_THROWS(AbelianGroup(std::vector<long long>(21, 2)));  // above the cap
}

TEST_CASE("field additive groups align indices with field elements") {
    FiniteField F9 = FiniteField::of_order(9);
    AbelianGroup G = field_additive_group(F9);
    CHECK(G.order() == 9);
    for (long long a = 0; a < 9; ++a)
        for (long long b = 0; b < 9; ++b) CHECK(G.add(a, b) == F9.add(a, b));

    AbelianGroup G2 = field_pair_group(F9);
    CHECK(G2.order() == 81);
    // pair (a, b) at index a*q + b, component-wise addition
    for (long long a : {0LL, 3LL, 8LL})
        for (long long b : {1LL, 5LL}) {
            long long idx = a * 9 + b;
            long long idx2 = G2.add(idx, 9 + 1);  // add the pair (1, 1)
            CHECK(idx2 == F9.add(a, 1) * 9 + F9.add(b, 1));
        }
}
