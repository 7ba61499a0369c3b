#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>

#include "adesign/graphs.hpp"
#include "adesign/setdiff.hpp"

using namespace adesign;

namespace {

AbelianGroup zn(long long n) { return AbelianGroup({n}); }

std::vector<long long> qr13() { return {1, 3, 4, 9, 10, 12}; }

}  // namespace

TEST_CASE("difference spectrum: frozen small cases") {
    auto sp = difference_spectrum(zn(7), {1, 2, 4});
    for (long long g = 1; g < 7; ++g) CHECK(sp.multiplicity[static_cast<std::size_t>(g)] == 1);

    auto sp5 = difference_spectrum(zn(5), {0, 1});
    CHECK(sp5.multiplicity[1] == 1);
    CHECK(sp5.multiplicity[4] == 1);
    CHECK(sp5.multiplicity[2] == 0);
    CHECK(sp5.multiplicity[3] == 0);

    auto sp13 = difference_spectrum(zn(13), qr13());
    int twos = 0, threes = 0;
    for (long long g = 1; g < 13; ++g) {
        long long m = sp13.multiplicity[static_cast<std::size_t>(g)];
        if (m == 2) ++twos;
        if (m == 3) ++threes;
    }
    CHECK(twos == 6);
    CHECK(threes == 6);
}

TEST_CASE("spectrum mass and parallel/reference agreement") {
    auto mass = [](const DifferenceSpectrum& sp) {
        long long total = 0;
        for (long long m : sp.multiplicity) total += m;
        return total;
    };
    for (auto& [G, D] : std::vector<std::pair<AbelianGroup, std::vector<long long>>>{
             {zn(7), {1, 2, 4}},
             {zn(13), qr13()},
             {zn(12), {0, 1, 3, 7}},
             {AbelianGroup({5, 3}), {0, 1, 2, 7, 9}}}) {
        auto sp = difference_spectrum(G, D);
        long long k = static_cast<long long>(D.size());
        CHECK(mass(sp) == k * (k - 1));
        CHECK(sp.multiplicity == difference_spectrum_reference(G, D).multiplicity);
    }
}

TEST_CASE("difference set recognition") {
    CHECK(is_difference_set(zn(7), {1, 2, 4}) == 1);
    CHECK_FALSE(is_difference_set(zn(13), qr13()).has_value());
    CHECK_FALSE(is_difference_set(zn(5), {0, 1}).has_value());
}

TEST_CASE("almost difference set recognition and the parameter identity") {
    auto qr = is_almost_difference_set(zn(13), qr13());
    REQUIRE(qr.has_value());
    CHECK(qr->lambda == 2);
    CHECK(qr->s == 6);
    CHECK((13 - 1) * (qr->lambda + 1) - qr->s == 6 * 5);

    // a perfect difference set reports under the s = v-1 reading
    auto ds = is_almost_difference_set(zn(7), {1, 2, 4});
    REQUIRE(ds.has_value());
    CHECK(ds->lambda == 1);
    CHECK(ds->s == 6);

    auto z5 = is_almost_difference_set(zn(5), {0, 1});
    REQUIRE(z5.has_value());
    CHECK(z5->lambda == 0);
    CHECK(z5->s == 2);

    // spectrum with spread 2 is not an almost difference set
    CHECK_FALSE(is_almost_difference_set(zn(12), {0, 1, 3, 7}).has_value());
}

TEST_CASE("almost difference set complement law") {
    // (v,k,lambda,s) -> (v, v-k, v-2k+lambda, s), for every recognized case
    auto check_complement = [](const AbelianGroup& G, const std::vector<long long>& D) {
        auto ads = is_almost_difference_set(G, D);
        REQUIRE(ads.has_value());
        std::set<long long> in(D.begin(), D.end());
        std::vector<long long> comp;
        for (long long g = 0; g < G.order(); ++g)
            if (!in.count(g)) comp.push_back(g);
        auto cads = is_almost_difference_set(G, comp);
        REQUIRE(cads.has_value());
        long long v = G.order(), k = static_cast<long long>(D.size());
        CHECK(cads->lambda == v - 2 * k + ads->lambda);
        CHECK(cads->s == ads->s);
    };
    check_complement(zn(13), qr13());
    check_complement(zn(5), {0, 1});
    check_complement(zn(17), {1, 2, 4, 8, 9, 13, 15, 16});  // squares mod 17
}

TEST_CASE("partial difference sets") {
    // pentagon: D = {1, 4} in Z_5
    auto pent = is_partial_difference_set(zn(5), {1, 4});
    REQUIRE(pent.has_value());
    CHECK(pent->lambda == 0);
    CHECK(pent->mu == 1);

    // candidate-shape failures return nullopt, not exceptions
    CHECK_FALSE(is_partial_difference_set(zn(5), {0, 1}).has_value());   // contains 0
    CHECK_FALSE(is_partial_difference_set(zn(7), {1, 2, 4}).has_value());  // not symmetric

    auto qr = is_partial_difference_set(zn(13), qr13());
    REQUIRE(qr.has_value());
    CHECK(qr->lambda == 2);
    CHECK(qr->mu == 3);
}

TEST_CASE("character pair sets over GF(5)^2: frozen element lists") {
    auto D = equal_character_pair_set(5);
    auto Dt = mixed_character_pair_set(5);
    REQUIRE(D.group.order() == 25);
    auto enc = [](long long a, long long b) { return a * 5 + b; };
    std::vector<long long> wantD = {enc(2, 3), enc(1, 4), enc(3, 2), enc(4, 1),
                                    enc(3, 3), enc(1, 1), enc(4, 4), enc(2, 2)};
    std::sort(wantD.begin(), wantD.end());
    CHECK(D.elements == wantD);
    std::vector<long long> wantDt = {enc(4, 3), enc(1, 2), enc(1, 3), enc(3, 1),
                                     enc(2, 1), enc(2, 4), enc(3, 4), enc(4, 2)};
    std::sort(wantDt.begin(), wantDt.end());
    CHECK(Dt.elements == wantDt);

    CHECK(equal_character_pair_set(3).elements.size() == 2);
    CHECK_THROWS(equal_character_pair_set(8));
}

TEST_CASE("character pair sets are partial difference sets with adjacent levels") {
    for (long long q : {3LL, 5LL, 7LL, 9LL}) {
        for (bool mixed : {false, true}) {
            auto D = mixed ? mixed_character_pair_set(q) : equal_character_pair_set(q);
            CHECK(D.elements.size() == static_cast<std::size_t>((q - 1) * (q - 1) / 2));
            auto pds = is_partial_difference_set(D.group, D.elements);
            REQUIRE(pds.has_value());
            CHECK(pds->lambda == (q * q - 4 * q + 7) / 4);
            CHECK(pds->mu == (q * q - 4 * q + 3) / 4);
            CHECK(pds->lambda - pds->mu == 1);
        }
    }
}

TEST_CASE("developments") {
    auto devF = development(zn(7), {1, 2, 4});
    CHECK(devF.block_count() == 7);
    auto c = classify(devF, 2);
    CHECK(c.verdict == Verdict::Design);
    CHECK(c.lambda == 1);

    auto devQ = development(zn(13), qr13());
    auto cq = classify(devQ, 2);
    CHECK(cq.verdict == Verdict::Adesign);
    CHECK(cq.lambda == 2);

    auto devT = development(AbelianGroup({4}), {0, 2});
    CHECK(devT.block_count() == 4);
    CHECK(devT.has_repeated_blocks());  // D + 0 = D + 2
}

TEST_CASE("development replication matches translate intersections") {
    // r_{x,y} = lambda exactly when |(D+x) n (D+y)| = lambda
    auto G = zn(13);
    auto D = qr13();
    auto dev = development(G, D);
    auto ads = is_almost_difference_set(G, D);
    REQUIRE(ads.has_value());
    std::set<long long> base(D.begin(), D.end());
    for (long long x = 0; x < 13; ++x)
        for (long long y = x + 1; y < 13; ++y) {
            long long common = 0;
            for (long long d : D)
                if (base.count(G.sub(G.add(d, x), y))) ++common;  // (D+x) n (D+y)
            std::array<long long, 2> pair{x, y};
            long long r = replication(dev, pair);
            if (common == ads->lambda)
                CHECK(r == ads->lambda);
            else
                CHECK(r == ads->lambda + 1);
        }
}

TEST_CASE("Cayley graphs and their strong regularity") {
    auto A = cayley_graph(zn(13), qr13());
    auto p = is_srg(A);
    REQUIRE(p.has_value());
    CHECK(*p == SrgParams{13, 6, 2, 3});

    auto pent = cayley_graph(zn(5), {1, 4});
    auto pp = is_srg(pent);
    REQUIRE(pp.has_value());
    CHECK(*pp == SrgParams{5, 2, 0, 1});

    auto D = equal_character_pair_set(5);
    auto AD = cayley_graph(D.group, D.elements);
    auto pd = is_srg(AD);
    REQUIRE(pd.has_value());
    CHECK(*pd == SrgParams{25, 8, 3, 2});

    CHECK_THROWS(cayley_graph(zn(7), {1, 2, 4}));  // not symmetric

    // is_srg succeeds exactly when the subset is a partial difference set
    for (auto D5 : std::vector<std::vector<long long>>{{1, 4}, {2, 3}, {1, 2, 3, 4}}) {
        auto srg = is_srg(cayley_graph(zn(5), D5));
        auto pds = is_partial_difference_set(zn(5), D5);
        CHECK(srg.has_value() == pds.has_value());
    }
}

TEST_CASE("quadratic residue sets") {
    auto qr = quadratic_residue_set(13);
    CHECK(qr.elements == qr13());
    auto qr9 = quadratic_residue_set(9);
    CHECK(qr9.elements.size() == 4);
    CHECK_THROWS(quadratic_residue_set(8));
}
