#include "adesign/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "adesign/algebra.hpp"
#include "adesign/bounds.hpp"
#include "adesign/graphs.hpp"
#include "adesign/setdiff.hpp"

namespace adesign {

namespace {

// Classify the structure at every non-degenerate claim level and record the
// outcome next to the claim.
void verify_claims(ConstructionReport& rep) {
    rep.verified.clear();
    for (const auto& c : rep.claims) {
        if (c.degenerate) {
            rep.verified.emplace_back();
            continue;
        }
        rep.verified.push_back(classify(rep.structure, c.t));
    }
}

ParameterClaim claim(int t, long long v, long long k, long long lambda, Verdict kind,
                     std::string note = {}) {
    ParameterClaim c;
    c.t = t;
    c.v = v;
    c.k = k;
    c.lambda = lambda;
    c.kind = kind;
    c.note = std::move(note);
    return c;
}

SrgParams require_paley(const IntMatrix& A, long long min_n) {
    auto p = is_srg(A);
    if (!p || !is_paley_type(*p))
        throw std::invalid_argument("a Paley-type strongly regular graph is required");
    if (p->n < min_n) throw std::invalid_argument("graph too small for this construction");
    return *p;
}

}  // namespace

bool ConstructionReport::all_verified() const {
    if (claims.size() != verified.size()) return false;
    for (std::size_t i = 0; i < claims.size(); ++i) {
        const auto& c = claims[i];
        if (c.degenerate) continue;
        const auto& got = verified[i];
        if (got.verdict != c.kind) return false;
        if (got.v != c.v || got.k != c.k) return false;
        if (c.kind != Verdict::Neither && got.lambda != c.lambda) return false;
    }
    return true;
}

IncidenceStructure row_support_structure(const IntMatrix& A, bool add_identity) {
    if (!A.is_square()) throw std::invalid_argument("square matrix required");
    if (!A.is_zero_one()) throw std::invalid_argument("entries must be 0 or 1");
    long long n = A.rows();
    std::vector<std::vector<long long>> blocks(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        auto& blk = blocks[static_cast<std::size_t>(i)];
        for (long long j = 0; j < n; ++j)
            if (A(i, j) || (add_identity && i == j)) blk.push_back(j);
        if (blk.empty()) throw std::invalid_argument("zero row has empty support");
    }
    return IncidenceStructure::from_ordered_blocks(n, std::move(blocks), false);
}

namespace {

// Union of the row supports of A (+I) and of J - I - A (+I); shared by the
// graph and tournament constructions.
IncidenceStructure open_or_closed_union(const IntMatrix& A, bool closed) {
    long long n = A.rows();
    IntMatrix Ac(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (i != j) Ac(i, j) = 1 - A(i, j);
    return union_structures(row_support_structure(A, closed),
                            row_support_structure(Ac, closed), false);
}

}  // namespace

ConstructionReport paley_union(const IntMatrix& A) {
    SrgParams p = require_paley(A, 9);
    long long n = p.n;
    ConstructionReport rep;
    rep.name = "paley-union";
    rep.structure = open_or_closed_union(A, false);
    rep.claims = {claim(2, n, (n - 1) / 2, (n - 3) / 2, Verdict::Design),
                  claim(3, n, (n - 1) / 2, (n - 9) / 4, Verdict::Adesign)};
    verify_claims(rep);
    return rep;
}

ConstructionReport paley_union_complementary(const IntMatrix& A) {
    SrgParams p = require_paley(A, 5);
    long long n = p.n;
    ConstructionReport rep;
    rep.name = "paley-union-comp";
    rep.structure = open_or_closed_union(A, true);
    rep.claims = {claim(2, n, (n + 1) / 2, (n + 1) / 2, Verdict::Design,
                        "published tuple prints lambda = (n-1)/2; the verified level is (n+1)/2"),
                  claim(3, n, (n + 1) / 2, (n - 1) / 4, Verdict::Adesign,
                        "published tuple prints k = (n-1)/2; blocks have size (n+1)/2")};
    if (3 >= (n + 1) / 2) {  // blocks too small to classify at t = 3
        rep.claims[1].degenerate = true;
        rep.claims[1].note = "degenerate: t = 3 exceeds the block size at this order";
    }
    verify_claims(rep);
    return rep;
}

ConstructionReport tournament_union(const IntMatrix& A) {
    auto p = is_doubly_regular_tournament(A);
    if (!p) throw std::invalid_argument("a doubly regular tournament is required");
    long long n = p->n;
    if (n < 7) throw std::invalid_argument("tournament too small for this construction");
    ConstructionReport rep;
    rep.name = "drt-union";
    rep.structure = open_or_closed_union(A, false);
    rep.claims = {claim(2, n, (n - 1) / 2, (n - 3) / 2, Verdict::Design),
                  claim(3, n, (n - 1) / 2, (n - 7) / 4, Verdict::Adesign)};
    verify_claims(rep);
    return rep;
}

ConstructionReport tournament_union_complementary(const IntMatrix& A) {
    auto p = is_doubly_regular_tournament(A);
    if (!p) throw std::invalid_argument("a doubly regular tournament is required");
    long long n = p->n;
    if (n < 7) throw std::invalid_argument("tournament too small for this construction");
    ConstructionReport rep;
    rep.name = "drt-union-comp";
    rep.structure = open_or_closed_union(A, true);
    rep.claims = {claim(2, n, (n + 1) / 2, (n + 1) / 2, Verdict::Design),
                  claim(3, n, (n + 1) / 2, (n - 3) / 4, Verdict::Adesign)};
    verify_claims(rep);
    return rep;
}

ConstructionReport srg_plus_identity(const IntMatrix& A) {
    auto p = is_srg(A);
    if (!p) throw std::invalid_argument("a strongly regular graph is required");
    if (p->mu != p->lambda + 1 && p->mu != p->lambda + 3)
        throw std::invalid_argument("mu must be lambda+1 or lambda+3");
    long long lp = (p->mu == p->lambda + 1) ? p->lambda + 1 : p->lambda + 2;
    ConstructionReport rep;
    rep.name = "srg-plus-i";
    rep.structure = row_support_structure(A, true);
    rep.claims = {claim(2, p->n, p->k + 1, lp, Verdict::Adesign)};
    verify_claims(rep);
    return rep;
}

ConstructionReport srg_pair_union(const IntMatrix& A, const IntMatrix& A2, bool complementary) {
    auto p1 = is_srg(A);
    auto p2 = is_srg(A2);
    if (!p1 || !p2) throw std::invalid_argument("two strongly regular graphs are required");
    if (!(*p1 == *p2)) throw std::invalid_argument("the graphs must share one parameter set");
    long long lambda = p1->lambda, mu = p1->mu, n = p1->n;
    long long gap = mu - lambda;
    if (!complementary && gap != 1 && gap != -1)
        throw std::invalid_argument("mu must be lambda+1 or lambda-1 for the open variant");
    if (complementary && gap != 1 && gap != 3)
        throw std::invalid_argument("mu must be lambda+1 or lambda+3 for the closed variant");

    // Sum hypothesis: A + A' is 0/1, or all its off-diagonal entries are 1/2.
    long long lo = 3, hi = -1;
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            if (i == j) continue;
            long long s = A(i, j) + A2(i, j);
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
    bool zero_one = (lo >= 0 && hi <= 1);
    bool one_two = (lo >= 1 && hi <= 2);
    if (!zero_one && !one_two)
        throw std::invalid_argument(
            "the adjacency sum is neither 0/1-valued nor 1/2-valued off the diagonal");

    // Pair replication is 2*mu + c*(A+A')_{xy} with c = lambda - mu (+2 for
    // the closed variant); the low level follows from which sum values occur.
    long long coef = lambda - mu + (complementary ? 2 : 0);
    long long r_at_lo = 2 * mu + coef * lo;
    long long r_at_hi = 2 * mu + coef * hi;
    long long level_lo = std::min(r_at_lo, r_at_hi);
    long long level_hi = std::max(r_at_lo, r_at_hi);

    ConstructionReport rep;
    rep.name = "srg-pair-union";
    rep.structure = union_structures(row_support_structure(A, complementary),
                                     row_support_structure(A2, complementary), false);
    long long k = complementary ? p1->k + 1 : p1->k;
    rep.notes.push_back(zero_one ? "sum hypothesis: A + A' is a 0/1 matrix"
                                 : "sum hypothesis: A + A' + I is a 1/2 matrix");
    if (lo == hi) {
        // constant adjacency sum degenerates to a single replication level
        rep.claims = {claim(2, n, k, level_lo, Verdict::Design,
                            "constant adjacency sum: the union is a design, not an adesign")};
    } else {
        rep.claims = {claim(2, n, k, level_lo, Verdict::Adesign)};
        rep.notes.push_back("pair replication levels {" + std::to_string(level_lo) + ", " +
                            std::to_string(level_hi) + "}");
    }
    verify_claims(rep);
    return rep;
}

namespace {

ConstructionReport infinity_construction(const IntMatrix& A, long long row, bool residual) {
    SrgParams p = require_paley(A, 5);
    if (p.lambda < 2)
        throw std::invalid_argument("the derived construction needs lambda >= 2");
    long long n = p.n;
    if (row < 0 || row >= n) throw std::invalid_argument("row index out of range");

    std::vector<long long> R;
    for (long long j = 0; j < n; ++j)
        if (A(row, j)) R.push_back(j);
    std::vector<long long> pos(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < R.size(); ++i) pos[static_cast<std::size_t>(R[i])] =
        static_cast<long long>(i);
    long long infinity = p.k;  // ground set R relabeled 0..k-1, plus the new point

    std::vector<std::vector<long long>> blocks;
    blocks.reserve(static_cast<std::size_t>(n - 1));
    for (long long y = 0; y < n; ++y) {
        if (y == row) continue;
        std::vector<long long> blk;
        for (long long j : R)
            if (A(y, j)) blk.push_back(pos[static_cast<std::size_t>(j)]);
        long long size = static_cast<long long>(blk.size());
        if (size != p.lambda && size != p.lambda + 1)
            throw std::logic_error("row intersection of unexpected size");
        if (size == p.lambda) blk.push_back(infinity);
        blocks.push_back(std::move(blk));
    }
    if (residual) {
        for (auto& blk : blocks) {
            std::vector<long long> c;
            std::sort(blk.begin(), blk.end());
            std::size_t i = 0;
            for (long long q = 0; q <= p.k; ++q) {
                if (i < blk.size() && blk[i] == q) {
                    ++i;
                    continue;
                }
                c.push_back(q);
            }
            blk = std::move(c);
        }
    }

    ConstructionReport rep;
    rep.name = residual ? "residual-inf" : "derived-inf";
    rep.structure =
        IncidenceStructure::from_ordered_blocks(p.k + 1, std::move(blocks), false);
    if (residual)
        rep.claims = {claim(2, p.k + 1, p.lambda + 2, p.lambda + 1, Verdict::Adesign)};
    else
        rep.claims = {claim(2, p.k + 1, p.lambda + 1, p.lambda - 1, Verdict::Adesign)};
    verify_claims(rep);
    return rep;
}

}  // namespace

ConstructionReport derived_at_infinity(const IntMatrix& A, long long row) {
    return infinity_construction(A, row, false);
}

ConstructionReport residual_at_infinity(const IntMatrix& A, long long row) {
    return infinity_construction(A, row, true);
}

ConstructionReport bose_modified(long long n) {
    if (n <= 3 || n % 2 == 0) throw std::invalid_argument("an odd n > 3 is required");
    long long mult = (n + 1) / 2;  // idempotent multiplier: mult*(a+a) = a
    auto point = [n](long long a, long long i) { return ((a % n + n) % n) * 3 + i % 3; };

    std::vector<std::vector<long long>> blocks;
    // ordered pairs a < b under the natural total order
    for (long long i = 0; i < 3; ++i)
        for (long long a = 0; a < n; ++a)
            for (long long b = a + 1; b < n; ++b)
                blocks.push_back({point(a, i), point(b, i), point(mult * (a + b), i + 1)});
    // the shifted family over pairs with a not below b; the same block
    // appears under (a, b) and (b-1, a+1), so collect into a set first
    std::set<std::vector<long long>> shifted;
    for (long long i = 0; i < 3; ++i)
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b <= a; ++b) {
                if (a == (b - 1 + n) % n) continue;
                std::vector<long long> blk{point(a, i), point(b - 1, i),
                                           point(mult * (a + b), i + 1)};
                std::sort(blk.begin(), blk.end());
                shifted.insert(std::move(blk));
            }
    blocks.insert(blocks.end(), shifted.begin(), shifted.end());
    for (long long a = 0; a < n; ++a) blocks.push_back({point(a, 0), point(a, 1), point(a, 2)});

    ConstructionReport rep;
    rep.name = "bose-mod";
    rep.structure = IncidenceStructure::from_ordered_blocks(3 * n, std::move(blocks), false);
    if (rep.structure.block_count() != 3 * n * n - 2 * n)
        throw std::logic_error("unexpected block count in the extended triple system");
    rep.claims = {claim(2, 3 * n, 3, 1, Verdict::Adesign)};
    verify_claims(rep);
    return rep;
}

ConstructionReport pair_union_counterexample(long long n) {
    if (n < 9 || n % 2 == 0) throw std::invalid_argument("an odd n >= 9 is required");
    std::vector<std::vector<long long>> blocks;
    auto mod = [n](long long x) { return (x % n + n) % n; };
    for (long long a = 0; a < n; ++a)
        for (long long i = 1; i <= (n - 1) / 2; ++i)
            for (long long j = i + 1; j <= (n - 1) / 2; ++j) {
                std::vector<long long> blk{mod(a - i), mod(a + i), mod(a - j), mod(a + j)};
                std::sort(blk.begin(), blk.end());
                blocks.push_back(std::move(blk));
            }
    ConstructionReport rep;
    rep.name = "pair-union-example";
    rep.structure = IncidenceStructure::from_ordered_blocks(n, std::move(blocks), true);
    long long lambda2 = 3 * (n - 3) / 2;
    std::string note = (lambda2 == n)
                           ? std::string{}
                           : "published tuple prints lambda = n, which holds only at n = 9; "
                             "the verified level is 3(n-3)/2";
    rep.claims = {claim(2, n, 4, lambda2, Verdict::Design, note)};
    if (n % 3 == 0) {
        rep.claims.push_back(claim(3, n, 4, -1, Verdict::Neither,
                                   "equally spaced triples lie in no block when 3 divides n"));
    } else {
        ParameterClaim c = claim(3, n, 4, -1, Verdict::Neither,
                                 "3-level verdict recorded only; no claim made at this n");
        c.degenerate = true;
        rep.claims.push_back(c);
        rep.notes.push_back("3-level verdict at n = " + std::to_string(n) + ": " +
                            to_string(classify(rep.structure, 3).verdict));
    }
    verify_claims(rep);
    return rep;
}

ConstructionReport character_pair_union(long long q, bool complementary) {
    FiniteField F = FiniteField::of_order(q);
    AbelianGroup G = field_pair_group(F);
    IntMatrix A = cayley_graph(G, equal_character_pair_set(q).elements);
    IntMatrix A2 = cayley_graph(G, mixed_character_pair_set(q).elements);
    if (complementary) {
        A = complement_graph(A);
        A2 = complement_graph(A2);
    }
    ConstructionReport rep = srg_pair_union(A, A2, complementary);
    if (complementary)
        rep.claims[0].note =
            "published tuple prints k = (q^2+2q+1)/2; the blocks have size (q^2+2q-1)/2";
    return rep;
}

CoveringConstruction contraction_minimal_covering(long long q) {
    if (q < 3 || q % 2 == 0) throw std::invalid_argument("an odd prime power q >= 3 is required");
    FiniteField F = FiniteField::of_order(q);
    AbelianGroup G = field_pair_group(F);

    GroupSubset D = equal_character_pair_set(q);
    GroupSubset Dt = mixed_character_pair_set(q);
    std::vector<long long> X = D.elements;
    for (long long a = 0; a < q; ++a) X.push_back(a * q);  // the horizontal line through 0
    std::vector<long long> Xt = Dt.elements;
    for (long long b = 0; b < q; ++b) Xt.push_back(b);  // the vertical line through 0
    std::sort(X.begin(), X.end());
    std::sort(Xt.begin(), Xt.end());

    // Both developments are the closed-neighborhood supports of Paley-type
    // Cayley graphs; verified here so the construction rests on checked input.
    std::vector<long long> P(X.begin(), X.end());
    P.erase(std::find(P.begin(), P.end(), 0));
    auto p = is_srg(cayley_graph(G, P));
    if (!p || !is_paley_type(*p))
        throw std::logic_error("the augmented character set is not a Paley-type partial "
                               "difference set");

    CoveringConstruction cc;
    cc.full.name = "contraction-cover";
    cc.full.structure = union_structures(development(G, X), development(G, Xt), false);
    long long n = q * q;
    cc.full.claims = {claim(2, n, (n + 1) / 2, (n + 1) / 2, Verdict::Design),
                      claim(3, n, (n + 1) / 2, (n - 1) / 4, Verdict::Adesign)};
    verify_claims(cc.full);

    cc.contracted.name = "contraction-cover/contracted";
    cc.contracted.structure = contraction(cc.full.structure, 0);
    cc.contracted.claims = {claim(2, n - 1, (n - 1) / 2, (n - 1) / 4, Verdict::Adesign)};
    verify_claims(cc.contracted);

    auto h = horsley_covering(n - 1, (n - 1) / 2, (n - 1) / 4);
    cc.horsley_applicable = h.has_value();
    cc.covering_bound_value = covering_bound(n - 1, (n - 1) / 2, (n - 1) / 4);
    cc.meets_bound = is_minimal_covering(cc.contracted.structure, (n - 1) / 4);
    return cc;
}

}  // namespace adesign
