#pragma once

#include <string>
#include <vector>

#include "adesign/incidence.hpp"
#include "adesign/matrix.hpp"

namespace adesign {

// One parameter tuple a construction promises at level t. Claims carry the
// values the construction actually derives; when a published tuple disagrees
// with the derivable one, note records the discrepancy instead of asserting
// the misprint.
struct ParameterClaim {
    int t = 0;
    long long v = 0, k = 0, lambda = 0;
    Verdict kind = Verdict::Design;
    bool degenerate = false;  // classification out of range at this t; skipped
    std::string note;
};

// A built structure together with its claims and the exhaustive
// re-classification of every claim. Builders never trust themselves:
// mismatches are surfaced here, not masked.
struct ConstructionReport {
    std::string name;
    IncidenceStructure structure;
    std::vector<ParameterClaim> claims;
    std::vector<Classification> verified;  // aligned with claims
    std::vector<std::string> notes;

    bool all_verified() const;
};

// Blocks = supports of the rows of A (of A + I when add_identity).
IncidenceStructure row_support_structure(const IntMatrix& A, bool add_identity);

// Union of the row supports of a Paley-type graph and its complement:
// a 2-(n,(n-1)/2,(n-3)/2) design that is also a 3-(n,(n-1)/2,(n-9)/4)
// adesign. Requires Paley-type parameters with n >= 9.
ConstructionReport paley_union(const IntMatrix& A);

// Same with closed neighborhoods (A + I and A' + I): a 2-(n,(n+1)/2,(n+1)/2)
// design and a 3-(n,(n+1)/2,(n-1)/4) adesign.
ConstructionReport paley_union_complementary(const IntMatrix& A);

// Union of out- and in-neighborhood supports of a doubly regular tournament:
// a 2-(n,(n-1)/2,(n-3)/2) design and a 3-(n,(n-1)/2,(n-7)/4) adesign.
ConstructionReport tournament_union(const IntMatrix& A);

// Closed variant: a 2-(n,(n+1)/2,(n+1)/2) design and a 3-(n,(n+1)/2,(n-3)/4)
// adesign.
ConstructionReport tournament_union_complementary(const IntMatrix& A);

// Row supports of A + I for a strongly regular A with mu = lambda+1 or
// lambda+3: a 2-(v,k+1,lambda') adesign, lambda' = lambda+1 resp. lambda+2.
ConstructionReport srg_plus_identity(const IntMatrix& A);

// Union of the row supports of two strongly regular graphs with identical
// parameters whose sum is 0/1-valued (or 1/2-valued off the diagonal).
// complementary switches to A + I and A' + I. The level-2 value follows the
// case table on (mu - lambda, which sum hypothesis holds).
ConstructionReport srg_pair_union(const IntMatrix& A, const IntMatrix& A2, bool complementary);

// Derived structure of a Paley-type graph at one row: intersect the other
// row supports with the chosen support R, pad the short (size lambda)
// intersections with a new point. A 2-(k+1,lambda+1,lambda-1) adesign on
// R plus the new point; requires lambda >= 2.
ConstructionReport derived_at_infinity(const IntMatrix& A, long long row);

// Complements of the derived blocks inside the (k+1)-point ground set:
// a 2-(k+1,lambda+2,lambda+1) adesign.
ConstructionReport residual_at_infinity(const IntMatrix& A, long long row);

// Bose triple system over Z_n x Z_3 (n > 3 odd) extended by the shifted
// family: a 2-(3n,3,1) adesign with exactly 3n^2 - 2n blocks.
ConstructionReport bose_modified(long long n);

// Union over all centers a of the two-pair blocks {a-i,a+i,a-j,a+j} in Z_n:
// a 2-design whose 3-level classification is Neither when 3 | n, showing the
// one-level-down feasibility conditions are not sufficient.
ConstructionReport pair_union_counterexample(long long n);

// The realized instance of the pair union: Cayley graphs of the equal- and
// mixed-character pair sets over GF(q)^2 (their complements for the closed
// variant).
ConstructionReport character_pair_union(long long q, bool complementary);

// Paley-type developments on GF(q)^2 built from the quadratic-character
// pair sets, contracted at the origin: a minimal covering meeting the
// refined covering bound with equality.
struct CoveringConstruction {
    ConstructionReport full;        // 3-level structure on q^2 points
    ConstructionReport contracted;  // 2-level structure on q^2 - 1 points
    long long covering_bound_value = 0;
    bool horsley_applicable = false;
    bool meets_bound = false;
};

CoveringConstruction contraction_minimal_covering(long long q);

}  // namespace adesign
