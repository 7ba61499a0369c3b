#pragma once

#include <optional>
#include <vector>

#include "adesign/algebra.hpp"
#include "adesign/incidence.hpp"
#include "adesign/matrix.hpp"

namespace adesign {

// A subset of an abelian group, elements stored as sorted indices.
struct GroupSubset {
    AbelianGroup group;
    std::vector<long long> elements;
};

// Multiplicities of x - y over ordered pairs of distinct elements of D,
// indexed by group element (identity slot unused, always 0).
struct DifferenceSpectrum {
    long long group_order = 0;
    long long subset_size = 0;
    std::vector<long long> multiplicity;
};

DifferenceSpectrum difference_spectrum(const AbelianGroup& G, const std::vector<long long>& D);
DifferenceSpectrum difference_spectrum_reference(const AbelianGroup& G,
                                                 const std::vector<long long>& D);

// lambda iff every nonidentity element occurs exactly lambda times.
std::optional<long long> is_difference_set(const AbelianGroup& G,
                                           const std::vector<long long>& D);

struct AdsParams {
    long long lambda = 0;
    long long s = 0;  // number of nonidentity elements at multiplicity lambda
};

// (lambda, s) iff the spectrum takes exactly the two values lambda and
// lambda+1 over nonidentity elements. A constant spectrum (a perfect
// difference set) is reported under the s = v-1 reading.
std::optional<AdsParams> is_almost_difference_set(const AbelianGroup& G,
                                                  const std::vector<long long>& D);

struct PdsParams {
    long long lambda = 0;  // multiplicity of differences landing inside D
    long long mu = 0;      // multiplicity outside D and the identity
};

// Requires the regular-candidate shape -D = D, 0 not in D; returns nullopt
// otherwise (no exception), and (lambda, mu) iff both levels are constant.
std::optional<PdsParams> is_partial_difference_set(const AbelianGroup& G,
                                                   const std::vector<long long>& D);

// Translates D + g in group order; multiset allowed so translate collisions
// surface through has_repeated_blocks() instead of failing.
IncidenceStructure development(const AbelianGroup& G, const std::vector<long long>& D);

// Adjacency of the Cayley graph: (g, h) adjacent iff g - h lies in D.
// Throws unless 0 is outside D and -D = D.
IntMatrix cayley_graph(const AbelianGroup& G, const std::vector<long long>& D);

// Nonzero squares of GF(q) inside its additive group.
GroupSubset quadratic_residue_set(long long q);

// Pairs (a, b) of nonzero field elements with equal quadratic character
// (both squares or both nonsquares), inside the additive group of
// GF(q) x GF(q). |D| = (q-1)^2 / 2.
GroupSubset equal_character_pair_set(long long q);

// Pairs of nonzero elements with opposite quadratic character.
GroupSubset mixed_character_pair_set(long long q);

}  // namespace adesign
