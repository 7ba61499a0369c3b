#include "adesign/setdiff.hpp"

#include <algorithm>
#include <stdexcept>

namespace adesign {

namespace {

void check_subset(const AbelianGroup& G, const std::vector<long long>& D) {
    if (D.size() < 2) throw std::invalid_argument("subset needs at least two elements");
    std::vector<long long> s = D;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= G.order())
            throw std::invalid_argument("subset element outside the group");
        if (i > 0 && s[i] == s[i - 1]) throw std::invalid_argument("repeated subset element");
    }
}

bool symmetric_without_identity(const AbelianGroup& G, const std::vector<long long>& D) {
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    for (long long d : D) in[static_cast<std::size_t>(d)] = 1;
    if (in[0]) return false;
    for (long long d : D)
        if (!in[static_cast<std::size_t>(G.neg(d))]) return false;
    return true;
}

}  // namespace

DifferenceSpectrum difference_spectrum(const AbelianGroup& G, const std::vector<long long>& D) {
    check_subset(G, D);
    DifferenceSpectrum sp;
    sp.group_order = G.order();
    sp.subset_size = static_cast<long long>(D.size());
    sp.multiplicity.assign(static_cast<std::size_t>(G.order()), 0);
    const long long n = static_cast<long long>(D.size());
#pragma omp parallel
    {
        std::vector<long long> local(sp.multiplicity.size(), 0);
#pragma omp for schedule(static)
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                if (i == j) continue;
                ++local[static_cast<std::size_t>(
                    G.sub(D[static_cast<std::size_t>(i)], D[static_cast<std::size_t>(j)]))];
            }
#pragma omp critical
        for (std::size_t g = 0; g < local.size(); ++g) sp.multiplicity[g] += local[g];
    }
    return sp;
}

DifferenceSpectrum difference_spectrum_reference(const AbelianGroup& G,
                                                 const std::vector<long long>& D) {
    check_subset(G, D);
    DifferenceSpectrum sp;
    sp.group_order = G.order();
    sp.subset_size = static_cast<long long>(D.size());
    sp.multiplicity.assign(static_cast<std::size_t>(G.order()), 0);
    for (long long x : D)
        for (long long y : D) {
            if (x == y) continue;
            ++sp.multiplicity[static_cast<std::size_t>(G.sub(x, y))];
        }
    return sp;
}

std::optional<long long> is_difference_set(const AbelianGroup& G,
                                           const std::vector<long long>& D) {
    DifferenceSpectrum sp = difference_spectrum(G, D);
    long long lambda = sp.multiplicity[1];
    for (long long g = 1; g < G.order(); ++g)
        if (sp.multiplicity[static_cast<std::size_t>(g)] != lambda) return std::nullopt;
    return lambda;
}

std::optional<AdsParams> is_almost_difference_set(const AbelianGroup& G,
                                                  const std::vector<long long>& D) {
    DifferenceSpectrum sp = difference_spectrum(G, D);
    long long lo = -1, hi = -1, count_lo = 0;
    for (long long g = 1; g < G.order(); ++g) {
        long long m = sp.multiplicity[static_cast<std::size_t>(g)];
        if (lo == -1) {
            lo = hi = m;
        } else {
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
    }
    AdsParams out;
    if (lo == hi) {
        // perfect difference set, reported under the s = v-1 reading
        out.lambda = lo;
        out.s = G.order() - 1;
        return out;
    }
    if (hi != lo + 1) return std::nullopt;
    for (long long g = 1; g < G.order(); ++g)
        if (sp.multiplicity[static_cast<std::size_t>(g)] == lo) ++count_lo;
    out.lambda = lo;
    out.s = count_lo;
    long long v = G.order();
    long long k = static_cast<long long>(D.size());
    if ((v - 1) * (out.lambda + 1) - out.s != k * (k - 1))
        throw std::logic_error("almost-difference-set parameter identity violated");
    return out;
}

std::optional<PdsParams> is_partial_difference_set(const AbelianGroup& G,
                                                   const std::vector<long long>& D) {
    check_subset(G, D);
    if (!symmetric_without_identity(G, D)) return std::nullopt;
    DifferenceSpectrum sp = difference_spectrum(G, D);
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    for (long long d : D) in[static_cast<std::size_t>(d)] = 1;
    long long lambda = -1, mu = -1;
    for (long long g = 1; g < G.order(); ++g) {
        long long m = sp.multiplicity[static_cast<std::size_t>(g)];
        if (in[static_cast<std::size_t>(g)]) {
            if (lambda == -1) lambda = m;
            if (m != lambda) return std::nullopt;
        } else {
            if (mu == -1) mu = m;
            if (m != mu) return std::nullopt;
        }
    }
    if (lambda == -1 || mu == -1) return std::nullopt;
    return PdsParams{lambda, mu};
}

IncidenceStructure development(const AbelianGroup& G, const std::vector<long long>& D) {
    check_subset(G, D);
    std::vector<std::vector<long long>> blocks;
    blocks.reserve(static_cast<std::size_t>(G.order()));
    for (long long g = 0; g < G.order(); ++g) {
        std::vector<long long> blk;
        blk.reserve(D.size());
        for (long long d : D) blk.push_back(G.add(d, g));
        blocks.push_back(std::move(blk));
    }
    return IncidenceStructure::from_ordered_blocks(G.order(), std::move(blocks), true);
}

IntMatrix cayley_graph(const AbelianGroup& G, const std::vector<long long>& D) {
    check_subset(G, D);
    if (!symmetric_without_identity(G, D))
        throw std::invalid_argument("Cayley graph needs 0 outside D and -D = D");
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    for (long long d : D) in[static_cast<std::size_t>(d)] = 1;
    long long n = G.order();
    IntMatrix A(n, n);
    for (long long g = 0; g < n; ++g)
        for (long long h = 0; h < n; ++h)
            if (in[static_cast<std::size_t>(G.sub(g, h))]) A(g, h) = 1;
    return A;
}

GroupSubset quadratic_residue_set(long long q) {
    FiniteField F = FiniteField::of_order(q);
    return GroupSubset{field_additive_group(F), cyclotomic_class(F, 2, 0)};
}

namespace {

GroupSubset character_pair_set(long long q, bool mixed) {
    FiniteField F = FiniteField::of_order(q);
    std::vector<long long> squares = cyclotomic_class(F, 2, 0);
    std::vector<long long> nonsquares = cyclotomic_class(F, 2, 1);
    std::vector<long long> elems;
    elems.reserve(static_cast<std::size_t>((q - 1) * (q - 1) / 2));
    auto emit = [&](const std::vector<long long>& as, const std::vector<long long>& bs) {
        for (long long a : as)
            for (long long b : bs) elems.push_back(a * q + b);
    };
    if (mixed) {
        emit(squares, nonsquares);
        emit(nonsquares, squares);
    } else {
        emit(squares, squares);
        emit(nonsquares, nonsquares);
    }
    std::sort(elems.begin(), elems.end());
    return GroupSubset{field_pair_group(F), std::move(elems)};
}

}  // namespace

GroupSubset equal_character_pair_set(long long q) { return character_pair_set(q, false); }

GroupSubset mixed_character_pair_set(long long q) { return character_pair_set(q, true); }

}  // namespace adesign
