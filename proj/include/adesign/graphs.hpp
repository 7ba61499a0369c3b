#pragma once

#include <optional>
#include <string>

#include "adesign/matrix.hpp"

namespace adesign {

struct SrgParams {
    long long n = 0, k = 0, lambda = 0, mu = 0;
    bool operator==(const SrgParams&) const = default;
};

// Paley-type parameter shape (n, (n-1)/2, (n-5)/4, (n-1)/4).
bool is_paley_type(const SrgParams& p);

struct TournamentParams {
    long long n = 0;
    long long common_out_neighbors = 0;  // (n-3)/4
    bool operator==(const TournamentParams&) const = default;
};

// Strong regularity by exhaustive common-neighbor counting (bitset rows,
// parallel verification). Throws on non-0/1, asymmetric or nonzero-diagonal
// input; returns nullopt for irregular, complete, empty or too-small graphs.
std::optional<SrgParams> is_srg(const IntMatrix& A);

// The same property via literal matrix arithmetic:
// A^2 = k*I + lambda*A + mu*(J - I - A) and A*J = k*J. Kept as an
// independent route so the two can be cross-checked.
bool srg_identity_holds(const IntMatrix& A, const SrgParams& p);

SrgParams complement_srg_params(const SrgParams& p);

// J - I - A; when A is strongly regular the result is verified to carry the
// complement parameters.
IntMatrix complement_graph(const IntMatrix& A);

// Tournament input required (A + A^T = J - I, throws otherwise); doubly
// regular iff S*S^T = n*I - J for S = 2A + I - J.
std::optional<TournamentParams> is_doubly_regular_tournament(const IntMatrix& A);

enum class ConferenceType { SymmetricType, SkewType, None };

std::string to_string(ConferenceType t);

// Zero diagonal, +-1 off-diagonal, C*C^T = (n-1)*I; the type reports whether
// the normalized core of order n-1 is symmetric or skew.
ConferenceType is_conference_matrix(const IntMatrix& C);

// Deterministic normalization: negate row i when C(i,0) = -1, then column j
// when C(0,j) = -1, giving an all-+1 first row and column off the diagonal.
IntMatrix normalize_conference(const IntMatrix& C);

// Delete the border of the normalized matrix and map -1 -> 1, 1 -> 0. For
// order 2 mod 4 the result is a Paley-type strongly regular graph, for order
// 0 mod 4 a doubly regular tournament (both verified).
IntMatrix conference_core_graph(const IntMatrix& C);

// Bordered Seidel matrix J - I - 2A of a Paley-type graph; a symmetric-type
// conference matrix of order n+1.
IntMatrix conference_from_srg(const IntMatrix& A);

// Bordered 2A + I - J of a doubly regular tournament; a skew-type conference
// matrix of order n+1.
IntMatrix conference_from_tournament(const IntMatrix& A);

// Quadratic-residue graph on GF(q), q = 1 mod 4: x ~ y iff x - y is a
// nonzero square.
IntMatrix paley_graph(long long q);

// Quadratic-residue tournament on GF(q), q = 3 mod 4: arc x -> y iff y - x
// is a nonzero square.
IntMatrix paley_tournament(long long q);

// Pseudo-Latin-square graph on GF(q)^2 from the orthogonal array with rows,
// columns and d-2 linear Latin squares L_a(x,y) = a*x + y; the slopes a are
// the d-2 smallest nonzero field indices. Parameters
// (q^2, d(q-1), d^2 - 3d + q, d(d-1)), verified.
IntMatrix latin_square_graph(long long q, int d);

}  // namespace adesign
