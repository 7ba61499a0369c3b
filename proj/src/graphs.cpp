#include "adesign/graphs.hpp"

#include <atomic>
#include <stdexcept>

#include "adesign/algebra.hpp"
#include "adesign/bitset.hpp"

namespace adesign {

namespace {

void check_adjacency(const IntMatrix& A) {
    if (!A.is_square()) throw std::invalid_argument("adjacency matrix must be square");
    if (!A.is_zero_one()) throw std::invalid_argument("adjacency entries must be 0 or 1");
    if (!A.has_zero_diagonal()) throw std::invalid_argument("adjacency diagonal must be zero");
}

std::vector<Bitset> row_bitsets(const IntMatrix& A) {
    long long n = A.rows();
    std::vector<Bitset> rows(static_cast<std::size_t>(n), Bitset(static_cast<std::size_t>(n)));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (A(i, j)) rows[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    return rows;
}

}  // namespace

bool is_paley_type(const SrgParams& p) {
    return p.n >= 5 && p.n % 4 == 1 && p.k == (p.n - 1) / 2 && p.lambda == (p.n - 5) / 4 &&
           p.mu == (p.n - 1) / 4;
}

std::optional<SrgParams> is_srg(const IntMatrix& A) {
    check_adjacency(A);
    if (!A.is_symmetric()) throw std::invalid_argument("adjacency matrix must be symmetric");
    long long n = A.rows();
    if (n < 4) return std::nullopt;
    long long k = A.row_sum(0);
    for (long long i = 1; i < n; ++i)
        if (A.row_sum(i) != k) return std::nullopt;
    if (k == 0 || k == n - 1) return std::nullopt;

    auto rows = row_bitsets(A);
    // lambda and mu fixed from the first adjacent / non-adjacent pair so the
    // result is independent of thread scheduling.
    long long lambda = -1, mu = -1;
    for (long long x = 0; x < n && (lambda == -1 || mu == -1); ++x)
        for (long long y = x + 1; y < n && (lambda == -1 || mu == -1); ++y) {
            long long c = static_cast<long long>(Bitset::and_count(
                rows[static_cast<std::size_t>(x)], rows[static_cast<std::size_t>(y)]));
            if (A(x, y) && lambda == -1) lambda = c;
            if (!A(x, y) && mu == -1) mu = c;
        }
    if (lambda == -1 || mu == -1) return std::nullopt;

    std::atomic<bool> ok{true};
#pragma omp parallel for schedule(dynamic, 4)
    for (long long x = 0; x < n - 1; ++x) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        for (long long y = x + 1; y < n; ++y) {
            long long c = static_cast<long long>(Bitset::and_count(
                rows[static_cast<std::size_t>(x)], rows[static_cast<std::size_t>(y)]));
            if (c != (A(x, y) ? lambda : mu)) {
                ok.store(false, std::memory_order_relaxed);
                break;
            }
        }
    }
    if (!ok) return std::nullopt;
    return SrgParams{n, k, lambda, mu};
}

bool srg_identity_holds(const IntMatrix& A, const SrgParams& p) {
    check_adjacency(A);
    long long n = A.rows();
    if (n != p.n) return false;
    for (long long i = 0; i < n; ++i)
        if (A.row_sum(i) != p.k) return false;  // A*J = k*J
    IntMatrix sq = A * A;
    IntMatrix J = IntMatrix::ones(n, n);
    IntMatrix I = IntMatrix::identity(n);
    IntMatrix rhs = I.scaled(p.k) + A.scaled(p.lambda) + (J - I - A).scaled(p.mu);
    return sq == rhs;
}

SrgParams complement_srg_params(const SrgParams& p) {
    return SrgParams{p.n, p.n - p.k - 1, p.n - 2 * p.k + p.mu - 2, p.n - 2 * p.k + p.lambda};
}

IntMatrix complement_graph(const IntMatrix& A) {
    check_adjacency(A);
    if (!A.is_symmetric()) throw std::invalid_argument("adjacency matrix must be symmetric");
    long long n = A.rows();
    IntMatrix C(n, n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (i != j) C(i, j) = 1 - A(i, j);
    auto params = is_srg(A);
    if (params) {
        auto got = is_srg(C);
        if (!got || !(*got == complement_srg_params(*params)))
            throw std::logic_error("complement of a strongly regular graph lost its parameters");
    }
    return C;
}

std::optional<TournamentParams> is_doubly_regular_tournament(const IntMatrix& A) {
    check_adjacency(A);
    long long n = A.rows();
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            if (i == j) continue;
            if (A(i, j) + A(j, i) != 1) throw std::invalid_argument("not a tournament");
        }
    IntMatrix J = IntMatrix::ones(n, n);
    IntMatrix I = IntMatrix::identity(n);
    IntMatrix S = A.scaled(2) + I - J;
    if (!(S * S.transpose() == I.scaled(n) - J)) return std::nullopt;
    return TournamentParams{n, (n - 3) / 4};
}

std::string to_string(ConferenceType t) {
    switch (t) {
        case ConferenceType::SymmetricType: return "symmetric-type";
        case ConferenceType::SkewType: return "skew-type";
        case ConferenceType::None: return "none";
    }
    return "?";
}

IntMatrix normalize_conference(const IntMatrix& C) {
    IntMatrix N = C;
    long long n = N.rows();
    for (long long i = 0; i < n; ++i)
        if (N(i, 0) == -1)
            for (long long j = 0; j < n; ++j) N(i, j) = -N(i, j);
    for (long long j = 0; j < n; ++j)
        if (N(0, j) == -1)
            for (long long i = 0; i < n; ++i) N(i, j) = -N(i, j);
    return N;
}

ConferenceType is_conference_matrix(const IntMatrix& C) {
    if (!C.is_square()) throw std::invalid_argument("conference matrix must be square");
    long long n = C.rows();
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long x = C(i, j);
            if (x < -1 || x > 1) throw std::invalid_argument("entries must be -1, 0 or 1");
        }
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            if (i == j && C(i, j) != 0) return ConferenceType::None;
            if (i != j && C(i, j) == 0) return ConferenceType::None;
        }
    if (!(C * C.transpose() == IntMatrix::identity(n).scaled(n - 1))) return ConferenceType::None;

    IntMatrix N = normalize_conference(C);
    bool sym = true, skew = true;
    for (long long i = 1; i < n; ++i)
        for (long long j = 1; j < n; ++j) {
            if (i == j) continue;
            if (N(i, j) != N(j, i)) sym = false;
            if (N(i, j) != -N(j, i)) skew = false;
        }
    if (sym) return ConferenceType::SymmetricType;
    if (skew) return ConferenceType::SkewType;
    return ConferenceType::None;
}

IntMatrix conference_core_graph(const IntMatrix& C) {
    ConferenceType type = is_conference_matrix(C);
    if (type == ConferenceType::None) throw std::invalid_argument("not a conference matrix");
    IntMatrix N = normalize_conference(C);
    long long n = N.rows();
    IntMatrix A(n - 1, n - 1);
    for (long long i = 1; i < n; ++i)
        for (long long j = 1; j < n; ++j) A(i - 1, j - 1) = (N(i, j) == -1) ? 1 : 0;
    if (type == ConferenceType::SymmetricType) {
        auto p = is_srg(A);
        if (!p || !is_paley_type(*p))
            throw std::logic_error("symmetric conference core is not a Paley-type graph");
    } else {
        if (!is_doubly_regular_tournament(A))
            throw std::logic_error("skew conference core is not a doubly regular tournament");
    }
    return A;
}

IntMatrix conference_from_srg(const IntMatrix& A) {
    auto p = is_srg(A);
    if (!p || !is_paley_type(*p))
        throw std::invalid_argument("a Paley-type strongly regular graph is required");
    long long n = A.rows();
    IntMatrix C(n + 1, n + 1);
    for (long long j = 1; j <= n; ++j) {
        C(0, j) = 1;
        C(j, 0) = 1;
    }
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (i != j) C(i + 1, j + 1) = 1 - 2 * A(i, j);  // Seidel matrix J - I - 2A
    return C;
}

IntMatrix conference_from_tournament(const IntMatrix& A) {
    if (!is_doubly_regular_tournament(A))
        throw std::invalid_argument("a doubly regular tournament is required");
    long long n = A.rows();
    IntMatrix C(n + 1, n + 1);
    for (long long j = 1; j <= n; ++j) {
        C(0, j) = 1;
        C(j, 0) = -1;
    }
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j)
            if (i != j) C(i + 1, j + 1) = 2 * A(i, j) - 1;  // 2A + I - J
    return C;
}

namespace {

// Membership flags of the nonzero squares of GF(q).
std::vector<char> square_flags(const FiniteField& F) {
    std::vector<char> sq(static_cast<std::size_t>(F.order()), 0);
    for (long long s : cyclotomic_class(F, 2, 0)) sq[static_cast<std::size_t>(s)] = 1;
    return sq;
}

}  // namespace

IntMatrix paley_graph(long long q) {
    if (q % 4 != 1) throw std::invalid_argument("Paley graphs need q = 1 mod 4");
    FiniteField F = FiniteField::of_order(q);
    auto sq = square_flags(F);
    IntMatrix A(q, q);
    for (long long x = 0; x < q; ++x)
        for (long long y = 0; y < q; ++y)
            if (x != y && sq[static_cast<std::size_t>(F.sub(x, y))]) A(x, y) = 1;
    return A;
}

IntMatrix paley_tournament(long long q) {
    if (q % 4 != 3) throw std::invalid_argument("Paley tournaments need q = 3 mod 4");
    FiniteField F = FiniteField::of_order(q);
    auto sq = square_flags(F);
    IntMatrix A(q, q);
    for (long long x = 0; x < q; ++x)
        for (long long y = 0; y < q; ++y)
            if (x != y && sq[static_cast<std::size_t>(F.sub(y, x))]) A(x, y) = 1;
    return A;
}

IntMatrix latin_square_graph(long long q, int d) {
    FiniteField F = FiniteField::of_order(q);
    if (F.order() % 2 == 0) throw std::invalid_argument("odd prime power required");
    if (d < 2 || d > q) throw std::invalid_argument("coordinate count out of range");
    long long n = q * q;
    // Orthogonal-array coordinates of the vertex (x, y): row, column, and
    // d-2 linear Latin squares a*x + y with the smallest nonzero slopes.
    IntMatrix A(n, n);
    std::vector<long long> slopes;
    for (long long a = 1; slopes.size() + 2 < static_cast<std::size_t>(d); ++a)
        slopes.push_back(a);
    auto coords = [&](long long x, long long y) {
        std::vector<long long> c{x, y};
        for (long long a : slopes) c.push_back(F.add(F.mul(a, x), y));
        return c;
    };
    std::vector<std::vector<long long>> cs(static_cast<std::size_t>(n));
    for (long long x = 0; x < q; ++x)
        for (long long y = 0; y < q; ++y) cs[static_cast<std::size_t>(x * q + y)] = coords(x, y);
    for (long long u = 0; u < n; ++u)
        for (long long w = u + 1; w < n; ++w) {
            int agree = 0;
            for (int c = 0; c < d; ++c)
                if (cs[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)] ==
                    cs[static_cast<std::size_t>(w)][static_cast<std::size_t>(c)])
                    ++agree;
            if (agree == 1) {
                A(u, w) = 1;
                A(w, u) = 1;
            }
        }
    auto p = is_srg(A);
    SrgParams want{n, d * (q - 1), static_cast<long long>(d) * d - 3 * d + q,
                   static_cast<long long>(d) * (d - 1)};
    if (!p || !(*p == want))
        throw std::logic_error("Latin-square graph failed its parameter check");
    return A;
}

}  // namespace adesign
