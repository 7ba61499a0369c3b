#pragma once

#include <optional>
#include <vector>

namespace adesign {

// Hard cap on |GF(q)| and |G| so exhaustive verifications stay desk-scale.
inline constexpr long long kOrderCap = 1LL << 20;

bool is_prime(long long n);

struct PrimePower {
    long long p;
    int m;
};

// p^m decomposition of q when q is a prime power, nullopt otherwise.
std::optional<PrimePower> prime_power(long long q);

// GF(q), q = p^m an odd prime power, q <= 2^20. Elements are canonical
// indices 0..q-1: the coefficient vector of the residue polynomial read as a
// base-p integer, with 0 as the zero element. The modulus is the monic
// primitive polynomial of degree m whose non-leading coefficient vector has
// the smallest base-p value, so element indices reproduce across runs and
// languages. For m = 1 the modulus is x and the generator is the smallest
// primitive root of p.
class FiniteField {
public:
    static FiniteField make(long long p, int m);
    static FiniteField of_order(long long q);

    long long characteristic() const { return p_; }
    int degree() const { return m_; }
    long long order() const { return q_; }

    // Monic modulus polynomial, coefficients c0..cm (cm = 1). For m = 1 this
    // is x, i.e. {0, 1}.
    const std::vector<long long>& modulus() const { return modulus_; }

    // Primitive element as a canonical index.
    long long generator() const { return gamma_; }

    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const;
    long long neg(long long a) const;
    long long mul(long long a, long long b) const;
    long long inv(long long a) const;
    long long pow(long long a, long long e) const;

private:
    FiniteField() = default;
    void check_element(long long a) const;

    long long p_ = 0, q_ = 0, gamma_ = 0;
    int m_ = 0;
    std::vector<long long> modulus_;
};

// Cyclotomic class D_i = gamma^i * <gamma^e> for e | q-1, 0 <= i < e.
// Sorted element indices; the e classes partition the nonzero elements.
std::vector<long long> cyclotomic_class(const FiniteField& F, long long e, long long i);

// Cyclotomic number of order e: #{x in D_i : x + 1 in D_j}.
long long cyclotomic_number(const FiniteField& F, long long e, long long i, long long j);

// Direct product of cyclic groups Z_{n_1} x ... x Z_{n_r}, written
// additively. Elements are residue tuples, or equivalently row-major indices
// 0..v-1 (first factor most significant); the identity has index 0.
class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<long long> factors);

    long long order() const { return order_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    const std::vector<long long>& factors() const { return factors_; }

    std::vector<long long> tuple_of(long long index) const;
    long long index_of(const std::vector<long long>& tuple) const;

    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const;
    long long neg(long long a) const;

    bool operator==(const AbelianGroup& o) const { return factors_ == o.factors_; }

private:
    void check_element(long long a) const;

    std::vector<long long> factors_;
    long long order_ = 1;
};

// All group elements as tuples, in index (lexicographic) order.
std::vector<std::vector<long long>> group_elements(const AbelianGroup& G);

// Additive group of GF(q) as Z_p^m; group indices coincide with field
// element indices.
AbelianGroup field_additive_group(const FiniteField& F);

// Additive group of GF(q) x GF(q) as Z_p^{2m}; the pair (a, b) of field
// indices has group index a*q + b.
AbelianGroup field_pair_group(const FiniteField& F);

}  // namespace adesign
