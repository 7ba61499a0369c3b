#include "adesign/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace adesign {

namespace {

std::vector<long long> prime_factors(long long n) {
    std::vector<long long> fs;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Polynomial arithmetic over GF(p), coefficient vectors c0..c_{deg},
// trailing zeros trimmed.
using Poly = std::vector<long long>;

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& mod, long long p) {
    std::vector<long long> prod(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    // mod is monic of degree m
    std::size_t m = mod.size() - 1;
    for (std::size_t d = prod.size(); d-- > m;) {
        long long c = prod[d];
        if (c == 0) continue;
        prod[d] = 0;
        for (std::size_t j = 0; j < m; ++j) {
            prod[d - m + j] = ((prod[d - m + j] - c * mod[j]) % p + p) % p;
        }
    }
    prod.resize(m);
    return prod;
}

bool poly_is_one(const Poly& a) {
    if (a.empty() || a[0] != 1) return false;
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

Poly poly_pow_mod(Poly base, long long e, const Poly& mod, long long p) {
    Poly r(mod.size() - 1, 0);
    r[0] = 1;
    while (e > 0) {
        if (e & 1) r = poly_mul_mod(r, base, mod, p);
        base = poly_mul_mod(base, base, mod, p);
        e >>= 1;
    }
    return r;
}

// x has multiplicative order q-1 in GF(p)[x]/(f). This single check
// certifies both that f is irreducible and that x is primitive: a reducible
// modulus has strictly fewer than q-1 units.
bool x_is_primitive(const Poly& f, long long p, long long q) {
    if (f[0] == 0) return false;  // x not a unit
    Poly x(f.size() - 1, 0);
    if (x.size() < 2) return false;
    x[1] = 1;
    if (!poly_is_one(poly_pow_mod(x, q - 1, f, p))) return false;
    for (long long ell : prime_factors(q - 1))
        if (poly_is_one(poly_pow_mod(x, (q - 1) / ell, f, p))) return false;
    return true;
}

long long mod_pow(long long a, long long e, long long p) {
    long long r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

long long smallest_primitive_root(long long p) {
    auto fs = prime_factors(p - 1);
    for (long long g = 2; g < p; ++g) {
        bool ok = true;
        for (long long ell : fs)
            if (mod_pow(g, (p - 1) / ell, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

std::vector<long long> digits_of(long long x, long long p, int m) {
    std::vector<long long> d(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < m; ++i) {
        d[static_cast<std::size_t>(i)] = x % p;
        x /= p;
    }
    return d;
}

long long value_of(const std::vector<long long>& d, long long p) {
    long long x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * p + d[i];
    return x;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<PrimePower> prime_power(long long q) {
    if (q < 2) return std::nullopt;
    long long p = q;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    int m = 0;
    long long r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return std::nullopt;
    return PrimePower{p, m};
}

FiniteField FiniteField::make(long long p, int m) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (p == 2) throw std::invalid_argument("field characteristic must be odd");
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kOrderCap) throw std::invalid_argument("field order exceeds the desk-scale cap");
    }

    FiniteField F;
    F.p_ = p;
    F.m_ = m;
    F.q_ = q;
    if (m == 1) {
        F.modulus_ = {0, 1};  // x
        F.gamma_ = smallest_primitive_root(p);
        return F;
    }

    // Scan non-leading coefficient vectors in base-p order; the first
    // modulus making x primitive wins.
    for (long long code = 0; code < q; ++code) {
        Poly f = digits_of(code, p, m);
        f.push_back(1);  // monic
        if (x_is_primitive(f, p, q)) {
            F.modulus_ = f;
            F.gamma_ = p;  // the class of x: digits (0,1,0,...)
            return F;
        }
    }
    throw std::logic_error("no primitive polynomial found");
}

FiniteField FiniteField::of_order(long long q) {
    auto pp = prime_power(q);
    if (!pp) throw std::invalid_argument("field order must be a prime power");
    return make(pp->p, pp->m);
}

void FiniteField::check_element(long long a) const {
    if (a < 0 || a >= q_) throw std::invalid_argument("field element index out of range");
}

long long FiniteField::add(long long a, long long b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) return (a + b) % p_;
    long long r = 0, pw = 1;
    for (int i = 0; i < m_; ++i) {
        r += (a % p_ + b % p_) % p_ * pw;
        a /= p_;
        b /= p_;
        pw *= p_;
    }
    return r;
}

long long FiniteField::neg(long long a) const {
    check_element(a);
    if (m_ == 1) return (p_ - a) % p_;
    long long r = 0, pw = 1;
    for (int i = 0; i < m_; ++i) {
        r += (p_ - a % p_) % p_ * pw;
        a /= p_;
        pw *= p_;
    }
    return r;
}

long long FiniteField::sub(long long a, long long b) const { return add(a, neg(b)); }

long long FiniteField::mul(long long a, long long b) const {
    check_element(a);
    check_element(b);
    if (m_ == 1) return a * b % p_;
    Poly pa = digits_of(a, p_, m_);
    Poly pb = digits_of(b, p_, m_);
    return value_of(poly_mul_mod(pa, pb, modulus_, p_), p_);
}

long long FiniteField::pow(long long a, long long e) const {
    check_element(a);
    if (e < 0) throw std::invalid_argument("negative exponent");
    long long r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

long long FiniteField::inv(long long a) const {
    check_element(a);
    if (a == 0) throw std::invalid_argument("zero has no inverse");
    return pow(a, q_ - 2);
}

std::vector<long long> cyclotomic_class(const FiniteField& F, long long e, long long i) {
    long long q = F.order();
    if (e < 1 || (q - 1) % e != 0)
        throw std::invalid_argument("class order must divide q - 1");
    if (i < 0 || i >= e) throw std::invalid_argument("class index out of range");
    long long f = (q - 1) / e;
    std::vector<long long> cls;
    cls.reserve(static_cast<std::size_t>(f));
    long long g_e = F.pow(F.generator(), e);
    long long x = F.pow(F.generator(), i);
    for (long long j = 0; j < f; ++j) {
        cls.push_back(x);
        x = F.mul(x, g_e);
    }
    std::sort(cls.begin(), cls.end());
    return cls;
}

long long cyclotomic_number(const FiniteField& F, long long e, long long i, long long j) {
    long long q = F.order();
    if (e < 1 || (q - 1) % e != 0)
        throw std::invalid_argument("class order must divide q - 1");
    if (i < 0 || i >= e || j < 0 || j >= e)
        throw std::invalid_argument("class index out of range");
    // Discrete-log table restricted to class membership: cls[x] = t mod e
    // for x = gamma^t.
    std::vector<long long> cls(static_cast<std::size_t>(q), -1);
    long long x = 1;
    for (long long t = 0; t < q - 1; ++t) {
        cls[static_cast<std::size_t>(x)] = t % e;
        x = F.mul(x, F.generator());
    }
    long long one = 1;
    long long count = 0;
    for (long long y = 1; y < q; ++y) {
        if (cls[static_cast<std::size_t>(y)] != i) continue;
        long long y1 = F.add(y, one);
        if (y1 != 0 && cls[static_cast<std::size_t>(y1)] == j) ++count;
    }
    return count;
}

AbelianGroup::AbelianGroup(std::vector<long long> factors) : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
    for (long long n : factors_) {
        if (n < 2) throw std::invalid_argument("cyclic factors must have order >= 2");
        order_ *= n;
        if (order_ > kOrderCap) throw std::invalid_argument("group order exceeds the desk-scale cap");
    }
}

void AbelianGroup::check_element(long long a) const {
    if (a < 0 || a >= order_) throw std::invalid_argument("group element index out of range");
}

std::vector<long long> AbelianGroup::tuple_of(long long index) const {
    check_element(index);
    std::vector<long long> t(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        t[i] = index % factors_[i];
        index /= factors_[i];
    }
    return t;
}

long long AbelianGroup::index_of(const std::vector<long long>& tuple) const {
    if (tuple.size() != factors_.size())
        throw std::invalid_argument("tuple rank does not match the group");
    long long idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (tuple[i] < 0 || tuple[i] >= factors_[i])
            throw std::invalid_argument("tuple residue out of range");
        idx = idx * factors_[i] + tuple[i];
    }
    return idx;
}

long long AbelianGroup::add(long long a, long long b) const {
    check_element(a);
    check_element(b);
    long long idx = 0, mul = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        long long n = factors_[i];
        idx += (a % n + b % n) % n * mul;
        a /= n;
        b /= n;
        mul *= n;
    }
    return idx;
}

long long AbelianGroup::neg(long long a) const {
    check_element(a);
    long long idx = 0, mul = 1;
    for (std::size_t i = factors_.size(); i-- > 0;) {
        long long n = factors_[i];
        idx += (n - a % n) % n * mul;
        a /= n;
        mul *= n;
    }
    return idx;
}

long long AbelianGroup::sub(long long a, long long b) const { return add(a, neg(b)); }

std::vector<std::vector<long long>> group_elements(const AbelianGroup& G) {
    std::vector<std::vector<long long>> out;
    out.reserve(static_cast<std::size_t>(G.order()));
    for (long long i = 0; i < G.order(); ++i) out.push_back(G.tuple_of(i));
    return out;
}

AbelianGroup field_additive_group(const FiniteField& F) {
    return AbelianGroup(std::vector<long long>(static_cast<std::size_t>(F.degree()),
                                               F.characteristic()));
}

AbelianGroup field_pair_group(const FiniteField& F) {
    return AbelianGroup(std::vector<long long>(static_cast<std::size_t>(2 * F.degree()),
                                               F.characteristic()));
}

}  // namespace adesign
