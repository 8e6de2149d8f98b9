#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

// Dense homogeneous polynomials in x0, x1, x2 over a prime field.

namespace secant {

inline constexpr std::uint32_t kDefaultPrime = 1'000'003;

/// Z/pZ for a prime p < 2^31. Elements are plain integers in [0, p).
class PrimeField {
public:
    /// Throws Error(NotPrime) unless `modulus` is a prime below 2^31.
    explicit PrimeField(std::uint32_t modulus = kDefaultPrime);

    std::uint32_t modulus() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept
    {
        const std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept
    {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
    /// Throws Error(InvalidArgument) for a == 0.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t v) const noexcept;

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Largest degree a Form may have.
inline constexpr int kMaxFormDegree = 200;

/// Exponent triple (a, b, c) of x0^a x1^b x2^c.
struct Exponents {
    int x0 = 0;
    int x1 = 0;
    int x2 = 0;

    int degree() const noexcept { return x0 + x1 + x2; }
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded-lex order inside a fixed degree: larger x0 first, then larger x1.
/// For degree 2: x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
namespace monomial_index {

inline std::size_t count(int degree) noexcept
{
    return degree < 0 ? 0 : static_cast<std::size_t>(degree + 1) * static_cast<std::size_t>(degree + 2) / 2;
}

inline std::size_t index(const Exponents& m) noexcept
{
    const std::size_t rest = static_cast<std::size_t>(m.x1 + m.x2);
    // monomials with a larger x0 exponent: C(rest + 1, 2)
    return rest * (rest + 1) / 2 + static_cast<std::size_t>(m.x2);
}

Exponents exponents(int degree, std::size_t i);

/// All monomials of `degree` in index order.
std::vector<Exponents> all(int degree);

}  // namespace monomial_index

/// An element of R_d = k[x0, x1, x2]_d, coefficients indexed by monomial_index.
class Form {
public:
    /// The zero form of the given degree.
    Form(const PrimeField& field, int degree);
    /// Throws Error(InvalidArgument) on a length mismatch or unreduced coefficient.
    Form(const PrimeField& field, int degree, std::vector<std::uint32_t> coeffs);

    static Form constant(const PrimeField& field, std::uint32_t value);
    static Form monomial(const PrimeField& field, const Exponents& m, std::uint32_t coeff = 1);

    int degree() const noexcept { return degree_; }
    const PrimeField& field() const noexcept { return field_; }
    std::span<const std::uint32_t> coeffs() const noexcept { return coeffs_; }
    std::uint32_t coeff(const Exponents& m) const { return coeffs_.at(monomial_index::index(m)); }
    bool is_zero() const noexcept;

    friend bool operator==(const Form&, const Form&) = default;

private:
    PrimeField field_;
    int degree_;
    std::vector<std::uint32_t> coeffs_;
};

/// Sum of two forms of equal degree.
Form add(const Form& f, const Form& g);
Form subtract(const Form& f, const Form& g);

/// Exact product. Throws Error(DegreeOverflow) past kMaxFormDegree.
Form multiply(const Form& f, const Form& g);
inline Form operator*(const Form& f, const Form& g) { return multiply(f, g); }

/// Uniform random form: coefficients in monomial order, each drawn from
/// std::mt19937_64 seeded with `seed`, taking 64-bit words modulo p and
/// rejecting words at or above the largest multiple of p.
/// Throws Error(InvalidArgument) for degree < 1.
Form random_form(int degree, std::uint64_t seed, const PrimeField& field);

/// i-th entry is the product of every factor except factors[i].
/// Throws Error(InvalidArgument) for fewer than two factors.
std::vector<Form> cofactor_products(std::span<const Form> factors);

/// m * f for every monomial m of degree target_degree - deg f, in monomial
/// order. Empty when target_degree < deg f.
std::vector<Form> monomial_multiples(const Form& f, int target_degree);

}  // namespace secant
