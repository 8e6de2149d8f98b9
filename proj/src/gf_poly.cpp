#include "secant/gf_poly.hpp"

#include <limits>
#include <random>
#include <string>

#include "secant/error.hpp"

namespace secant {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t k = 3; k * k <= n; k += 2) {
        if (n % k == 0)
            return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t modulus)
    : p_(modulus)
{
    if (modulus >= (1u << 31) || !is_prime(modulus))
        throw Error(ErrorCode::NotPrime, std::to_string(modulus) + " is not a prime below 2^31");
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept
{
    std::uint32_t result = 1 % p_;
    std::uint32_t base = a % p_;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const
{
    if (a % p_ == 0)
        throw Error(ErrorCode::InvalidArgument, "zero has no inverse");
    return pow(a, p_ - 2);
}

std::uint32_t PrimeField::reduce(std::int64_t v) const noexcept
{
    const std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
}

namespace monomial_index {

Exponents exponents(int degree, std::size_t i)
{
    std::size_t rest = 0;
    while ((rest + 1) * (rest + 2) / 2 <= i)
        ++rest;
    const std::size_t c = i - rest * (rest + 1) / 2;
    return {degree - static_cast<int>(rest), static_cast<int>(rest - c), static_cast<int>(c)};
}

std::vector<Exponents> all(int degree)
{
    std::vector<Exponents> out;
    out.reserve(count(degree));
    for (int a = degree; a >= 0; --a) {
        for (int b = degree - a; b >= 0; --b)
            out.push_back({a, b, degree - a - b});
    }
    return out;
}

}  // namespace monomial_index

namespace {

void check_degree(int degree)
{
    if (degree < 0)
        throw Error(ErrorCode::InvalidArgument, "form degree must be non-negative");
    if (degree > kMaxFormDegree)
        throw Error(ErrorCode::DegreeOverflow,
                    "degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxFormDegree));
}

void check_same_field(const Form& f, const Form& g)
{
    if (f.field() != g.field())
        throw Error(ErrorCode::InvalidArgument, "forms live over different fields");
}

}  // namespace

Form::Form(const PrimeField& field, int degree)
    : field_(field)
    , degree_(degree)
{
    check_degree(degree);
    coeffs_.assign(monomial_index::count(degree), 0);
}

Form::Form(const PrimeField& field, int degree, std::vector<std::uint32_t> coeffs)
    : field_(field)
    , degree_(degree)
    , coeffs_(std::move(coeffs))
{
    check_degree(degree);
    if (coeffs_.size() != monomial_index::count(degree))
        throw Error(ErrorCode::InvalidArgument, "coefficient vector length does not match degree");
    for (auto c : coeffs_) {
        if (c >= field_.modulus())
            throw Error(ErrorCode::InvalidArgument, "coefficient not reduced modulo p");
    }
}

Form Form::constant(const PrimeField& field, std::uint32_t value)
{
    return Form(field, 0, {value % field.modulus()});
}

Form Form::monomial(const PrimeField& field, const Exponents& m, std::uint32_t coeff)
{
    Form f(field, m.degree());
    f.coeffs_[monomial_index::index(m)] = coeff % field.modulus();
    return f;
}

bool Form::is_zero() const noexcept
{
    for (auto c : coeffs_) {
        if (c)
            return false;
    }
    return true;
}

Form add(const Form& f, const Form& g)
{
    check_same_field(f, g);
    if (f.degree() != g.degree())
        throw Error(ErrorCode::InvalidArgument, "cannot add forms of different degrees");
    std::vector<std::uint32_t> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.field().add(out[i], g.coeffs()[i]);
    return Form(f.field(), f.degree(), std::move(out));
}

Form subtract(const Form& f, const Form& g)
{
    check_same_field(f, g);
    if (f.degree() != g.degree())
        throw Error(ErrorCode::InvalidArgument, "cannot subtract forms of different degrees");
    std::vector<std::uint32_t> out(f.coeffs().begin(), f.coeffs().end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = f.field().sub(out[i], g.coeffs()[i]);
    return Form(f.field(), f.degree(), std::move(out));
}

Form multiply(const Form& f, const Form& g)
{
    check_same_field(f, g);
    const int degree = f.degree() + g.degree();
    check_degree(degree);

    const PrimeField& k = f.field();
    const auto fm = monomial_index::all(f.degree());
    const auto gm = monomial_index::all(g.degree());
    const std::uint64_t p = k.modulus();

    std::vector<std::uint64_t> acc(monomial_index::count(degree), 0);
    for (std::size_t i = 0; i < fm.size(); ++i) {
        const std::uint64_t a = f.coeffs()[i];
        if (!a)
            continue;
        for (std::size_t j = 0; j < gm.size(); ++j) {
            const std::uint64_t b = g.coeffs()[j];
            if (!b)
                continue;
            const Exponents m{fm[i].x0 + gm[j].x0, fm[i].x1 + gm[j].x1, fm[i].x2 + gm[j].x2};
            std::uint64_t& slot = acc[monomial_index::index(m)];
            slot = (slot + a * b) % p;
        }
    }
    std::vector<std::uint32_t> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i)
        out[i] = static_cast<std::uint32_t>(acc[i]);
    return Form(k, degree, std::move(out));
}

Form random_form(int degree, std::uint64_t seed, const PrimeField& field)
{
    if (degree < 1)
        throw Error(ErrorCode::InvalidArgument, "random forms must have degree at least 1");
    check_degree(degree);

    std::mt19937_64 engine(seed);
    const std::uint64_t p = field.modulus();
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / p * p;

    std::vector<std::uint32_t> coeffs(monomial_index::count(degree));
    for (auto& c : coeffs) {
        std::uint64_t word;
        do {
            word = engine();
        } while (word >= limit);
        c = static_cast<std::uint32_t>(word % p);
    }
    return Form(field, degree, std::move(coeffs));
}

std::vector<Form> cofactor_products(std::span<const Form> factors)
{
    const std::size_t r = factors.size();
    if (r < 2)
        throw Error(ErrorCode::InvalidArgument, "cofactors need at least two factors");
    const PrimeField& k = factors.front().field();

    // prefix[i] = F_0 ... F_{i-1}, suffix[i] = F_i ... F_{r-1}
    std::vector<Form> prefix;
    prefix.reserve(r);
    prefix.push_back(Form::constant(k, 1));
    for (std::size_t i = 0; i + 1 < r; ++i)
        prefix.push_back(prefix.back() * factors[i]);

    std::vector<Form> out(prefix);
    Form suffix = Form::constant(k, 1);
    for (std::size_t i = r; i-- > 0;) {
        out[i] = prefix[i] * suffix;
        if (i > 0)
            suffix = factors[i] * suffix;
    }
    return out;
}

std::vector<Form> monomial_multiples(const Form& f, int target_degree)
{
    std::vector<Form> out;
    const int shift = target_degree - f.degree();
    if (shift < 0)
        return out;
    check_degree(target_degree);

    const auto fm = monomial_index::all(f.degree());
    const auto shifts = monomial_index::all(shift);
    out.reserve(shifts.size());
    for (const auto& m : shifts) {
        std::vector<std::uint32_t> coeffs(monomial_index::count(target_degree), 0);
        for (std::size_t i = 0; i < fm.size(); ++i)
            coeffs[monomial_index::index({fm[i].x0 + m.x0, fm[i].x1 + m.x1, fm[i].x2 + m.x2})] = f.coeffs()[i];
        out.emplace_back(f.field(), target_degree, std::move(coeffs));
    }
    return out;
}

}  // namespace secant
