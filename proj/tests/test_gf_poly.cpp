#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "secant/error.hpp"
#include "secant/gf_poly.hpp"
#include "secant/matrix.hpp"

using secant::Exponents;
using secant::Form;
using secant::Matrix;
using secant::PrimeField;

namespace mi = secant::monomial_index;

namespace {

const PrimeField kField{};

// Dense evaluation at a point, compared against the product of evaluations.
std::uint32_t evaluate(const Form& f, std::uint32_t x, std::uint32_t y, std::uint32_t z)
{
    const auto& k = f.field();
    std::uint32_t total = 0;
    const auto monos = mi::all(f.degree());
    for (std::size_t i = 0; i < monos.size(); ++i) {
        const auto& m = monos[i];
        const std::uint32_t term = k.mul(k.mul(k.pow(x, m.x0), k.pow(y, m.x1)), k.pow(z, m.x2));
        total = k.add(total, k.mul(f.coeffs()[i], term));
    }
    return total;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, const PrimeField& k)
{
    std::mt19937_64 gen(seed);
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<std::uint32_t>(gen() % k.modulus());
    return m;
}

}  // namespace

TEST_CASE("field arithmetic")
{
    CHECK(kField.modulus() == 1'000'003);
    CHECK(secant::is_prime(1'000'003));
    CHECK_FALSE(secant::is_prime(1'000'001));
    CHECK_THROWS_AS(PrimeField(12), secant::Error);
    CHECK_THROWS_AS(PrimeField(1), secant::Error);

    const PrimeField small(7);
    for (std::uint32_t a = 1; a < 7; ++a) {
        CHECK(small.mul(a, small.inv(a)) == 1);
        CHECK(small.pow(a, 6) == 1);
        CHECK(small.add(a, small.neg(a)) == 0);
    }
    CHECK(small.reduce(-1) == 6);
    CHECK(small.reduce(-15) == 6);
    CHECK(small.sub(2, 5) == 4);
    CHECK_THROWS_AS(small.inv(0), secant::Error);
    CHECK(kField.mul(1'000'002, 1'000'002) == 1);
}

TEST_CASE("monomial index round trip")
{
    for (int degree = 0; degree <= 30; ++degree) {
        const auto monos = mi::all(degree);
        REQUIRE(monos.size() == mi::count(degree));
        std::set<std::size_t> seen;
        for (std::size_t i = 0; i < monos.size(); ++i) {
            CHECK(monos[i].degree() == degree);
            CHECK(mi::index(monos[i]) == i);
            CHECK(mi::exponents(degree, i) == monos[i]);
            seen.insert(mi::index(monos[i]));
        }
        CHECK(seen.size() == monos.size());
    }
    CHECK(mi::all(0).front() == Exponents{0, 0, 0});
    CHECK(mi::all(2).front() == Exponents{2, 0, 0});
    CHECK(mi::all(2).back() == Exponents{0, 0, 2});
}

TEST_CASE("multiplication")
{
    const Form f = secant::random_form(3, 11, kField);
    const Form g = secant::random_form(4, 12, kField);
    const Form h = secant::random_form(2, 13, kField);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f * g).degree() == 7);
    CHECK(secant::add(f, f) == f * Form::constant(kField, 2));
    CHECK(secant::subtract(f, f).is_zero());

    const Form x = Form::monomial(kField, {1, 0, 0});
    const Form y = Form::monomial(kField, {0, 1, 0});
    const Form xy = x * y;
    CHECK(xy.coeff({1, 1, 0}) == 1);
    CHECK(xy.coeff({2, 0, 0}) == 0);

    for (std::uint32_t t = 1; t <= 5; ++t) {
        const std::uint32_t px = 3 * t + 1, py = 7 * t + 5, pz = 11 * t + 2;
        CHECK(evaluate(f * g, px, py, pz) == kField.mul(evaluate(f, px, py, pz), evaluate(g, px, py, pz)));
    }
    CHECK_THROWS_AS(secant::add(f, g), secant::Error);
    CHECK_THROWS_AS(f * secant::random_form(1, 1, PrimeField(7)), secant::Error);
}

TEST_CASE("random forms are deterministic and reduced")
{
    const Form a = secant::random_form(5, 42, kField);
    const Form b = secant::random_form(5, 42, kField);
    const Form c = secant::random_form(5, 43, kField);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    for (auto v : a.coeffs())
        CHECK(v < kField.modulus());
    CHECK_THROWS_AS(secant::random_form(0, 1, kField), secant::Error);
    CHECK_THROWS_AS(secant::random_form(secant::kMaxFormDegree + 1, 1, kField), secant::Error);
}

TEST_CASE("cofactor products")
{
    std::vector<Form> factors;
    for (int i = 0; i < 5; ++i)
        factors.push_back(secant::random_form(1 + i % 3, 100 + i, kField));
    Form product = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        product = product * factors[i];

    const auto cof = secant::cofactor_products(factors);
    REQUIRE(cof.size() == factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        CHECK(factors[i] * cof[i] == product);
    CHECK_THROWS_AS(secant::cofactor_products(std::span<const Form>(factors.data(), 1)), secant::Error);
}

TEST_CASE("monomial multiples")
{
    const Form f = secant::random_form(2, 7, kField);
    const auto mult = secant::monomial_multiples(f, 5);
    CHECK(mult.size() == mi::count(3));
    for (const auto& m : mult)
        CHECK(m.degree() == 5);
    CHECK(secant::monomial_multiples(f, 1).empty());
    CHECK(secant::monomial_multiples(f, 2).size() == 1);
}

TEST_CASE("rank and row reduction")
{
    const PrimeField k(101);
    Matrix m(3, 3);
    m.at(0, 0) = 1; m.at(0, 1) = 2; m.at(0, 2) = 3;
    m.at(1, 0) = 2; m.at(1, 1) = 4; m.at(1, 2) = 6;
    m.at(2, 0) = 0; m.at(2, 1) = 1; m.at(2, 2) = 5;
    CHECK(secant::rank(m, k) == 2);

    Matrix r = m;
    const auto pivots = secant::row_reduce(r, k);
    CHECK(pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.at(0, 0) == 1);
    CHECK(r.at(0, 1) == 0);
    CHECK(r.at(1, 1) == 1);
    for (std::size_t j = 0; j < 3; ++j)
        CHECK(r.at(2, j) == 0);

    CHECK(secant::rank(Matrix(4, 6), kField) == 0);
    CHECK(secant::rank(random_matrix(20, 30, 5, kField), kField) == 20);
    CHECK(secant::rank(random_matrix(30, 20, 6, kField), kField) == 20);
}

TEST_CASE("kernel and intersection")
{
    const Matrix a = random_matrix(12, 30, 1, kField);
    const Matrix kernel = secant::right_kernel(a, kField);
    CHECK(kernel.rows() == 18);
    const Matrix zero = secant::multiply_transposed(a, kernel, kField);
    for (std::size_t i = 0; i < zero.rows(); ++i)
        for (std::size_t j = 0; j < zero.cols(); ++j)
            CHECK(zero.at(i, j) == 0);

    // Two row spaces sharing exactly 4 random directions.
    const Matrix shared = random_matrix(4, 30, 2, kField);
    const Matrix u = Matrix::stack(shared, random_matrix(6, 30, 3, kField));
    const Matrix w = Matrix::stack(shared, random_matrix(7, 30, 4, kField));
    CHECK(secant::row_space_intersection_dim(u, w, kField) == 4);
    CHECK(secant::row_space_intersection_dim(u, w, kField) ==
          secant::rank(u, kField) + secant::rank(w, kField) - secant::rank(Matrix::stack(u, w), kField));
    CHECK_THROWS_AS(Matrix::stack(u, random_matrix(1, 29, 9, kField)), secant::Error);
}
