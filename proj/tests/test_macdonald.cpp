#include <doctest.h>

#include "hhl/error.hpp"
#include "hhl/macdonald.hpp"

using namespace hhl;

namespace {

QTPolynomial q() { return QTPolynomial::monomial(1, 0); }
QTPolynomial t() { return QTPolynomial::monomial(0, 1); }
QTPolynomial one() { return QTPolynomial::constant(1); }

}  // namespace

TEST_CASE("two-cell expansions") {
    const auto row = macdonald_polynomial(Partition({2}), {2});
    CHECK(row.term_count() == 3);
    CHECK(*row.find(Composition({2, 0})) == one());
    CHECK(*row.find(Composition({0, 2})) == one());
    CHECK(*row.find(Composition({1, 1})) == one() + q());

    const auto column = macdonald_polynomial(Partition({1, 1}), {2});
    CHECK(*column.find(Composition({1, 1})) == one() + t());
    CHECK(symmetry_canonicalize(column).at(Partition({2})) == one());

    const auto cell = macdonald_polynomial(Partition({1}), {1});
    CHECK(cell.term_count() == 1);
    CHECK(*cell.find(Composition({1})) == one());
}

TEST_CASE("three-cell hook") {
    const auto canon = symmetry_canonicalize(macdonald_polynomial(Partition({2, 1}), {3}));
    CHECK(canon.at(Partition({3})) == one());
    CHECK(canon.at(Partition({2, 1})) == one() + q() + t());
    CHECK(canon.at(Partition({1, 1, 1})) == one() + QTPolynomial::constant(2) * (q() + t()) + q() * t());
}

TEST_CASE("specialized expansions") {
    const auto column = specialize_expansion(macdonald_polynomial(Partition({1, 1}), {2}), 2);
    CHECK(column.term_count() == 2);
    CHECK(column.find(Composition({1, 1})) == nullptr);

    const auto row = macdonald_polynomial(Partition({2}), {2});
    for (int l : {1, 2, 5}) {
        const auto special = specialize_expansion(row, l);
        for (const auto& [nu, c] : special.coefficients()) {
            CHECK(c.as_qt_polynomial() == *row.find(nu));
        }
    }

    QTExpansion h1 = macdonald_polynomial(Partition({1}), {2});
    const auto lhs = expansion_mul(specialize_expansion(h1, 1), specialize_expansion(h1, 1));
    const auto rhs = specialize_expansion(macdonald_polynomial(Partition({1, 1}), {2}), 1);
    CHECK(expansion_equal(lhs, rhs));
}

TEST_CASE("structural identities on every small shape") {
    for (int n = 1; n <= 4; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            CAPTURE(to_string(shape));
            const auto h = macdonald_polynomial(shape, {n});
            CHECK_NOTHROW(symmetry_canonicalize(h));
            std::vector<int> top(static_cast<std::size_t>(n), 0);
            top[0] = n;
            CHECK(*h.find(Composition(top)) == one());
            CHECK(check_unit_specialization(shape, {n}).mismatches.empty());
            CHECK(check_conjugation_symmetry(shape, {n}).mismatches.empty());
        }
    }
}

TEST_CASE("coefficients agree across alphabet sizes") {
    const Partition shape({2, 2});
    const auto small = macdonald_polynomial(shape, {3});
    const auto large = macdonald_polynomial(shape, {5});
    for (const auto& [nu, c] : small.coefficients()) {
        std::vector<int> padded = nu.entries();
        padded.resize(5, 0);
        const auto* other = large.find(Composition(padded));
        REQUIRE(other != nullptr);
        CHECK(*other == c);
    }
}

TEST_CASE("parallel and serial enumerations agree") {
    const Partition shape({3, 2, 1});
    CHECK(macdonald_polynomial(shape, {4}, 1) == macdonald_polynomial(shape, {4}, 4));
}

TEST_CASE("factorization at roots of unity") {
    const auto small = check_factorization(ShapeSpec(Partition({2}), 1, 2), {4});
    CHECK(small.verified());
    CHECK(small.mu == Partition({2, 1, 1}));
    CHECK_FALSE(small.partial);

    const auto partial = check_factorization(ShapeSpec(Partition({2}), 2, 2), {3});
    CHECK(partial.verified());
    CHECK(partial.partial);

    CHECK(check_factorization(ShapeSpec(Partition({2, 1}), 1, 1), {4}).verified());
    CHECK(check_factorization(ShapeSpec(Partition({3}), 2, 1), {5}).verified());
}

TEST_CASE("unspecialized expansions do not factor") {
    const auto mu = macdonald_polynomial(Partition({2, 1}), {3});
    const auto prod = expansion_mul(macdonald_polynomial(Partition({2}), {3}), macdonald_polynomial(Partition({1}), {3}));
    CHECK_FALSE(expansion_equal(mu, prod));
}

TEST_CASE("shape spec validation") {
    CHECK(ShapeSpec(Partition({3, 3}), 2, 5).mu() == Partition({3, 3, 2, 2, 2, 2, 2}));
    CHECK(ShapeSpec(Partition({2}), 2, 0).mu() == Partition({2}));
    CHECK_THROWS_AS(ShapeSpec(Partition({1}), 2, 1), InvalidPartitionError);
    CHECK_THROWS_AS(ShapeSpec(Partition({2}), 0, 1), InvalidArgumentError);
    CHECK_THROWS_AS(ShapeSpec(Partition({2}), 1, -1), InvalidArgumentError);
    CHECK_THROWS_AS(check_factorization(ShapeSpec(Partition({2}), 1, 0), {3}), InvalidArgumentError);
    CHECK_THROWS_AS(check_factorization(ShapeSpec(Partition({2}), 1, 2), {0}), InvalidArgumentError);
    CHECK_THROWS_AS(macdonald_polynomial(Partition({4, 4}), {10, 1000}), BudgetExceededError);
}

TEST_CASE("multinomials") {
    CHECK(multinomial(Composition({2, 1, 1})) == 12);
    CHECK(multinomial(Composition({0, 3})) == 1);
}
