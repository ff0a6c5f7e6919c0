#include <doctest.h>

#include "hhl/bijections.hpp"
#include "hhl/error.hpp"

using namespace hhl;

namespace {

Filling tau_input() {
    return Filling::from_top_down({{1, 4}, {3, 5}, {2, 6}, {1, 3}, {2, 4}, {3, 3, 3}, {4, 4, 4}});
}
const TailShape tau_shape(Partition({3, 3}), 2, 5);

Filling width_one_input() { return Filling::from_top_down({{2}, {1}, {3}, {2, 3}, {1, 2}}); }
const TailShape width_one_shape(Partition({2, 2}), 1, 3);

}  // namespace

TEST_CASE("tail shape") {
    CHECK(tau_shape.k() == 2);
    CHECK(tau_shape.shape() == Partition({3, 3, 2, 2, 2, 2, 2}));
    CHECK(tau_shape.tail_shape() == Partition({2, 2, 2, 2, 2}));
    CHECK_THROWS_AS(TailShape(Partition({2, 1}), 2, 1), InvalidPartitionError);
    CHECK_THROWS_AS(TailShape(Partition({2}), 3, 1), InvalidArgumentError);
    CHECK_THROWS_AS(TailShape(Partition({2}), 2, -1), InvalidArgumentError);
}

TEST_CASE("splitting off the tail") {
    const SplitFilling s = pi_star(tau_input(), tau_shape);
    CHECK(s.body == Filling::from_top_down({{3, 3, 3}, {4, 4, 4}}));
    CHECK(s.tail == Filling::from_top_down({{1, 4}, {3, 5}, {2, 6}, {1, 3}, {2, 4}}));
    CHECK(pi_star_inverse(s, tau_shape) == tau_input());
    const auto stats = stats_of_split(s);
    CHECK(stats.maj == 8);
    CHECK(stats.inv == 2);

    const SplitFilling w = pi_star(width_one_input(), width_one_shape);
    CHECK(w.body == Filling(Partition({2, 2}), {{1, 2}, {2, 3}}));
    CHECK(w.tail == Filling(Partition({1, 1, 1}), {{3}, {1}, {2}}));
    CHECK(stats_of_split(w).maj == 3);
    CHECK(maj(width_one_input()) % 3 == stats_of_split(w).maj % 3);

    const TailShape no_tail(Partition({2, 2}), 2, 0);
    const Filling t = Filling::from_top_down({{5, 6}, {1, 2}});
    CHECK(pi_star(t, no_tail).body == t);
    CHECK(pi_star(t, no_tail).tail.shape().empty());

    const SplitFilling flat{Filling::constant(Partition({3, 3}), 2), Filling::constant(Partition({2, 2}), 7)};
    CHECK(stats_of_split(flat) == FillingStatistics{0, 0});
    CHECK_THROWS_AS(pi_star(t, tau_shape), ShapeMismatchError);
}

TEST_CASE("swap conditions") {
    CHECK(cond_xAx(2, 4, 3));
    CHECK_FALSE(cond_xAx(5, 5, 5));
    CHECK(cond_xAx(4, 2, 3));
    CHECK(cond_xXxX(1, 3, 2, 4));
    CHECK_FALSE(cond_xXxX(1, 1, 1, 1));
    for (int a = 1; a <= 8; ++a) {
        for (int b = 1; b <= 8; ++b) {
            for (int A = 1; A <= 8; ++A) {
                REQUIRE(cond_xAx(a, b, A) == cond_xAx(b, a, A));
                for (int B = 1; B <= 8; ++B) {
                    REQUIRE(cond_xXxX(a, b, A, B) == cond_xXxX(b, a, B, A));
                    if (a <= 6 && b <= 6 && A <= 6 && B <= 6) REQUIRE(xXxX_chain_count(a, b, A, B) <= 1);
                }
            }
        }
    }
}

TEST_CASE("tau on the worked filling") {
    const TauTrace trace = tau_trace(tau_input(), tau_shape);
    REQUIRE(trace.steps.size() == 3);
    CHECK(trace.steps[0].kind == TauStepKind::BoundaryXAx);
    CHECK(trace.steps[0].row == 3);
    CHECK(to_string(trace.steps[0].after) == "1,4;3,5;2,6;1,3;4,2;3,3,3;4,4,4");
    CHECK(trace.steps[1].kind == TauStepKind::ChainXXxX);
    CHECK(trace.steps[1].row == 4);
    CHECK(to_string(trace.steps[1].after) == "1,4;3,5;2,6;3,1;4,2;3,3,3;4,4,4");
    CHECK(trace.steps[2].row == 5);
    CHECK(to_string(trace.steps[2].after) == "1,4;3,5;6,2;3,1;4,2;3,3,3;4,4,4");

    const Filling u = tau(tau_input(), tau_shape);
    CHECK(u == trace.output());
    CHECK(maj(u) == 13);
    CHECK(inv(u) == 2);
    CHECK((13 - 8) % 5 == 0);
    CHECK(tau(u, tau_shape) == tau_input());
}

TEST_CASE("tau leaves fillings alone when the boundary condition fails") {
    const Filling t = Filling::from_top_down({{5, 5}, {5, 5}});
    const TailShape ts(Partition({2}), 2, 1);
    CHECK(tau_trace(t, ts).steps.empty());
    CHECK(tau(t, ts) == t);
    CHECK(tau(width_one_input(), width_one_shape) == width_one_input());
    CHECK_THROWS_AS(tau(width_one_input(), tau_shape), ShapeMismatchError);
}

TEST_CASE("exhaustive bijection checks") {
    const TailShape two(Partition({2}), 2, 2);
    const auto involution = verify_involution(two, {4});
    CHECK(involution.verified());
    CHECK(involution.cases == 4096);
    CHECK(verify_involution(TailShape(Partition({2}), 2, 1), {3}).verified());
    const auto trivial = verify_involution(TailShape(Partition({3, 2}), 2, 4), {1});
    CHECK(trivial.verified());
    CHECK(trivial.cases == 1);

    CHECK(verify_theorem(width_one_shape, {4}).verified());
    CHECK(verify_theorem(two, {4}).verified());
    CHECK(verify_theorem(TailShape(Partition({3}), 2, 2), {3}).verified());

    const auto key = verify_key_lemma(two, {4});
    CHECK(key.verified());
    CHECK(verify_key_lemma(TailShape(Partition({3, 2}), 2, 1), {3}).verified());
    CHECK_THROWS_AS(verify_key_lemma(width_one_shape, {3}), InvalidArgumentError);

    CHECK(verify_split_transport(two, {3}).verified());
    CHECK(verify_split_transport(width_one_shape, {3}).verified());
    CHECK(verify_split_transport(TailShape(Partition({3, 2}), 2, 2), {2}).verified());
}

TEST_CASE("local lemma families") {
    const auto reports = verify_lemmas(6);
    REQUIRE(reports.size() == 6);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        CAPTURE(reports[i].check);
        CHECK(reports[i].verified());
        CHECK(reports[i].cases == (i < 2 ? 216u : 1296u));
    }
    CHECK_THROWS_AS(verify_lemmas(0), InvalidArgumentError);
}

TEST_CASE("parallel verdicts match serial verdicts") {
    const TailShape ts(Partition({2}), 2, 2);
    const auto a = verify_key_lemma(ts, {3}, 1);
    const auto b = verify_key_lemma(ts, {3}, 4);
    CHECK(a.cases == b.cases);
    CHECK(a.diagnostics == b.diagnostics);
    CHECK(a.counterexample == b.counterexample);
}
