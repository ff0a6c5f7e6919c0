#include "hhl/bijections.hpp"

#include <algorithm>
#include <map>

#include "hhl/error.hpp"

namespace hhl {

TailShape::TailShape(Partition mu_prime_in, int n_in, int l_in)
    : mu_prime(std::move(mu_prime_in)), n(n_in), l(l_in) {
    if (n != 1 && n != 2) throw InvalidArgumentError("tail width n must be 1 or 2");
    if (l < 0) throw InvalidArgumentError("tail height l must be >= 0");
    if (mu_prime.empty()) throw InvalidPartitionError("mu' must be non-empty");
    if (mu_prime.parts().back() < n) {
        throw InvalidPartitionError("last part of mu' (" + std::to_string(mu_prime.parts().back()) +
                                    ") must be >= n (" + std::to_string(n) + ")");
    }
}

namespace {

void require_shape(const Filling& t, const TailShape& ts) {
    if (t.shape() != ts.shape()) {
        throw ShapeMismatchError("filling has shape (" + to_string(t.shape()) + "), expected (" +
                                 to_string(ts.shape()) + ")");
    }
}

void swap_row(Filling& f, int row) { f.swap_entries({row, 1}, {row, 2}); }

// Core of the involution; `on_swap(kind, row, filling)` observes every swap.
template <class OnSwap>
Filling run_tau(const Filling& t, const TailShape& ts, OnSwap on_swap) {
    require_shape(t, ts);
    Filling cur = t;
    if (ts.n == 1 || ts.l == 0) return cur;
    int i = ts.k();
    const int top = ts.k() + ts.l;
    if (!cond_xAx(cur.at(i + 1, 1), cur.at(i + 1, 2), cur.at(i, 1))) return cur;
    swap_row(cur, i + 1);
    on_swap(TauStepKind::BoundaryXAx, i + 1, cur);
    ++i;
    while (i + 1 <= top && cond_xXxX(cur.at(i + 1, 1), cur.at(i + 1, 2), cur.at(i, 1), cur.at(i, 2))) {
        swap_row(cur, i + 1);
        on_swap(TauStepKind::ChainXXxX, i + 1, cur);
        ++i;
    }
    return cur;
}

std::vector<Cell> shift_cells(std::vector<Cell> cells, int dr) {
    for (auto& c : cells) c.row += dr;
    return cells;
}

std::vector<CellPair> shift_pairs(std::vector<CellPair> pairs, int dr) {
    for (auto& p : pairs) {
        p.first.row += dr;
        p.second.row += dr;
    }
    return pairs;
}

// Per-range accumulator for the filling verifiers.
struct CheckAcc {
    std::uint64_t cases = 0;
    std::map<std::string, std::uint64_t> diagnostics;
    std::optional<std::vector<std::string>> first;

    void fail(std::vector<std::string> lines) {
        if (!first) first = std::move(lines);
    }

    void merge(CheckAcc&& other) {
        cases += other.cases;
        for (const auto& [k, v] : other.diagnostics) diagnostics[k] += v;
        if (!first && other.first) first = std::move(other.first);
    }
};

template <class Check>
VerificationReport run_filling_check(const std::string& name, const TailShape& ts, const EnumerationBudget& budget,
                                     unsigned workers, std::vector<std::string> diagnostic_keys, Check check) {
    const Partition shape = ts.shape();
    require_budget(shape, budget);
    auto make = [&] {
        CheckAcc acc;
        for (const auto& k : diagnostic_keys) acc.diagnostics[k] = 0;
        return acc;
    };
    CheckAcc acc = reduce_fillings<CheckAcc>(shape, budget.m, workers, make,
                                             [&](std::span<const int> word, CheckAcc& a) {
                                                 ++a.cases;
                                                 if (a.first) return;
                                                 check(Filling::from_reading_order(shape, word), a);
                                             });
    VerificationReport report;
    report.check = name;
    report.cases = acc.cases;
    for (const auto& k : diagnostic_keys) report.diagnostics.emplace_back(k, acc.diagnostics[k]);
    report.counterexample = std::move(acc.first);
    return report;
}

std::string stat_line(const std::string& label, FillingStatistics s) {
    return label + ": maj = " + std::to_string(s.maj) + ", inv = " + std::to_string(s.inv);
}

int body_descents_in_tail_columns(const Filling& t, const TailShape& ts) {
    int count = 0;
    for (int i = 2; i <= ts.k(); ++i) {
        for (const Cell& c : des_rows(t, i)) count += c.col <= ts.n ? 1 : 0;
    }
    return count;
}

}  // namespace

SplitFilling pi_star(const Filling& t, const TailShape& ts) {
    require_shape(t, ts);
    std::vector<std::vector<int>> body_rows;
    std::vector<std::vector<int>> tail_rows;
    for (int r = 1; r <= ts.k(); ++r) body_rows.push_back(t.row(r));
    for (int r = ts.k() + 1; r <= ts.k() + ts.l; ++r) tail_rows.push_back(t.row(r));
    return {Filling(ts.mu_prime, body_rows), Filling(ts.tail_shape(), tail_rows)};
}

Filling pi_star_inverse(const SplitFilling& s, const TailShape& ts) {
    if (s.body.shape() != ts.mu_prime || s.tail.shape() != ts.tail_shape()) {
        throw ShapeMismatchError("split components do not match (" + to_string(ts.mu_prime) + ") and tail");
    }
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= ts.k(); ++r) rows.push_back(s.body.row(r));
    for (int r = 1; r <= ts.l; ++r) rows.push_back(s.tail.row(r));
    return Filling(ts.shape(), rows);
}

FillingStatistics stats_of_split(const SplitFilling& s) {
    const auto b = statistics(s.body);
    const auto t = statistics(s.tail);
    return {b.inv + t.inv, b.maj + t.maj};
}

bool cond_xAx(int a, int b, int A) { return (a <= A && A < b) || (b <= A && A < a); }

int xXxX_chain_count(int a, int b, int A, int B) {
    const bool chains[] = {
        a <= A && A < b && b <= B, A < b && b <= B && B < a,
        b <= A && A < a && a <= B, A < a && a <= B && B < b,
        a <= B && B < b && b <= A, B < b && b <= A && A < a,
        b <= B && B < a && a <= A, B < a && a <= A && A < b,
    };
    return static_cast<int>(std::count(std::begin(chains), std::end(chains), true));
}

bool cond_xXxX(int a, int b, int A, int B) { return xXxX_chain_count(a, b, A, B) > 0; }

TauTrace tau_trace(const Filling& t, const TailShape& ts) {
    TauTrace trace{t, {}};
    run_tau(t, ts, [&](TauStepKind kind, int row, const Filling& f) { trace.steps.push_back({kind, row, f}); });
    return trace;
}

Filling tau(const Filling& t, const TailShape& ts) {
    return run_tau(t, ts, [](TauStepKind, int, const Filling&) {});
}

VerificationReport verify_involution(const TailShape& ts, const EnumerationBudget& budget, unsigned workers) {
    return run_filling_check("involution", ts, budget, workers, {"moved"}, [&](const Filling& t, CheckAcc& acc) {
        const Filling u = tau(t, ts);
        if (!(u == t)) ++acc.diagnostics["moved"];
        const Filling back = tau(u, ts);
        if (!(back == t) || evaluation(u, budget.m) != evaluation(t, budget.m)) {
            acc.fail({"filling = " + to_string(t), "tau = " + to_string(u), "tau(tau) = " + to_string(back)});
        }
    });
}

VerificationReport verify_theorem(const TailShape& ts, const EnumerationBudget& budget, unsigned workers) {
    const Partition shape = ts.shape();
    const Partition tail_shape = ts.tail_shape();
    const StatisticsPlan full(shape);
    const StatisticsPlan body_plan(ts.mu_prime);
    const StatisticsPlan tail_plan(tail_shape);
    const std::size_t tail_cells = static_cast<std::size_t>(tail_shape.size());
    return run_filling_check("theorem", ts, budget, workers, {}, [&](const Filling& t, CheckAcc& acc) {
        const Filling u = tau(t, ts);
        const auto uw = u.reading_word();
        const auto tw = t.reading_word();
        // Tail rows sit on top, so they lead the reading word.
        const std::span<const int> word(tw);
        const auto ts_tail = tail_plan.evaluate(word.first(tail_cells));
        const auto ts_body = body_plan.evaluate(word.subspan(tail_cells));
        const FillingStatistics split{ts_tail.inv + ts_body.inv, ts_tail.maj + ts_body.maj};
        const auto image = full.evaluate(uw);
        const bool maj_ok = ts.l == 0 ? image.maj == split.maj : (image.maj - split.maj) % ts.l == 0;
        if (!maj_ok || image.inv != split.inv) {
            acc.fail({"filling = " + to_string(t), "tau = " + to_string(u), stat_line("tau(T)", image),
                      stat_line("pi*(T)", split)});
        }
    });
}

std::vector<VerificationReport> verify_lemmas(int max_entry) {
    if (max_entry < 2) throw InvalidArgumentError("max_entry must be >= 2");
    std::vector<VerificationReport> out(6);
    const char* names[] = {"L1", "L2", "L3", "L4", "L5", "L6"};
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].check = names[i];
        out[i].diagnostics.emplace_back("hypothesis", 0);
    }
    auto fail = [&](std::size_t family, std::vector<std::string> lines) {
        if (!out[family].counterexample) out[family].counterexample = std::move(lines);
    };
    auto two_rows = [](std::vector<int> upper, std::vector<int> lower) {
        return Filling::from_top_down({std::move(upper), std::move(lower)});
    };
    auto same_row_count = [](const Filling& f) { return static_cast<int>(inv_sets(f, 2).same_row.size()); };

    // L1 / L2: upper row (a,b) over a lower row whose only relevant cell is A.
    // The other lower cells are blank in the lemma; every value is tried for them,
    // with lower rows of width 2 and 3.
    for (int a = 1; a <= max_entry; ++a) {
        for (int b = 1; b <= max_entry; ++b) {
            for (int A = 1; A <= max_entry; ++A) {
                const bool boundary = cond_xAx(a, b, A);
                ++out[0].cases;
                ++out[1].cases;
                ++out[boundary ? 0 : 1].diagnostics[0].second;
                for (int x = 1; x <= max_entry; ++x) {
                    for (int y = 1; y <= max_entry; ++y) {
                        for (const auto& lower : {std::vector<int>{A, x}, std::vector<int>{A, x, y}}) {
                            if (lower.size() == 2 && y > 1) continue;
                            const Filling t = two_rows({a, b}, lower);
                            const Filling swapped = two_rows({b, a}, lower);
                            const std::string where = "filling = " + to_string(t);
                            if (boundary && same_row_count(t) != inv_rows(swapped, 2)) {
                                fail(0, {where, "|Inv_2(T)| = " + std::to_string(same_row_count(t)),
                                         "inv_{2,1}(T') = " + std::to_string(inv_rows(swapped, 2))});
                            }
                            if (!boundary && same_row_count(t) != inv_rows(t, 2)) {
                                fail(1, {where, "|Inv_2(T)| = " + std::to_string(same_row_count(t)),
                                         "inv_{2,1}(T) = " + std::to_string(inv_rows(t, 2))});
                            }
                        }
                    }
                }
            }
        }
    }

    for (int a = 1; a <= max_entry; ++a) {
        for (int b = 1; b <= max_entry; ++b) {
            for (int A = 1; A <= max_entry; ++A) {
                for (int B = 1; B <= max_entry; ++B) {
                    const int hi = std::max(a, b), lo = std::min(a, b);
                    const int HI = std::max(A, B), LO = std::min(A, B);
                    const bool stab1 = (hi <= LO) || (a <= LO && HI < b) || (HI < lo) || (b <= LO && HI < a);
                    const bool stab2 = (A < lo && hi <= B) || (B < lo && hi <= A);
                    const bool chain = cond_xXxX(a, b, A, B);
                    const Filling t = two_rows({a, b}, {A, B});
                    const Filling lower_swap = two_rows({a, b}, {B, A});
                    const Filling double_swap = two_rows({b, a}, {B, A});
                    const std::string where = "filling = " + to_string(t);
                    for (std::size_t f = 2; f < 6; ++f) ++out[f].cases;

                    if (stab1) {
                        ++out[2].diagnostics[0].second;
                        const auto s = inv_sets(t, 2);
                        const auto s2 = inv_sets(lower_swap, 2);
                        if (des_rows(t, 2) != des_rows(lower_swap, 2) || s.row_below != s2.row_below ||
                            s.same_row != s2.same_row) {
                            fail(2, {where, "lower-row swap = " + to_string(lower_swap)});
                        }
                    }
                    if (stab2) {
                        ++out[3].diagnostics[0].second;
                        if (des_rows(t, 2).size() != des_rows(lower_swap, 2).size() ||
                            inv_rows(t, 2) != inv_rows(lower_swap, 2)) {
                            fail(3, {where, "lower-row swap = " + to_string(lower_swap)});
                        }
                    }
                    if (chain) {
                        ++out[4].diagnostics[0].second;
                        if (des_rows(t, 2).size() != des_rows(double_swap, 2).size() ||
                            inv_rows(t, 2) != inv_rows(double_swap, 2)) {
                            fail(4, {where, "double swap = " + to_string(double_swap)});
                        }
                    }
                    if (A != B) {
                        ++out[5].diagnostics[0].second;
                        if (!(chain || stab1 || stab2)) fail(5, {where, "no condition applies"});
                    }
                }
            }
        }
    }
    return out;
}

VerificationReport verify_key_lemma(const TailShape& ts, const EnumerationBudget& budget, unsigned workers) {
    if (ts.n != 2) throw InvalidArgumentError("the swap algorithm needs n = 2");
    const int k = ts.k();
    const int top = k + ts.l;
    const std::vector<std::string> keys = {"xAx-steps", "xXxX-steps", "literal-identity-violations"};
    return run_filling_check("key-lemma", ts, budget, workers, keys, [&](const Filling& t, CheckAcc& acc) {
        const TauTrace trace = tau_trace(t, ts);
        const Filling& u = trace.output();
        auto fail = [&](const std::string& what) {
            std::vector<std::string> lines{"filling = " + to_string(t), "tau = " + to_string(u), what};
            for (const auto& step : trace.steps) {
                lines.push_back(std::string(step.kind == TauStepKind::BoundaryXAx ? "xAx" : "xXxX") + " swap row " +
                                std::to_string(step.row) + " -> " + to_string(step.after));
            }
            acc.fail(std::move(lines));
        };
        if (ts.l == 0) return;

        // Boundary row k+1: same-row inversions of T against inv_{k+1,k} after the first step.
        const Filling& after_first = trace.steps.empty() ? t : trace.steps.front().after;
        const int boundary_same = static_cast<int>(inv_sets(t, k + 1).same_row.size());
        if (boundary_same != inv_rows(after_first, k + 1)) {
            fail("boundary row: |Inv_{k+1}(T)| = " + std::to_string(boundary_same) + " but inv_{k+1,k} = " +
                 std::to_string(inv_rows(after_first, k + 1)));
            return;
        }

        // Every chain swap leaves maj and inv of its row pair as they were in T.
        for (const auto& step : trace.steps) {
            if (step.kind == TauStepKind::BoundaryXAx) {
                ++acc.diagnostics["xAx-steps"];
                continue;
            }
            ++acc.diagnostics["xXxX-steps"];
            if (maj_rows(t, step.row) != maj_rows(step.after, step.row) ||
                inv_rows(t, step.row) != inv_rows(step.after, step.row)) {
                fail("swap at row " + std::to_string(step.row) + " changed maj/inv of its row pair");
                return;
            }
        }

        // Above the boundary, tau(T) and T agree row pair by row pair; tail rows
        // carry maj_{r,r-1} = (k+l-r+1) |Des_{r,r-1}|.
        for (int r = k + 1; r <= top; ++r) {
            const int weight = top - r + 1;
            if (maj_rows(u, r) != weight * static_cast<int>(des_rows(u, r).size())) {
                fail("row " + std::to_string(r) + ": maj_{r,r-1} is not (k+l-r+1)|Des_{r,r-1}|");
                return;
            }
            if (r == k + 1) continue;
            if (inv_rows(u, r) != inv_rows(t, r) || maj_rows(u, r) != maj_rows(t, r)) {
                fail("row " + std::to_string(r) + ": tau(T) and T differ in maj/inv of the row pair");
                return;
            }
        }

        const auto image = statistics(u);
        const auto split = stats_of_split(pi_star(t, ts));
        const int body_desc = body_descents_in_tail_columns(t, ts);
        const int boundary_image = static_cast<int>(des_rows(u, k + 1).size());
        const int boundary_input = static_cast<int>(des_rows(t, k + 1).size());
        if (image.inv != split.inv) {
            fail(stat_line("tau(T)", image) + "; " + stat_line("pi*(T)", split));
            return;
        }
        if (image.maj != split.maj + ts.l * (boundary_image + body_desc)) {
            fail("maj(tau(T)) = " + std::to_string(image.maj) + " but maj(pi*(T)) + l*(" +
                 std::to_string(boundary_image) + " + " + std::to_string(body_desc) +
                 ") = " + std::to_string(split.maj + ts.l * (boundary_image + body_desc)));
            return;
        }
        if (image.maj != split.maj + ts.l * (boundary_input + body_desc)) {
            ++acc.diagnostics["literal-identity-violations"];
        }
    });
}

VerificationReport verify_split_transport(const TailShape& ts, const EnumerationBudget& budget, unsigned workers) {
    const int k = ts.k();
    return run_filling_check("split-transport", ts, budget, workers, {}, [&](const Filling& t, CheckAcc& acc) {
        const SplitFilling s = pi_star(t, ts);
        auto fail = [&](const std::string& what) {
            acc.fail({"filling = " + to_string(t), "body = " + to_string(s.body), "tail = " + to_string(s.tail), what});
        };
        if (!(pi_star_inverse(s, ts) == t)) return fail("pi* inverse does not reassemble T");

        if (inv_sets(t, 1).same_row != inv_sets(s.body, 1).same_row) return fail("row 1 inversions differ");
        for (int i = 2; i <= k; ++i) {
            const auto des = des_rows(t, i);
            if (des != des_rows(s.body, i)) return fail("body row " + std::to_string(i) + ": descents differ");
            const auto inv_t = inv_sets(t, i);
            const auto inv_b = inv_sets(s.body, i);
            if (inv_t.same_row != inv_b.same_row || inv_t.row_below != inv_b.row_below) {
                return fail("body row " + std::to_string(i) + ": inversions differ");
            }
            const auto extended = std::count_if(des.begin(), des.end(), [&](const Cell& c) { return c.col <= ts.n; });
            if (maj_rows(t, i) != maj_rows(s.body, i) + ts.l * static_cast<int>(extended)) {
                return fail("body row " + std::to_string(i) + ": maj transport fails");
            }
            if (inv_rows(t, i) != inv_rows(s.body, i)) return fail("body row " + std::to_string(i) + ": inv differs");
        }
        for (int i = 1; i <= ts.l; ++i) {
            const auto inv_t = inv_sets(t, k + i);
            const auto inv_tail = inv_sets(s.tail, i);
            if (shift_pairs(inv_t.same_row, -k) != inv_tail.same_row) {
                return fail("tail row " + std::to_string(i) + ": same-row inversions differ");
            }
            if (i == 1) continue;
            if (shift_cells(des_rows(t, k + i), -k) != des_rows(s.tail, i) ||
                shift_pairs(inv_t.row_below, -k) != inv_tail.row_below) {
                return fail("tail row " + std::to_string(i) + ": descents or inversions differ");
            }
            if (maj_rows(t, k + i) != maj_rows(s.tail, i) || inv_rows(t, k + i) != inv_rows(s.tail, i)) {
                return fail("tail row " + std::to_string(i) + ": maj or inv differs");
            }
        }
        if (ts.l >= 1) {
            const auto whole = statistics(t);
            const auto body = statistics(s.body);
            const auto tail = statistics(s.tail);
            const int boundary_maj = maj_rows(t, k + 1);
            const int boundary_inv = static_cast<int>(inv_sets(t, k + 1).row_below.size()) - arm_rows(t, k + 1);
            if ((whole.maj - body.maj - tail.maj - boundary_maj) % ts.l != 0) return fail("maj decomposition fails");
            if (whole.inv != body.inv + tail.inv + boundary_inv) return fail("inv decomposition fails");
            if (ts.n == 1) {
                if (!att_row_below(t.shape(), k + 1).empty()) return fail("width-1 tail has boundary attacks");
                if (arm(t.shape(), {k + 1, 1}) != 0) return fail("width-1 tail cell has non-zero arm");
            }
        }
    });
}

}  // namespace hhl
