#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhl/enumeration.hpp"
#include "hhl/filling.hpp"
#include "hhl/partition.hpp"
#include "hhl/statistics.hpp"

namespace hhl {

/// mu = (mu_prime, n^l) with n in {1,2}. The tail occupies rows k+1..k+l
/// where k = len(mu_prime).
struct TailShape {
    Partition mu_prime;
    int n = 2;
    int l = 1;

    TailShape(Partition mu_prime, int n, int l);

    int k() const noexcept { return mu_prime.length(); }
    Partition shape() const { return mu_prime.with_rows_appended(n, l); }
    Partition tail_shape() const { return Partition().with_rows_appended(n, l); }
};

/// A filling of mu cut into its body (shape mu_prime) and tail (shape n^l).
struct SplitFilling {
    Filling body;
    Filling tail;

    auto operator<=>(const SplitFilling&) const = default;
};

SplitFilling pi_star(const Filling& t, const TailShape& ts);
Filling pi_star_inverse(const SplitFilling& s, const TailShape& ts);

/// (inv, maj) of a split: the statistics of both components added.
FillingStatistics stats_of_split(const SplitFilling& s);

/// Upper row (a,b) over a lower row whose left entry is A.
bool cond_xAx(int a, int b, int A);
/// Upper row (a,b) over lower row (A,B): one of the eight swap chains holds.
bool cond_xXxX(int a, int b, int A, int B);
/// How many of the eight xXxX chains hold (they are mutually exclusive, so 0 or 1).
int xXxX_chain_count(int a, int b, int A, int B);

enum class TauStepKind { BoundaryXAx, ChainXXxX };

struct TauStep {
    TauStepKind kind;
    int row;        // the row whose two entries were swapped
    Filling after;  // the filling right after the swap
};

struct TauTrace {
    Filling input;
    std::vector<TauStep> steps;

    const Filling& output() const { return steps.empty() ? input : steps.back().after; }
};

/// Runs the tail-swapping involution and records each swap. For n = 1 (and
/// for l = 0) the map is the identity. Throws ShapeMismatchError if the
/// filling's shape is not ts.shape().
TauTrace tau_trace(const Filling& t, const TailShape& ts);
Filling tau(const Filling& t, const TailShape& ts);

/// Outcome of one exhaustive check.
struct VerificationReport {
    std::string check;
    std::uint64_t cases = 0;
    /// Named counters reported alongside the verdict (e.g. hypothesis hits).
    std::vector<std::pair<std::string, std::uint64_t>> diagnostics;
    /// First failing case in enumeration order: description lines.
    std::optional<std::vector<std::string>> counterexample;

    bool verified() const noexcept { return !counterexample.has_value(); }
};

/// tau(tau(T)) = T and evaluation preserved, for every filling with entries <= m.
VerificationReport verify_involution(const TailShape& ts, const EnumerationBudget& budget, unsigned workers = 0);

/// inv(tau(T)) = inv(pi*(T)) and maj(tau(T)) = maj(pi*(T)) (mod l) for every filling.
VerificationReport verify_theorem(const TailShape& ts, const EnumerationBudget& budget, unsigned workers = 0);

/// Exhaustive check of the six local lemma families over entries 1..max_entry.
/// One report per family, in order L1..L6.
std::vector<VerificationReport> verify_lemmas(int max_entry);

/// Replays the swap algorithm on every filling and checks each step's local
/// invariants plus the exact maj bookkeeping identity
///   maj(tau(T)) = maj(pi*(T)) + l * (|Des_{k+1,k}(tau(T))| + body descents in columns <= n).
/// Also counts (as a diagnostic, not a failure) fillings where the variant
/// with Des_{k+1,k}(T) in place of Des_{k+1,k}(tau(T)) does not hold.
VerificationReport verify_key_lemma(const TailShape& ts, const EnumerationBudget& budget, unsigned workers = 0);

/// Row-by-row transport of Des / Inv / maj / inv between T and its split
/// (body rows, tail rows shifted by k), plus the width-1 tail facts for n = 1.
VerificationReport verify_split_transport(const TailShape& ts, const EnumerationBudget& budget,
                                          unsigned workers = 0);

}  // namespace hhl
