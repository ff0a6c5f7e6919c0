// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hhl/bijections.hpp"
#include "hhl/cyclotomic.hpp"
#include "hhl/macdonald.hpp"
#include "hhl/statistics.hpp"

using namespace hhl;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// Collects failed sub-checks and timing notes for one criterion.
struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    void within(double elapsed, double limit, const std::string& what) {
        notes.push_back(what + " " + fixed(elapsed) + "s/" + fixed(limit) + "s");
        expect(elapsed < limit, what + " took " + fixed(elapsed) + "s, limit " + fixed(limit) + "s");
    }
};

int failures_total = 0;

void report(int id, const std::string& title, const Outcome& o) {
    const bool ok = o.failures.empty();
    if (!ok) ++failures_total;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
    if (!o.notes.empty()) {
        std::cout << " [";
        for (std::size_t i = 0; i < o.notes.size(); ++i) std::cout << (i ? ", " : "") << o.notes[i];
        std::cout << "]";
    }
    std::cout << '\n';
    for (const auto& f : o.failures) std::cout << "    " << f << '\n';
    std::cout.flush();
}

std::string render(const VerificationReport& r) {
    std::ostringstream os;
    os << r.check << " cases=" << r.cases;
    for (const auto& [k, v] : r.diagnostics) os << ' ' << k << '=' << v;
    if (r.counterexample) {
        for (const auto& line : *r.counterexample) os << "\n  " << line;
    }
    return os.str() + "\n";
}

std::string render(const std::string& check, std::uint64_t fillings, std::size_t compared,
                   const std::vector<CoefficientMismatch>& mismatches) {
    std::ostringstream os;
    os << check << " fillings=" << fillings << " compared=" << compared << " mismatches=" << mismatches.size()
       << '\n';
    for (const auto& m : mismatches) os << "  " << to_string(m.nu) << ": " << m.lhs << " | " << m.rhs << '\n';
    return os.str();
}

std::vector<Cell> sorted(std::vector<Cell> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Outcome worked_examples() {
    Outcome o;
    const auto start = Clock::now();

    const Partition p432({4, 3, 2});
    o.expect(arm(p432, {2, 1}) == 2, "arm of (2,1) in (4,3,2) is not 2");
    o.expect(leg(p432, {2, 1}) == 1, "leg of (2,1) in (4,3,2) is not 1");

    const Filling ex2 = Filling::from_top_down({{6, 2}, {2, 4, 8}, {4, 4, 1, 3}});
    o.expect(sorted(descents(ex2)) == std::vector<Cell>{{2, 3}, {3, 1}}, "descent set of the (4,3,2) filling");
    o.expect(maj(ex2) == 2, "maj of the (4,3,2) filling is not 2");

    const Filling ex4 = Filling::from_top_down({{1}, {4, 7}, {3, 2}, {5, 6}});
    o.expect(arm_rows(ex4, 3) == 1, "arm_{3,2} is not 1");
    o.expect(maj_rows(ex4, 3) == 3, "maj_{3,2} is not 3");
    o.expect(inv_rows(ex4, 2) == 1, "inv_{2,1} is not 1");
    o.expect(inv_rows(ex4, 3) == 0, "inv_{3,2} is not 0");
    o.expect(inv_rows(ex4, 4) == 0, "inv_{4,3} is not 0");
    o.expect(maj(ex4) == 3, "maj of the (2,2,2,1) filling is not 3");
    o.expect(inv(ex4) == 1, "inv of the (2,2,2,1) filling is not 1");

    const Filling w = Filling::from_top_down({{2}, {1}, {3}, {2, 3}, {1, 2}});
    const TailShape wts(Partition({2, 2}), 1, 3);
    const int w_split = stats_of_split(pi_star(w, wts)).maj;
    o.expect(maj(w) == 9, "maj of the (2,2,1,1,1) filling is not 9");
    o.expect(inv(w) == 0, "inv of the (2,2,1,1,1) filling is not 0");
    o.expect(w_split == 3, "split maj of the (2,2,1,1,1) filling is not 3");
    o.expect((maj(w) - w_split) % 3 == 0, "9 and 3 are not congruent mod 3");

    const Filling t = Filling::from_top_down({{1, 4}, {3, 5}, {2, 6}, {1, 3}, {2, 4}, {3, 3, 3}, {4, 4, 4}});
    const TailShape ts(Partition({3, 3}), 2, 5);
    const TauTrace trace = tau_trace(t, ts);
    const std::vector<std::string> expected_steps = {"1,4;3,5;2,6;1,3;4,2;3,3,3;4,4,4",
                                                     "1,4;3,5;2,6;3,1;4,2;3,3,3;4,4,4",
                                                     "1,4;3,5;6,2;3,1;4,2;3,3,3;4,4,4"};
    std::vector<std::string> got_steps{to_string(trace.input)};
    for (const auto& s : trace.steps) got_steps.push_back(to_string(s.after));
    std::vector<std::string> want_steps{to_string(t)};
    want_steps.insert(want_steps.end(), expected_steps.begin(), expected_steps.end());
    o.expect(got_steps == want_steps, "tau trace does not reproduce the four displayed tableaux");
    const auto image = statistics(trace.output());
    const auto split = stats_of_split(pi_star(t, ts));
    o.expect(image.maj == 13, "maj(tau(T)) is not 13");
    o.expect(image.inv == 2, "inv(tau(T)) is not 2");
    o.expect(split.maj == 8, "maj(pi*(T)) is not 8");
    o.expect(split.inv == 2, "inv(pi*(T)) is not 2");
    o.expect((image.maj - split.maj) % 5 == 0, "13 and 8 are not congruent mod 5");

    o.within(seconds_since(start), 1.0, "examples");
    return o;
}

struct FactorizationCase {
    Partition mu_prime;
    int n, l, m;
    double limit;
};

const std::vector<FactorizationCase> kFactorizationCases = {
    {Partition({2}), 1, 2, 4, 1.0},
    {Partition({2, 2}), 1, 3, 7, 30.0},
    {Partition({2}), 2, 2, 6, 5.0},
};

Outcome factorization(unsigned workers, std::string& text) {
    Outcome o;
    for (const auto& c : kFactorizationCases) {
        const auto start = Clock::now();
        const auto r = check_factorization(ShapeSpec(c.mu_prime, c.n, c.l), {c.m}, workers);
        const double elapsed = seconds_since(start);
        const std::string label = "mu=(" + to_string(r.mu) + ") l=" + std::to_string(c.l);
        text += label + " partial=" + std::to_string(r.partial) + " " +
                render("factorization", r.fillings, r.compared, r.mismatches);
        o.expect(r.verified(), label + ": " + std::to_string(r.mismatches.size()) + " coefficients differ");
        o.expect(!r.partial, label + ": partial check");
        o.within(elapsed, c.limit, label);
    }
    return o;
}

Outcome bijection(unsigned workers, std::string& text) {
    Outcome o;
    const auto start = Clock::now();
    for (int l : {2, 3}) {
        const TailShape ts(Partition({2}), 2, l);
        const int m = std::min(ts.shape().size(), 6);
        for (const auto& r : {verify_theorem(ts, {m}, workers), verify_involution(ts, {m}, workers)}) {
            text += "l=" + std::to_string(l) + " m=" + std::to_string(m) + " " + render(r);
            o.expect(r.verified(), r.check + " l=" + std::to_string(l) + " has a counterexample");
            o.expect(r.cases == filling_count(ts.shape().size(), m), r.check + " did not cover every filling");
        }
    }
    o.within(seconds_since(start), 60.0, "bijection");
    return o;
}

std::uint64_t literal_violations = 0;
std::uint64_t key_lemma_cases = 0;

Outcome lemmas(unsigned workers, std::string& text) {
    Outcome o;
    const auto start = Clock::now();
    std::uint64_t small = 0, large = 0;
    for (const auto& r : verify_lemmas(6)) {
        text += render(r);
        o.expect(r.verified(), r.check + " has a counterexample");
        (r.cases == 216 ? small : large) += 1;
    }
    o.expect(small == 2 && large == 4, "lemma families did not cover 6^3 and 6^4 tuples");
    const auto key = verify_key_lemma(TailShape(Partition({2}), 2, 2), {5}, workers);
    text += render(key);
    o.expect(key.verified(), "key lemma has a counterexample");
    o.expect(key.cases == 15625, "key lemma did not cover 5^6 fillings");
    for (const auto& [k, v] : key.diagnostics) {
        if (k == "literal-identity-violations") literal_violations = v;
    }
    key_lemma_cases = key.cases;
    o.within(seconds_since(start), 30.0, "lemmas");
    return o;
}

Outcome symmetry(unsigned workers, std::string& text) {
    Outcome o;
    const auto start = Clock::now();
    for (int n = 1; n <= 5; ++n) {
        for (const Partition& shape : partitions_of(n)) {
            const auto conj = check_conjugation_symmetry(shape, {n}, workers);
            const auto unit = check_unit_specialization(shape, {n}, workers);
            text += "(" + to_string(shape) + ") " + render("conjugation", conj.fillings, conj.compared, conj.mismatches);
            text += "(" + to_string(shape) + ") " + render("unit", unit.fillings, unit.compared, unit.mismatches);
            o.expect(conj.mismatches.empty(), "conjugation symmetry fails for (" + to_string(shape) + ")");
            o.expect(unit.mismatches.empty(), "q=t=1 identity fails for (" + to_string(shape) + ")");
        }
    }
    o.within(seconds_since(start), 60.0, "symmetry");
    return o;
}

QTPolynomial random_poly(std::mt19937_64& rng, int max_q, int max_t) {
    QTPolynomial p;
    const int terms = static_cast<int>(rng() % 8) + 1;
    for (int i = 0; i < terms; ++i) {
        const long c = static_cast<long>(rng() % 2001) - 1000;
        p.add_term(static_cast<int>(rng() % static_cast<unsigned>(max_q + 1)),
                   static_cast<int>(rng() % static_cast<unsigned>(max_t + 1)), BigInt(c));
    }
    return p;
}

Outcome cyclotomic_layer() {
    Outcome o;
    for (int l = 1; l <= 30; ++l) {
        IntPolynomial prod{BigInt(1)};
        for (int d = 1; d <= l; ++d) {
            if (l % d == 0) prod = poly_mul(prod, cyclotomic(d).coeffs);
        }
        IntPolynomial want(static_cast<std::size_t>(l + 1), BigInt(0));
        want.front() = -1;
        want.back() = 1;
        o.expect(prod == want, "product of Phi_d over d | " + std::to_string(l) + " is not t^l - 1");
    }
    std::mt19937_64 rng(20240601);
    for (int l : {2, 3, 4, 5, 6, 12}) {
        int bad = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto a = random_poly(rng, 4, 3 * l);
            const auto b = random_poly(rng, 4, 3 * l);
            if (!(specialize_t(a * b, l) == specialize_t(a, l) * specialize_t(b, l))) ++bad;
            if (!(specialize_t(a + b, l) == specialize_t(a, l) + specialize_t(b, l))) ++bad;
        }
        o.expect(bad == 0, "specialization at l=" + std::to_string(l) + " fails on " + std::to_string(bad) + " pairs");
    }
    o.notes.push_back("6000 random pairs");
    return o;
}

// Runs `body`, turning an exception into a failed criterion.
Outcome guarded(const std::function<Outcome()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        Outcome o;
        o.failures.push_back(std::string("exception: ") + e.what());
        return o;
    }
}

}  // namespace

int main() {
    using Runner = Outcome (*)(unsigned, std::string&);
    const std::vector<std::pair<std::string, Runner>> heavy = {
        {"factorization at roots of unity", factorization},
        {"exhaustive bijection verification", bijection},
        {"lemma suite", lemmas},
        {"conjugation symmetry and q=t=1 identity", symmetry},
    };

    report(1, "worked examples", guarded(worked_examples));

    std::vector<std::string> baseline(heavy.size());
    for (std::size_t i = 0; i < heavy.size(); ++i) {
        report(static_cast<int>(i) + 2, heavy[i].first,
               guarded([&] { return heavy[i].second(1, baseline[i]); }));
    }
    std::cout << "INFO key lemma: " << literal_violations << " of " << key_lemma_cases
              << " fillings violate the identity with Des_{k+1,k}(T) in place of Des_{k+1,k}(tau(T))\n";

    report(6, "cyclotomic layer", guarded(cyclotomic_layer));

    report(7, "determinism across worker counts", guarded([&] {
               Outcome o;
               for (unsigned workers : {2u, 8u}) {
                   for (std::size_t i = 0; i < heavy.size(); ++i) {
                       std::string text;
                       heavy[i].second(workers, text);
                       o.expect(text == baseline[i], "criterion " + std::to_string(i + 2) + " report differs at " +
                                                         std::to_string(workers) + " workers");
                   }
               }
               o.notes.push_back("workers 1, 2, 8");
               return o;
           }));

    std::cout << (failures_total == 0 ? "ALL CRITERIA PASS" : std::to_string(failures_total) + " CRITERIA FAIL")
              << '\n';
    return failures_total == 0 ? 0 : 1;
}
