#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>
#include <vector>

#include "hhl/bijections.hpp"
#include "hhl/macdonald.hpp"
#include "hhl/monomial_expansion.hpp"
#include "hhl/statistics.hpp"

namespace hhl::cli {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, const std::string& what) {
    token = trim(token);
    int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    if (!token.empty() && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last) {
        throw ParseError(what + " '" + std::string(token) + "' is not an integer");
    }
    return value;
}

// Writes "key = value" or "key=value" depending on the format.
class Emitter {
public:
    Emitter(std::ostream& os, OutputFormat format) : os_(os), format_(format) {}

    void kv(const std::string& key, const std::string& value) {
        os_ << key << (format_ == OutputFormat::Human ? " = " : "=") << value << '\n';
    }
    void kv(const std::string& key, long long value) { kv(key, std::to_string(value)); }
    void line(const std::string& text) { os_ << text << '\n'; }
    bool human() const noexcept { return format_ == OutputFormat::Human; }

private:
    std::ostream& os_;
    OutputFormat format_;
};

std::string render_cells(const std::vector<Cell>& cells) {
    std::string out = "{";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        out += to_string(cells[i]);
    }
    return out + "}";
}

const std::string& require(const std::optional<std::string>& value, const char* flag, const std::string& command) {
    if (!value) throw InvalidArgumentError(std::string(flag) + " is required for " + command);
    return *value;
}

int require(const std::optional<int>& value, const char* flag, const std::string& command) {
    if (!value) throw InvalidArgumentError(std::string(flag) + " is required for " + command);
    return *value;
}

EnumerationBudget budget_for(const CommandConfig& c, int default_vars) {
    const int m = c.vars.value_or(default_vars);
    if (m < 1) throw InvalidArgumentError("--vars must be >= 1");
    return {m, c.max_states};
}

// Tail shape from --mu-prime/--n/--l; l falls back to the filling's extra rows.
TailShape tail_shape_for(const CommandConfig& c, int default_n, std::optional<int> rows_in_filling) {
    const Partition mu_prime = parse_shape(require(c.mu_prime, "--mu-prime", c.command));
    const int n = c.n.value_or(default_n);
    int l = 0;
    if (c.l) {
        l = *c.l;
    } else if (rows_in_filling) {
        l = *rows_in_filling - mu_prime.length();
    } else {
        throw InvalidArgumentError("--l is required for " + c.command);
    }
    return TailShape(mu_prime, n, l);
}

int emit_report(Emitter& e, const VerificationReport& r) {
    if (e.human()) {
        if (r.verified()) {
            e.line("VERIFIED " + std::to_string(r.cases) + " cases [" + r.check + "]");
        } else {
            e.line("COUNTEREXAMPLE [" + r.check + "] after " + std::to_string(r.cases) + " cases");
            for (const auto& l : *r.counterexample) e.line("  " + l);
        }
        for (const auto& [key, value] : r.diagnostics) e.line("  " + key + " = " + std::to_string(value));
    } else {
        e.kv(r.check + ".status", r.verified() ? "VERIFIED" : "COUNTEREXAMPLE");
        e.kv(r.check + ".cases", static_cast<long long>(r.cases));
        for (const auto& [key, value] : r.diagnostics) e.kv(r.check + "." + key, static_cast<long long>(value));
        if (r.counterexample) {
            for (std::size_t i = 0; i < r.counterexample->size(); ++i) {
                e.kv(r.check + ".counterexample." + std::to_string(i + 1), (*r.counterexample)[i]);
            }
        }
    }
    return r.verified() ? kExitOk : kExitCounterexample;
}

int emit_mismatches(Emitter& e, const std::string& check, std::uint64_t cases,
                    const std::vector<CoefficientMismatch>& mismatches) {
    if (mismatches.empty()) {
        if (e.human()) e.line("VERIFIED " + std::to_string(cases) + " cases [" + check + "]");
        else {
            e.kv(check + ".status", "VERIFIED");
            e.kv(check + ".cases", static_cast<long long>(cases));
        }
        return kExitOk;
    }
    if (e.human()) {
        e.line("COUNTEREXAMPLE [" + check + "] " + std::to_string(mismatches.size()) + " coefficients differ");
        for (const auto& mm : mismatches) {
            e.line("  nu = " + to_string(mm.nu) + " : lhs = " + mm.lhs + " ; rhs = " + mm.rhs);
        }
    } else {
        e.kv(check + ".status", "COUNTEREXAMPLE");
        e.kv(check + ".cases", static_cast<long long>(cases));
        for (const auto& mm : mismatches) {
            e.kv(check + ".mismatch." + to_string(mm.nu), "lhs=" + mm.lhs + " ; rhs=" + mm.rhs);
        }
    }
    return kExitCounterexample;
}

int cmd_compute(const CommandConfig& c, Emitter& e) {
    const Partition shape = parse_shape(require(c.shape, "--shape", c.command));
    const auto budget = budget_for(c, std::max(shape.size(), 1));
    const bool partial = budget.m < shape.size();
    const auto h = macdonald_polynomial(shape, budget, c.workers);
    if (e.human()) {
        if (partial) {
            e.line("# partial: " + std::to_string(budget.m) + " variables < |mu| = " + std::to_string(shape.size()));
        }
    } else {
        e.kv("shape", to_string(shape));
        e.kv("vars", budget.m);
        e.kv("partial", partial ? 1 : 0);
        if (c.l) e.kv("l", *c.l);
    }
    auto emit_line = [&](const Partition& lambda, const std::string& coeff) {
        if (e.human()) e.line(to_string(lambda) + " : " + coeff);
        else e.kv("coeff." + to_string(lambda), coeff);
    };
    // std::map<Partition,...> iterates in lexicographic order of the parts.
    if (c.l) {
        if (*c.l < 1) throw InvalidArgumentError("--l must be >= 1");
        for (const auto& [lambda, coeff] : symmetry_canonicalize(specialize_expansion(h, *c.l))) {
            emit_line(lambda, to_string(coeff));
        }
    } else {
        for (const auto& [lambda, coeff] : symmetry_canonicalize(h)) emit_line(lambda, to_string(coeff));
    }
    return kExitOk;
}

int cmd_stats(const CommandConfig& c, Emitter& e) {
    const std::string& text = require(c.filling, "--filling", c.command);
    const Filling t = c.shape ? parse_filling(parse_shape(*c.shape), text) : parse_filling(text);
    const Partition& shape = t.shape();
    e.kv("shape", to_string(shape));
    e.kv("filling", render_filling(t));
    e.kv("maj", maj(t));
    e.kv("inv", inv(t));
    e.kv("inversions", inversion_count(t));
    e.kv("descents", render_cells(descents(t)));
    e.kv("evaluation", to_string(evaluation(t, t.max_entry())));
    for (int i = shape.length(); i >= 1; --i) {
        const auto sets = inv_sets(t, i);
        const std::string row = std::to_string(i);
        if (e.human()) {
            std::string line = "row " + row + ": same_row_inversions=" + std::to_string(sets.same_row.size());
            if (i >= 2) {
                line += " below_inversions=" + std::to_string(sets.row_below.size()) +
                        " descents=" + render_cells(des_rows(t, i)) + " arm=" + std::to_string(arm_rows(t, i)) +
                        " maj=" + std::to_string(maj_rows(t, i)) + " inv=" + std::to_string(inv_rows(t, i));
            }
            e.line(line);
        } else {
            e.kv("row." + row + ".same_row_inversions", static_cast<long long>(sets.same_row.size()));
            if (i >= 2) {
                e.kv("row." + row + ".below_inversions", static_cast<long long>(sets.row_below.size()));
                e.kv("row." + row + ".descents", render_cells(des_rows(t, i)));
                e.kv("row." + row + ".arm", arm_rows(t, i));
                e.kv("row." + row + ".maj", maj_rows(t, i));
                e.kv("row." + row + ".inv", inv_rows(t, i));
            }
        }
    }
    return kExitOk;
}

int cmd_tau(const CommandConfig& c, Emitter& e) {
    const Filling t = parse_filling(require(c.filling, "--filling", c.command));
    const TailShape ts = tail_shape_for(c, 2, t.shape().length());
    const Filling shaped = parse_filling(ts.shape(), *c.filling);
    const TauTrace trace = tau_trace(shaped, ts);
    const Filling& u = trace.output();
    const auto image = statistics(u);
    const auto split_stats = stats_of_split(pi_star(shaped, ts));
    e.kv("filling", render_filling(shaped));
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const auto& step = trace.steps[s];
        const std::string kind = step.kind == TauStepKind::BoundaryXAx ? "xAx" : "xXxX";
        e.kv("step." + std::to_string(s + 1), kind + " row " + std::to_string(step.row) + " -> " +
                                                  render_filling(step.after));
    }
    e.kv("tau", render_filling(u));
    e.kv("tau.maj", image.maj);
    e.kv("tau.inv", image.inv);
    e.kv("split.maj", split_stats.maj);
    e.kv("split.inv", split_stats.inv);
    const bool maj_ok = ts.l == 0 ? image.maj == split_stats.maj : (image.maj - split_stats.maj) % ts.l == 0;
    e.kv("maj.congruent_mod_l", maj_ok ? "yes" : "no");
    e.kv("inv.equal", image.inv == split_stats.inv ? "yes" : "no");
    return kExitOk;
}

int cmd_split(const CommandConfig& c, Emitter& e) {
    const Filling t = parse_filling(require(c.filling, "--filling", c.command));
    const TailShape ts = tail_shape_for(c, 2, t.shape().length());
    const Filling shaped = parse_filling(ts.shape(), *c.filling);
    const SplitFilling s = pi_star(shaped, ts);
    const auto whole = statistics(shaped);
    const auto body = statistics(s.body);
    const auto tail = statistics(s.tail);
    e.kv("filling", render_filling(shaped));
    e.kv("body", render_filling(s.body));
    e.kv("tail", render_filling(s.tail));
    e.kv("maj", whole.maj);
    e.kv("inv", whole.inv);
    e.kv("body.maj", body.maj);
    e.kv("body.inv", body.inv);
    e.kv("tail.maj", tail.maj);
    e.kv("tail.inv", tail.inv);
    e.kv("split.maj", body.maj + tail.maj);
    e.kv("split.inv", body.inv + tail.inv);
    return kExitOk;
}

int cmd_verify_factorization(const CommandConfig& c, Emitter& e) {
    const Partition mu_prime = parse_shape(require(c.mu_prime, "--mu-prime", c.command));
    const ShapeSpec spec(mu_prime, require(c.n, "--n", c.command), require(c.l, "--l", c.command));
    const auto budget = budget_for(c, spec.mu().size());
    const auto report = check_factorization(spec, budget, c.workers);
    if (e.human()) {
        e.line("mu = " + to_string(report.mu) + " (mu' = " + to_string(report.mu_prime) + ", tail = " +
               to_string(report.tail) + ", l = " + std::to_string(report.l) + ", vars = " +
               std::to_string(report.m) + ")");
        if (report.partial) e.line("partial check: vars < |mu|");
    } else {
        e.kv("mu", to_string(report.mu));
        e.kv("l", report.l);
        e.kv("vars", report.m);
        e.kv("partial", report.partial ? 1 : 0);
        e.kv("compared", static_cast<long long>(report.compared));
    }
    return emit_mismatches(e, "factorization", report.fillings, report.mismatches);
}

int cmd_verify_bijection(const CommandConfig& c, Emitter& e) {
    const TailShape ts = tail_shape_for(c, 2, std::nullopt);
    const auto budget = budget_for(c, ts.shape().size());
    int code = emit_report(e, verify_theorem(ts, budget, c.workers));
    if (ts.n == 2) code = std::max(code, emit_report(e, verify_key_lemma(ts, budget, c.workers)));
    code = std::max(code, emit_report(e, verify_split_transport(ts, budget, c.workers)));
    return code;
}

int cmd_verify_involution(const CommandConfig& c, Emitter& e) {
    const TailShape ts = tail_shape_for(c, 2, std::nullopt);
    const auto budget = budget_for(c, ts.shape().size());
    return emit_report(e, verify_involution(ts, budget, c.workers));
}

int cmd_verify_lemmas(const CommandConfig& c, Emitter& e) {
    int code = kExitOk;
    for (const auto& r : verify_lemmas(c.max_entry.value_or(6))) code = std::max(code, emit_report(e, r));
    return code;
}

int cmd_verify_symmetry(const CommandConfig& c, Emitter& e) {
    const Partition shape = parse_shape(require(c.shape, "--shape", c.command));
    const auto budget = budget_for(c, std::max(shape.size(), 1));
    const auto conj = check_conjugation_symmetry(shape, budget, c.workers);
    const auto unit = check_unit_specialization(shape, budget, c.workers);
    if (e.human()) {
        e.line("shape = " + to_string(shape) + " (conjugate = " + to_string(conj.conjugate) + ", vars = " +
               std::to_string(budget.m) + ")");
    } else {
        e.kv("shape", to_string(shape));
        e.kv("conjugate", to_string(conj.conjugate));
        e.kv("vars", budget.m);
    }
    const int a = emit_mismatches(e, "conjugation", conj.fillings, conj.mismatches);
    const int b = emit_mismatches(e, "unit-specialization", unit.fillings, unit.mismatches);
    return std::max(a, b);
}

}  // namespace

Partition parse_shape(std::string_view text) {
    text = trim(text);
    if (text.empty()) return Partition();
    std::vector<int> parts;
    for (auto token : split(text, ',')) {
        const int v = parse_int(token, "shape part");
        if (v <= 0) throw ParseError("shape parts must be positive, got " + std::to_string(v));
        parts.push_back(v);
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) throw ParseError("shape parts must be weakly decreasing");
    }
    return Partition(std::move(parts));
}

namespace {

std::vector<std::vector<int>> parse_rows(std::string_view text) {
    std::vector<std::vector<int>> rows;
    text = trim(text);
    if (text.empty()) return rows;
    for (auto row_text : split(text, ';')) {
        std::vector<int> row;
        for (auto token : split(row_text, ',')) {
            const int v = parse_int(token, "filling entry");
            if (v <= 0) throw ParseError("filling entries must be positive, got " + std::to_string(v));
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Filling parse_filling(const Partition& shape, std::string_view text) {
    const auto rows = parse_rows(text);
    if (static_cast<int>(rows.size()) != shape.length()) {
        throw ParseError("row count mismatch: filling has " + std::to_string(rows.size()) + " rows, shape (" +
                         to_string(shape) + ") has " + std::to_string(shape.length()));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int expected = shape.row_length(shape.length() - static_cast<int>(i));
        if (static_cast<int>(rows[i].size()) != expected) {
            throw ParseError("row length mismatch: row " + std::to_string(i + 1) + " from the top has " +
                             std::to_string(rows[i].size()) + " entries, expected " + std::to_string(expected));
        }
    }
    return Filling(shape, std::vector<std::vector<int>>(rows.rbegin(), rows.rend()));
}

Filling parse_filling(std::string_view text) {
    const auto rows = parse_rows(text);
    std::vector<int> parts;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) parts.push_back(static_cast<int>(it->size()));
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i] > parts[i - 1]) throw ParseError("row lengths read bottom-up must be weakly decreasing");
    }
    return parse_filling(Partition(std::move(parts)), text);
}

std::string render_filling(const Filling& t) { return to_string(t); }

RunResult run(const CommandConfig& config) {
    std::ostringstream out;
    RunResult result;
    Emitter e(out, config.format);
    try {
        const std::string& cmd = config.command;
        if (cmd == "compute") result.exit_code = cmd_compute(config, e);
        else if (cmd == "stats") result.exit_code = cmd_stats(config, e);
        else if (cmd == "tau") result.exit_code = cmd_tau(config, e);
        else if (cmd == "split") result.exit_code = cmd_split(config, e);
        else if (cmd == "verify-factorization") result.exit_code = cmd_verify_factorization(config, e);
        else if (cmd == "verify-bijection") result.exit_code = cmd_verify_bijection(config, e);
        else if (cmd == "verify-involution") result.exit_code = cmd_verify_involution(config, e);
        else if (cmd == "verify-lemmas") result.exit_code = cmd_verify_lemmas(config, e);
        else if (cmd == "verify-symmetry") result.exit_code = cmd_verify_symmetry(config, e);
        else throw InvalidArgumentError("unknown command '" + cmd + "'");
        result.out = out.str();
    } catch (const SymmetryViolationError& ex) {
        result.exit_code = kExitCounterexample;
        result.out = out.str();
        result.err = "error: " + ex.kind() + ": " + ex.what() + "\n";
    } catch (const Error& ex) {
        result.exit_code = kExitInvalid;
        result.out.clear();
        result.err = "error: " + ex.kind() + ": " + ex.what() + "\n";
    } catch (const std::exception& ex) {
        result.exit_code = kExitInvalid;
        result.out.clear();
        result.err = std::string("error: internal: ") + ex.what() + "\n";
    }
    return result;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modified Macdonald polynomials from fillings: computation and bijection checks"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandConfig config;
    std::string shape, mu_prime, filling, format = "human";
    int n = 0, l = 0, vars = 0, max_entry = 0;
    auto* o_shape = app.add_option("--shape", shape, "Partition, comma-separated parts (e.g. 4,3,2)");
    auto* o_mu = app.add_option("--mu-prime", mu_prime, "Body partition mu' of mu = (mu', n^l)");
    auto* o_n = app.add_option("--n", n, "Tail width");
    auto* o_l = app.add_option("--l", l, "Tail height / root-of-unity order");
    auto* o_vars = app.add_option("--vars", vars, "Number of variables (alphabet size)");
    auto* o_filling = app.add_option("--filling", filling, "Filling rows top-down, ';' between rows");
    auto* o_max = app.add_option("--max-entry", max_entry, "Largest entry for the lemma checks");
    app.add_option("--max-states", config.max_states, "Refuse enumerations above this many fillings");
    app.add_option("--workers", config.workers, "Worker threads (0 = hardware concurrency)");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine-lines"}));

    for (const char* name : {"compute", "stats", "tau", "split", "verify-factorization", "verify-bijection",
                             "verify-involution", "verify-lemmas", "verify-symmetry"}) {
        app.add_subcommand(name)->callback([&config, name] { config.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "error: usage: " << ex.what() << '\n';
        return kExitInvalid;
    }

    if (*o_shape) config.shape = shape;
    if (*o_mu) config.mu_prime = mu_prime;
    if (*o_filling) config.filling = filling;
    if (*o_n) config.n = n;
    if (*o_l) config.l = l;
    if (*o_vars) config.vars = vars;
    if (*o_max) config.max_entry = max_entry;
    config.format = format == "machine-lines" ? OutputFormat::MachineLines : OutputFormat::Human;

    const RunResult result = run(config);
    out << result.out;
    err << result.err;
    return result.exit_code;
}

}  // namespace hhl::cli
