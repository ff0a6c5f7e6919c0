#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "hhl/enumeration.hpp"
#include "hhl/error.hpp"
#include "hhl/filling.hpp"
#include "hhl/partition.hpp"

namespace hhl::cli {

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse", what) {}
};

enum class OutputFormat { Human, MachineLines };

struct CommandConfig {
    std::string command;  // compute, stats, tau, split, verify-*
    std::optional<std::string> shape;
    std::optional<std::string> mu_prime;
    std::optional<std::string> filling;
    std::optional<int> n;
    std::optional<int> l;
    std::optional<int> vars;
    std::optional<int> max_entry;
    std::uint64_t max_states = kDefaultMaxStates;
    unsigned workers = 0;
    OutputFormat format = OutputFormat::Human;
};

struct RunResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInvalid = 2;

/// "4,3,2" -> (4,3,2); "" -> empty partition.
Partition parse_shape(std::string_view text);

/// Rows top-down, ';' between rows, ',' between entries.
Filling parse_filling(const Partition& shape, std::string_view text);
/// Shape taken from the row lengths.
Filling parse_filling(std::string_view text);

std::string render_filling(const Filling& t);

/// Runs one command. Never throws: failures become exit code 2 with a single
/// "error: <kind>: <message>" line on the error stream.
RunResult run(const CommandConfig& config);

/// Parses argv with CLI11 and runs the selected command.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace hhl::cli
