#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "decav/base.hpp"
#include "decav/constants.hpp"
#include "decav/errors.hpp"
#include "decav/expansion.hpp"
#include "decav/rational.hpp"
#include "decav/sparse.hpp"
#include "decav/stats.hpp"

namespace decav {

enum class Command { avg, classify, expand, pi_check };
enum class OutputFormat { json, csv, plotdata, text };

std::string_view command_name(Command c);
std::string_view format_name(OutputFormat f);

enum class SubjectKind { rational, champernowne, sparse, prime_indicator, constant, digit_file };

// Exactly one subject per run. The variant payloads are small, so a plain
// struct with a kind tag reads better here than std::variant visitation.
struct SubjectSpec {
    SubjectKind kind = SubjectKind::rational;
    Rational rational;        // kind == rational
    SparseSeriesSpec sparse;  // kind == sparse
    ConstantSpec constant;    // kind == constant
    std::string file_path;    // kind == digit_file

    friend bool operator==(const SubjectSpec& a, const SubjectSpec& b);
};

// Parsed, validated run configuration. The semantic fields — everything that
// determines *what* is computed — round-trip through echo_argv/parse_args
// and participate in operator==. chunks/timing/progress are execution knobs:
// they change how digits are tallied, never what is tallied, and are
// excluded from both (chunk-parallel runs must be byte-identical to
// single-pass runs, echo included).
struct RunConfig {
    Command command = Command::avg;
    std::optional<SubjectSpec> subject; // absent for pi_check
    Base base = Base::of(10);
    std::optional<std::uint64_t> prefix;
    CheckpointSchedule schedule;
    OutputFormat format = OutputFormat::json;
    std::string output_path; // empty = stdout
    Rational zero_threshold = Rational(1, 100); // classify
    Rational a1 = Rational(1, 2);               // pi_check
    Rational a2 = Rational(2);                  // pi_check
    std::uint64_t n_max = 1'000'000;            // pi_check
    std::uint64_t q_limit = default_denominator_limit;

    // Execution knobs (not semantics; see above).
    unsigned chunks = 1;
    bool timing = true;
    bool progress = false;

    friend bool operator==(const RunConfig& a, const RunConfig& b);
};

// Thrown by parse_args when --help/--version is requested; carries the text
// to print. Not an error: the CLI exits 0.
class help_requested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// args are the tokens after the program name. Throws usage_error with a
// human-readable message on any rejection (unknown flag, missing/duplicate
// subject, malformed rational, base out of range, ...).
RunConfig parse_args(const std::vector<std::string>& args);

// Canonical argv echo of the semantic fields; parse_args(echo_argv(c)) == c.
std::vector<std::string> echo_argv(const RunConfig& config);

} // namespace decav
