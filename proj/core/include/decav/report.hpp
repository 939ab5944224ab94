#pragma once

#include <optional>
#include <string>
#include <vector>

#include "decav/chebyshev.hpp"
#include "decav/classify.hpp"
#include "decav/expansion.hpp"
#include "decav/run_config.hpp"
#include "decav/stats.hpp"

namespace decav {

struct ExactSection {
    Rational average;
    std::string expansion_form; // "0.1(6)_10"
    bool regular = false;       // expansion terminates (canonical b-1 tail)
};

struct ExpansionSection {
    std::string text;
    std::vector<digit_t> preperiod;
    std::vector<digit_t> period;
};

// Everything a run produced, ready for serialization. Identical configs
// produce identical reports; wall_seconds is the one exception and is
// dropped entirely when timing is off.
struct Report {
    RunConfig config;
    std::string subject_label;
    std::vector<Checkpoint> checkpoints;           // avg runs with a prefix
    std::optional<ExactSection> exact;             // rational subjects
    std::optional<ClassificationReport> classification;
    std::optional<ChebyshevCheck> chebyshev;       // pi_check runs
    std::optional<ExpansionSection> expansion;     // expand runs
    std::optional<double> wall_seconds;
};

Report run(const RunConfig& config);

// Serializes in the requested format. Every checkpoint row is re-verified
// against the digit-sum/frequency identity (sum_d d*count_d == digit_sum,
// sum_d count_d == n) immediately before being written; identity_violation
// aborts the emission.
std::string emit(const Report& report, OutputFormat format);

// run + emit + write to config.output_path (or return for stdout).
// The CLI's whole body, reusable from tests.
std::string run_to_string(const RunConfig& config);

} // namespace decav
