#include "decav/report.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

#include "decav/champernowne.hpp"
#include "decav/constants.hpp"
#include "decav/digit_file.hpp"
#include "decav/primes.hpp"
#include "decav/version.hpp"

namespace decav {

namespace {

using nlohmann::json;

std::string subject_label(const SubjectSpec& s, Base base) {
    switch (s.kind) {
    case SubjectKind::rational:
        return "rational(" + rational_to_string(s.rational) + ", base=" +
               std::to_string(base.value()) + ")";
    case SubjectKind::champernowne:
        return "champernowne(base=" + std::to_string(base.value()) + ")";
    case SubjectKind::sparse: {
        std::string c;
        for (std::size_t i = 0; i < s.sparse.coefficients.size(); ++i) {
            if (i > 0)
                c += ',';
            c += std::to_string(s.sparse.coefficients[i]);
        }
        return "sparse(" + sparse_family_text(s.sparse) + ", coeffs=" + c + ")";
    }
    case SubjectKind::prime_indicator:
        return "prime-indicator";
    case SubjectKind::constant:
        return s.constant.name();
    case SubjectKind::digit_file:
        return "digit-file(" + s.file_path + ")";
    }
    return "?";
}

StreamFactory subject_factory(const SubjectSpec& s, Base base) {
    auto from_start_only = [](auto make) {
        return [make](std::uint64_t start) -> std::unique_ptr<DigitStream> {
            if (start != 1)
                throw std::invalid_argument(
                    "this subject has no from-position construction; start must be 1");
            return make();
        };
    };
    switch (s.kind) {
    case SubjectKind::rational:
        return from_start_only([r = s.rational, base] { return rational_stream(r, base); });
    case SubjectKind::champernowne:
        return from_start_only([base] { return champernowne(base); });
    case SubjectKind::sparse:
        return [spec = s.sparse](std::uint64_t start) { return sparse_series(spec, start); };
    case SubjectKind::prime_indicator:
        return [](std::uint64_t start) { return prime_indicator(start); };
    case SubjectKind::constant:
        return from_start_only([spec = s.constant] { return constant_digits(spec); });
    case SubjectKind::digit_file:
        return from_start_only([path = s.file_path] { return from_digit_file(path); });
    }
    throw std::logic_error("unreachable subject kind");
}

// The serialization-time cross-check: counts and digit_sum were accumulated
// by independent routes, and no row leaves the process unless they agree.
void verify_row(const Checkpoint& cp, Base base) {
    u128 weighted = 0;
    std::uint64_t total = 0;
    for (unsigned d = 0; d < cp.counts.size(); ++d) {
        if (d > base.max_digit() && cp.counts[d] != 0)
            throw identity_violation("checkpoint row at n=" + std::to_string(cp.n) +
                                     " counts a digit outside base " +
                                     std::to_string(base.value()));
        weighted += static_cast<u128>(cp.counts[d]) * d;
        total += cp.counts[d];
    }
    if (weighted != cp.digit_sum || total != cp.n)
        throw identity_violation(
            "checkpoint row at n=" + std::to_string(cp.n) +
            " fails the digit-sum/frequency identity (sum_d d*count_d = " +
            u128_to_string(weighted) + " vs digit_sum = " + u128_to_string(cp.digit_sum) +
            ", sum_d count_d = " + std::to_string(total) + " vs n = " + std::to_string(cp.n) + ")");
}

json checkpoint_json(const Checkpoint& cp, Base base) {
    verify_row(cp, base);
    Rational avg = cp.average();
    json row;
    row["n"] = cp.n;
    row["digit_sum"] = u128_to_string(cp.digit_sum);
    row["average"] = rational_to_string(avg);
    row["average_decimal"] = decimal_string(avg);
    json omega = json::array();
    for (unsigned d = 0; d <= base.max_digit(); ++d)
        omega.push_back(rational_to_string(cp.frequency(d)));
    row["omega"] = omega;
    return row;
}

void checkpoint_csv(std::ostringstream& out, const Checkpoint& cp, Base base) {
    verify_row(cp, base);
    Rational avg = cp.average();
    out << cp.n << ',' << u128_to_string(cp.digit_sum) << ',' << rational_to_string(avg) << ','
        << decimal_string(avg);
    for (unsigned d = 0; d <= base.max_digit(); ++d)
        out << ',' << rational_to_string(cp.frequency(d));
    out << '\n';
}

const std::vector<Checkpoint>& report_rows(const Report& rep) {
    if (rep.classification)
        return rep.classification->evidence;
    return rep.checkpoints;
}

std::string emit_json(const Report& rep) {
    const RunConfig& cfg = rep.config;
    json j;
    j["schema"] = 1;
    j["version"] = version_string;
    j["command"] = std::string(command_name(cfg.command));
    j["argv"] = echo_argv(cfg);
    if (cfg.subject)
        j["subject"] = rep.subject_label;
    if (cfg.command != Command::pi_check)
        j["base"] = cfg.base.value();
    if (cfg.prefix)
        j["prefix"] = *cfg.prefix;

    if (!rep.checkpoints.empty() || (cfg.command == Command::avg && cfg.prefix)) {
        json rows = json::array();
        for (const Checkpoint& cp : rep.checkpoints)
            rows.push_back(checkpoint_json(cp, cfg.base));
        j["checkpoints"] = rows;
    }

    if (rep.exact) {
        json ex;
        ex["average"] = rational_to_string(rep.exact->average);
        ex["average_decimal"] = decimal_string(rep.exact->average);
        ex["expansion"] = rep.exact->expansion_form;
        ex["regular"] = rep.exact->regular;
        j["exact"] = ex;
    }

    if (rep.classification) {
        const ClassificationReport& c = *rep.classification;
        json cl;
        cl["verdict"] = std::string(verdict_name(c.verdict));
        cl["justification"] = c.justification;
        if (c.exact_average) {
            cl["exact_average"] = rational_to_string(*c.exact_average);
            cl["exact_average_decimal"] = decimal_string(*c.exact_average);
        }
        if (c.analytic_limit)
            cl["analytic_limit"] = rational_to_string(*c.analytic_limit);
        if (c.zero_threshold)
            cl["threshold"] = rational_to_string(*c.zero_threshold);
        if (c.prefix_n > 0)
            cl["prefix_n"] = c.prefix_n;
        json rows = json::array();
        for (const Checkpoint& cp : c.evidence) {
            verify_row(cp, cfg.base);
            json row;
            row["n"] = cp.n;
            row["average"] = rational_to_string(cp.average());
            row["average_decimal"] = decimal_string(cp.average());
            rows.push_back(row);
        }
        cl["evidence"] = rows;
        j["classification"] = cl;
    }

    if (rep.chebyshev) {
        const ChebyshevCheck& c = *rep.chebyshev;
        json ch;
        ch["a1"] = rational_to_string(c.a1);
        ch["a2"] = rational_to_string(c.a2);
        ch["n_max"] = c.n_max;
        ch["violation_count"] = c.violations.size();
        json rows = json::array();
        for (const ChebyshevViolation& v : c.violations) {
            json row;
            row["n"] = v.n;
            row["pi"] = v.prime_count;
            row["bound"] = v.bound == ChebyshevViolation::Bound::lower ? "lower" : "upper";
            rows.push_back(row);
        }
        ch["violations"] = rows;
        j["chebyshev"] = ch;
    }

    if (rep.expansion) {
        json ex;
        ex["text"] = rep.expansion->text;
        ex["preperiod"] = render_digits(rep.expansion->preperiod);
        ex["period"] = render_digits(rep.expansion->period);
        ex["preperiod_length"] = rep.expansion->preperiod.size();
        ex["period_length"] = rep.expansion->period.size();
        j["expansion"] = ex;
    }

    if (rep.wall_seconds)
        j["wall_time_s"] = *rep.wall_seconds;

    return j.dump(2) + "\n";
}

std::string emit_csv(const Report& rep) {
    const Base base = rep.config.base;
    std::ostringstream out;
    out << "n,digit_sum,average,average_decimal";
    for (unsigned d = 0; d <= base.max_digit(); ++d)
        out << ",omega_" << d;
    out << '\n';
    for (const Checkpoint& cp : report_rows(rep))
        checkpoint_csv(out, cp, base);
    return out.str();
}

std::string emit_plotdata(const Report& rep) {
    std::ostringstream out;
    out << "# n average\n";
    for (const Checkpoint& cp : report_rows(rep)) {
        verify_row(cp, rep.config.base);
        out << cp.n << ' ' << decimal_string(cp.average()) << '\n';
    }
    return out.str();
}

std::string emit_text(const Report& rep) {
    std::ostringstream out;
    if (rep.expansion) {
        out << rep.expansion->text << '\n';
        return out.str();
    }
    if (rep.chebyshev) {
        const ChebyshevCheck& c = *rep.chebyshev;
        out << "pi-check a1=" << rational_to_string(c.a1) << " a2=" << rational_to_string(c.a2)
            << " n_max=" << c.n_max << '\n';
        if (c.violations.empty()) {
            out << "violations: none (both strict bounds certified on 2 <= n <= " << c.n_max
                << ")\n";
        } else {
            out << "violations: " << c.violations.size() << '\n';
            for (const ChebyshevViolation& v : c.violations)
                out << "  n=" << v.n << " pi=" << v.prime_count << " bound="
                    << (v.bound == ChebyshevViolation::Bound::lower ? "lower" : "upper") << '\n';
        }
        return out.str();
    }
    throw std::logic_error("text format has no renderer for this report");
}

} // namespace

Report run(const RunConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    Report rep;
    rep.config = config;

    switch (config.command) {
    case Command::avg: {
        const SubjectSpec& s = *config.subject;
        rep.subject_label = subject_label(s, config.base);
        if (s.kind == SubjectKind::rational) {
            try {
                ExactSection ex;
                ex.average = exact_average(s.rational, config.base, config.q_limit);
                ex.expansion_form =
                    expansion_text(expand(s.rational, config.base, config.q_limit));
                ex.regular = is_regular(s.rational, config.base);
                rep.exact = ex;
            } catch (const error&) {
                // Denominator beyond the exact limit: still fine if a stream
                // prefix was requested; otherwise the run has nothing to say.
                if (!config.prefix)
                    throw;
            }
        }
        if (config.prefix) {
            StreamFactory factory = subject_factory(s, config.base);
            if (config.chunks > 1) {
                StreamStats stats = consume_chunked(config.base, factory, *config.prefix,
                                                    config.schedule, config.chunks);
                rep.checkpoints = stats.running.checkpoints;
            } else {
                auto stream = factory(1);
                StreamStats stats(config.base);
                consume(stats, *stream, *config.prefix, config.schedule);
                rep.checkpoints = stats.running.checkpoints;
            }
        }
        break;
    }
    case Command::classify: {
        const SubjectSpec& s = *config.subject;
        rep.subject_label = subject_label(s, config.base);
        switch (s.kind) {
        case SubjectKind::rational:
            rep.classification = classify_rational(s.rational, config.base, config.q_limit);
            break;
        case SubjectKind::sparse:
            rep.classification = classify_sparse(s.sparse);
            break;
        case SubjectKind::prime_indicator:
            rep.classification = classify_prime_indicator(*config.prefix);
            break;
        default: {
            auto stream = subject_factory(s, config.base)(1);
            rep.classification =
                classify_stream(*stream, *config.prefix, config.zero_threshold);
            break;
        }
        }
        break;
    }
    case Command::expand: {
        const SubjectSpec& s = *config.subject;
        rep.subject_label = subject_label(s, config.base);
        RationalExpansion e = expand(s.rational, config.base, config.q_limit);
        rep.expansion = ExpansionSection{expansion_text(e), e.preperiod, e.period};
        ExactSection ex;
        ex.average = exact_average(s.rational, config.base, config.q_limit);
        ex.expansion_form = rep.expansion->text;
        ex.regular = is_regular(s.rational, config.base);
        rep.exact = ex;
        break;
    }
    case Command::pi_check:
        rep.subject_label = "pi(n) against n/ln n";
        rep.chebyshev = chebyshev_check(config.a1, config.a2, config.n_max);
        break;
    }

    if (config.timing) {
        std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
        rep.wall_seconds = dt.count();
    }
    return rep;
}

std::string emit(const Report& rep, OutputFormat format) {
    switch (format) {
    case OutputFormat::json:
        return emit_json(rep);
    case OutputFormat::csv:
        return emit_csv(rep);
    case OutputFormat::plotdata:
        return emit_plotdata(rep);
    case OutputFormat::text:
        return emit_text(rep);
    }
    throw std::logic_error("unreachable format");
}

std::string run_to_string(const RunConfig& config) {
    Report rep = run(config);
    std::string bytes = emit(rep, config.format);
    if (!config.output_path.empty()) {
        std::ofstream out(config.output_path, std::ios::binary | std::ios::trunc);
        if (!out)
            throw io_error("cannot open output file '" + config.output_path + "'");
        out << bytes;
        out.flush();
        if (!out)
            throw io_error("failed writing output file '" + config.output_path + "'");
        return {};
    }
    return bytes;
}

} // namespace decav
