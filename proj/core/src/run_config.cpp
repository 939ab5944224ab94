#include "decav/run_config.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <limits>

#include "decav/version.hpp"

namespace decav {

std::string_view command_name(Command c) {
    switch (c) {
    case Command::avg:
        return "avg";
    case Command::classify:
        return "classify";
    case Command::expand:
        return "expand";
    case Command::pi_check:
        return "pi-check";
    }
    return "?";
}

std::string_view format_name(OutputFormat f) {
    switch (f) {
    case OutputFormat::json:
        return "json";
    case OutputFormat::csv:
        return "csv";
    case OutputFormat::plotdata:
        return "plotdata";
    case OutputFormat::text:
        return "text";
    }
    return "?";
}

bool operator==(const SubjectSpec& a, const SubjectSpec& b) {
    if (a.kind != b.kind)
        return false;
    switch (a.kind) {
    case SubjectKind::rational:
        return a.rational == b.rational;
    case SubjectKind::sparse:
        return a.sparse == b.sparse;
    case SubjectKind::constant:
        return a.constant == b.constant;
    case SubjectKind::digit_file:
        return a.file_path == b.file_path;
    case SubjectKind::champernowne:
    case SubjectKind::prime_indicator:
        return true;
    }
    return false;
}

bool operator==(const RunConfig& a, const RunConfig& b) {
    // Execution knobs (chunks/timing/progress) deliberately excluded.
    return a.command == b.command && a.subject == b.subject && a.base == b.base &&
           a.prefix == b.prefix && a.schedule == b.schedule && a.format == b.format &&
           a.output_path == b.output_path && a.zero_threshold == b.zero_threshold &&
           a.a1 == b.a1 && a.a2 == b.a2 && a.n_max == b.n_max && a.q_limit == b.q_limit;
}

namespace {

std::uint64_t parse_u64_token(const std::string& text, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw usage_error(std::string("malformed ") + what + " '" + text + "'");
    return v;
}

// Counts accept plain integers and scientific shorthand: 1e6, 2.5e9.
std::uint64_t parse_count(const std::string& text, const char* what) {
    std::size_t epos = text.find_first_of("eE");
    if (epos == std::string::npos)
        return parse_u64_token(text, what);

    std::string mant = text.substr(0, epos);
    std::string expo = text.substr(epos + 1);
    std::string frac;
    if (std::size_t dot = mant.find('.'); dot != std::string::npos) {
        frac = mant.substr(dot + 1);
        mant = mant.substr(0, dot);
    }
    auto all_digits = [](const std::string& s) {
        return !s.empty() && s.find_first_not_of("0123456789") == std::string::npos;
    };
    if (!all_digits(mant) || !all_digits(expo) || (!frac.empty() && !all_digits(frac)))
        throw usage_error(std::string("malformed ") + what + " '" + text + "'");
    std::uint64_t exp = parse_u64_token(expo, what);
    if (exp > 19 || frac.size() > exp)
        throw usage_error(std::string(what) + " '" + text + "' is not a 64-bit integer");

    unsigned __int128 v = 0;
    for (char c : mant + frac) {
        v = v * 10 + static_cast<unsigned>(c - '0');
        if (v > std::numeric_limits<std::uint64_t>::max())
            throw usage_error(std::string(what) + " '" + text + "' overflows 64 bits");
    }
    for (std::uint64_t i = frac.size(); i < exp; ++i) {
        v *= 10;
        if (v > std::numeric_limits<std::uint64_t>::max())
            throw usage_error(std::string(what) + " '" + text + "' overflows 64 bits");
    }
    return static_cast<std::uint64_t>(v);
}

// Options shared by the subject-taking subcommands.
struct SubjectFlags {
    std::string rational_text;
    std::string sparse_text;
    std::string coeffs_text;
    std::string constant_text;
    std::string file_text;
    unsigned guard = 32;

    CLI::Option* o_rational = nullptr;
    CLI::Option* o_champ = nullptr;
    CLI::Option* o_sparse = nullptr;
    CLI::Option* o_coeffs = nullptr;
    CLI::Option* o_prime = nullptr;
    CLI::Option* o_const = nullptr;
    CLI::Option* o_guard = nullptr;
    CLI::Option* o_file = nullptr;
};

void add_subject_flags(CLI::App* cmd, SubjectFlags& f, bool rational_only) {
    f.o_rational = cmd->add_option("--rational", f.rational_text, "rational subject, p/q");
    if (rational_only)
        return;
    f.o_champ = cmd->add_flag("--champernowne", "concatenated-integers subject");
    f.o_sparse = cmd->add_option("--sparse", f.sparse_text,
                                 "sparse-series subject: factorial | exp(K) | poly(C,J), "
                                 "optionally list(P1,...)+family");
    f.o_coeffs = cmd->add_option("--coeffs", f.coeffs_text,
                                 "cyclic coefficients for --sparse, e.g. 1 or 7,3 (default 1)");
    f.o_prime = cmd->add_flag("--prime-indicator", "prime-indicator subject");
    f.o_const = cmd->add_option("--constant", f.constant_text, "constant subject: sqrt(M) | e | pi");
    f.o_guard = cmd->add_option("--guard", f.guard,
                                "certification guard digits for --constant (default 32)");
    f.o_file = cmd->add_option("--digit-file", f.file_text, "digit-file subject, path");
}

SubjectSpec build_subject(const SubjectFlags& f) {
    int set = 0;
    auto used = [&](CLI::Option* o) { return o != nullptr && o->count() > 0; };
    set += used(f.o_rational) + used(f.o_champ) + used(f.o_sparse) + used(f.o_prime) +
           used(f.o_const) + used(f.o_file);
    if (set == 0)
        throw usage_error("exactly one subject is required: --rational, --champernowne, --sparse, "
                          "--prime-indicator, --constant, or --digit-file");
    if (set > 1)
        throw usage_error("conflicting subjects: give exactly one");
    if (used(f.o_coeffs) && !used(f.o_sparse))
        throw usage_error("--coeffs only applies to --sparse");
    if (used(f.o_guard) && !used(f.o_const))
        throw usage_error("--guard only applies to --constant");

    SubjectSpec s;
    try {
        if (used(f.o_rational)) {
            s.kind = SubjectKind::rational;
            s.rational = parse_rational(f.rational_text);
            Rational a = abs(s.rational);
            a.canonicalize();
            if (a.get_num() % a.get_den() == 0)
                throw usage_error("rational subject " + f.rational_text +
                                  " has a zero fractional part; zero has no non-terminating "
                                  "expansion");
        } else if (used(f.o_champ)) {
            s.kind = SubjectKind::champernowne;
        } else if (used(f.o_sparse)) {
            s.kind = SubjectKind::sparse;
            s.sparse = parse_sparse_family(f.sparse_text);
            if (used(f.o_coeffs)) {
                s.sparse.coefficients.clear();
                std::size_t start = 0;
                const std::string& t = f.coeffs_text;
                while (start <= t.size()) {
                    auto comma = t.find(',', start);
                    std::string piece =
                        t.substr(start, comma == std::string::npos ? std::string::npos
                                                                   : comma - start);
                    std::uint64_t v = parse_u64_token(piece, "coefficient");
                    if (v < 1 || v > 9)
                        throw usage_error("sparse coefficients must lie in [1,9], got " + piece);
                    s.sparse.coefficients.push_back(static_cast<digit_t>(v));
                    if (comma == std::string::npos)
                        break;
                    start = comma + 1;
                }
            }
            validate(s.sparse);
        } else if (used(f.o_prime)) {
            s.kind = SubjectKind::prime_indicator;
        } else if (used(f.o_const)) {
            s.kind = SubjectKind::constant;
            s.constant = parse_constant_spec(f.constant_text);
            if (used(f.o_guard))
                s.constant.guard_digits = f.guard;
            validate(s.constant);
        } else {
            s.kind = SubjectKind::digit_file;
            s.file_path = f.file_text;
        }
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
    return s;
}

CheckpointSchedule parse_schedule(const std::string& text) {
    if (text == "pow10")
        return CheckpointSchedule::pow10();
    if (text == "pow2")
        return CheckpointSchedule::pow2();
    std::vector<std::uint64_t> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        std::string piece =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        points.push_back(parse_count(piece, "checkpoint position"));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    try {
        return CheckpointSchedule::at(std::move(points));
    } catch (const std::invalid_argument& e) {
        throw usage_error(e.what());
    }
}

std::string schedule_text(const CheckpointSchedule& s) {
    switch (s.kind) {
    case CheckpointSchedule::Kind::pow10:
        return "pow10";
    case CheckpointSchedule::Kind::pow2:
        return "pow2";
    case CheckpointSchedule::Kind::explicit_list: {
        std::string out;
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(s.points[i]);
        }
        return out;
    }
    }
    return "?";
}

OutputFormat parse_format(const std::string& text, std::initializer_list<OutputFormat> allowed) {
    OutputFormat f;
    if (text == "json")
        f = OutputFormat::json;
    else if (text == "csv")
        f = OutputFormat::csv;
    else if (text == "plotdata")
        f = OutputFormat::plotdata;
    else if (text == "text")
        f = OutputFormat::text;
    else
        throw usage_error("unknown format '" + text + "'");
    for (OutputFormat a : allowed)
        if (f == a)
            return f;
    throw usage_error("format '" + text + "' is not available for this command");
}

Base parse_base(int value) {
    try {
        return Base::of(value);
    } catch (const std::out_of_range& e) {
        throw usage_error(e.what());
    }
}

Rational parse_rational_flag(const std::string& text, const char* what) {
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw usage_error(std::string("malformed ") + what + " '" + text + "' (expected p/q)");
    }
}

bool subject_supports_chunks(SubjectKind kind) {
    // From-position construction exists exactly where a digit's value is
    // computable without generating its predecessors.
    return kind == SubjectKind::sparse || kind == SubjectKind::prime_indicator;
}

bool subject_is_base10_only(SubjectKind kind) {
    return kind == SubjectKind::sparse || kind == SubjectKind::prime_indicator ||
           kind == SubjectKind::constant;
}

} // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"exact and empirical digit averages of real numbers"};
    app.name("decav");
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("decav ") + version_string);

    // ---- avg ----
    CLI::App* avg = app.add_subcommand("avg", "digit averages (exact for rationals, "
                                              "checkpointed empirics for streams)");
    SubjectFlags avg_subject;
    add_subject_flags(avg, avg_subject, false);
    int avg_base = 10;
    avg->add_option("--base", avg_base, "positional base, 2..36 (default 10)");
    std::string avg_prefix;
    CLI::Option* o_avg_prefix =
        avg->add_option("--prefix", avg_prefix, "digits to stream (accepts 1e6 shorthand)");
    std::string avg_ckpt = "pow10";
    avg->add_option("--checkpoints", avg_ckpt, "pow10 | pow2 | N1,N2,... (default pow10)");
    std::string avg_fmt = "json";
    avg->add_option("--format", avg_fmt, "json | csv | plotdata (default json)");
    std::string avg_out;
    avg->add_option("--output", avg_out, "write the report here instead of stdout");
    std::uint64_t avg_qlimit = default_denominator_limit;
    avg->add_option("--q-limit", avg_qlimit, "largest denominator expanded exactly");
    unsigned avg_chunks = 1;
    avg->add_option("--chunks", avg_chunks, "parallel workers (positional subjects only)");
    bool avg_no_timing = false;
    avg->add_flag("--no-timing", avg_no_timing, "omit wall time from the report");
    bool avg_progress = false;
    avg->add_flag("--progress", avg_progress, "digit-rate progress on stderr");

    // ---- classify ----
    CLI::App* classify = app.add_subcommand("classify", "irrationality verdicts: proofs where "
                                                        "analysis allows, graded evidence otherwise");
    SubjectFlags cls_subject;
    add_subject_flags(classify, cls_subject, false);
    int cls_base = 10;
    classify->add_option("--base", cls_base, "positional base for rational subjects");
    std::string cls_prefix;
    CLI::Option* o_cls_prefix =
        classify->add_option("--prefix", cls_prefix, "evidence prefix length (accepts 1e6 shorthand)");
    std::string cls_threshold = "1/100";
    classify->add_option("--threshold", cls_threshold,
                         "zero-evidence threshold, rational in (0,1) (default 1/100)");
    std::string cls_fmt = "json";
    classify->add_option("--format", cls_fmt, "json | csv | plotdata (default json)");
    std::string cls_out;
    classify->add_option("--output", cls_out, "write the report here instead of stdout");
    std::uint64_t cls_qlimit = default_denominator_limit;
    classify->add_option("--q-limit", cls_qlimit, "largest denominator expanded exactly");
    bool cls_no_timing = false;
    classify->add_flag("--no-timing", cls_no_timing, "omit wall time from the report");

    // ---- expand ----
    CLI::App* expand = app.add_subcommand("expand", "eventually periodic expansion of a rational");
    SubjectFlags exp_subject;
    add_subject_flags(expand, exp_subject, true);
    int exp_base = 10;
    expand->add_option("--base", exp_base, "positional base, 2..36 (default 10)");
    std::string exp_fmt = "text";
    expand->add_option("--format", exp_fmt, "text | json (default text)");
    std::string exp_out;
    expand->add_option("--output", exp_out, "write the result here instead of stdout");
    std::uint64_t exp_qlimit = default_denominator_limit;
    expand->add_option("--q-limit", exp_qlimit, "largest denominator expanded exactly");
    bool exp_no_timing = false;
    expand->add_flag("--no-timing", exp_no_timing, "omit wall time from the report");

    // ---- pi-check ----
    CLI::App* pic = app.add_subcommand("pi-check", "certified Chebyshev bracket check on pi(n)");
    std::string pic_a1 = "1/2";
    pic->add_option("--a1", pic_a1, "lower constant (default 1/2)");
    std::string pic_a2 = "2";
    pic->add_option("--a2", pic_a2, "upper constant (default 2)");
    std::string pic_nmax;
    CLI::Option* o_pic_nmax =
        pic->add_option("--n-max", pic_nmax, "check 2 <= n <= n-max (default 10^6)");
    std::string pic_fmt = "json";
    pic->add_option("--format", pic_fmt, "json | text (default json)");
    std::string pic_out;
    pic->add_option("--output", pic_out, "write the report here instead of stdout");
    bool pic_no_timing = false;
    pic->add_flag("--no-timing", pic_no_timing, "omit wall time from the report");

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size() + 1);
        argv.push_back("decav");
        for (const std::string& a : args)
            argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        throw help_requested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw help_requested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::CallForVersion&) {
        throw help_requested(std::string("decav ") + version_string);
    } catch (const CLI::ParseError& e) {
        throw usage_error(e.what());
    }

    RunConfig cfg;

    if (app.got_subcommand(avg)) {
        cfg.command = Command::avg;
        cfg.subject = build_subject(avg_subject);
        cfg.base = parse_base(avg_base);
        cfg.format = parse_format(avg_fmt, {OutputFormat::json, OutputFormat::csv,
                                            OutputFormat::plotdata});
        cfg.output_path = avg_out;
        cfg.q_limit = avg_qlimit;
        cfg.chunks = avg_chunks;
        cfg.timing = !avg_no_timing;
        cfg.progress = avg_progress;
        cfg.schedule = parse_schedule(avg_ckpt);
        if (o_avg_prefix->count() > 0) {
            std::uint64_t avg_prefix_v = parse_count(avg_prefix, "--prefix");
            if (avg_prefix_v == 0)
                throw usage_error("--prefix must be >= 1");
            cfg.prefix = avg_prefix_v;
        }
        if (!cfg.prefix && cfg.subject->kind != SubjectKind::rational)
            throw usage_error("--prefix is required for stream subjects");
        if (cfg.prefix && cfg.schedule.kind == CheckpointSchedule::Kind::explicit_list)
            for (std::uint64_t p : cfg.schedule.points)
                if (p > *cfg.prefix)
                    throw usage_error("checkpoint position " + std::to_string(p) +
                                      " exceeds --prefix " + std::to_string(*cfg.prefix));
        if (cfg.chunks == 0)
            throw usage_error("--chunks must be >= 1");
        if (cfg.chunks > 1 && !subject_supports_chunks(cfg.subject->kind))
            throw usage_error("subject does not support chunk-parallel runs (needs from-position "
                              "construction: --sparse or --prime-indicator)");
    } else if (app.got_subcommand(classify)) {
        cfg.command = Command::classify;
        cfg.subject = build_subject(cls_subject);
        cfg.base = parse_base(cls_base);
        cfg.format = parse_format(cls_fmt, {OutputFormat::json, OutputFormat::csv,
                                            OutputFormat::plotdata});
        cfg.output_path = cls_out;
        cfg.q_limit = cls_qlimit;
        cfg.timing = !cls_no_timing;
        cfg.zero_threshold = parse_rational_flag(cls_threshold, "threshold");
        if (cfg.zero_threshold <= 0 || cfg.zero_threshold >= 1)
            throw usage_error("--threshold must lie strictly between 0 and 1");
        if (o_cls_prefix->count() > 0) {
            std::uint64_t cls_prefix_v = parse_count(cls_prefix, "--prefix");
            if (cls_prefix_v == 0)
                throw usage_error("--prefix must be >= 1");
            cfg.prefix = cls_prefix_v;
        }
        bool needs_prefix = cfg.subject->kind == SubjectKind::champernowne ||
                            cfg.subject->kind == SubjectKind::constant ||
                            cfg.subject->kind == SubjectKind::digit_file ||
                            cfg.subject->kind == SubjectKind::prime_indicator;
        if (needs_prefix && !cfg.prefix)
            throw usage_error("--prefix is required to classify this subject");
    } else if (app.got_subcommand(expand)) {
        cfg.command = Command::expand;
        cfg.subject = build_subject(exp_subject);
        cfg.base = parse_base(exp_base);
        cfg.format = parse_format(exp_fmt, {OutputFormat::text, OutputFormat::json});
        cfg.output_path = exp_out;
        cfg.q_limit = exp_qlimit;
        cfg.timing = !exp_no_timing;
    } else {
        cfg.command = Command::pi_check;
        cfg.format = parse_format(pic_fmt, {OutputFormat::json, OutputFormat::text});
        cfg.output_path = pic_out;
        cfg.timing = !pic_no_timing;
        cfg.a1 = parse_rational_flag(pic_a1, "a1");
        cfg.a2 = parse_rational_flag(pic_a2, "a2");
        if (o_pic_nmax->count() > 0)
            cfg.n_max = parse_count(pic_nmax, "--n-max");
        if (cfg.a1 <= 0 || cfg.a1 >= cfg.a2)
            throw usage_error("constants must satisfy 0 < a1 < a2");
        if (cfg.n_max < 2)
            throw usage_error("--n-max must be >= 2");
    }

    // Common guards.
    if (cfg.q_limit >= std::numeric_limits<std::uint32_t>::max())
        throw usage_error("--q-limit must fit 32 bits (the remainder table is O(q))");
    if (cfg.subject && subject_is_base10_only(cfg.subject->kind) && cfg.base != Base::of(10))
        throw usage_error("this subject is defined in base 10 only");

    return cfg;
}

std::vector<std::string> echo_argv(const RunConfig& cfg) {
    std::vector<std::string> out{std::string(command_name(cfg.command))};

    if (cfg.subject) {
        const SubjectSpec& s = *cfg.subject;
        switch (s.kind) {
        case SubjectKind::rational:
            out.push_back("--rational");
            out.push_back(rational_to_string(s.rational));
            break;
        case SubjectKind::champernowne:
            out.push_back("--champernowne");
            break;
        case SubjectKind::sparse: {
            out.push_back("--sparse");
            out.push_back(sparse_family_text(s.sparse));
            out.push_back("--coeffs");
            std::string c;
            for (std::size_t i = 0; i < s.sparse.coefficients.size(); ++i) {
                if (i > 0)
                    c += ',';
                c += std::to_string(s.sparse.coefficients[i]);
            }
            out.push_back(c);
            break;
        }
        case SubjectKind::prime_indicator:
            out.push_back("--prime-indicator");
            break;
        case SubjectKind::constant:
            out.push_back("--constant");
            out.push_back(s.constant.name());
            if (s.constant.guard_digits != 32) {
                out.push_back("--guard");
                out.push_back(std::to_string(s.constant.guard_digits));
            }
            break;
        case SubjectKind::digit_file:
            out.push_back("--digit-file");
            out.push_back(s.file_path);
            break;
        }
    }

    auto push_kv = [&out](const char* k, std::string v) {
        out.emplace_back(k);
        out.push_back(std::move(v));
    };

    switch (cfg.command) {
    case Command::avg:
        push_kv("--base", std::to_string(cfg.base.value()));
        if (cfg.prefix)
            push_kv("--prefix", std::to_string(*cfg.prefix));
        push_kv("--checkpoints", schedule_text(cfg.schedule));
        push_kv("--format", std::string(format_name(cfg.format)));
        if (!cfg.output_path.empty())
            push_kv("--output", cfg.output_path);
        if (cfg.q_limit != default_denominator_limit)
            push_kv("--q-limit", std::to_string(cfg.q_limit));
        break;
    case Command::classify:
        push_kv("--base", std::to_string(cfg.base.value()));
        if (cfg.prefix)
            push_kv("--prefix", std::to_string(*cfg.prefix));
        push_kv("--threshold", rational_to_string(cfg.zero_threshold));
        push_kv("--format", std::string(format_name(cfg.format)));
        if (!cfg.output_path.empty())
            push_kv("--output", cfg.output_path);
        if (cfg.q_limit != default_denominator_limit)
            push_kv("--q-limit", std::to_string(cfg.q_limit));
        break;
    case Command::expand:
        push_kv("--base", std::to_string(cfg.base.value()));
        push_kv("--format", std::string(format_name(cfg.format)));
        if (!cfg.output_path.empty())
            push_kv("--output", cfg.output_path);
        if (cfg.q_limit != default_denominator_limit)
            push_kv("--q-limit", std::to_string(cfg.q_limit));
        break;
    case Command::pi_check:
        push_kv("--a1", rational_to_string(cfg.a1));
        push_kv("--a2", rational_to_string(cfg.a2));
        push_kv("--n-max", std::to_string(cfg.n_max));
        push_kv("--format", std::string(format_name(cfg.format)));
        if (!cfg.output_path.empty())
            push_kv("--output", cfg.output_path);
        break;
    }
    return out;
}

} // namespace decav
