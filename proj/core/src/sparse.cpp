#include "decav/sparse.hpp"

#include <charconv>
#include <limits>
#include <stdexcept>

namespace decav {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

std::uint64_t parse_u64(const std::string& text, const char* what) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument(std::string("malformed ") + what + " '" + text + "'");
    return v;
}

// Splits "name(arg1,arg2)" into name and args; plain "name" yields no args.
struct Call {
    std::string name;
    std::vector<std::string> args;
};

Call parse_call(const std::string& text) {
    auto open = text.find('(');
    if (open == std::string::npos)
        return {text, {}};
    if (text.back() != ')')
        throw std::invalid_argument("malformed family '" + text + "' (missing ')')");
    Call c;
    c.name = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    std::size_t start = 0;
    while (start <= inner.size()) {
        auto comma = inner.find(',', start);
        if (comma == std::string::npos) {
            c.args.push_back(inner.substr(start));
            break;
        }
        c.args.push_back(inner.substr(start, comma - start));
        start = comma + 1;
    }
    return c;
}

} // namespace

Integer SparseSeriesSpec::position(std::uint64_t n) const {
    if (n == 0)
        throw std::invalid_argument("support index is 1-based");
    if (n <= explicit_positions.size())
        return Integer(static_cast<unsigned long>(explicit_positions[n - 1]));
    return std::visit(
        overloaded{
            [&](Factorial) {
                Integer t;
                mpz_fac_ui(t.get_mpz_t(), n);
                return t;
            },
            [&](Exponential e) {
                Integer t;
                mpz_ui_pow_ui(t.get_mpz_t(), e.base, n);
                return t;
            },
            [&](Polynomial p) {
                Integer t;
                mpz_ui_pow_ui(t.get_mpz_t(), n, p.degree);
                t *= static_cast<unsigned long>(p.scale);
                return t;
            },
        },
        family);
}

digit_t SparseSeriesSpec::coefficient(std::uint64_t n) const {
    if (n == 0)
        throw std::invalid_argument("support index is 1-based");
    return coefficients[(n - 1) % coefficients.size()];
}

void validate(const SparseSeriesSpec& spec) {
    if (spec.coefficients.empty())
        throw std::invalid_argument("sparse series needs at least one coefficient");
    for (digit_t c : spec.coefficients)
        if (c < 1 || c > 9)
            throw std::invalid_argument("sparse coefficients must lie in [1,9], got " +
                                        std::to_string(c));
    std::visit(overloaded{
                   [](SparseSeriesSpec::Factorial) {},
                   [](SparseSeriesSpec::Exponential e) {
                       if (e.base < 2)
                           throw std::invalid_argument("exponential position base must be >= 2");
                   },
                   [](SparseSeriesSpec::Polynomial p) {
                       if (p.scale < 1)
                           throw std::invalid_argument("polynomial position scale must be >= 1");
                       if (p.degree < 1)
                           throw std::invalid_argument("polynomial position degree must be >= 1");
                   },
               },
               spec.family);
    for (std::size_t i = 0; i < spec.explicit_positions.size(); ++i) {
        if (spec.explicit_positions[i] < 1)
            throw std::invalid_argument("support positions are 1-based; got 0");
        if (i > 0 && spec.explicit_positions[i] <= spec.explicit_positions[i - 1])
            throw std::invalid_argument("explicit positions must be strictly increasing");
    }
    if (!spec.explicit_positions.empty()) {
        // The family takes over at index L+1 and must continue strictly
        // above the explicit prefix.
        Integer next = spec.position(spec.explicit_positions.size() + 1);
        if (next <= static_cast<unsigned long>(spec.explicit_positions.back()))
            throw std::invalid_argument(
                "position family does not continue above the explicit prefix (a_" +
                std::to_string(spec.explicit_positions.size() + 1) + " = " + next.get_str() +
                " <= " + std::to_string(spec.explicit_positions.back()) + ")");
    }
}

Rational support_density_limit(const SparseSeriesSpec& spec) {
    validate(spec);
    if (const auto* poly = std::get_if<SparseSeriesSpec::Polynomial>(&spec.family);
        poly != nullptr && poly->degree == 1)
        return make_rational(Integer(1), Integer(static_cast<unsigned long>(poly->scale)));
    return Rational(0);
}

namespace {

class SparseStream final : public DigitStream {
public:
    SparseStream(SparseSeriesSpec spec, std::uint64_t start)
        : DigitStream(Base::of(10),
                      "sparse(" + sparse_family_text(spec) + ", coeffs=" +
                          [&spec] {
                              std::string s;
                              for (digit_t c : spec.coefficients) {
                                  if (!s.empty())
                                      s += ',';
                                  s += std::to_string(c);
                              }
                              return s;
                          }() +
                          ")"),
          spec_(std::move(spec)), pos_(start) {
        validate(spec_);
        if (start == 0)
            throw std::invalid_argument("start position is 1-based");
        support_ = spec_.position(idx_);
        refresh_support();
        // Supports strictly before the window contribute nothing here.
        while (support_fits_ && support64_ < pos_)
            advance();
    }

protected:
    void produce(std::vector<std::uint8_t>& buf) override {
        std::size_t want = 4096;
        buf.reserve(want);
        while (want > 0) {
            if (support_fits_ && support64_ == pos_) {
                buf.push_back(spec_.coefficient(idx_));
                ++pos_;
                --want;
                advance();
            } else {
                // Next support is beyond pos_ (possibly beyond 2^64): zeros.
                std::uint64_t zeros = want;
                if (support_fits_)
                    zeros = std::min<std::uint64_t>(want, support64_ - pos_);
                buf.insert(buf.end(), static_cast<std::size_t>(zeros), 0);
                pos_ += zeros;
                want -= static_cast<std::size_t>(zeros);
            }
        }
    }

private:
    void advance() {
        ++idx_;
        support_ = spec_.position(idx_);
        refresh_support();
    }

    void refresh_support() {
        support_fits_ = mpz_fits_ulong_p(support_.get_mpz_t()) != 0;
        support64_ = support_fits_ ? support_.get_ui() : 0;
    }

    SparseSeriesSpec spec_;
    std::uint64_t pos_;
    std::uint64_t idx_ = 1;
    Integer support_;
    bool support_fits_ = true;
    std::uint64_t support64_ = 0;
};

} // namespace

std::unique_ptr<DigitStream> sparse_series(const SparseSeriesSpec& spec,
                                           std::uint64_t start_position) {
    return std::make_unique<SparseStream>(spec, start_position);
}

SparseSeriesSpec parse_sparse_family(const std::string& text) {
    SparseSeriesSpec spec;
    std::string family = text;

    if (text.rfind("list(", 0) == 0) {
        auto plus = text.find(")+");
        if (plus == std::string::npos)
            throw std::invalid_argument("malformed sparse spec '" + text +
                                        "' (expected list(...)+family)");
        Call list = parse_call(text.substr(0, plus + 1));
        for (const std::string& a : list.args)
            spec.explicit_positions.push_back(parse_u64(a, "position"));
        family = text.substr(plus + 2);
    }

    Call c = parse_call(family);
    if (c.name == "factorial" && c.args.empty()) {
        spec.family = SparseSeriesSpec::Factorial{};
    } else if (c.name == "exp" && c.args.size() == 1) {
        std::uint64_t k = parse_u64(c.args[0], "exponential base");
        if (k > std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("exponential base too large");
        spec.family = SparseSeriesSpec::Exponential{static_cast<std::uint32_t>(k)};
    } else if (c.name == "poly" && c.args.size() == 2) {
        std::uint64_t scale = parse_u64(c.args[0], "polynomial scale");
        std::uint64_t degree = parse_u64(c.args[1], "polynomial degree");
        if (degree > std::numeric_limits<std::uint32_t>::max())
            throw std::invalid_argument("polynomial degree too large");
        spec.family = SparseSeriesSpec::Polynomial{scale, static_cast<std::uint32_t>(degree)};
    } else {
        throw std::invalid_argument("unknown sparse family '" + family +
                                    "' (expected factorial, exp(K) or poly(C,J))");
    }

    validate(spec);
    return spec;
}

std::string sparse_family_text(const SparseSeriesSpec& spec) {
    std::string out;
    if (!spec.explicit_positions.empty()) {
        out += "list(";
        for (std::size_t i = 0; i < spec.explicit_positions.size(); ++i) {
            if (i > 0)
                out += ',';
            out += std::to_string(spec.explicit_positions[i]);
        }
        out += ")+";
    }
    out += std::visit(overloaded{
                          [](SparseSeriesSpec::Factorial) { return std::string("factorial"); },
                          [](SparseSeriesSpec::Exponential e) {
                              return "exp(" + std::to_string(e.base) + ")";
                          },
                          [](SparseSeriesSpec::Polynomial p) {
                              return "poly(" + std::to_string(p.scale) + "," +
                                     std::to_string(p.degree) + ")";
                          },
                      },
                      spec.family);
    return out;
}

} // namespace decav
