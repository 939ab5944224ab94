#include <doctest.h>

#include "decav/constants.hpp"
#include "decav/digit_stream.hpp"
#include "decav/errors.hpp"

#include "oracles/oracles.hpp"

using namespace decav;

namespace {

// 54 fractional digits each, fixed reference strings computed with the
// independent oracle algorithms before the generators were written.
const std::string sqrt2_54 = "414213562373095048801688724209698078569671875376948073";
const std::string e_54 = "718281828459045235360287471352662497757247093699959574";
const std::string pi_54 = "141592653589793238462643383279502884197169399375105820";

std::string digits_to_text(const std::vector<digit_t>& digits) {
    std::string out;
    for (digit_t d : digits)
        out += static_cast<char>('0' + d);
    return out;
}

ConstantSpec spec_of(ConstantSpec::Kind kind, unsigned arg = 2) {
    ConstantSpec s;
    s.kind = kind;
    s.sqrt_arg = arg;
    return s;
}

} // namespace

TEST_CASE("sqrt(2) opening fractional digits") {
    auto s = constant_digits(spec_of(ConstantSpec::Kind::sqrt));
    CHECK(take_prefix(*s, 8) == std::vector<digit_t>{4, 1, 4, 2, 1, 3, 5, 6});
}

TEST_CASE("e opening fractional digits") {
    auto s = constant_digits(spec_of(ConstantSpec::Kind::e));
    CHECK(take_prefix(*s, 9) == std::vector<digit_t>{7, 1, 8, 2, 8, 1, 8, 2, 8});
}

TEST_CASE("pi opening fractional digits") {
    auto s = constant_digits(spec_of(ConstantSpec::Kind::pi));
    CHECK(take_prefix(*s, 6) == std::vector<digit_t>{1, 4, 1, 5, 9, 2});
}

TEST_CASE("54-digit reference strings") {
    auto check54 = [](ConstantSpec spec, const std::string& want) {
        auto s = constant_digits(spec);
        CHECK(digits_to_text(take_prefix(*s, 54)) == want);
    };
    check54(spec_of(ConstantSpec::Kind::sqrt), sqrt2_54);
    check54(spec_of(ConstantSpec::Kind::e), e_54);
    check54(spec_of(ConstantSpec::Kind::pi), pi_54);
}

TEST_CASE("main generators agree with second algorithms at 1000 digits") {
    // sqrt: mpz_sqrt scaling vs Newton iteration; e: binary splitting vs
    // direct tail-bounded series; pi: Machin arctans vs a streaming spigot.
    auto s2 = constant_digits(spec_of(ConstantSpec::Kind::sqrt));
    CHECK(digits_to_text(take_prefix(*s2, 1000)) == oracle::sqrt_digits(2, 1000));

    auto se = constant_digits(spec_of(ConstantSpec::Kind::e));
    CHECK(digits_to_text(take_prefix(*se, 1000)) == oracle::e_digits(1000));

    auto sp = constant_digits(spec_of(ConstantSpec::Kind::pi));
    CHECK(digits_to_text(take_prefix(*sp, 1000)) == oracle::pi_digits(1000));
}

TEST_CASE("other square roots") {
    auto s3 = constant_digits(spec_of(ConstantSpec::Kind::sqrt, 3));
    CHECK(digits_to_text(take_prefix(*s3, 500)) == oracle::sqrt_digits(3, 500));
    auto s1000003 = constant_digits(spec_of(ConstantSpec::Kind::sqrt, 1000003));
    CHECK(digits_to_text(take_prefix(*s1000003, 500)) == oracle::sqrt_digits(1000003, 500));
}

TEST_CASE("guard-digit stability: a longer run never revises earlier digits") {
    for (auto kind : {ConstantSpec::Kind::sqrt, ConstantSpec::Kind::e, ConstantSpec::Kind::pi}) {
        auto a = constant_digits(spec_of(kind));
        auto b = constant_digits(spec_of(kind));
        auto short_run = take_prefix(*a, 2000);
        auto long_run = take_prefix(*b, 4000);
        long_run.resize(2000);
        REQUIRE(short_run == long_run);
    }
}

TEST_CASE("block interface equals the stream view") {
    ConstantSpec spec = spec_of(ConstantSpec::Kind::e);
    auto digits = constant_fraction_digits(spec, 777);
    auto s = constant_digits(spec);
    CHECK(digits == take_prefix(*s, 777));
}

TEST_CASE("a raised guard changes nothing but the work done") {
    ConstantSpec lo = spec_of(ConstantSpec::Kind::pi);
    ConstantSpec hi = spec_of(ConstantSpec::Kind::pi);
    hi.guard_digits = 200;
    CHECK(constant_fraction_digits(lo, 300) == constant_fraction_digits(hi, 300));
}

TEST_CASE("constant spec validation") {
    CHECK_THROWS_AS(validate(spec_of(ConstantSpec::Kind::sqrt, 9)), std::invalid_argument);
    CHECK_THROWS_AS(validate(spec_of(ConstantSpec::Kind::sqrt, 1)), std::invalid_argument);
    CHECK_THROWS_AS(validate(spec_of(ConstantSpec::Kind::sqrt, 0)), std::invalid_argument);
    ConstantSpec low_guard = spec_of(ConstantSpec::Kind::e);
    low_guard.guard_digits = 9;
    CHECK_THROWS_AS(validate(low_guard), std::invalid_argument);
    CHECK_NOTHROW(validate(spec_of(ConstantSpec::Kind::sqrt, 2)));
}

TEST_CASE("constant spec parsing and names") {
    CHECK(parse_constant_spec("e").kind == ConstantSpec::Kind::e);
    CHECK(parse_constant_spec("pi").kind == ConstantSpec::Kind::pi);
    auto s = parse_constant_spec("sqrt(17)");
    CHECK(s.kind == ConstantSpec::Kind::sqrt);
    CHECK(s.sqrt_arg == 17);
    CHECK(parse_constant_spec("sqrt2").sqrt_arg == 2);
    CHECK_THROWS_AS(parse_constant_spec("sqrt(16)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_constant_spec("tau"), std::invalid_argument);
    CHECK(spec_of(ConstantSpec::Kind::sqrt).name() == "sqrt(2)");
    CHECK(spec_of(ConstantSpec::Kind::e).name() == "e");
    CHECK(spec_of(ConstantSpec::Kind::pi).name() == "pi");
}
