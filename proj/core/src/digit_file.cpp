#include "decav/digit_file.hpp"

#include <cctype>
#include <exception>
#include <fstream>

#include "decav/errors.hpp"

namespace decav {

namespace {

std::uint64_t parse_header_field(const std::string& header, const char* key, std::size_t& pos,
                                 const std::filesystem::path& path) {
    std::string k(key);
    if (header.compare(pos, k.size(), k) != 0)
        throw io_error("malformed digit-file header in '" + path.string() + "': expected '" + k +
                       "' in \"" + header + "\"");
    pos += k.size();
    std::size_t start = pos;
    while (pos < header.size() && std::isdigit(static_cast<unsigned char>(header[pos])))
        ++pos;
    if (pos == start || pos - start > 19)
        throw io_error("malformed digit-file header in '" + path.string() + "': bad number after '" +
                       k + "'");
    return std::stoull(header.substr(start, pos - start));
}

} // namespace

DigitFileInfo inspect_digit_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw io_error("cannot open digit file '" + path.string() + "'");

    std::string header;
    if (!std::getline(in, header) || header.size() > 128)
        throw io_error("cannot read digit-file header from '" + path.string() + "'");

    std::size_t pos = 0;
    std::uint64_t base_value = parse_header_field(header, "base=", pos, path);
    if (pos >= header.size() || header[pos] != ' ')
        throw io_error("malformed digit-file header in '" + path.string() +
                       "': expected ' ' between fields");
    ++pos;
    std::uint64_t count = parse_header_field(header, "count=", pos, path);
    if (pos != header.size())
        throw io_error("malformed digit-file header in '" + path.string() + "': trailing junk");

    Base base = Base::of(2); // replaced below; Base has no default
    try {
        base = Base::of(static_cast<int>(base_value));
    } catch (const std::out_of_range& e) {
        throw io_error("digit file '" + path.string() + "': " + e.what());
    }

    std::uint64_t header_bytes = header.size() + 1;
    std::error_code ec;
    std::uint64_t size = std::filesystem::file_size(path, ec);
    if (ec)
        throw io_error("cannot stat digit file '" + path.string() + "': " + ec.message());
    std::uint64_t body = size - std::min<std::uint64_t>(size, header_bytes);

    // Exactly the declared digits, plus at most one trailing newline.
    if (body == count + 1) {
        in.seekg(-1, std::ios::end);
        char last = 0;
        in.get(last);
        if (last != '\n')
            throw io_error("digit file '" + path.string() + "' holds " + std::to_string(body) +
                           " bytes after the header but declares count=" + std::to_string(count));
    } else if (body != count) {
        throw io_error("digit file '" + path.string() + "' declares count=" + std::to_string(count) +
                       " but holds " + std::to_string(body) + " digit bytes");
    }

    return DigitFileInfo{path, base, count, header_bytes};
}

namespace {

class DigitFileStream final : public DigitStream {
public:
    explicit DigitFileStream(DigitFileInfo info)
        : DigitStream(info.base, "digit-file(" + info.path.string() + ")"),
          info_(std::move(info)), in_(info_.path, std::ios::binary) {
        if (!in_)
            throw io_error("cannot open digit file '" + info_.path.string() + "'");
        in_.seekg(static_cast<std::streamoff>(info_.header_bytes));
    }

protected:
    void produce(std::vector<std::uint8_t>& buf) override {
        // A decode error found mid-block is deferred until the good digits
        // before it have been handed out; the stream contract ties the error
        // position to the first undeliverable digit.
        if (pending_) {
            std::exception_ptr e = pending_;
            std::rethrow_exception(e);
        }
        if (produced_ == info_.declared_count)
            throw truncation_error("digit file '" + info_.path.string() + "' exhausted: only " +
                                       std::to_string(info_.declared_count) +
                                       " digits available, stream is contractually infinite",
                                   produced_);

        std::size_t want = static_cast<std::size_t>(
            std::min<std::uint64_t>(1u << 16, info_.declared_count - produced_));
        raw_.resize(want);
        in_.read(reinterpret_cast<char*>(raw_.data()), static_cast<std::streamsize>(want));
        std::size_t got = static_cast<std::size_t>(in_.gcount());
        if (got == 0)
            throw truncation_error("digit file '" + info_.path.string() +
                                       "' ended early at digit index " + std::to_string(produced_),
                                   produced_);

        buf.reserve(got);
        for (std::size_t i = 0; i < got; ++i) {
            char c = static_cast<char>(raw_[i]);
            unsigned v;
            try {
                v = digit_from_char(c, base());
            } catch (const std::invalid_argument& e) {
                std::uint64_t byte_offset = info_.header_bytes + produced_;
                pending_ = std::make_exception_ptr(decode_error(
                    "digit file '" + info_.path.string() + "': " + e.what() + " at byte offset " +
                        std::to_string(byte_offset),
                    produced_, byte_offset));
                if (buf.empty())
                    std::rethrow_exception(pending_);
                return;
            }
            buf.push_back(static_cast<std::uint8_t>(v));
            ++produced_;
        }
    }

private:
    DigitFileInfo info_;
    std::ifstream in_;
    std::vector<std::uint8_t> raw_;
    std::uint64_t produced_ = 0;
    std::exception_ptr pending_;
};

} // namespace

std::unique_ptr<DigitStream> from_digit_file(const std::filesystem::path& path) {
    return std::make_unique<DigitFileStream>(inspect_digit_file(path));
}

void write_digit_file(const std::filesystem::path& path, Base base,
                      std::span<const digit_t> digits) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw io_error("cannot create digit file '" + path.string() + "'");
    out << "base=" << base.value() << " count=" << digits.size() << "\n";
    for (digit_t d : digits) {
        if (!digit_in_range(d, base))
            throw std::invalid_argument("digit value " + std::to_string(d) +
                                        " out of range for base " + std::to_string(base.value()));
        out.put(digit_to_char(d));
    }
    out.put('\n');
    out.flush();
    if (!out)
        throw io_error("failed writing digit file '" + path.string() + "'");
}

} // namespace decav
