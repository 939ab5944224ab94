#include "decav/champernowne.hpp"

#include <cstdint>

namespace decav {

namespace {

class ChampernowneStream final : public DigitStream {
public:
    explicit ChampernowneStream(Base base)
        : DigitStream(base, "champernowne(base=" + std::to_string(base.value()) + ")") {}

protected:
    void produce(std::vector<std::uint8_t>& buf) override {
        constexpr std::size_t target = 4096;
        const std::uint64_t b = static_cast<std::uint64_t>(base().value());
        buf.reserve(target + 64);
        while (buf.size() < target) {
            // Render next_ in base b, most significant digit first.
            std::uint8_t tmp[64];
            std::size_t len = 0;
            for (std::uint64_t v = next_; v != 0; v /= b)
                tmp[len++] = static_cast<std::uint8_t>(v % b);
            for (std::size_t i = len; i-- > 0;)
                buf.push_back(tmp[i]);
            ++next_;
        }
    }

private:
    std::uint64_t next_ = 1;
};

} // namespace

std::unique_ptr<DigitStream> champernowne(Base base) {
    return std::make_unique<ChampernowneStream>(base);
}

} // namespace decav
