#ifndef BNET_MIXRADIX_HPP
#define BNET_MIXRADIX_HPP

#include <cassert>
#include <cstdint>
#include <vector>

namespace bnet {

// Mixed-radix tuple indexing.  The first digit is always the least
// significant one, everywhere in this library: CPT rows, slice state
// spaces and enumeration loops all share this convention.

inline std::int64_t mixradix_size(const std::vector<int>& cards) {
    std::int64_t size = 1;
    for (int c : cards) size *= c;
    return size;
}

// Like mixradix_size but saturates at `cap + 1` instead of overflowing.
inline std::int64_t mixradix_size_capped(const std::vector<int>& cards, std::int64_t cap) {
    std::int64_t size = 1;
    for (int c : cards) {
        size *= c;
        if (size > cap) return cap + 1;
    }
    return size;
}

inline std::int64_t mixradix_encode(const std::vector<int>& digits,
                                    const std::vector<int>& cards) {
    assert(digits.size() == cards.size());
    std::int64_t index = 0;
    std::int64_t stride = 1;
    for (std::size_t i = 0; i < cards.size(); ++i) {
        assert(digits[i] >= 0 && digits[i] < cards[i]);
        index += stride * digits[i];
        stride *= cards[i];
    }
    return index;
}

inline void mixradix_decode(std::int64_t index, const std::vector<int>& cards,
                            std::vector<int>& digits_out) {
    digits_out.resize(cards.size());
    for (std::size_t i = 0; i < cards.size(); ++i) {
        digits_out[i] = static_cast<int>(index % cards[i]);
        index /= cards[i];
    }
}

inline std::vector<int> mixradix_decode(std::int64_t index, const std::vector<int>& cards) {
    std::vector<int> digits;
    mixradix_decode(index, cards, digits);
    return digits;
}

// Odometer over a mixed-radix tuple space; steps through indices
// 0..size-1 with the first digit spinning fastest.
class Odometer {
  public:
    explicit Odometer(std::vector<int> cards)
        : cards_(std::move(cards)), digits_(cards_.size(), 0) {}

    const std::vector<int>& digits() const { return digits_; }

    bool next() {
        for (std::size_t i = 0; i < cards_.size(); ++i) {
            if (++digits_[i] < cards_[i]) return true;
            digits_[i] = 0;
        }
        return false;
    }

  private:
    std::vector<int> cards_;
    std::vector<int> digits_;
};

} // namespace bnet

#endif
