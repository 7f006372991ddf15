#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <utility>

namespace lispace {

inline constexpr std::size_t kWordBits = 64;

/// Working-space parameter s, in machine words. Correct for any s >= 2; the
/// pass and space guarantees of the budgeted algorithms hold once
/// s >= ceil(sqrt(n)).
struct Budget {
    std::size_t s = 2;
};

/// Clamp a budget to the usable window for an input of n elements.
constexpr std::size_t effective_budget(std::size_t s, std::size_t n) {
    return std::min(s, std::max<std::size_t>(n, 2));
}

/// Accountant for working memory. Charges are expressed in bits so that a
/// flag table can be charged at one bit per entry; everything else uses the
/// word helpers.
///
/// Accounting conventions used throughout the library:
///   - one live scalar (index, counter, size, value) = 1 word
///   - one stored element (value + position)         = 2 words
///   - one flag-table entry                          = 1 bit
///   - adjustable_length and near_mid reserve a fixed arena of
///     arena_words(s) up front and run their internal state on a scratch
///     meter, so their peak is a deterministic function of s;
///   - everything else charges its live state incrementally.
class BudgetMeter {
public:
    void acquire_bits(std::size_t bits) {
        current_bits_ += bits;
        peak_bits_ = std::max(peak_bits_, current_bits_);
    }
    void release_bits(std::size_t bits) {
        assert(bits <= current_bits_);
        current_bits_ -= bits;
    }
    void acquire_words(std::size_t words) { acquire_bits(words * kWordBits); }
    void release_words(std::size_t words) { release_bits(words * kWordBits); }

    std::size_t current_bits() const { return current_bits_; }
    std::size_t peak_bits() const { return peak_bits_; }
    std::size_t current_words() const { return (current_bits_ + kWordBits - 1) / kWordBits; }
    std::size_t peak_words() const { return (peak_bits_ + kWordBits - 1) / kWordBits; }

    void reset() {
        current_bits_ = 0;
        peak_bits_ = 0;
    }

private:
    std::size_t current_bits_ = 0;
    std::size_t peak_bits_ = 0;
};

/// RAII charge against a meter. Movable, grows as state grows, releases on
/// destruction. A default-constructed lease is unattached and charges nothing.
class MeterLease {
public:
    MeterLease() = default;
    MeterLease(BudgetMeter& meter, std::size_t bits) : meter_(&meter), bits_(bits) {
        meter_->acquire_bits(bits_);
    }
    MeterLease(MeterLease&& other) noexcept : meter_(other.meter_), bits_(other.bits_) {
        other.meter_ = nullptr;
        other.bits_ = 0;
    }
    MeterLease& operator=(MeterLease&& other) noexcept {
        if (this != &other) {
            release();
            meter_ = std::exchange(other.meter_, nullptr);
            bits_ = std::exchange(other.bits_, 0);
        }
        return *this;
    }
    MeterLease(const MeterLease&) = delete;
    MeterLease& operator=(const MeterLease&) = delete;
    ~MeterLease() { release(); }

    void grow_bits(std::size_t bits) {
        if (meter_ != nullptr) {
            meter_->acquire_bits(bits);
            bits_ += bits;
        }
    }
    void grow_words(std::size_t words) { grow_bits(words * kWordBits); }

    std::size_t bits() const { return bits_; }

private:
    void release() {
        if (meter_ != nullptr) {
            meter_->release_bits(bits_);
            meter_ = nullptr;
            bits_ = 0;
        }
    }

    BudgetMeter* meter_ = nullptr;
    std::size_t bits_ = 0;
};

/// Fixed working arena reserved by the budgeted length machinery. Sized to
/// cover tops and counts for a 2s window, two anchor piles, a stored mid
/// pile with its position index, and loop scalars. Pinned constants: the
/// space bound of the budgeted algorithms is peak_words <= 11*s + 32.
constexpr std::size_t arena_words(std::size_t s) { return 11 * s + 32; }

/// Reserves a fixed arena on the public meter and hands the operation a
/// scratch meter for its internal state. Inside the budget regime the
/// internal state fits the arena, so the public peak is a deterministic
/// function of s; below the regime (oversized fallback anchors) the excess
/// over the arena is folded into the public peak on destruction, keeping
/// the reported peak truthful.
class ReservedArena {
public:
    ReservedArena(BudgetMeter& public_meter, std::size_t words)
        : public_(&public_meter),
          arena_bits_(words * kWordBits),
          lease_(public_meter, words * kWordBits) {}

    ReservedArena(const ReservedArena&) = delete;
    ReservedArena& operator=(const ReservedArena&) = delete;

    ~ReservedArena() {
        if (scratch_.peak_bits() > arena_bits_) {
            const std::size_t excess = scratch_.peak_bits() - arena_bits_;
            public_->acquire_bits(excess);
            public_->release_bits(excess);
        }
    }

    BudgetMeter& scratch() { return scratch_; }

private:
    BudgetMeter* public_;
    std::size_t arena_bits_;
    MeterLease lease_;
    BudgetMeter scratch_;
};

}  // namespace lispace
