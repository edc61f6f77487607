#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace addrep {

// Finite truncation of a set of nonnegative integers.
//
// Membership is known exactly on [0, bound()]. The bound defaults to the
// largest element but may be set higher, which is how an empty set or a
// set sampled from a fixed interval records how far it has been observed.
class IntegerSet {
public:
    IntegerSet() = default;

    // Elements must be strictly increasing and nonnegative.
    explicit IntegerSet(std::vector<std::int64_t> elements,
                        std::optional<std::int64_t> bound = std::nullopt);

    // Sorts and deduplicates first.
    static IntegerSet from_unsorted(std::vector<std::int64_t> elements,
                                    std::optional<std::int64_t> bound = std::nullopt);

    std::span<const std::int64_t> elements() const noexcept { return elements_; }
    std::int64_t bound() const noexcept { return bound_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    std::int64_t max_element() const;

    // Exact membership for n in [0, bound]; negative n is never a member.
    // Throws HorizonError for n > bound.
    bool contains(std::int64_t n) const;

    // 0/1 vector of length limit + 1; limit may exceed bound, in which case
    // the set is read as finite (no elements above its largest).
    std::vector<std::uint8_t> indicator(std::int64_t limit) const;

    IntegerSet shifted(std::int64_t offset) const;

    // Smallest difference between consecutive elements; nullopt for |A| < 2.
    std::optional<std::int64_t> min_gap() const;

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

private:
    std::vector<std::int64_t> elements_;
    std::int64_t bound_ = 0;
};

// Weights (lambda_0, ..., lambda_d) with at least one nonzero entry.
class WeightVector {
public:
    explicit WeightVector(std::vector<std::int64_t> weights);

    std::span<const std::int64_t> weights() const noexcept { return weights_; }
    std::int64_t operator[](std::size_t i) const { return weights_[i]; }
    std::size_t degree() const noexcept { return weights_.size() - 1; }
    std::int64_t sum() const noexcept;
    std::int64_t abs_sum() const noexcept;
    WeightVector negated() const;

    friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
    std::vector<std::int64_t> weights_;
};

} // namespace addrep
