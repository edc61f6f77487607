#include "addrep/integer_set.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "addrep/errors.hpp"

namespace addrep {

HorizonError::HorizonError(std::int64_t requested, std::int64_t horizon)
    : Error("horizon error: value at " + std::to_string(requested) +
            " requested but membership is only known up to " + std::to_string(horizon)),
      requested_(requested),
      horizon_(horizon) {}

ParseError::ParseError(const std::string& what, std::size_t line)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

IntegerSet::IntegerSet(std::vector<std::int64_t> elements, std::optional<std::int64_t> bound)
    : elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (elements_[i] < 0) {
            throw ParameterError("negative element " + std::to_string(elements_[i]));
        }
        if (i > 0 && elements_[i] <= elements_[i - 1]) {
            throw ParameterError("elements must be strictly increasing");
        }
    }
    const std::int64_t top = elements_.empty() ? 0 : elements_.back();
    bound_ = bound.value_or(top);
    if (bound_ < top) {
        throw ParameterError("bound " + std::to_string(bound_) + " is below the largest element " +
                             std::to_string(top));
    }
}

IntegerSet IntegerSet::from_unsorted(std::vector<std::int64_t> elements,
                                     std::optional<std::int64_t> bound) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return IntegerSet(std::move(elements), bound);
}

std::int64_t IntegerSet::max_element() const {
    if (elements_.empty()) {
        throw ParameterError("max_element of an empty set");
    }
    return elements_.back();
}

bool IntegerSet::contains(std::int64_t n) const {
    if (n < 0) {
        return false;
    }
    if (n > bound_) {
        throw HorizonError(n, bound_);
    }
    return std::binary_search(elements_.begin(), elements_.end(), n);
}

std::vector<std::uint8_t> IntegerSet::indicator(std::int64_t limit) const {
    std::vector<std::uint8_t> out(static_cast<std::size_t>(std::max<std::int64_t>(limit + 1, 0)), 0);
    for (const auto a : elements_) {
        if (a > limit) {
            break;
        }
        out[static_cast<std::size_t>(a)] = 1;
    }
    return out;
}

IntegerSet IntegerSet::shifted(std::int64_t offset) const {
    std::vector<std::int64_t> out(elements_.begin(), elements_.end());
    for (auto& a : out) {
        a += offset;
    }
    return IntegerSet(std::move(out), bound_ + offset);
}

std::optional<std::int64_t> IntegerSet::min_gap() const {
    if (elements_.size() < 2) {
        return std::nullopt;
    }
    std::int64_t gap = elements_[1] - elements_[0];
    for (std::size_t i = 2; i < elements_.size(); ++i) {
        gap = std::min(gap, elements_[i] - elements_[i - 1]);
    }
    return gap;
}

WeightVector::WeightVector(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw ParameterError("weight vector needs at least one entry");
    }
    if (std::all_of(weights_.begin(), weights_.end(), [](auto w) { return w == 0; })) {
        throw ParameterError("weight vector must have a nonzero entry");
    }
}

std::int64_t WeightVector::sum() const noexcept {
    return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0});
}

std::int64_t WeightVector::abs_sum() const noexcept {
    std::int64_t s = 0;
    for (const auto w : weights_) {
        s += w < 0 ? -w : w;
    }
    return s;
}

WeightVector WeightVector::negated() const {
    std::vector<std::int64_t> out(weights_.begin(), weights_.end());
    for (auto& w : out) {
        w = -w;
    }
    return WeightVector(std::move(out));
}

} // namespace addrep
