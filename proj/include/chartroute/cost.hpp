#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numbers>

namespace chartroute {

/// Exact sailing cost over an 8-connected grid.
///
/// A step costs its length (1 or sqrt 2) times a safety weight, and every
/// weight is a multiple of 1/2, so any path cost is (a + b*sqrt 2) / 2 for
/// integers a, b.  Holding the pair keeps equal-cost paths exactly equal no
/// matter the summation order, and comparisons never round.
class SailingCost {
public:
    constexpr SailingCost() = default;
    constexpr SailingCost(std::int64_t orthogonal_halves, std::int64_t diagonal_halves)
        : orth_(orthogonal_halves)
        , diag_(diagonal_halves)
    {
    }

    constexpr std::int64_t orthogonal_halves() const noexcept { return orth_; }
    constexpr std::int64_t diagonal_halves() const noexcept { return diag_; }

    double value() const noexcept
    {
        return 0.5 * (static_cast<double>(orth_) + static_cast<double>(diag_) * std::numbers::sqrt2);
    }

    constexpr SailingCost& operator+=(const SailingCost& o) noexcept
    {
        orth_ += o.orth_;
        diag_ += o.diag_;
        return *this;
    }
    friend constexpr SailingCost operator+(SailingCost a, const SailingCost& b) noexcept { return a += b; }

    friend constexpr bool operator==(const SailingCost&, const SailingCost&) = default;

    friend constexpr std::strong_ordering operator<=>(const SailingCost& x, const SailingCost& y) noexcept
    {
        // sign of a + b*sqrt2
        const std::int64_t a = x.orth_ - y.orth_;
        const std::int64_t b = x.diag_ - y.diag_;
        if (a == 0 && b == 0)
            return std::strong_ordering::equal;
        if (a >= 0 && b >= 0)
            return std::strong_ordering::greater;
        if (a <= 0 && b <= 0)
            return std::strong_ordering::less;
        const std::int64_t a2 = a * a;
        const std::int64_t b2 = 2 * b * b;
        if (a > 0)
            return a2 > b2 ? std::strong_ordering::greater : std::strong_ordering::less;
        return b2 > a2 ? std::strong_ordering::greater : std::strong_ordering::less;
    }

private:
    std::int64_t orth_ = 0;
    std::int64_t diag_ = 0;
};

} // namespace chartroute
