/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_WAVES_HH
#define WAVELAB_GUARD_WAVES_HH 1

#include <wavelab/permutation.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavelab
{
    using Point = long long;

    enum class WaveMode
    {
        Strict,
        Weak
    };

    auto to_string(WaveMode mode) -> std::string;
    auto parse_mode(std::string_view text) -> WaveMode;

    inline constexpr Point default_universe_cap = Point{ 1 } << 20;

    /// A subset of [n], kept both as a sorted sequence and as a membership
    /// bitmap over [n].
    class IntSet
    {
        private:
            std::vector<Point> _elements;
            Point _universe;
            std::vector<bool> _members;

        public:
            /// Elements must be strictly increasing and lie in [1, universe];
            /// universe may not exceed cap.
            IntSet(std::vector<Point> elements, Point universe, Point cap = default_universe_cap);

            /// The interval [1, n].
            static auto interval(Point n) -> IntSet;

            /// Comma-separated integers. Universe defaults to the largest element.
            static auto parse(std::string_view text, std::optional<Point> universe = std::nullopt) -> IntSet;

            auto elements() const -> std::span<const Point>
            {
                return _elements;
            }

            auto universe() const -> Point
            {
                return _universe;
            }

            auto size() const -> std::size_t
            {
                return _elements.size();
            }

            auto contains(Point x) const -> bool
            {
                return x >= 1 && x <= _universe && _members[x];
            }

            /// Least element strictly greater than x.
            auto successor(Point x) const -> std::optional<Point>;

            /// {n + 1 - s : s in S}
            auto reflected() const -> IntSet;

            auto to_string() const -> std::string;
    };

    struct WaveWitness
    {
        Permutation pattern;
        std::vector<Point> points;
        WaveMode mode;
    };

    auto join(std::span<const Point> points) -> std::string;
    auto parse_points(std::string_view text) -> std::vector<Point>;

    /// Consecutive differences. Throws DomainError unless points is strictly
    /// increasing with at least two entries.
    auto differences(std::span<const Point> points) -> std::vector<Point>;

    /// Total predicates: malformed input (wrong length, not increasing) is
    /// simply not a wave. A strict wave needs pairwise distinct differences,
    /// since the order condition is an equivalence.
    auto is_pi_wave(std::span<const Point> points, const Permutation & pi) -> bool;
    auto is_weak_pi_wave(std::span<const Point> points, const Permutation & pi) -> bool;
    auto is_wave(std::span<const Point> points, const Permutation & pi, WaveMode mode) -> bool;

    /// Whether a strictly increasing partial sequence of t + 1 points has
    /// differences related exactly as pi(1..t) are, so it may still extend to
    /// a full wave.
    auto prefix_feasible(std::span<const Point> partial, const Permutation & pi, WaveMode mode) -> bool;

    /// Depth-first wave search over a sorted point set. Each new difference is
    /// confined to an interval fixed by the nearest smaller and nearest larger
    /// pattern value already placed, so candidates come from a binary search.
    class WaveMatcher
    {
        private:
            int _k;
            WaveMode _mode;
            std::vector<int> _below, _above;
            std::vector<int> _reverse_below, _reverse_above;

        public:
            WaveMatcher(const Permutation & pi, WaveMode mode);

            auto length() const -> int
            {
                return _k + 1;
            }

            /// Lexicographically least wave among sorted points.
            auto first_wave(std::span<const Point> sorted) const -> std::optional<std::vector<Point>>;

            /// Whether some wave ends at last, with its other points drawn
            /// from sorted_below (all smaller than last).
            auto completes_wave(std::span<const Point> sorted_below, Point last) const -> bool;
    };

    struct FindOptions
    {
        /// When false, every (k+1)-subset is enumerated in lexicographic order
        /// and checked in full. Exists to test that pruning loses nothing.
        bool prune = true;
    };

    /// Lexicographically least wave in s, or nullopt if s is wave-free.
    auto find_wave(const IntSet & s, const Permutation & pi, WaveMode mode, FindOptions options = {}) -> std::optional<WaveWitness>;
    auto find_wave(std::span<const Point> sorted, const Permutation & pi, WaveMode mode, FindOptions options = {}) -> std::optional<std::vector<Point>>;
}

#endif
