/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_PERMUTATION_HH
#define WAVELAB_GUARD_PERMUTATION_HH 1

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavelab
{
    /// A permutation of {1, ..., k} in one-line notation. Positions and values
    /// are both 1-indexed, so pi(i) is the value at position i.
    class Permutation
    {
        private:
            std::vector<int> _values;

        public:
            /// Throws DomainError unless values is a bijection onto {1..k}, k >= 1.
            explicit Permutation(std::vector<int> values);

            /// Accepts "4,3,1,2" and, for k <= 9, the compact form "4312".
            static auto parse(std::string_view text) -> Permutation;

            static auto identity(int k) -> Permutation;

            auto size() const -> int
            {
                return static_cast<int>(_values.size());
            }

            auto operator() (int position) const -> int
            {
                return _values[position - 1];
            }

            /// pi^{-1}(value)
            auto position_of(int value) const -> int;

            auto values() const -> const std::vector<int> &
            {
                return _values;
            }

            /// Always comma-separated.
            auto to_string() const -> std::string;

            auto operator<=> (const Permutation &) const = default;
    };

    /// The permutation with the same relative order as seq. Throws on empty
    /// input or repeated elements.
    auto normalize(std::span<const long long> seq) -> Permutation;

    auto reverse(const Permutation & pi) -> Permutation;

    /// Deletes the given values and normalizes what remains.
    auto remove_values(const Permutation & pi, const std::vector<int> & values) -> Permutation;

    /// Interior positions 2..k-1 holding a value larger than both neighbours.
    auto peaks(const Permutation & pi) -> std::vector<int>;

    struct Layer
    {
        int start, end; // positions, inclusive
        auto size() const -> int { return end - start + 1; }
        auto operator<=> (const Layer &) const = default;
    };

    /// The layers of pi if it is layered (a direct difference of increasing
    /// runs), otherwise nullopt.
    auto layers(const Permutation & pi) -> std::optional<std::vector<Layer>>;

    /// Left block shifted above the whole right block.
    auto direct_difference(const Permutation & left, const Permutation & right) -> Permutation;

    /// 1 and 2 sit at non-adjacent positions, so two values can be removed at once.
    auto values_one_two_separated(const Permutation & pi) -> bool;

    struct Classification
    {
        std::vector<int> peaks;
        std::optional<std::vector<Layer>> layers;
        int nonfinal_big_layers = 0;
        std::optional<int> exponent_lb;
        int exponent_ub = 0;
    };

    inline constexpr int default_classify_cap = 12;

    /// Best proven polylogarithmic exponent interval for g(pi, n). The lower
    /// bound also inherits from pi with its first or last entry deleted. Throws
    /// DomainError if pi is longer than max_k.
    auto classify(const Permutation & pi, int max_k = default_classify_cap) -> Classification;
}

#endif
