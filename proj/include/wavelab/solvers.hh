/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_SOLVERS_HH
#define WAVELAB_GUARD_SOLVERS_HH 1

#include <wavelab/coloring.hh>
#include <wavelab/permutation.hh>
#include <wavelab/waves.hh>

#include <string>
#include <vector>

namespace wavelab
{
    enum class SearchStatus
    {
        Exact,
        Incomplete
    };

    auto to_string(SearchStatus status) -> std::string;

    inline constexpr long long default_node_budget = 100'000'000;

    struct SearchLimits
    {
        long long node_budget = default_node_budget;
    };

    /// g(pi, n) with a lexicographically least optimal witness. When the
    /// budget runs out, status is Incomplete and value/witness are the best
    /// wave-free set found, which is a lower bound only.
    struct DensityResult
    {
        Permutation pattern;
        Point n;
        int value;
        IntSet witness;
        WaveMode mode;
        SearchStatus status;
        long long nodes;
    };

    /// P(pi, r), and the lexicographically least wave-free colouring of
    /// [value - 1] (with first appearances of colours in order). When
    /// Incomplete, value is only a lower bound.
    struct ColoringResult
    {
        Permutation pattern;
        int r;
        Point value;
        Coloring extremal;
        WaveMode mode;
        SearchStatus status;
        long long nodes;
    };

    /// Branch and bound over [n], elements taken in increasing order, with 1
    /// always chosen. For s = n down to 2 it first finds the largest
    /// wave-free subset of {1} u [s, n] containing 1, and uses those sizes
    /// to bound the undecided suffix.
    auto exact_g(const Permutation & pi, Point n, WaveMode mode = WaveMode::Strict,
            SearchLimits limits = {}) -> DensityResult;

    /// Entry m - 1 holds g(pi, m), for m = 1..n_max.
    auto exact_g_table(const Permutation & pi, Point n_max, WaveMode mode = WaveMode::Strict,
            SearchLimits limits = {}) -> std::vector<DensityResult>;

    /// Backtracking over colourings of 1, 2, 3, ... with colour symmetry
    /// broken by order of first appearance. P is one more than the deepest
    /// point reached, once the tree has been exhausted.
    auto exact_P(const Permutation & pi, int r, WaveMode mode = WaveMode::Strict,
            SearchLimits limits = {}) -> ColoringResult;

    inline constexpr int single_removal_constant = 30;
    inline constexpr int double_removal_constant = 42;
    /// The looser per-step constant quoted alongside the 30^k bound; exposed
    /// for reference, not used by the evaluator.
    inline constexpr int loose_constant = 100;
    /// Used for k = 1 in the recursion. The literal definition gives g = 1;
    /// 2 is also a valid upper bound.
    inline constexpr int upper_bound_base = 2;

    /// min over { 30 log2(n) U(pi minus 1), 42 log2(n) U(pi minus 1,2) when 1
    /// and 2 are not adjacent }, with U = 2 for k = 1, rounded up at the end.
    /// Returned as a long double holding an integer, as it overflows 64 bits
    /// for long patterns.
    auto recursive_upper_bound_g(const Permutation & pi, Point n) -> long double;
}

#endif
