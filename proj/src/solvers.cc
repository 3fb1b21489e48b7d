/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wavelab/solvers.hh>
#include <wavelab/errors.hh>

#include <algorithm>
#include <cmath>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace wavelab
{
    auto to_string(SearchStatus status) -> string
    {
        return status == SearchStatus::Exact ? "exact" : "incomplete";
    }

    namespace
    {
        struct BudgetExhausted
        {
        };

        struct DensitySearch
        {
            const WaveMatcher & matcher;
            const vector<int> & anchored_bound; // [y] = largest wave-free subset of {1} u [y, universe] containing 1
            Point universe;
            int target;
            long long & nodes;
            long long budget;
            vector<Point> chosen;

            // extends chosen, which contains 1, by points from [x, universe] in
            // increasing order to the lexicographically least wave-free set of
            // size target
            auto run(Point x) -> bool
            {
                if (static_cast<int>(chosen.size()) == target)
                    return true;

                for (Point y = x ; y <= universe ; ++y) {
                    if (++nodes > budget)
                        throw BudgetExhausted{};

                    // the rest together with 1 lies in {1} u [y, universe]
                    if (static_cast<int>(chosen.size()) + anchored_bound[y] - 1 < target)
                        return false;

                    if (matcher.completes_wave(chosen, y))
                        continue;

                    chosen.push_back(y);
                    if (run(y + 1))
                        return true;
                    chosen.pop_back();
                }
                return false;
            }
        };

        auto solve_density(const WaveMatcher & matcher, Point m, long long & nodes, long long budget) -> vector<Point>
        {
            // any wave-free set translates to one containing 1, so work
            // from the largest start point downwards
            vector<int> anchored_bound(m + 2, 1);
            for (Point s = m ; s >= 2 ; --s) {
                int target = anchored_bound[s + 1] + 1;
                DensitySearch search{ matcher, anchored_bound, m, target, nodes, budget, { 1 } };
                bool grows = false;
                if (! matcher.completes_wave(search.chosen, s)) {
                    search.chosen.push_back(s);
                    grows = search.run(s + 1);
                }
                anchored_bound[s] = grows ? target : anchored_bound[s + 1];
            }

            DensitySearch witness{ matcher, anchored_bound, m, anchored_bound[2], nodes, budget, { 1 } };
            if (! witness.run(2))
                throw VerificationFailure("density search lost a wave-free set of size " + std::to_string(anchored_bound[2]));
            return witness.chosen;
        }
    }

    auto exact_g_table(const Permutation & pi, Point n_max, WaveMode mode, SearchLimits limits) -> vector<DensityResult>
    {
        if (n_max < 1)
            throw DomainError("universe must be at least 1");

        WaveMatcher matcher{ pi, mode };
        vector<DensityResult> results;
        long long nodes = 0;
        bool exhausted = false;
        vector<Point> best{};

        for (Point m = 1 ; m <= n_max ; ++m) {
            if (! exhausted) {
                try {
                    auto found = solve_density(matcher, m, nodes, limits.node_budget);
                    if (found.size() < best.size())
                        throw VerificationFailure("density decreased from " + std::to_string(m - 1) + " to " + std::to_string(m));
                    best = std::move(found);
                }
                catch (const BudgetExhausted &) {
                    exhausted = true;
                }
            }

            results.push_back(DensityResult{ pi, m, static_cast<int>(best.size()), IntSet{ best, m }, mode,
                    exhausted ? SearchStatus::Incomplete : SearchStatus::Exact, nodes });
        }

        return results;
    }

    auto exact_g(const Permutation & pi, Point n, WaveMode mode, SearchLimits limits) -> DensityResult
    {
        return exact_g_table(pi, n, mode, limits).back();
    }

    namespace
    {
        struct ColoringSearch
        {
            const WaveMatcher & matcher;
            int r;
            long long & nodes;
            long long budget;
            vector<vector<Point>> classes;
            vector<int> colors;
            vector<int> deepest;

            auto run(Point x, int used) -> void
            {
                if (++nodes > budget)
                    throw BudgetExhausted{};

                if (colors.size() > deepest.size())
                    deepest = colors;

                for (int c = 0 ; c < std::min(r, used + 1) ; ++c) {
                    if (matcher.completes_wave(classes[c], x))
                        continue;
                    classes[c].push_back(x);
                    colors.push_back(c + 1);
                    run(x + 1, std::max(used, c + 1));
                    colors.pop_back();
                    classes[c].pop_back();
                }
            }
        };
    }

    auto exact_P(const Permutation & pi, int r, WaveMode mode, SearchLimits limits) -> ColoringResult
    {
        if (r < 1)
            throw DomainError("palette size must be at least 1");

        WaveMatcher matcher{ pi, mode };
        long long nodes = 0;
        ColoringSearch search{ matcher, r, nodes, limits.node_budget, vector<vector<Point>>(r), {}, {} };
        SearchStatus status = SearchStatus::Exact;
        try {
            search.run(1, 0);
        }
        catch (const BudgetExhausted &) {
            status = SearchStatus::Incomplete;
        }

        Point value = static_cast<Point>(search.deepest.size()) + 1;
        return ColoringResult{ pi, r, value, Coloring{ r, search.deepest }, mode, status, nodes };
    }

    namespace
    {
        auto upper_bound_recursion(const Permutation & pi, long double log_n) -> long double
        {
            if (pi.size() == 1)
                return upper_bound_base;

            long double best = single_removal_constant * log_n * upper_bound_recursion(remove_values(pi, { 1 }), log_n);
            if (values_one_two_separated(pi))
                best = std::min(best, double_removal_constant * log_n * upper_bound_recursion(remove_values(pi, { 1, 2 }), log_n));
            return best;
        }
    }

    auto recursive_upper_bound_g(const Permutation & pi, Point n) -> long double
    {
        if (n < 2)
            throw DomainError("the recursive bound needs n >= 2");
        auto value = upper_bound_recursion(pi, std::log2(static_cast<long double>(n)));
        // absorb rounding noise before taking the ceiling
        auto nearest = std::round(value);
        if (std::fabs(value - nearest) <= 1e-9L * std::max<long double>(1, nearest))
            return nearest;
        return std::ceil(value);
    }
}
