/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wavelab/waves.hh>
#include <wavelab/errors.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

using std::optional;
using std::span;
using std::string;
using std::string_view;
using std::vector;

namespace wavelab
{
    auto to_string(WaveMode mode) -> string
    {
        return mode == WaveMode::Strict ? "strict" : "weak";
    }

    auto parse_mode(string_view text) -> WaveMode
    {
        if (text == "strict")
            return WaveMode::Strict;
        if (text == "weak")
            return WaveMode::Weak;
        throw DomainError("unknown wave mode '" + string(text) + "'");
    }

    IntSet::IntSet(vector<Point> elements, Point universe, Point cap) :
        _elements(std::move(elements)),
        _universe(universe)
    {
        if (universe < 0)
            throw DomainError("negative universe");
        if (universe > cap)
            throw DomainError("universe " + std::to_string(universe) + " exceeds the cap of " + std::to_string(cap));

        _members.assign(universe + 1, false);
        for (size_t i = 0 ; i < _elements.size() ; ++i) {
            Point x = _elements[i];
            if (x < 1 || x > universe)
                throw DomainError("element " + std::to_string(x) + " outside [1, " + std::to_string(universe) + "]");
            if (i > 0 && _elements[i - 1] >= x)
                throw DomainError("set elements must be strictly increasing");
            _members[x] = true;
        }
    }

    auto IntSet::interval(Point n) -> IntSet
    {
        vector<Point> elements(n);
        for (Point i = 0 ; i < n ; ++i)
            elements[i] = i + 1;
        return IntSet{ std::move(elements), n };
    }

    auto IntSet::parse(string_view text, optional<Point> universe) -> IntSet
    {
        auto elements = parse_points(text);
        Point n = universe ? *universe : (elements.empty() ? 0 : *std::max_element(elements.begin(), elements.end()));
        return IntSet{ std::move(elements), n };
    }

    auto IntSet::successor(Point x) const -> optional<Point>
    {
        auto it = std::upper_bound(_elements.begin(), _elements.end(), x);
        if (it == _elements.end())
            return std::nullopt;
        return *it;
    }

    auto IntSet::reflected() const -> IntSet
    {
        vector<Point> elements;
        elements.reserve(_elements.size());
        for (auto it = _elements.rbegin() ; it != _elements.rend() ; ++it)
            elements.push_back(_universe + 1 - *it);
        return IntSet{ std::move(elements), _universe };
    }

    auto IntSet::to_string() const -> string
    {
        return join(_elements);
    }

    auto join(span<const Point> points) -> string
    {
        string result;
        for (auto p : points) {
            if (! result.empty())
                result += ',';
            result += std::to_string(p);
        }
        return result;
    }

    auto parse_points(string_view text) -> vector<Point>
    {
        vector<Point> result;
        size_t start = 0;
        while (start <= text.size()) {
            auto comma = text.find(',', start);
            auto piece = text.substr(start, comma == string_view::npos ? string_view::npos : comma - start);
            while (! piece.empty() && std::isspace(static_cast<unsigned char>(piece.front()))) piece.remove_prefix(1);
            while (! piece.empty() && std::isspace(static_cast<unsigned char>(piece.back()))) piece.remove_suffix(1);
            if (piece.empty()) {
                if (comma == string_view::npos && result.empty())
                    break;
                throw DomainError("empty element in integer list '" + string(text) + "'");
            }
            Point v = 0;
            auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
            if (ec != std::errc{} || ptr != piece.data() + piece.size())
                throw DomainError("cannot parse integer '" + string(piece) + "'");
            result.push_back(v);
            if (comma == string_view::npos)
                break;
            start = comma + 1;
        }
        return result;
    }

    auto differences(span<const Point> points) -> vector<Point>
    {
        if (points.size() < 2)
            throw DomainError("differences need at least two points");
        vector<Point> result;
        result.reserve(points.size() - 1);
        for (size_t i = 0 ; i + 1 < points.size() ; ++i) {
            if (points[i + 1] <= points[i])
                throw DomainError("points must be strictly increasing");
            result.push_back(points[i + 1] - points[i]);
        }
        return result;
    }

    namespace
    {
        auto increasing(span<const Point> points) -> bool
        {
            for (size_t i = 0 ; i + 1 < points.size() ; ++i)
                if (points[i + 1] <= points[i])
                    return false;
            return true;
        }

        // pairwise check of the first diffs.size() differences against pi
        auto differences_match(const vector<Point> & diffs, const Permutation & pi, WaveMode mode) -> bool
        {
            int t = static_cast<int>(diffs.size());
            for (int i = 0 ; i < t ; ++i)
                for (int j = 0 ; j < t ; ++j) {
                    bool pattern_greater = pi(i + 1) > pi(j + 1);
                    if (mode == WaveMode::Strict) {
                        if ((diffs[i] > diffs[j]) != pattern_greater)
                            return false;
                    }
                    else if (pattern_greater && diffs[i] < diffs[j])
                        return false;
                }
            return true;
        }
    }

    auto is_wave(span<const Point> points, const Permutation & pi, WaveMode mode) -> bool
    {
        if (points.size() != static_cast<size_t>(pi.size()) + 1 || ! increasing(points))
            return false;
        return differences_match(differences(points), pi, mode);
    }

    auto is_pi_wave(span<const Point> points, const Permutation & pi) -> bool
    {
        return is_wave(points, pi, WaveMode::Strict);
    }

    auto is_weak_pi_wave(span<const Point> points, const Permutation & pi) -> bool
    {
        return is_wave(points, pi, WaveMode::Weak);
    }

    auto prefix_feasible(span<const Point> partial, const Permutation & pi, WaveMode mode) -> bool
    {
        if (partial.empty() || partial.size() > static_cast<size_t>(pi.size()) + 1 || ! increasing(partial))
            return false;
        if (partial.size() == 1)
            return true;
        return differences_match(differences(partial), pi, mode);
    }

    namespace
    {
        auto neighbour_indices(const vector<int> & pattern, vector<int> & below, vector<int> & above) -> void
        {
            int k = static_cast<int>(pattern.size());
            below.assign(k, -1);
            above.assign(k, -1);
            for (int t = 0 ; t < k ; ++t)
                for (int i = 0 ; i < t ; ++i) {
                    if (pattern[i] < pattern[t] && (below[t] == -1 || pattern[i] > pattern[below[t]]))
                        below[t] = i;
                    if (pattern[i] > pattern[t] && (above[t] == -1 || pattern[i] < pattern[above[t]]))
                        above[t] = i;
                }
        }

        template <typename At_>
        struct Search
        {
            const At_ & at;
            size_t count;
            int k;
            bool strict;
            const vector<int> & below;
            const vector<int> & above;
            vector<Point> & chosen;
            vector<Point> & diffs;

            auto extend(size_t from) -> bool
            {
                size_t t = diffs.size();
                if (t == static_cast<size_t>(k))
                    return true;

                Point last = chosen.back();
                Point lo = 1, hi = std::numeric_limits<Point>::max() / 4;
                if (below[t] >= 0)
                    lo = std::max<Point>(lo, diffs[below[t]] + (strict ? 1 : 0));
                if (above[t] >= 0)
                    hi = diffs[above[t]] - (strict ? 1 : 0);
                if (lo > hi)
                    return false;

                // first index >= from whose point is at least last + lo
                size_t first = from, end = count;
                while (first < end) {
                    size_t mid = first + (end - first) / 2;
                    if (at(mid) < last + lo)
                        first = mid + 1;
                    else
                        end = mid;
                }

                for (size_t idx = first ; idx < count ; ++idx) {
                    Point p = at(idx);
                    if (p - last > hi)
                        break;
                    chosen.push_back(p);
                    diffs.push_back(p - last);
                    if (extend(idx + 1))
                        return true;
                    chosen.pop_back();
                    diffs.pop_back();
                }
                return false;
            }
        };
    }

    WaveMatcher::WaveMatcher(const Permutation & pi, WaveMode mode) :
        _k(pi.size()),
        _mode(mode)
    {
        neighbour_indices(pi.values(), _below, _above);
        auto reversed = reverse(pi);
        neighbour_indices(reversed.values(), _reverse_below, _reverse_above);
    }

    auto WaveMatcher::first_wave(span<const Point> sorted) const -> optional<vector<Point>>
    {
        vector<Point> chosen, diffs;
        chosen.reserve(_k + 1);
        diffs.reserve(_k);

        auto at = [&] (size_t i) { return sorted[i]; };
        Search<decltype(at)> search{ at, sorted.size(), _k, _mode == WaveMode::Strict, _below, _above, chosen, diffs };
        for (size_t start = 0 ; start < sorted.size() ; ++start) {
            chosen.assign(1, sorted[start]);
            diffs.clear();
            if (search.extend(start + 1))
                return chosen;
        }
        return std::nullopt;
    }

    auto WaveMatcher::completes_wave(span<const Point> sorted_below, Point last) const -> bool
    {
        // reflect through last: a wave ending at last is a reversed-pattern wave
        // starting at 0 among last - p
        vector<Point> chosen, diffs;
        chosen.reserve(_k + 1);
        diffs.reserve(_k);
        chosen.push_back(0);

        size_t n = sorted_below.size();
        auto at = [&] (size_t i) { return last - sorted_below[n - 1 - i]; };
        Search<decltype(at)> search{ at, n, _k, _mode == WaveMode::Strict, _reverse_below, _reverse_above, chosen, diffs };
        return search.extend(0);
    }

    namespace
    {
        auto exhaustive_first_wave(span<const Point> sorted, const Permutation & pi, WaveMode mode,
                vector<Point> & chosen, size_t from) -> bool
        {
            if (chosen.size() == static_cast<size_t>(pi.size()) + 1)
                return is_wave(chosen, pi, mode);
            for (size_t idx = from ; idx < sorted.size() ; ++idx) {
                chosen.push_back(sorted[idx]);
                if (exhaustive_first_wave(sorted, pi, mode, chosen, idx + 1))
                    return true;
                chosen.pop_back();
            }
            return false;
        }
    }

    auto find_wave(span<const Point> sorted, const Permutation & pi, WaveMode mode, FindOptions options) -> optional<vector<Point>>
    {
        if (! options.prune) {
            vector<Point> chosen;
            if (exhaustive_first_wave(sorted, pi, mode, chosen, 0))
                return chosen;
            return std::nullopt;
        }

        return WaveMatcher{ pi, mode }.first_wave(sorted);
    }

    auto find_wave(const IntSet & s, const Permutation & pi, WaveMode mode, FindOptions options) -> optional<WaveWitness>
    {
        auto points = find_wave(s.elements(), pi, mode, options);
        if (! points)
            return std::nullopt;
        return WaveWitness{ pi, std::move(*points), mode };
    }
}
