/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wavelab/permutation.hh>
#include <wavelab/errors.hh>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>

using std::map;
using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace wavelab
{
    Permutation::Permutation(vector<int> values) :
        _values(std::move(values))
    {
        if (_values.empty())
            throw DomainError("permutation must have at least one element");

        vector<bool> seen(_values.size() + 1, false);
        for (int v : _values) {
            if (v < 1 || v > size())
                throw DomainError("permutation value " + std::to_string(v) + " outside 1.." + std::to_string(size()));
            if (seen[v])
                throw DomainError("permutation value " + std::to_string(v) + " repeated");
            seen[v] = true;
        }
    }

    auto Permutation::parse(string_view text) -> Permutation
    {
        while (! text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        while (! text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
            text.remove_suffix(1);
        if (text.empty())
            throw DomainError("empty permutation");

        vector<int> values;
        if (text.find(',') == string_view::npos && text.size() > 1) {
            if (text.size() > 9)
                throw DomainError("compact permutation form is only accepted for k <= 9; use commas");
            for (char c : text) {
                if (c < '1' || c > '9')
                    throw DomainError("bad character '" + string(1, c) + "' in permutation");
                values.push_back(c - '0');
            }
        }
        else {
            size_t start = 0;
            while (true) {
                auto comma = text.find(',', start);
                auto piece = text.substr(start, comma == string_view::npos ? string_view::npos : comma - start);
                while (! piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
                while (! piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
                int v = 0;
                auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
                if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size())
                    throw DomainError("cannot parse permutation element '" + string(piece) + "'");
                values.push_back(v);
                if (comma == string_view::npos)
                    break;
                start = comma + 1;
            }
        }

        return Permutation{ std::move(values) };
    }

    auto Permutation::identity(int k) -> Permutation
    {
        vector<int> values(k);
        std::iota(values.begin(), values.end(), 1);
        return Permutation{ std::move(values) };
    }

    auto Permutation::position_of(int value) const -> int
    {
        auto it = std::find(_values.begin(), _values.end(), value);
        if (it == _values.end())
            throw DomainError("value " + std::to_string(value) + " not in permutation");
        return static_cast<int>(it - _values.begin()) + 1;
    }

    auto Permutation::to_string() const -> string
    {
        string result;
        for (auto v : _values) {
            if (! result.empty())
                result += ',';
            result += std::to_string(v);
        }
        return result;
    }

    auto normalize(std::span<const long long> seq) -> Permutation
    {
        if (seq.empty())
            throw DomainError("cannot normalize an empty sequence");

        vector<int> order(seq.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&] (int a, int b) { return seq[a] < seq[b]; });

        vector<int> values(seq.size());
        for (size_t rank = 0 ; rank < order.size() ; ++rank) {
            if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]])
                throw DomainError("cannot normalize a sequence with repeated element " + std::to_string(seq[order[rank]]));
            values[order[rank]] = static_cast<int>(rank) + 1;
        }
        return Permutation{ std::move(values) };
    }

    auto reverse(const Permutation & pi) -> Permutation
    {
        vector<int> values(pi.values().rbegin(), pi.values().rend());
        return Permutation{ std::move(values) };
    }

    auto remove_values(const Permutation & pi, const vector<int> & values) -> Permutation
    {
        vector<bool> drop(pi.size() + 1, false);
        for (int v : values) {
            if (v < 1 || v > pi.size())
                throw DomainError("cannot remove " + std::to_string(v) + " from " + pi.to_string());
            drop[v] = true;
        }

        vector<long long> rest;
        for (int v : pi.values())
            if (! drop[v])
                rest.push_back(v);

        if (rest.empty())
            throw DomainError("removing every value of " + pi.to_string() + " leaves nothing");

        return normalize(rest);
    }

    auto peaks(const Permutation & pi) -> vector<int>
    {
        vector<int> result;
        for (int i = 2 ; i < pi.size() ; ++i)
            if (pi(i) > pi(i - 1) && pi(i) > pi(i + 1))
                result.push_back(i);
        return result;
    }

    auto layers(const Permutation & pi) -> optional<vector<Layer>>
    {
        vector<Layer> result;
        int start = 1;
        for (int i = 1 ; i <= pi.size() ; ++i) {
            if (i == pi.size() || pi(i + 1) < pi(i)) {
                result.push_back(Layer{ start, i });
                start = i + 1;
            }
        }

        // each run must be a block of consecutive values, sitting directly
        // below the previous block
        int expected_top = pi.size();
        for (auto & layer : result) {
            int low = pi(layer.start), high = pi(layer.end);
            if (high != expected_top || high - low != layer.end - layer.start)
                return std::nullopt;
            expected_top = low - 1;
        }

        return result;
    }

    auto direct_difference(const Permutation & left, const Permutation & right) -> Permutation
    {
        vector<int> values;
        values.reserve(left.size() + right.size());
        for (int v : left.values())
            values.push_back(v + right.size());
        for (int v : right.values())
            values.push_back(v);
        return Permutation{ std::move(values) };
    }

    auto values_one_two_separated(const Permutation & pi) -> bool
    {
        if (pi.size() < 3)
            return false;
        return std::abs(pi.position_of(1) - pi.position_of(2)) >= 2;
    }

    namespace
    {
        struct ExponentMemo
        {
            map<vector<int>, int> upper;
            map<vector<int>, optional<int>> lower;
        };

        auto upper_exponent(const Permutation & pi, ExponentMemo & memo) -> int
        {
            if (pi.size() == 1)
                return 0;

            if (auto it = memo.upper.find(pi.values()) ; it != memo.upper.end())
                return it->second;

            int best = 1 + upper_exponent(remove_values(pi, { 1 }), memo);
            if (values_one_two_separated(pi))
                best = std::min(best, 1 + upper_exponent(remove_values(pi, { 1, 2 }), memo));

            memo.upper.emplace(pi.values(), best);
            return best;
        }

        auto lower_exponent(const Permutation & pi, ExponentMemo & memo) -> optional<int>
        {
            int k = pi.size();
            if (peaks(pi).empty())
                return k - 1;

            if (auto decomposition = layers(pi)) {
                int big = 0;
                for (size_t i = 0 ; i + 1 < decomposition->size() ; ++i)
                    if ((*decomposition)[i].size() >= 2)
                        ++big;
                return k - big - 1;
            }

            if (auto it = memo.lower.find(pi.values()) ; it != memo.lower.end())
                return it->second;

            optional<int> best;
            auto offer = [&] (optional<int> candidate) {
                if (candidate && (! best || *candidate > *best))
                    best = candidate;
            };

            // k at either end; the reversed permutation begins with k
            if (pi(1) == k || pi(k) == k)
                if (auto rest = lower_exponent(remove_values(pi, { k }), memo))
                    offer(*rest + 1);

            // every split point where the left block lies entirely above the right
            int left_min = k + 1;
            for (int split = 1 ; split < k ; ++split) {
                left_min = std::min(left_min, pi(split));
                if (left_min != k - split + 1)
                    continue;
                vector<long long> left(pi.values().begin(), pi.values().begin() + split);
                vector<long long> right(pi.values().begin() + split, pi.values().end());
                auto lower_left = lower_exponent(normalize(left), memo);
                auto lower_right = lower_exponent(normalize(right), memo);
                if (lower_left && lower_right)
                    offer(*lower_left + *lower_right);
            }

            // a wave contains a wave of the pattern with its first or last entry deleted
            vector<long long> values(pi.values().begin(), pi.values().end());
            offer(lower_exponent(normalize(std::span<const long long>(values).subspan(1)), memo));
            offer(lower_exponent(normalize(std::span<const long long>(values).first(k - 1)), memo));

            memo.lower.emplace(pi.values(), best);
            return best;
        }
    }

    auto classify(const Permutation & pi, int max_k) -> Classification
    {
        if (pi.size() > max_k)
            throw DomainError("classify is capped at k = " + std::to_string(max_k) + ", got k = " + std::to_string(pi.size()));

        Classification result;
        result.peaks = peaks(pi);
        result.layers = layers(pi);
        if (result.layers)
            for (size_t i = 0 ; i + 1 < result.layers->size() ; ++i)
                if ((*result.layers)[i].size() >= 2)
                    ++result.nonfinal_big_layers;

        ExponentMemo memo;
        result.exponent_ub = upper_exponent(pi, memo);
        result.exponent_lb = lower_exponent(pi, memo);
        return result;
    }
}
