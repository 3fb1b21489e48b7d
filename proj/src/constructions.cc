/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wavelab/constructions.hh>
#include <wavelab/errors.hh>

#include <algorithm>
#include <bit>
#include <sstream>

using std::optional;
using std::pair;
using std::string;
using std::vector;

namespace wavelab
{
    auto profile_pick(Point a1, Point a2, Point a3) -> int
    {
        if (! (a1 < a2 && a2 < a3))
            throw DomainError("profile_pick needs a1 < a2 < a3");
        if (2 * (a2 - a1) <= a3 - a1)
            return 1;
        return 2;
    }

    auto find_monochromatic_wave(const Coloring & coloring, const Permutation & pi, WaveMode mode)
        -> optional<pair<int, vector<Point>>>
    {
        WaveMatcher matcher{ pi, mode };
        for (int c = 1 ; c <= coloring.palette() ; ++c)
            if (auto wave = matcher.first_wave(coloring.color_class(c)))
                return pair{ c, std::move(*wave) };
        return std::nullopt;
    }

    auto verify_coloring_wave_free(const Coloring & coloring, const Permutation & pi, WaveMode mode) -> bool
    {
        return ! find_monochromatic_wave(coloring, pi, mode).has_value();
    }

    auto ezconst_coloring(const Permutation & pi, const Coloring & base, const Coloring & tail, WaveMode mode) -> Coloring
    {
        int k = pi.size();
        if (pi(1) != k)
            throw DomainError("pattern " + pi.to_string() + " does not begin with its largest value");
        if (k < 2)
            throw DomainError("pattern must have length at least 2");

        int r = base.palette();
        if (tail.palette() > r)
            throw DomainError("tail colouring uses a larger palette than the base colouring");

        auto rest = remove_values(pi, { k });
        if (! verify_coloring_wave_free(base, pi, mode))
            throw DomainError("base colouring has a monochromatic " + pi.to_string() + " wave");
        if (! verify_coloring_wave_free(tail, rest, mode))
            throw DomainError("tail colouring has a monochromatic " + rest.to_string() + " wave");

        vector<int> colors;
        colors.reserve(2 * base.domain_size() + tail.domain_size());
        for (int c : base.colors())
            colors.push_back(c);
        for (int c : base.colors())
            colors.push_back(c + r);
        for (int c : tail.colors())
            colors.push_back(c);

        Coloring result{ 2 * r, std::move(colors) };
        if (! verify_coloring_wave_free(result, pi, mode))
            throw VerificationFailure("doubled colouring contains a monochromatic " + pi.to_string() + " wave");
        return result;
    }

    auto product_decompose(Point x, Point right_size) -> ProductCoordinates
    {
        if (right_size <= 0 || right_size % 5 != 0)
            throw DomainError("right block size " + std::to_string(right_size) + " is not a positive multiple of 5");
        if (x < 1)
            throw DomainError("cannot decompose " + std::to_string(x));
        Point fifth = right_size / 5;
        Point offset = x - 1;
        Point within = offset % right_size;
        return ProductCoordinates{ offset / right_size + 1, within / fifth + 1, within % fifth + 1 };
    }

    auto product_compose(const ProductCoordinates & coordinates, Point right_size) -> Point
    {
        return right_size * (coordinates.a - 1) + (right_size / 5) * (coordinates.b - 1) + coordinates.c;
    }

    auto product_coloring(const Permutation & left_pattern, const Permutation & right_pattern, int palette_base,
            const Coloring & left, const Coloring & right) -> Coloring
    {
        Point left_size = left.domain_size(), right_size = right.domain_size();
        if (right_size <= 0 || right_size % 5 != 0)
            throw DomainError("right colouring size " + std::to_string(right_size) + " is not a positive multiple of 5");
        if (left.palette() > palette_base || right.palette() > palette_base)
            throw DomainError("input colourings must use at most " + std::to_string(palette_base) + " colours");
        if (! verify_coloring_wave_free(left, left_pattern, WaveMode::Weak))
            throw DomainError("left colouring has a monochromatic weak " + left_pattern.to_string() + " wave");
        if (! verify_coloring_wave_free(right, right_pattern, WaveMode::Weak))
            throw DomainError("right colouring has a monochromatic weak " + right_pattern.to_string() + " wave");

        Point m = palette_base;
        vector<int> colors;
        colors.reserve(left_size * right_size);
        for (Point x = 1 ; x <= left_size * right_size ; ++x) {
            auto [a, b, c] = product_decompose(x, right_size);
            colors.push_back(static_cast<int>(((left(a) - 1) * m + (right(c) - 1)) * 5 + b));
        }

        Coloring result{ static_cast<int>(5 * m * m), std::move(colors) };
        auto combined = direct_difference(left_pattern, right_pattern);
        if (! verify_coloring_wave_free(result, combined, WaveMode::Weak))
            throw VerificationFailure("product colouring contains a monochromatic weak " + combined.to_string() + " wave");
        return result;
    }

    auto to_string(ExtractionStep step) -> string
    {
        switch (step) {
            case ExtractionStep::Binning:   return "binning";
            case ExtractionStep::Thinning:  return "thinning";
            case ExtractionStep::InnerWave: return "inner-wave";
        }
        return "unknown";
    }

    namespace
    {
        // Shared front half of both procedures. Elements x_i with i + reach <= m
        // are binned by x_{i+reach} - x_i, every stride-th element of the fullest
        // bin (from the second such) is divided by 2^{s-1}, and the first
        // residue class mod 6 containing an inner wave supplies it. On success
        // trace.lifted holds the inner wave's original points and anchors their
        // indices in s.
        auto find_lifted_inner_wave(const IntSet & s, const Permutation & inner, int reach, int stride,
                ExtractionResult & result, vector<size_t> & anchors) -> bool
        {
            auto & trace = result.trace;
            auto xs = s.elements();
            size_t m = xs.size();

            int classes = std::bit_width(static_cast<unsigned long long>(std::max<Point>(s.universe(), 1)));
            trace.bins.assign(classes, {});
            vector<vector<size_t>> bin_indices(classes);

            if (m < static_cast<size_t>(reach) + 1) {
                result.failure = ExtractionFailure{ ExtractionStep::Binning,
                    "need at least " + std::to_string(reach + 1) + " elements, have " + std::to_string(m) };
                return false;
            }

            for (size_t i = 0 ; i + reach < m ; ++i) {
                Point gap = xs[i + reach] - xs[i];
                int j = std::bit_width(static_cast<unsigned long long>(gap));
                trace.bins[j - 1].push_back(xs[i]);
                bin_indices[j - 1].push_back(i);
            }

            size_t fullest = 0;
            for (size_t j = 1 ; j < trace.bins.size() ; ++j)
                if (trace.bins[j].size() > trace.bins[fullest].size())
                    fullest = j;
            trace.bin_index = static_cast<int>(fullest) + 1;

            Point scale = Point{ 1 } << fullest;
            const auto & chosen = bin_indices[fullest];
            size_t t = chosen.size();

            vector<size_t> thinned_index;
            for (size_t j = 2 ; j <= t / stride ; ++j) {
                size_t idx = chosen[stride * j - 1];
                trace.thinned.push_back(xs[idx] / scale);
                thinned_index.push_back(idx);
            }

            if (trace.thinned.empty()) {
                result.failure = ExtractionFailure{ ExtractionStep::Thinning,
                    "bin " + std::to_string(trace.bin_index) + " has too few elements to thin" };
                return false;
            }

            trace.residue_classes.assign(6, {});
            vector<vector<size_t>> class_index(6);
            for (size_t i = 0 ; i < trace.thinned.size() ; ++i) {
                int j = static_cast<int>((trace.thinned[i] % 6 + 5) % 6); // index j holds values congruent to j + 1
                trace.residue_classes[j].push_back(trace.thinned[i]);
                class_index[j].push_back(thinned_index[i]);
            }

            WaveMatcher matcher{ inner, WaveMode::Strict };
            for (int j = 0 ; j < 6 ; ++j) {
                auto wave = matcher.first_wave(trace.residue_classes[j]);
                if (! wave)
                    continue;

                trace.residue_class = j + 1;
                trace.inner_wave = *wave;
                for (auto y : *wave) {
                    auto at = std::lower_bound(trace.residue_classes[j].begin(), trace.residue_classes[j].end(), y);
                    size_t idx = class_index[j][at - trace.residue_classes[j].begin()];
                    anchors.push_back(idx);
                    trace.lifted.push_back(xs[idx]);
                }
                return true;
            }

            result.failure = ExtractionFailure{ ExtractionStep::InnerWave,
                "no " + inner.to_string() + " wave in any residue class" };
            return false;
        }

        auto finish(ExtractionResult & result, const Permutation & pi, vector<Point> points) -> void
        {
            if (! is_pi_wave(points, pi))
                throw VerificationFailure("extraction produced " + join(points) + ", which is not a " + pi.to_string() + " wave");
            result.witness = WaveWitness{ pi, std::move(points), WaveMode::Strict };
        }
    }

    auto extract_wave_main(const IntSet & s, const Permutation & pi) -> ExtractionResult
    {
        if (pi.size() < 2)
            throw DomainError("extraction needs a pattern of length at least 2");

        ExtractionResult result;
        result.trace.inner_pattern = remove_values(pi, { 1 });

        vector<size_t> anchors;
        if (! find_lifted_inner_wave(s, result.trace.inner_pattern, 1, 2, result, anchors))
            return result;

        auto xs = s.elements();
        const auto & z = result.trace.lifted;
        size_t ell = pi.position_of(1);
        Point u = xs[anchors[ell - 1] + 1];
        result.trace.inserted = { u };

        vector<Point> points(z.begin(), z.begin() + ell);
        points.push_back(u);
        points.insert(points.end(), z.begin() + ell, z.end());
        finish(result, pi, std::move(points));
        return result;
    }

    auto extract_wave_strong(const IntSet & s, const Permutation & pi) -> ExtractionResult
    {
        if (! values_one_two_separated(pi))
            throw DomainError("values 1 and 2 are adjacent in " + pi.to_string());

        if (pi.position_of(1) > pi.position_of(2)) {
            auto result = extract_wave_strong(s.reflected(), reverse(pi));
            result.trace.reflected = true;
            if (result.witness) {
                vector<Point> points;
                for (auto it = result.witness->points.rbegin() ; it != result.witness->points.rend() ; ++it)
                    points.push_back(s.universe() + 1 - *it);
                result.witness.reset();
                finish(result, pi, std::move(points));
            }
            return result;
        }

        ExtractionResult result;
        result.trace.strong = true;
        result.trace.inner_pattern = remove_values(pi, { 1, 2 });

        vector<size_t> anchors;
        if (! find_lifted_inner_wave(s, result.trace.inner_pattern, 3, 3, result, anchors))
            return result;

        auto xs = s.elements();
        const auto & z = result.trace.lifted;
        size_t ell = pi.position_of(1), r = pi.position_of(2);

        size_t a = anchors[ell - 1];
        int c = profile_pick(xs[a], xs[a + 1], xs[a + 2]);
        Point u1 = xs[a + c - 1], u2 = xs[a + c];
        Point v = xs[anchors[r - 2] + 3];
        result.trace.inserted = { u1, u2, v };

        // z_1..z_{l-1}, u1, u2, z_{l+1}..z_{r-1}, v, z_r..z_{k-1}
        vector<Point> points(z.begin(), z.begin() + (ell - 1));
        points.push_back(u1);
        points.push_back(u2);
        points.insert(points.end(), z.begin() + ell, z.begin() + (r - 1));
        points.push_back(v);
        points.insert(points.end(), z.begin() + (r - 1), z.end());
        finish(result, pi, std::move(points));
        return result;
    }

    auto format_trace(const ExtractionResult & result) -> string
    {
        const auto & trace = result.trace;
        std::ostringstream out;
        out << "variant " << (trace.strong || trace.reflected ? "strong" : "main") << (trace.reflected ? " (reflected)" : "") << '\n';
        out << "inner-pattern " << trace.inner_pattern.to_string() << '\n';
        for (size_t j = 0 ; j < trace.bins.size() ; ++j)
            if (! trace.bins[j].empty())
                out << "bin " << (j + 1) << " size " << trace.bins[j].size() << ": " << join(trace.bins[j]) << '\n';
        if (trace.bin_index)
            out << "chosen-bin " << trace.bin_index << '\n';
        if (! trace.thinned.empty())
            out << "thinned " << join(trace.thinned) << '\n';
        for (size_t j = 0 ; j < trace.residue_classes.size() ; ++j)
            out << "residue " << (j + 1) << ":" << (trace.residue_classes[j].empty() ? "" : " " + join(trace.residue_classes[j])) << '\n';
        if (trace.residue_class)
            out << "chosen-residue " << trace.residue_class << '\n';
        if (! trace.inner_wave.empty())
            out << "inner-wave " << join(trace.inner_wave) << '\n';
        if (! trace.lifted.empty())
            out << "lifted " << join(trace.lifted) << '\n';
        if (! trace.inserted.empty())
            out << "inserted " << join(trace.inserted) << '\n';
        if (result.witness)
            out << "wave " << join(result.witness->points) << '\n';
        if (result.failure)
            out << "failure " << to_string(result.failure->step) << ": " << result.failure->message << '\n';
        return out.str();
    }
}
