/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_COLORING_HH
#define WAVELAB_GUARD_COLORING_HH 1

#include <wavelab/waves.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavelab
{
    /// A total map [M] -> [r].
    class Coloring
    {
        private:
            int _palette;
            std::vector<int> _colors;

        public:
            /// Throws DomainError unless every colour lies in [1, palette].
            Coloring(int palette, std::vector<int> colors);

            static auto constant(int palette, Point domain_size, int color = 1) -> Coloring;

            /// Comma-separated colours; palette defaults to the largest colour.
            static auto parse(std::string_view text, std::optional<int> palette = std::nullopt) -> Coloring;

            auto palette() const -> int
            {
                return _palette;
            }

            auto domain_size() const -> Point
            {
                return static_cast<Point>(_colors.size());
            }

            auto operator() (Point x) const -> int
            {
                return _colors[x - 1];
            }

            auto colors() const -> const std::vector<int> &
            {
                return _colors;
            }

            /// Points of [M] with the given colour, ascending.
            auto color_class(int color) const -> std::vector<Point>;

            /// The coloring of [m] obtained by keeping only the first m points.
            auto restricted(Point m) const -> Coloring;

            auto to_string() const -> std::string;

            auto operator== (const Coloring &) const -> bool = default;
    };
}

#endif
