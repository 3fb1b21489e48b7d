/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wavelab/coloring.hh>
#include <wavelab/errors.hh>

#include <algorithm>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace wavelab
{
    Coloring::Coloring(int palette, vector<int> colors) :
        _palette(palette),
        _colors(std::move(colors))
    {
        if (palette < 1)
            throw DomainError("palette must have at least one colour");
        for (int c : _colors)
            if (c < 1 || c > palette)
                throw DomainError("colour " + std::to_string(c) + " outside palette [1, " + std::to_string(palette) + "]");
    }

    auto Coloring::constant(int palette, Point domain_size, int color) -> Coloring
    {
        return Coloring{ palette, vector<int>(domain_size, color) };
    }

    auto Coloring::parse(string_view text, optional<int> palette) -> Coloring
    {
        vector<int> colors;
        for (auto p : parse_points(text))
            colors.push_back(static_cast<int>(p));
        int r = palette ? *palette : (colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end()));
        return Coloring{ r, std::move(colors) };
    }

    auto Coloring::color_class(int color) const -> vector<Point>
    {
        vector<Point> result;
        for (size_t i = 0 ; i < _colors.size() ; ++i)
            if (_colors[i] == color)
                result.push_back(static_cast<Point>(i) + 1);
        return result;
    }

    auto Coloring::restricted(Point m) const -> Coloring
    {
        if (m < 0 || m > domain_size())
            throw DomainError("cannot restrict a colouring of [" + std::to_string(domain_size()) + "] to [" + std::to_string(m) + "]");
        return Coloring{ _palette, vector<int>(_colors.begin(), _colors.begin() + m) };
    }

    auto Coloring::to_string() const -> string
    {
        string result;
        for (int c : _colors) {
            if (! result.empty())
                result += ',';
            result += std::to_string(c);
        }
        return result;
    }
}
