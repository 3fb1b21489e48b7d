/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_CONSTRUCTIONS_HH
#define WAVELAB_GUARD_CONSTRUCTIONS_HH 1

#include <wavelab/coloring.hh>
#include <wavelab/permutation.hh>
#include <wavelab/waves.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wavelab
{
    /// Least i in {1, 2} with a_{i+1} - a_i <= (a3 - a1) / 2.
    auto profile_pick(Point a1, Point a2, Point a3) -> int;

    /// Some colour class containing a wave, with the lexicographically least
    /// such wave, checking colours in increasing order.
    auto find_monochromatic_wave(const Coloring & coloring, const Permutation & pi, WaveMode mode)
        -> std::optional<std::pair<int, std::vector<Point>>>;

    auto verify_coloring_wave_free(const Coloring & coloring, const Permutation & pi, WaveMode mode) -> bool;

    /// For pi beginning with k: block L copies base, block M copies base
    /// shifted up by r colours, block R copies tail, giving a 2r-colouring of
    /// [2 |base| + |tail|]. base must avoid monochromatic pi-waves and tail
    /// monochromatic waves of pi with k deleted.
    auto ezconst_coloring(const Permutation & pi, const Coloring & base, const Coloring & tail,
            WaveMode mode = WaveMode::Strict) -> Coloring;

    struct ProductCoordinates
    {
        Point a; // in [m_L]
        Point b; // in [5]
        Point c; // in [m_R / 5]

        auto operator<=> (const ProductCoordinates &) const = default;
    };

    /// x = m_R (a - 1) + (m_R / 5)(b - 1) + c
    auto product_decompose(Point x, Point right_size) -> ProductCoordinates;
    auto product_compose(const ProductCoordinates & coordinates, Point right_size) -> Point;

    /// Colours x in [m_L m_R] by the triple (left(a), right(c), b), flattened
    /// into [5 m^2]. The inputs must avoid monochromatic weak waves of their
    /// patterns, and |right| must be a multiple of 5.
    auto product_coloring(const Permutation & left_pattern, const Permutation & right_pattern, int palette_base,
            const Coloring & left, const Coloring & right) -> Coloring;

    enum class ExtractionStep
    {
        Binning,
        Thinning,
        InnerWave
    };

    auto to_string(ExtractionStep step) -> std::string;

    struct ExtractionTrace
    {
        bool strong = false;
        bool reflected = false;              // strong variant ran on the reversed pattern and reflected set
        Permutation inner_pattern{ { 1 } };
        std::vector<std::vector<Point>> bins;        // bins[j - 1] = T_j
        int bin_index = 0;                           // s
        std::vector<Point> thinned;                  // T'_s
        std::vector<std::vector<Point>> residue_classes; // [j - 1] = T_{s,j}
        int residue_class = 0;                       // j
        std::vector<Point> inner_wave;               // y
        std::vector<Point> lifted;                   // z
        std::vector<Point> inserted;                 // u, or u1, u2, v
    };

    struct ExtractionFailure
    {
        ExtractionStep step;
        std::string message;
    };

    struct ExtractionResult
    {
        ExtractionTrace trace;
        std::optional<WaveWitness> witness;
        std::optional<ExtractionFailure> failure;

        auto succeeded() const -> bool
        {
            return witness.has_value();
        }
    };

    /// Bin elements by dyadic successor gap, keep every second element of the
    /// fullest bin divided down by 2^{s-1}, split by residue mod 6, find a
    /// wave of pi with 1 removed in the first class that has one, lift it,
    /// and insert the successor of the point standing where 1 sits in pi.
    /// Requires k >= 2.
    auto extract_wave_main(const IntSet & s, const Permutation & pi) -> ExtractionResult;

    /// As extract_wave_main, but binned by three-step gaps and removing both
    /// 1 and 2, which must be non-adjacent in pi. If 2 precedes 1, runs on
    /// the reversed pattern and the reflected set and maps the result back.
    auto extract_wave_strong(const IntSet & s, const Permutation & pi) -> ExtractionResult;

    /// Multi-line, one step per line.
    auto format_trace(const ExtractionResult & result) -> std::string;
}

#endif
