/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_STORE_HH
#define WAVELAB_GUARD_STORE_HH 1

#include <wavelab/permutation.hh>
#include <wavelab/solvers.hh>
#include <wavelab/waves.hh>

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wavelab
{
    enum class RecordKind
    {
        Density,  // g
        Coloring  // p
    };

    enum class RecordStatus
    {
        Exact,
        LowerBound
    };

    /// One line of the cache: `kind pattern param mode value status witness`.
    /// The witness is the wave-free set for g, or the colouring of
    /// [value - 1] for p, comma-joined; "-" when empty.
    struct Record
    {
        RecordKind kind;
        Permutation pattern;
        Point parameter;
        WaveMode mode;
        Point value;
        RecordStatus status;
        std::vector<Point> witness;

        auto to_line() const -> std::string;
        static auto parse_line(std::string_view line) -> Record;

        auto operator== (const Record &) const -> bool = default;
    };

    /// Checks the witness: for g, a wave-free subset of [n] of size value;
    /// for p, a wave-free colouring of [value - 1] using at most r colours.
    auto verify_record(const Record & record) -> bool;

    auto record_from(const DensityResult & result) -> Record;
    auto record_from(const ColoringResult & result) -> Record;

    inline constexpr const char * default_store_path = "./wavelab-cache.txt";
    inline constexpr const char * store_path_variable = "WAVELAB_CACHE";

    /// The cache path: explicit argument, else $WAVELAB_CACHE, else the default.
    auto resolve_store_path(std::optional<std::string> explicit_path) -> std::filesystem::path;

    /// Append-only text file of verified records. Loading re-verifies every
    /// line and throws DomainError on the first bad one.
    class Store
    {
        private:
            std::filesystem::path _path;
            std::vector<Record> _records;

        public:
            explicit Store(std::filesystem::path path);

            /// Appends and flushes one line. Rejects records that fail
            /// verification and exact records contradicting a stored exact
            /// value. Storing an identical record again is a no-op.
            auto put(const Record & record) -> void;

            /// Exact beats lower-bound; among lower bounds the largest value wins.
            auto get(RecordKind kind, const Permutation & pattern, Point parameter, WaveMode mode) const -> std::optional<Record>;

            auto records() const -> const std::vector<Record> &
            {
                return _records;
            }

            auto path() const -> const std::filesystem::path &
            {
                return _path;
            }
    };
}

#endif
