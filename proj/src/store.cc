/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <wavelab/store.hh>
#include <wavelab/coloring.hh>
#include <wavelab/errors.hh>

#include <cstdlib>
#include <fstream>
#include <sstream>

using std::optional;
using std::string;
using std::string_view;
using std::vector;

namespace wavelab
{
    namespace
    {
        auto parse_integer(const string & text, const char * what) -> Point
        {
            try {
                size_t used = 0;
                Point value = std::stoll(text, &used);
                if (used != text.size())
                    throw DomainError("");
                return value;
            }
            catch (const std::exception &) {
                throw DomainError(string("bad ") + what + " '" + text + "' in cache record");
            }
        }
    }

    auto Record::to_line() const -> string
    {
        std::ostringstream out;
        out << (kind == RecordKind::Density ? "g" : "p") << ' '
            << pattern.to_string() << ' '
            << parameter << ' '
            << wavelab::to_string(mode) << ' '
            << value << ' '
            << (status == RecordStatus::Exact ? "exact" : "lower-bound") << ' '
            << (witness.empty() ? string("-") : join(witness));
        return out.str();
    }

    auto Record::parse_line(string_view line) -> Record
    {
        std::istringstream in{ string(line) };
        string kind, pattern, parameter, mode, value, status, witness, extra;
        if (! (in >> kind >> pattern >> parameter >> mode >> value >> status >> witness) || (in >> extra))
            throw DomainError("cache record needs exactly seven fields: '" + string(line) + "'");

        if (kind != "g" && kind != "p")
            throw DomainError("unknown record kind '" + kind + "'");
        if (status != "exact" && status != "lower-bound")
            throw DomainError("unknown record status '" + status + "'");

        return Record{
            kind == "g" ? RecordKind::Density : RecordKind::Coloring,
            Permutation::parse(pattern),
            parse_integer(parameter, "parameter"),
            parse_mode(mode),
            parse_integer(value, "value"),
            status == "exact" ? RecordStatus::Exact : RecordStatus::LowerBound,
            witness == "-" ? vector<Point>{} : parse_points(witness)
        };
    }

    auto verify_record(const Record & record) -> bool
    {
        try {
            if (record.parameter < 1)
                return false;

            if (record.kind == RecordKind::Density) {
                if (static_cast<Point>(record.witness.size()) != record.value)
                    return false;
                IntSet set{ record.witness, record.parameter };
                return ! find_wave(set, record.pattern, record.mode).has_value();
            }

            vector<int> colors(record.witness.begin(), record.witness.end());
            if (static_cast<Point>(colors.size()) != record.value - 1)
                return false;
            Coloring coloring{ static_cast<int>(record.parameter), std::move(colors) };
            WaveMatcher matcher{ record.pattern, record.mode };
            for (int c = 1 ; c <= coloring.palette() ; ++c)
                if (matcher.first_wave(coloring.color_class(c)))
                    return false;
            return true;
        }
        catch (const DomainError &) {
            return false;
        }
    }

    auto record_from(const DensityResult & result) -> Record
    {
        auto elements = result.witness.elements();
        return Record{ RecordKind::Density, result.pattern, result.n, result.mode, result.value,
            result.status == SearchStatus::Exact ? RecordStatus::Exact : RecordStatus::LowerBound,
            vector<Point>(elements.begin(), elements.end()) };
    }

    auto record_from(const ColoringResult & result) -> Record
    {
        return Record{ RecordKind::Coloring, result.pattern, result.r, result.mode, result.value,
            result.status == SearchStatus::Exact ? RecordStatus::Exact : RecordStatus::LowerBound,
            vector<Point>(result.extremal.colors().begin(), result.extremal.colors().end()) };
    }

    auto resolve_store_path(optional<string> explicit_path) -> std::filesystem::path
    {
        if (explicit_path)
            return *explicit_path;
        if (auto env = std::getenv(store_path_variable) ; env && *env)
            return env;
        return default_store_path;
    }

    Store::Store(std::filesystem::path path) :
        _path(std::move(path))
    {
        std::ifstream in{ _path };
        if (! in)
            return;

        string line;
        int line_number = 0;
        while (std::getline(in, line)) {
            ++line_number;
            if (line.find_first_not_of(" \t\r") == string::npos)
                continue;
            auto record = Record::parse_line(line);
            if (! verify_record(record))
                throw DomainError(_path.string() + ":" + std::to_string(line_number) + ": record fails verification");
            _records.push_back(std::move(record));
        }
    }

    auto Store::put(const Record & record) -> void
    {
        if (! verify_record(record))
            throw DomainError("refusing to store unverified record '" + record.to_line() + "'");

        for (auto & existing : _records) {
            if (existing.kind != record.kind || existing.pattern != record.pattern
                    || existing.parameter != record.parameter || existing.mode != record.mode)
                continue;
            if (existing == record)
                return;
            if (existing.status == RecordStatus::Exact && record.status == RecordStatus::Exact && existing.value != record.value)
                throw DomainError("conflicting exact values " + std::to_string(existing.value) + " and "
                        + std::to_string(record.value) + " for '" + record.to_line() + "'");
        }

        std::ofstream out{ _path, std::ios::app };
        if (! out)
            throw DomainError("cannot open cache file " + _path.string() + " for appending");
        out << record.to_line() << '\n';
        out.flush();
        if (! out)
            throw DomainError("failed writing cache file " + _path.string());

        _records.push_back(record);
    }

    auto Store::get(RecordKind kind, const Permutation & pattern, Point parameter, WaveMode mode) const -> optional<Record>
    {
        optional<Record> best;
        for (auto & record : _records) {
            if (record.kind != kind || record.pattern != pattern || record.parameter != parameter || record.mode != mode)
                continue;
            if (! best)
                best = record;
            else if (record.status == RecordStatus::Exact && best->status != RecordStatus::Exact)
                best = record;
            else if (record.status == best->status && record.value > best->value && record.status != RecordStatus::Exact)
                best = record;
        }
        return best;
    }
}
