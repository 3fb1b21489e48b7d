/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include "cli.hh"

#include <wavelab/constructions.hh>
#include <wavelab/errors.hh>
#include <wavelab/permutation.hh>
#include <wavelab/solvers.hh>
#include <wavelab/store.hh>
#include <wavelab/waves.hh>

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

using std::optional;
using std::ostream;
using std::string;
using std::vector;

namespace wavelab::cli
{
    namespace
    {
        auto mode_of(bool weak) -> WaveMode
        {
            return weak ? WaveMode::Weak : WaveMode::Strict;
        }

        auto format_layers(const vector<Layer> & layers, const Permutation & pi) -> string
        {
            string result;
            for (auto & layer : layers) {
                if (! result.empty())
                    result += " | ";
                vector<Point> values;
                for (int i = layer.start ; i <= layer.end ; ++i)
                    values.push_back(pi(i));
                result += join(values);
            }
            return result;
        }

        auto csv_field(const string & text) -> string
        {
            if (text.find_first_of(",\"") == string::npos)
                return text;
            string quoted = "\"";
            for (char c : text) {
                if (c == '"')
                    quoted += '"';
                quoted += c;
            }
            return quoted + "\"";
        }

        struct CacheOptions
        {
            optional<string> path;
            bool disabled = false;

            auto open() const -> std::unique_ptr<Store>
            {
                if (disabled)
                    return nullptr;
                return std::make_unique<Store>(resolve_store_path(path));
            }
        };

        auto add_cache_options(CLI::App * command, CacheOptions & cache) -> void
        {
            command->add_option("--cache", cache.path, "Cache file (default $WAVELAB_CACHE or ./wavelab-cache.txt)");
            command->add_flag("--no-cache", cache.disabled, "Neither read nor write the cache");
        }

        auto density_record(const Permutation & pi, Point n, WaveMode mode, long long budget, Store * store) -> Record
        {
            if (store)
                if (auto cached = store->get(RecordKind::Density, pi, n, mode) ; cached && cached->status == RecordStatus::Exact)
                    return *cached;
            auto record = record_from(exact_g(pi, n, mode, SearchLimits{ budget }));
            if (store)
                store->put(record);
            return record;
        }

        auto coloring_record(const Permutation & pi, int r, WaveMode mode, long long budget, Store * store) -> Record
        {
            if (store)
                if (auto cached = store->get(RecordKind::Coloring, pi, r, mode) ; cached && cached->status == RecordStatus::Exact)
                    return *cached;
            auto record = record_from(exact_P(pi, r, mode, SearchLimits{ budget }));
            if (store)
                store->put(record);
            return record;
        }

        auto print_record(const Record & record, ostream & out) -> int
        {
            if (record.status == RecordStatus::Exact)
                out << record.value << '\n';
            else
                out << ">= " << record.value << " (incomplete: node budget exhausted)\n";
            out << (record.witness.empty() ? string("-") : join(record.witness)) << '\n';
            return record.status == RecordStatus::Exact ? exit_ok : exit_incomplete;
        }

        auto read_file(const string & path) -> string
        {
            std::ifstream in{ path };
            if (! in)
                throw DomainError("cannot read " + path);
            std::ostringstream content;
            content << in.rdbuf();
            string text = content.str();
            // colours may be separated by commas, spaces or newlines
            string normalised;
            bool pending = false;
            for (char c : text) {
                if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
                    pending = ! normalised.empty();
                else {
                    if (pending)
                        normalised += ',';
                    pending = false;
                    normalised += c;
                }
            }
            return normalised;
        }
    }

    auto run(const vector<string> & args, ostream & out, ostream & err) -> int
    {
        CLI::App app{ "Exact computation and construction checking for permutation pattern waves", "wavelab" };
        app.require_subcommand(1);

        int result = exit_ok;

        // classify
        string classify_pattern;
        int classify_cap = default_classify_cap;
        auto classify_command = app.add_subcommand("classify", "Peaks, layers and exponent interval of a pattern");
        classify_command->add_option("pattern", classify_pattern, "Pattern, e.g. 4,3,1,2")->required();
        classify_command->add_option("--max-k", classify_cap, "Refuse patterns longer than this");
        classify_command->callback([&] {
            auto pi = Permutation::parse(classify_pattern);
            auto c = classify(pi, classify_cap);
            out << "pattern " << pi.to_string() << '\n';
            if (c.peaks.empty())
                out << "peaks -\n";
            else {
                vector<Point> peak_positions(c.peaks.begin(), c.peaks.end());
                out << "peaks " << join(peak_positions) << '\n';
            }
            if (c.layers) {
                vector<Point> sizes;
                for (auto & layer : *c.layers)
                    sizes.push_back(layer.size());
                out << "layered yes\n";
                out << "layers " << format_layers(*c.layers, pi) << '\n';
                out << "layer-sizes " << join(sizes) << '\n';
                out << "nonfinal-big-layers " << c.nonfinal_big_layers << '\n';
            }
            else
                out << "layered no\n";
            out << "exponent " << (c.exponent_lb ? std::to_string(*c.exponent_lb) : string("?")) << ".." << c.exponent_ub << '\n';
        });

        // detect
        string detect_pattern, detect_points;
        bool detect_weak = false;
        auto detect_command = app.add_subcommand("detect", "Is the given sequence a wave of the pattern?");
        detect_command->add_option("--pi", detect_pattern, "Pattern")->required();
        detect_command->add_option("--seq", detect_points, "Comma-separated points")->required();
        detect_command->add_flag("--weak", detect_weak, "Weak-difference waves");
        detect_command->callback([&] {
            auto pi = Permutation::parse(detect_pattern);
            auto points = parse_points(detect_points);
            out << (is_wave(points, pi, mode_of(detect_weak)) ? "wave" : "not-wave") << '\n';
        });

        // search
        string search_pattern, search_set;
        optional<Point> search_universe;
        bool search_weak = false;
        auto search_command = app.add_subcommand("search", "Find the lexicographically least wave in a set");
        search_command->add_option("--pi", search_pattern, "Pattern")->required();
        search_command->add_option("--set", search_set, "Comma-separated increasing integers")->required();
        search_command->add_option("--n", search_universe, "Universe (default: largest element)");
        search_command->add_flag("--weak", search_weak, "Weak-difference waves");
        search_command->callback([&] {
            auto pi = Permutation::parse(search_pattern);
            auto set = IntSet::parse(search_set, search_universe);
            if (auto witness = find_wave(set, pi, mode_of(search_weak)))
                out << join(witness->points) << '\n';
            else
                out << "wave-free\n";
        });

        // g
        string g_pattern;
        Point g_n = 0;
        bool g_weak = false;
        long long g_budget = default_node_budget;
        CacheOptions g_cache;
        auto g_command = app.add_subcommand("g", "Largest wave-free subset of [n]");
        g_command->add_option("--pi", g_pattern, "Pattern")->required();
        g_command->add_option("--n", g_n, "Universe size")->required()->check(CLI::PositiveNumber);
        g_command->add_flag("--weak", g_weak, "Weak-difference waves");
        g_command->add_option("--budget", g_budget, "Search node budget");
        add_cache_options(g_command, g_cache);
        g_command->callback([&] {
            auto pi = Permutation::parse(g_pattern);
            auto store = g_cache.open();
            result = print_record(density_record(pi, g_n, mode_of(g_weak), g_budget, store.get()), out);
        });

        // p
        string p_pattern;
        int p_r = 0;
        bool p_weak = false;
        long long p_budget = default_node_budget;
        CacheOptions p_cache;
        auto p_command = app.add_subcommand("p", "Least M forcing a monochromatic wave in every r-colouring of [M]");
        p_command->add_option("--pi", p_pattern, "Pattern")->required();
        p_command->add_option("--r", p_r, "Number of colours")->required()->check(CLI::PositiveNumber);
        p_command->add_flag("--weak", p_weak, "Weak-difference waves");
        p_command->add_option("--budget", p_budget, "Search node budget");
        add_cache_options(p_command, p_cache);
        p_command->callback([&] {
            auto pi = Permutation::parse(p_pattern);
            auto store = p_cache.open();
            result = print_record(coloring_record(pi, p_r, mode_of(p_weak), p_budget, store.get()), out);
        });

        // bound
        string bound_pattern;
        Point bound_n = 0;
        auto bound_command = app.add_subcommand("bound", "Recursive upper bound on g(pi, n)");
        bound_command->add_option("--pi", bound_pattern, "Pattern")->required();
        bound_command->add_option("--n", bound_n, "Universe size, at least 2")->required();
        bound_command->callback([&] {
            auto value = recursive_upper_bound_g(Permutation::parse(bound_pattern), bound_n);
            char buffer[128];
            std::snprintf(buffer, sizeof(buffer), "%.0Lf", value);
            out << buffer << '\n';
        });

        // extract
        string extract_pattern, extract_set;
        optional<Point> extract_universe;
        bool extract_strong = false, extract_trace = false;
        auto extract_command = app.add_subcommand("extract", "Run the pigeonhole wave-extraction procedure on a set");
        extract_command->add_option("--pi", extract_pattern, "Pattern")->required();
        extract_command->add_option("--set", extract_set, "Comma-separated increasing integers")->required();
        extract_command->add_option("--n", extract_universe, "Universe (default: largest element)");
        extract_command->add_flag("--strong", extract_strong, "Remove both 1 and 2 (they must be non-adjacent)");
        extract_command->add_flag("--trace", extract_trace, "Print every step");
        extract_command->callback([&] {
            auto pi = Permutation::parse(extract_pattern);
            auto set = IntSet::parse(extract_set, extract_universe);
            auto extraction = extract_strong ? extract_wave_strong(set, pi) : extract_wave_main(set, pi);
            if (extract_trace)
                out << format_trace(extraction);
            else if (extraction.witness)
                out << join(extraction.witness->points) << '\n';
            else
                out << "failure " << to_string(extraction.failure->step) << ": " << extraction.failure->message << '\n';
            if (! extraction.succeeded())
                result = exit_domain_error;
        });

        // construct
        auto construct_command = app.add_subcommand("construct", "Build and verify a wave-free colouring");
        construct_command->require_subcommand(1);

        string ez_pattern, ez_base, ez_tail;
        bool ez_weak = false;
        auto ez_command = construct_command->add_subcommand("ezconst", "Double a colouring of a pattern beginning with k");
        ez_command->add_option("--pi", ez_pattern, "Pattern beginning with its largest value")->required();
        ez_command->add_option("--base", ez_base, "Wave-free colouring for the pattern")->required();
        ez_command->add_option("--tail", ez_tail, "Wave-free colouring for the pattern with k deleted")->required();
        ez_command->add_flag("--weak", ez_weak, "Weak-difference waves");
        ez_command->callback([&] {
            auto pi = Permutation::parse(ez_pattern);
            int r = std::max(Coloring::parse(ez_base).palette(), Coloring::parse(ez_tail).palette());
            auto base = Coloring::parse(ez_base, r);
            auto tail = Coloring::parse(ez_tail, r);
            auto coloring = ezconst_coloring(pi, base, tail, mode_of(ez_weak));
            out << coloring.to_string() << '\n';
        });

        string product_left_pattern, product_right_pattern, product_left, product_right;
        int product_m = 0;
        auto product_command = construct_command->add_subcommand("product", "Product colouring for a direct difference");
        product_command->add_option("--left-pi", product_left_pattern, "Left pattern")->required();
        product_command->add_option("--right-pi", product_right_pattern, "Right pattern")->required();
        product_command->add_option("--m", product_m, "Palette of the input colourings")->required()->check(CLI::PositiveNumber);
        product_command->add_option("--left", product_left, "Colouring free of weak left-pattern waves")->required();
        product_command->add_option("--right", product_right, "Colouring free of weak right-pattern waves, length divisible by 5")->required();
        product_command->callback([&] {
            auto coloring = product_coloring(Permutation::parse(product_left_pattern), Permutation::parse(product_right_pattern),
                    product_m, Coloring::parse(product_left, product_m), Coloring::parse(product_right, product_m));
            out << coloring.to_string() << '\n';
        });

        // table
        string table_kind, table_pattern, table_csv;
        Point table_min = 1, table_max = 0;
        bool table_weak = false;
        long long table_budget = default_node_budget;
        CacheOptions table_cache;
        auto table_command = app.add_subcommand("table", "Write a CSV table of exact values");
        table_command->add_option("--kind", table_kind, "g or p")->required()->check(CLI::IsMember({ "g", "p" }));
        table_command->add_option("--pi", table_pattern, "Pattern")->required();
        table_command->add_option("--min", table_min, "Smallest parameter")->check(CLI::PositiveNumber);
        table_command->add_option("--max", table_max, "Largest parameter")->required();
        table_command->add_option("--csv", table_csv, "Output path, or - for stdout")->required();
        table_command->add_flag("--weak", table_weak, "Weak-difference waves");
        table_command->add_option("--budget", table_budget, "Search node budget");
        add_cache_options(table_command, table_cache);
        table_command->callback([&] {
            auto pi = Permutation::parse(table_pattern);
            auto mode = mode_of(table_weak);
            auto store = table_cache.open();

            vector<Record> rows;
            if (table_kind == "g" && table_min <= table_max) {
                bool all_cached = store != nullptr;
                for (Point n = table_min ; all_cached && n <= table_max ; ++n) {
                    auto cached = store->get(RecordKind::Density, pi, n, mode);
                    if (cached && cached->status == RecordStatus::Exact)
                        rows.push_back(*cached);
                    else
                        all_cached = false;
                }
                if (! all_cached) {
                    rows.clear();
                    auto table = exact_g_table(pi, table_max, mode, SearchLimits{ table_budget });
                    for (Point n = table_min ; n <= table_max ; ++n) {
                        auto record = record_from(table[n - 1]);
                        if (store)
                            store->put(record);
                        rows.push_back(record);
                    }
                }
            }
            else if (table_kind == "p") {
                for (Point r = table_min ; r <= table_max ; ++r)
                    rows.push_back(coloring_record(pi, static_cast<int>(r), mode, table_budget, store.get()));
            }

            std::ofstream file;
            ostream * sink = &out;
            if (table_csv != "-") {
                file.open(table_csv);
                if (! file)
                    throw DomainError("cannot write " + table_csv);
                sink = &file;
            }

            *sink << "pattern,param,mode,value,status,witness\n";
            for (auto & row : rows) {
                *sink << csv_field(row.pattern.to_string()) << ',' << row.parameter << ',' << to_string(row.mode) << ','
                    << row.value << ',' << (row.status == RecordStatus::Exact ? "exact" : "incomplete") << ','
                    << csv_field(row.witness.empty() ? string("-") : join(row.witness)) << '\n';
                if (row.status != RecordStatus::Exact)
                    result = exit_incomplete;
            }
            sink->flush();
            if (! *sink)
                throw DomainError("failed writing " + table_csv);
        });

        // verify
        string verify_file, verify_pattern;
        bool verify_weak = false;
        auto verify_command = app.add_subcommand("verify", "Check a colouring file for monochromatic waves");
        verify_command->add_option("--coloring", verify_file, "File of colours separated by commas or whitespace")->required();
        verify_command->add_option("--pi", verify_pattern, "Pattern")->required();
        verify_command->add_flag("--weak", verify_weak, "Weak-difference waves");
        verify_command->callback([&] {
            auto pi = Permutation::parse(verify_pattern);
            auto coloring = Coloring::parse(read_file(verify_file));
            if (auto wave = find_monochromatic_wave(coloring, pi, mode_of(verify_weak))) {
                out << "monochromatic colour " << wave->first << ": " << join(wave->second) << '\n';
                result = exit_domain_error;
            }
            else
                out << "wave-free\n";
        });

        vector<const char *> argv{ "wavelab" };
        for (auto & arg : args)
            argv.push_back(arg.c_str());

        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::CallForHelp &) {
            out << app.help();
            return exit_ok;
        }
        catch (const CLI::ParseError & e) {
            err << "wavelab: " << e.what() << '\n';
            return exit_usage_error;
        }
        catch (const DomainError & e) {
            err << "wavelab: " << e.what() << '\n';
            return exit_domain_error;
        }
        catch (const VerificationFailure & e) {
            err << "wavelab: internal verification failure: " << e.what() << '\n';
            return exit_domain_error;
        }

        return result;
    }
}
