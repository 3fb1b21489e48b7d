/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wavelab/errors.hh>
#include <wavelab/store.hh>

#include "temporary_file.hh"

#include <cstdlib>
#include <fstream>

using namespace wavelab;
using wavelab::testing::TemporaryFile;
using std::vector;

namespace
{
    auto density(const char * pi, Point n, Point value, vector<Point> witness, RecordStatus status = RecordStatus::Exact) -> Record
    {
        return Record{ RecordKind::Density, Permutation::parse(pi), n, WaveMode::Strict, value, status, std::move(witness) };
    }

    auto count_lines(const std::filesystem::path & path) -> int
    {
        std::ifstream in{ path };
        std::string line;
        int lines = 0;
        while (std::getline(in, line))
            ++lines;
        return lines;
    }
}

TEST_CASE("record lines round trip")
{
    auto record = density("2,1", 8, 4, { 1, 2, 4, 8 });
    CHECK(record.to_line() == "g 2,1 8 strict 4 exact 1,2,4,8");
    CHECK(Record::parse_line(record.to_line()) == record);

    Record coloring{ RecordKind::Coloring, Permutation::parse("1"), 3, WaveMode::Weak, 4, RecordStatus::LowerBound, { 1, 2, 3 } };
    CHECK(coloring.to_line() == "p 1 3 weak 4 lower-bound 1,2,3");
    CHECK(Record::parse_line(coloring.to_line()) == coloring);

    Record empty{ RecordKind::Coloring, Permutation::parse("1"), 1, WaveMode::Strict, 1, RecordStatus::Exact, {} };
    CHECK(empty.to_line() == "p 1 1 strict 1 exact -");
    CHECK(Record::parse_line(empty.to_line()) == empty);

    CHECK_THROWS_AS(Record::parse_line("g 2,1 8 strict 4 exact"), DomainError);
    CHECK_THROWS_AS(Record::parse_line("x 2,1 8 strict 4 exact 1"), DomainError);
    CHECK_THROWS_AS(Record::parse_line("g 2,1 8 strict four exact 1"), DomainError);
    CHECK_THROWS_AS(Record::parse_line("g 2,1 8 sideways 4 exact 1"), DomainError);
    CHECK_THROWS_AS(Record::parse_line("g 2,2 8 strict 4 exact 1"), DomainError);
}

TEST_CASE("verify_record")
{
    CHECK(verify_record(density("2,1", 8, 4, { 1, 2, 4, 8 })));
    CHECK(verify_record(density("2,1", 8, 4, { 1, 2, 3, 5 })));
    CHECK(! verify_record(density("2,1", 8, 4, { 1, 3, 4, 5 })));   // 1,3,4 is a wave
    CHECK(! verify_record(density("2,1", 8, 5, { 1, 2, 4, 8 })));   // wrong size
    CHECK(! verify_record(density("2,1", 7, 4, { 1, 2, 4, 8 })));   // outside [n]

    CHECK(verify_record(Record{ RecordKind::Coloring, Permutation::parse("1"), 3, WaveMode::Strict, 4, RecordStatus::Exact, { 1, 2, 3 } }));
    CHECK(! verify_record(Record{ RecordKind::Coloring, Permutation::parse("1"), 3, WaveMode::Strict, 4, RecordStatus::Exact, { 1, 1, 3 } }));
    CHECK(! verify_record(Record{ RecordKind::Coloring, Permutation::parse("1"), 2, WaveMode::Strict, 4, RecordStatus::Exact, { 1, 2, 3 } }));
}

TEST_CASE("store put and get")
{
    TemporaryFile file{ "wavelab-store" };
    Store store{ file.path() };
    CHECK(store.records().empty());

    auto record = density("2,1", 8, 4, { 1, 2, 4, 8 });
    store.put(record);
    CHECK(store.get(RecordKind::Density, Permutation::parse("2,1"), 8, WaveMode::Strict) == record);

    CHECK_THROWS_AS(store.put(density("2,1", 8, 5, { 1, 2, 3, 5, 8 })), DomainError);
    CHECK_THROWS_AS(store.put(density("2,1", 8, 3, { 1, 2, 4 })), DomainError);

    store.put(record);
    CHECK(store.records().size() == 1);
    CHECK(count_lines(file.path()) == 1);

    Record coloring{ RecordKind::Coloring, Permutation::parse("1"), 3, WaveMode::Strict, 4, RecordStatus::Exact, { 1, 2, 3 } };
    store.put(coloring);
    CHECK(store.get(RecordKind::Coloring, Permutation::parse("1"), 3, WaveMode::Strict) == coloring);

    CHECK(! store.get(RecordKind::Density, Permutation::parse("2,1"), 9, WaveMode::Strict));
    CHECK(! store.get(RecordKind::Density, Permutation::parse("2,1"), 8, WaveMode::Weak));
    CHECK(! store.get(RecordKind::Density, Permutation::parse("1,2"), 8, WaveMode::Strict));
    CHECK(! store.get(RecordKind::Coloring, Permutation::parse("2,1"), 8, WaveMode::Strict));

    CHECK_THROWS_AS(store.put(density("2,1", 8, 4, { 1, 3, 4, 5 })), DomainError);
}

TEST_CASE("store prefers exact records, then the largest lower bound")
{
    TemporaryFile file{ "wavelab-store" };
    Store store{ file.path() };
    store.put(density("2,1", 8, 3, { 1, 2, 4 }, RecordStatus::LowerBound));
    store.put(density("2,1", 8, 4, { 1, 2, 3, 5 }, RecordStatus::LowerBound));
    store.put(density("2,1", 8, 2, { 1, 2 }, RecordStatus::LowerBound));
    auto best = store.get(RecordKind::Density, Permutation::parse("2,1"), 8, WaveMode::Strict);
    REQUIRE(best);
    CHECK(best->value == 4);

    store.put(density("2,1", 8, 4, { 1, 2, 4, 8 }));
    best = store.get(RecordKind::Density, Permutation::parse("2,1"), 8, WaveMode::Strict);
    REQUIRE(best);
    CHECK(best->status == RecordStatus::Exact);
    CHECK(best->witness == vector<Point>{ 1, 2, 4, 8 });
}

TEST_CASE("store survives a reload")
{
    TemporaryFile file{ "wavelab-store" };
    {
        Store store{ file.path() };
        store.put(density("2,1", 8, 4, { 1, 2, 4, 8 }));
        store.put(record_from(exact_g(Permutation::parse("1,3,2"), 10)));
        store.put(record_from(exact_P(Permutation::parse("2,1"), 2)));
    }

    Store reloaded{ file.path() };
    CHECK(reloaded.records().size() == 3);
    auto p = reloaded.get(RecordKind::Coloring, Permutation::parse("2,1"), 2, WaveMode::Strict);
    REQUIRE(p);
    CHECK(p->value == 9);
    CHECK(p->witness == vector<Point>{ 1, 1, 1, 2, 2, 2, 1, 2 });
    auto g = reloaded.get(RecordKind::Density, Permutation::parse("1,3,2"), 10, WaveMode::Strict);
    REQUIRE(g);
    CHECK(g->value == exact_g(Permutation::parse("1,3,2"), 10).value);
}

TEST_CASE("loading a corrupt store fails")
{
    TemporaryFile file{ "wavelab-store" };
    {
        std::ofstream out{ file.path() };
        out << "g 2,1 8 strict 4 exact 1,2,4,8\n";
        out << "g 2,1 9 strict 5 exact 1,2,3,4,5\n";
    }
    CHECK_THROWS_AS(Store{ file.path() }, DomainError);

    {
        std::ofstream out{ file.path() };
        out << "g 2,1 8 strict 4 exact 1,2,4,8\n\n";
        out << "garbage\n";
    }
    CHECK_THROWS_AS(Store{ file.path() }, DomainError);

    {
        std::ofstream out{ file.path() };
        out << "g 2,1 8 strict 4 exact 1,2,4,8\n\n";
    }
    CHECK(Store{ file.path() }.records().size() == 1);
}

TEST_CASE("resolve_store_path")
{
    CHECK(resolve_store_path(std::string("explicit.txt")) == "explicit.txt");
    ::setenv(store_path_variable, "from-environment.txt", 1);
    CHECK(resolve_store_path(std::nullopt) == "from-environment.txt");
    CHECK(resolve_store_path(std::string("explicit.txt")) == "explicit.txt");
    ::unsetenv(store_path_variable);
    CHECK(resolve_store_path(std::nullopt) == default_store_path);
}
