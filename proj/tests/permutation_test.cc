/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wavelab/errors.hh>
#include <wavelab/permutation.hh>

#include "oracles.hh"

#include <span>

using namespace wavelab;
using std::vector;

namespace
{
    auto P(const char * text) -> Permutation
    {
        return Permutation::parse(text);
    }

    auto norm(vector<long long> v) -> Permutation
    {
        return normalize(v);
    }
}

TEST_CASE("parse accepts comma and compact forms")
{
    CHECK(P("4,3,1,2").values() == vector{ 4, 3, 1, 2 });
    CHECK(P("4312") == P("4,3,1,2"));
    CHECK(P(" 1 ").values() == vector{ 1 });
    CHECK(P("10,9,8,7,6,5,4,3,2,1").size() == 10);
    CHECK(P("4312").to_string() == "4,3,1,2");

    CHECK_THROWS_AS(P(""), DomainError);
    CHECK_THROWS_AS(P("1,1"), DomainError);
    CHECK_THROWS_AS(P("1,3"), DomainError);
    CHECK_THROWS_AS(P("0"), DomainError);
    CHECK_THROWS_AS(P("1,x"), DomainError);
    CHECK_THROWS_AS(P("1234567891"), DomainError);
}

TEST_CASE("normalize")
{
    CHECK(norm({ 5, 9, 2 }) == P("2,3,1"));
    CHECK(norm({ 10, 20, 30 }) == P("1,2,3"));
    CHECK(norm({ 4, 3, 2 }) == P("3,2,1"));
    CHECK_THROWS_AS(norm({}), DomainError);
    CHECK_THROWS_AS(norm({ 3, 1, 3 }), DomainError);

    for (int k = 1 ; k <= 6 ; ++k)
        for (auto & pi : oracle::all_permutations(k))
            CHECK(norm(vector<long long>(pi.values().begin(), pi.values().end())) == pi);
}

TEST_CASE("reverse")
{
    CHECK(reverse(P("2,1")) == P("1,2"));
    CHECK(reverse(P("1,4,2,3")) == P("3,2,4,1"));
    CHECK(reverse(reverse(P("4,3,1,2"))) == P("4,3,1,2"));
}

TEST_CASE("remove_values")
{
    CHECK(remove_values(P("4,3,1,2"), { 1 }) == P("3,2,1"));
    CHECK(remove_values(P("1,4,2,3"), { 1, 2 }) == P("2,1"));
    CHECK(remove_values(P("2,1"), { 1 }) == P("1"));
    CHECK_THROWS_AS(remove_values(P("2,1"), { 3 }), DomainError);
    CHECK_THROWS_AS(remove_values(P("2,1"), { 1, 2 }), DomainError);
}

TEST_CASE("peaks")
{
    CHECK(peaks(P("4,3,1,2")).empty());
    CHECK(peaks(P("1,4,2,3")) == vector{ 2 });
    CHECK(peaks(P("2,1")).empty());
    CHECK(peaks(P("7,8,9,6,2,3,4,5,1")) == vector{ 3, 8 });
}

TEST_CASE("layers")
{
    auto example = layers(P("7,8,9,6,2,3,4,5,1"));
    REQUIRE(example);
    CHECK(*example == vector<Layer>{ { 1, 3 }, { 4, 4 }, { 5, 8 }, { 9, 9 } });

    auto descending = layers(P("3,2,1"));
    REQUIRE(descending);
    CHECK(descending->size() == 3);

    CHECK(! layers(P("2,3,1,4")));
    CHECK(! layers(P("1,3,2")));
    CHECK(layers(P("1,2,3"))->size() == 1);
}

TEST_CASE("direct_difference")
{
    CHECK(direct_difference(P("1,2"), P("2,1")) == P("3,4,2,1"));
    CHECK(direct_difference(P("1"), P("1")) == P("2,1"));
    CHECK(direct_difference(P("1,2,3"), P("1")) == P("2,3,4,1"));

    for (int a = 1 ; a <= 3 ; ++a)
        for (int b = 1 ; b <= 3 ; ++b)
            for (auto & left : oracle::all_permutations(a))
                for (auto & right : oracle::all_permutations(b)) {
                    auto combined = direct_difference(left, right);
                    vector<long long> head(combined.values().begin(), combined.values().begin() + a);
                    vector<int> tail(combined.values().begin() + a, combined.values().end());
                    CHECK(normalize(head) == left);
                    CHECK(tail == right.values());
                }
}

TEST_CASE("classify fixtures")
{
    auto a = classify(P("4,3,1,2"));
    CHECK(a.exponent_lb == 3);
    CHECK(a.exponent_ub == 3);

    auto b = classify(P("1,4,2,3"));
    CHECK(b.exponent_lb == 2);
    CHECK(b.exponent_ub == 2);

    auto c = classify(P("7,8,9,6,2,3,4,5,1"));
    CHECK(c.nonfinal_big_layers == 2);
    CHECK(c.exponent_lb == 6);
    CHECK(c.exponent_ub == 6);

    auto single = classify(P("1"));
    CHECK(single.exponent_lb == 0);
    CHECK(single.exponent_ub == 0);

    CHECK_THROWS_AS(classify(P("1,2,3,4,5,6,7,8,9,10,11,12,13")), DomainError);
    CHECK_NOTHROW(classify(P("1,2,3,4,5,6,7,8,9,10,11,12,13"), 13));
}

TEST_CASE("structural properties, exhaustive to k = 7")
{
    for (int k = 1 ; k <= 7 ; ++k)
        for (auto & pi : oracle::all_permutations(k)) {
            CAPTURE(pi.to_string());
            auto pk = peaks(pi);

            CHECK(reverse(reverse(pi)) == pi);
            if (pk.empty())
                CHECK((pi.position_of(k) == 1 || pi.position_of(k) == k));

            if (auto ls = layers(pi)) {
                bool small_nonfinal = true;
                for (size_t i = 0 ; i + 1 < ls->size() ; ++i)
                    if ((*ls)[i].size() >= 2)
                        small_nonfinal = false;
                CHECK(pk.empty() == small_nonfinal);
            }

            auto c = classify(pi);
            if (c.exponent_lb)
                CHECK(*c.exponent_lb <= c.exponent_ub);
            if (pk.empty()) {
                CHECK(c.exponent_lb == k - 1);
                CHECK(c.exponent_ub == k - 1);
            }
            if (c.layers) {
                CHECK(c.exponent_lb == k - c.nonfinal_big_layers - 1);
                CHECK(c.exponent_ub == k - c.nonfinal_big_layers - 1);
            }
            // a peak always saves at least one factor
            if (! pk.empty())
                CHECK(c.exponent_ub <= k - 2);

            // never weaker than the bound for a pattern with an end entry deleted
            if (k >= 2) {
                vector<long long> values(pi.values().begin(), pi.values().end());
                auto tail = classify(normalize(std::span<const long long>(values).subspan(1)));
                auto head = classify(normalize(std::span<const long long>(values).first(k - 1)));
                REQUIRE(c.exponent_lb);
                CHECK(*c.exponent_lb >= tail.exponent_lb.value_or(0));
                CHECK(*c.exponent_lb >= head.exponent_lb.value_or(0));
            }
        }
}
