#include <catch2/catch_amalgamated.hpp>

#include "fapx/instance.hpp"

using namespace fapx;

TEST_CASE("instance construction and accessors", "[instance]") {
    PartitionInstance inst({3, 1, 1}, 2);
    CHECK(inst.item_count() == 3);
    CHECK(inst.bins() == 2);
    CHECK(inst.total() == 5);
    CHECK(inst.bit_len() == 4);  // 2 + 1 + 1 bits

    PartitionInstance empty;
    CHECK(empty.item_count() == 0);
    CHECK(empty.bins() == 2);
    CHECK(empty.total() == 0);
    CHECK(empty.bit_len() == 0);

    CHECK(PartitionInstance({8}, 2).bit_len() == 4);
    CHECK(bit_len(inst) == 4);

    CHECK_THROWS_AS(PartitionInstance({1, 2}, 1), ParameterError);
    CHECK_THROWS_AS(PartitionInstance({BigInt(-1)}, 2), ParameterError);
}

TEST_CASE("parse_instance happy paths", "[instance]") {
    const auto inst = parse_instance("k 2\n3 1 1\n");
    CHECK(inst == PartitionInstance({3, 1, 1}, 2));

    CHECK(parse_instance("k 4\n") == PartitionInstance({}, 4));
    CHECK(parse_instance("k 2") == PartitionInstance({}, 2));
    CHECK(parse_instance("k 2\r\n3 1 1\r\n") == PartitionInstance({3, 1, 1}, 2));
    CHECK(parse_instance("k 3\n 7   9 \n\n \n") == PartitionInstance({7, 9}, 3));
    CHECK(parse_instance("k 2\n0 0\n") == PartitionInstance({0, 0}, 2));
    // sizes beyond 64 bits survive parsing
    CHECK(parse_instance("k 2\n36893488147419103232\n").sizes()[0] == BigInt(1) << 65);
}

TEST_CASE("parse_instance names the offending line", "[instance]") {
    auto message_of = [](const char* text) {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message_of("") == "line 1: expected 'k <int>'");
    CHECK(message_of("j 2\n1 2\n").find("line 1") == 0);
    CHECK(message_of("k 1\n1 2\n") == "line 1: k must be >= 2");
    CHECK(message_of("k 2 extra\n").find("line 1") == 0);
    CHECK(message_of("k 2\n3 -1\n") == "line 2: negative size '-1'");
    CHECK(message_of("k 2\n3 x\n") == "line 2: malformed size 'x'");
    CHECK(message_of("k 2\n1 2\n7\n") == "line 3: unexpected content");
    CHECK(message_of("k 2\n1.5\n").find("line 2") == 0);
}

TEST_CASE("format_instance round-trips", "[instance]") {
    const PartitionInstance a({3, 1, 1}, 2);
    CHECK(format_instance(a) == "k 2\n3 1 1\n");
    CHECK(parse_instance(format_instance(a)) == a);

    const PartitionInstance b({}, 4);
    CHECK(format_instance(b) == "k 4\n");
    CHECK(parse_instance(format_instance(b)) == b);
}

TEST_CASE("assignment bin sums", "[instance]") {
    const PartitionInstance inst({3, 1, 1}, 2);
    const Assignment a{{0, 1, 1}};
    CHECK((a.bin_sums(inst) == std::vector<BigInt>{3, 2}));
    CHECK(a.min_bin_sum(inst) == 2);

    const Assignment all_first{{0, 0, 0}};
    CHECK(all_first.min_bin_sum(inst) == 0);

    const Assignment too_short{{0, 1}};
    const Assignment bad_bin{{0, 1, 2}};
    const Assignment negative_bin{{0, 1, -1}};
    CHECK_THROWS_AS(too_short.bin_sums(inst), ParameterError);
    CHECK_THROWS_AS(bad_bin.bin_sums(inst), ParameterError);
    CHECK_THROWS_AS(negative_bin.bin_sums(inst), ParameterError);

    const PartitionInstance empty;
    CHECK(Assignment{{}}.min_bin_sum(empty) == 0);
}

TEST_CASE("approx outcome carries value and optional witness", "[instance]") {
    ApproxOutcome none = std::nullopt;
    CHECK_FALSE(none.has_value());

    ApproxOutcome some = Feasible{make_rat(5, 2), Assignment{{0, 1}}};
    REQUIRE(some.has_value());
    CHECK(some->value == make_rat(5, 2));
    REQUIRE(some->witness.has_value());
    CHECK((some->witness->bin_of == std::vector<int>{0, 1}));
}
