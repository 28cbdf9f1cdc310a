#include "mubar/errors.hpp"
#include "mubar/link.hpp"
#include "mubar/link_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <string>
#include <unistd.h>

using namespace mubar;

TEST_CASE("link: closure components follow the braid permutation") {
    CHECK_EQ(closure_components(BraidWord(2, {1})),
             std::vector<std::vector<int>>{{1, 2}});
    CHECK_EQ(closure_components(BraidWord(2, {1, 1})),
             std::vector<std::vector<int>>{{1}, {2}});
    CHECK_EQ(closure_components(BraidWord(3, {1})),
             std::vector<std::vector<int>>{{1, 2}, {3}});
}

TEST_CASE("link: closure linking matrix of the hopf braid") {
    CHECK_EQ(closure_linking_matrix(BraidWord(2, {1, 1})),
             std::vector<std::vector<long long>>{{0, 1}, {1, 0}});
    CHECK_EQ(closure_linking_matrix(BraidWord(2, {-1, -1})),
             std::vector<std::vector<long long>>{{0, -1}, {-1, 0}});
}

TEST_CASE("link: closure diagram meridians sit at strand positions") {
    const PDCode pd = closure_diagram(BraidWord(2, {1, 1}));
    CHECK_EQ(pd.component_of(1), 1);
    CHECK_EQ(pd.component_of(2), 2);
    CHECK_EQ(pd.num_components(), 2);
    CHECK_EQ(pd.crossings().size(), 2);
}

TEST_CASE("link: variant accessors") {
    const Link lb(BraidWord(2, {1, 1}));
    CHECK(lb.from_braid());
    CHECK_EQ(lb.component_count(), 2);
    CHECK_EQ(lb.diagram(), closure_diagram(lb.braid()));
    CHECK_EQ(lb.linking_matrix(), closure_linking_matrix(lb.braid()));

    const Link lp(closure_diagram(BraidWord(2, {1, 1})));
    CHECK_FALSE(lp.from_braid());
    CHECK_EQ(lp.diagram(), lp.pd());
}

TEST_CASE("link: braid json round-trip") {
    const std::string text =
        R"({"type": "braid", "strands": 3, "word": "s2 s1^-1 s2 s1^-1 s2 s1^-1"})";
    const Link link = parse_link(text);
    REQUIRE(link.from_braid());
    CHECK_EQ(link.braid().strands(), 3);
    CHECK_EQ(link.braid().length(), 6);
    const Link again = parse_link(serialize_link(link));
    REQUIRE(again.from_braid());
    CHECK_EQ(again.braid(), link.braid());
}

TEST_CASE("link: pd json round-trip") {
    const Link link(closure_diagram(BraidWord(2, {1, 1})).relabeled_sequential());
    const Link again = parse_link(serialize_link(link));
    REQUIRE_FALSE(again.from_braid());
    CHECK_EQ(again.pd(), link.pd());
}

TEST_CASE("link: parse errors carry the offending field") {
    CHECK_THROWS_AS(parse_link("not json"), ParseError);
    CHECK_THROWS_AS(parse_link(R"({"type": "unknown"})"), ParseError);
    CHECK_THROWS_AS(parse_link(R"({"type": "braid", "strands": 3})"), ParseError);
    CHECK_THROWS_AS(parse_link(R"({"type": "braid", "strands": "x", "word": "s1"})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_link(R"({"type": "pd", "crossings": [[1, 2, 3, 4]], "components": [[1]]})"),
        ParseError);
}

TEST_CASE("link: inconsistent pd json fails validation") {
    // Structurally well-formed JSON whose first sign contradicts the cycles.
    const std::string good =
        R"({"type": "pd", "crossings": [[1, 4, 2, 3, 1], [4, 1, 3, 2, 1]],
            "components": [[1, 2], [3, 4]]})";
    CHECK_EQ(parse_link(good).pd().linking_number(1, 2), 1);
    const std::string flipped =
        R"({"type": "pd", "crossings": [[1, 4, 2, 3, -1], [4, 1, 3, 2, 1]],
            "components": [[1, 2], [3, 4]]})";
    CHECK_THROWS_AS(parse_link(flipped), ValidationError);
}

TEST_CASE("link: file save and load round-trip") {
    namespace fs = std::filesystem;
    const fs::path path =
        fs::temp_directory_path() / ("mubar-test-" + std::to_string(getpid()) + ".json");
    const Link link(BraidWord(3, {2, -1, 2, -1, 2, -1}));
    save_link(link, path.string());
    const Link loaded = load_link(path.string());
    REQUIRE(loaded.from_braid());
    CHECK_EQ(loaded.braid(), link.braid());
    fs::remove(path);

    CHECK_THROWS_AS(load_link((path / "missing.json").string()), ParseError);
}
