#include <doctest.h>

#include <stdexcept>
#include <string>

#include "subdual/errors.hpp"
#include "subdual/json_io.hpp"

using namespace subdual;

namespace {

const std::string kLe =
    R"({"atoms":[2,2],"kind":"subordination","pairs":[[0,0],[0,1],[0,2],[0,3],[1,1],[1,3],[2,2],[2,3],[3,3]]})";

std::string message_of(const std::string& text)
{
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("canonical round trip of every enumerated structure")
{
    for (SpaceKind kind : {SpaceKind::relations, SpaceKind::equivalences, SpaceKind::sub_cores, SpaceKind::compatible_subs,
                           SpaceKind::map_subs, SpaceKind::devries_morphisms, SpaceKind::split_morphisms})
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (const Instance& inst : enumerate({kind, a, b, std::nullopt})) {
                    const Document doc = instance_document(kind, inst);
                    const std::string text = emit(doc);
                    const Document back = parse_document(text);
                    CHECK(back.kind == doc.kind);
                    CHECK(back.value == doc.value);
                    CHECK(emit(back) == text);
                    CHECK(check_document(back).empty());
                }
}

TEST_CASE("key order and whitespace do not matter")
{
    const Document d = parse_document(R"({ "kind": "subordination", "pairs": [[3,3],[0,0],[0,1],[0,2],[0,3],[1,1],[1,3],[2,2],[2,3]],
                                           "atoms": [2, 2] })");
    CHECK(emit(d) == kLe);
    CHECK(std::get<Subordination>(d.value) == Subordination::order(BoolAlg(2)));
}

TEST_CASE("parse errors name a line or a field")
{
    CHECK(message_of("{\"kind\":\"subordination\",\n\"atoms\":[2,2],") .find("line 2") != std::string::npos);
    CHECK(message_of("{\"kind\":\"widget\"}").find("field 'kind'") != std::string::npos);
    CHECK(message_of("{\"atoms\":[1,1]}").find("kind") != std::string::npos);
    CHECK(message_of("[1,2]") == "top level must be an object");
    CHECK(message_of(R"({"kind":"subordination","atoms":[1,1],"pairs":[[0,5]]})").find("field 'pairs") != std::string::npos);
    CHECK(message_of(R"({"kind":"relation","points":[2,99],"pairs":[]})").find("field 'points") != std::string::npos);
    CHECK(message_of(R"({"kind":"qsh","atoms":[1,1],"table":[0]})").find("field 'table'") != std::string::npos);
}

TEST_CASE("check reports violations")
{
    const Document empty = parse_document(R"({"kind":"subordination","atoms":[2,2],"pairs":[]})");
    const auto v = check_document(empty);
    REQUIRE_FALSE(v.empty());
    CHECK(v.front() == "S1 violated at (0,0)");
    CHECK(check_document(parse_document(kLe)).empty());
    const Document merged =
        parse_document(R"({"atoms":2,"kind":"devries-algebra","pairs":[[0,0],[0,1],[0,2],[0,3],[1,3],[2,3],[3,3]]})");
    const auto w = check_document(merged);
    REQUIRE_FALSE(w.empty());
    CHECK(w.front() == "S8 violated at a=1");
    CHECK_FALSE(check_document(parse_document(R"({"kind":"equivalence","points":2,"pairs":[[0,1]]})")).empty());
}

TEST_CASE("conversions")
{
    const Document le = parse_document(kLe);
    const Document q = convert(le, "qsh");
    CHECK(emit(q) == R"({"atoms":[2,2],"kind":"qsh","table":[0,1,2,3]})");
    CHECK(emit(convert(q, "subordination")) == kLe);
    const Document ar = convert(le, "atom-relation");
    CHECK(std::get<Rel>(ar.value) == Rel::identity(Carrier{2}));
    CHECK(emit(convert(ar, "subordination")) == kLe);

    const Document id = parse_document(R"({"kind":"devries-function","atoms":[2,2],"table":[0,1,2,3]})");
    const Document ms = convert(id, "map-subordination");
    CHECK(std::get<Subordination>(ms.value) == Subordination::order(BoolAlg(2)));
    CHECK(emit(convert(ms, "devries-function")) == emit(id));
    const Document af = convert(id, "atom-function");
    CHECK(std::get<AtomFunction>(af.value).table == std::vector<int>{0, 1});
    CHECK(emit(convert(af, "devries-function")) == emit(id));

    const Document e = parse_document(R"({"kind":"equivalence","points":3,"pairs":[[0,0],[0,1],[1,0],[1,1],[2,2]]})");
    const Document quot = convert(e, "quotient");
    CHECK(std::get<QuotientData>(quot.value).classes == std::vector<std::vector<int>>{{0, 1}, {2}});
    CHECK(emit(convert(quot, "equivalence")) == emit(e));
    CHECK(emit(convert(convert(e, "s5-subordination"), "equivalence")) == emit(e));

    const Document full = parse_document(R"({"kind":"map-subordination","atoms":[1,1],"pairs":[[0,0],[0,1],[1,0],[1,1]]})");
    try {
        convert(full, "devries-function");
        FAIL("expected a ValidationError");
    } catch (const ValidationError& err) {
        CHECK(std::string(err.what()).find("totality") != std::string::npos);
    }
    CHECK_THROWS_AS(convert(le, "quotient"), std::invalid_argument);
    CHECK_FALSE(conversion_targets("subordination").empty());
}
