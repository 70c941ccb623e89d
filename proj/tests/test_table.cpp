#include <doctest.h>

#include "xnseq/table.hpp"

using namespace xnseq;

TEST_CASE("csv emission") {
    Table t;
    t.columns = {"word", "objective", "value"};
    t.add_row({std::string("BAAAB"), std::string("27/82"), 0.5});
    std::string csv = emit_table(t, TableFormat::csv);
    CHECK(csv == "word,objective,value\nBAAAB,27/82,0.5\n");

    Table empty;
    empty.columns = {"a", "b"};
    CHECK(emit_table(empty, TableFormat::csv) == "a,b\n");
}

TEST_CASE("csv quoting follows RFC 4180") {
    Table t;
    t.columns = {"name"};
    t.add_row({std::string("plain")});
    t.add_row({std::string("with,comma")});
    t.add_row({std::string("say \"hi\"")});
    std::string csv = emit_table(t, TableFormat::csv);
    CHECK(csv == "name\nplain\n\"with,comma\"\n\"say \"\"hi\"\"\"\n");
}

TEST_CASE("doubles carry 17 significant digits") {
    Table t;
    t.columns = {"v"};
    t.add_row({1.0 / 3.0});
    t.add_row({123456789.0});
    t.add_row({Cell{u64{18446744073709551615ULL}}});
    t.add_row({Cell{i64{-42}}});
    std::string csv = emit_table(t, TableFormat::csv);
    CHECK(csv == "v\n0.33333333333333331\n123456789\n18446744073709551615\n-42\n");
}

TEST_CASE("json emission") {
    Table t;
    t.columns = {"x", "note"};
    t.add_row({u64{7}, std::string("a\"b")});
    std::string json = emit_table(t, TableFormat::json);
    CHECK(json == "[\n  {\"x\": 7, \"note\": \"a\\\"b\"}\n]\n");

    Table empty;
    empty.columns = {"x"};
    CHECK(emit_table(empty, TableFormat::json) == "[]\n");
}

TEST_CASE("row width is validated") {
    Table t;
    t.columns = {"a", "b"};
    CHECK_THROWS_AS(t.add_row({u64{1}}), std::invalid_argument);
    CHECK_THROWS_AS(table_format_from_name("xml"), std::invalid_argument);
}
