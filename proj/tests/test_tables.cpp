#include "hopfwave/identity_tables.hpp"

#include <doctest.h>

using namespace hopfwave;

TEST_CASE("every identity table passes with zero residual") {
    for (TableId id : all_tables()) {
        TableReport rep = verify_table(id);
        INFO("table ", rep.table);
        CHECK(!rep.entries.empty());
        for (const auto& e : rep.entries) {
            INFO("identity ", e.name, " residual ", to_string(e.residual));
            CHECK(e.pass);
        }
    }
}

TEST_CASE("table sizes match the advertised contents") {
    CHECK(verify_table(TableId::Schwinger).entries.size() == 48); // 24 per correspondence
    CHECK(verify_table(TableId::Gl2).entries.size() == 9);
    CHECK(verify_table(TableId::LjBrackets).entries.size() == 36); // 32 brackets + 4 spans
    CHECK(verify_table(TableId::AlphaBeta).entries.size() == 2);
}

TEST_CASE("table lookup by name") {
    CHECK(table_from_name("casimir") == TableId::Casimir);
    CHECK(table_from_name("lj_brackets") == TableId::LjBrackets);
    CHECK(!table_from_name("nope").has_value());
    CHECK(all_tables().size() == 8);
}

TEST_CASE("a deliberately false identity reports its residual") {
    // [Lz, L+] = L-, which is wrong; the framework must expose the residual.
    WeylOperator residual = bracket(generator(Gen::Lz), generator(Gen::Lplus)) -
                            generator(Gen::Lminus);
    CHECK(!residual.is_zero());
    CHECK(residual == generator(Gen::Lplus) - generator(Gen::Lminus));
}
