#include <doctest.h>

#include <sstream>

#include "dkp/io.hpp"

using namespace dkp::io;

TEST_CASE("doubles print with 12 significant digits") {
    CHECK(fmt_double(1.0 / 6.0) == "0.166666666667");
    CHECK(fmt_double(1.0) == "1");
    CHECK(fmt_double(-2.23606797749979) == "-2.2360679775");
    CHECK(fmt_double(1e-300) == "1e-300");
}

TEST_CASE("write/validate round trip") {
    const Schema& schema = polarization_schema();
    std::vector<Row> rows;
    for (int i = 0; i < 5; ++i)
        rows.push_back({Cell::of(i * 0.5), Cell::of(0.1 * i), Cell::of(1.0 - 0.1 * i)});
    std::ostringstream os;
    write_csv(os, schema, rows);
    std::istringstream is(os.str());
    const auto res = validate_csv(schema, is);
    CHECK(res.ok);
    CHECK(res.rows == 5);
}

TEST_CASE("validation catches header, type, width and order violations") {
    const Schema& schema = polarization_schema();
    {
        std::istringstream is("wrong,header,here\n1,2,3\n");
        CHECK(!validate_csv(schema, is).ok);
    }
    {
        std::istringstream is("ptilde2_over_m2,pi_even,pi_odd\n1,abc,3\n");
        CHECK(!validate_csv(schema, is).ok);
    }
    {
        std::istringstream is("ptilde2_over_m2,pi_even,pi_odd\n1,2\n");
        CHECK(!validate_csv(schema, is).ok);
    }
    {
        // sort key is the first column: descending rows must fail
        std::istringstream is("ptilde2_over_m2,pi_even,pi_odd\n2,0,1\n1,0,1\n");
        CHECK(!validate_csv(schema, is).ok);
    }
    {
        std::istringstream is("ptilde2_over_m2,pi_even,pi_odd\n1,0,1\n2,0,1\n");
        CHECK(validate_csv(schema, is).ok);
    }
}
