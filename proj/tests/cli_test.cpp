#include <sstream>

#include "doctest.h"
#include "garside/cli_app.hpp"
#include "json.hpp"

using garside::cli::run;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("growth: the A2 worked example") {
    const auto r = invoke({"growth", "A2", "--terms", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 - 2*t + t^3") != std::string::npos);
    CHECK(r.out.find("1, 2, 4, 7, 12") != std::string::npos);
}

TEST_CASE("growth: H3 polynomial and alpha_0") {
    const auto r = invoke({"growth", "H3", "--terms", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 - 3*t + t^2 + t^3 + t^5 - t^15") != std::string::npos);
    CHECK(r.out.find("alpha: 1") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(invoke({"growth", "Z9"}).code == 2);
    CHECK(invoke({"nonsense"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"rate", "A3", "--bits", "-5"}).code == 2);
    CHECK(invoke({"moebius", "H3", "--method", "det"}).code == 2);  // no determinant for H3
}

TEST_CASE("moebius JSON round-trips byte-identical") {
    const auto r = invoke({"moebius", "A3", "--json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::ordered_json::parse(r.out);
    CHECK(doc["spec"] == "A3");
    CHECK(doc["degree"] == 6);
    CHECK(doc.dump() + "\n" == r.out);

    const auto r2 = invoke({"theta", "--terms", "7", "--estimate", "--json"});
    CHECK(r2.code == 0);
    const auto doc2 = nlohmann::ordered_json::parse(r2.out);
    CHECK(doc2.dump() + "\n" == r2.out);
    CHECK(doc2["coefficients"].back() == "133");

    const auto r3 = invoke({"rate", "A2", "--bits", "40", "--json"});
    const auto doc3 = nlohmann::ordered_json::parse(r3.out);
    CHECK(doc3.dump() + "\n" == r3.out);
    CHECK(doc3.contains("root_lo"));
    CHECK(doc3.contains("root_hi"));
    CHECK(doc3.contains("rho"));
    CHECK(doc3.contains("bits"));

    const auto r4 = invoke({"growth", "B3", "--terms", "6", "--json"});
    const auto doc4 = nlohmann::ordered_json::parse(r4.out);
    CHECK(doc4.dump() + "\n" == r4.out);
    CHECK(doc4["alpha"].back() == "263");

    const auto r5 = invoke({"table", "D4", "--rows", "6", "--json"});
    const auto doc5 = nlohmann::ordered_json::parse(r5.out);
    CHECK(doc5.dump() + "\n" == r5.out);
    CHECK(doc5["rows"][6][3] == "732");
}

TEST_CASE("table CSV mirrors the published layout") {
    const auto r = invoke({"table", "A3", "--rows", "6", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("k/i,1,2,3,4\n") == 0);
    CHECK(r.out.find("6,33,108,202,202\n") != std::string::npos);
}

TEST_CASE("table Ainf uses the limit table") {
    const auto r = invoke({"table", "Ainf", "--rows", "7", "--cols", "2", "--csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("7,133,") != std::string::npos);
}

TEST_CASE("verify: focused run reports matching counts") {
    const auto r = invoke({"verify", "D4", "--max-k", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("oracle 280 = table 280 = series 280") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify: injected fixture fault is reported and fails") {
    const auto r = invoke({"verify", "--max-k", "2", "--inject-fault", "theta_L"});
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL") != std::string::npos);
    CHECK(r.out.find("theta_L.json") != std::string::npos);
}

TEST_CASE("theta estimate output labels the depth") {
    const auto r = invoke({"theta", "--terms", "7", "--estimate"});
    CHECK(r.code == 0);
    CHECK(r.out.find("L: 1, 1, 2, 4, 9, 21, 52, 133") != std::string::npos);
    CHECK(r.out.find("estimate at depth 7") != std::string::npos);
    CHECK(r.out.find("2.55") != std::string::npos);
}
