#include "doctest.h"

#include <sstream>

#include "arason/cli.hpp"
#include "arason/json_io.hpp"

using namespace arason;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run call(std::vector<std::string> args)
{
    args.insert(args.begin(), "arason");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json result(std::vector<std::string> args)
{
    auto r = call(std::move(args));
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
}

}  // namespace

TEST_CASE("qform commands")
{
    CHECK(result({"qform", "e3", R"({"diag":[1,1,1,1,1,1,1,1]})"})["e3"] == 1);
    CHECK(call({"qform", "e3", R"({"diag":[1,1,1,1,1,1,1,-1]})"}).code == cli::kPrecondition);
    CHECK(result({"qform", "isotropic", R"({"diag":[1,1,-3]})"})["isotropic"] == false);
    CHECK(result({"qform", "witt", R"({"diag":[1,-1,1,-1]})"})["witt_index"] == 2);
    CHECK(result({"qform", "similar", R"({"diag":[1,1]})", R"({"diag":[1,-1]})"})["factor"].is_null());
    auto p = result({"qform", "profile", R"({"diag":["4/9",-18]})"});
    CHECK(p["disc"] == 2);
    CHECK(p["signature"] == 0);
}

TEST_CASE("herm and unitary commands")
{
    auto t = result({"herm", "trace", R"({"delta":-1,"diag":[1]})"});
    CHECK(t["diag"] == Json::array({1, 1}));
    CHECK(result({"herm", "discalg", R"({"delta":-1,"diag":[1,1]})"})["disc_algebra"] == Json::array({"real", 2}));
    auto v = result({"unitary", "e3-hyp", R"({"delta":-1,"degree":4,"diag":[1,1,1,1]})"});
    CHECK(v["value"] == 1);
    CHECK(v["space"]["modulus"] == "zero");
    CHECK(call({"unitary", "rel-e3", R"({"delta":-1,"diag":[1,1]})", R"({"delta":-1,"diag":[1,-1]})"}).code ==
          cli::kPrecondition);
    CHECK(call({"unitary", "rel-e3", R"({"delta":-1,"degree":3,"diag":[1,1]})", R"({"delta":-1,"diag":[1,-1]})"})
              .code == cli::kPrecondition);
    CHECK(result({"unitary", "classify", R"({"delta":-1,"diag":[1,1,1]})", R"({"delta":-1,"diag":[1,1,-1]})"})
              ["isomorphic"] == false);
}

TEST_CASE("emitted forms are accepted back")
{
    auto trace = call({"herm", "trace", R"({"delta":-3,"diag":[2,5]})"});
    REQUIRE(trace.code == 0);
    CHECK(call({"qform", "profile", trace.out}).code == 0);
    auto theta = call({"unitary", "theta", R"({"delta":-3,"diag":[1,2,7]})", R"({"delta":-3,"diag":[5,-1,3]})"});
    REQUIRE(theta.code == 0);
    auto hyp = call({"unitary", "e3-hyp", theta.out});
    CHECK(hyp.code == 0);
    auto r2 = call({"unitary", "rank2", R"({"delta":-1,"diag":[1,1]})", "-1"});
    REQUIRE(r2.code == 0);
    CHECK(Json::parse(r2.out)["e3_hyp"] == 1);
    CHECK(call({"unitary", "e3-hyp", r2.out}).code == 0);
}

TEST_CASE("usage errors")
{
    CHECK(call({}).code == cli::kUsage);
    CHECK(call({"qform", "nope", R"({"diag":[1]})"}).code == cli::kUsage);
    auto bad = call({"qform", "e3", R"({"diag":[1,1,)"});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("byte") != std::string::npos);
    CHECK(call({"qform", "e3", "/no/such/file.json"}).code == cli::kUsage);
    CHECK(call({"qform", "e3", R"({"dig":[1]})"}).code == cli::kUsage);
    CHECK(call({"check", "nope"}).code == cli::kUsage);
    CHECK(call({"qform", "profile", R"({"diag":[1]})", "--format", "xml"}).code == cli::kUsage);
}

TEST_CASE("checks are reproducible")
{
    std::vector<std::string> args{"check", "order2", "--seed", "7", "--trials", "200", "--no-timing"};
    auto a = call(args), b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto rep = Json::parse(a.out);
    CHECK(rep["failures"].empty());
    CHECK_FALSE(rep.contains("elapsed_ms"));
    CHECK(Json::parse(call({"check", "order2", "--trials", "5"}).out).contains("elapsed_ms"));
    auto replay = call({"check", "reciprocity", "--replay", R"({"a":-1,"b":-1})"});
    CHECK(replay.code == 0);
}

TEST_CASE("text format")
{
    auto r = call({"--format", "text", "qform", "witt", R"({"diag":[1,-1]})"});
    CHECK(r.code == 0);
    CHECK(r.out == "witt_index: 1\n");
}
