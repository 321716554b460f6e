// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "whgeo/cli.hpp"

using namespace whgeo;
using whgeo::cli::run;

TEST_CASE("cli directions") {
    auto rep = run({"directions", "--weights", "3,2,1"});
    CHECK(rep.exit_code == 0);
    CHECK(rep.json_output == R"({"directions":["3/2","2/1","3/1"]})");
    // determinism: identical argv, identical bytes
    auto rep2 = run({"directions", "--weights", "3,2,1"});
    CHECK(rep2.json_output == rep.json_output);
}

TEST_CASE("cli contact-leaves") {
    auto rep = run({"contact-leaves", "--weights", "2,1", "--x", "1,1", "--y", "2,1"});
    CHECK(rep.exit_code == 0);
    auto j = nlohmann::json::parse(rep.json_output);
    CHECK(j["order"] == "2/1");

    auto err = run({"contact-leaves", "--weights", "2,1", "--x", "1,1", "--y", "4,2"});
    CHECK(err.exit_code == 1);
    CHECK(nlohmann::json::parse(err.json_output)["error"]["kind"] == "SameLeaf");
}

TEST_CASE("cli contact-arcs symbolic and numeric with csv") {
    auto rep = run({"contact-arcs", "--arc1", "t; t^2", "--arc2", "t; 2*t^2"});
    CHECK(rep.exit_code == 0);
    auto j = nlohmann::json::parse(rep.json_output);
    CHECK(j["symbolic"] == "2/1");

    std::string csv_path = "cli_test_profile.csv";
    auto rep2 = run({"contact-arcs", "--arc1", "t; t^2", "--arc2", "t; 2*t^2", "--numeric",
                     "--norm", "max", "--csv", csv_path});
    CHECK(rep2.exit_code == 0);
    auto j2 = nlohmann::json::parse(rep2.json_output);
    CHECK(j2["numeric"]["ok"] == true);
    CHECK(std::fabs(j2["numeric"]["exponent"].get<double>() - 2.0) < 0.05);
    std::ifstream csv(csv_path);
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,d");
    int lines = 0;
    for (std::string line; std::getline(csv, line);) ++lines;
    CHECK(lines == 12);
    csv.close();
    std::remove(csv_path.c_str());
}

TEST_CASE("cli check-homogeneous with permutation") {
    auto rep = run({"check-homogeneous", "--poly", "x1^2+x2^2-x3^4", "--weights", "2,2,1"});
    CHECK(rep.exit_code == 0);
    auto j = nlohmann::json::parse(rep.json_output);
    CHECK(j["weighted_degree"] == 4);
    CHECK(j["flow_invariance"] == true);

    // canonical polynomial text re-parses to itself
    std::string canon = j["polynomial"].get<std::string>();
    CHECK(canon == "x1^2 + x2^2 - x3^4");
    CHECK(parse_polynomial(canon).to_string() == canon);

    // unsorted weights: coordinates are permuted, the report says how
    auto rep2 = run({"check-homogeneous", "--poly", "x1^4+x2^2-x3^2", "--weights", "1,2,2"});
    CHECK(rep2.exit_code == 0);
    auto j2 = nlohmann::json::parse(rep2.json_output);
    CHECK(j2["weighted_degree"] == 4);
    CHECK(j2["weights"] == nlohmann::json::array({2, 2, 1}));
    CHECK(j2["permutation"] == nlohmann::json::array({2, 3, 1}));

    auto bad = run({"check-homogeneous", "--poly", "x1^2+x2^3", "--weights", "1,1,1"});
    CHECK(bad.exit_code == 1);
    CHECK(nlohmann::json::parse(bad.json_output)["error"]["kind"] == "NotWeightedHomogeneous");
}

TEST_CASE("cli horn goldens") {
    auto rep = run({"horn", "--poly", "x1^2+x2^2-x3^4", "--weights", "2,2,1"});
    CHECK(rep.exit_code == 0);
    auto j = nlohmann::json::parse(rep.json_output);
    CHECK(j["beta"] == "2/1");
    CHECK(j["link_component_count"] == 2);
    for (const auto& c : j["components"]) CHECK(c["beta"] == "2/1");

    auto cone = run({"horn", "--poly", "x1^2+x2^2-x3^2", "--weights", "1,1,1"});
    CHECK(nlohmann::json::parse(cone.json_output)["beta"] == "1/1");
}

TEST_CASE("cli complex export and round trip") {
    auto rep = run({"complex", "--poly", "x1^2+x2^2-x3^4", "--weights", "2,2,1", "--out", "json"});
    CHECK(rep.exit_code == 0);
    HolderComplex c = import_json(rep.json_output);
    CHECK(c.vertices().size() == 4);
    CHECK(c.edges().size() == 4);
    CHECK(export_json(c) == rep.json_output);  // canonical round trip

    auto dot = run({"complex", "--poly", "x1^2+x2^2-x3^4", "--weights", "2,2,1", "--out", "dot"});
    CHECK(dot.json_output.find("graph holder_complex") != std::string::npos);
    CHECK(dot.json_output.find("label=\"2/1\"") != std::string::npos);

    std::string path = "cli_test_complex.json";
    auto towrite = run({"complex", "--poly", "x1^2+x2^2-x3^4", "--weights", "2,2,1", "--out",
                        "json", "--output", path});
    CHECK(towrite.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string contents((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    in.close();
    CHECK(contents == rep.json_output);
    std::remove(path.c_str());
}

TEST_CASE("cli verify suites (small trial counts)") {
    auto rep = run({"verify", "--suite", "simplex", "--trials", "25", "--seed", "7"});
    CHECK(rep.exit_code == 0);
    auto j = nlohmann::json::parse(rep.json_output);
    CHECK(j["suite"] == "simplex");
    CHECK(j["trials"] == 25);
    CHECK(j["failures"] == 0);
    CHECK(j["seed"] == 7);

    auto ultra = run({"verify", "--suite", "ultrametric", "--trials", "25", "--seed", "7"});
    CHECK(nlohmann::json::parse(ultra.json_output)["failures"] == 0);

    auto canon = run({"verify", "--suite", "canonical", "--trials", "10", "--seed", "3"});
    CHECK(nlohmann::json::parse(canon.json_output)["failures"] == 0);

    auto norms = run({"verify", "--suite", "norms", "--trials", "2", "--seed", "11"});
    CHECK(nlohmann::json::parse(norms.json_output)["failures"] == 0);

    // determinism of the verify output
    auto again = run({"verify", "--suite", "ultrametric", "--trials", "25", "--seed", "7"});
    CHECK(again.json_output == ultra.json_output);

    auto unknown = run({"verify", "--suite", "bogus"});
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("cli usage errors") {
    auto rep = run({"directions"});
    CHECK(rep.exit_code == 2);
    CHECK(nlohmann::json::parse(rep.json_output)["error"]["kind"] == "Usage");

    auto none = run({});
    CHECK(none.exit_code == 2);

    auto badnorm = run({"contact-arcs", "--arc1", "t;0", "--arc2", "0;t", "--numeric", "--norm",
                        "chebyshev"});
    CHECK(badnorm.exit_code == 2);

    // domain errors exit 1
    auto unsorted = run({"directions", "--weights", "1,2"});
    CHECK(unsorted.exit_code == 1);
    CHECK(nlohmann::json::parse(unsorted.json_output)["error"]["kind"] == "NotSorted");
}
