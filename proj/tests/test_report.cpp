#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "fsind/report.hpp"

using namespace fsind;
using nlohmann::json;

static IndicatorReport sign_pointed() {
    FiniteAbelianGroup g({2});
    return pointed_report(g, ThreeCochain::generating_cyclic(2, 1));
}

TEST_CASE("pointed report content and determinism") {
    IndicatorReport rep = sign_pointed();
    CHECK(rep.family == "pointed");
    CHECK(rep.group == "2");
    CHECK(rep.fs_exponent == 4);
    REQUIRE(rep.objects.size() == 2);
    CHECK(rep.objects[0].label == "(0)");
    CHECK(rep.objects[1].label == "(1)");
    CHECK(rep.objects[0].total == 4);
    CHECK(rep.objects[1].total == 0);

    // Byte-identical across recomputation.
    CHECK(rep.to_json() == sign_pointed().to_json());
    CHECK(rep.to_tsv() == sign_pointed().to_tsv());
}

TEST_CASE("json and tsv carry identical numeric content") {
    IndicatorReport rep = sign_pointed();
    json parsed = json::parse(rep.to_json());
    CHECK(parsed["version"] == version());
    CHECK(parsed["fs_exponent"] == 4);

    std::istringstream tsv(rep.to_tsv());
    std::string header;
    std::getline(tsv, header);
    CHECK(header == "object\tn1\tn2\tn3\tn4\ttotal");
    for (const auto& obj : parsed["objects"]) {
        std::string line;
        REQUIRE(std::getline(tsv, line));
        std::istringstream cells(line);
        std::string cell;
        std::getline(cells, cell, '\t');
        CHECK(cell == obj["label"]);
        for (const auto& val : obj["sequence"]) {
            std::getline(cells, cell, '\t');
            Cyclotomic from_tsv = Cyclotomic::parse_compact(cell);
            Cyclotomic from_json = Cyclotomic::parse_compact(
                std::to_string(val["conductor"].get<long>()) + ":" + [&] {
                    std::string s;
                    for (const auto& c : val["coeffs"]) {
                        if (!s.empty()) s += ",";
                        s += c.get<std::string>();
                    }
                    return s;
                }());
            CHECK(from_tsv == from_json);
        }
        std::getline(cells, cell, '\t');
        CHECK(std::stol(cell) == obj["total"].get<long>());
    }
}

TEST_CASE("tqd report houses the center table and dual-path totals") {
    FiniteAbelianGroup g({2});
    IndicatorReport rep = tqd_report(g, ThreeCochain::generating_cyclic(2, 1), true);
    CHECK(rep.family == "tqd");
    REQUIRE(rep.objects.size() == 2);
    CHECK(rep.objects[0].simples.size() == 2);
    CHECK(rep.objects[1].simples.size() == 2);
    long sumsq = 0;
    for (const auto& o : rep.objects)
        for (const auto& [dim, twist] : o.simples) sumsq += dim * dim;
    CHECK(sumsq == 4);
    REQUIRE(rep.verdicts.size() == 3);
    CHECK(rep.verdicts[0] == std::pair<std::string, std::string>{"genuine", "Genuine"});
    CHECK(rep.verdicts[1].first == "grouplike_group");
    CHECK(rep.verdicts[1].second == "2,2");
    CHECK(rep.verdicts[2].first == "grouplike_projection");
    CHECK(rep.verdicts[2].second.find("(0)") == 0);

    IndicatorReport quiet = tqd_report(g, ThreeCochain::generating_cyclic(2, 1), false);
    CHECK(quiet.verdicts.empty());
}

TEST_CASE("ty report rows and verdicts") {
    TYCategory c(BilinearForm::parse(2, "0,1;1,0"), 1);
    IndicatorReport rep = ty_report(c);
    CHECK(rep.family == "ty");
    CHECK(rep.fs_exponent == 4);
    REQUIRE(rep.objects.size() == 3);
    CHECK(rep.objects[0].label == "(0,0)");
    CHECK(rep.objects[0].total == 4);
    CHECK(rep.objects[1].label == "(0,1)");
    CHECK(rep.objects[1].total == 2);
    CHECK(rep.objects[2].label == "m");
    CHECK(rep.objects[2].total == 3);
    json parsed = json::parse(rep.to_json());
    CHECK(parsed["verdicts"]["fibration"] == "Fibration");
    CHECK(parsed["verdicts"]["form_class"] == "alternating");
}
