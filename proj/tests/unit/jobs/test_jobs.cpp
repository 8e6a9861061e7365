#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "relcone/jobs/jobs.hpp"

using namespace relcone;
using namespace relcone::jobs;

namespace {

json job(const std::string& command, json input)
{
    return {{"schema", job_schema}, {"command", command}, {"input", std::move(input)}};
}

json load(const std::filesystem::path& p)
{
    std::ifstream in(p);
    return json::parse(in);
}

std::vector<std::filesystem::path> example_jobs()
{
    std::vector<std::filesystem::path> out;
    for (const auto& e : std::filesystem::directory_iterator(RELCONE_SOURCE_DIR "/schemas/examples"))
        if (e.path().extension() == ".json")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

void require_schema_error(const json& j, const std::string& path)
{
    const Report r = run(j);
    INFO(r.document.dump());
    REQUIRE(r.exit_code == exit_validation);
    CHECK(r.document["status"] == "error");
    CHECK(r.document["error"]["kind"] == "schema");
    CHECK(r.document["error"]["path"] == path);
}

} // namespace

TEST_CASE("homology of the built-in circle", "[jobs]")
{
    const Report r = run(job("homology", {{"space", "circle"}}));
    REQUIRE(r.exit_code == exit_ok);
    CHECK(r.document["schema"] == report_schema);
    CHECK(r.document["result"]["groups"][0]["text"] == "ℤ");
    CHECK(r.document["result"]["groups"][1]["text"] == "ℤ");
    CHECK(render_text(r.document).find("H₀ = ℤ, H₁ = ℤ") != std::string::npos);
}

TEST_CASE("lie-prequant SU(2) vertex", "[jobs]")
{
    const Report r = run(job("lie-prequant", {{"group", "SU(2)"}, {"xi", {"1/2", "-1/2"}}, {"level", 1}}));
    REQUIRE(r.exit_code == exit_ok);
    CHECK(r.document["result"]["prequantizable"] == true);
    CHECK(render_text(r.document).find("pre-quantizable: yes") != std::string::npos);

    const Report outside = run(job("lie-prequant", {{"group", "SU(2)"}, {"xi", {"3/4", "-3/4"}}}));
    CHECK(outside.document["result"]["prequantizable"] == false);
}

TEST_CASE("degree-2 circle map", "[jobs]")
{
    const Report r = run(job("cone-compare", {{"map", "deg2-circle-map"}}));
    REQUIRE(r.exit_code == exit_ok);
    CHECK(r.document["result"]["isomorphic"] == true);
    for (const auto& g : r.document["result"]["algebraic"])
        CHECK(g["text"] == (g["degree"] == 1 ? "ℤ/2" : "0"));
}

TEST_CASE("every shipped example job succeeds deterministically", "[jobs]")
{
    const auto paths = example_jobs();
    REQUIRE(paths.size() >= 11);
    std::set<std::string> seen;
    for (const auto& p : paths) {
        INFO(p.string());
        const json j = load(p);
        const Report a = run(j);
        const Report b = run(j);
        REQUIRE(a.exit_code == exit_ok);
        CHECK(render_json(a.document) == render_json(b.document));
        CHECK(render_text(a.document) == render_text(b.document));
        CHECK(a.document["input_digest"] == input_digest(j));
        seen.insert(j["command"].get<std::string>());
    }
    CHECK(seen == std::set<std::string>(commands().begin(), commands().end()));
}

TEST_CASE("shipped job schema lists exactly the implemented commands", "[jobs]")
{
    const json schema = load(RELCONE_SOURCE_DIR "/schemas/job.schema.json");
    CHECK(schema["properties"]["schema"]["const"] == job_schema);
    std::vector<std::string> listed = schema["properties"]["command"]["enum"];
    CHECK(listed == commands());
    const json report = load(RELCONE_SOURCE_DIR "/schemas/report.schema.json");
    CHECK(report["properties"]["schema"]["const"] == report_schema);
}

TEST_CASE("input digest", "[jobs]")
{
    const json a = job("homology", {{"space", "circle:3"}});
    const json b = json::parse(R"({"input": {"space": "circle:3"}, "command": "homology", "schema": "relcone-job/1"})");
    CHECK(input_digest(a) == input_digest(b));
    CHECK(input_digest(a) != input_digest(job("homology", {{"space", "circle:4"}})));
    CHECK(input_digest(a).size() == std::string("sha256:").size() + 64);
    // SHA-256 of the empty JSON object "{}"
    CHECK(input_digest(json::object()) == "sha256:44136fa355b3678a1146ad16f7e8649e94fb4fc21fe77e8310c060f61caaff8a");
}

TEST_CASE("schema violations carry a path", "[jobs]")
{
    require_schema_error(json::array(), "/");
    require_schema_error({{"command", "homology"}, {"input", json::object()}}, "/schema");
    require_schema_error({{"schema", "relcone-job/0"}, {"command", "homology"}, {"input", json::object()}}, "/schema");
    require_schema_error(job("fly", json::object()), "/command");
    require_schema_error(job("homology", json::object()), "/input/space");
    require_schema_error(job("homology", {{"space", "klein"}}), "/input/space");
    require_schema_error(job("homology", {{"space", "circle"}, {"colour", 1}}), "/input/colour");
    require_schema_error(job("homology", {{"space", {{"vertices", 2}, {"facets", {{0, 5}}}}}}), "/input/space");
    require_schema_error(job("lie-prequant", {{"group", "SU(2)"}, {"xi", {"1/0", "0"}}}), "/input/xi/0");
    require_schema_error(job("lie-prequant", {{"group", "SU(2)"}, {"xi", {"1/2", true}}}), "/input/xi/1");
    require_schema_error(job("lie-prequant", {{"group", "SU(2)"}, {"xi", {"1/2"}}}), "/input/xi");
    require_schema_error(job("lie-prequant", {{"group", "SU(2)"}, {"xi", {0, 0}}, {"level", 0}}), "/input/level");
    require_schema_error(job("lie-info", {{"group", "E9"}}), "/input/group");
    require_schema_error(job("cech", {{"nerve", {{"size", 2}, {"families", {{0, 3}}}}}}), "/input/nerve");
    require_schema_error(job("cech", {{"nerve", {{"simplex", 3}}}, {"coefficients", "Z/0"}}), "/input/coefficients");
    require_schema_error(job("gerbe-class", {{"nerve", {{"simplex", 3}}}, {"values", json::array({0, 0, 0, 0, 0, 0, 0})}}), "/input/values");

    json bad_format = job("homology", {{"space", "point"}});
    bad_format["format"] = "xml";
    require_schema_error(bad_format, "/format");
}

TEST_CASE("domain invariant violations are validation errors", "[jobs]")
{
    // angle 1-cochain on the full triangle nerve whose coboundary is not integral
    const Report r = run(job("gerbe-class", {{"nerve", {{"simplex", 3}}}, {"degree", 1}, {"values", {"1/2", 0, 0}}}));
    REQUIRE(r.exit_code == exit_validation);
    CHECK(r.document["error"]["kind"] == "validation");
    CHECK(render_text(r.document).find("validation error") != std::string::npos);

    // α = 1 on one edge of the disk is not closed
    const Report open = run(job("integrality", {{"map", "vertex-in-disk"}, {"degree", 1}, {"source", {0}}, {"target", {1, 0, 0}}}));
    CHECK(open.exit_code == exit_validation);
}

TEST_CASE("built-in jobs", "[jobs]")
{
    CHECK(builtin_job("circle:4")["command"] == "homology");
    CHECK(builtin_job("rp2")["command"] == "homology");
    CHECK(builtin_job("deg2-circle-map")["command"] == "relative-homology");
    CHECK(builtin_job("identity:torus")["command"] == "relative-homology");
    CHECK_THROWS_AS(builtin_job("klein"), ValidationError);
    const Report r = run(builtin_job("rp2"));
    REQUIRE(r.exit_code == exit_ok);
    CHECK(render_text(r.document).find("H₁ = ℤ/2") != std::string::npos);
}

TEST_CASE("relative Čech and gerbe jobs", "[jobs]")
{
    const json arc = {{"size", 3}, {"families", {{0, 1}, {1, 2}, {0, 2}}}};
    const json point = {{"size", 1}, {"families", {json::array({0})}}};
    const json cover = {{"source", point}, {"target", arc}, {"refinement", json::array({0})}};
    const Report r = run(job("cech", {{"cover_map", cover}}));
    REQUIRE(r.exit_code == exit_ok);
    CHECK(r.document["result"]["groups"][1]["text"] == "ℤ");

    const Report angle = run(job("cech", {{"nerve", arc}, {"coefficients", "angle"}}));
    REQUIRE(angle.exit_code == exit_ok);
    CHECK(angle.document["result"]["groups"][1]["divisible_rank"] == 1);
    CHECK(render_text(angle.document).find("(ℚ/ℤ)") != std::string::npos);
}
