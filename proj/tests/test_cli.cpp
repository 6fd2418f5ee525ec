// End-to-end checks of the prym9 binary: exit codes, output shapes, JSON
// determinism, schema validity, LP round trip, and the output directory
// environment variable.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <prym/certifier.hpp>
#include <prym/exact_lp.hpp>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " \"" PRYM9_CLI_PATH "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, output};
}

// Minimal JSON-schema checker for the subset used by the shipped schema:
// type, enum, required, properties, additionalProperties, items.
bool schema_valid(const nlohmann::json& value, const nlohmann::json& schema,
                  std::string* why) {
    if (schema.contains("type")) {
        const std::string type = schema["type"];
        bool ok = (type == "object" && value.is_object()) ||
                  (type == "array" && value.is_array()) ||
                  (type == "string" && value.is_string()) ||
                  (type == "number" && value.is_number()) ||
                  (type == "boolean" && value.is_boolean());
        if (!ok) {
            *why = "type mismatch, wanted " + type;
            return false;
        }
    }
    if (schema.contains("enum")) {
        bool found = false;
        for (const auto& candidate : schema["enum"])
            if (candidate == value) found = true;
        if (!found) {
            *why = "value not in enum";
            return false;
        }
    }
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema["required"])
                if (!value.contains(key.get<std::string>())) {
                    *why = "missing required key " + key.get<std::string>();
                    return false;
                }
        const auto props = schema.value("properties", nlohmann::json::object());
        for (const auto& [key, sub] : value.items()) {
            if (props.contains(key)) {
                if (!schema_valid(sub, props[key], why)) {
                    *why = key + ": " + *why;
                    return false;
                }
            } else if (schema.contains("additionalProperties") &&
                       schema["additionalProperties"] == false) {
                *why = "unexpected key " + key;
                return false;
            }
        }
    }
    if (value.is_array() && schema.contains("items")) {
        for (const auto& element : value)
            if (!schema_valid(element, schema["items"], why)) return false;
    }
    return true;
}

std::filesystem::path fresh_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("verify passes and reports every claim") {
    RunResult res = run("verify --no-timing");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("all checks pass") != std::string::npos);
    CHECK(res.output.find("eq7.R_dot_K") != std::string::npos);
    CHECK(res.output.find("FAIL") == std::string::npos);
}

TEST_CASE("verify --json is schema-valid and deterministic") {
    RunResult first = run("verify --json --no-timing");
    REQUIRE(first.exit_code == 0);
    RunResult second = run("verify --json --no-timing");
    CHECK(first.output == second.output);  // byte-identical

    auto j = nlohmann::json::parse(first.output);
    CHECK(j["overall"] == "pass");
    bool found = false;
    for (const auto& item : j["items"])
        if (item["claim_id"] == "eq7.R_dot_K") {
            found = true;
            CHECK(item["computed"] == "-1");
            CHECK(item["status"] == "pass");
        }
    CHECK(found);

    std::ifstream schema_file(std::string(PRYM9_DOCS_DIR) +
                              "/verification-report.schema.json");
    REQUIRE(schema_file.good());
    auto schema = nlohmann::json::parse(schema_file);
    std::string why;
    CHECK_MESSAGE(schema_valid(j, schema, &why), why);

    // With timings the document still validates (ms is declared).
    RunResult timed = run("verify --json --only eq7");
    auto jt = nlohmann::json::parse(timed.output);
    CHECK_MESSAGE(schema_valid(jt, schema, &why), why);
}

TEST_CASE("verify --only filters the registry") {
    RunResult res = run("verify --only grr. --no-timing");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("grr.thm1.1.degeneracy") != std::string::npos);
    CHECK(res.output.find("eq7.R_dot_K") == std::string::npos);

    RunResult none = run("verify --only no_such_claim");
    CHECK(none.exit_code == 2);
}

TEST_CASE("verify --parallel agrees with the sequential run") {
    RunResult seq = run("verify --json --no-timing");
    RunResult par = run("verify --json --no-timing --parallel");
    CHECK(par.exit_code == 0);
    CHECK(seq.output == par.output);
}

TEST_CASE("class subcommand") {
    RunResult canonical = run("class canonical --genus 9");
    CHECK(canonical.exit_code == 0);
    CHECK(canonical.output.find("13*λ") != std::string::npos);
    CHECK(canonical.output.find("3*δ_0^ram") != std::string::npos);

    RunResult d9 = run("class d9");
    CHECK(d9.exit_code == 0);
    CHECK(d9.output.find("366*λ") != std::string::npos);
    CHECK(d9.output.find("187/2*δ_0^ram") != std::string::npos);

    RunResult shifted = run("class d9 --alpha 3/2 --json");
    CHECK(shifted.exit_code == 0);
    auto j = nlohmann::json::parse(shifted.output);
    CHECK(j["coeffs"]["delta_0''"] == "-107/2");

    RunResult degeneracy = run("class degeneracy");
    CHECK(degeneracy.exit_code == 0);
    CHECK(degeneracy.output.find("-lambda - 1/2*a + 1/2*b + 1/4*sdram") !=
          std::string::npos);

    CHECK(run("class bogus").exit_code == 2);
    CHECK(run("class canonical --genus 1").exit_code == 2);
    CHECK(run("class d9 --alpha -1").exit_code == 2);
    CHECK(run("class d9 --genus 7").exit_code == 2);
}

TEST_CASE("certify subcommand") {
    RunResult ok = run("certify");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("not pseudo-effective") != std::string::npos);
    CHECK(ok.output.find("uniruled") != std::string::npos);
    CHECK(ok.output.find("BDPP") != std::string::npos);

    RunResult perturbed = run("certify --perturb R.lambda=10");
    CHECK(perturbed.exit_code == 1);
    CHECK(perturbed.output.find("no contradiction derived") != std::string::npos);

    CHECK(run("certify --perturb nonsense").exit_code == 2);
}

TEST_CASE("certify --emit-lp round-trips through the importer") {
    auto dir = fresh_dir("prym9-cli-emit");
    auto lp_path = (dir / "constraints.lp").string();
    RunResult res = run("certify --emit-lp \"" + lp_path + "\"");
    CHECK(res.exit_code == 0);

    std::ifstream in(lp_path);
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    prym::lp::ExactLP imported = prym::lp::ExactLP::from_text(text);
    CHECK(imported == prym::certifier::build_constraints(9));
}

TEST_CASE("curves table") {
    RunResult res = run("curves");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("R") != std::string::npos);
    CHECK(res.output.find("47") != std::string::npos);
    CHECK(res.output.find("Xi_9") != std::string::npos);
    CHECK(res.output.find("9437040") != std::string::npos);

    RunResult js = run("curves --json");
    auto j = nlohmann::json::parse(js.output);
    REQUIRE(j.size() == 3);
    CHECK(j[1]["pairings"]["delta_0'"] == "56");
}

TEST_CASE("output directory environment variable") {
    auto dir = fresh_dir("prym9-cli-outdir");
    RunResult res =
        run("verify --only eq7 --no-timing", "PRYM9_OUTPUT_DIR=\"" + dir.string() + "\"");
    CHECK(res.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "verification-report.json"));

    RunResult cert = run("certify", "PRYM9_OUTPUT_DIR=\"" + dir.string() + "\"");
    CHECK(cert.exit_code == 0);
    CHECK(std::filesystem::exists(dir / "certificate.json"));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("verify --bogus-flag").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}
