// prym9 — exact-arithmetic verification of the genus-9 Prym uniruledness
// computations. Subcommands:
//   verify   run the full claim registry and report pass/fail per claim
//   class    print a named divisor class (canonical | d9 | degeneracy)
//   certify  run the pseudo-effectivity certificate chain
//   curves   print the intersection table of the test curves
// Exit codes: 0 all checks pass, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <prym/certifier.hpp>
#include <prym/divisor_algebra.hpp>
#include <prym/exact_lp.hpp>
#include <prym/pencil_numerics.hpp>
#include <prym/taut_classes.hpp>
#include <prym/verification.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

void write_output_file(const std::string& filename, const std::string& contents) {
    const char* dir = std::getenv("PRYM9_OUTPUT_DIR");
    if (!dir || !*dir) return;
    std::filesystem::path path(dir);
    std::filesystem::create_directories(path);
    std::ofstream out(path / filename);
    out << contents;
}

int cmd_verify(const std::string& only, bool json, bool no_timing, bool parallel) {
    prym::verify::Report report = prym::verify::run_claims(only, parallel);
    auto j = prym::verify::report_json(report, !no_timing);
    write_output_file("verification-report.json", j.dump(2) + "\n");
    if (json) {
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& item : report.items) {
            std::cout << (item.pass ? "  pass  " : "  FAIL  ") << item.claim_id << " ["
                      << item.location << "]  computed " << item.computed;
            if (!item.pass) std::cout << "  expected " << item.expected;
            std::cout << "\n";
        }
        std::cout << (report.overall_pass ? "all checks pass" : "verification FAILED")
                  << " (" << report.items.size() << " claims)\n";
    }
    if (report.items.empty()) {
        std::cerr << "prym9: no claim matches '" << only << "'\n";
        return 2;
    }
    return report.overall_pass ? 0 : 1;
}

int cmd_class(const std::string& name, int genus, const std::string& alpha_str, bool json) {
    try {
        if (name == "canonical") {
            prym::DivisorClass k = prym::canonical_class(genus);
            std::cout << (json ? k.to_json().dump(2) : k.to_string(true)) << "\n";
            return 0;
        }
        if (name == "d9") {
            if (genus != 9) {
                std::cerr << "prym9: the Brill-Noether class is only computed at genus 9\n";
                return 2;
            }
            prym::DivisorClass d = prym::brill_noether_class(prym::rat_from_string(alpha_str));
            std::cout << (json ? d.to_json().dump(2) : d.to_string(true)) << "\n";
            return 0;
        }
        if (name == "degeneracy") {
            if (genus != 9) {
                std::cerr << "prym9: the degeneracy class is only computed at genus 9\n";
                return 2;
            }
            prym::taut::BaseClass z = prym::taut::degeneracy_locus_class();
            if (json) {
                nlohmann::ordered_json j;
                j["class"] = z.to_string();
                j["pushforward_rules"] = prym::taut::FiberPushforward::standard().rules_json();
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << z.to_string() << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "prym9: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "prym9: unknown class '" << name
              << "' (expected canonical, d9 or degeneracy)\n";
    return 2;
}

int cmd_certify(const std::vector<std::string>& perturbations, const std::string& emit_lp,
                bool json) {
    prym::CurveClass r =
        prym::pencil::sweeping_pencil_class(prym::pencil::twelve_nodal_octic_pencil());
    for (const std::string& p : perturbations) {
        auto eq = p.find('=');
        if (eq == std::string::npos || p.rfind("R.", 0) != 0) {
            std::cerr << "prym9: perturbation must look like R.<label>=<rational>\n";
            return 2;
        }
        std::string label = p.substr(2, eq - 2);
        try {
            r.set_pairing(label, prym::rat_from_string(p.substr(eq + 1)));
        } catch (const std::exception& e) {
            std::cerr << "prym9: bad perturbation '" << p << "': " << e.what() << "\n";
            return 2;
        }
    }

    prym::certifier::CertifierReport rep = prym::certifier::certify_with_curve(r);
    if (!emit_lp.empty()) {
        std::ofstream out(emit_lp);
        if (!out) {
            std::cerr << "prym9: cannot write '" << emit_lp << "'\n";
            return 2;
        }
        out << rep.lp.to_text();
    }
    write_output_file("certificate.json", rep.to_json().dump(2) + "\n");
    std::cout << (json ? rep.to_json().dump(2) : rep.to_text()) << "\n";
    return rep.contradiction_established ? 0 : 1;
}

int cmd_curves(bool json) {
    auto rows = prym::pencil::test_curve_table();
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json jr = row.cls.to_json();
            jr["name"] = row.name;
            j.push_back(std::move(jr));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "curve      lambda      delta_0'    delta_0''   delta_0^ram\n";
        for (const auto& row : rows) {
            std::cout << row.name;
            for (size_t pad = row.name.size(); pad < 11; ++pad) std::cout << ' ';
            for (const char* label : {"lambda", "delta_0'", "delta_0''", "delta_0^ram"}) {
                std::string v = prym::rat_to_string(row.cls.pairing(label));
                std::cout << v;
                for (size_t pad = v.size(); pad < 12; ++pad) std::cout << ' ';
            }
            std::cout << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the genus-9 Prym uniruledness computations"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run the full claim registry");
    std::string only;
    bool json = false, no_timing = false, parallel = false;
    verify->add_option("--only", only, "restrict to claims whose id contains this string");
    verify->add_flag("--json", json, "emit the report as JSON");
    verify->add_flag("--no-timing", no_timing, "omit per-item timings (stable output)");
    verify->add_flag("--parallel", parallel, "run independent claims concurrently");

    auto* cls = app.add_subcommand("class", "print a divisor class");
    std::string class_name;
    int genus = 9;
    std::string alpha = "0";
    bool class_json = false;
    cls->add_option("name", class_name, "canonical | d9 | degeneracy")->required();
    cls->add_option("--genus", genus, "genus (canonical class only)");
    cls->add_option("--alpha", alpha, "delta_0'' shift of the Brill-Noether class");
    cls->add_flag("--json", class_json, "emit JSON");

    auto* certify = app.add_subcommand("certify", "run the pseudo-effectivity certificate");
    std::vector<std::string> perturbations;
    std::string emit_lp;
    bool certify_json = false;
    certify->add_option("--perturb", perturbations,
                        "override a pencil pairing, e.g. R.lambda=10");
    certify->add_option("--emit-lp", emit_lp, "write the constraint system to a file");
    certify->add_flag("--json", certify_json, "emit JSON");

    auto* curves = app.add_subcommand("curves", "print the test-curve intersection table");
    bool curves_json = false;
    curves->add_flag("--json", curves_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (verify->parsed()) return cmd_verify(only, json, no_timing, parallel);
    if (cls->parsed()) return cmd_class(class_name, genus, alpha, class_json);
    if (certify->parsed()) return cmd_certify(perturbations, emit_lp, certify_json);
    if (curves->parsed()) return cmd_curves(curves_json);
    return 2;
}
