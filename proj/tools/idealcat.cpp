
// Copyright 2026-present the idealcat project
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Exit codes are a stable contract:
//   0  success
//   1  verification failure (failed checks, RR refusal, or a falsified
//      internal criterion)
//   2  invalid input (spec grammar, bad flags, unusable export choice)
//   3  size cap exceeded

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "idealcat/category.hpp"
#include "idealcat/cones.hpp"
#include "idealcat/export.hpp"
#include "idealcat/ring.hpp"
#include "idealcat/verify.hpp"

namespace {

using namespace idealcat;

struct RunConfig {
    std::string ring_spec;
    std::string side = "left";
    std::vector<std::string> suites = {"all"};
    std::string export_format = "none";
    std::string out_path;
    int max_objects = BuildCaps{}.max_objects;
    int max_morphisms = BuildCaps{}.max_morphisms;
    int max_cones = BuildCaps{}.max_cones;
    bool early_exit = false;
    bool collapse_edges = false;
};

void
add_common_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--ring", cfg.ring_spec,
                    "ring spec: zmod:<n> | prod:<spec>,<spec> | mat:<k>:zmod:<p>")
        ->required();
    sub->add_option("--side", cfg.side, "which one-sided ideals to use")
        ->check(CLI::IsMember({"left", "right"}))
        ->capture_default_str();
    sub->add_option("--export", cfg.export_format, "artifact format to write")
        ->check(CLI::IsMember({"none", "json", "dot"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "output path for --export (default is derived)");
    sub->add_option("--max-objects", cfg.max_objects, "object-count cap")
        ->envname("IDEALCAT_MAX_OBJECTS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-morphisms", cfg.max_morphisms, "morphism-count cap")
        ->envname("IDEALCAT_MAX_MORPHISMS")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--max-cones", cfg.max_cones, "cone-count cap")
        ->envname("IDEALCAT_MAX_CONES")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

BuildCaps
caps_of(const RunConfig& cfg) {
    return BuildCaps{cfg.max_objects, cfg.max_morphisms, cfg.max_cones};
}

Category
build_category(const RunConfig& cfg) {
    const FiniteRing ring = parse_ring_spec(cfg.ring_spec);
    return cfg.side == "left" ? Category::build_left(ring, caps_of(cfg))
                              : Category::build_right(ring, caps_of(cfg));
}

std::string
category_display_name(const Category& cat) {
    return std::string(cat.side() == Side::kLeft ? "L(" : "R(") + cat.ring_label() + ")";
}

std::string
default_out_path(const std::string& command, const RunConfig& cfg) {
    std::string stem = command + "_" + cfg.ring_spec;
    for (char& c : stem) {
        if (!std::isalnum(static_cast<unsigned char>(c))) {
            c = '_';
        }
    }
    if (cfg.side != "left") {
        stem += "_right";
    }
    return stem + (cfg.export_format == "dot" ? ".dot" : ".json");
}

void
write_artifact(const std::string& command, const RunConfig& cfg, const std::string& content) {
    const std::string path = cfg.out_path.empty() ? default_out_path(command, cfg) : cfg.out_path;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidSpec("cannot open output path '" + path + "'");
    }
    out << content;
    out.close();
    std::cout << "wrote " << path << "\n";
}

int
cmd_build(const RunConfig& cfg) {
    const Category cat = build_category(cfg);
    std::cout << category_display_name(cat) << ": " << cat.object_count() << " objects, "
              << cat.morphism_count() << " morphisms\n";
    if (cfg.export_format == "json") {
        write_artifact("build", cfg, dump_json(category_to_json(cat)));
    } else if (cfg.export_format == "dot") {
        write_artifact("build", cfg, category_to_dot(cat, cfg.collapse_edges));
    }
    return 0;
}

int
cmd_verify(const RunConfig& cfg) {
    if (cfg.export_format == "dot") {
        throw InvalidSpec("verify exports JSON reports only; use build --export dot for graphs");
    }
    const Category cat = build_category(cfg);
    const std::vector<VerificationReport> reports =
        run_suites(cat, cfg.suites, caps_of(cfg), cfg.early_exit);
    bool ok = true;
    for (const VerificationReport& report : reports) {
        std::cout << render_report_text(report);
        ok = ok && report.ok();
    }
    std::cout << "overall: " << (ok ? "ok" : "FAIL") << "\n";
    if (cfg.export_format == "json") {
        write_artifact("verify", cfg,
                       dump_json(reports_to_json(cat.ring_label(), cat.side(), reports)));
    }
    return ok ? 0 : 1;
}

int
cmd_cone_ring(const RunConfig& cfg) {
    if (cfg.export_format == "dot") {
        throw InvalidSpec("cone-ring exports JSON only; use build --export dot for graphs");
    }
    const Category cat = build_category(cfg);
    const ConeRing pc = build_cone_ring(cat, caps_of(cfg));
    std::cout << "PL(" << cat.ring_label() << "): order " << pc.order() << ", zero " << pc.zero
              << ", one " << (pc.one < 0 ? std::string("none") : std::to_string(pc.one)) << "\n";
    if (pc.axioms.ok()) {
        std::cout << "axioms: ok\n";
    } else {
        std::cout << "axioms: FAIL (";
        const std::vector<std::pair<const char*, bool>> flags = {
            {"add_closed", pc.axioms.add_closed},
            {"mul_closed", pc.axioms.mul_closed},
            {"add_associative", pc.axioms.add_associative},
            {"add_commutative", pc.axioms.add_commutative},
            {"zero_identity", pc.axioms.zero_identity},
            {"add_inverses", pc.axioms.add_inverses},
            {"mul_associative", pc.axioms.mul_associative},
            {"left_distributive", pc.axioms.left_distributive},
            {"right_distributive", pc.axioms.right_distributive},
        };
        bool first = true;
        for (const auto& [name, holds] : flags) {
            if (!holds) {
                std::cout << (first ? "" : ", ") << name;
                first = false;
            }
        }
        std::cout << ")\n";
    }
    if (cfg.export_format == "json") {
        write_artifact("cone_ring", cfg, dump_json(cone_ring_to_json(cat, pc)));
    }
    return pc.axioms.ok() ? 0 : 1;
}

int
cmd_iterate(const RunConfig& cfg) {
    if (cfg.export_format == "dot") {
        throw InvalidSpec("iterate exports JSON only; use build --export dot for graphs");
    }
    const Category cat = build_category(cfg);
    const ConeRing pc = build_cone_ring(cat, caps_of(cfg));
    const FiniteRing level2 = pc.to_finite_ring("PL(" + cat.ring_label() + ")");
    std::cout << level2.label() << ": order " << level2.order()
              << ", reinterpreted as a finite ring\n";
    const Category cat2 = cfg.side == "left" ? Category::build_left(level2, caps_of(cfg))
                                             : Category::build_right(level2, caps_of(cfg));
    std::cout << category_display_name(cat2) << ": " << cat2.object_count() << " objects, "
              << cat2.morphism_count() << " morphisms\n";
    std::vector<VerificationReport> reports;
    reports.push_back(verify_preadditive(cat2));
    reports.push_back(verify_proper_category(cat2));
    bool ok = true;
    for (const VerificationReport& report : reports) {
        std::cout << render_report_text(report);
        ok = ok && report.ok();
    }
    std::cout << "overall: " << (ok ? "ok" : "FAIL") << "\n";
    if (cfg.export_format == "json") {
        write_artifact("iterate", cfg,
                       dump_json(reports_to_json(level2.label(), cat2.side(), reports)));
    }
    return ok ? 0 : 1;
}

}  // namespace

int
main(int argc, char** argv) {
    CLI::App app{"principal ideal categories of finite rings, their cone calculus, and the ring "
                 "of proper cones"};
    app.require_subcommand(1);

    RunConfig cfg;
    CLI::App* build = app.add_subcommand("build", "construct the ideal category and report size");
    add_common_options(build, cfg);
    build->add_flag("--collapse-edges", cfg.collapse_edges,
                    "DOT: one counted edge per object pair instead of one edge per morphism");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common_options(verify, cfg);
    verify
        ->add_option("--suites", cfg.suites,
                     "comma-separated subset of {category, preadditive, proper, normal, tc, "
                     "green, cones, ring, all}")
        ->delimiter(',')
        ->capture_default_str();
    verify->add_flag("--early-exit", cfg.early_exit, "stop after the first failing suite");

    CLI::App* cone_ring = app.add_subcommand("cone-ring", "build the ring of proper cones");
    add_common_options(cone_ring, cfg);

    CLI::App* iterate =
        app.add_subcommand("iterate", "rebuild the ideal category over the ring of proper cones");
    add_common_options(iterate, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are invalid input
    }

    try {
        if (build->parsed()) {
            return cmd_build(cfg);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg);
        }
        if (cone_ring->parsed()) {
            return cmd_cone_ring(cfg);
        }
        return cmd_iterate(cfg);
    } catch (const SizeExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const RRViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CriterionMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
