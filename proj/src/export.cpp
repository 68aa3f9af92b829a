
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

#include "idealcat/export.hpp"

#include <iomanip>
#include <sstream>

namespace idealcat {

namespace {

Json
table_to_json(const FiniteRing& ring, bool multiplicative) {
    Json rows = Json::array();
    for (int a = 0; a < ring.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < ring.order(); ++b) {
            row.push_back(multiplicative ? ring.mul(a, b) : ring.add(a, b));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string
element_set(const std::vector<int>& elements) {
    std::string out = "{";
    for (size_t k = 0; k < elements.size(); ++k) {
        out += (k ? "," : "") + std::to_string(elements[k]);
    }
    return out + "}";
}

}  // namespace

const char*
side_name(Side side) {
    return side == Side::kLeft ? "left" : "right";
}

Json
ring_to_json(const FiniteRing& ring) {
    return Json{{"schema", 1},
                {"kind", "ring"},
                {"label", ring.label()},
                {"order", ring.order()},
                {"zero", ring.zero()},
                {"one", ring.one()},
                {"add", table_to_json(ring, false)},
                {"mul", table_to_json(ring, true)}};
}

std::string
ring_to_text(const FiniteRing& ring) {
    const int width = ring.order() > 10 ? (ring.order() > 100 ? 3 : 2) : 1;
    std::ostringstream out;
    out << "ring " << ring.label() << ": order " << ring.order() << ", zero " << ring.zero()
        << ", one " << ring.one() << "\n";
    for (const bool multiplicative : {false, true}) {
        out << (multiplicative ? "mul" : "add") << ":\n";
        for (int a = 0; a < ring.order(); ++a) {
            out << " ";
            for (int b = 0; b < ring.order(); ++b) {
                out << " " << std::setw(width)
                    << (multiplicative ? ring.mul(a, b) : ring.add(a, b));
            }
            out << "\n";
        }
    }
    return out.str();
}

Json
category_to_json(const Category& cat) {
    const int m = cat.object_count();

    Json objects = Json::array();
    for (int i = 0; i < m; ++i) {
        objects.push_back(Json{{"name", cat.object_name(i)},
                               {"generator", cat.object(i).generator},
                               {"elements", cat.object(i).elements}});
    }

    Json hom_sizes = Json::array();
    for (int i = 0; i < m; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m; ++j) {
            row.push_back(cat.hom(i, j).size());
        }
        hom_sizes.push_back(std::move(row));
    }

    Json factorizations = Json::array();
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            for (const Translation& f : cat.hom(i, j)) {
                const CanonicalFactorization cf = cat.canonical_factorization(f);
                factorizations.push_back(Json{{"dom", i},
                                              {"cod", j},
                                              {"witness", f.witness},
                                              {"gen_image", f.gen_image},
                                              {"image", cf.image},
                                              {"epi_witness", cf.epi.witness}});
            }
        }
    }

    const LatticeReport& lattice = cat.lattice();
    Json lattice_json{{"is_lattice", lattice.is_lattice},
                      {"relatively_complemented", lattice.relatively_complemented},
                      {"is_chain", lattice.is_chain},
                      {"join", lattice.join},
                      {"meet", lattice.meet}};
    lattice_json["no_join_witness"] =
        lattice.no_join_witness
            ? Json{lattice.no_join_witness->first, lattice.no_join_witness->second}
            : Json(nullptr);
    lattice_json["no_meet_witness"] =
        lattice.no_meet_witness
            ? Json{lattice.no_meet_witness->first, lattice.no_meet_witness->second}
            : Json(nullptr);
    lattice_json["complement_witness"] =
        lattice.complement_witness ? Json{(*lattice.complement_witness)[0],
                                          (*lattice.complement_witness)[1],
                                          (*lattice.complement_witness)[2]}
                                   : Json(nullptr);

    return Json{{"schema", 1},
                {"kind", "category"},
                {"ring", cat.ring_label()},
                {"side", side_name(cat.side())},
                {"object_count", m},
                {"morphism_count", cat.morphism_count()},
                {"top", cat.top()},
                {"bottom", cat.bottom()},
                {"objects", objects},
                {"hom_sizes", hom_sizes},
                {"factorizations", factorizations},
                {"lattice", lattice_json}};
}

std::string
category_to_dot(const Category& cat, bool collapse_edges) {
    std::ostringstream out;
    out << "digraph ideals {\n";
    out << "  label=\"" << (cat.side() == Side::kLeft ? "L(" : "R(") << cat.ring_label()
        << ")\";\n";
    out << "  labelloc=\"t\";\n";
    out << "  node [shape=box];\n";
    for (int i = 0; i < cat.object_count(); ++i) {
        out << "  o" << i << " [label=\"" << cat.object_name(i) << " = "
            << element_set(cat.object(i).elements) << "\"];\n";
    }
    for (int i = 0; i < cat.object_count(); ++i) {
        for (int j = 0; j < cat.object_count(); ++j) {
            const Translation id = cat.identity(i);
            int shown = 0;
            for (const Translation& f : cat.hom(i, j)) {
                if (i == j && f == id) {
                    continue;
                }
                ++shown;
                if (!collapse_edges) {
                    out << "  o" << i << " -> o" << j << " [label=\"s=" << f.witness << "\"];\n";
                }
            }
            if (collapse_edges && shown > 0) {
                out << "  o" << i << " -> o" << j << " [label=\"" << shown << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

Json
cone_ring_to_json(const Category& cat, const ConeRing& ring) {
    Json elements = Json::array();
    for (const Cone& cone : ring.elements) {
        Json witnesses = Json::array();
        for (const Translation& component : cone.components) {
            witnesses.push_back(component.witness);
        }
        elements.push_back(Json{{"vertex", cat.object_name(cone.vertex)},
                                {"vertex_generator", cat.object(cone.vertex).generator},
                                {"component_witnesses", witnesses}});
    }
    return Json{{"schema", 1},
                {"kind", "cone_ring"},
                {"ring", cat.ring_label()},
                {"side", side_name(cat.side())},
                {"order", ring.order()},
                {"zero", ring.zero},
                {"one", ring.one < 0 ? Json(nullptr) : Json(ring.one)},
                {"elements", elements},
                {"add", ring.add_table},
                {"mul", ring.mul_table},
                {"neg", ring.neg_table},
                {"axioms", Json{{"add_closed", ring.axioms.add_closed},
                                {"mul_closed", ring.axioms.mul_closed},
                                {"add_associative", ring.axioms.add_associative},
                                {"add_commutative", ring.axioms.add_commutative},
                                {"zero_identity", ring.axioms.zero_identity},
                                {"add_inverses", ring.axioms.add_inverses},
                                {"mul_associative", ring.axioms.mul_associative},
                                {"left_distributive", ring.axioms.left_distributive},
                                {"right_distributive", ring.axioms.right_distributive},
                                {"ok", ring.axioms.ok()}}}};
}

Json
report_to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const CheckResult& check : report.checks) {
        checks.push_back(Json{{"id", check.id},
                              {"title", check.title},
                              {"status", to_string(check.status)},
                              {"witness", check.witness}});
    }
    return Json{{"suite", report.suite},
                {"passed", report.passed()},
                {"failed", report.failed()},
                {"skipped", report.skipped()},
                {"notes", report.notes()},
                {"ok", report.ok()},
                {"checks", checks}};
}

Json
reports_to_json(const std::string& ring_label, Side side,
                const std::vector<VerificationReport>& reports) {
    bool ok = true;
    Json suites = Json::array();
    for (const VerificationReport& report : reports) {
        ok = ok && report.ok();
        suites.push_back(report_to_json(report));
    }
    return Json{{"schema", 1},
                {"kind", "verification"},
                {"ring", ring_label},
                {"side", side_name(side)},
                {"ok", ok},
                {"suites", suites}};
}

std::string
render_report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << ": " << report.passed() << " passed, " << report.failed()
        << " failed, " << report.skipped() << " skipped, " << report.notes() << " noted ("
        << std::fixed << std::setprecision(1) << report.wall_ms << " ms)\n";
    for (const CheckResult& check : report.checks) {
        out << "  [" << to_string(check.status) << "] " << check.id << ": " << check.title
            << "\n";
        if (!check.witness.is_null()) {
            out << "         " << check.witness.dump() << "\n";
        }
    }
    return out.str();
}

std::string
dump_json(const Json& doc) {
    return doc.dump(2) + "\n";
}

}  // namespace idealcat
