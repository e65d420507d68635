// asreg — exact-arithmetic workbench for quadratic graded algebras on four
// generators: Hilbert data, normality, point schemes, twists, multiplicities.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "asreg/catalog.hpp"
#include "asreg/parser.hpp"
#include "asreg/structure.hpp"
#include "asreg/verify.hpp"

using namespace asreg;

namespace {

struct AlgInput {
    QuadraticPresentation pres;
    std::optional<QuadricSpec> quadric;
    std::optional<LinMapV> tau;
    std::optional<CatalogInstance> inst;
};

std::map<std::string, Rational> parse_params(const std::string& text) {
    std::map<std::string, Rational> out;
    if (text.empty()) return out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        size_t eq = item.find('=');
        if (eq == std::string::npos) throw error("bad --params entry (expected k=v): " + item);
        std::string key = item.substr(0, eq);
        key.erase(remove_if(key.begin(), key.end(), ::isspace), key.end());
        out[key] = parse_rational(item.substr(eq + 1));
    }
    return out;
}

AlgInput load_algebra(const std::string& alg_file, const std::string& family,
                      const std::string& params) {
    if (!alg_file.empty() && !family.empty())
        throw error("use either --alg or --family, not both");
    AlgInput in;
    if (!alg_file.empty()) {
        std::ifstream f(alg_file);
        if (!f) throw error("cannot open " + alg_file);
        std::stringstream buf;
        buf << f.rdbuf();
        PresentationFile pf = parse_presentation(buf.str());
        in.pres = pf.presentation();
        in.quadric = pf.quadric;
        in.tau = pf.tau;
        return in;
    }
    if (family.empty()) throw error("an algebra is required: --alg FILE or --family ID");
    CatalogInstance inst = catalog_build(family, parse_params(params));
    in.pres = inst.presentation;
    in.quadric = inst.quadric;
    in.tau = inst.tau;
    in.inst = std::move(inst);
    return in;
}

std::vector<Rational> parse_vec4(const std::string& text) {
    QMatrix m = QMatrix::parse(text);
    if (m.rows != 1 || m.cols != 4) throw error("expected 4 comma-separated coordinates");
    return m.row(0);
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
    if (path.empty()) return;
    if (path == "-") {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw error("cannot write " + path);
    out << j.dump(2) << "\n";
}

QuadricSpec require_quadric(const AlgInput& in, const std::string& flag) {
    if (!flag.empty()) {
        PresentationFile pf = parse_presentation("quadric: " + flag + "\n");
        return *pf.quadric;
    }
    if (in.quadric) return *in.quadric;
    throw error("a quadric is required (file 'quadric:' line, catalog metadata, or --quadric)");
}

LinMapV require_tau(const AlgInput& in, const std::string& flag) {
    if (!flag.empty()) return QMatrix::parse(flag);
    if (in.tau) return *in.tau;
    return QMatrix::identity(4);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for quadratic graded algebras over the rationals"};
    app.require_subcommand(1);
    app.fallthrough(); // common flags may follow the subcommand

    std::string alg_file, family, params, json_path;
    unsigned max_degree = 5;
    app.add_option("--alg", alg_file, "presentation file")->expected(1);
    app.add_option("--family", family, "catalog family id")->expected(1);
    app.add_option("--params", params, "family parameters k=v,...")->expected(1);
    app.add_option("--max-degree", max_degree, "degree cap (default 5)");
    app.add_option("--json", json_path, "write a JSON report to PATH ('-' for stdout)");

    auto* cmd_hilbert = app.add_subcommand("hilbert", "graded dimensions through the degree cap");
    auto* cmd_normal = app.add_subcommand("normal", "degree-1 normality certificate");
    std::string element;
    cmd_normal->add_option("--element", element, "degree-1 element, e.g. \"1,0,0,0\"")->required();
    auto* cmd_central = app.add_subcommand("central", "basis of the central degree-1 space");
    auto* cmd_omega = app.add_subcommand("omega", "quadric lift: surjection, extraction, normality");
    std::string quadric_flag, tau_flag;
    cmd_omega->add_option("--quadric", quadric_flag, "quadric as (form, form)");
    cmd_omega->add_option("--tau", tau_flag, "graph automorphism matrix");
    auto* cmd_ps = app.add_subcommand("point-scheme", "minors, divisibility, residuals, candidates");
    auto* cmd_sigma = app.add_subcommand("sigma", "point-scheme automorphism at a point");
    std::string point_flag;
    cmd_sigma->add_option("--point", point_flag, "point, e.g. \"1,1,0,0\"")->required();
    auto* cmd_twist = app.add_subcommand("twist", "Zhang twist by an automorphism");
    std::string twist_tau;
    cmd_twist->add_option("--tau", twist_tau, "automorphism matrix")->required();
    auto* cmd_stab = app.add_subcommand("stab", "does the map stabilize the relation span?");
    std::string stab_tau;
    cmd_stab->add_option("--tau", stab_tau, "map matrix")->required();
    auto* cmd_ore = app.add_subcommand("ore-check", "skew-extension derivation compatibility");
    auto* cmd_mult = app.add_subcommand("multiplicity", "intersection multiplicity along a line");
    std::string line_flag, at_flag;
    bool full_report = false;
    cmd_mult->add_option("--line", line_flag, "line as base=...;dir=...");
    cmd_mult->add_option("--at", at_flag, "parameter value or 'inf'");
    cmd_mult->add_flag("--report", full_report, "full slice/classification report");
    auto* cmd_hv = app.add_subcommand("hv-search", "twisting-system parameter search");
    std::string grid_name = "small";
    cmd_hv->add_option("--grid", grid_name, "small|wide");
    auto* cmd_verify = app.add_subcommand("verify-paper", "run the verification battery");
    std::string checks_flag;
    cmd_verify->add_option("--checks", checks_flag, "comma-separated check ids (default: all)");
    bool list_checks = false;
    cmd_verify->add_flag("--list", list_checks, "list check ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_verify->parsed()) {
            if (list_checks) {
                for (const auto& id : verify_check_ids()) std::cout << id << "\n";
                return 0;
            }
            std::vector<std::string> selection;
            if (!checks_flag.empty()) {
                std::istringstream in(checks_flag);
                std::string id;
                while (std::getline(in, id, ',')) selection.push_back(id);
            }
            VerificationReport rep = verify_paper(selection);
            std::cout << rep.to_text();
            if (!json_path.empty()) {
                nlohmann::ordered_json j = nlohmann::ordered_json::parse(rep.to_json());
                write_json(json_path, j);
            }
            return rep.all_pass() ? 0 : 1;
        }

        AlgInput in = load_algebra(alg_file, family, params);

        if (cmd_hilbert->parsed()) {
            GradedAlgebra alg(in.pres);
            nlohmann::ordered_json j;
            j["dims"] = nlohmann::ordered_json::array();
            for (unsigned d = 0; d <= max_degree; ++d) {
                std::cout << d << ": " << alg.dim(d) << "\n";
                j["dims"].push_back(alg.dim(d));
            }
            write_json(json_path, j);
            return 0;
        }
        if (cmd_normal->parsed()) {
            GradedAlgebra alg(in.pres);
            NormalityCertificate cert = is_normal_deg1(alg, parse_vec4(element));
            nlohmann::ordered_json j;
            j["element"] = element;
            j["normal"] = cert.is_normal;
            if (cert.phi) j["phi"] = cert.phi->print();
            if (cert.witness) j["witness"] = cert.witness_side + " class " + to_string(cert.witness->coords);
            std::cout << (cert.is_normal ? "normal" : "not normal") << "\n";
            if (cert.phi) std::cout << "phi: " << cert.phi->print() << "\n";
            if (cert.witness)
                std::cout << "witness (" << cert.witness_side
                          << "): " << to_string(cert.witness->coords) << "\n";
            write_json(json_path, j);
            return 0;
        }
        if (cmd_central->parsed()) {
            GradedAlgebra alg(in.pres);
            Subspace c = central_space(alg);
            std::cout << "dim " << c.dim() << "\n";
            nlohmann::ordered_json j;
            j["dim"] = c.dim();
            j["basis"] = nlohmann::ordered_json::array();
            for (size_t i = 0; i < c.dim(); ++i) {
                std::cout << to_string(c.row(i)) << "\n";
                j["basis"].push_back(to_string(c.row(i)));
            }
            write_json(json_path, j);
            return 0;
        }
        if (cmd_omega->parsed()) {
            GradedAlgebra alg(in.pres);
            QuadricSpec q = require_quadric(in, quadric_flag);
            LinMapV tau = require_tau(in, tau_flag);
            nlohmann::ordered_json j;
            bool sur = check_surjection(in.pres, q, tau);
            j["surjection"] = sur;
            std::cout << "surjection: " << (sur ? "true" : "false") << "\n";
            if (sur) {
                AClass omega = extract_omega(alg, q, tau);
                j["omega_class"] = to_string(omega.coords);
                j["omega_multiple_check"] = omega_multiple_check(alg, tau, omega);
                NormalityCertificate cert = is_normal_deg2(alg, omega);
                j["omega_normal"] = cert.is_normal;
                std::cout << "omega class: " << to_string(omega.coords) << "\n"
                          << "multiple check: " << (j["omega_multiple_check"].get<bool>() ? "true" : "false")
                          << "\n"
                          << "normal: " << (cert.is_normal ? "true" : "false") << "\n";
            }
            write_json(json_path, j);
            return 0;
        }
        if (cmd_ps->parsed()) {
            QuadricSpec q = require_quadric(in, "");
            std::vector<std::pair<std::string, LineSpec>> cands;
            if (in.inst)
                for (const auto& cl : in.inst->candidate_lines) cands.emplace_back(cl.name, cl.line);
            SchemeReport rep = scheme_report(in.pres, q, cands);
            nlohmann::ordered_json j;
            j["classification"] = to_string(rep.classification);
            MinorIdeal ideal = compute_minors(multilinearize(in.pres));
            j["minors"] = nlohmann::ordered_json::array();
            for (const auto& m : ideal.minors) j["minors"].push_back(m.print());
            j["residuals"] = nlohmann::ordered_json::array();
            for (const auto& r : rep.residuals) j["residuals"].push_back(r.print());
            j["candidates"] = nlohmann::ordered_json::array();
            for (const auto& cr : rep.candidates) {
                nlohmann::ordered_json e;
                e["name"] = cr.name;
                e["on_quadric"] = cr.on_quadric;
                e["minors_vanish"] = cr.minors_vanish;
                e["residuals_vanish"] = cr.residuals_vanish;
                e["accepted"] = cr.accepted;
                j["candidates"].push_back(std::move(e));
            }
            std::cout << "classification: " << to_string(rep.classification) << "\n";
            for (const auto& cr : rep.candidates)
                std::cout << cr.name << ": " << (cr.accepted ? "component" : "rejected") << "\n";
            write_json(json_path.empty() ? "-" : json_path, j);
            return 0;
        }
        if (cmd_sigma->parsed()) {
            MultilinearMatrix m = multilinearize(in.pres);
            auto image = sigma_at(m, parse_vec4(point_flag));
            std::cout << to_string(image) << "\n";
            nlohmann::ordered_json j;
            j["point"] = point_flag;
            j["image"] = to_string(image);
            write_json(json_path, j);
            return 0;
        }
        if (cmd_twist->parsed()) {
            QuadraticPresentation t = zhang_twist(in.pres, QMatrix::parse(twist_tau));
            std::cout << print_presentation(t);
            return 0;
        }
        if (cmd_stab->parsed()) {
            bool s = stabilizes(in.pres, QMatrix::parse(stab_tau));
            std::cout << (s ? "true" : "false") << "\n";
            return 0;
        }
        if (cmd_ore->parsed()) {
            if (!in.inst || !in.inst->ore)
                throw error("ore-check needs a catalog family with skew-extension data");
            OreCheck r = sigma_derivation_check(*in.inst->ore);
            std::cout << to_string(r) << "\n";
            return r == OreCheck::ok ? 0 : 1;
        }
        if (cmd_mult->parsed()) {
            QuadricSpec q = require_quadric(in, "");
            if (full_report) {
                LinMapV tau = require_tau(in, "");
                MultiplicityReport rep = multiplicity_report(
                    in.pres, q, tau, in.inst ? in.inst->slice_candidates : std::vector<SliceFamily>{});
                std::cout << "classification: " << to_string(rep.classification) << " ("
                          << rep.detail << ")\n";
                for (const auto& s : rep.slices)
                    std::cout << s.label << " at (" << to_string(s.point) << "): "
                              << (s.line_contained ? "line contained" : std::to_string(s.multiplicity))
                              << "\n";
                nlohmann::ordered_json j;
                j["classification"] = to_string(rep.classification);
                j["detail"] = rep.detail;
                j["multiple_loci"] = rep.multiple_loci;
                write_json(json_path, j);
                return 0;
            }
            if (line_flag.empty()) throw error("--line is required (or use --report)");
            std::string base_part, dir_part;
            size_t semi = line_flag.find(';');
            if (semi == std::string::npos) throw error("--line expects base=...;dir=...");
            auto strip = [](std::string s, const char* key) {
                size_t eq = s.find('=');
                if (eq == std::string::npos || s.substr(0, eq) != key)
                    throw error(std::string("--line expects ") + key + "=...");
                return s.substr(eq + 1);
            };
            base_part = strip(line_flag.substr(0, semi), "base");
            dir_part = strip(line_flag.substr(semi + 1), "dir");
            std::optional<Rational> at;
            if (at_flag != "inf") at = parse_rational(at_flag.empty() ? "0" : at_flag);
            MinorIdeal ideal = compute_minors(multilinearize(in.pres));
            LineMult lm = line_multiplicity(ideal.minors,
                                            ProjLine(parse_vec4(base_part), parse_vec4(dir_part)), at);
            if (lm.line_contained) std::cout << "line contained in the scheme\n";
            else std::cout << lm.value << "\n";
            return 0;
        }
        if (cmd_hv->parsed()) {
            HvGrid grid = grid_name == "wide" ? HvGrid::wide_grid() : HvGrid::small_grid();
            auto match = hv_match_search(in.pres, grid);
            if (match) {
                std::cout << "match: a=" << match->params.a << " q=" << match->params.q
                          << " alpha=" << match->params.alpha << " beta=" << match->params.beta
                          << " n=" << match->params.n << "\n";
            } else {
                std::cout << "none\n";
            }
            return 0;
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
