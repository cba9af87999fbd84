#include "tcc/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "tcc/czindex.hpp"
#include "tcc/json_io.hpp"
#include "tcc/lens.hpp"
#include "tcc/verify.hpp"

namespace tcc {

namespace {

struct RunConfig {
    std::string input_path;
    int cap = -1;  // -1: derive 2n+4 from the instance
    bool json_out = false;
    std::string base_spec;
    uint64_t seed = 20181226;
    bool selftest_corrupt = false;
};

VecZ parse_int_list(const std::string& s) {
    VecZ out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw bad_input("empty entry in integer list '" + s + "'");
        try {
            out.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw bad_input("not an integer: '" + tok + "'");
        }
    }
    if (out.empty()) throw bad_input("empty integer list");
    return out;
}

VecQ parse_rat_list(const std::string& s) {
    VecQ out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            Rat r(tok);
            r.canonicalize();
            out.push_back(r);
        } catch (const std::invalid_argument&) {
            throw bad_input("not a rational: '" + tok + "'");
        }
    }
    if (out.empty()) throw bad_input("empty rational list");
    return out;
}

std::string vec_str(const std::vector<Int>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string rat_vec_str(const VecQ& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

int effective_cap(const RunConfig& cfg, int n) {
    int cap = cfg.cap >= 0 ? cfg.cap : 2 * n + 4;
    if (cap < 0 || cap % 2 != 0) throw bad_input("degree cap must be even and >= 0");
    return cap;
}

void print_betti_table(std::ostream& out, const BettiTable& t, const MomentCone& cone) {
    out << "betti table up to degree " << t.degree_cap << " (pi1 order " << t.pi1_order.get_str() << "):\n";
    long order = t.pi1_order.get_si();
    out << std::setw(8) << "degree" << std::setw(8) << "total";
    for (long k = 0; k < order; ++k) out << std::setw(6) << ("[" + std::to_string(k) + "]");
    out << "\n";
    for (const auto& [deg, cnt] : t.total) {
        out << std::setw(8) << deg.get_str() << std::setw(8) << cnt;
        for (long k = 0; k < order; ++k) {
            long c = 0;
            auto it = t.per_class.find(Int(k));
            if (it != t.per_class.end()) {
                auto jt = it->second.find(deg);
                if (jt != it->second.end()) c = jt->second;
            }
            out << std::setw(6) << c;
        }
        out << "\n";
    }
    if (!t.divergent_edges.empty()) {
        out << "edges with arbitrarily large indices (no orbits below any cap):";
        for (int e : t.divergent_edges) {
            out << " " << e << " {";
            const auto& ed = cone.edges[static_cast<size_t>(e)];
            for (size_t i = 0; i < ed.size(); ++i) out << (i ? "," : "") << ed[i];
            out << "}";
        }
        out << "\n";
    }
}

// Reeb base policy: an explicit --base is authoritative; otherwise try each
// vertex in order, then the centroid, skipping candidates rejected by the
// interiority check or hitting degenerate floors.
struct DiagramReport {
    ReebVector reeb;
    BettiTable betti;
    ConditionII cond;
};

DiagramReport analyze_diagram(const ToricDiagram& d, const MomentCone& cone, const RunConfig& cfg) {
    int cap = effective_cap(cfg, d.dim);
    std::vector<VecQ> candidates;
    if (!cfg.base_spec.empty()) {
        VecQ base = parse_rat_list(cfg.base_spec);
        if (base.size() != static_cast<size_t>(d.dim)) throw bad_input("--base has wrong dimension");
        candidates.push_back(base);
    } else {
        for (const auto& v : d.vertices) {
            VecQ b;
            for (const Int& x : v) b.emplace_back(x);
            candidates.push_back(std::move(b));
        }
        candidates.push_back(d.centroid());
    }
    std::string last_error;
    for (const auto& base : candidates) {
        try {
            DiagramReport rep{make_reeb_vector(d, base), {}, {}};
            rep.betti = betti_table(cone, rep.reeb, cap);
            rep.cond = check_condition_ii(cone, rep.reeb);
            return rep;
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::Validation || e.kind() == ErrorKind::Degenerate) {
                last_error = e.what();
                continue;
            }
            throw;
        }
    }
    throw degenerate_error("no usable Reeb base point found (" + last_error +
                           "); supply one with --base");
}

int report_cone(const MomentCone& cone, const std::optional<ToricDiagram>& dia,
                const DiagramValidation* validation, const RunConfig& cfg, std::ostream& out) {
    json j;
    auto rep = check_good_cone(cone.normals);
    auto cert = gorenstein_certificate(cone.normals);
    Int order = pi1_order(cone);

    if (cfg.json_out) {
        if (validation) {
            j["warnings"] = validation->warnings;
        }
        j["cone"] = cone_json(cone);
        j["good"] = rep.good;
        j["pi1_order"] = int_json(order);
        j["gorenstein"] = cert.has_value();
        if (cert) j["gorenstein_certificate"] = intvec_json(*cert);
    } else {
        if (validation)
            for (const auto& w : validation->warnings) out << "warning: " << w << "\n";
        out << "good cone: yes (" << cone.normals.size() << " normals, " << cone.edges.size()
            << " edges)\n";
        out << "pi1 order: " << order.get_str() << "\n";
        if (cert)
            out << "gorenstein certificate: " << to_string(*cert) << "\n";
        else
            out << "gorenstein certificate: none\n";
    }

    if (dia) {
        DiagramReport dr = analyze_diagram(*dia, cone, cfg);
        if (cfg.json_out) {
            j["diagram"] = diagram_json(*dia);
            json rb = json::array();
            for (const auto& r : dr.reeb.base) rb.push_back(rat_json(r));
            j["reeb_base"] = rb;
            j["condition_ii"] = dr.cond.holds;
            if (dr.cond.witness) {
                json w;
                w["edge"] = dr.cond.witness->edge;
                w["multiplicity"] = int_json(dr.cond.witness->multiplicity);
                w["sft_degree"] = int_json(dr.cond.witness->sft_degree);
                w["class"] = int_json(dr.cond.witness->pi1_class);
                j["condition_ii_witness"] = w;
            }
            j["betti"] = betti_json(dr.betti);
        } else {
            out << "reeb base: " << rat_vec_str(dr.reeb.base) << "\n";
            out << "condition (ii): " << (dr.cond.holds ? "satisfied" : "VIOLATED") << "\n";
            if (dr.cond.witness)
                out << "  witness: edge " << dr.cond.witness->edge << " N=" << dr.cond.witness->multiplicity.get_str()
                    << " degree " << dr.cond.witness->sft_degree.get_str() << "\n";
            print_betti_table(out, dr.betti, cone);
        }
    } else if (!cfg.json_out) {
        out << "note: cone normals are not in the (v, 1) shape; Reeb orbit data needs a toric diagram\n";
    }
    if (cfg.json_out) out << j.dump(2) << "\n";
    return 0;
}

int cmd_diagram(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::ifstream in(cfg.input_path);
    if (!in) throw bad_input("cannot open input file '" + cfg.input_path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw bad_input(std::string("malformed JSON: ") + e.what());
    }
    auto parsed = parse_input_json(j);

    if (parsed.diagram_points) {
        auto val = validate_toric_diagram(*parsed.diagram_points);
        if (!val.valid()) {
            for (const auto& issue : val.issues) err << "invalid diagram: " << issue << "\n";
            return 2;
        }
        auto cone = moment_cone(*val.diagram);
        return report_cone(cone, *val.diagram, &val, cfg, out);
    }

    // Cone input.
    auto rep = check_good_cone(*parsed.cone_normals);
    if (!rep.good) {
        for (const auto& f : rep.failures) err << "not a good cone: " << f << "\n";
        return 2;
    }
    MomentCone cone;
    cone.ambient_dim = static_cast<int>((*parsed.cone_normals)[0].size());
    cone.normals = *parsed.cone_normals;
    cone.edges = rep.edge_active;
    if (auto cert = gorenstein_certificate(cone.normals)) cone.gorenstein = *cert;
    std::optional<ToricDiagram> dia;
    if (has_diagram_shape(cone)) {
        auto val = validate_toric_diagram(diagram_vertices_of(cone));
        if (!val.valid()) {
            for (const auto& issue : val.issues) err << "cone is good but conv(v_j) failed validation: " << issue << "\n";
            return 2;
        }
        // Rebuild edges in diagram order so edge ids match the facet ids.
        cone = moment_cone(*val.diagram);
        dia = *val.diagram;
    }
    return report_cone(cone, dia, nullptr, cfg, out);
}

int cmd_cosphere(const Int& p, const Int& q, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    auto d = build_cosphere_diagram(p, q);
    auto cone = moment_cone(d);
    if (!cfg.json_out)
        out << "unit cosphere bundle of L^3_" << p.get_str() << "(" << q.get_str() << "), diagram conv((0,0),(1,0),("
            << q.get_str() << "," << p.get_str() << "),(" << Int(q + 1).get_str() << "," << p.get_str() << "))\n";
    return report_cone(cone, d, nullptr, cfg, out);
    (void)err;
}

int cmd_lens(const Int& p, const VecZ& weights, bool show_cbs, bool show_by_class, bool show_symmetry,
             bool show_delta, const RunConfig& cfg, std::ostream& out) {
    auto f = lens_normal_form(p, weights);
    json j;
    std::vector<Int> gvals;
    for (Int N = 1; N <= f.p; ++N) gvals.push_back(degree_function(f, N));

    if (cfg.json_out) {
        j["normal_form"] = lens_form_json(f);
        json g = json::array();
        for (const auto& v : gvals) g.push_back(int_json(v));
        j["g"] = g;
        if (show_cbs) {
            json c = json::array();
            for (const auto& v : cbs(f)) c.push_back(int_json(v));
            j["cbs"] = c;
        }
        if (show_by_class) {
            json bc = json::array();
            for (Int k = 0; k < f.p; ++k) {
                json e;
                e["class"] = int_json(k);
                Int rep = mod_nonneg(k - 1, f.p) + 1;
                e["g_tilde"] = int_json(degree_function(f, rep, DegreeVariant::g_tilde));
                bc.push_back(e);
            }
            j["by_class"] = bc;
        }
        if (show_symmetry) {
            json s = json::array();
            for (const auto& k : contact_symmetry_set(f)) s.push_back(int_json(k));
            j["contact_symmetry_set"] = s;
        }
        if (show_delta) {
            json dl = json::array();
            for (const auto& c : reidemeister_delta(p, weights).coefficients) dl.push_back(rat_json(c));
            j["delta_coefficients"] = dl;
        }
        out << j.dump(2) << "\n";
        return 0;
    }

    out << "normal form: n=" << f.n << " p=" << f.p.get_str() << " alpha_bar=" << vec_str(f.alpha_bar)
        << " alpha0=" << f.alpha0.get_str() << " a_n=" << f.a_n.get_str() << "\n";
    out << "rebuilt weights: " << vec_str(f.rebuilt_weights()) << "\n";
    out << "g(1.." << f.p.get_str() << ") = " << vec_str(gvals) << "\n";
    if (show_cbs) out << "cbs = " << vec_str(cbs(f)) << "\n";
    if (show_by_class) {
        out << "per-class degrees (class of gamma_0^N is N mod p):\n";
        for (Int k = 0; k < f.p; ++k) {
            Int rep = mod_nonneg(k - 1, f.p) + 1;
            Int g = degree_function(f, rep, DegreeVariant::g_tilde);
            out << "  class " << k.get_str() << ": g~ = " << g.get_str()
                << " (one orbit at every even degree >= g~)\n";
        }
    }
    if (show_symmetry) {
        auto s = contact_symmetry_set(f);
        out << "contact symmetry set = {";
        bool first = true;
        for (const auto& k : s) {
            out << (first ? "" : ", ") << k.get_str();
            first = false;
        }
        out << "}\n";
    }
    if (show_delta) {
        auto delta = reidemeister_delta(p, weights);
        out << "Delta(t) =";
        bool any = false;
        for (size_t i = 0; i < delta.coefficients.size(); ++i) {
            const Rat& c = delta.coefficients[i];
            if (c == 0) continue;
            if (any)
                out << (c > 0 ? " + " : " - ");
            else
                out << (c > 0 ? " " : " -");
            out << to_string(abs(c)) << "*t^" << i;
            any = true;
        }
        if (!any) out << " 0";
        out << "\n";
    }
    return 0;
}

int cmd_compare(const Int& p, const VecZ& w1, const VecZ& w2, const RunConfig& cfg, std::ostream& out) {
    auto cp = classify_pair(p, w1, w2);
    std::string diffeo_str = cp.diffeo.equivalent ? "diffeomorphic" : "not diffeomorphic";
    if (cfg.json_out) {
        json j;
        j["diffeomorphic"] = cp.diffeo.equivalent;
        j["even_sign_changes"] = cp.diffeo.even_sign_witness;
        if (cp.diffeo.equivalent) {
            j["witness_unit"] = int_json(cp.diffeo.unit);
            j["witness_sign_flips"] = cp.diffeo.sign_flips;
        }
        json c1 = json::array(), c2 = json::array();
        for (const auto& v : cp.cbs1) c1.push_back(int_json(v));
        for (const auto& v : cp.cbs2) c2.push_back(int_json(v));
        j["cbs1"] = c1;
        j["cbs2"] = c2;
        j["verdict"] = verdict_name(cp.verdict);
        if (cp.matching_unit) j["class_matching_unit"] = int_json(*cp.matching_unit);
        out << j.dump(2) << "\n";
        return 0;
    }
    out << diffeo_str << "; " << verdict_name(cp.verdict) << "\n";
    if (cp.diffeo.equivalent) {
        out << "diffeo witness: unit k=" << cp.diffeo.unit.get_str() << ", sign flips at indices {";
        for (size_t i = 0; i < cp.diffeo.sign_flips.size(); ++i)
            out << (i ? "," : "") << cp.diffeo.sign_flips[i];
        out << "} (" << (cp.diffeo.even_sign_witness ? "even" : "odd") << ")\n";
    }
    out << "cbs #1 = " << vec_str(cp.cbs1) << "\n";
    out << "cbs #2 = " << vec_str(cp.cbs2) << "\n";
    if (cp.matching_unit)
        out << "per-class data matches under unit k=" << cp.matching_unit->get_str() << "\n";
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    auto items = run_paper_verification(cfg.seed, cfg.selftest_corrupt);
    int failures = 0;
    if (cfg.json_out) {
        json j = json::array();
        for (const auto& it : items) {
            json e;
            e["name"] = it.name;
            e["pass"] = it.pass;
            if (!it.detail.empty()) e["detail"] = it.detail;
            j.push_back(e);
            if (!it.pass) ++failures;
        }
        json root;
        root["items"] = j;
        root["all_pass"] = failures == 0;
        out << root.dump(2) << "\n";
    } else {
        for (const auto& it : items) {
            if (it.pass) {
                out << "PASS  " << it.name << "\n";
            } else {
                ++failures;
                out << "FAIL  " << it.name << (it.detail.empty() ? "" : " — " + it.detail) << "\n";
            }
        }
        out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
    }
    return failures == 0 ? 0 : 4;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"toric contact invariants from lattice data", "tcc"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string p_str, q_str, weights_str, w1_str, w2_str;
    bool show_cbs = false, show_by_class = false, show_symmetry = false, show_delta = false;

    auto add_common = [&](CLI::App* sub, bool with_cap) {
        sub->add_flag("--json", cfg.json_out, "machine-readable JSON output");
        if (with_cap) sub->add_option("--cap", cfg.cap, "even degree cap (default 2n+4)");
    };

    auto* diagram = app.add_subcommand("diagram", "analyze a toric diagram or moment cone from JSON");
    diagram->add_option("--input", cfg.input_path, "JSON file with {\"dim\",\"vertices\"} or {\"normals\"}")
        ->required();
    diagram->add_option("--base", cfg.base_spec, "rational Reeb base point, e.g. 1/2,0");
    add_common(diagram, true);

    auto* cosphere = app.add_subcommand("cosphere", "unit cosphere bundle of a 3-dim lens space");
    cosphere->add_option("--p", p_str, "order of the fundamental group")->required();
    cosphere->add_option("--q", q_str, "lens parameter, coprime to p")->required();
    cosphere->add_option("--base", cfg.base_spec, "rational Reeb base point");
    add_common(cosphere, true);

    auto* lens = app.add_subcommand("lens", "Gorenstein contact lens space from weights");
    lens->add_option("--p", p_str, "order of the cyclic group")->required();
    lens->add_option("--weights", weights_str, "comma-separated weights l_0,...,l_n")->required();
    lens->add_flag("--cbs", show_cbs, "print the contact Betti numbers sequence");
    lens->add_flag("--by-class", show_by_class, "print per-homotopy-class degree data");
    lens->add_flag("--symmetry", show_symmetry, "print the contact symmetry set");
    lens->add_flag("--delta", show_delta, "print the Reidemeister Delta polynomial");
    add_common(lens, false);

    auto* compare = app.add_subcommand("compare", "classify a pair of weight presentations");
    compare->add_option("--p", p_str, "order of the cyclic group")->required();
    compare->add_option("--w1", w1_str, "first weight list")->required();
    compare->add_option("--w2", w2_str, "second weight list")->required();
    add_common(compare, false);

    auto* verify = app.add_subcommand("verify-paper", "run the built-in reproduction suite");
    verify->add_option("--seed", cfg.seed, "seed for the randomized identity checks");
    verify->add_flag("--selftest-corrupt", cfg.selftest_corrupt,
                     "deliberately corrupt one expectation (failure-path self test)")
        ->group("");  // hidden
    add_common(verify, false);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (app.got_subcommand(diagram)) return cmd_diagram(cfg, out, err);
        if (app.got_subcommand(cosphere)) {
            Int p(p_str), q(q_str);
            return cmd_cosphere(p, q, cfg, out, err);
        }
        if (app.got_subcommand(lens))
            return cmd_lens(Int(p_str), parse_int_list(weights_str), show_cbs, show_by_class, show_symmetry,
                            show_delta, cfg, out);
        if (app.got_subcommand(compare)) {
            VecZ w1 = parse_int_list(w1_str), w2 = parse_int_list(w2_str);
            if (w1.size() != w2.size()) throw bad_input("weight lists have different lengths");
            return cmd_compare(Int(p_str), w1, w2, cfg, out);
        }
        if (app.got_subcommand(verify)) return cmd_verify(cfg, out);
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::BadInput:
                err << "error: " << e.what() << "\n";
                return 1;
            case ErrorKind::Validation:
                err << "validation error: " << e.what() << "\n";
                return 2;
            case ErrorKind::Degenerate:
                err << "degenerate Reeb data: " << e.what() << "\n";
                return 3;
            case ErrorKind::Internal:
                err << "internal error: " << e.what() << "\n";
                return 5;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no command executed\n";
    return 1;
}

}  // namespace tcc
