#include "defo/io.hpp"

#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "defo/base_space.hpp"
#include "defo/family.hpp"
#include "defo/hilbert.hpp"
#include "defo/linalg.hpp"
#include "defo/tangent.hpp"

namespace defo {

using json = nlohmann::ordered_json;

namespace {

Int json_int(const json& v, const char* what) {
    if (!v.is_number_integer()) throw input_error(std::string("expected an integer for ") + what);
    return Int((long)v.get<int64_t>());
}

json jvec(const IVec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(x.get_str());
    return a;
}

json jvec(const QVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(x.get_str());
    return a;
}

json jmat(const IMat& m) {
    json a = json::array();
    for (const IVec& r : m) a.push_back(jvec(r));
    return a;
}

json jmat(const QMat& m) {
    json a = json::array();
    for (const QVec& r : m) a.push_back(jvec(r));
    return a;
}

void render_text(const json& v, std::ostream& out, int indent) {
    std::string pad(indent, ' ');
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value()[0].is_object() || it.value()[0].is_array()))) {
                out << pad << it.key() << ":\n";
                render_text(it.value(), out, indent + 2);
            } else {
                out << pad << it.key() << ": " << it.value().dump() << "\n";
            }
        }
    } else if (v.is_array()) {
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_object()) {
                out << pad << "- [" << i << "]\n";
                render_text(v[i], out, indent + 2);
            } else {
                out << pad << "- " << v[i].dump() << "\n";
            }
        }
    } else {
        out << pad << v.dump() << "\n";
    }
}

}  // namespace

ConeInput parse_cone_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw input_error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("rays") || !doc.contains("R"))
        throw input_error("input must be an object with \"rays\" and \"R\"");
    if (!doc["rays"].is_array() || doc["rays"].empty())
        throw input_error("\"rays\" must be a nonempty array");
    IMat rays;
    for (const json& row : doc["rays"]) {
        if (!row.is_array()) throw input_error("each ray must be an array of integers");
        IVec r;
        for (const json& x : row) r.push_back(json_int(x, "ray entry"));
        rays.push_back(r);
    }
    const size_t dim = rays[0].size();
    for (const IVec& r : rays)
        if (r.size() != dim) throw input_error("rays have inconsistent dimensions");
    IVec rvec;
    for (const json& x : doc["R"]) rvec.push_back(json_int(x, "R entry"));
    if (rvec.size() != dim) throw input_error("R has a different dimension than the rays");
    ConeInput in;
    in.cone = PointedCone::from_rays(rays, (int)dim);
    in.r = rvec;
    if (doc.contains("generator_order")) {
        if (!doc["generator_order"].is_array())
            throw input_error("\"generator_order\" must be an array of integer vectors");
        for (const json& row : doc["generator_order"]) {
            IVec m;
            for (const json& x : row) m.push_back(json_int(x, "generator_order entry"));
            if (m.size() != dim) throw input_error("generator_order entries have the wrong dimension");
            in.generator_order.push_back(m);
        }
    }
    return in;
}

ConeInput load_cone(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw input_error("cannot open input file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_cone_json(ss.str());
}

namespace {

json report_cross_section(const CrossSection& q) {
    json r;
    r["R"] = jvec(q.r_covector);
    r["origin"] = jvec(q.origin_lattice_point);
    json verts = json::array();
    for (const CSVertex& v : q.vertices) {
        json jv;
        jv["point"] = jvec(v.point);
        jv["lattice"] = v.lattice;
        jv["ray"] = jvec(q.cone.rays[v.ray]);
        verts.push_back(jv);
    }
    r["vertices"] = verts;
    r["tail_rays"] = jmat(q.tail_dirs);
    json edges = json::array();
    for (const CSEdge& e : q.edges) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["dir"] = jvec(e.dir);
        edges.push_back(je);
    }
    r["edges"] = edges;
    r["edge_components"] = q.edge_component;
    json tf = json::array();
    for (const CSTwoFace& f : q.two_faces) tf.push_back(f.signs);
    r["two_face_signs"] = tf;
    return r;
}

json report_summands(const SummandSpace& s) {
    json r;
    r["components"] = s.num_vars;
    r["dim_V"] = s.dim_v();
    r["v_basis"] = jmat(s.v_basis);
    r["summand_cone_rays"] = jmat(s.c_rays);
    r["vperp_lattice"] = jmat(s.vperp_lattice);
    return r;
}

json report_base(const BaseIdeal& b, int kmax) {
    json r;
    json tg = json::array(), wg = json::array();
    for (const Poly& p : b.generators) tg.push_back(poly_to_string(p, b.t_names()));
    for (const Poly& p : b.diff_generators) wg.push_back(poly_to_string(p, b.w_names()));
    r["t_generators"] = tg;
    r["w_generators"] = wg;
    r["truncation_k"] = b.truncation_k;
    r["obstruction_dims"] = obstruction_space_dims(b, kmax);
    return r;
}

json report_hilbert(const GeneratorSet& g) {
    json r;
    r["size"] = g.elements.size();
    json el = json::array();
    for (size_t i = 0; i < g.elements.size(); ++i) {
        json je;
        je["m"] = jvec(g.elements[i]);
        if (g.decorated) {
            je["is_R"] = g.decorations[i].is_r;
            if (!g.decorations[i].is_r) {
                je["c"] = jvec(g.decorations[i].c);
                je["eta0_star"] = g.decorations[i].z.get_str();
            }
        }
        el.push_back(je);
    }
    r["elements"] = el;
    return r;
}

json report_eta_table(const SummandSpace& s, const GeneratorSet& g) {
    json rows = json::array();
    int i = 0;
    for (int idx : g.z_elements()) {
        ++i;
        const IVec& c = g.decorations[idx].c;
        auto [v, path] = descend_to_min(s.cross, c);
        json row;
        row["i"] = i;
        row["c"] = jvec(c);
        row["v"] = jvec(s.cross.vertices[v].point);
        row["lambda"] = jvec(path.steps);
        row["eta_star"] = jvec(eta_star(s, c).coords);
        row["eta0_star"] = support_data(s.cross, c).eta0_star.get_str();
        rows.push_back(row);
    }
    json r;
    r["rows"] = rows;
    return r;
}

json report_toric(const ToricIdeal& ideal) {
    json rows = json::array();
    for (size_t i = 0; i < ideal.tags.size(); ++i) {
        json row;
        row["i"] = i;
        row["alpha"] = ideal.tags[i].alpha.get_str();
        row["a"] = jvec(ideal.tags[i].a);
        row["beta"] = ideal.tags[i].beta.get_str();
        row["b"] = jvec(ideal.tags[i].b);
        row["f"] = poly_to_string(ideal.binomials[i], ideal.f_names());
        rows.push_back(row);
    }
    json r;
    r["count"] = ideal.tags.size();
    r["equations"] = rows;
    return r;
}

json report_lift(const Lifter& lifter, const ToricIdeal& ideal) {
    json rows = json::array();
    std::vector<std::string> fn = ideal.f_names();
    std::vector<std::string> bn = lifter.big_names();
    auto eqs = lifter.lift_all(ideal);
    for (size_t i = 0; i < eqs.size(); ++i) {
        json row;
        row["i"] = i;
        row["f"] = poly_to_string(eqs[i].f, fn);
        row["F"] = poly_to_string(eqs[i].F, bn);
        row["rep"] = jvec(eqs[i].rep);
        rows.push_back(row);
    }
    json r;
    r["count"] = eqs.size();
    r["liftings"] = rows;
    return r;
}

json report_t1(const PointedCone& cone, const IVec& r, const GeneratorSet& g) {
    auto [via_v, via_e] = t1_dimension(cone, r, g);
    json j;
    j["dim_T1"] = via_v;
    j["via_V"] = via_v;
    j["via_E"] = via_e;
    if (via_v != via_e) throw internal_error("the two T1 computations disagree");
    return j;
}

json report_t2(const PointedCone& cone, const IVec& r, const GeneratorSet& g, const BaseIdeal& b,
               int kmax) {
    json j;
    std::vector<int> wdims = obstruction_space_dims(b, kmax);
    json rows = json::array();
    for (int k = 1; k <= kmax; ++k) {
        json row;
        row["k"] = k;
        int t2 = t2_dimension(cone, r, g, k);
        row["dim_T2"] = t2;
        row["dim_W"] = wdims[k - 1];
        if (wdims[k - 1] > t2) throw internal_error("obstruction inequality violated");
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

}  // namespace

int run_pipeline(const PipelineConfig& config, std::ostream& out, std::ostream& err) {
    try {
        ConeInput in = load_cone(config.input_path);
        json report;
        report["input"] = config.input_path;
        report["command"] = config.subcommand;

        const std::string& cmd = config.subcommand;
        auto need_q = [&]() { return cross_section(in.cone, in.r); };

        if (cmd == "cross-section") {
            report["cross_section"] = report_cross_section(need_q());
        } else if (cmd == "summands") {
            report["summands"] = report_summands(summand_space(need_q()));
        } else if (cmd == "base-space") {
            SummandSpace s = summand_space(need_q());
            report["base_space"] = report_base(base_ideal(s, config.extra_truncation), config.kmax);
        } else if (cmd == "hilbert") {
            GeneratorSet g = hilbert_basis(in.cone);
            report["hilbert_basis"] = report_hilbert(g);
        } else if (cmd == "eta-table") {
            SummandSpace s = summand_space(need_q());
            GeneratorSet g = e_decorate(hilbert_basis(in.cone), s, in.generator_order);
            report["eta_table"] = report_eta_table(s, g);
        } else if (cmd == "toric-ideal") {
            SummandSpace s = summand_space(need_q());
            GeneratorSet g = e_decorate(hilbert_basis(in.cone), s, in.generator_order);
            report["toric_ideal"] = report_toric(toric_ideal(g, config.max_degree));
        } else if (cmd == "lift") {
            SummandSpace s = summand_space(need_q());
            GeneratorSet g = e_decorate(hilbert_basis(in.cone), s, in.generator_order);
            ToricIdeal ideal = toric_ideal(g, config.max_degree);
            Lifter lifter(s, g);
            report["liftings"] = report_lift(lifter, ideal);
        } else if (cmd == "t1") {
            SummandSpace s = summand_space(need_q());
            GeneratorSet g = e_decorate(hilbert_basis(in.cone), s, in.generator_order);
            report["t1"] = report_t1(in.cone, in.r, g);
            report["summands"] = report_summands(s);
        } else if (cmd == "t2") {
            SummandSpace s = summand_space(need_q());
            GeneratorSet g = e_decorate(hilbert_basis(in.cone), s, in.generator_order);
            BaseIdeal b = base_ideal(s, config.extra_truncation);
            report["t2"] = report_t2(in.cone, in.r, g, b, config.kmax);
        } else if (cmd == "degrees") {
            json ds = json::array();
            for (const IVec& d : interesting_degrees(in.cone)) ds.push_back(jvec(d));
            report["interesting_degrees"] = ds;
        } else if (cmd == "all") {
            CrossSection q = need_q();
            SummandSpace s = summand_space(q);
            GeneratorSet g = e_decorate(hilbert_basis(in.cone), s, in.generator_order);
            BaseIdeal b = base_ideal(s, config.extra_truncation);
            ToricIdeal ideal = toric_ideal(g, config.max_degree);
            Lifter lifter(s, g);
            report["cross_section"] = report_cross_section(q);
            report["summands"] = report_summands(s);
            report["base_space"] = report_base(b, config.kmax);
            report["hilbert_basis"] = report_hilbert(g);
            report["eta_table"] = report_eta_table(s, g);
            report["toric_ideal"] = report_toric(ideal);
            report["liftings"] = report_lift(lifter, ideal);
            report["t1"] = report_t1(in.cone, in.r, g);
            report["t2"] = report_t2(in.cone, in.r, g, b, config.kmax);
        } else {
            throw input_error("unknown subcommand: " + cmd);
        }

        if (config.format == "json") {
            out << report.dump(2) << "\n";
        } else if (config.format == "text") {
            render_text(report, out, 0);
        } else {
            throw input_error("unknown format: " + config.format);
        }
        return 0;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const hypothesis_error& e) {
        err << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 4;
    }
}

}  // namespace defo
