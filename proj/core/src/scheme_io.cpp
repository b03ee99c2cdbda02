#include "zerodim/scheme_io.hpp"

#include <fstream>
#include <sstream>

namespace zerodim {

namespace {

Scalar scalar_from_json(const Field& f, const Json& v) {
    if (v.is_number_integer()) return Scalar::of_int(f, v.get<long>());
    if (v.is_string()) {
        try {
            mpq_class q(v.get<std::string>());
            if (q.get_den() == 0) throw validation_error("zero denominator");
            q.canonicalize();
            return Scalar::of_mpq(f, q);
        } catch (const std::invalid_argument&) {
            throw validation_error("bad coordinate literal: " + v.get<std::string>());
        }
    }
    throw validation_error("coordinates must be integers or rational strings");
}

Json scalar_to_json(const Scalar& s) {
    if (!s.field().is_rational()) return Json(s.residue());
    const mpq_class& q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return Json(q.get_num().get_si());
    return Json(s.str());
}

std::vector<Poly> parse_polys(const Ring& r, const Json& arr, const char* what) {
    if (!arr.is_array()) throw validation_error(std::string(what) + " must be an array");
    std::vector<Poly> out;
    for (const Json& e : arr) {
        if (!e.is_string())
            throw validation_error(std::string(what) + " entries must be strings");
        out.push_back(Poly::parse(r, e.get<std::string>()));
    }
    return out;
}

Json polys_to_json(const std::vector<Poly>& v) {
    Json arr = Json::array();
    for (const Poly& p : v) arr.push_back(p.str());
    return arr;
}

Json scalars_to_json(const std::vector<Scalar>& v) {
    Json arr = Json::array();
    for (const Scalar& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

Json optional_bool(const std::optional<bool>& v) {
    return v ? Json(*v) : Json(nullptr);
}

Json verdict_json(Verdict v) { return Json(verdict_str(v)); }

} // namespace

Json field_to_json(const Field& f) {
    if (f.is_rational()) return Json("Q");
    return Json{{"Fp", f.characteristic()}};
}

Field field_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "Q") return Field::Q();
        throw validation_error("field must be \"Q\" or {\"Fp\": p}");
    }
    if (j.is_object() && j.contains("Fp") && j["Fp"].is_number_unsigned())
        return Field::Fp(j["Fp"].get<std::uint64_t>());
    throw validation_error("field must be \"Q\" or {\"Fp\": p}");
}

Scheme parse_scheme(const Json& j, std::optional<Field> field_override) {
    if (!j.is_object()) throw validation_error("scheme file must be a JSON object");
    for (const char* key : {"field", "vars", "mode"})
        if (!j.contains(key))
            throw validation_error(std::string("scheme file lacks \"") + key + "\"");
    Field f = field_override ? *field_override : field_from_json(j["field"]);
    if (!j["vars"].is_number_integer())
        throw validation_error("\"vars\" must be an integer");
    int nv = j["vars"].get<int>();
    if (nv < 2) throw validation_error("\"vars\" must be at least 2");
    Ring r{nv, f};

    if (!j["mode"].is_string())
        throw validation_error("\"mode\" must be \"components\" or \"raw\"");
    std::string mode = j["mode"].get<std::string>();

    if (mode == "components") {
        if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
            throw validation_error("components mode needs a nonempty \"components\" array");
        std::vector<SchemeComponent> comps;
        for (const Json& cj : j["components"]) {
            if (!cj.is_object() || !cj.contains("point") || !cj["point"].is_array())
                throw validation_error("each component needs a \"point\" array");
            if (static_cast<int>(cj["point"].size()) != nv)
                throw validation_error("point length does not match \"vars\"");
            SchemeComponent c;
            for (const Json& v : cj["point"]) c.point.push_back(scalar_from_json(f, v));
            if (cj.contains("local_gens"))
                c.local_gens = parse_polys(r, cj["local_gens"], "local_gens");
            comps.push_back(std::move(c));
        }
        return Scheme::from_components(r, std::move(comps));
    }
    if (mode == "raw") {
        if (!j.contains("gens") || !j["gens"].is_array() || j["gens"].empty())
            throw validation_error("raw mode needs a nonempty \"gens\" array");
        return Scheme::from_ideal(r, parse_polys(r, j["gens"], "gens"));
    }
    throw validation_error("\"mode\" must be \"components\" or \"raw\"");
}

Scheme load_scheme(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open scheme file: " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(path + ": " + e.what());
    }
    return parse_scheme(j, field_override);
}

Json scheme_to_json(const Scheme& X) {
    Json j;
    j["field"] = field_to_json(X.ring().field);
    j["vars"] = X.ring().nvars;
    if (X.components_mode()) {
        j["mode"] = "components";
        Json comps = Json::array();
        for (int k = 0; k < X.component_count(); ++k) {
            const LocalAlgebra& a = X.local(k);
            Json cj;
            cj["point"] = scalars_to_json(a.point());
            if (a.dimension() > 1) cj["local_gens"] = polys_to_json(a.ideal().generators());
            comps.push_back(std::move(cj));
        }
        j["components"] = std::move(comps);
    } else {
        j["mode"] = "raw";
        j["gens"] = polys_to_json(X.ideal().generators());
    }
    return j;
}

std::string hf_text(const std::vector<int>& hf) {
    std::ostringstream os;
    for (std::size_t i = 0; i < hf.size(); ++i) {
        if (i) os << ' ';
        os << i << ':' << hf[i];
    }
    return os.str();
}

Json to_json(const SchemeReport& rep) {
    Json j;
    j["empty"] = rep.empty;
    j["components_mode"] = rep.components_mode;
    j["component_count"] = rep.component_count;
    j["local_dims"] = rep.local_dims;
    j["degree"] = rep.degree;
    j["regularity"] = rep.regularity;
    j["alpha"] = rep.alpha;
    j["hf"] = rep.hf;
    j["hf_text"] = hf_text(rep.hf);
    j["min_gen_degrees"] = rep.min_gen_degrees;
    j["arithmetically_gorenstein"] = rep.arithmetically_gorenstein;
    j["artinian_socle_dim"] = rep.artinian_socle_dim;
    j["complete_intersection"] = rep.complete_intersection;
    j["ci_degrees"] = rep.ci_degrees;
    j["reduced"] = optional_bool(rep.reduced);
    j["locally_gorenstein"] = optional_bool(rep.locally_gorenstein);
    j["saturation_applied"] = rep.saturation_applied;
    return j;
}

Json to_json(const SeparatorSet& s) {
    Json j;
    j["component"] = s.j;
    j["socle_dir"] = scalars_to_json(s.socle_dir);
    j["mu"] = s.mu;
    j["minimal"] = s.minimal.str();
    j["standard"] = s.standard.str();
    return j;
}

Json to_json(const GeometricCheck& g) {
    Json j;
    j["verdict"] = verdict_json(g.verdict);
    j["evidence"] = g.evidence;
    return j;
}

Json to_json(const LinkageReport& rep) {
    Json j;
    j["deg_W"] = rep.deg_W;
    j["deg_X"] = rep.deg_X;
    j["deg_Y"] = rep.deg_Y;
    j["degree_additive"] = rep.degree_additive;
    j["r_W"] = rep.r_W;
    j["r_X"] = rep.r_X;
    j["r_Y"] = rep.r_Y;
    j["alpha_X"] = rep.alpha_X;
    j["alpha_Y"] = rep.alpha_Y;
    j["regularity_decompositions"] = rep.regularity_decompositions;
    j["hf_reflection"] = rep.hf_reflection;
    j["hf_reflection_failures"] = rep.hf_reflection_failures;
    j["degenerate"] = rep.degenerate;
    j["geometric"] = verdict_json(rep.geometric);
    j["geometric_evidence"] = rep.geometric_evidence;
    j["all_pass"] = rep.all_pass;
    return j;
}

Json to_json(const CorrespondenceCheck& c) {
    Json j;
    j["deg_X_sub"] = c.X_sub.degree();
    j["deg_Y_aug"] = c.Y_aug.degree();
    j["degree_step"] = c.degree_step;
    j["contains_Y"] = c.contains_Y;
    j["away_parts_equal"] = c.away_parts_equal;
    j["multiplicity_step"] = c.multiplicity_step;
    j["all_pass"] = c.all_pass;
    return j;
}

Json to_json(const CbpVerdict& v) {
    Json j;
    j["d"] = v.d;
    j["method"] = cbp_method_str(v.method);
    j["verdict"] = verdict_json(v.verdict);
    j["evidence"] = v.evidence;
    j["witness"] = v.witness ? Json(v.witness->str()) : Json(nullptr);
    return j;
}

Json to_json(const CbpAgreement& a) {
    Json j;
    j["d"] = a.d;
    j["combined"] = verdict_json(a.combined);
    Json rows = Json::array();
    for (const CbpVerdict& v : a.verdicts) rows.push_back(to_json(v));
    j["verdicts"] = std::move(rows);
    return j;
}

Json to_json(const CbpProfile& p) {
    Json j;
    j["r_X"] = p.r_X;
    j["vacuous"] = p.vacuous;
    j["max_d"] = p.max_d;
    Json rows = Json::array();
    for (const CbpAgreement& a : p.rows) rows.push_back(to_json(a));
    j["rows"] = std::move(rows);
    return j;
}

Json to_json(const CbResult& r) {
    Json j;
    j["cayley_bacharach"] = r.cayley_bacharach;
    j["vacuous"] = r.vacuous;
    Json rows = Json::array();
    for (const CbpVerdict& v : r.verdicts) rows.push_back(to_json(v));
    j["verdicts"] = std::move(rows);
    return j;
}

Json to_json(const DedekindReport& rep) {
    Json j;
    j["r_X"] = rep.r_X;
    j["degree"] = rep.degree;
    j["hf_delta"] = rep.hf_delta;
    j["hf_delta_text"] = hf_text(rep.hf_delta);
    j["alpha_delta"] = rep.alpha_delta;
    j["ri_delta"] = rep.ri_delta;
    j["hf_c"] = rep.hf_c;
    j["hf_c_formula"] = rep.hf_c_formula;
    j["top_is_full"] = rep.top_is_full;
    j["monotone"] = rep.monotone;
    j["ri_bounds"] = rep.ri_bounds;
    j["seed"] = rep.seed;
    j["per_component_trace"] = rep.per_component_trace;
    return j;
}

Json to_json(const DedekindChecks& ck) {
    Json j;
    j["d"] = ck.d;
    j["applicable"] = ck.applicable;
    j["alpha_lower"] = ck.alpha_lower;
    j["degreewise_bound"] = ck.degreewise_bound;
    j["i0"] = ck.i0;
    j["persistent_equality"] = ck.persistent_equality;
    j["ri_formula"] = ck.ri_formula;
    j["ag"] = ck.ag;
    j["ag_equality"] = ck.ag_equality;
    j["ag_iff_checked"] = ck.ag_iff_checked;
    j["ag_iff_equality"] = ck.ag_iff_equality;
    j["small_field_warning"] = ck.small_field_warning;
    j["all_pass"] = ck.all_pass;
    return j;
}

Json to_json(const EnvelopeResult& e) {
    Json j;
    j["degrees"] = e.degrees;
    j["attempts"] = e.attempts;
    j["seed"] = e.seed;
    j["ci_gens"] = polys_to_json(e.triple.W.ideal().generators());
    j["report"] = to_json(linkage_report(e.triple));
    return j;
}

} // namespace zerodim
