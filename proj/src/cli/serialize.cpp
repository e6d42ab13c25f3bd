#include "hgc/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace hgc {

std::string fmt(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15e", v);
    return buf;
}

Json to_json(cd v) { return Json::array({v.real(), v.imag()}); }

Json to_json(const PolyC& p) {
    Json a = Json::array();
    for (int k = 0; k <= p.degree(); ++k) a.push_back(to_json(p[k]));
    return a;
}

Json to_json(const EquationParams& p) {
    Json j;
    j["sigma"] = to_json(p.sigma);
    j["kappa"] = to_json(p.kappa);
    j["omega"] = to_json(p.omega);
    return j;
}

Json to_json(const EvalResult& r) {
    Json j;
    j["value"] = to_json(r.value);
    j["method"] = to_string(r.method);
    j["terms_used"] = r.terms_used;
    j["truncation_estimate"] = r.truncation_estimate;
    return j;
}

Json to_json(const NormalFormReport& r) {
    Json j;
    j["type_tag"] = to_string(r.type_tag);
    j["hypergeometric_class"] = r.hypergeometric_class;
    j["affine_a"] = to_json(r.affine_a);
    j["affine_b"] = to_json(r.affine_b);
    j["scalar_divisor"] = to_json(r.scalar_divisor);
    Json np = Json::object();
    for (const auto& [k, v] : r.normal_params) np[k] = to_json(v);
    j["normal_params"] = np;
    j["gauge_root"] = to_json(r.gauge_root);
    j["gauge_power"] = to_json(r.gauge_power);
    j["gauge_exp"] = to_json(r.gauge_exp);
    j["residual"] = r.residual;
    return j;
}

Json to_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass();
    j["residual"] = c.residual;
    j["tolerance"] = c.tol;
    j["bound"] = c.above ? "above" : "below";
    j["samples"] = c.samples;
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

Json to_json(const SuiteResult& s) {
    Json j;
    j["suite"] = s.suite;
    j["pass"] = s.pass();
    Json cs = Json::array();
    for (const auto& c : s.checks) cs.push_back(to_json(c));
    j["checks"] = cs;
    return j;
}

namespace {

void write(const Json& j, int indent, int level, std::string& out) {
    auto nl = [&](int l) {
        if (indent < 0) return;
        out += '\n';
        out.append(std::size_t(indent * l), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                nl(level + 1);
                out += Json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                write(it.value(), indent, level + 1, out);
            }
            nl(level);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            // short numeric arrays ([re, im] pairs) stay on one line
            bool flat = j.size() <= 2 && std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_number(); });
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) out += flat ? ", " : ",";
                if (!flat) nl(level + 1);
                write(j[i], indent, level + 1, out);
            }
            if (!flat) nl(level);
            out += ']';
            return;
        }
        case Json::value_t::number_float: {
            double v = j.get<double>();
            out += std::isfinite(v) ? fmt(v) : "\"" + fmt(v) + "\"";
            return;
        }
        default: out += j.dump();
    }
}

} // namespace

std::string dump(const Json& j, int indent) {
    std::string out;
    write(j, indent, 0, out);
    return out;
}

} // namespace hgc
