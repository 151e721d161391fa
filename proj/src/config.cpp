#include "utm/config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

namespace utm {

using json = nlohmann::json;

namespace {

void only_keys(const json& j, const std::string& where, std::set<std::string> allowed) {
    if (!j.is_object()) throw Error("ConfigError", where + " must be an object");
    for (auto& [k, v] : j.items())
        if (!allowed.count(k)) throw Error("ConfigError", "unknown key '" + where + "." + k + "'");
}

double num(const json& j, const std::string& key) {
    if (!j.is_number()) throw Error("ConfigError", "'" + key + "' must be a number");
    return j.get<double>();
}

std::vector<double> nums(const json& j, const std::string& key) {
    if (!j.is_array()) throw Error("ConfigError", "'" + key + "' must be an array of numbers");
    std::vector<double> v;
    for (auto& e : j) v.push_back(num(e, key));
    return v;
}

// array of numbers or {start, stop, count}
std::vector<double> axis(const json& j, const std::string& key) {
    if (j.is_array()) return nums(j, key);
    only_keys(j, key, {"start", "stop", "count"});
    double a = num(j.at("start"), key + ".start"), b = num(j.at("stop"), key + ".stop");
    int n = j.at("count").get<int>();
    if (n < 1) throw Error("ConfigError", "'" + key + ".count' must be positive");
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

Forcing forcing_term(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("type")) throw Error("ConfigError", "'" + where + ".type' missing");
    std::string t = j.at("type").get<std::string>();
    if (t == "const") {
        only_keys(j, where, {"type", "value"});
        return Forcing::constant(num(j.at("value"), where + ".value"));
    }
    if (t == "poly") {
        only_keys(j, where, {"type", "coeffs"});
        return Forcing::polynomial(nums(j.at("coeffs"), where + ".coeffs"));
    }
    if (t == "exp") {
        only_keys(j, where, {"type", "c", "a"});
        double a = num(j.at("a"), where + ".a");
        if (a == 0.0) throw Error("ConfigError", "'" + where + ".a' must be nonzero");
        return Forcing::exponential(num(j.at("c"), where + ".c"), a);
    }
    throw Error("ConfigError", "'" + where + ".type' must be const, poly or exp");
}

std::array<double, 4> orders(const json& j, const std::string& key) {
    auto v = nums(j, key);
    if (v.size() > 4) throw Error("ConfigError", "'" + key + "' has more than 4 entries");
    std::array<double, 4> a{};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
}

std::vector<Piece> pieces(const json& j, const std::string& key) {
    if (!j.is_array()) throw Error("ConfigError", "'" + key + "' must be an array of pieces");
    std::vector<Piece> out;
    for (size_t i = 0; i < j.size(); ++i) {
        std::string w = key + "[" + std::to_string(i) + "]";
        only_keys(j[i], w, {"a", "b", "coeffs", "origin"});
        Piece p;
        p.a = num(j[i].at("a"), w + ".a");
        p.b = num(j[i].at("b"), w + ".b");
        p.coeffs = nums(j[i].at("coeffs"), w + ".coeffs");
        if (j[i].contains("origin")) p.origin = num(j[i]["origin"], w + ".origin");
        out.push_back(p);
    }
    return out;
}

json dump_forcing(const Forcing& f) {
    json a = json::array();
    if (!f.poly.empty()) a.push_back({{"type", "poly"}, {"coeffs", f.poly}});
    for (auto [c, r] : f.exps) a.push_back({{"type", "exp"}, {"c", c}, {"a", r}});
    return a;
}

json dump_pieces(const std::vector<Piece>& ps) {
    json a = json::array();
    for (auto& p : ps) a.push_back({{"a", p.a}, {"b", p.b}, {"coeffs", p.coeffs}, {"origin", p.origin}});
    return a;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error("ConfigError", std::string("not valid JSON: ") + e.what());
    }
    only_keys(j, "config", {"schema_version", "medium", "conditions", "profiles", "T", "grid", "tol",
                            "delta", "oracle", "compare_tol", "fd", "output"});
    RunConfig c;
    try {
        if (!j.contains("schema_version")) throw Error("ConfigError", "'schema_version' missing");
        c.schema_version = j["schema_version"].get<int>();
        if (c.schema_version != 1) throw Error("ConfigError", "'schema_version' must be 1");

        const json& m = j.at("medium");
        only_keys(m, "medium", {"sigma1", "sigma2"});
        c.sigma1 = num(m.at("sigma1"), "medium.sigma1");
        c.sigma2 = num(m.at("sigma2"), "medium.sigma2");

        const json& cs = j.at("conditions");
        if (!cs.is_array()) throw Error("ConfigError", "'conditions' must be an array");
        for (size_t i = 0; i < cs.size(); ++i) {
            std::string w = "conditions[" + std::to_string(i) + "]";
            only_keys(cs[i], w, {"left", "right", "forcing"});
            RawCondition r;
            if (cs[i].contains("left")) r.left = orders(cs[i]["left"], w + ".left");
            if (cs[i].contains("right")) r.right = orders(cs[i]["right"], w + ".right");
            if (cs[i].contains("forcing")) {
                const json& f = cs[i]["forcing"];
                if (f.is_array())
                    for (size_t q = 0; q < f.size(); ++q)
                        r.forcing = r.forcing + forcing_term(f[q], w + ".forcing[" + std::to_string(q) + "]");
                else
                    r.forcing = forcing_term(f, w + ".forcing");
                r.forcing.normalize();
            }
            c.conditions.push_back(r);
        }

        if (j.contains("profiles")) {
            only_keys(j["profiles"], "profiles", {"left", "right"});
            if (j["profiles"].contains("left")) c.left = pieces(j["profiles"]["left"], "profiles.left");
            if (j["profiles"].contains("right")) c.right = pieces(j["profiles"]["right"], "profiles.right");
        }
        if (j.contains("T")) c.T = num(j["T"], "T");
        if (j.contains("grid")) {
            only_keys(j["grid"], "grid", {"xs", "ts"});
            if (j["grid"].contains("xs")) c.xs = axis(j["grid"]["xs"], "grid.xs");
            if (j["grid"].contains("ts")) c.ts = axis(j["grid"]["ts"], "grid.ts");
        }
        if (j.contains("tol")) c.tol = num(j["tol"], "tol");
        if (j.contains("delta")) c.delta = num(j["delta"], "delta");
        if (j.contains("oracle")) c.oracle = j["oracle"].get<std::string>();
        if (c.oracle != "none" && c.oracle != "whole-line" && c.oracle != "fd")
            throw Error("ConfigError", "'oracle' must be none, whole-line or fd");
        if (j.contains("compare_tol")) c.compare_tol = num(j["compare_tol"], "compare_tol");
        if (j.contains("fd")) {
            only_keys(j["fd"], "fd", {"h", "L_dom"});
            if (j["fd"].contains("h")) c.fd_h = num(j["fd"]["h"], "fd.h");
            if (j["fd"].contains("L_dom")) c.fd_L = num(j["fd"]["L_dom"], "fd.L_dom");
        }
        if (j.contains("output")) c.output = j["output"].get<std::string>();
    } catch (const json::exception& e) {
        throw Error("ConfigError", e.what());
    }
    if (!(c.T > 0)) throw Error("ConfigError", "'T' must be positive");
    if (!(c.tol > 0)) throw Error("ConfigError", "'tol' must be positive");
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("ConfigError", "cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string dump_config(const RunConfig& c) {
    json j;
    j["schema_version"] = c.schema_version;
    j["medium"] = {{"sigma1", c.sigma1}, {"sigma2", c.sigma2}};
    j["conditions"] = json::array();
    for (auto& r : c.conditions)
        j["conditions"].push_back({{"left", r.left}, {"right", r.right}, {"forcing", dump_forcing(r.forcing)}});
    j["profiles"] = {{"left", dump_pieces(c.left)}, {"right", dump_pieces(c.right)}};
    j["T"] = c.T;
    j["grid"] = {{"xs", c.xs}, {"ts", c.ts}};
    j["tol"] = c.tol;
    j["delta"] = c.delta;
    j["oracle"] = c.oracle;
    j["compare_tol"] = c.compare_tol;
    j["fd"] = {{"h", c.fd_h}, {"L_dom", c.fd_L}};
    j["output"] = c.output;
    return j.dump(2);
}

ProblemSpec RunConfig::to_spec() const {
    ProblemSpec sp;
    sp.medium = Medium(sigma1, sigma2);
    sp.conditions = conditions;
    sp.left = HalfLineProfile(1, left);
    sp.right = HalfLineProfile(2, right);
    sp.T = T;
    sp.tol = tol;
    sp.delta = delta;
    return sp;
}

}  // namespace utm
