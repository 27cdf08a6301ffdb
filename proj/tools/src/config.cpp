#include "cdvwall/cli.hpp"

#include <json.hpp>

#include <sstream>

namespace cdvwall::cli {

using nlohmann::json;

namespace {

template <class T>
T field(const json& j, const char* name) {
    try {
        return j.get<T>();
    } catch (const json::exception&) {
        throw UsageError(std::string("config field '") + name + "' has the wrong type");
    }
}

void expect_object(const json& j, const char* name) {
    if (!j.is_object()) throw UsageError(std::string("config field '") + name + "' must be an object");
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names{"roots",           "restricted-roots", "check-gcd", "chambers",
                                                "gallery",         "mutate",           "vanishing-table",
                                                "orbits",          "gv-map",           "dihedral-check",
                                                "selftest",        "export"};
    return names;
}

NodeSet parse_node_list(const std::string& s) {
    NodeSet out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("node list: '" + item + "' is not an integer");
        }
    }
    return normalize(out);
}

SymmetryWindow parse_window(const std::string& s) {
    SymmetryWindow w;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("window: expected key=value, got '" + item + "'");
        std::string key = item.substr(0, eq), value = item.substr(eq + 1);
        long long v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            throw UsageError("window: '" + value + "' is not an integer");
        }
        if (v < 0) throw UsageError("window: bounds must be non-negative");
        if (key == "chi") w.chi_max = v;
        else if (key == "beta") w.beta_max = v;
        else throw UsageError("window: unknown key '" + key + "' (expected chi, beta)");
    }
    return w;
}

std::string to_json(const JobConfig& c, const std::string& command) {
    json j;
    j["tool"] = "cdvwall";
    j["version"] = kVersion;
    if (!command.empty()) j["command"] = command;
    json type;
    type["family"] = c.family ? json(std::string(1, family_char(*c.family))) : json(nullptr);
    type["rank"] = c.rank ? json(*c.rank) : json(nullptr);
    type["affine"] = c.affine;
    type["contracted"] = c.contracted ? json(*c.contracted) : json(nullptr);
    j["type"] = type;
    j["kmax"] = c.kmax;
    j["maxlen"] = c.maxlen;
    j["symmetry"] = {{"rigidified", c.rigidified},
                     {"weighted_homogeneous", c.weighted_homogeneous},
                     {"non_flop", c.non_flop}};
    j["window"] = {{"chi", c.window.chi_max}, {"beta", c.window.beta_max}};
    j["format"] = c.format;
    j["out"] = c.out;
    j["n"] = c.n ? json(*c.n) : json(nullptr);
    return j.dump(2);
}

JobConfig merge_json(const JobConfig& base, const std::string& document) {
    json j;
    try {
        j = json::parse(document);
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("config: not valid JSON: ") + e.what());
    }
    expect_object(j, "<root>");
    JobConfig c = base;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const json& v = it.value();
        if (key == "tool" || key == "version" || key == "command") continue;
        if (key == "type") {
            expect_object(v, "type");
            for (auto t = v.begin(); t != v.end(); ++t) {
                const std::string& k = t.key();
                const json& x = t.value();
                if (k == "family") {
                    if (x.is_null()) c.family.reset();
                    else {
                        try {
                            c.family = parse_family(field<std::string>(x, "type.family"));
                        } catch (const std::invalid_argument& e) {
                            throw UsageError(std::string("config field 'type.family': ") + e.what());
                        }
                    }
                } else if (k == "rank") {
                    if (x.is_null()) c.rank.reset();
                    else c.rank = field<int>(x, "type.rank");
                } else if (k == "affine") {
                    c.affine = field<bool>(x, "type.affine");
                } else if (k == "contracted") {
                    if (x.is_null()) c.contracted.reset();
                    else c.contracted = normalize(field<std::vector<int>>(x, "type.contracted"));
                } else {
                    throw UsageError("config: unknown field 'type." + k + "'");
                }
            }
        } else if (key == "kmax") {
            c.kmax = field<long long>(v, "kmax");
        } else if (key == "maxlen") {
            c.maxlen = field<long long>(v, "maxlen");
        } else if (key == "symmetry") {
            expect_object(v, "symmetry");
            for (auto t = v.begin(); t != v.end(); ++t) {
                if (t.key() == "rigidified") c.rigidified = field<bool>(t.value(), "symmetry.rigidified");
                else if (t.key() == "weighted_homogeneous")
                    c.weighted_homogeneous = field<bool>(t.value(), "symmetry.weighted_homogeneous");
                else if (t.key() == "non_flop")
                    c.non_flop = normalize(field<std::vector<int>>(t.value(), "symmetry.non_flop"));
                else throw UsageError("config: unknown field 'symmetry." + t.key() + "'");
            }
        } else if (key == "window") {
            expect_object(v, "window");
            for (auto t = v.begin(); t != v.end(); ++t) {
                if (t.key() == "chi") c.window.chi_max = field<long long>(t.value(), "window.chi");
                else if (t.key() == "beta") c.window.beta_max = field<long long>(t.value(), "window.beta");
                else throw UsageError("config: unknown field 'window." + t.key() + "'");
            }
        } else if (key == "format") {
            c.format = field<std::string>(v, "format");
        } else if (key == "out") {
            c.out = field<std::string>(v, "out");
        } else if (key == "n") {
            if (v.is_null()) c.n.reset();
            else c.n = field<int>(v, "n");
        } else {
            throw UsageError("config: unknown field '" + key + "'");
        }
    }
    return c;
}

DiagramPtr config_diagram(const JobConfig& c) {
    if (!c.family) throw UsageError("missing --family");
    if (!c.rank) throw UsageError("missing --rank");
    try {
        return build_diagram(*c.family, *c.rank, c.affine);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

DynkinType config_type(const JobConfig& c) {
    DiagramPtr d = config_diagram(c);
    try {
        return DynkinType(d, c.contracted.value_or(NodeSet{}));
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--contracted: ") + e.what());
    }
}

}  // namespace cdvwall::cli
