#include "qks/json_io.hpp"

#include <set>

#include <json.hpp>

#include "qks/errors.hpp"

namespace qks {

namespace {

using nlohmann::json;

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("", std::string("invalid JSON in ") + what);
    return j;
}

void require(bool cond, const std::string& ptr, const std::string& msg) {
    if (!cond) throw SchemaError(ptr, msg);
}

}  // namespace

CurrentSequence parse_spec(const std::string& text) {
    json j = parse_json(text, "spec");
    require(j.is_object(), "", "spec must be a JSON object");
    require(j.contains("vertices"), "/vertices", "missing field");
    require(j["vertices"].is_array() && !j["vertices"].empty(), "/vertices",
            "must be a non-empty array");

    CurrentSequence cs;
    std::set<std::string> vset;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& v = j["vertices"][i];
        std::string ptr = "/vertices/" + std::to_string(i);
        require(v.is_string() && !v.get<std::string>().empty(), ptr,
                "vertex id must be a non-empty string");
        require(vset.insert(v.get<std::string>()).second, ptr, "duplicate vertex id");
        cs.quiver.vertices.push_back(v.get<std::string>());
    }

    std::set<std::string> aset;
    if (j.contains("arrows")) {
        require(j["arrows"].is_array(), "/arrows", "must be an array");
        for (std::size_t i = 0; i < j["arrows"].size(); ++i) {
            const auto& a = j["arrows"][i];
            std::string ptr = "/arrows/" + std::to_string(i);
            require(a.is_object(), ptr, "arrow must be an object");
            require(a.contains("id") && a["id"].is_string(), ptr + "/id",
                    "arrow id must be a string");
            std::string id = a["id"].get<std::string>();
            require(!id.empty(), ptr + "/id", "arrow id must be non-empty");
            require(id != "q" && id != "t" && id.rfind("x(", 0) != 0 &&
                        id.rfind("u(", 0) != 0,
                    ptr + "/id", "arrow id collides with a reserved variable name");
            require(aset.insert(id).second, ptr + "/id", "duplicate arrow id");
            require(a.contains("tail") && a["tail"].is_string(), ptr + "/tail",
                    "tail must be a vertex id");
            require(a.contains("head") && a["head"].is_string(), ptr + "/head",
                    "head must be a vertex id");
            int tail = cs.quiver.vertex_index(a["tail"].get<std::string>());
            int head = cs.quiver.vertex_index(a["head"].get<std::string>());
            require(tail >= 0, ptr + "/tail", "unknown vertex");
            require(head >= 0, ptr + "/head", "unknown vertex");
            cs.quiver.arrows.push_back({id, tail, head});
        }
    }

    if (j.contains("steps")) {
        require(j["steps"].is_array(), "/steps", "must be an array");
        for (std::size_t i = 0; i < j["steps"].size(); ++i) {
            const auto& s = j["steps"][i];
            std::string ptr = "/steps/" + std::to_string(i);
            require(s.is_object(), ptr, "step must be an object");
            require(s.contains("vertex") && s["vertex"].is_string(), ptr + "/vertex",
                    "vertex must be a vertex id");
            int v = cs.quiver.vertex_index(s["vertex"].get<std::string>());
            require(v >= 0, ptr + "/vertex", "unknown vertex");
            require(s.contains("a") && s["a"].is_number_integer() &&
                        s["a"].get<int>() >= 1,
                    ptr + "/a", "a must be a positive integer");
            int a = s["a"].get<int>();
            require(s.contains("mu") && s["mu"].is_array(), ptr + "/mu",
                    "mu must be an array of integers");
            require(static_cast<int>(s["mu"].size()) == a, ptr + "/mu",
                    "mu length must equal a");
            std::vector<int> mu;
            for (std::size_t r = 0; r < s["mu"].size(); ++r) {
                require(s["mu"][r].is_number_integer(),
                        ptr + "/mu/" + std::to_string(r), "mu entries must be integers");
                mu.push_back(s["mu"][r].get<int>());
            }
            require(weakly_decreasing(mu), ptr + "/mu", "mu must be weakly decreasing");
            cs.steps.push_back({v, a, DominantWeight(std::move(mu))});
        }
    }
    return cs;
}

PartitionTuple parse_lambda(const std::string& text, int nvertices) {
    json j = parse_json(text, "lambda");
    require(j.is_array(), "", "lambda must be an array of arrays");
    require(static_cast<int>(j.size()) == nvertices, "",
            "lambda must list one partition per vertex (" +
                std::to_string(nvertices) + ")");
    PartitionTuple out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string ptr = "/" + std::to_string(i);
        require(j[i].is_array(), ptr, "each component must be an array of integers");
        std::vector<int> parts;
        for (std::size_t r = 0; r < j[i].size(); ++r) {
            require(j[i][r].is_number_integer(), ptr + "/" + std::to_string(r),
                    "parts must be integers");
            parts.push_back(j[i][r].get<int>());
        }
        require(weakly_decreasing(parts), ptr, "parts must be weakly decreasing");
        require(parts.empty() || parts.back() >= 0, ptr, "parts must be non-negative");
        out.push_back(Partition(std::move(parts)));
    }
    return out;
}

std::string spec_to_json(const CurrentSequence& cs) {
    nlohmann::ordered_json j;
    j["vertices"] = cs.quiver.vertices;
    j["arrows"] = nlohmann::ordered_json::array();
    for (const auto& a : cs.quiver.arrows)
        j["arrows"].push_back({{"id", a.id},
                               {"tail", cs.quiver.vertices[a.tail]},
                               {"head", cs.quiver.vertices[a.head]}});
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : cs.steps) {
        nlohmann::ordered_json st;
        st["vertex"] = cs.quiver.vertices[s.vertex];
        st["a"] = s.width;
        st["mu"] = s.mu.parts;
        j["steps"].push_back(st);
    }
    return j.dump();
}

}  // namespace qks
