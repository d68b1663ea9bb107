#include "ccs/space_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ccs {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : allowed) known = known || it.key() == k;
        if (!known) throw input_error("unknown field in space description: '" + it.key() + "'");
    }
}

int require_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw input_error(std::string("space description needs integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

ConvexitySpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw input_error("space description must be an object with a 'kind' string");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "free") {
        reject_unknown_keys(j, {"kind", "n"});
        return ConvexitySpace::free_space(require_int(j, "n"));
    }
    if (kind == "chain") {
        reject_unknown_keys(j, {"kind", "n"});
        return ConvexitySpace::chain_space(require_int(j, "n"));
    }
    if (kind == "grid") {
        reject_unknown_keys(j, {"kind", "q", "d"});
        return ConvexitySpace::grid_space(require_int(j, "q"), require_int(j, "d"));
    }
    if (kind == "product") {
        reject_unknown_keys(j, {"kind", "factors"});
        if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].size() != 2)
            throw input_error("product space needs a 'factors' array of two spaces");
        return ConvexitySpace::product_space(space_from_json(j["factors"][0]),
                                             space_from_json(j["factors"][1]));
    }
    if (kind == "explicit") {
        reject_unknown_keys(j, {"kind", "n", "sets"});
        int n = require_int(j, "n");
        if (n < 1 || n > kMaxGroundSize) throw input_error("explicit space: n out of range");
        ConvexityFamily fam;
        fam.n = n;
        fam.sets.push_back(0);
        fam.sets.push_back(full_mask(n));
        if (j.contains("sets")) {
            if (!j["sets"].is_array()) throw input_error("'sets' must be an array of index arrays");
            for (const auto& set : j["sets"]) {
                if (!set.is_array()) throw input_error("'sets' must be an array of index arrays");
                Mask m = 0;
                for (const auto& idx : set) {
                    if (!idx.is_number_integer()) throw input_error("set member must be an integer");
                    int i = idx.get<int>();
                    if (i < 0 || i >= n) throw input_error("set index out of range");
                    m |= Mask{1} << i;
                }
                fam.sets.push_back(m);
            }
        }
        return ConvexitySpace::from_family(std::move(fam));
    }
    throw input_error("unknown space kind '" + kind + "'");
}

ConvexitySpace space_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open space file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("malformed space file " + path + ": " + e.what());
    }
    return space_from_json(j);
}

std::vector<int> parse_points(const ConvexitySpace& space, const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    if (text.find('[') != std::string::npos) {
        if (space.kind() != "grid")
            throw input_error("coordinate tuples are only valid for grid spaces");
        const int q = space.grid_q(), d = space.grid_d();
        std::size_t pos = 0;
        while ((pos = text.find('[', pos)) != std::string::npos) {
            std::size_t end = text.find(']', pos);
            if (end == std::string::npos) throw input_error("unterminated coordinate tuple");
            std::istringstream tuple(text.substr(pos + 1, end - pos - 1));
            std::vector<int> coords;
            std::string item;
            while (std::getline(tuple, item, ',')) coords.push_back(std::stoi(item));
            out.push_back(ConvexitySpace::grid_index(q, d, coords));
            pos = end + 1;
        }
        return out;
    }
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        int idx;
        try {
            idx = std::stoi(item);
        } catch (const std::exception&) {
            throw input_error("bad point index '" + item + "'");
        }
        if (idx < 0 || idx >= space.size()) throw input_error("point index out of range: " + item);
        out.push_back(idx);
    }
    return out;
}

}  // namespace ccs
