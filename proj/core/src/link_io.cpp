#include "mubar/link_io.hpp"

#include "mubar/errors.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace mubar {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("link file is not valid JSON");
    return j;
}

Link link_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
        throw ParseError("link file needs a string \"type\" field");
    const std::string type = j["type"].get<std::string>();
    if (type == "braid") {
        if (!j.contains("strands") || !j["strands"].is_number_integer())
            throw ParseError("braid link needs an integer \"strands\" field");
        if (!j.contains("word") || !j["word"].is_string())
            throw ParseError("braid link needs a string \"word\" field");
        return Link(BraidWord::parse(j["word"].get<std::string>(), j["strands"].get<int>()));
    }
    if (type == "pd") {
        if (!j.contains("crossings") || !j["crossings"].is_array())
            throw ParseError("pd link needs a \"crossings\" array");
        if (!j.contains("components") || !j["components"].is_array())
            throw ParseError("pd link needs a \"components\" array");
        std::vector<Crossing> crossings;
        for (const json& row : j["crossings"]) {
            if (!row.is_array() || row.size() != 5)
                throw ParseError("each pd crossing must be [a, b, c, d, sign]");
            for (const json& v : row)
                if (!v.is_number_integer()) throw ParseError("pd crossing entries must be integers");
            Crossing c;
            c.arcs = {row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), row[3].get<int>()};
            c.sign = row[4].get<int>();
            if (c.sign != 1 && c.sign != -1) throw ParseError("pd crossing sign must be +1 or -1");
            crossings.push_back(c);
        }
        std::vector<std::vector<int>> components;
        for (const json& comp : j["components"]) {
            if (!comp.is_array() || comp.empty())
                throw ParseError("each pd component must be a nonempty arc array");
            std::vector<int> cycle;
            for (const json& v : comp) {
                if (!v.is_number_integer()) throw ParseError("pd component entries must be integers");
                cycle.push_back(v.get<int>());
            }
            components.push_back(std::move(cycle));
        }
        return Link(PDCode(std::move(crossings), std::move(components)));
    }
    throw ParseError("unknown link type \"" + type + "\" (expected \"braid\" or \"pd\")");
}

json link_to_json(const Link& link) {
    json j;
    if (link.from_braid()) {
        const BraidWord& b = link.braid();
        j["type"] = "braid";
        j["strands"] = b.strands();
        j["word"] = b.str();
        return j;
    }
    const PDCode& pd = link.pd();
    j["type"] = "pd";
    json crossings = json::array();
    for (const Crossing& c : pd.crossings())
        crossings.push_back({c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], c.sign});
    j["crossings"] = std::move(crossings);
    json components = json::array();
    for (const auto& cycle : pd.components()) components.push_back(cycle);
    j["components"] = std::move(components);
    return j;
}

} // namespace

Link parse_link(const std::string& text) { return link_from_json(parse_json(text)); }

Link load_link(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open link file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_link(buf.str());
}

std::string serialize_link(const Link& link) { return link_to_json(link).dump(2) + "\n"; }

void save_link(const Link& link, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path + " for writing");
    out << serialize_link(link);
    if (!out) throw ParseError("failed writing " + path);
}

} // namespace mubar
