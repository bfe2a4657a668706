#include "obsroute/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace obsroute {

using nlohmann::json;

namespace {

json point_to_json(const Point& p) {
    return json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

Point point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("point must be a [x, y] pair");
    return Point(rat_from_string(j[0].get<std::string>()),
                 rat_from_string(j[1].get<std::string>()));
}

}  // namespace

std::string instance_to_json(const InstanceFile& f) {
    json j;
    j["version"] = f.version;
    j["box"] = json::array({rat_to_string(f.instance.box().x0), rat_to_string(f.instance.box().y0),
                            rat_to_string(f.instance.box().x1),
                            rat_to_string(f.instance.box().y1)});
    json obstacles = json::array();
    for (const auto& c : f.instance.obstacles()) {
        json ring = json::array();
        for (const Point& v : c.vertices()) ring.push_back(point_to_json(v));
        obstacles.push_back(std::move(ring));
    }
    j["obstacles"] = std::move(obstacles);
    j["metadata"] = {{"generator", f.generator}, {"params", f.params}, {"seed", f.seed}};
    return j.dump(2) + "\n";
}

InstanceFile instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance file: ") + e.what());
    }
    try {
        if (!j.contains("version")) throw ParseError("instance file missing version");
        int version = j["version"].get<int>();
        if (version != 1) throw ParseError("unsupported instance file version");
        const auto& b = j["box"];
        Box box(rat_from_string(b[0].get<std::string>()), rat_from_string(b[1].get<std::string>()),
                rat_from_string(b[2].get<std::string>()), rat_from_string(b[3].get<std::string>()));
        std::vector<ConvexPolygon> obstacles;
        for (const auto& ring : j["obstacles"]) {
            std::vector<Point> vs;
            for (const auto& pv : ring) vs.push_back(point_from_json(pv));
            obstacles.push_back(ConvexPolygon::from_vertices(std::move(vs)));
        }
        InstanceFile f{version, Instance(box, std::move(obstacles)), "", {}, 42};
        if (j.contains("metadata")) {
            const auto& m = j["metadata"];
            if (m.contains("generator")) f.generator = m["generator"].get<std::string>();
            if (m.contains("seed")) f.seed = m["seed"].get<std::uint64_t>();
            if (m.contains("params"))
                for (auto it = m["params"].begin(); it != m["params"].end(); ++it)
                    f.params[it.key()] = it.value().get<std::string>();
        }
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad instance file: ") + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open for writing: " + path);
    out << text;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string tour_to_json(const Tour& t, const std::string& kind) {
    json j;
    j["version"] = 1;
    j["kind"] = kind;
    j["length"] = t.length;
    json vs = json::array();
    for (const Point& v : t.vertices) vs.push_back(point_to_json(v));
    j["vertices"] = std::move(vs);
    json w = json::object();
    for (const auto& [i, p] : t.witness) w[std::to_string(i)] = point_to_json(p);
    j["witnesses"] = std::move(w);
    return j.dump(2) + "\n";
}

Tour tour_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tour file: ") + e.what());
    }
    try {
        Tour t;
        for (const auto& pv : j["vertices"]) t.vertices.push_back(point_from_json(pv));
        if (j.contains("witnesses"))
            for (auto it = j["witnesses"].begin(); it != j["witnesses"].end(); ++it)
                t.witness.emplace(std::stoi(it.key()), point_from_json(it.value()));
        t.recompute_length();
        return t;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad tour file: ") + e.what());
    }
}

std::uint64_t instance_digest(const InstanceFile& f) {
    std::string canon = instance_to_json(f);
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canon) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string digest_hex(std::uint64_t d) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(d));
    return std::string(buf);
}

}  // namespace obsroute
