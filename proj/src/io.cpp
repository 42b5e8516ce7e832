#include "yao/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace yao {

using nlohmann::json;

json point_set_to_json(const PointSet& ps) {
    json points = json::array();
    for (const Point& p : ps.points) points.push_back({p.x, p.y});
    return json{{"k", ps.params.k}, {"rotation", ps.params.rotation}, {"points", points}};
}

PointSet point_set_from_json(const json& j) {
    std::vector<Point> pts;
    for (const auto& e : j.at("points")) pts.push_back({e.at(0).get<double>(), e.at(1).get<double>()});
    const double rotation = j.value("rotation", 0.0);
    return make_point_set(std::move(pts), make_params(j.at("k").get<int>(), rotation));
}

std::string point_set_to_csv(const PointSet& ps) {
    std::ostringstream out;
    out.precision(17);
    out << "# k=" << ps.params.k << " rotation=" << ps.params.rotation << "\n";
    for (const Point& p : ps.points) out << p.x << "," << p.y << "\n";
    return out.str();
}

PointSet point_set_from_csv(const std::string& text) {
    int k = 1;
    double rotation = 0.0;
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::istringstream header(line.substr(1));
            std::string token;
            while (header >> token) {
                if (token.rfind("k=", 0) == 0) k = std::stoi(token.substr(2));
                else if (token.rfind("rotation=", 0) == 0) rotation = std::stod(token.substr(9));
            }
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw GuardError("malformed CSV line: " + line);
        pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1))});
    }
    return make_point_set(std::move(pts), make_params(k, rotation));
}

json graph_to_json(const OrderedYaoGraph& g) {
    json edges = json::array();
    for (int u = 0; u < g.n; ++u)
        for (const YaoEdge& e : g.out_edges[u]) edges.push_back({u, e.target, e.sector});

    json j{{"n", g.n}, {"k", g.k}, {"edges", edges}};
    if (g.ordered()) {
        std::vector<int> order(g.n);
        for (int v = 0; v < g.n; ++v) order[g.order_position[v]] = v;
        j["order"] = order;
    } else {
        j["order"] = nullptr;
    }
    return j;
}

OrderedYaoGraph graph_from_json(const json& j) {
    OrderedYaoGraph g;
    g.n = j.at("n").get<int>();
    g.k = j.at("k").get<int>();
    g.out_edges.assign(g.n, {});
    g.order_position.assign(g.n, OrderedYaoGraph::kUnordered);
    if (j.contains("order") && !j.at("order").is_null()) {
        const auto order = j.at("order").get<std::vector<int>>();
        for (int pos = 0; pos < static_cast<int>(order.size()); ++pos)
            g.order_position.at(order[pos]) = pos;
    }
    for (const auto& e : j.at("edges")) {
        const int u = e.at(0).get<int>();
        g.out_edges.at(u).push_back({e.at(1).get<int>(), e.at(2).get<int>()});
    }
    return g;
}

std::string graph_to_dot(const OrderedYaoGraph& g, const PointSet* ps) {
    std::ostringstream out;
    out.precision(12);
    out << "digraph yao {\n";
    out << "  node [shape=circle];\n";
    for (int v = 0; v < g.n; ++v) {
        out << "  " << v;
        if (ps && v < ps->size()) {
            out << " [pos=\"" << ps->points[v].x << "," << ps->points[v].y << "!\"]";
        }
        out << ";\n";
    }
    for (int u = 0; u < g.n; ++u)
        for (const YaoEdge& e : g.out_edges[u])
            out << "  " << u << " -> " << e.target << " [label=\"" << e.sector << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string render_svg(const PointSet& ps, const OrderedYaoGraph* g) {
    double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
    if (ps.size() > 0) {
        min_x = max_x = ps.points[0].x;
        min_y = max_y = ps.points[0].y;
        for (const Point& p : ps.points) {
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double pad = 0.05 * span;
    const double scale = 640.0 / (span + 2 * pad);
    auto sx = [&](double x) { return (x - min_x + pad) * scale; };
    auto sy = [&](double y) { return (max_y - y + pad) * scale; }; // flip: SVG y grows down

    std::ostringstream out;
    out.precision(8);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\""
        << (max_y - min_y + 2 * pad) * scale << "\">\n";
    out << "  <defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" "
           "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\"/></marker></defs>\n";
    if (g) {
        for (int u = 0; u < g->n && u < ps.size(); ++u) {
            for (const YaoEdge& e : g->out_edges[u]) {
                const Point& a = ps.points[u];
                const Point& b = ps.points[e.target];
                out << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
                    << sx(b.x) << "\" y2=\"" << sy(b.y)
                    << "\" stroke=\"#444\" stroke-width=\"1\" marker-end=\"url(#arrow)\"/>\n";
            }
        }
    }
    for (int v = 0; v < ps.size(); ++v) {
        const Point& p = ps.points[v];
        out << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
            << "\" r=\"3\" fill=\"#c22\"/>\n";
        out << "  <text x=\"" << sx(p.x) + 5 << "\" y=\"" << sy(p.y) - 5
            << "\" font-size=\"10\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

json stats_to_json(const GraphStats& s) {
    return json{{"edges", s.edges},
                {"indegree", s.indeg},
                {"outdegree", s.outdeg},
                {"max_indegree", s.max_indegree},
                {"clique_number", s.clique_number},
                {"acyclic", s.acyclic}};
}

json report_to_json(const GeneralPositionReport& r) {
    json violations = json::array();
    for (const ViolationRecord& v : r.violations)
        violations.push_back({{"kind", to_string(v.kind)}, {"indices", v.indices}});
    return json{{"ok", r.ok}, {"violations", violations}};
}

json outcome_to_json(const StrategyOutcome& o) {
    json promises = json::array();
    for (const Certificate& c : o.promises)
        promises.push_back({{"label", c.label}, {"value", c.value}, {"subjects", c.subjects}});
    return json{{"strategy", o.strategy},
                {"ordering", o.ordering.perm},
                {"witnesses", o.witnesses},
                {"promises", promises}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GuardError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw GuardError("cannot write " + path);
    out << content;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

} // namespace

PointSet load_point_set(const std::string& path) {
    const std::string text = read_file(path);
    if (ends_with(path, ".csv")) return point_set_from_csv(text);
    return point_set_from_json(json::parse(text));
}

void save_point_set(const PointSet& ps, const std::string& path) {
    if (ends_with(path, ".csv")) {
        write_file(path, point_set_to_csv(ps));
    } else {
        write_file(path, point_set_to_json(ps).dump(2) + "\n");
    }
}

} // namespace yao
