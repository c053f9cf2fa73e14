#include "occult/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace occult {

namespace {

std::vector<VertexId> ids_from_json(const json& j) {
    std::vector<VertexId> out;
    for (const auto& v : j) out.push_back(v.get<VertexId>());
    return out;
}

PathWitness path_from_json(const json& j) { return PathWitness{ids_from_json(j)}; }

}  // namespace

json graph_to_json(const Graph& g) {
    if (!g.has_contiguous_ids())
        throw PreconditionError("contiguous-ids",
                                "graph JSON requires vertex ids 0..n-1; relabel first");
    json j;
    j["n"] = g.vertex_count();
    json edges = json::array();
    for (const Edge& e : g.edge_list()) edges.push_back({e.first, e.second});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw PreconditionError("graph-json", "expected keys \"n\" and \"edges\"");
    Graph g = Graph::with_vertex_count(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw PreconditionError("graph-json", "edges must be [u,v] pairs");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::string graph_to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph g {\n";
    for (VertexId v : g.vertices()) out << "  " << v << ";\n";
    for (const Edge& e : g.edge_list()) out << "  " << e.first << " -- " << e.second << ";\n";
    out << "}\n";
    return out.str();
}

json asterism_to_json(const OrderedAsterism& a) {
    json j;
    j["S"] = a.s;
    j["L"] = a.l.verts;
    return j;
}

OrderedAsterism asterism_from_json(const json& j) {
    if (!j.contains("S") || !j.contains("L"))
        throw PreconditionError("asterism-json", "expected keys \"S\" and \"L\"");
    OrderedAsterism a;
    a.s = ids_from_json(j.at("S"));
    a.l = path_from_json(j.at("L"));
    return a;
}

json polypath_to_json(const Polypath& p) {
    json paths = json::array();
    for (const auto& path : p.paths) paths.push_back(path.verts);
    return paths;
}

Polypath polypath_from_json(const json& j) {
    Polypath p;
    for (const auto& path : j) p.paths.push_back(path_from_json(path));
    return p;
}

json constellation_to_json(const Constellation& c) {
    json j;
    j["S"] = c.s;
    j["paths"] = polypath_to_json(c.paths);
    j["plain"] = c.plain;
    return j;
}

Constellation constellation_from_json(const json& j) {
    Constellation c;
    c.s = ids_from_json(j.at("S"));
    c.paths = polypath_from_json(j.at("paths"));
    c.plain = j.value("plain", false);
    return c;
}

json gemini_to_json(const Gemini& g) {
    json j;
    j["first"] = asterism_to_json(g.first);
    j["second"] = asterism_to_json(g.second);
    j["connectors"] = polypath_to_json(g.connectors);
    return j;
}

Gemini gemini_from_json(const json& j) {
    Gemini g;
    g.first = asterism_from_json(j.at("first"));
    g.second = asterism_from_json(j.at("second"));
    g.connectors = polypath_from_json(j.at("connectors"));
    return g;
}

json patch_to_json(const Patch& p) {
    json j;
    j["center"] = p.center;
    j["paths"] = polypath_to_json(p.paths);
    return j;
}

Patch patch_from_json(const json& j) {
    Patch p;
    p.center = j.at("center").get<VertexId>();
    p.paths = polypath_from_json(j.at("paths"));
    return p;
}

json match_to_json(const Match& m) {
    json j;
    j["paths"] = polypath_to_json(m.paths);
    return j;
}

Match match_from_json(const json& j) {
    Match m;
    m.paths = polypath_from_json(j.at("paths"));
    return m;
}

json cycles_to_json(const std::vector<CycleWitness>& cycles) {
    json arr = json::array();
    for (const auto& c : cycles) arr.push_back(c.verts);
    json j;
    j["cycles"] = std::move(arr);
    return j;
}

std::vector<CycleWitness> cycles_from_json(const json& j) {
    std::vector<CycleWitness> out;
    for (const auto& c : j.at("cycles"))
        out.push_back(CycleWitness::canonical(ids_from_json(c)));
    return out;
}

json strong_block_witness_to_json(const StrongBlockWitness& w) {
    json j;
    j["B"] = w.b;
    json pairs = json::array();
    for (const auto& [pair, paths] : w.paths) {
        json entry;
        entry["x"] = pair.first;
        entry["y"] = pair.second;
        json ps = json::array();
        for (const auto& p : paths) ps.push_back(p.verts);
        entry["paths"] = std::move(ps);
        pairs.push_back(std::move(entry));
    }
    j["pairs"] = std::move(pairs);
    return j;
}

StrongBlockWitness strong_block_witness_from_json(const json& j) {
    StrongBlockWitness w;
    w.b = ids_from_json(j.at("B"));
    for (const auto& entry : j.at("pairs")) {
        VertexId x = entry.at("x").get<VertexId>();
        VertexId y = entry.at("y").get<VertexId>();
        Edge e = x < y ? Edge{x, y} : Edge{y, x};
        std::vector<PathWitness> paths;
        for (const auto& p : entry.at("paths")) paths.push_back(path_from_json(p));
        w.paths[e] = std::move(paths);
    }
    return w;
}

json intervals_to_json(const IntervalFamily& f) {
    json arr = json::array();
    for (const auto& [l, r] : f.spans) arr.push_back({l, r});
    json j;
    j["intervals"] = std::move(arr);
    return j;
}

IntervalFamily intervals_from_json(const json& j) {
    IntervalFamily f;
    for (const auto& span : j.at("intervals")) {
        if (!span.is_array() || span.size() != 2)
            throw PreconditionError("intervals-json", "intervals must be [l,r] pairs");
        f.spans.emplace_back(span[0].get<int>(), span[1].get<int>());
    }
    return f;
}

json perforation_verdict_to_json(const PerforationVerdict& v) {
    json j;
    switch (v.kind) {
        case PerforationVerdict::Kind::Perforated: j["verdict"] = "perforated"; break;
        case PerforationVerdict::Kind::NotPerforated: j["verdict"] = "not-perforated"; break;
        case PerforationVerdict::Kind::Indeterminate: j["verdict"] = "indeterminate"; break;
    }
    json arr = json::array();
    for (const auto& c : v.witness) arr.push_back(c.verts);
    j["witness"] = std::move(arr);
    j["budget"] = {{"budget", v.budget.budget},
                   {"enumeration_steps", v.budget.enumeration_steps},
                   {"cycles_found", v.budget.cycles_found},
                   {"search_nodes", v.budget.search_nodes},
                   {"enumeration_complete", v.budget.enumeration_complete}};
    return j;
}

json extraction_outcome_to_json(const ExtractionOutcome& o) {
    json j;
    if (const auto* syz = std::get_if<SyzygyOutcome>(&o.value)) {
        j["outcome"] = "syzygy";
        j["witness"] = asterism_to_json(syz->asterism);
    } else if (const auto* con = std::get_if<ConstellationOutcome>(&o.value)) {
        j["outcome"] = "plain-constellation";
        j["witness"] = constellation_to_json(con->constellation);
    } else if (const auto* occ = std::get_if<OccultationOutcome>(&o.value)) {
        j["outcome"] = "full-occultation";
        j["witness"] = asterism_to_json(occ->asterism);
        j["o"] = occ->o;
    } else if (const auto* packing = std::get_if<CyclePackingOutcome>(&o.value)) {
        j["outcome"] = "cycle-packing";
        j["witness"] = cycles_to_json(packing->cycles);
    } else {
        j["outcome"] = "insufficient";
        j["reason"] = std::get<InsufficientOutcome>(o.value).reason;
    }
    json trace = json::array();
    for (const auto& ev : o.trace.events) trace.push_back({{"step", ev.step}, {"detail", ev.detail}});
    j["trace"] = std::move(trace);
    return j;
}

json decomposition_to_json(const TreeDecomposition& td) {
    json j;
    json bags = json::array();
    for (const auto& bag : td.bags) bags.push_back(bag);
    j["bags"] = std::move(bags);
    json edges = json::array();
    for (const auto& [a, b] : td.tree_edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    return j;
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition td;
    for (const auto& bag : j.at("bags")) td.bags.push_back(ids_from_json(bag));
    for (const auto& e : j.at("edges"))
        td.tree_edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    return td;
}

std::string decomposition_to_pace(const TreeDecomposition& td, const Graph& g) {
    std::size_t max_bag = 0;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, bag.size());
    std::ostringstream out;
    out << "s td " << td.bags.size() << " " << max_bag << " " << g.vertex_count() << "\n";
    for (std::size_t i = 0; i < td.bags.size(); ++i) {
        out << "b " << (i + 1);
        for (VertexId v : td.bags[i]) out << " " << (v + 1);
        out << "\n";
    }
    for (const auto& [a, b] : td.tree_edges) out << (a + 1) << " " << (b + 1) << "\n";
    return out.str();
}

TreeDecomposition decomposition_from_pace(const std::string& text) {
    TreeDecomposition td;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tok;
        ls >> tok;
        if (tok == "s") continue;
        if (tok == "b") {
            int index;
            ls >> index;
            std::vector<VertexId> bag;
            int v;
            while (ls >> v) bag.push_back(v - 1);
            if (static_cast<int>(td.bags.size()) < index)
                td.bags.resize(static_cast<std::size_t>(index));
            td.bags[static_cast<std::size_t>(index - 1)] = std::move(bag);
        } else {
            int a = std::stoi(tok), b;
            ls >> b;
            td.tree_edges.emplace_back(a - 1, b - 1);
        }
    }
    return td;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("file", "cannot open " + path);
    json j;
    in >> j;
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw PreconditionError("file", "cannot open " + path + " for writing");
    out << content;
}

}  // namespace occult
