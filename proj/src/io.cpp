#include "graphex/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "graphex/error.hpp"

namespace graphex {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

bool skippable(const std::string& line) {
    const auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

class LabelMap {
public:
    std::uint32_t id(const std::string& label) {
        const auto [it, inserted] = index_.try_emplace(label, static_cast<std::uint32_t>(labels_.size()));
        if (inserted) labels_.push_back(label);
        return it->second;
    }
    std::vector<std::string>& labels() { return labels_; }

private:
    std::unordered_map<std::string, std::uint32_t> index_;
    std::vector<std::string> labels_;
};

UndirectedGraph build(const std::vector<UndirectedGraph::IndexEdge>& edges, std::size_t n) {
    std::vector<VertexId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    return UndirectedGraph::from_indexed(ids, edges);
}

}  // namespace

LabeledGraph parse_edge_list(std::istream& in) {
    LabelMap map;
    std::vector<UndirectedGraph::IndexEdge> edges;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skippable(line)) continue;
        const auto tok = tokens_of(line);
        if (tok.size() != 2)
            throw ParseError(number, "expected 2 tokens, found " + std::to_string(tok.size()));
        const auto a = map.id(tok[0]);
        const auto b = map.id(tok[1]);
        edges.emplace_back(a, b);
    }
    LabeledGraph out;
    out.graph = build(edges, map.labels().size());
    out.labels = std::move(map.labels());
    return out;
}

Trace parse_trace(std::istream& in) {
    Trace trace;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (skippable(line)) continue;
        const auto tok = tokens_of(line);
        if (tok.size() != 3)
            throw ParseError(number, "expected 'time u v', found " + std::to_string(tok.size()) + " tokens");
        double t = 0.0;
        const char* first = tok[0].data();
        const char* last = first + tok[0].size();
        const auto res = std::from_chars(first, last, t);
        if (res.ec != std::errc() || res.ptr != last || !std::isfinite(t))
            throw ParseError(number, "non-numeric timestamp '" + tok[0] + "'");
        trace.push_back({t, tok[1], tok[2]});
    }
    std::stable_sort(trace.begin(), trace.end(),
                     [](const TraceEvent& a, const TraceEvent& b) { return a.time < b.time; });
    return trace;
}

UndirectedGraph snapshot(const Trace& trace, double t) {
    LabelMap map;
    std::vector<UndirectedGraph::IndexEdge> edges;
    for (const auto& e : trace) {
        if (e.time > t) break;
        const auto a = map.id(e.u);
        const auto b = map.id(e.v);
        edges.emplace_back(a, b);
    }
    return build(edges, map.labels().size());
}

void write_edge_list(std::ostream& out, const UndirectedGraph& graph) {
    for (const auto& [a, b] : graph.id_edges()) out << a << ' ' << b << '\n';
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

void write_csv(std::ostream& out, const ResultTable& table) {
    out << "size,estimator,metric,value,stderr,n_reps\n";
    for (const auto& r : table.rows)
        out << format_double(r.size) << ',' << r.estimator << ',' << r.metric << ',' << format_double(r.value)
            << ',' << format_double(r.stderr_value) << ',' << r.n_reps << '\n';
}

void write_json(std::ostream& out, const ResultTable& table) {
    const auto& c = table.config;
    nlohmann::ordered_json config = {
        {"kind", experiment_kind_key(c.kind)},
        {"model", c.model},
        {"sigma", c.sigma ? nlohmann::ordered_json(*c.sigma) : nlohmann::ordered_json(nullptr)},
        {"sizes", c.sizes},
        {"beta_ratio", c.beta_ratio},
        {"estimators", c.estimators},
        {"replicates", c.replicates},
        {"seed", c.seed},
        {"budget", c.budget},
        {"p", c.p},
        {"r", c.r},
        {"final_time", c.final_time},
        {"input", c.input},
        {"output", c.output},
        {"serial", c.serial},
    };
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : table.rows)
        rows.push_back({{"size", r.size},
                        {"estimator", r.estimator},
                        {"metric", r.metric},
                        {"value", r.value},
                        {"stderr", r.stderr_value},
                        {"n_reps", r.n_reps}});
    nlohmann::ordered_json doc = {
        {"version", table.version}, {"config", config}, {"notices", table.notices}, {"rows", rows}};
    out << doc.dump(2) << '\n';
}

}  // namespace graphex
