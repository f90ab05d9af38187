#ifndef GRAPHEX_IO_HPP
#define GRAPHEX_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "graphex/graph.hpp"
#include "graphex/results.hpp"

namespace graphex {

/// Parsed edge list: dense ids 0..n-1 in first-appearance order, with the
/// original token of id i at labels[i].
struct LabeledGraph {
    UndirectedGraph graph;
    std::vector<std::string> labels;
};

/// Whitespace-separated pairs, `#` comment lines, blank lines ignored.
/// Throws ParseError(line) when a line does not hold exactly two tokens.
LabeledGraph parse_edge_list(std::istream& in);

struct TraceEvent {
    double time = 0.0;
    std::string u;
    std::string v;
    bool operator==(const TraceEvent&) const = default;
};
using Trace = std::vector<TraceEvent>;

/// Lines "t u v", stably sorted by t. Throws ParseError(line) on a
/// non-numeric timestamp or a wrong token count.
Trace parse_trace(std::istream& in);

/// Graph of the distinct edges with time <= t. Ids follow first appearance
/// in the (sorted) trace, so snapshots of one trace share ids.
UndirectedGraph snapshot(const Trace& trace, double t);

/// One "u v" line per edge, ids in decimal.
void write_edge_list(std::ostream& out, const UndirectedGraph& graph);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Columns: size,estimator,metric,value,stderr,n_reps.
void write_csv(std::ostream& out, const ResultTable& table);

/// Config, version, notices and rows as one JSON document.
void write_json(std::ostream& out, const ResultTable& table);

}  // namespace graphex

#endif  // GRAPHEX_IO_HPP
