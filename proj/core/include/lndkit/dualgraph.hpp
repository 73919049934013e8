#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lnd {

class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Dual graph of a curve configuration with simple normal crossings: one vertex
// per curve weighted by its self-intersection, one edge per intersection
// point. Values are immutable; every operation returns a new graph.
class WeightedCurveGraph {
public:
    using Edge = std::pair<std::string, std::string>; // first < second

    WeightedCurveGraph() = default;

    WeightedCurveGraph with_vertex(std::string name, int weight) const;
    WeightedCurveGraph with_edge(std::string_view a, std::string_view b) const;

    bool has_vertex(std::string_view name) const { return weights_.find(name) != weights_.end(); }
    int weight(std::string_view name) const;
    std::size_t vertex_count() const { return order_.size(); }
    // Vertices in insertion order.
    const std::vector<std::string> &vertices() const { return order_; }
    const std::multiset<Edge> &edges() const { return edges_; }
    // Neighbors with repetition for multiple intersection points.
    std::vector<std::string> neighbors(std::string_view name) const;
    std::size_t degree(std::string_view name) const { return neighbors(name).size(); }
    std::size_t edge_multiplicity(std::string_view a, std::string_view b) const;

    bool connected() const;

    WeightedCurveGraph without_vertex(std::string_view name) const;
    WeightedCurveGraph induced(const std::vector<std::string> &names) const;

    // Blow-up of a point lying on `curve` only.
    WeightedCurveGraph blow_up_on_curve(std::string_view curve, std::string newname) const;
    // Blow-up of an intersection point of a and b.
    WeightedCurveGraph blow_up_on_intersection(std::string_view a, std::string_view b, std::string newname) const;
    // Contraction of a (-1)-curve meeting at most two other curves.
    WeightedCurveGraph blow_down(std::string_view curve) const;

    // Equality ignores insertion order.
    friend bool operator==(const WeightedCurveGraph &a, const WeightedCurveGraph &b);

private:
    void require_vertex(std::string_view name, const char *op) const;

    std::vector<std::string> order_;
    std::map<std::string, int, std::less<>> weights_;
    std::multiset<Edge> edges_;
};

bool is_chain(const WeightedCurveGraph &g);

struct ContractionResult {
    bool contractible;
    std::vector<std::string> sequence; // blow-downs of a successful sequence
    std::string reason;                // why the search failed
};

// Exhaustive search over blow-down sequences for one ending in a single curve
// of self-intersection 0. Intermediate configurations with more than one curve
// and a curve of nonnegative weight are discarded: such a curve can never be
// contracted and its weight only grows.
ContractionResult can_contract_to_fiber(const WeightedCurveGraph &g);

// Compactification of the surface: the Hirzebruch graph D(-n) with fibers F_0,
// F_inf, followed by blow-ups p_-1, p_-4 on F_0 and two points on each of E_-1,
// E_-4 with strict transforms C_1, C_-1 (on E_-1) and C_2, C_-2 (on E_-4).
WeightedCurveGraph build_paper_compactification(int n);
// The five boundary curves F_inf, D, F_0, E_-1, E_-4.
WeightedCurveGraph boundary_subgraph(const WeightedCurveGraph &compactification);

// Candidate fiber D, F_0, E_-1, E_-4 after k blow-ups at F_inf ∩ D on the D
// side, starting from the n = 0 compactification; D has weight -k.
WeightedCurveGraph fiber_candidate(int k);
// The three candidate configurations: D' of weight 0 attached to F_0 (cases 1
// and 2, the second entered directly) and D' of weight -k (case 3).
std::vector<WeightedCurveGraph> transversality_cases(int k = 1);

// "vertex NAME WEIGHT" and "edge NAME NAME" lines; '#' starts a comment.
WeightedCurveGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedCurveGraph &g);

} // namespace lnd
