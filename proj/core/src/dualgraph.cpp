#include <lndkit/dualgraph.hpp>

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace lnd {

namespace {

WeightedCurveGraph::Edge make_edge(std::string_view a, std::string_view b)
{
    if (a < b) {
        return {std::string(a), std::string(b)};
    }
    return {std::string(b), std::string(a)};
}

} // namespace

void WeightedCurveGraph::require_vertex(std::string_view name, const char *op) const
{
    if (!has_vertex(name)) {
        throw GraphError(std::string(op) + ": unknown curve '" + std::string(name) + "'");
    }
}

WeightedCurveGraph WeightedCurveGraph::with_vertex(std::string name, int weight) const
{
    if (name.empty() || name.find_first_of(" \t\n") != std::string::npos) {
        throw GraphError("with_vertex: invalid curve name '" + name + "'");
    }
    if (has_vertex(name)) {
        throw GraphError("with_vertex: name collision '" + name + "'");
    }
    WeightedCurveGraph g = *this;
    g.weights_.emplace(name, weight);
    g.order_.push_back(std::move(name));
    return g;
}

WeightedCurveGraph WeightedCurveGraph::with_edge(std::string_view a, std::string_view b) const
{
    require_vertex(a, "with_edge");
    require_vertex(b, "with_edge");
    if (a == b) {
        throw GraphError("with_edge: self-loop on '" + std::string(a) + "'");
    }
    WeightedCurveGraph g = *this;
    g.edges_.insert(make_edge(a, b));
    return g;
}

int WeightedCurveGraph::weight(std::string_view name) const
{
    require_vertex(name, "weight");
    return weights_.find(name)->second;
}

std::vector<std::string> WeightedCurveGraph::neighbors(std::string_view name) const
{
    require_vertex(name, "neighbors");
    std::vector<std::string> out;
    for (const auto &[a, b] : edges_) {
        if (a == name) {
            out.push_back(b);
        } else if (b == name) {
            out.push_back(a);
        }
    }
    return out;
}

std::size_t WeightedCurveGraph::edge_multiplicity(std::string_view a, std::string_view b) const
{
    return edges_.count(make_edge(a, b));
}

bool WeightedCurveGraph::connected() const
{
    if (order_.empty()) {
        return true;
    }
    std::set<std::string, std::less<>> seen{order_.front()};
    std::vector<std::string> stack{order_.front()};
    while (!stack.empty()) {
        const std::string v = stack.back();
        stack.pop_back();
        for (auto &w : neighbors(v)) {
            if (seen.insert(w).second) {
                stack.push_back(std::move(w));
            }
        }
    }
    return seen.size() == order_.size();
}

WeightedCurveGraph WeightedCurveGraph::without_vertex(std::string_view name) const
{
    require_vertex(name, "without_vertex");
    WeightedCurveGraph g = *this;
    g.weights_.erase(g.weights_.find(name));
    g.order_.erase(std::find(g.order_.begin(), g.order_.end(), name));
    for (auto it = g.edges_.begin(); it != g.edges_.end();) {
        if (it->first == name || it->second == name) {
            it = g.edges_.erase(it);
        } else {
            ++it;
        }
    }
    return g;
}

WeightedCurveGraph WeightedCurveGraph::induced(const std::vector<std::string> &names) const
{
    WeightedCurveGraph g = *this;
    for (const auto &v : order_) {
        if (std::find(names.begin(), names.end(), v) == names.end()) {
            g = g.without_vertex(v);
        }
    }
    for (const auto &v : names) {
        require_vertex(v, "induced");
    }
    return g;
}

WeightedCurveGraph WeightedCurveGraph::blow_up_on_curve(std::string_view curve, std::string newname) const
{
    require_vertex(curve, "blow_up_on_curve");
    WeightedCurveGraph g = with_vertex(newname, -1).with_edge(curve, newname);
    g.weights_.find(curve)->second -= 1;
    return g;
}

WeightedCurveGraph WeightedCurveGraph::blow_up_on_intersection(std::string_view a, std::string_view b,
                                                               std::string newname) const
{
    const auto it = edges_.find(make_edge(a, b));
    if (it == edges_.end()) {
        throw GraphError("blow_up_on_intersection: no intersection point between '" + std::string(a) + "' and '" +
                         std::string(b) + "'");
    }
    WeightedCurveGraph g = *this;
    g.edges_.erase(g.edges_.find(make_edge(a, b)));
    g = g.with_vertex(newname, -1).with_edge(a, newname).with_edge(b, newname);
    g.weights_.find(a)->second -= 1;
    g.weights_.find(b)->second -= 1;
    return g;
}

WeightedCurveGraph WeightedCurveGraph::blow_down(std::string_view curve) const
{
    require_vertex(curve, "blow_down");
    if (weight(curve) != -1) {
        throw GraphError("blow_down: '" + std::string(curve) + "' has weight " + std::to_string(weight(curve)) +
                         ", not -1");
    }
    const auto nb = neighbors(curve);
    if (nb.size() > 2) {
        throw GraphError("blow_down: '" + std::string(curve) + "' meets " + std::to_string(nb.size()) +
                         " points; contraction would create a non-normal crossing");
    }
    WeightedCurveGraph g = without_vertex(curve);
    for (const auto &w : nb) {
        g.weights_.find(w)->second += 1;
    }
    if (nb.size() == 2) {
        if (nb[0] == nb[1]) {
            throw GraphError("blow_down: '" + std::string(curve) + "' meets '" + nb[0] +
                             "' twice; contraction would create a self-intersecting curve");
        }
        g = g.with_edge(nb[0], nb[1]);
    }
    return g;
}

bool operator==(const WeightedCurveGraph &a, const WeightedCurveGraph &b)
{
    return a.weights_ == b.weights_ && a.edges_ == b.edges_;
}

bool is_chain(const WeightedCurveGraph &g)
{
    if (!g.connected()) {
        return false;
    }
    for (const auto &v : g.vertices()) {
        if (g.degree(v) > 2) {
            return false;
        }
    }
    // Connected with |E| = |V| - 1 means a tree; a double edge counts as a cycle.
    return g.vertex_count() == 0 || g.edges().size() + 1 == g.vertex_count();
}

namespace {

std::string state_key(const WeightedCurveGraph &g)
{
    std::ostringstream os;
    std::vector<std::string> names = g.vertices();
    std::sort(names.begin(), names.end());
    for (const auto &v : names) {
        os << v << ':' << g.weight(v) << ';';
    }
    os << '|';
    for (const auto &[a, b] : g.edges()) {
        os << a << '-' << b << ';';
    }
    return os.str();
}

} // namespace

ContractionResult can_contract_to_fiber(const WeightedCurveGraph &g)
{
    if (g.vertex_count() == 0) {
        return {false, {}, "empty configuration"};
    }
    if (!g.connected()) {
        return {false, {}, "configuration is not connected"};
    }
    std::unordered_map<std::string, bool> memo;
    std::vector<std::string> path;
    std::vector<std::string> best;
    std::string first_reason;

    std::function<bool(const WeightedCurveGraph &)> search = [&](const WeightedCurveGraph &s) -> bool {
        if (s.vertex_count() == 1) {
            const int w = s.weight(s.vertices().front());
            if (w == 0) {
                best = path;
                return true;
            }
            if (first_reason.empty()) {
                first_reason = "reaches the single curve " + s.vertices().front() + " of weight " + std::to_string(w);
            }
            return false;
        }
        const std::string key = state_key(s);
        if (auto it = memo.find(key); it != memo.end()) {
            return it->second;
        }
        bool ok = false;
        bool nonnegative = false;
        for (const auto &v : s.vertices()) {
            if (s.weight(v) >= 0) {
                nonnegative = true;
                if (first_reason.empty()) {
                    first_reason = "curve " + v + " of weight " + std::to_string(s.weight(v)) +
                                   " in a reducible candidate";
                }
                break;
            }
        }
        if (!nonnegative) {
            bool any_move = false;
            for (const auto &v : s.vertices()) {
                if (s.weight(v) != -1 || s.degree(v) > 2) {
                    continue;
                }
                const auto nb = s.neighbors(v);
                if (nb.size() == 2 && nb[0] == nb[1]) {
                    continue;
                }
                any_move = true;
                path.push_back(v);
                ok = search(s.blow_down(v));
                path.pop_back();
                if (ok) {
                    break;
                }
            }
            if (!any_move && first_reason.empty()) {
                first_reason = "no contractible (-1)-curve among " + std::to_string(s.vertex_count()) + " curves";
            }
        }
        memo.emplace(key, ok);
        return ok;
    };

    if (search(g)) {
        return {true, best, {}};
    }
    return {false, {}, first_reason};
}

WeightedCurveGraph build_paper_compactification(int n)
{
    if (n < 0) {
        throw GraphError("build_paper_compactification: n must be >= 0");
    }
    WeightedCurveGraph g = WeightedCurveGraph{}
                               .with_vertex("F_inf", 0)
                               .with_vertex("D", -n)
                               .with_vertex("F_0", 0)
                               .with_edge("D", "F_0")
                               .with_edge("D", "F_inf");
    g = g.blow_up_on_curve("F_0", "E_-1").blow_up_on_curve("F_0", "E_-4");
    g = g.blow_up_on_curve("E_-1", "C_1").blow_up_on_curve("E_-1", "C_-1");
    g = g.blow_up_on_curve("E_-4", "C_2").blow_up_on_curve("E_-4", "C_-2");
    return g;
}

WeightedCurveGraph boundary_subgraph(const WeightedCurveGraph &compactification)
{
    return compactification.induced({"F_inf", "D", "F_0", "E_-1", "E_-4"});
}

WeightedCurveGraph fiber_candidate(int k)
{
    if (k < 0) {
        throw GraphError("fiber_candidate: k must be >= 0");
    }
    WeightedCurveGraph g = build_paper_compactification(0);
    std::string other = "F_inf";
    for (int i = 1; i <= k; ++i) {
        std::string name = "G_" + std::to_string(i);
        g = g.blow_up_on_intersection(other, "D", name);
        other = std::move(name);
    }
    return g.induced({"D", "F_0", "E_-1", "E_-4"});
}

std::vector<WeightedCurveGraph> transversality_cases(int k)
{
    if (k < 1) {
        throw GraphError("transversality_cases: k must be >= 1");
    }
    const WeightedCurveGraph direct = WeightedCurveGraph{}
                                          .with_vertex("D", 0)
                                          .with_vertex("F_0", -2)
                                          .with_vertex("E_-1", -3)
                                          .with_vertex("E_-4", -3)
                                          .with_edge("D", "F_0")
                                          .with_edge("F_0", "E_-1")
                                          .with_edge("F_0", "E_-4");
    return {fiber_candidate(0), direct, fiber_candidate(k)};
}

WeightedCurveGraph parse_graph(std::string_view text)
{
    WeightedCurveGraph g;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) {
            continue;
        }
        const std::string where = "line " + std::to_string(lineno) + ": ";
        std::string a;
        std::string b;
        std::string extra;
        try {
            if (kind == "vertex") {
                int w = 0;
                if (!(ls >> a >> w) || (ls >> extra)) {
                    throw GraphError("expected 'vertex NAME WEIGHT'");
                }
                g = g.with_vertex(a, w);
            } else if (kind == "edge") {
                if (!(ls >> a >> b) || (ls >> extra)) {
                    throw GraphError("expected 'edge NAME NAME'");
                }
                g = g.with_edge(a, b);
            } else {
                throw GraphError("unknown directive '" + kind + "'");
            }
        } catch (const GraphError &e) {
            throw GraphError(where + e.what());
        }
    }
    return g;
}

std::string format_graph(const WeightedCurveGraph &g)
{
    std::ostringstream os;
    for (const auto &v : g.vertices()) {
        os << "vertex " << v << ' ' << g.weight(v) << '\n';
    }
    for (const auto &[a, b] : g.edges()) {
        os << "edge " << a << ' ' << b << '\n';
    }
    return os.str();
}

} // namespace lnd
