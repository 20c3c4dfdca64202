#include "qaoa/ising.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>

namespace qaoa {

namespace {

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void check_sign(int sign) {
    if (sign != 1 && sign != -1)
        throw InvalidModelError("sign must be +1 or -1, got " +
                                std::to_string(sign));
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

IsingModel::IsingModel(std::vector<int> vertices,
                       const std::map<VertexPair, double>& couplings,
                       double offset)
    : vertices_(std::move(vertices)), offset_(offset) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()),
                    vertices_.end());
    if (!vertices_.empty() && vertices_.front() < 0)
        throw InvalidModelError("vertex ids must be non-negative");

    std::map<VertexPair, double> merged;
    for (const auto& [key, j] : couplings) {
        auto [i, k] = key;
        if (i == k)
            throw InvalidModelError("coupling " + pair_str(i, k) +
                                    " is a self-loop");
        if (!std::binary_search(vertices_.begin(), vertices_.end(), i) ||
            !std::binary_search(vertices_.begin(), vertices_.end(), k))
            throw InvalidModelError("coupling " + pair_str(i, k) +
                                    " references a vertex not in the model");
        merged[make_pair_key(i, k)] += j;
    }
    for (const auto& [key, j] : merged)
        if (std::abs(j) >= kCouplingDropTolerance) couplings_[key] = j;
}

bool IsingModel::has_vertex(int v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

double IsingModel::coupling(int i, int j) const {
    auto it = couplings_.find(make_pair_key(i, j));
    return it == couplings_.end() ? 0.0 : it->second;
}

std::vector<int> IsingModel::non_isolated() const {
    std::set<int> active;
    for (const auto& [key, j] : couplings_) {
        active.insert(key.first);
        active.insert(key.second);
    }
    return {active.begin(), active.end()};
}

IsingModel maxcut_model(const std::vector<WeightedEdge>& edges) {
    std::vector<int> vertices;
    std::map<VertexPair, double> couplings;
    for (const auto& e : edges) {
        if (e.u == e.v)
            throw InvalidModelError("malformed edge: self-loop at vertex " +
                                    std::to_string(e.u));
        if (e.u < 0 || e.v < 0)
            throw InvalidModelError("malformed edge " + pair_str(e.u, e.v) +
                                    ": negative vertex id");
        vertices.push_back(e.u);
        vertices.push_back(e.v);
        couplings[make_pair_key(e.u, e.v)] += -e.weight / 2.0;
    }
    // offset = sum w/2 accumulated in canonical coupling order, so that
    // serialize/parse round trips reproduce it bit for bit.
    double offset = 0.0;
    for (const auto& [key, j] : couplings) offset -= j;
    return IsingModel(std::move(vertices), couplings, offset);
}

IsingModel complete_model(int m) {
    if (m < 2)
        throw InvalidModelError("complete graph needs at least 2 vertices, got " +
                                std::to_string(m));
    std::vector<WeightedEdge> edges;
    edges.reserve(static_cast<std::size_t>(m) * (m - 1) / 2);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) edges.push_back({i, j, 1.0});
    return maxcut_model(edges);
}

double energy(const IsingModel& model, const SpinAssignment& x) {
    for (int v : model.vertices()) {
        auto it = x.find(v);
        if (it == x.end())
            throw IncompleteAssignmentError("assignment is missing vertex " +
                                            std::to_string(v));
        if (it->second != 1 && it->second != -1)
            throw InvalidModelError("spin of vertex " + std::to_string(v) +
                                    " must be +1 or -1");
    }
    // Couplings first, offset last: expectation_energy on a basis state
    // accumulates in the same order and must agree bit for bit.
    double terms = 0.0;
    for (const auto& [key, j] : model.couplings())
        terms += j * x.at(key.first) * x.at(key.second);
    return model.offset() + terms;
}

std::pair<SpinAssignment, double> brute_force_max(const IsingModel& model,
                                                  int cap) {
    if (model.num_vertices() > cap)
        throw SizeLimitError("brute force over " +
                             std::to_string(model.num_vertices()) +
                             " vertices exceeds cap " + std::to_string(cap));

    // Isolated vertices never change the energy; the lexicographically
    // smallest maximizer sets them all to +1.
    SpinAssignment best_assignment;
    for (int v : model.vertices()) best_assignment[v] = 1;

    const std::vector<int> active = model.non_isolated();
    const int a = static_cast<int>(active.size());
    if (a == 0) return {best_assignment, model.offset()};

    std::map<int, int> pos;  // vertex id -> position in `active`
    for (int p = 0; p < a; ++p) pos[active[p]] = p;
    std::vector<std::vector<std::pair<int, double>>> adj(a);
    for (const auto& [key, j] : model.couplings()) {
        int pi = pos.at(key.first), pj = pos.at(key.second);
        adj[pi].push_back({pj, j});
        adj[pj].push_back({pi, j});
    }

    // Fix active[0] = +1 (spin-flip symmetry), Gray-code the rest.
    std::vector<int> spins(a, 1);
    double cur = model.offset();
    for (const auto& [key, j] : model.couplings()) cur += j;

    std::vector<int> best_spins = spins;
    double best = cur;

    const std::uint64_t count = std::uint64_t{1} << (a - 1);
    for (std::uint64_t i = 1; i < count; ++i) {
        const int p = std::countr_zero(i) + 1;  // free spins start at index 1
        double dot = 0.0;
        for (const auto& [q, j] : adj[p]) dot += j * spins[q];
        cur -= 2.0 * spins[p] * dot;
        spins[p] = -spins[p];

        if (cur > best) {
            best = cur;
            best_spins = spins;
        } else if (cur == best) {
            // Lexicographic tie-break: +1 sorts before -1, positions follow
            // ascending vertex ids.
            for (int q = 1; q < a; ++q) {
                if (spins[q] == best_spins[q]) continue;
                if (spins[q] > best_spins[q]) best_spins = spins;
                break;
            }
        }
    }

    for (int p = 0; p < a; ++p) best_assignment[active[p]] = best_spins[p];
    // Report the directly evaluated energy of the returned assignment, not
    // the incrementally accumulated value.
    return {best_assignment, energy(model, best_assignment)};
}

std::pair<IsingModel, ConstraintRecord> contract(const IsingModel& model,
                                                 int k, int l, int sign) {
    check_sign(sign);
    if (k == l)
        throw InvalidModelError("cannot contract vertex " + std::to_string(k) +
                                " with itself");
    if (!model.has_vertex(k) || !model.has_vertex(l))
        throw InvalidModelError("contraction pair " + pair_str(k, l) +
                                " not in the model");

    std::map<VertexPair, double> couplings;
    double offset = model.offset();
    for (const auto& [key, j] : model.couplings()) {
        auto [a, b] = key;
        if (make_pair_key(a, b) == make_pair_key(k, l)) {
            offset += sign * j;  // x_k x_l = sign under the constraint
        } else if (a == k || b == k) {
            int other = (a == k) ? b : a;
            couplings[make_pair_key(other, l)] += sign * j;
        } else {
            couplings[key] += j;
        }
    }

    std::vector<int> vertices;
    for (int v : model.vertices())
        if (v != k) vertices.push_back(v);

    return {IsingModel(std::move(vertices), couplings, offset),
            ConstraintRecord{k, l, sign}};
}

ConstraintStack::ConstraintStack(const std::vector<ConstraintRecord>& records) {
    for (const auto& r : records) push(r);
}

void ConstraintStack::push(const ConstraintRecord& record) {
    check_sign(record.sign);
    if (record.eliminated == record.surviving)
        throw InconsistentStackError("record eliminates vertex " +
                                     std::to_string(record.eliminated) +
                                     " into itself");
    for (const auto& r : records_) {
        if (r.eliminated == record.eliminated)
            throw InconsistentStackError("vertex " +
                                         std::to_string(record.eliminated) +
                                         " eliminated twice");
        if (r.eliminated == record.surviving)
            throw InconsistentStackError(
                "surviving vertex " + std::to_string(record.surviving) +
                " was already eliminated");
        if (r.surviving == record.eliminated)
            throw InconsistentStackError(
                "vertex " + std::to_string(record.eliminated) +
                " is eliminated after appearing as surviving");
    }
    records_.push_back(record);
}

void ConstraintStack::chain(const ConstraintRecord& record) {
    for (auto& r : records_) {
        if (r.surviving == record.eliminated) {
            r.surviving = record.surviving;
            r.sign *= record.sign;
        }
    }
    push(record);
}

SpinAssignment reconstruct(const ConstraintStack& stack,
                           const SpinAssignment& base) {
    SpinAssignment x = base;
    const auto& records = stack.records();
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        auto surv = x.find(it->surviving);
        if (surv == x.end())
            throw InconsistentStackError(
                "record restores vertex " + std::to_string(it->eliminated) +
                " from still-unassigned vertex " +
                std::to_string(it->surviving));
        x[it->eliminated] = it->sign * surv->second;
    }
    return x;
}

IsingModel parse_edge_list(const std::string& text) {
    std::vector<WeightedEdge> edges;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        for (std::string tok; ls >> tok;) tokens.push_back(tok);
        if (tokens.empty()) continue;
        if (tokens.size() < 2 || tokens.size() > 3)
            throw ParseError(lineno, "expected 'i j [w]', got " +
                                         std::to_string(tokens.size()) +
                                         " tokens");

        long ids[2];
        for (int t = 0; t < 2; ++t) {
            char* end = nullptr;
            ids[t] = std::strtol(tokens[t].c_str(), &end, 10);
            if (end == tokens[t].c_str() || *end != '\0')
                throw ParseError(lineno, "vertex id '" + tokens[t] +
                                             "' is not an integer");
            if (ids[t] < 0)
                throw ParseError(lineno, "vertex id '" + tokens[t] +
                                             "' is negative");
        }
        if (ids[0] == ids[1])
            throw ParseError(lineno,
                             "self-loop at vertex " + std::to_string(ids[0]));

        double w = 1.0;
        if (tokens.size() == 3) {
            char* end = nullptr;
            w = std::strtod(tokens[2].c_str(), &end);
            if (end == tokens[2].c_str() || *end != '\0')
                throw ParseError(lineno, "weight '" + tokens[2] +
                                             "' is not a number");
        }
        edges.push_back(
            {static_cast<int>(ids[0]), static_cast<int>(ids[1]), w});
    }
    return maxcut_model(edges);
}

std::string serialize_model(const IsingModel& model) {
    std::string out;
    for (const auto& [key, j] : model.couplings()) {
        out += std::to_string(key.first) + " " + std::to_string(key.second) +
               " " + format_double(-2.0 * j) + "\n";
    }
    return out;
}

}  // namespace qaoa
