#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaoa/errors.hpp"

namespace qaoa {

// Spin values are +1 / -1, keyed by vertex id. An assignment is valid
// against a model when it covers every model vertex; extra entries are
// ignored by evaluation.
using SpinAssignment = std::map<int, int>;

// Unordered vertex pair stored with the smaller id first.
using VertexPair = std::pair<int, int>;

inline VertexPair make_pair_key(int i, int j) {
    return i < j ? VertexPair{i, j} : VertexPair{j, i};
}

struct WeightedEdge {
    int u = 0;
    int v = 0;
    double weight = 1.0;
};

// Couplings merged to a magnitude below this are dropped; the vertices stay.
inline constexpr double kCouplingDropTolerance = 1e-12;

// 2^25 energy evaluations after spin-flip symmetry reduction.
inline constexpr int kDefaultBruteForceCap = 26;

// Energy function offset + sum_ij J_ij x_i x_j over spins in {-1,+1}.
// Immutable after construction; all operations on it are pure.
class IsingModel {
  public:
    IsingModel() = default;

    // Canonicalizes pair keys (merging duplicates additively), drops
    // couplings below kCouplingDropTolerance, keeps every listed vertex.
    IsingModel(std::vector<int> vertices,
               const std::map<VertexPair, double>& couplings, double offset);

    const std::vector<int>& vertices() const { return vertices_; }
    const std::map<VertexPair, double>& couplings() const { return couplings_; }
    double offset() const { return offset_; }

    bool has_vertex(int v) const;
    // Stored coupling for the pair, 0 when absent.
    double coupling(int i, int j) const;

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    // Vertices that participate in at least one coupling, ascending.
    std::vector<int> non_isolated() const;

    bool operator==(const IsingModel& other) const = default;

  private:
    std::vector<int> vertices_;              // sorted, unique
    std::map<VertexPair, double> couplings_; // canonical keys
    double offset_ = 0.0;
};

// One imposed constraint x_eliminated = sign * x_surviving.
struct ConstraintRecord {
    int eliminated = 0;
    int surviving = 0;
    int sign = 1;

    bool operator==(const ConstraintRecord&) const = default;
};

// Ordered eliminations used for solution reconstruction. Push enforces that
// no vertex is eliminated twice and that an eliminated vertex is never
// referenced again, in either role, by any other record.
class ConstraintStack {
  public:
    ConstraintStack() = default;
    explicit ConstraintStack(const std::vector<ConstraintRecord>& records);

    void push(const ConstraintRecord& record);

    // Like push, but first rewrites earlier records whose surviving vertex is
    // the one now being eliminated, composing signs. Keeps engine-produced
    // stacks valid when a previous survivor is itself eliminated later.
    void chain(const ConstraintRecord& record);

    const std::vector<ConstraintRecord>& records() const { return records_; }
    bool empty() const { return records_.empty(); }
    std::size_t size() const { return records_.size(); }

  private:
    std::vector<ConstraintRecord> records_;
};

// MAX-CUT cost sum_E w/2 (1 - x_i x_j) as an Ising model:
// offset = sum w/2, J_ij = -w/2. Duplicate pairs merge by weight summation.
IsingModel maxcut_model(const std::vector<WeightedEdge>& edges);

// Unit-weight complete graph MAX-CUT model on m >= 2 vertices, ids 0..m-1.
IsingModel complete_model(int m);

double energy(const IsingModel& model, const SpinAssignment& x);

// Global maximizer and its energy. Fixes the first spin to +1 (spin-flip
// symmetry) and enumerates the rest; ties resolve to the lexicographically
// smallest assignment in vertex-id order with +1 ordered before -1.
std::pair<SpinAssignment, double> brute_force_max(
    const IsingModel& model, int cap = kDefaultBruteForceCap);

// Eliminates k under x_k = sign * x_l: couplings (i,k) remap to (i,l) with
// coefficient sign*J_ik merged additively, the (k,l) coupling becomes the
// constant sign*J_kl added to the offset. For every reduced assignment x',
// energy(model, lift(x')) == energy(reduced, x') with x_k = sign * x_l.
std::pair<IsingModel, ConstraintRecord> contract(const IsingModel& model,
                                                 int k, int l, int sign);

// Replays records in reverse elimination order, setting
// x[eliminated] = sign * x[surviving]. `base` must assign every vertex of
// the final reduced model.
SpinAssignment reconstruct(const ConstraintStack& stack,
                           const SpinAssignment& base);

// Text format: one "i j w" line per edge (w optional, default 1),
// '#' starts a comment, blank lines allowed.
IsingModel parse_edge_list(const std::string& text);
std::string serialize_model(const IsingModel& model);

}  // namespace qaoa
