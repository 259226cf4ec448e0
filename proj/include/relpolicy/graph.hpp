#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "relpolicy/schema.hpp"

namespace relpolicy {

/// Legality of (action symbol, object-or-null) pairs. Rows follow action
/// symbol declaration order; columns are objects in insertion order with the
/// null object as the final column.
struct ActionMask {
  int num_symbols = 0;
  int num_cols = 0;  // num_objects + 1
  std::vector<std::uint8_t> legal;  // row-major

  bool at(int symbol, int col) const { return legal[static_cast<size_t>(symbol) * num_cols + col] != 0; }
  void set(int symbol, int col, bool v) { legal[static_cast<size_t>(symbol) * num_cols + col] = v ? 1 : 0; }
  int null_col() const { return num_cols - 1; }

  bool operator==(const ActionMask&) const = default;
};

/// Bipartite factor-graph encoding of a state database: object nodes carry
/// type ids, factor nodes carry (predicate id, value) for facts of arity >= 1,
/// and each edge links a factor to one argument object, labeled with the
/// argument position. Arity-0 facts are routed to the nullary lists instead
/// of becoming factor nodes. Object names are kept for action decoding only
/// and never feed any numeric computation.
struct FactorGraph {
  int num_types = 0;
  int num_predicates = 0;
  int num_actions = 0;
  std::uint64_t language_fingerprint = 0;

  std::vector<int> object_types;
  std::vector<std::string> object_names;

  std::vector<int> factor_preds;
  std::vector<double> factor_values;

  std::vector<int> edge_factor;
  std::vector<int> edge_object;
  std::vector<int> edge_position;

  std::vector<int> nullary_preds;
  std::vector<double> nullary_values;

  ActionMask mask;

  int num_objects() const { return static_cast<int>(object_types.size()); }
  int num_factors() const { return static_cast<int>(factor_preds.size()); }
  int num_edges() const { return static_cast<int>(edge_factor.size()); }

  bool operator==(const FactorGraph&) const = default;
};

/// Disjoint union of several factor graphs built from the same language.
/// Node indices are offset by cumulative counts; graph_assignment vectors
/// record each node's source graph so the union can be sliced back apart.
struct Batch {
  int num_graphs = 0;
  int num_types = 0;
  int num_predicates = 0;
  int num_actions = 0;
  std::uint64_t language_fingerprint = 0;

  std::vector<int> object_types;
  std::vector<int> object_graph;
  std::vector<std::string> object_names;

  std::vector<int> factor_preds;
  std::vector<double> factor_values;
  std::vector<int> factor_graph;

  std::vector<int> edge_factor;
  std::vector<int> edge_object;
  std::vector<int> edge_position;

  std::vector<int> nullary_preds;
  std::vector<double> nullary_values;
  std::vector<int> nullary_graph;

  std::vector<int> objects_per_graph;
  std::vector<int> factors_per_graph;
  std::vector<int> nullary_per_graph;
  std::vector<int> object_offset;  // prefix sums, size num_graphs
  std::vector<int> factor_offset;

  std::vector<ActionMask> masks;  // one per graph

  int num_objects() const { return static_cast<int>(object_types.size()); }
  int num_factors() const { return static_cast<int>(factor_preds.size()); }
  int num_edges() const { return static_cast<int>(edge_factor.size()); }

  std::vector<FactorGraph> unbatch() const;
};

/// Builds the factor graph for a state. Pure function of (db, lang).
FactorGraph build_graph(const StateDb& db, const Language& lang);

/// Concatenates graphs into one disconnected graph. Throws MixedLanguage if
/// the graphs disagree on their language tables.
Batch make_batch(std::span<const FactorGraph> graphs);
Batch make_batch(const std::vector<FactorGraph>& graphs);

/// Wraps a single graph as a one-element batch.
Batch single_batch(const FactorGraph& g);

/// Human-readable rendering of nodes and edges, for test fixtures and debugging.
std::string to_text(const FactorGraph& g);

}  // namespace relpolicy
