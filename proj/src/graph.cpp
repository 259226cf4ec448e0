#include "relpolicy/graph.hpp"

#include <sstream>

namespace relpolicy {

FactorGraph build_graph(const StateDb& db, const Language& lang) {
  FactorGraph g;
  g.num_types = static_cast<int>(lang.types.size());
  g.num_predicates = static_cast<int>(lang.predicates.size());
  g.num_actions = lang.num_actions();
  g.language_fingerprint = lang.fingerprint();

  g.object_types.reserve(db.objects.size());
  g.object_names.reserve(db.objects.size());
  for (const auto& obj : db.objects) {
    g.object_types.push_back(lang.type_id(obj.type_name));
    g.object_names.push_back(obj.name);
  }

  for (const auto& f : db.facts) {
    int pid = lang.predicate_id(f.predicate);
    const PredicateInfo& info = lang.predicate(pid);
    if (info.arity == 0) {
      g.nullary_preds.push_back(pid);
      g.nullary_values.push_back(f.value);
      continue;
    }
    int fidx = g.num_factors();
    g.factor_preds.push_back(pid);
    g.factor_values.push_back(f.value);
    for (int pos = 0; pos < info.arity; ++pos) {
      g.edge_factor.push_back(fidx);
      g.edge_object.push_back(db.object_index(f.args[pos]));
      g.edge_position.push_back(pos);
    }
  }

  int n = g.num_objects();
  g.mask.num_symbols = g.num_actions;
  g.mask.num_cols = n + 1;
  g.mask.legal.assign(static_cast<size_t>(g.num_actions) * (n + 1), 0);
  for (int a = 0; a < g.num_actions; ++a) {
    const PredicateInfo& info = lang.predicate(lang.action_symbols[a]);
    if (info.arity == 0) {
      g.mask.set(a, n, true);
    } else {
      int tid = lang.type_id(info.signature[0]);
      for (int u = 0; u < n; ++u)
        if (g.object_types[u] == tid) g.mask.set(a, u, true);
    }
  }
  return g;
}

Batch make_batch(std::span<const FactorGraph> graphs) {
  Batch b;
  b.num_graphs = static_cast<int>(graphs.size());
  if (!graphs.empty()) {
    b.num_types = graphs[0].num_types;
    b.num_predicates = graphs[0].num_predicates;
    b.num_actions = graphs[0].num_actions;
    b.language_fingerprint = graphs[0].language_fingerprint;
  }
  int obj_ofs = 0;
  int fac_ofs = 0;
  for (int gi = 0; gi < b.num_graphs; ++gi) {
    const FactorGraph& g = graphs[gi];
    if (g.language_fingerprint != b.language_fingerprint || g.num_types != b.num_types ||
        g.num_predicates != b.num_predicates || g.num_actions != b.num_actions)
      throw Error(Err::MixedLanguage, "graph " + std::to_string(gi) + " was built from a different language");

    b.object_offset.push_back(obj_ofs);
    b.factor_offset.push_back(fac_ofs);
    b.objects_per_graph.push_back(g.num_objects());
    b.factors_per_graph.push_back(g.num_factors());
    b.nullary_per_graph.push_back(static_cast<int>(g.nullary_preds.size()));

    for (int u = 0; u < g.num_objects(); ++u) {
      b.object_types.push_back(g.object_types[u]);
      b.object_names.push_back(g.object_names[u]);
      b.object_graph.push_back(gi);
    }
    for (int v = 0; v < g.num_factors(); ++v) {
      b.factor_preds.push_back(g.factor_preds[v]);
      b.factor_values.push_back(g.factor_values[v]);
      b.factor_graph.push_back(gi);
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      b.edge_factor.push_back(g.edge_factor[e] + fac_ofs);
      b.edge_object.push_back(g.edge_object[e] + obj_ofs);
      b.edge_position.push_back(g.edge_position[e]);
    }
    for (size_t k = 0; k < g.nullary_preds.size(); ++k) {
      b.nullary_preds.push_back(g.nullary_preds[k]);
      b.nullary_values.push_back(g.nullary_values[k]);
      b.nullary_graph.push_back(gi);
    }
    b.masks.push_back(g.mask);
    obj_ofs += g.num_objects();
    fac_ofs += g.num_factors();
  }
  return b;
}

Batch make_batch(const std::vector<FactorGraph>& graphs) {
  return make_batch(std::span<const FactorGraph>(graphs.data(), graphs.size()));
}

Batch single_batch(const FactorGraph& g) {
  return make_batch(std::span<const FactorGraph>(&g, 1));
}

std::vector<FactorGraph> Batch::unbatch() const {
  std::vector<FactorGraph> out(num_graphs);
  for (int gi = 0; gi < num_graphs; ++gi) {
    FactorGraph& g = out[gi];
    g.num_types = num_types;
    g.num_predicates = num_predicates;
    g.num_actions = num_actions;
    g.language_fingerprint = language_fingerprint;
    g.mask = masks[gi];
  }
  for (int i = 0; i < num_objects(); ++i) {
    FactorGraph& g = out[object_graph[i]];
    g.object_types.push_back(object_types[i]);
    g.object_names.push_back(object_names[i]);
  }
  for (int i = 0; i < num_factors(); ++i) {
    FactorGraph& g = out[factor_graph[i]];
    g.factor_preds.push_back(factor_preds[i]);
    g.factor_values.push_back(factor_values[i]);
  }
  for (int e = 0; e < num_edges(); ++e) {
    int gi = factor_graph[edge_factor[e]];
    FactorGraph& g = out[gi];
    g.edge_factor.push_back(edge_factor[e] - factor_offset[gi]);
    g.edge_object.push_back(edge_object[e] - object_offset[gi]);
    g.edge_position.push_back(edge_position[e]);
  }
  for (size_t k = 0; k < nullary_preds.size(); ++k) {
    FactorGraph& g = out[nullary_graph[k]];
    g.nullary_preds.push_back(nullary_preds[k]);
    g.nullary_values.push_back(nullary_values[k]);
  }
  return out;
}

std::string to_text(const FactorGraph& g) {
  std::ostringstream oss;
  oss << "objects(" << g.num_objects() << "):";
  for (int u = 0; u < g.num_objects(); ++u)
    oss << " " << u << ":" << g.object_names[u] << "/t" << g.object_types[u];
  oss << "\nfactors(" << g.num_factors() << "):";
  for (int v = 0; v < g.num_factors(); ++v)
    oss << " " << v << ":p" << g.factor_preds[v] << "=" << g.factor_values[v];
  oss << "\nedges(" << g.num_edges() << "):";
  for (int e = 0; e < g.num_edges(); ++e)
    oss << " (f" << g.edge_factor[e] << ",u" << g.edge_object[e] << ",pos" << g.edge_position[e] << ")";
  oss << "\nnullary(" << g.nullary_preds.size() << "):";
  for (size_t k = 0; k < g.nullary_preds.size(); ++k)
    oss << " p" << g.nullary_preds[k] << "=" << g.nullary_values[k];
  oss << "\n";
  return oss.str();
}

}  // namespace relpolicy
