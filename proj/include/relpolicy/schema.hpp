#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "relpolicy/errors.hpp"

namespace relpolicy {

struct PredicateInfo {
  std::string name;
  int arity = 0;
  std::vector<std::string> signature;  // one type name per argument
  bool is_function = false;
  bool is_action = false;

  bool operator==(const PredicateInfo&) const = default;
};

/// Typed first-order vocabulary of a problem domain: object types, predicate
/// and function symbols, and the subset of predicates usable as actions.
/// Declaration order of predicates and types is significant; it fixes ids,
/// action enumeration order and embedding table rows.
struct Language {
  std::string name;
  std::vector<std::string> types;
  std::vector<PredicateInfo> predicates;

  // Derived by finalize().
  std::vector<int> action_symbols;  // predicate ids, declaration order
  int noop_id = -1;                 // predicate id of the nullary "noop" action
  int max_arity = 0;

  void finalize();

  int type_id(const std::string& t) const;
  int predicate_id(const std::string& p) const;
  const PredicateInfo& predicate(int id) const { return predicates.at(id); }
  int num_actions() const { return static_cast<int>(action_symbols.size()); }
  /// Index into action_symbols, or -1 when the predicate is not an action.
  int action_index(int pred_id) const;
  std::uint64_t fingerprint() const;

 private:
  std::unordered_map<std::string, int> type_ids_;
  std::unordered_map<std::string, int> pred_ids_;
  std::unordered_map<int, int> action_index_;
};

struct ObjectRef {
  std::string name;
  std::string type_name;

  bool operator==(const ObjectRef&) const = default;
};

/// A ground atom or function valuation. Boolean atoms carry value 1.0.
struct GroundFact {
  std::string predicate;
  std::vector<std::string> args;
  double value = 1.0;

  bool operator==(const GroundFact&) const = default;
};

/// Set of true ground facts over named objects (closed world: a boolean fact
/// absent from the database is false). Treated as an immutable value:
/// mutation helpers return new databases.
struct StateDb {
  std::vector<ObjectRef> objects;  // insertion order is significant
  std::vector<GroundFact> facts;   // unique by (predicate, args)

  int object_index(const std::string& name) const;
  const ObjectRef* find_object(const std::string& name) const;
  int fact_index(const std::string& predicate, const std::vector<std::string>& args) const;
  bool has_fact(const std::string& predicate, const std::vector<std::string>& args) const {
    return fact_index(predicate, args) >= 0;
  }

  bool operator==(const StateDb& o) const { return objects == o.objects && facts == o.facts; }

 private:
  void rebuild_index() const;
  mutable std::unordered_map<std::string, int> object_idx_;
  mutable std::unordered_map<std::string, int> fact_idx_;
  mutable bool index_valid_ = false;
};

/// The distinguished null object used as the argument slot of nullary actions.
inline constexpr const char* kNullObject = "";

struct GroundAction {
  std::string symbol;
  std::optional<std::string> object;  // nullopt = null object (nullary action)

  bool operator==(const GroundAction&) const = default;
};

struct Violation {
  Err code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

/// Checks every Language invariant and reports all violations.
ValidationReport validate_language(const Language& lang);

/// Returns a new database with `objects` added (duplicates by name rejected).
StateDb declare_objects(const StateDb& db, const Language& lang, const std::vector<ObjectRef>& objects);

/// Returns a new database with `facts` asserted. Re-asserting a boolean fact
/// is idempotent; re-asserting a function fact replaces its value.
StateDb assert_facts(const StateDb& db, const Language& lang, const std::vector<GroundFact>& facts);

/// Returns a new database with a boolean fact removed (no-op when absent).
StateDb retract_fact(const StateDb& db, const std::string& predicate, const std::vector<std::string>& args);

/// All legal ground actions in deterministic order: action symbols in
/// declaration order, nullary symbols paired with the null object, unary
/// symbols paired with every type-matching object in insertion order.
std::vector<GroundAction> enumerate_actions(const StateDb& db, const Language& lang);

}  // namespace relpolicy
