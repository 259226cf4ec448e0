#include "relpolicy/schema.hpp"

#include <sstream>

namespace relpolicy {

namespace {

std::string fact_key(const std::string& predicate, const std::vector<std::string>& args) {
  std::string key = predicate;
  for (const auto& a : args) {
    key += '\x1f';
    key += a;
  }
  return key;
}

std::uint64_t fnv1a(std::uint64_t h, const void* data, size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a_str(std::uint64_t h, const std::string& s) {
  return fnv1a(h, s.data(), s.size());
}

}  // namespace

void Language::finalize() {
  type_ids_.clear();
  pred_ids_.clear();
  action_index_.clear();
  action_symbols.clear();
  noop_id = -1;
  max_arity = 0;
  for (int i = 0; i < static_cast<int>(types.size()); ++i) type_ids_[types[i]] = i;
  for (int i = 0; i < static_cast<int>(predicates.size()); ++i) {
    pred_ids_[predicates[i].name] = i;
    max_arity = std::max(max_arity, predicates[i].arity);
    if (predicates[i].is_action) {
      action_index_[i] = static_cast<int>(action_symbols.size());
      action_symbols.push_back(i);
      if (predicates[i].name == "noop" && predicates[i].arity == 0) noop_id = i;
    }
  }
}

int Language::type_id(const std::string& t) const {
  auto it = type_ids_.find(t);
  return it == type_ids_.end() ? -1 : it->second;
}

int Language::predicate_id(const std::string& p) const {
  auto it = pred_ids_.find(p);
  return it == pred_ids_.end() ? -1 : it->second;
}

int Language::action_index(int pred_id) const {
  auto it = action_index_.find(pred_id);
  return it == action_index_.end() ? -1 : it->second;
}

std::uint64_t Language::fingerprint() const {
  std::uint64_t h = 1469598103934665603ull;
  h = fnv1a_str(h, name);
  for (const auto& t : types) h = fnv1a_str(h, t + ";");
  for (const auto& p : predicates) {
    h = fnv1a_str(h, p.name);
    h = fnv1a(h, &p.arity, sizeof(p.arity));
    for (const auto& s : p.signature) h = fnv1a_str(h, s + ",");
    char flags = static_cast<char>((p.is_function ? 1 : 0) | (p.is_action ? 2 : 0));
    h = fnv1a(h, &flags, 1);
  }
  return h;
}

std::string ValidationReport::to_string() const {
  std::ostringstream oss;
  for (const auto& v : violations) oss << err_name(v.code) << ": " << v.detail << "\n";
  return oss.str();
}

ValidationReport validate_language(const Language& lang) {
  ValidationReport report;
  auto add = [&report](Err code, const std::string& detail) {
    report.violations.push_back({code, detail});
  };
  bool has_noop = false;
  for (const auto& p : lang.predicates) {
    if (static_cast<int>(p.signature.size()) != p.arity)
      add(Err::BadSignature,
          "predicate '" + p.name + "' declares arity " + std::to_string(p.arity) + " but signature has " +
              std::to_string(p.signature.size()) + " entries");
    for (const auto& t : p.signature)
      if (lang.type_id(t) < 0)
        add(Err::UnknownType, "predicate '" + p.name + "' references undeclared type '" + t + "'");
    if (p.is_action && p.arity > 1)
      add(Err::BadActionArity, "action symbol '" + p.name + "' has arity " + std::to_string(p.arity));
    if (p.is_action && p.arity == 0 && p.name == "noop") has_noop = true;
  }
  if (!has_noop) add(Err::MissingNoop, "no nullary action symbol named 'noop'");
  return report;
}

void StateDb::rebuild_index() const {
  object_idx_.clear();
  fact_idx_.clear();
  for (int i = 0; i < static_cast<int>(objects.size()); ++i) object_idx_[objects[i].name] = i;
  for (int i = 0; i < static_cast<int>(facts.size()); ++i) fact_idx_[fact_key(facts[i].predicate, facts[i].args)] = i;
  index_valid_ = true;
}

int StateDb::object_index(const std::string& name) const {
  if (!index_valid_) rebuild_index();
  auto it = object_idx_.find(name);
  return it == object_idx_.end() ? -1 : it->second;
}

const ObjectRef* StateDb::find_object(const std::string& name) const {
  int i = object_index(name);
  return i < 0 ? nullptr : &objects[i];
}

int StateDb::fact_index(const std::string& predicate, const std::vector<std::string>& args) const {
  if (!index_valid_) rebuild_index();
  auto it = fact_idx_.find(fact_key(predicate, args));
  return it == fact_idx_.end() ? -1 : it->second;
}

StateDb declare_objects(const StateDb& db, const Language& lang, const std::vector<ObjectRef>& objects) {
  StateDb out = db;
  for (const auto& o : objects) {
    if (lang.type_id(o.type_name) < 0)
      throw Error(Err::UnknownType, "object '" + o.name + "' has undeclared type '" + o.type_name + "'");
    if (out.object_index(o.name) >= 0)
      throw Error(Err::TypeMismatch, "object '" + o.name + "' declared twice");
    out.objects.push_back(o);
  }
  return out;
}

StateDb assert_facts(const StateDb& db, const Language& lang, const std::vector<GroundFact>& facts) {
  StateDb out = db;
  for (const auto& f : facts) {
    int pid = lang.predicate_id(f.predicate);
    if (pid < 0) throw Error(Err::TypeMismatch, "unknown predicate '" + f.predicate + "'");
    const PredicateInfo& info = lang.predicate(pid);
    if (static_cast<int>(f.args.size()) != info.arity)
      throw Error(Err::TypeMismatch, "fact '" + f.predicate + "' has " + std::to_string(f.args.size()) +
                                         " arguments, expected " + std::to_string(info.arity));
    for (int k = 0; k < info.arity; ++k) {
      const ObjectRef* obj = out.find_object(f.args[k]);
      if (!obj) throw Error(Err::UnknownObject, "fact '" + f.predicate + "' references unknown object '" + f.args[k] + "'");
      if (obj->type_name != info.signature[k])
        throw Error(Err::TypeMismatch, "argument " + std::to_string(k) + " of '" + f.predicate + "' is '" +
                                           f.args[k] + "' of type '" + obj->type_name + "', expected '" +
                                           info.signature[k] + "'");
    }
    if (!info.is_function && f.value != 1.0)
      throw Error(Err::TypeMismatch, "boolean fact '" + f.predicate + "' must carry value 1.0");
    int existing = out.fact_index(f.predicate, f.args);
    if (existing >= 0) {
      // Boolean re-assertion is idempotent; function facts are last-writer-wins.
      if (info.is_function) out.facts[existing].value = f.value;
    } else {
      out.facts.push_back(f);
    }
  }
  return out;
}

StateDb retract_fact(const StateDb& db, const std::string& predicate, const std::vector<std::string>& args) {
  StateDb out;
  out.objects = db.objects;
  out.facts.reserve(db.facts.size());
  for (const auto& f : db.facts) {
    if (f.predicate == predicate && f.args == args) continue;
    out.facts.push_back(f);
  }
  return out;
}

std::vector<GroundAction> enumerate_actions(const StateDb& db, const Language& lang) {
  std::vector<GroundAction> actions;
  for (int pid : lang.action_symbols) {
    const PredicateInfo& info = lang.predicate(pid);
    if (info.arity == 0) {
      actions.push_back({info.name, std::nullopt});
    } else {
      for (const auto& obj : db.objects)
        if (obj.type_name == info.signature[0]) actions.push_back({info.name, obj.name});
    }
  }
  return actions;
}

}  // namespace relpolicy
