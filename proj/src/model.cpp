#include "dclpc/model.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "dclpc/errors.hpp"

namespace dclpc {

namespace {

std::vector<std::string> canonical(std::vector<std::string> names, const char* what) {
  if (names.empty()) throw std::invalid_argument(std::string("signature has no ") + what);
  for (const auto& n : names) {
    if (!is_identifier(n)) throw std::invalid_argument("malformed identifier '" + n + "'");
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

std::optional<std::size_t> find_sorted(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::lower_bound(names.begin(), names.end(), name,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

}  // namespace

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
  });
}

// --- Signature -------------------------------------------------------------

Signature::Signature(std::vector<AgentId> agents, std::vector<PropId> vars) {
  auto data = std::make_shared<Data>();
  data->agents = canonical(std::move(agents), "agents");
  data->vars = canonical(std::move(vars), "variables");
  if (data->agents.size() > kMaxAgents) throw std::invalid_argument("too many agents");
  if (data->vars.size() > kMaxVars) throw std::invalid_argument("too many variables");
  data_ = std::move(data);
}

std::optional<std::size_t> Signature::find_agent(std::string_view name) const {
  return find_sorted(data_->agents, name);
}

std::optional<std::size_t> Signature::find_var(std::string_view name) const {
  return find_sorted(data_->vars, name);
}

std::size_t Signature::agent_index(std::string_view name) const {
  if (auto idx = find_agent(name)) return *idx;
  throw SignatureError("unknown agent '" + std::string(name) + "'");
}

std::size_t Signature::var_index(std::string_view name) const {
  if (auto idx = find_var(name)) return *idx;
  throw SignatureError("unknown variable '" + std::string(name) + "'");
}

std::uint64_t Signature::agent_mask(const Coalition& coalition) const {
  std::uint64_t mask = 0;
  for (const auto& a : coalition) mask |= std::uint64_t{1} << agent_index(a);
  return mask;
}

std::uint64_t Signature::var_mask() const {
  return (std::uint64_t{1} << var_count()) - 1;
}

std::uint64_t Signature::allocation_count() const {
  std::uint64_t count = 1;
  for (std::size_t v = 0; v < var_count(); ++v) {
    if (count > std::numeric_limits<std::uint64_t>::max() / agent_count()) {
      throw BudgetError("number of allocations exceeds 64 bits");
    }
    count *= agent_count();
  }
  return count;
}

bool Signature::covers(const SyntacticSignature& s) const {
  return std::all_of(s.agents.begin(), s.agents.end(), [&](const auto& a) { return find_agent(a).has_value(); }) &&
         std::all_of(s.vars.begin(), s.vars.end(), [&](const auto& v) { return find_var(v).has_value(); });
}

void Signature::require_covers(const SyntacticSignature& s, std::string_view what) const {
  for (const auto& v : s.vars) {
    if (!find_var(v)) {
      throw SignatureError(std::string(what) + " mentions variable '" + v + "' outside the signature");
    }
  }
  for (const auto& a : s.agents) {
    if (!find_agent(a)) {
      throw SignatureError(std::string(what) + " mentions agent '" + a + "' outside the signature");
    }
  }
}

bool operator==(const Signature& a, const Signature& b) {
  return a.data_ == b.data_ || (a.data_->agents == b.data_->agents && a.data_->vars == b.data_->vars);
}

// --- Allocation ------------------------------------------------------------

Allocation Allocation::with_owner(std::size_t var, std::size_t agent) const {
  Allocation copy = *this;
  copy.owners_.at(var) = static_cast<std::uint8_t>(agent);
  return copy;
}

std::uint64_t Allocation::owned_mask(std::size_t agent) const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < owners_.size(); ++v) {
    if (owners_[v] == agent) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::uint64_t Allocation::owned_mask_of(std::uint64_t agents) const {
  std::uint64_t mask = 0;
  for (std::size_t v = 0; v < owners_.size(); ++v) {
    if ((agents >> owners_[v]) & 1U) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::uint64_t allocation_index(const Signature& sig, const Allocation& alloc) {
  std::uint64_t index = 0;
  for (std::size_t v = alloc.var_count(); v-- > 0;) index = index * sig.agent_count() + alloc.owner(v);
  return index;
}

Allocation allocation_at(const Signature& sig, std::uint64_t index) {
  std::vector<std::uint8_t> owners(sig.var_count());
  for (auto& o : owners) {
    o = static_cast<std::uint8_t>(index % sig.agent_count());
    index /= sig.agent_count();
  }
  return Allocation(std::move(owners));
}

// --- DirectModel -----------------------------------------------------------

DirectModel::DirectModel(Signature sig, Allocation alloc, Valuation val)
    : sig_(std::move(sig)), alloc_(std::move(alloc)), val_(val) {
  if (alloc_.var_count() != sig_.var_count()) {
    throw std::invalid_argument("allocation is not total over the variables");
  }
  for (auto o : alloc_.owners()) {
    if (o >= sig_.agent_count()) throw std::invalid_argument("allocation names an unknown agent");
  }
  if ((val_.bits() & ~sig_.var_mask()) != 0) {
    throw std::invalid_argument("valuation sets bits beyond the variables");
  }
}

DirectModel DirectModel::from_names(Signature sig, const std::map<PropId, AgentId>& owner,
                                    const std::vector<PropId>& true_vars) {
  std::vector<std::uint8_t> owners(sig.var_count());
  for (std::size_t v = 0; v < sig.var_count(); ++v) {
    auto it = owner.find(sig.var(v));
    if (it == owner.end()) throw std::invalid_argument("variable '" + sig.var(v) + "' has no owner");
    owners[v] = static_cast<std::uint8_t>(sig.agent_index(it->second));
  }
  for (const auto& [var, agent] : owner) sig.var_index(var);
  std::uint64_t bits = 0;
  for (const auto& t : true_vars) bits |= std::uint64_t{1} << sig.var_index(t);
  return DirectModel(std::move(sig), Allocation(std::move(owners)), Valuation(bits));
}

const AgentId& DirectModel::owner(std::string_view var) const {
  return sig_.agent(alloc_.owner(sig_.var_index(var)));
}

bool DirectModel::value(std::string_view var) const { return val_.test(sig_.var_index(var)); }

std::vector<PropId> DirectModel::owned_by(std::string_view agent) const {
  const std::size_t a = sig_.agent_index(agent);
  std::vector<PropId> out;
  for (std::size_t v = 0; v < sig_.var_count(); ++v) {
    if (alloc_.owner(v) == a) out.push_back(sig_.var(v));
  }
  return out;
}

std::uint64_t DirectModel::controlled_mask(const Coalition& coalition) const {
  return alloc_.owned_mask_of(sig_.agent_mask(coalition));
}

bool operator==(const DirectModel& a, const DirectModel& b) {
  return a.val_ == b.val_ && a.alloc_ == b.alloc_ && a.sig_ == b.sig_;
}

bool operator<(const DirectModel& a, const DirectModel& b) {
  const auto ia = allocation_index(a.sig_, a.alloc_);
  const auto ib = allocation_index(b.sig_, b.alloc_);
  if (ia != ib) return ia < ib;
  return a.val_ < b.val_;
}

// --- Operations ------------------------------------------------------------

DirectModel apply_cvaluation(const DirectModel& model, const CValuation& cval) {
  const Signature& sig = model.signature();
  const std::uint64_t domain = model.controlled_mask(cval.coalition);
  std::uint64_t given = 0;
  Valuation val = model.valuation();
  for (const auto& [var, value] : cval.values) {
    const std::size_t v = sig.var_index(var);
    given |= std::uint64_t{1} << v;
    val = val.with(v, value);
  }
  if (given != domain) {
    throw std::invalid_argument("C-valuation domain differs from the variables the coalition controls");
  }
  return model.with_valuation(val);
}

std::optional<DirectModel> atomic_transfer(const DirectModel& model, std::string_view from,
                                           std::string_view var, std::string_view to) {
  const Signature& sig = model.signature();
  const std::size_t i = sig.agent_index(from);
  const std::size_t p = sig.var_index(var);
  const std::size_t j = sig.agent_index(to);
  if (model.allocation().owner(p) != i) return std::nullopt;
  if (i == j) return model;
  return model.with_allocation(model.allocation().with_owner(p, j));
}

std::size_t model_size(const DirectModel& model) {
  return model.signature().agent_count() + model.signature().var_count();
}

ModelSpace::ModelSpace(Signature sig)
    : sig_(std::move(sig)), allocations_(sig_.allocation_count()), valuations_(sig_.valuation_count()) {
  if (allocations_ > std::numeric_limits<std::uint64_t>::max() / valuations_) {
    throw BudgetError("model space exceeds 64 bits");
  }
}

DirectModel ModelSpace::at(std::uint64_t position) const {
  return DirectModel(sig_, allocation_at(sig_, position / valuations_), Valuation(position % valuations_));
}

ModelSpace enumerate_models(const Signature& sig) { return ModelSpace(sig); }

}  // namespace dclpc
