#ifndef DCLPC_MODEL_HPP_
#define DCLPC_MODEL_HPP_

// Direct models: a signature, an allocation of every variable to exactly one
// agent, and a valuation.
//
// Agents and variables are addressed by their index in the signature's
// canonical (sorted) order. A valuation is a bit pattern with bit v holding
// the value of variable v; an allocation is a total owner map. Both are small
// value types, so models are cheap to copy and compare.

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dclpc/formula.hpp"

namespace dclpc {

/// Agents and variables a query is evaluated over. Both sets are non-empty and
/// kept in sorted order; copies share the underlying storage.
class Signature {
 public:
  static constexpr std::size_t kMaxAgents = 64;
  static constexpr std::size_t kMaxVars = 62;

  /// Sorts and deduplicates. Throws std::invalid_argument on an empty set,
  /// a malformed identifier, or a set larger than the limits above.
  Signature(std::vector<AgentId> agents, std::vector<PropId> vars);

  std::span<const AgentId> agents() const { return data_->agents; }
  std::span<const PropId> vars() const { return data_->vars; }
  std::size_t agent_count() const { return data_->agents.size(); }
  std::size_t var_count() const { return data_->vars.size(); }

  std::optional<std::size_t> find_agent(std::string_view name) const;
  std::optional<std::size_t> find_var(std::string_view name) const;
  /// Throw SignatureError when the name is unknown.
  std::size_t agent_index(std::string_view name) const;
  std::size_t var_index(std::string_view name) const;

  const AgentId& agent(std::size_t index) const { return data_->agents.at(index); }
  const PropId& var(std::size_t index) const { return data_->vars.at(index); }

  /// Bit mask over agent indices for a coalition; throws on unknown agents.
  std::uint64_t agent_mask(const Coalition& coalition) const;
  /// Mask with one bit per variable.
  std::uint64_t var_mask() const;

  /// n^k; throws BudgetError if it does not fit in 64 bits.
  std::uint64_t allocation_count() const;
  /// 2^k.
  std::uint64_t valuation_count() const { return std::uint64_t{1} << var_count(); }

  /// Whether every identifier of the syntactic signature belongs here.
  bool covers(const SyntacticSignature& s) const;
  /// Throws SignatureError naming the first identifier outside the signature.
  void require_covers(const SyntacticSignature& s, std::string_view what) const;

  friend bool operator==(const Signature& a, const Signature& b);

 private:
  struct Data {
    std::vector<AgentId> agents;
    std::vector<PropId> vars;
  };
  std::shared_ptr<const Data> data_;
};

/// Checks the identifier rule shared by agents and variables.
bool is_identifier(std::string_view name);

/// Truth values for all variables of a signature.
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(std::uint64_t bits) : bits_(bits) {}

  bool test(std::size_t var) const { return (bits_ >> var) & 1U; }
  Valuation with(std::size_t var, bool value) const {
    return Valuation(value ? (bits_ | (std::uint64_t{1} << var)) : (bits_ & ~(std::uint64_t{1} << var)));
  }
  std::uint64_t bits() const { return bits_; }

  /// Agreement outside `mask`: the two valuations differ at most on the
  /// variables whose bits are set.
  bool same_modulo(Valuation other, std::uint64_t mask) const {
    return ((bits_ ^ other.bits_) & ~mask) == 0;
  }

  friend auto operator<=>(const Valuation&, const Valuation&) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Owner of every variable. The partition view (variables per agent) is
/// derived through owned_mask.
class Allocation {
 public:
  Allocation() = default;
  explicit Allocation(std::vector<std::uint8_t> owners) : owners_(std::move(owners)) {}

  std::size_t owner(std::size_t var) const { return owners_.at(var); }
  std::size_t var_count() const { return owners_.size(); }
  std::span<const std::uint8_t> owners() const { return owners_; }
  Allocation with_owner(std::size_t var, std::size_t agent) const;

  /// Variables owned by `agent`.
  std::uint64_t owned_mask(std::size_t agent) const;
  /// Variables owned by any agent whose bit is set in `agents`.
  std::uint64_t owned_mask_of(std::uint64_t agents) const;

  friend auto operator<=>(const Allocation&, const Allocation&) = default;

 private:
  std::vector<std::uint8_t> owners_;
};

/// Mixed-radix position of an allocation among all n^k allocations (the first
/// variable is the least significant digit), and its inverse.
std::uint64_t allocation_index(const Signature& sig, const Allocation& alloc);
Allocation allocation_at(const Signature& sig, std::uint64_t index);

class DirectModel {
 public:
  /// Throws std::invalid_argument unless `alloc` is total over the variables,
  /// names only known agents, and `val` sets no bit beyond the variables.
  DirectModel(Signature sig, Allocation alloc, Valuation val);

  /// Builds a model from names. Every variable must have exactly one owner.
  static DirectModel from_names(Signature sig, const std::map<PropId, AgentId>& owner,
                                const std::vector<PropId>& true_vars);

  const Signature& signature() const { return sig_; }
  const Allocation& allocation() const { return alloc_; }
  const Valuation& valuation() const { return val_; }

  const AgentId& owner(std::string_view var) const;
  bool value(std::string_view var) const;
  /// The partition cell of one agent, in canonical order.
  std::vector<PropId> owned_by(std::string_view agent) const;
  /// Variables controlled by a coalition under this model's allocation.
  std::uint64_t controlled_mask(const Coalition& coalition) const;

  DirectModel with_allocation(Allocation alloc) const { return {sig_, std::move(alloc), val_}; }
  DirectModel with_valuation(Valuation val) const { return {sig_, alloc_, val}; }

  friend bool operator==(const DirectModel& a, const DirectModel& b);
  /// Orders by allocation index, then valuation; both models must share a
  /// signature.
  friend bool operator<(const DirectModel& a, const DirectModel& b);

 private:
  Signature sig_;
  Allocation alloc_;
  Valuation val_;
};

/// A truth assignment to exactly the variables a coalition controls.
struct CValuation {
  Coalition coalition;
  std::map<PropId, bool> values;
};

/// M with the coalition's variables overwritten. Throws std::invalid_argument
/// when the domain of `cval` differs from the coalition's variables in M.
DirectModel apply_cvaluation(const DirectModel& model, const CValuation& cval);

/// Result of `from` handing `var` to `to`; empty when `from` does not own it.
/// Throws SignatureError on unknown identifiers.
std::optional<DirectModel> atomic_transfer(const DirectModel& model, std::string_view from,
                                           std::string_view var, std::string_view to);

/// |agents| + |vars|.
std::size_t model_size(const DirectModel& model);

/// Every (allocation, valuation) pair of a signature, allocation-major. The
/// range is random-access by position, so it can be split across workers.
class ModelSpace {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = DirectModel;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = DirectModel;

    iterator() = default;
    iterator(const ModelSpace* space, std::uint64_t pos) : space_(space), pos_(pos) {}
    DirectModel operator*() const { return space_->at(pos_); }
    iterator& operator++() {
      ++pos_;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++pos_;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

   private:
    const ModelSpace* space_ = nullptr;
    std::uint64_t pos_ = 0;
  };

  explicit ModelSpace(Signature sig);

  std::uint64_t size() const { return allocations_ * valuations_; }
  DirectModel at(std::uint64_t position) const;
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }
  const Signature& signature() const { return sig_; }

 private:
  Signature sig_;
  std::uint64_t allocations_;
  std::uint64_t valuations_;
};

/// n^k * 2^k models, in deterministic order.
ModelSpace enumerate_models(const Signature& sig);

}  // namespace dclpc

#endif  // DCLPC_MODEL_HPP_
