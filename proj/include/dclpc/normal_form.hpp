#ifndef DCLPC_NORMAL_FORM_HPP_
#define DCLPC_NORMAL_FORM_HPP_
// Semantic normal forms: for every allocation, the set of valuations at which
// a formula holds. Two formulas are equivalent over a signature exactly when
// their tables coincide.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"

namespace dclpc {

/// A set of valuations over k variables, as a bitset indexed by valuation bits.
class ValuationSet {
 public:
  ValuationSet() = default;
  explicit ValuationSet(std::size_t var_count);

  static ValuationSet all(std::size_t var_count);

  void insert(Valuation v);
  bool contains(Valuation v) const;
  std::size_t count() const;
  bool empty() const;
  bool full() const;
  std::size_t var_count() const { return vars_; }
  ValuationSet complement() const;
  ValuationSet operator|(const ValuationSet& other) const;
  /// Members in increasing bit order.
  std::vector<Valuation> members() const;

  friend bool operator==(const ValuationSet& a, const ValuationSet& b) = default;

 private:
  std::size_t vars_ = 0;
  std::vector<std::uint64_t> words_;
};

struct NormalForm {
  Signature sig;
  /// One entry per allocation, indexed by allocation_index.
  std::vector<ValuationSet> table;

  const ValuationSet& at(const Allocation& alloc) const;
  friend bool operator==(const NormalForm& a, const NormalForm& b);
};

NormalForm normal_form(const Formula& f, const Signature& sig);

/// Disjunction over allocations of (disjunction of valuation descriptions)
/// conjoined with the allocation description. Empty entries are dropped and a
/// full entry contributes the allocation description alone.
Formula nf_to_formula(const NormalForm& nf);

bool equivalent(const Formula& a, const Formula& b, const Signature& sig);

/// Conjunction of literals fixing every variable, in signature order.
Formula valuation_description(const Signature& sig, Valuation v);

/// Conjunction of controls(owner(p), p) for every variable, in signature order.
Formula allocation_description(const Signature& sig, const Allocation& alloc);

struct DescriptionCounts {
  boost::multiprecision::cpp_int valuations;    // 2^k
  boost::multiprecision::cpp_int allocations;   // n^k
  boost::multiprecision::cpp_int models;        // 2^(nk)
  boost::multiprecision::cpp_int propositions;  // 2^(2^(nk))
};

/// Exact counts of valuation descriptions, allocation descriptions, and the
/// two bounds on distinct normal forms. Throws BudgetError when a result would
/// have more than `digit_budget` binary digits, and std::invalid_argument when
/// n or k is zero.
DescriptionCounts description_counts(std::uint64_t n, std::uint64_t k, std::uint64_t digit_budget = 100000);

}  // namespace dclpc

#endif  // DCLPC_NORMAL_FORM_HPP_
