#include "dclpc/normal_form.hpp"

#include <bit>
#include <stdexcept>

#include "dclpc/errors.hpp"
#include "dclpc/semantics.hpp"

namespace dclpc {

namespace {

std::size_t word_count(std::size_t vars) { return ((std::size_t{1} << vars) + 63) / 64; }

// Bits of the last word that correspond to real valuations.
std::uint64_t tail_mask(std::size_t vars) {
  const std::size_t total = std::size_t{1} << vars;
  const std::size_t rem = total % 64;
  return rem == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << rem) - 1;
}

}  // namespace

ValuationSet::ValuationSet(std::size_t var_count) : vars_(var_count) {
  if (var_count > 30) throw BudgetError("too many variables for a valuation table");
  words_.assign(word_count(var_count), 0);
}

ValuationSet ValuationSet::all(std::size_t var_count) { return ValuationSet(var_count).complement(); }

void ValuationSet::insert(Valuation v) { words_.at(v.bits() / 64) |= std::uint64_t{1} << (v.bits() % 64); }

bool ValuationSet::contains(Valuation v) const { return (words_.at(v.bits() / 64) >> (v.bits() % 64)) & 1U; }

std::size_t ValuationSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ValuationSet::empty() const { return count() == 0; }

bool ValuationSet::full() const { return count() == (std::size_t{1} << vars_); }

ValuationSet ValuationSet::complement() const {
  ValuationSet out = *this;
  for (auto& w : out.words_) w = ~w;
  if (!out.words_.empty()) out.words_.back() &= tail_mask(vars_);
  return out;
}

ValuationSet ValuationSet::operator|(const ValuationSet& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("valuation sets over different variable counts");
  ValuationSet out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] |= other.words_[i];
  return out;
}

std::vector<Valuation> ValuationSet::members() const {
  std::vector<Valuation> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << vars_); ++b) {
    if (contains(Valuation(b))) out.emplace_back(b);
  }
  return out;
}

const ValuationSet& NormalForm::at(const Allocation& alloc) const { return table.at(allocation_index(sig, alloc)); }

bool operator==(const NormalForm& a, const NormalForm& b) { return a.sig == b.sig && a.table == b.table; }

NormalForm normal_form(const Formula& f, const Signature& sig) {
  sig.require_covers(signature_of(f), "formula");
  NormalForm nf{sig, {}};
  const std::uint64_t allocs = sig.allocation_count();
  nf.table.reserve(allocs);
  for (std::uint64_t a = 0; a < allocs; ++a) {
    const Allocation alloc = allocation_at(sig, a);
    ValuationSet entry(sig.var_count());
    for (std::uint64_t v = 0; v < sig.valuation_count(); ++v) {
      if (eval(DirectModel(sig, alloc, Valuation(v)), f)) entry.insert(Valuation(v));
    }
    nf.table.push_back(std::move(entry));
  }
  return nf;
}

Formula valuation_description(const Signature& sig, Valuation v) {
  std::vector<Formula> literals;
  for (std::size_t i = 0; i < sig.var_count(); ++i) {
    Formula a = Formula::atom(sig.var(i));
    literals.push_back(v.test(i) ? a : Formula::negation(a));
  }
  return conjoin(literals);
}

Formula allocation_description(const Signature& sig, const Allocation& alloc) {
  std::vector<Formula> facts;
  for (std::size_t i = 0; i < sig.var_count(); ++i) {
    facts.push_back(controls(sig.agent(alloc.owner(i)), Formula::atom(sig.var(i))));
  }
  return conjoin(facts);
}

Formula nf_to_formula(const NormalForm& nf) {
  std::vector<Formula> branches;
  for (std::size_t a = 0; a < nf.table.size(); ++a) {
    const ValuationSet& entry = nf.table[a];
    if (entry.empty()) continue;
    Formula desc = allocation_description(nf.sig, allocation_at(nf.sig, a));
    if (entry.full()) {
      branches.push_back(desc);
      continue;
    }
    std::vector<Formula> worlds;
    for (Valuation v : entry.members()) worlds.push_back(valuation_description(nf.sig, v));
    branches.push_back(conj(disjoin(worlds), desc));
  }
  return disjoin(branches);
}

bool equivalent(const Formula& a, const Formula& b, const Signature& sig) {
  return normal_form(a, sig) == normal_form(b, sig);
}

DescriptionCounts description_counts(std::uint64_t n, std::uint64_t k, std::uint64_t digit_budget) {
  using boost::multiprecision::cpp_int;
  if (n == 0 || k == 0) throw std::invalid_argument("agent and variable counts must be positive");
  // Bit length of n^k is at most k * bit_width(n); 2^(nk) has nk + 1 bits.
  const auto nk = cpp_int(n) * k;
  if (cpp_int(k) * std::bit_width(n) > digit_budget || nk + 1 > digit_budget) {
    throw BudgetError("description counts exceed the digit budget");
  }
  DescriptionCounts out;
  out.valuations = cpp_int(1) << static_cast<unsigned>(k);
  out.allocations = boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(k));
  const auto nk_small = static_cast<std::uint64_t>(nk);
  out.models = cpp_int(1) << static_cast<unsigned>(nk_small);
  // 2^(nk) must itself be a feasible bit count for the last result.
  if (out.models + 1 > digit_budget) throw BudgetError("description counts exceed the digit budget");
  out.propositions = cpp_int(1) << static_cast<unsigned>(out.models);
  return out;
}

}  // namespace dclpc
