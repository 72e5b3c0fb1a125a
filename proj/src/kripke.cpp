#include "dclpc/kripke.hpp"

#include <map>
#include <utility>
#include <vector>

#include "dclpc/semantics.hpp"

namespace dclpc {

bool same_modulo(Valuation a, Valuation b, std::uint64_t mask) { return a.same_modulo(b, mask); }

bool horizontally_related(const Signature& sig, const Allocation& alloc, const AgentId& agent, Valuation a,
                          Valuation b) {
  return same_modulo(a, b, alloc.owned_mask(sig.agent_index(agent)));
}

bool vertically_related(const Signature& sig, const Allocation& from, const Allocation& to, const AgentId& giver,
                        const PropId& var, const AgentId& receiver) {
  const std::size_t i = sig.agent_index(giver);
  const std::size_t v = sig.var_index(var);
  const std::size_t j = sig.agent_index(receiver);
  if (from.owner(v) != i) return false;
  for (std::size_t w = 0; w < from.var_count(); ++w) {
    const std::size_t expected = w == v ? j : from.owner(w);
    if (to.owner(w) != expected) return false;
  }
  return true;
}

namespace {

// Square boolean matrix over allocation indices.
class Relation {
 public:
  explicit Relation(std::size_t n) : n_(n), cells_(n * n, 0) {}
  bool get(std::size_t a, std::size_t b) const { return cells_[a * n_ + b] != 0; }
  void set(std::size_t a, std::size_t b) { cells_[a * n_ + b] = 1; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

class KripkeEvaluator {
 public:
  explicit KripkeEvaluator(const Signature& sig) : sig_(sig), n_(sig.allocation_count()) {
    allocs_.reserve(n_);
    for (std::uint64_t a = 0; a < n_; ++a) allocs_.push_back(allocation_at(sig, a));
  }

  bool holds(std::size_t alloc, Valuation world, const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::kTop:
        return true;
      case Formula::Kind::kAtom:
        return world.test(sig_.var_index(f.atom_name()));
      case Formula::Kind::kNot:
        return !holds(alloc, world, f.operand());
      case Formula::Kind::kOr:
        return holds(alloc, world, f.lhs()) || holds(alloc, world, f.rhs());
      case Formula::Kind::kDia: {
        std::uint64_t mask = 0;
        for (const auto& agent : f.coalition()) mask |= allocs_[alloc].owned_mask(sig_.agent_index(agent));
        for (std::uint64_t w = 0; w < sig_.valuation_count(); ++w) {
          if (same_modulo(world, Valuation(w), mask) && holds(alloc, Valuation(w), f.operand())) return true;
        }
        return false;
      }
      case Formula::Kind::kDiaProg: {
        const Relation& r = relation(f.program(), world);
        for (std::size_t b = 0; b < n_; ++b) {
          if (r.get(alloc, b) && holds(b, world, f.operand())) return true;
        }
        return false;
      }
    }
    return false;
  }

  std::size_t index_of(const Allocation& a) const { return static_cast<std::size_t>(allocation_index(sig_, a)); }

 private:
  const Relation& relation(const Program& p, Valuation world) {
    const auto key = std::make_pair(p.identity(), world.bits());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Relation r = build(p, world);
    return memo_.emplace(key, std::move(r)).first->second;
  }

  Relation build(const Program& p, Valuation world) {
    Relation r(n_);
    switch (p.kind()) {
      case Program::Kind::kGive:
        for (std::size_t a = 0; a < n_; ++a) {
          for (std::size_t b = 0; b < n_; ++b) {
            if (vertically_related(sig_, allocs_[a], allocs_[b], p.giver(), p.var(), p.receiver())) r.set(a, b);
          }
        }
        break;
      case Program::Kind::kTest:
        for (std::size_t a = 0; a < n_; ++a) {
          if (holds(a, world, p.condition())) r.set(a, a);
        }
        break;
      case Program::Kind::kSeq: {
        const Relation& x = relation(p.lhs(), world);
        const Relation& y = relation(p.rhs(), world);
        for (std::size_t a = 0; a < n_; ++a) {
          for (std::size_t m = 0; m < n_; ++m) {
            if (!x.get(a, m)) continue;
            for (std::size_t b = 0; b < n_; ++b) {
              if (y.get(m, b)) r.set(a, b);
            }
          }
        }
        break;
      }
      case Program::Kind::kChoice: {
        const Relation& x = relation(p.lhs(), world);
        const Relation& y = relation(p.rhs(), world);
        for (std::size_t a = 0; a < n_; ++a) {
          for (std::size_t b = 0; b < n_; ++b) {
            if (x.get(a, b) || y.get(a, b)) r.set(a, b);
          }
        }
        break;
      }
      case Program::Kind::kStar: {
        const Relation& x = relation(p.body(), world);
        for (std::size_t a = 0; a < n_; ++a) {
          r.set(a, a);
          for (std::size_t b = 0; b < n_; ++b) {
            if (x.get(a, b)) r.set(a, b);
          }
        }
        // Warshall closure.
        for (std::size_t m = 0; m < n_; ++m) {
          for (std::size_t a = 0; a < n_; ++a) {
            if (!r.get(a, m)) continue;
            for (std::size_t b = 0; b < n_; ++b) {
              if (r.get(m, b)) r.set(a, b);
            }
          }
        }
        break;
      }
    }
    return r;
  }

  const Signature& sig_;
  std::size_t n_;
  std::vector<Allocation> allocs_;
  std::map<std::pair<const void*, std::uint64_t>, Relation> memo_;
};

}  // namespace

bool eval_kripke(const PointedKripkeModel& pm, const Formula& f) {
  pm.sig.require_covers(signature_of(f), "formula");
  KripkeEvaluator ev(pm.sig);
  return ev.holds(ev.index_of(pm.alloc), pm.world, f);
}

bool cross_check(const Signature& sig, const Formula& f) {
  sig.require_covers(signature_of(f), "formula");
  KripkeEvaluator ev(sig);
  for (const DirectModel& m : enumerate_models(sig)) {
    if (eval(m, f) != ev.holds(ev.index_of(m.allocation()), m.valuation(), f)) return false;
  }
  return true;
}

}  // namespace dclpc
