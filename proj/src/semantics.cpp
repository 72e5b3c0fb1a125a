#include "dclpc/semantics.hpp"

#include <algorithm>
#include <set>

#include "dclpc/errors.hpp"

namespace dclpc {

namespace {

// Programs never change the valuation, so relations are computed over
// allocations with the valuation held fixed.
class DirectEvaluator {
 public:
  explicit DirectEvaluator(const Signature& sig) : sig_(sig) {}

  bool holds(const Allocation& alloc, Valuation val, const Formula& f) const {
    switch (f.kind()) {
      case Formula::Kind::kTop:
        return true;
      case Formula::Kind::kAtom:
        return val.test(sig_.var_index(f.atom_name()));
      case Formula::Kind::kNot:
        return !holds(alloc, val, f.operand());
      case Formula::Kind::kOr:
        return holds(alloc, val, f.lhs()) || holds(alloc, val, f.rhs());
      case Formula::Kind::kDia: {
        // Each C-valuation overwrites exactly the controlled bits; walk all
        // subsets of the controlled mask.
        const std::uint64_t mask = alloc.owned_mask_of(sig_.agent_mask(f.coalition()));
        const std::uint64_t kept = val.bits() & ~mask;
        std::uint64_t sub = mask;
        while (true) {
          if (holds(alloc, Valuation(kept | sub), f.operand())) return true;
          if (sub == 0) return false;
          sub = (sub - 1) & mask;
        }
      }
      case Formula::Kind::kDiaProg: {
        for (const Allocation& next : image(alloc, val, f.program())) {
          if (holds(next, val, f.operand())) return true;
        }
        return false;
      }
    }
    return false;
  }

  std::vector<Allocation> image(const Allocation& alloc, Valuation val, const Program& p) const {
    switch (p.kind()) {
      case Program::Kind::kGive: {
        const std::size_t i = sig_.agent_index(p.giver());
        const std::size_t v = sig_.var_index(p.var());
        const std::size_t j = sig_.agent_index(p.receiver());
        if (alloc.owner(v) != i) return {};
        return {i == j ? alloc : alloc.with_owner(v, j)};
      }
      case Program::Kind::kTest:
        if (holds(alloc, val, p.condition())) return {alloc};
        return {};
      case Program::Kind::kSeq: {
        std::set<Allocation> out;
        for (const Allocation& mid : image(alloc, val, p.lhs())) {
          for (Allocation& end : image(mid, val, p.rhs())) out.insert(std::move(end));
        }
        return {out.begin(), out.end()};
      }
      case Program::Kind::kChoice: {
        std::set<Allocation> out;
        for (Allocation& a : image(alloc, val, p.lhs())) out.insert(std::move(a));
        for (Allocation& a : image(alloc, val, p.rhs())) out.insert(std::move(a));
        return {out.begin(), out.end()};
      }
      case Program::Kind::kStar: {
        std::set<Allocation> reached;
        closure(alloc, val, p.body(), reached);
        return {reached.begin(), reached.end()};
      }
    }
    return {};
  }

  // Breadth-first least fixpoint of the body's image starting from `alloc`.
  // Returns the number of rounds that discovered something new.
  std::size_t closure(const Allocation& alloc, Valuation val, const Program& body,
                      std::set<Allocation>& reached) const {
    reached.insert(alloc);
    std::vector<Allocation> frontier{alloc};
    std::size_t rounds = 0;
    while (!frontier.empty()) {
      std::vector<Allocation> next;
      for (const Allocation& a : frontier) {
        for (Allocation& b : image(a, val, body)) {
          if (reached.insert(b).second) next.push_back(std::move(b));
        }
      }
      if (!next.empty()) ++rounds;
      frontier = std::move(next);
    }
    return rounds;
  }

 private:
  const Signature& sig_;
};

std::vector<DirectModel> to_models(const DirectModel& base, const std::vector<Allocation>& allocs) {
  std::vector<DirectModel> out;
  out.reserve(allocs.size());
  for (const Allocation& a : allocs) out.push_back(base.with_allocation(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool eval(const DirectModel& model, const Formula& f) {
  model.signature().require_covers(signature_of(f), "formula");
  return DirectEvaluator(model.signature()).holds(model.allocation(), model.valuation(), f);
}

std::vector<DirectModel> program_image(const DirectModel& model, const Program& program) {
  model.signature().require_covers(signature_of(program), "program");
  DirectEvaluator ev(model.signature());
  return to_models(model, ev.image(model.allocation(), model.valuation(), program));
}

bool in_relation(const DirectModel& from, const DirectModel& to, const Program& program) {
  if (!(from.signature() == to.signature())) throw SignatureError("models have different signatures");
  if (from.valuation() != to.valuation()) {
    from.signature().require_covers(signature_of(program), "program");
    return false;
  }
  const auto image = program_image(from, program);
  return std::binary_search(image.begin(), image.end(), to);
}

std::size_t star_depth(const DirectModel& model, const Program& body) {
  model.signature().require_covers(signature_of(body), "program");
  DirectEvaluator ev(model.signature());
  std::set<Allocation> reached;
  return ev.closure(model.allocation(), model.valuation(), body, reached);
}

}  // namespace dclpc
