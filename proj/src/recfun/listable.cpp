#include "dprm/recfun/listable.hpp"

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "dprm/kernel/pairing.hpp"
#include "dprm/recfun/eval.hpp"

namespace dprm::recfun {
namespace {

using Stream = std::shared_ptr<Enumerator<Tuple>>;

std::optional<Tuple> decode_input(std::uint64_t i, std::size_t k) {
  if (k == 0) {
    if (i == 0) return Tuple{};
    return std::nullopt;
  }
  Tuple out;
  for (auto v : tuple_decode_u64(i, k)) out.push_back(from_u64(v));
  return out;
}

std::optional<Tuple> eval_all(const std::vector<Expr>& fs, const Tuple& x, std::uint64_t steps) {
  Tuple out;
  out.reserve(fs.size());
  for (const auto& f : fs) {
    auto r = eval(f, x, steps);
    if (!halted(r)) return std::nullopt;
    out.push_back(value_of(r));
  }
  return out;
}

std::size_t common_arity(const std::vector<Expr>& fs, const char* what) {
  if (fs.empty()) throw StructuralError(std::string(what) + ": need at least one component");
  std::size_t k = fs.front().arity();
  for (const auto& f : fs) {
    if (f.arity() != k) throw StructuralError(std::string(what) + ": components disagree on arity");
  }
  return k;
}

Stream open(const ListableSet& s) {
  return std::make_shared<Enumerator<Tuple>>(s.enumerate(kUnbounded));
}

// Buffered step function: pull() does one unit of child work and may queue
// several items; each outer step emits at most one of them.
Enumerator<Tuple> buffered(std::function<bool(std::deque<Tuple>&)> pull, std::uint64_t fuel) {
  auto queue = std::make_shared<std::deque<Tuple>>();
  return Enumerator<Tuple>(
      [queue, pull = std::move(pull)]() -> StepResult<Tuple> {
        if (queue->empty()) {
          bool more = pull(*queue);
          if (queue->empty()) return more ? StepResult<Tuple>::idle() : StepResult<Tuple>::finish();
        }
        Tuple t = std::move(queue->front());
        queue->pop_front();
        return StepResult<Tuple>::emit(std::move(t));
      },
      fuel);
}

}  // namespace

ListableSet ListableSet::domain_of(Expr f) {
  std::size_t k = f.arity();
  return ListableSet(k, [f, k](std::uint64_t fuel) {
    auto inner = std::make_shared<Enumerator<std::pair<std::uint64_t, Tuple>>>(dovetail_emit<Tuple>(
        [f, k](std::uint64_t i, std::uint64_t s) -> std::optional<Tuple> {
          auto x = decode_input(i, k);
          if (!x || !halted(eval(f, *x, s))) return std::nullopt;
          return x;
        },
        kUnbounded));
    return Enumerator<Tuple>(
        [inner]() {
          auto r = inner->step_once();
          if (r.item) return StepResult<Tuple>::emit(std::move(r.item->second));
          return StepResult<Tuple>::idle();
        },
        fuel);
  });
}

ListableSet ListableSet::image_of(std::vector<Expr> fs) {
  std::size_t k = common_arity(fs, "image_of");
  std::size_t m = fs.size();
  return ListableSet(m, [fs, k](std::uint64_t fuel) {
    auto inner = std::make_shared<Enumerator<std::pair<std::uint64_t, Tuple>>>(dovetail_emit<Tuple>(
        [fs, k](std::uint64_t i, std::uint64_t s) -> std::optional<Tuple> {
          auto x = decode_input(i, k);
          if (!x) return std::nullopt;
          return eval_all(fs, *x, s);
        },
        kUnbounded));
    return Enumerator<Tuple>(
        [inner]() {
          auto r = inner->step_once();
          if (r.item) return StepResult<Tuple>::emit(std::move(r.item->second));
          return StepResult<Tuple>::idle();
        },
        fuel);
  });
}

ListableSet ListableSet::explicit_set(std::size_t arity, Factory factory) {
  return ListableSet(arity, std::move(factory));
}

ListableSet ListableSet::from_list(std::size_t arity, std::vector<Tuple> items) {
  for (const auto& t : items) {
    if (t.size() != arity) throw StructuralError("from_list: tuple of wrong arity");
  }
  return ListableSet(arity, [items](std::uint64_t fuel) { return from_vector(items, fuel); });
}

Enumerator<Tuple> ListableSet::enumerate(std::uint64_t fuel) const {
  auto child = std::make_shared<Enumerator<Tuple>>(make_(kUnbounded));
  auto seen = std::make_shared<std::set<Tuple>>();
  std::size_t r = arity_;
  return Enumerator<Tuple>(
      [child, seen, r]() {
        auto s = child->step_once();
        if (s.item) {
          if (s.item->size() != r) throw StructuralError("listable set produced a tuple of wrong arity");
          if (seen->insert(*s.item).second) return StepResult<Tuple>::emit(std::move(*s.item));
        }
        if (s.done) return StepResult<Tuple>::finish();
        return StepResult<Tuple>::idle();
      },
      fuel);
}

ListableSet set_union(const ListableSet& a, const ListableSet& b) {
  if (a.arity() != b.arity()) throw StructuralError("union: arity mismatch");
  return ListableSet::explicit_set(a.arity(), [a, b](std::uint64_t fuel) {
    Stream sa = open(a), sb = open(b);
    auto turn = std::make_shared<bool>(false);
    return buffered(
        [sa, sb, turn](std::deque<Tuple>& q) {
          if (sa->finished() && sb->finished()) return false;
          *turn = !*turn;
          const Stream& s = (*turn && !sa->finished()) || sb->finished() ? sa : sb;
          auto r = s->step_once();
          if (r.item) q.push_back(std::move(*r.item));
          return !(sa->finished() && sb->finished());
        },
        fuel);
  });
}

ListableSet set_intersect(const ListableSet& a, const ListableSet& b) {
  if (a.arity() != b.arity()) throw StructuralError("intersect: arity mismatch");
  return ListableSet::explicit_set(a.arity(), [a, b](std::uint64_t fuel) {
    Stream sa = open(a), sb = open(b);
    auto seen_a = std::make_shared<std::set<Tuple>>();
    auto seen_b = std::make_shared<std::set<Tuple>>();
    auto turn = std::make_shared<bool>(false);
    return buffered(
        [=](std::deque<Tuple>& q) {
          // Once either side is exhausted nothing new can be confirmed.
          if (sa->finished() || sb->finished()) {
            bool a_done = sa->finished();
            const Stream& s = a_done ? sb : sa;
            if (s->finished()) return false;
            auto r = s->step_once();
            auto& other = a_done ? *seen_a : *seen_b;
            if (r.item && other.count(*r.item)) q.push_back(*r.item);
            return !s->finished();
          }
          *turn = !*turn;
          const Stream& s = *turn ? sa : sb;
          auto& mine = *turn ? *seen_a : *seen_b;
          auto& other = *turn ? *seen_b : *seen_a;
          auto r = s->step_once();
          if (r.item) {
            mine.insert(*r.item);
            if (other.count(*r.item)) q.push_back(*r.item);
          }
          return true;
        },
        fuel);
  });
}

ListableSet set_product(const ListableSet& a, const ListableSet& b) {
  return ListableSet::explicit_set(a.arity() + b.arity(), [a, b](std::uint64_t fuel) {
    Stream sa = open(a), sb = open(b);
    auto la = std::make_shared<std::vector<Tuple>>();
    auto lb = std::make_shared<std::vector<Tuple>>();
    auto turn = std::make_shared<bool>(false);
    return buffered(
        [=](std::deque<Tuple>& q) {
          if (sa->finished() && sb->finished()) return false;
          *turn = !*turn;
          bool use_a = (*turn && !sa->finished()) || sb->finished();
          auto r = (use_a ? sa : sb)->step_once();
          if (r.item) {
            if (use_a) {
              for (const auto& y : *lb) {
                Tuple t = *r.item;
                t.insert(t.end(), y.begin(), y.end());
                q.push_back(std::move(t));
              }
              la->push_back(*r.item);
            } else {
              for (const auto& x : *la) {
                Tuple t = x;
                t.insert(t.end(), r.item->begin(), r.item->end());
                q.push_back(std::move(t));
              }
              lb->push_back(*r.item);
            }
          }
          return !(sa->finished() && sb->finished());
        },
        fuel);
  });
}

ListableSet set_project(const ListableSet& a, const std::vector<std::size_t>& coords) {
  for (auto c : coords) {
    if (c >= a.arity()) throw StructuralError("project: coordinate out of range");
  }
  return ListableSet::explicit_set(coords.size(), [a, coords](std::uint64_t fuel) {
    Stream sa = open(a);
    return Enumerator<Tuple>(
        [sa, coords]() {
          auto r = sa->step_once();
          if (r.item) {
            Tuple t;
            for (auto c : coords) t.push_back((*r.item)[c]);
            return StepResult<Tuple>::emit(std::move(t));
          }
          if (sa->finished()) return StepResult<Tuple>::finish();
          return StepResult<Tuple>::idle();
        },
        fuel);
  });
}

ListableSet set_image(const std::vector<Expr>& fs, const ListableSet& x) {
  std::size_t k = common_arity(fs, "image");
  if (k != x.arity()) throw StructuralError("image: function arity does not match set arity");
  return ListableSet::explicit_set(fs.size(), [fs, x](std::uint64_t fuel) {
    Stream sx = open(x);
    auto items = std::make_shared<std::vector<Tuple>>();
    // Cells whose input index is not yet available fail now and are retried
    // on later diagonals with larger budgets, so nothing is lost.
    auto cells = std::make_shared<Enumerator<std::pair<std::uint64_t, Tuple>>>(dovetail_emit<Tuple>(
        [fs, items](std::uint64_t i, std::uint64_t s) -> std::optional<Tuple> {
          if (i >= items->size()) return std::nullopt;
          return eval_all(fs, (*items)[i], s);
        },
        kUnbounded));
    return buffered(
        [sx, items, cells](std::deque<Tuple>& q) {
          if (!sx->finished()) {
            auto r = sx->step_once();
            if (r.item) items->push_back(std::move(*r.item));
          }
          auto c = cells->step_once();
          if (c.item) q.push_back(std::move(c.item->second));
          return true;
        },
        fuel);
  });
}

ListableSet set_preimage(const std::vector<Expr>& fs, const ListableSet& b) {
  std::size_t k = common_arity(fs, "preimage");
  if (fs.size() != b.arity()) throw StructuralError("preimage: function width does not match set arity");
  return ListableSet::explicit_set(k, [fs, b, k](std::uint64_t fuel) {
    Stream sb = open(b);
    auto graph = std::make_shared<Enumerator<std::pair<std::uint64_t, Tuple>>>(dovetail_emit<Tuple>(
        [fs, k](std::uint64_t i, std::uint64_t s) -> std::optional<Tuple> {
          auto x = decode_input(i, k);
          if (!x) return std::nullopt;
          return eval_all(fs, *x, s);
        },
        kUnbounded));
    auto in_b = std::make_shared<std::set<Tuple>>();
    auto pending = std::make_shared<std::map<Tuple, std::vector<Tuple>>>();
    return buffered(
        [=](std::deque<Tuple>& q) {
          auto g = graph->step_once();
          if (g.item) {
            auto x = decode_input(g.item->first, k);
            const Tuple& y = g.item->second;
            if (in_b->count(y)) {
              q.push_back(*x);
            } else {
              (*pending)[y].push_back(*x);
            }
          }
          if (!sb->finished()) {
            auto r = sb->step_once();
            if (r.item && in_b->insert(*r.item).second) {
              auto it = pending->find(*r.item);
              if (it != pending->end()) {
                for (auto& x : it->second) q.push_back(std::move(x));
                pending->erase(it);
              }
            }
          }
          return true;
        },
        fuel);
  });
}

}  // namespace dprm::recfun
