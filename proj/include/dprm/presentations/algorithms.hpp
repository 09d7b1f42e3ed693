#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dprm/kernel/enumerator.hpp"
#include "dprm/kernel/pairing.hpp"
#include "dprm/presentations/presentation.hpp"

namespace dprm::pres {

using CodePair = std::pair<Code, Code>;
using CodeTuple = std::vector<Code>;

// Pairs (m, n) with rho(m) = rho(n), scanning N^2 in Cantor order. One fuel
// unit per cell.
template <class T>
Enumerator<CodePair> e_rho_enumerate(const Presentation<T>& rho, std::uint64_t fuel) {
  auto cache = std::make_shared<DecodeCache<T>>(rho.decode);
  auto k = std::make_shared<Code>(0);
  return Enumerator<CodePair>(
      [cache, k]() {
        auto [m, n] = cantor_unpair_u64((*k)++);
        if ((*cache)(m) == (*cache)(n)) return StepResult<CodePair>::emit({m, n});
        return StepResult<CodePair>::idle();
      },
      fuel);
}

// Pairs (m, n) with gamma(m) = rho(n), in Cantor order.
template <class T>
Enumerator<CodePair> delta_enumerate(const Presentation<T>& gamma, const Presentation<T>& rho,
                                     std::uint64_t fuel) {
  auto cg = std::make_shared<DecodeCache<T>>(gamma.decode);
  auto cr = std::make_shared<DecodeCache<T>>(rho.decode);
  auto k = std::make_shared<Code>(0);
  return Enumerator<CodePair>(
      [cg, cr, k]() {
        auto [m, n] = cantor_unpair_u64((*k)++);
        if ((*cg)(m) == (*cr)(n)) return StepResult<CodePair>::emit({m, n});
        return StepResult<CodePair>::idle();
      },
      fuel);
}

// Prefix of rho^*(X) for X covered by rho o f, f = (f_1, ..., f_r) : N -> N^r.
// Candidate y decodes to (n, k_1, ..., k_r); with eps(k) the k-th pair of
// the E_rho enumeration, y succeeds when f_j(n) = eps_1(k_j) for all j, and
// then (eps_2(k_1), ..., eps_2(k_r)) is emitted (first occurrence only).
// One fuel unit per candidate y.
template <class T>
Enumerator<CodeTuple> rho_pullback_enumerator(const Presentation<T>& rho, std::size_t r,
                                              std::function<CodeTuple(Code)> f, std::uint64_t fuel) {
  if (r == 0) throw StructuralError("rho_pullback_enumerator needs r >= 1");
  struct State {
    Enumerator<CodePair> eps;
    std::vector<CodePair> pairs;
    std::set<CodeTuple> seen;
    Code y = 0;
  };
  auto st = std::make_shared<State>(State{e_rho_enumerate(rho, kUnbounded), {}, {}, 0});
  return Enumerator<CodeTuple>(
      [st, r, f = std::move(f)]() {
        auto g = tuple_decode_u64(st->y++, r + 1);
        CodeTuple image = f(g[0]);
        if (image.size() != r) throw StructuralError("pullback map returned a tuple of wrong size");
        CodeTuple x(r);
        for (std::size_t j = 0; j < r; ++j) {
          Code kj = g[j + 1];
          while (st->pairs.size() <= kj) st->pairs.push_back(*st->eps.next());
          if (st->pairs[kj].first != image[j]) return StepResult<CodeTuple>::idle();
          x[j] = st->pairs[kj].second;
        }
        if (!st->seen.insert(x).second) return StepResult<CodeTuple>::idle();
        return StepResult<CodeTuple>::emit(std::move(x));
      },
      fuel);
}

// h(0) = 0 and h(x) = least y with rho(y) outside {rho(h(j)) : j < x}. The
// search for h(x) resumes at h(x-1) + 1: every smaller code already lies in
// one of the earlier classes. Fuel counts candidate codes examined; on
// exhaustion the prefix found so far is returned.
template <class T>
std::vector<Code> bijectivize(const Presentation<T>& rho, std::size_t count, std::uint64_t fuel) {
  if (!rho.decidable_equality) {
    throw StructuralError("bijectivize needs a presentation with decidable equality");
  }
  std::vector<Code> h;
  std::set<T> classes;
  std::uint64_t spent = 0;
  Code y = 0;
  while (h.size() < count) {
    if (spent >= fuel) break;
    ++spent;
    T v = rho.decode(y);
    if (classes.insert(v).second) h.push_back(y);
    ++y;
  }
  return h;
}

// phi(n) = second component of the first Delta(gamma, rho) pair whose first
// component is n, for n = 0..upto, read off one pass over the Delta
// enumeration. Entries not reached before fuel runs out stay empty.
template <class T>
std::vector<std::optional<Code>> find_translation(const Presentation<T>& gamma,
                                                  const Presentation<T>& rho, Code upto,
                                                  std::uint64_t fuel) {
  std::vector<std::optional<Code>> phi(upto + 1);
  std::size_t missing = phi.size();
  auto delta = delta_enumerate(gamma, rho, fuel);
  while (missing > 0) {
    auto pr = delta.next();
    if (!pr) break;
    auto [m, n] = *pr;
    if (m <= upto && !phi[m]) {
      phi[m] = n;
      --missing;
    }
  }
  return phi;
}

template <class T>
SemiDecision<Code> translate_one(const Presentation<T>& gamma, const Presentation<T>& rho, Code n,
                                 std::uint64_t fuel) {
  auto phi = find_translation(gamma, rho, n, fuel);
  if (phi[n]) return Yes<Code>{*phi[n]};
  return Unknown{fuel};
}

// Items of f that fell outside the domain of the interpretation.
struct TransferLog {
  std::mutex mu;
  std::vector<Code> skipped;
};

// gamma(n) = theta(rho(f(k_n)_1), ..., rho(f(k_n)_r)) where k_0 < k_1 < ...
// are the indices whose tuples theta accepts. Rejected indices are skipped
// and recorded in the log.
template <class S, class T>
struct Transferred {
  Presentation<T> presentation;
  std::shared_ptr<TransferLog> log;
};

template <class S, class T>
Transferred<S, T> transfer_presentation(
    std::string name, StructurePtr<T> target,
    std::function<std::optional<T>(std::span<const S>)> theta, std::size_t rank,
    const Presentation<S>& rho, std::function<CodeTuple(Code)> f) {
  struct Cache {
    std::vector<T> values;
    Code next_k = 0;
  };
  auto cache = std::make_shared<Cache>();
  auto log = std::make_shared<TransferLog>();
  auto dec = rho.decode;
  auto value_at = [cache, log, theta, rank, dec, f](Code n) -> T {
    std::lock_guard<std::mutex> lock(log->mu);
    while (cache->values.size() <= n) {
      Code k = cache->next_k++;
      CodeTuple codes = f(k);
      if (codes.size() != rank) throw StructuralError("transfer: map returned a tuple of wrong size");
      std::vector<S> xs;
      xs.reserve(rank);
      for (Code c : codes) xs.push_back(dec(c));
      auto v = theta(std::span<const S>(xs));
      if (v) {
        cache->values.push_back(std::move(*v));
      } else {
        log->skipped.push_back(k);
      }
    }
    return cache->values[n];
  };
  Presentation<T> out;
  out.name = std::move(name);
  out.structure = std::move(target);
  out.decode = value_at;
  out.find_code = [value_at](const T& v, std::uint64_t fuel) -> std::optional<Code> {
    return scan_for_code<T>(value_at, v, fuel);
  };
  out.decidable_equality = rho.decidable_equality;
  return {std::move(out), log};
}

}  // namespace dprm::pres
