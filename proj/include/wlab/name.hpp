#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <set>
#include <vector>

#include "wlab/nat.hpp"
#include "wlab/pairing.hpp"

namespace wlab {

// A name is a lazy total function from positions to naturals. Evaluation is
// memoized and thread safe; the generator must be deterministic and must not
// query the name it defines.
class Name {
 public:
  using Fn = std::function<Nat(const Nat&)>;

  Name();  // all-zero stream
  explicit Name(Fn fn);

  Nat at(const Nat& n) const;
  Nat at(unsigned long n) const;
  Nat operator()(const Nat& n) const { return at(n); }
  Nat operator()(unsigned long n) const { return at(n); }

 private:
  struct State;
  std::shared_ptr<State> st_;
};

Name name_const(const Nat& v);
Name name_from_prefix(std::vector<Nat> prefix, const Nat& tail);

// Prepend one value / drop the first position.
Name name_cons(const Nat& head, const Name& rest);
Name name_tail(const Name& p);

// Pair tupling: even positions read a, odd positions read b.
Name tuple2(const Name& a, const Name& b);
Name project2(const Name& p, int side);

// Finite tupling: position m reads parts[m % k] at m / k.
Name tuple_vec(std::vector<Name> parts);
Name project_vec(const Name& p, unsigned long i, unsigned long k);

// Countable tupling along Cantor pairs: position pair(i, n) reads the i-th
// member at n. The family builder is invoked at most once per index.
Name tuple_family(std::function<Name(const Nat&)> family);
Name project_family(const Name& p, const Nat& i);

// Defers construction of the underlying name until the first query.
Name name_lazy(std::function<Name()> thunk);

// Records the positions a consumer actually queries, in first-query order.
struct QueryLog {
  std::vector<Nat> order;
  std::set<Nat> seen;
  std::mutex mu;

  void record(const Nat& n);
  std::vector<Nat> snapshot();
};

Name instrument(const Name& p, std::shared_ptr<QueryLog> log);

// Agrees with p on `pin`, reads q elsewhere. Used to probe continuity of
// realizers: a run that only touched `pin` must be reproducible on any such
// patch.
Name patch_except(const Name& p, std::vector<Nat> pin, const Name& q);

}  // namespace wlab
