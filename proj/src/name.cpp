#include "wlab/name.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>

namespace wlab {

struct Name::State {
  Fn fn;
  std::map<Nat, Nat> memo;
  std::mutex mu;
};

Name::Name() : Name([](const Nat&) { return Nat(0); }) {}

Name::Name(Fn fn) : st_(std::make_shared<State>()) {
  if (!fn) throw std::invalid_argument("Name: empty generator");
  st_->fn = std::move(fn);
}

Nat Name::at(const Nat& n) const {
  {
    std::lock_guard<std::mutex> lk(st_->mu);
    auto it = st_->memo.find(n);
    if (it != st_->memo.end()) return it->second;
  }
  // Computed outside the lock so a generator may consult other names (and,
  // transitively, re-enter this one only through already-memoized entries).
  Nat v = st_->fn(n);
  std::lock_guard<std::mutex> lk(st_->mu);
  return st_->memo.emplace(n, std::move(v)).first->second;
}

Nat Name::at(unsigned long n) const { return at(Nat(n)); }

Name name_const(const Nat& v) {
  return Name([v](const Nat&) { return v; });
}

Name name_from_prefix(std::vector<Nat> prefix, const Nat& tail) {
  auto data = std::make_shared<std::vector<Nat>>(std::move(prefix));
  return Name([data, tail](const Nat& n) {
    if (n < data->size()) return (*data)[n.get_ui()];
    return tail;
  });
}

Name name_cons(const Nat& head, const Name& rest) {
  return Name([head, rest](const Nat& n) {
    if (n == 0) return head;
    return rest.at(n - 1);
  });
}

Name name_tail(const Name& p) {
  return Name([p](const Nat& n) { return p.at(n + 1); });
}

Name tuple2(const Name& a, const Name& b) {
  return Name([a, b](const Nat& n) {
    Nat q = n / 2;
    return (n % 2 == 0) ? a.at(q) : b.at(q);
  });
}

Name project2(const Name& p, int side) {
  if (side != 0 && side != 1) throw std::invalid_argument("project2: side");
  return Name([p, side](const Nat& n) { return p.at(2 * n + side); });
}

Name tuple_vec(std::vector<Name> parts) {
  if (parts.empty()) throw std::invalid_argument("tuple_vec: empty");
  auto ps = std::make_shared<std::vector<Name>>(std::move(parts));
  unsigned long k = ps->size();
  return Name([ps, k](const Nat& n) {
    Nat q = n / k;
    unsigned long r = mpz_class(n % k).get_ui();
    return (*ps)[r].at(q);
  });
}

Name project_vec(const Name& p, unsigned long i, unsigned long k) {
  if (k == 0 || i >= k) throw std::invalid_argument("project_vec: slot");
  return Name([p, i, k](const Nat& n) { return p.at(n * k + i); });
}

Name tuple_family(std::function<Name(const Nat&)> family) {
  struct Cache {
    std::function<Name(const Nat&)> make;
    std::map<Nat, Name> members;
    std::mutex mu;
  };
  auto c = std::make_shared<Cache>();
  c->make = std::move(family);
  return Name([c](const Nat& n) {
    auto [i, pos] = unpair(n);
    Name member = [&] {
      std::lock_guard<std::mutex> lk(c->mu);
      auto it = c->members.find(i);
      if (it != c->members.end()) return it->second;
      return c->members.emplace(i, c->make(i)).first->second;
    }();
    return member.at(pos);
  });
}

Name project_family(const Name& p, const Nat& i) {
  return Name([p, i](const Nat& n) { return p.at(pair(i, n)); });
}

Name name_lazy(std::function<Name()> thunk) {
  struct Cell {
    std::function<Name()> make;
    std::optional<Name> inner;
    std::mutex mu;
  };
  auto c = std::make_shared<Cell>();
  c->make = std::move(thunk);
  return Name([c](const Nat& n) {
    Name inner = [&] {
      std::lock_guard<std::mutex> lk(c->mu);
      if (!c->inner) c->inner = c->make();
      return *c->inner;
    }();
    return inner.at(n);
  });
}

void QueryLog::record(const Nat& n) {
  std::lock_guard<std::mutex> lk(mu);
  if (seen.insert(n).second) order.push_back(n);
}

std::vector<Nat> QueryLog::snapshot() {
  std::lock_guard<std::mutex> lk(mu);
  return order;
}

Name instrument(const Name& p, std::shared_ptr<QueryLog> log) {
  return Name([p, log](const Nat& n) {
    log->record(n);
    return p.at(n);
  });
}

Name patch_except(const Name& p, std::vector<Nat> pin, const Name& q) {
  auto keep = std::make_shared<std::set<Nat>>(pin.begin(), pin.end());
  return Name([p, q, keep](const Nat& n) {
    return keep->count(n) ? p.at(n) : q.at(n);
  });
}

}  // namespace wlab
