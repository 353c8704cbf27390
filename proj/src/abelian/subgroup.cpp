#include "efgc/abelian/subgroup.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "efgc/error.hpp"

namespace efgc {

namespace {

std::vector<long> closure(const FinAbGroup& g, std::vector<long> start, const std::vector<GroupElement>& gens) {
  std::set<long> seen(start.begin(), start.end());
  seen.insert(0);
  std::vector<long> queue(seen.begin(), seen.end());
  for (size_t i = 0; i < queue.size(); ++i) {
    GroupElement x = g.element(queue[i]);
    for (const auto& s : gens) {
      long idx = g.index(g.add(x, s));
      if (seen.insert(idx).second) queue.push_back(idx);
    }
  }
  return std::vector<long>(seen.begin(), seen.end());
}

std::vector<int> primes_of(long n) {
  std::vector<int> ps;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    ps.push_back(static_cast<int>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

// Invariant factors of an abelian group of the given order from the counts
// #{x : m x = 0}; ascending with d_i | d_(i+1).
std::vector<int> factors_from_counts(long order, const std::function<long(long)>& killed_by) {
  std::vector<std::vector<int>> exps;  // per prime, exponents descending
  std::vector<int> primes = primes_of(order);
  for (int p : primes) {
    long ppart = 1;
    while (order % (ppart * p) == 0) ppart *= p;
    std::vector<long> counts{1};
    long pj = 1;
    while (counts.back() < ppart) {
      pj *= p;
      counts.push_back(killed_by(pj));
    }
    // r_j = number of cyclic p-factors of exponent >= j
    std::vector<int> r(counts.size() + 1, 0);
    for (size_t j = 1; j < counts.size(); ++j) {
      long ratio = counts[j] / counts[j - 1];
      int e = 0;
      while (ratio > 1) {
        ratio /= p;
        ++e;
      }
      r[j] = e;
    }
    std::vector<int> list;
    for (size_t j = counts.size() - 1; j >= 1; --j) {
      int exactly = r[j] - r[j + 1];
      for (int t = 0; t < exactly; ++t) list.push_back(static_cast<int>(j));
    }
    exps.push_back(list);
  }
  size_t k = 0;
  for (const auto& l : exps) k = std::max(k, l.size());
  std::vector<int> out(k, 1);
  for (size_t pi = 0; pi < primes.size(); ++pi) {
    for (size_t i = 0; i < exps[pi].size(); ++i) {
      int pw = 1;
      for (int t = 0; t < exps[pi][i]; ++t) pw *= primes[pi];
      out[k - 1 - i] *= pw;
    }
  }
  return out;
}

}  // namespace

Subgroup Subgroup::generated(const FinAbGroup& group, const std::vector<GroupElement>& gens) {
  Subgroup s;
  s.group_ = group;
  std::vector<GroupElement> reduced;
  for (const auto& g : gens) reduced.push_back(group.reduce(g));
  s.elements_ = closure(group, {}, reduced);
  std::vector<long> span{0};
  for (long idx : s.elements_) {
    if (std::binary_search(span.begin(), span.end(), idx)) continue;
    GroupElement g = group.element(idx);
    s.gens_.push_back(g);
    span = closure(group, span, {g});
  }
  return s;
}

Subgroup Subgroup::whole(const FinAbGroup& group) {
  std::vector<GroupElement> gens;
  for (int i = 0; i < group.rank(); ++i) {
    GroupElement e = group.zero();
    e[i] = 1;
    gens.push_back(e);
  }
  return generated(group, gens);
}

Subgroup Subgroup::trivial(const FinAbGroup& group) { return generated(group, {}); }

std::vector<GroupElement> Subgroup::elements() const {
  std::vector<GroupElement> out;
  for (long i : elements_) out.push_back(group_.element(i));
  return out;
}

bool Subgroup::contains(const GroupElement& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), group_.index(group_.reduce(g)));
}

bool Subgroup::contains(const Subgroup& other) const {
  return std::includes(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end());
}

std::string Subgroup::label() const {
  std::string out = "<";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ";";
    out += group_.label(gens_[i]);
  }
  return out + ">";
}

bool operator<(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  std::vector<long> ga, gb;
  for (const auto& g : a.gens_) ga.push_back(a.group_.index(g));
  for (const auto& g : b.gens_) gb.push_back(b.group_.index(g));
  if (ga != gb) return ga < gb;
  return a.elements_ < b.elements_;
}

std::vector<Subgroup> subgroups_all(const FinAbGroup& group, long max_order) {
  if (group.order() > max_order)
    throw Error(ErrorKind::kGroupTooLarge, "group of order " + std::to_string(group.order()) + " exceeds bound");
  std::set<std::vector<long>> seen;
  std::vector<Subgroup> found{Subgroup::trivial(group)};
  seen.insert(found[0].element_indices());
  for (size_t i = 0; i < found.size(); ++i) {
    Subgroup s = found[i];
    for (long idx = 1; idx < group.order(); ++idx) {
      if (std::binary_search(s.element_indices().begin(), s.element_indices().end(), idx)) continue;
      std::vector<GroupElement> gens = s.generators();
      gens.push_back(group.element(idx));
      Subgroup t = Subgroup::generated(group, gens);
      if (seen.insert(t.element_indices()).second) found.push_back(t);
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b) {
  if (!(a.group() == b.group())) throw Error(ErrorKind::kGroupMismatch, "subgroups of different groups");
  std::vector<GroupElement> gens = a.generators();
  for (const auto& g : b.generators()) gens.push_back(g);
  return Subgroup::generated(a.group(), gens);
}

Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b) {
  if (!(a.group() == b.group())) throw Error(ErrorKind::kGroupMismatch, "subgroups of different groups");
  std::vector<GroupElement> common;
  for (long idx : a.element_indices())
    if (std::binary_search(b.element_indices().begin(), b.element_indices().end(), idx))
      common.push_back(a.group().element(idx));
  return Subgroup::generated(a.group(), common);
}

Subgroup annihilator(const Subgroup& b) {
  const FinAbGroup& g = b.group();
  std::vector<GroupElement> ann;
  for (long i = 0; i < g.order(); ++i) {
    GroupElement alpha = g.element(i);
    bool kills = true;
    for (const auto& x : b.generators())
      if (g.pairing(alpha, x) != 0) kills = false;
    if (kills) ann.push_back(alpha);
  }
  return Subgroup::generated(g, ann);
}

std::vector<int> invariant_factors(const Subgroup& u) {
  const FinAbGroup& g = u.group();
  auto elems = u.elements();
  return factors_from_counts(u.order(), [&](long m) {
    long c = 0;
    for (const auto& x : elems)
      if (g.is_zero(g.scale(x, m))) ++c;
    return c;
  });
}

bool is_presentation(const Subgroup& u, const std::vector<GroupElement>& elements) {
  const FinAbGroup& g = u.group();
  long prod = 1;
  for (const auto& x : elements) {
    if (g.is_zero(x) || !u.contains(x)) return false;
    prod *= g.element_order(x);
  }
  if (prod != u.order()) return false;
  return Subgroup::generated(g, elements).order() == u.order();
}

namespace {

bool search_basis(const FinAbGroup& g, const std::vector<GroupElement>& candidates, const std::vector<int>& orders,
                  int slot, std::vector<long>& span, std::vector<GroupElement>& chosen,
                  const std::function<long(const GroupElement&)>& order_of,
                  const std::function<std::vector<long>(const std::vector<long>&, const GroupElement&)>& extend) {
  if (slot < 0) return true;
  for (const auto& c : candidates) {
    if (order_of(c) != orders[slot]) continue;
    std::vector<long> next = extend(span, c);
    if (static_cast<long>(next.size()) != static_cast<long>(span.size()) * orders[slot]) continue;
    std::vector<long> saved = span;
    span = next;
    chosen[slot] = c;
    if (search_basis(g, candidates, orders, slot - 1, span, chosen, order_of, extend)) return true;
    span = saved;
  }
  return false;
}

}  // namespace

Presentation smith_presentation(const Subgroup& u) {
  const FinAbGroup& g = u.group();
  std::vector<int> orders = invariant_factors(u);
  Presentation p;
  if (orders.empty()) return p;
  std::vector<GroupElement> candidates = u.elements();
  std::vector<long> span{0};
  std::vector<GroupElement> chosen(orders.size());
  bool ok = search_basis(
      g, candidates, orders, static_cast<int>(orders.size()) - 1, span, chosen,
      [&](const GroupElement& x) { return g.element_order(x); },
      [&](const std::vector<long>& s, const GroupElement& x) { return closure(g, s, {x}); });
  if (!ok) throw Error(ErrorKind::kNotASubgroup, "no basis found for " + u.label());
  p.elements = chosen;
  for (const auto& x : chosen) p.orders.push_back(g.element_order(x));
  return p;
}

std::vector<Presentation> presentations_enumerate(const Subgroup& u, long limit) {
  if (u.order() > 16) throw Error(ErrorKind::kGroupTooLarge, "presentation enumeration needs |U| <= 16");
  const FinAbGroup& g = u.group();
  std::vector<Presentation> out;
  std::vector<long> idx(u.element_indices().begin() + 1, u.element_indices().end());
  std::vector<GroupElement> current;
  std::function<void(size_t, const std::vector<long>&)> rec = [&](size_t start, const std::vector<long>& span) {
    if (static_cast<long>(out.size()) >= limit) return;
    if (static_cast<long>(span.size()) == u.order()) {
      Presentation p;
      p.elements = current;
      for (const auto& x : current) p.orders.push_back(g.element_order(x));
      out.push_back(p);
      return;
    }
    for (size_t i = start; i < idx.size(); ++i) {
      GroupElement x = g.element(idx[i]);
      long o = g.element_order(x);
      if (u.order() % (static_cast<long>(span.size()) * o) != 0) continue;
      std::vector<long> next = closure(g, span, {x});
      if (static_cast<long>(next.size()) != static_cast<long>(span.size()) * o) continue;
      current.push_back(x);
      rec(i + 1, next);
      current.pop_back();
    }
  };
  if (u.order() == 1) {
    out.push_back(Presentation{});
    return out;
  }
  rec(0, {0});
  return out;
}

Quotient::Quotient(const Subgroup& u, const Subgroup& v) : u_(u), v_(v) {
  if (!(u.group() == v.group()) || !u.contains(v)) throw Error(ErrorKind::kNotASubgroup, "V is not a subgroup of U");
  const FinAbGroup& g = u.group();
  std::set<long> reps;
  for (long idx : u.element_indices()) reps.insert(rep_index(g.element(idx)));
  std::vector<GroupElement> rep_elems;
  for (long r : reps) rep_elems.push_back(g.element(r));
  long qorder = static_cast<long>(reps.size());
  auto coset_order = [&](const GroupElement& x) {
    long k = 1;
    while (!v_.contains(g.scale(x, k))) ++k;
    return k;
  };
  std::vector<int> orders = factors_from_counts(qorder, [&](long m) {
    long c = 0;
    for (const auto& x : rep_elems)
      if (v_.contains(g.scale(x, m))) ++c;
    return c;
  });
  quotient_ = FinAbGroup(orders);
  std::vector<long> span{rep_index(g.zero())};
  std::vector<GroupElement> chosen(orders.size());
  auto extend = [&](const std::vector<long>& s, const GroupElement& x) {
    std::set<long> out(s.begin(), s.end());
    std::vector<long> queue(s.begin(), s.end());
    for (size_t i = 0; i < queue.size(); ++i) {
      long r = rep_index(g.add(g.element(queue[i]), x));
      if (out.insert(r).second) queue.push_back(r);
    }
    return std::vector<long>(out.begin(), out.end());
  };
  if (!orders.empty()) {
    bool ok = search_basis(g, rep_elems, orders, static_cast<int>(orders.size()) - 1, span, chosen, coset_order,
                           extend);
    if (!ok) throw Error(ErrorKind::kNotASubgroup, "no quotient basis found");
  }
  lifts_ = chosen;
  rep_of_coords_.assign(quotient_.order(), g.zero());
  for (long qi = 0; qi < quotient_.order(); ++qi) {
    GroupElement c = quotient_.element(qi);
    GroupElement x = g.zero();
    for (size_t i = 0; i < lifts_.size(); ++i) x = g.add(x, g.scale(lifts_[i], c[i]));
    long r = rep_index(x);
    rep_of_coords_[qi] = g.element(r);
    coords_of_rep_[r] = c;
  }
}

long Quotient::rep_index(const GroupElement& x) const {
  const FinAbGroup& g = u_.group();
  long best = -1;
  for (long vi : v_.element_indices()) {
    long idx = g.index(g.add(x, g.element(vi)));
    if (best < 0 || idx < best) best = idx;
  }
  return best;
}

GroupElement Quotient::project(const GroupElement& x) const {
  if (!u_.contains(x)) throw Error(ErrorKind::kNotASubgroup, "element not in U");
  return coords_of_rep_.at(rep_index(u_.group().reduce(x)));
}

GroupElement Quotient::section(const GroupElement& q) const { return rep_of_coords_.at(quotient_.index(q)); }

Presentation Quotient::lifted_presentation(const Presentation& p) const {
  Presentation out;
  for (const auto& q : p.elements) {
    out.elements.push_back(section(q));
    out.orders.push_back(quotient_.element_order(q));
  }
  return out;
}

Quotient quotient(const Subgroup& u, const Subgroup& v) { return Quotient(u, v); }

}  // namespace efgc
