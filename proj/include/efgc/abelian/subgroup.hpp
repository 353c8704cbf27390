#pragma once

#include <map>
#include <string>
#include <vector>

#include "efgc/abelian/group.hpp"

namespace efgc {

constexpr long kDefaultMaxGroupOrder = 64;

// A subgroup, stored by its sorted element indices. Canonical generators are
// chosen greedily in index order, so equal subgroups have equal generators.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup generated(const FinAbGroup& group, const std::vector<GroupElement>& gens);
  static Subgroup whole(const FinAbGroup& group);
  static Subgroup trivial(const FinAbGroup& group);

  const FinAbGroup& group() const { return group_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<long>& element_indices() const { return elements_; }
  std::vector<GroupElement> elements() const;
  const std::vector<GroupElement>& generators() const { return gens_; }
  bool contains(const GroupElement& g) const;
  bool contains(const Subgroup& other) const;
  // "<1,0;0,1>" style label; "<>" for the trivial subgroup.
  std::string label() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_ == b.group_ && a.elements_ == b.elements_;
  }
  // Canonical order: by order, then by generator indices.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  FinAbGroup group_;
  std::vector<long> elements_;
  std::vector<GroupElement> gens_;
};

std::vector<Subgroup> subgroups_all(const FinAbGroup& group, long max_order = kDefaultMaxGroupOrder);

Subgroup subgroup_sum(const Subgroup& a, const Subgroup& b);
Subgroup subgroup_intersection(const Subgroup& a, const Subgroup& b);

// {alpha in A* : alpha(b) = 0 for all b in B}.
Subgroup annihilator(const Subgroup& b);

// Invariant factors d_1 | d_2 | ... of a subgroup, computed from the counts |U[p^j]|.
std::vector<int> invariant_factors(const Subgroup& u);

struct Presentation {
  std::vector<GroupElement> elements;
  std::vector<long> orders;
};

// Whether the elements induce an isomorphism from the sum of Z/ord onto u.
bool is_presentation(const Subgroup& u, const std::vector<GroupElement>& elements);
Presentation smith_presentation(const Subgroup& u);
// Unordered presentations in lexicographic order of sorted element indices.
std::vector<Presentation> presentations_enumerate(const Subgroup& u, long limit);

// U/V with a deterministic section. basis_lifts[i] lifts the i-th generator
// of the quotient; representative() picks the minimum-index coset member.
class Quotient {
 public:
  Quotient(const Subgroup& u, const Subgroup& v);

  const FinAbGroup& group() const { return quotient_; }
  const std::vector<GroupElement>& basis_lifts() const { return lifts_; }
  GroupElement project(const GroupElement& u) const;
  GroupElement section(const GroupElement& q) const;
  // The quotient elements of a presentation, lifted to U, with their orders in U/V.
  Presentation lifted_presentation(const Presentation& p) const;

 private:
  Subgroup u_;
  Subgroup v_;
  FinAbGroup quotient_;
  std::vector<GroupElement> lifts_;
  std::map<long, GroupElement> coords_of_rep_;  // coset rep index -> quotient coords
  std::vector<GroupElement> rep_of_coords_;     // quotient index -> coset rep
  long rep_index(const GroupElement& u) const;
};

Quotient quotient(const Subgroup& u, const Subgroup& v);

}  // namespace efgc
