#ifndef LCWB_POSET_HPP
#define LCWB_POSET_HPP

#include <vector>

#include "lcwb/cohomology.hpp"

namespace lcwb {

// Poset of all distinct sums of a family of ideals, ordered by reverse
// inclusion (p <= q iff I_p contains I_q). Nodes carry the maximal family
// {alpha : I_alpha <= I_p} and the canonical concatenated generator list.
class PosetOfSums {
 public:
  struct Node {
    Ideal ideal;
    std::vector<int> family;     // ascending alpha indices
    std::vector<Monomial> gens;  // concatenation of the family's generators
    std::vector<int> gen_src;    // family index of each generator
  };

  PosetOfSums(RingPtr ring, std::vector<Ideal> family);

  const RingPtr& ring() const { return ring_; }
  int size() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  const std::vector<Ideal>& family() const { return family_; }
  const Ideal& intersection() const { return intersection_; }

  bool leq(int p, int q) const { return leq_[p][q]; }  // I_p >= I_q
  bool lt(int p, int q) const { return p != q && leq_[p][q]; }

  // strict chains p_0 < ... < p_k (node indices), lexicographic order
  const std::vector<std::vector<int>>& chains(int k) const;
  int height() const;  // longest chain length (edges)

  // positions of node q's generators inside node p's list, for p <= q
  std::vector<int> gen_embedding(int p, int q) const;

 private:
  RingPtr ring_;
  std::vector<Ideal> family_;
  std::vector<Node> nodes_;
  std::vector<std::vector<char>> leq_;
  Ideal intersection_;
  mutable std::vector<std::vector<std::vector<int>>> chains_;  // per length
  void build_chains() const;
};

}  // namespace lcwb

#endif
