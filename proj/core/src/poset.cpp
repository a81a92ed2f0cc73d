#include "lcwb/poset.hpp"

#include <algorithm>
#include <cassert>

#include "lcwb/error.hpp"

namespace lcwb {

PosetOfSums::PosetOfSums(RingPtr ring, std::vector<Ideal> family)
    : ring_(std::move(ring)), family_(std::move(family)) {
  assert(!family_.empty());
  int k = static_cast<int>(family_.size());

  // all distinct subset sums, deduplicated by reduced Grobner bases
  struct Raw {
    Ideal ideal;
    unsigned family_mask;
  };
  std::vector<Raw> raw;
  for (unsigned mask = 1; mask < (1u << k); ++mask) {
    Ideal sum = Ideal::zero(ring_);
    for (int i = 0; i < k; ++i)
      if (mask & (1u << i)) sum = ideal_sum(sum, family_[i]);
    bool dup = false;
    for (auto& r : raw)
      if (r.ideal.equals(sum)) {
        dup = true;
        break;
      }
    if (!dup) raw.push_back({sum, mask});
  }

  // maximal family per node
  std::vector<Node> nodes;
  for (auto& r : raw) {
    Node n;
    n.ideal = r.ideal;
    for (int i = 0; i < k; ++i)
      if (r.ideal.contains_ideal(family_[i])) n.family.push_back(i);
    for (int i : n.family) {
      for (auto& g : family_[i].gens()) {
        if (!g.is_term())
          throw Error(ErrorCode::NonHomogeneousInput,
                      "poset generator lists need monomial family generators");
        n.gens.push_back(g.leading().m);
        n.gen_src.push_back(i);
      }
    }
    nodes.push_back(std::move(n));
  }

  // topological order for sign determinism: largest family first
  std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    if (a.family.size() != b.family.size()) return a.family.size() > b.family.size();
    return a.family < b.family;
  });
  nodes_ = std::move(nodes);

  int m = size();
  leq_.assign(m, std::vector<char>(m, 0));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q)
      leq_[p][q] = nodes_[p].ideal.contains_ideal(nodes_[q].ideal) ? 1 : 0;

  intersection_ = family_[0];
  for (int i = 1; i < k; ++i) intersection_ = ideal_intersection(intersection_, family_[i]);
}

void PosetOfSums::build_chains() const {
  if (!chains_.empty()) return;
  int m = size();
  chains_.push_back({});
  for (int p = 0; p < m; ++p) chains_[0].push_back({p});
  while (true) {
    const auto& prev = chains_.back();
    std::vector<std::vector<int>> next;
    for (auto& c : prev)
      for (int q = 0; q < m; ++q)
        if (lt(c.back(), q)) {
          auto ext = c;
          ext.push_back(q);
          next.push_back(std::move(ext));
        }
    if (next.empty()) break;
    chains_.push_back(std::move(next));
  }
}

const std::vector<std::vector<int>>& PosetOfSums::chains(int k) const {
  build_chains();
  static const std::vector<std::vector<int>> empty;
  if (k < 0 || k >= static_cast<int>(chains_.size())) return empty;
  return chains_[k];
}

int PosetOfSums::height() const {
  build_chains();
  return static_cast<int>(chains_.size()) - 1;
}

std::vector<int> PosetOfSums::gen_embedding(int p, int q) const {
  assert(leq(p, q));
  const Node& np = nodes_[p];
  const Node& nq = nodes_[q];
  std::vector<int> emb;
  size_t pos = 0;
  for (size_t j = 0; j < nq.gens.size(); ++j) {
    // q's family is a subset of p's family; generators appear in the same
    // relative order, so scan forward
    while (pos < np.gens.size() &&
           !(np.gen_src[pos] == nq.gen_src[j] && np.gens[pos] == nq.gens[j]))
      ++pos;
    assert(pos < np.gens.size());
    emb.push_back(static_cast<int>(pos));
    ++pos;
  }
  return emb;
}

}  // namespace lcwb
