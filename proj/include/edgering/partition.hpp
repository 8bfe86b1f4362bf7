#ifndef EDGERING_PARTITION_HPP
#define EDGERING_PARTITION_HPP

#include <string>
#include <vector>

#include "edgering/errors.hpp"

namespace edgering {

// Multipartite type (r_1 <= ... <= r_n). Vertex blocks occupy consecutive
// index ranges in part order: block k is [prefix_k, prefix_k + r_k).
class Partition {
public:
  explicit Partition(std::vector<int> parts);

  int block_count() const { return static_cast<int>(parts_.size()); }
  int vertex_count() const { return d_; }
  const std::vector<int>& parts() const { return parts_; }
  int part(int k) const { return parts_[static_cast<std::size_t>(k)]; }

  // block index of a vertex, and the [begin, end) vertex range of a block
  int block_of(int vertex) const { return block_of_[static_cast<std::size_t>(vertex)]; }
  int block_begin(int k) const { return prefix_[static_cast<std::size_t>(k)]; }
  int block_end(int k) const { return prefix_[static_cast<std::size_t>(k) + 1]; }

  bool bipartite() const { return parts_.size() == 2; }

  // canonical text form, e.g. "2,2,3"
  std::string to_string() const;

private:
  std::vector<int> parts_;
  std::vector<int> prefix_;
  std::vector<int> block_of_;
  int d_ = 0;
};

struct Edge {
  int u, v; // u < v, distinct blocks
};

enum class CaseClass { Bipartite, A, B, C };

char case_letter(CaseClass c);

Partition make_partition(std::vector<int> parts);
Partition parse_partition(const std::string& text);

std::vector<Edge> edges(const Partition& p);
long long edge_count(const Partition& p);

// Lemma: K_{r_1,...,r_n} has a perfect matching iff d is even and 2 r_n <= d.
bool has_perfect_matching(const Partition& p);

// Independent oracle: backtracking search over cross-block pairings.
// When a matching exists and witness is non-null, fills it with d/2 edges.
bool brute_force_matching(const Partition& p, const Budget& budget = default_budget(),
                          std::vector<Edge>* witness = nullptr);

CaseClass case_class(const Partition& p);

} // namespace edgering

#endif
