#include "edgering/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace edgering {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2)
    throw std::invalid_argument("partition needs at least two blocks");
  for (int r : parts_)
    if (r < 1) throw std::invalid_argument("block sizes must be positive");
  std::sort(parts_.begin(), parts_.end());
  d_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  prefix_.resize(parts_.size() + 1, 0);
  for (std::size_t k = 0; k < parts_.size(); ++k)
    prefix_[k + 1] = prefix_[k] + parts_[k];
  block_of_.resize(static_cast<std::size_t>(d_));
  for (std::size_t k = 0; k < parts_.size(); ++k)
    for (int v = prefix_[k]; v < prefix_[k + 1]; ++v)
      block_of_[static_cast<std::size_t>(v)] = static_cast<int>(k);
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < parts_.size(); ++k) {
    if (k) os << ',';
    os << parts_[k];
  }
  return os.str();
}

char case_letter(CaseClass c) {
  switch (c) {
    case CaseClass::Bipartite: return '2';
    case CaseClass::A: return 'A';
    case CaseClass::B: return 'B';
    case CaseClass::C: return 'C';
  }
  return '?';
}

Partition make_partition(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition parse_partition(const std::string& text) {
  if (!text.empty() && text.find_last_not_of(" \t") != std::string::npos &&
      text[text.find_last_not_of(" \t")] == ',')
    throw std::invalid_argument("trailing comma in partition text");
  std::vector<int> parts;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad partition entry '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("bad partition entry '" + token + "'");
    parts.push_back(value);
  }
  if (parts.empty()) throw std::invalid_argument("empty partition text");
  return Partition(std::move(parts));
}

std::vector<Edge> edges(const Partition& p) {
  std::vector<Edge> es;
  es.reserve(static_cast<std::size_t>(edge_count(p)));
  const int n = p.block_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int u = p.block_begin(i); u < p.block_end(i); ++u)
        for (int v = p.block_begin(j); v < p.block_end(j); ++v)
          es.push_back(Edge{u, v});
  return es;
}

long long edge_count(const Partition& p) {
  long long d = p.vertex_count();
  long long sq = 0;
  for (int r : p.parts()) sq += static_cast<long long>(r) * r;
  return (d * d - sq) / 2;
}

bool has_perfect_matching(const Partition& p) {
  const int d = p.vertex_count();
  return d % 2 == 0 && 2 * p.parts().back() <= d;
}

namespace {

bool match_rec(const Partition& p, std::vector<bool>& used, int from,
               std::vector<Edge>* witness) {
  const int d = p.vertex_count();
  while (from < d && used[static_cast<std::size_t>(from)]) ++from;
  if (from == d) return true;
  used[static_cast<std::size_t>(from)] = true;
  for (int v = from + 1; v < d; ++v) {
    if (used[static_cast<std::size_t>(v)] || p.block_of(v) == p.block_of(from)) continue;
    used[static_cast<std::size_t>(v)] = true;
    if (match_rec(p, used, from + 1, witness)) {
      if (witness) witness->push_back(Edge{from, v});
      return true;
    }
    used[static_cast<std::size_t>(v)] = false;
  }
  used[static_cast<std::size_t>(from)] = false;
  return false;
}

} // namespace

bool brute_force_matching(const Partition& p, const Budget& budget,
                          std::vector<Edge>* witness) {
  const int d = p.vertex_count();
  if (d > budget.matching_cap)
    throw budget_exceeded("matching search capped at " + std::to_string(budget.matching_cap) +
                          " vertices, got " + std::to_string(d));
  if (d % 2 != 0) return false;
  std::vector<bool> used(static_cast<std::size_t>(d), false);
  if (witness) witness->clear();
  bool ok = match_rec(p, used, 0, witness);
  if (ok && witness) std::reverse(witness->begin(), witness->end());
  return ok;
}

CaseClass case_class(const Partition& p) {
  if (p.bipartite()) return CaseClass::Bipartite;
  const int d = p.vertex_count();
  if (2 * p.parts().back() >= d) return CaseClass::C;
  return d % 2 == 0 ? CaseClass::A : CaseClass::B;
}

} // namespace edgering
