#include "compid/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace compid {

namespace {

template <typename Visit>
void for_each_relabelling(const CompartmentGraph& g, Visit visit) {
  const int n = g.vertex_count();
  // perm[v] is the new label of vertex v; perm[1] == 1 throughout.
  std::vector<int> tail(static_cast<std::size_t>(n > 1 ? n - 1 : 0));
  std::iota(tail.begin(), tail.end(), 2);
  std::vector<int> perm(static_cast<std::size_t>(n) + 1);
  std::string code;
  std::vector<Edge> mapped;
  do {
    perm[1] = 1;
    for (std::size_t k = 0; k < tail.size(); ++k) perm[k + 2] = tail[k];
    mapped.clear();
    for (const Edge& e : g.edges()) {
      mapped.push_back({perm[static_cast<std::size_t>(e.source)], perm[static_cast<std::size_t>(e.target)]});
    }
    std::sort(mapped.begin(), mapped.end());
    code.assign(1, static_cast<char>(n));
    for (const Edge& e : mapped) {
      code.push_back(static_cast<char>(e.source));
      code.push_back(static_cast<char>(e.target));
    }
    visit(code);
  } while (std::next_permutation(tail.begin(), tail.end()));
}

}  // namespace

std::string canonical_form(const CompartmentGraph& g) {
  std::string best;
  bool first = true;
  for_each_relabelling(g, [&](const std::string& code) {
    if (first || code < best) {
      best = code;
      first = false;
    }
  });
  return best;
}

std::uint64_t stable_hash(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t orbit_size(const CompartmentGraph& g) {
  std::set<std::string> images;
  for_each_relabelling(g, [&](const std::string& code) { images.insert(code); });
  return images.size();
}

}  // namespace compid
