#include "adlvkit/corpus.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "adlvkit/errors.hpp"

namespace adlv {

std::vector<AffineElement> omega_representatives(const AffineWeyl& g) {
  std::vector<AffineElement> out;
  for (int i = 0; i <= g.rank(); ++i) {
    const auto t = g.tau(i);
    if (t && std::find(out.begin(), out.end(), *t) == out.end()) out.push_back(*t);
  }
  return out;
}

std::vector<AffineElement> enumerate_elements(const AffineWeyl& g, int max_length,
                                              const std::vector<AffineElement>& omegas,
                                              std::size_t budget) {
  std::unordered_set<AffineElement, AffineElementHash> seen;
  std::vector<AffineElement> all;
  for (const AffineElement& tau : omegas) {
    if (g.length(tau) != 0) throw ContractError("coset representative must have length zero");
    if (!seen.insert(tau).second) continue;
    std::vector<AffineElement> frontier{tau};
    all.push_back(tau);
    for (int l = 1; l <= max_length; ++l) {
      std::vector<AffineElement> next;
      for (const AffineElement& x : frontier)
        for (int i = 0; i < g.num_simple(); ++i) {
          AffineElement y = g.right_simple(x, i);
          if (g.length(y) != l || !seen.insert(y).second) continue;
          if (seen.size() > budget) throw CapExceeded("element enumeration", budget);
          next.push_back(y);
        }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }
  std::vector<std::pair<std::string, AffineElement>> keyed;
  keyed.reserve(all.size());
  for (auto& x : all) keyed.emplace_back(g.format(x), x);
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<AffineElement> out;
  out.reserve(keyed.size());
  for (auto& [text, x] : keyed) out.push_back(std::move(x));
  return out;
}

}  // namespace adlv
