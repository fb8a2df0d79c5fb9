#include "incmap/schottky.hpp"

#include <cmath>

namespace incmap {

SchottkyGroup SchottkyGroup::enumerate(const CircularDomain& domain, int max_level,
                                       std::size_t element_cap) {
  if (max_level < 0) throw invalid_parameters_error("max_level must be >= 0");
  SchottkyGroup g(domain);
  g.max_level_ = max_level;
  g.elements_.push_back(GroupElement{MoebiusMap(), {}, 0});

  const int n = domain.size();
  if (n < 2 || max_level == 0) return g;  // only the identity exists for n = 1

  std::vector<MoebiusMap> pair_maps(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b)
        pair_maps[static_cast<std::size_t>(a) * n + b] =
            compose_reflection_pair(domain.reflection(a), domain.reflection(b));

  std::size_t level_begin = 0;  // first index of the previous level
  for (int s = 1; s <= max_level; ++s) {
    const std::size_t level_end = g.elements_.size();
    for (std::size_t p = level_begin; p < level_end; ++p) {
      const int last = g.elements_[p].word.empty() ? -1 : g.elements_[p].word.back();
      for (int a = 0; a < n; ++a) {
        if (a == last) continue;
        for (int b = 0; b < n; ++b) {
          if (b == a) continue;
          if (g.elements_.size() >= element_cap)
            throw truncation_too_deep_error("group enumeration exceeded the element cap");
          GroupElement e;
          e.word = g.elements_[p].word;
          e.word.push_back(a);
          e.word.push_back(b);
          e.level = s;
          e.map = g.elements_[p].map.compose(pair_maps[static_cast<std::size_t>(a) * n + b]);
          g.elements_.push_back(std::move(e));
        }
      }
    }
    level_begin = level_end;
  }
  return g;
}

std::size_t SchottkyGroup::count_at_level(int level) const {
  std::size_t c = 0;
  for (const auto& e : elements_)
    if (e.level == level) ++c;
  return c;
}

std::size_t SchottkyGroup::reduced_word_count(int n, int level) {
  if (level == 0) return 1;
  if (n < 2) return 0;
  std::size_t c = static_cast<std::size_t>(n);
  for (int i = 0; i < 2 * level - 1; ++i) c *= static_cast<std::size_t>(n - 1);
  return c;
}

std::size_t SchottkyGroup::find_word(const std::vector<int>& word) const {
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (elements_[k].word == word) return k;
  return npos;
}

std::vector<int> reduce_word(std::vector<int> word) {
  std::vector<int> out;
  out.reserve(word.size());
  for (int letter : word) {
    if (!out.empty() && out.back() == letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

double ConvergenceReport::tail_estimate() const {
  if (level_sums.empty()) return 0.0;
  const double last = level_sums.back();
  if (ratio > 0.0 && ratio < 1.0) return last * ratio / (1.0 - ratio);
  return last;
}

ConvergenceReport convergence_report(const SchottkyGroup& group, double ratio_threshold) {
  ConvergenceReport rep;
  rep.level_sums.assign(static_cast<std::size_t>(std::max(group.max_level(), 0)), 0.0);
  for (const auto& e : group.elements()) {
    if (e.level == 0) continue;
    const double gamma2 = std::norm(e.map.c());
    rep.level_sums[static_cast<std::size_t>(e.level - 1)] +=
        std::abs(e.map.determinant()) / gamma2;
  }
  rep.partial_sums.resize(rep.level_sums.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < rep.level_sums.size(); ++i) {
    acc += rep.level_sums[i];
    rep.partial_sums[i] = acc;
  }

  if (group.domain().size() < 2) {
    // Empty series: trivially convergent.
    rep.verdict = ConvergenceVerdict::converging;
    return rep;
  }
  const std::size_t m = rep.level_sums.size();
  if (m < 2) {
    rep.verdict = ConvergenceVerdict::inconclusive;
    return rep;
  }
  const double r1 = rep.level_sums[m - 1] / rep.level_sums[m - 2];
  const double r2 = m >= 3 ? rep.level_sums[m - 2] / rep.level_sums[m - 3] : r1;
  rep.ratio = r1;
  if (r1 < ratio_threshold && r2 < ratio_threshold)
    rep.verdict = ConvergenceVerdict::converging;
  else if (r1 >= 1.0)
    rep.verdict = ConvergenceVerdict::diverging;
  else
    rep.verdict = ConvergenceVerdict::inconclusive;
  return rep;
}

std::string to_string(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::converging:
      return "converging";
    case ConvergenceVerdict::diverging:
      return "diverging";
    case ConvergenceVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

}  // namespace incmap
