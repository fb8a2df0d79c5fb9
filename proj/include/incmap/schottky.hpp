#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "incmap/geometry.hpp"

namespace incmap {

/// One element of the symmetry Schottky group: an even-length reduced word in
/// the circle reflections together with its composite Moebius map.
struct GroupElement {
  MoebiusMap map;
  std::vector<int> word;  // reflection indices, adjacent letters distinct
  int level = 0;          // word.size() / 2
};

/// The group enumerated as reduced words up to a truncation level, ordered by
/// level then lexicographic word. The identity is element 0.
class SchottkyGroup {
 public:
  static SchottkyGroup enumerate(const CircularDomain& domain, int max_level,
                                 std::size_t element_cap = 1'000'000);

  const CircularDomain& domain() const { return domain_; }
  int max_level() const { return max_level_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  const GroupElement& element(std::size_t k) const { return elements_[k]; }

  /// Number of enumerated elements at a given level.
  std::size_t count_at_level(int level) const;

  /// Expected reduced-word count n*(n-1)^(2s-1) for level s >= 1.
  static std::size_t reduced_word_count(int n, int level);

  /// Index of the element with the given reduced word, or npos.
  std::size_t find_word(const std::vector<int>& word) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  explicit SchottkyGroup(CircularDomain domain) : domain_(std::move(domain)) {}

  CircularDomain domain_;
  std::vector<GroupElement> elements_;
  int max_level_ = 0;
};

/// Reduce a word by cancelling adjacent equal letters (each reflection is an
/// involution).
std::vector<int> reduce_word(std::vector<int> word);

enum class ConvergenceVerdict { converging, inconclusive, diverging };

/// Per-level diagnostics for the first-class series
/// sum |alpha*delta - beta*gamma| / |gamma|^2 over non-identity elements.
struct ConvergenceReport {
  std::vector<double> level_sums;    // increment contributed by each level 1..max
  std::vector<double> partial_sums;  // cumulative, nondecreasing
  double ratio = 0.0;                // last-to-previous level-sum ratio
  ConvergenceVerdict verdict = ConvergenceVerdict::inconclusive;

  /// Geometric estimate of the omitted tail, used as the practical
  /// truncation-error proxy.
  double tail_estimate() const;
};

ConvergenceReport convergence_report(const SchottkyGroup& group, double ratio_threshold = 0.75);

std::string to_string(ConvergenceVerdict v);

}  // namespace incmap
