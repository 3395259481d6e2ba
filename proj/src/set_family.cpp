#include <algorithm>
#include <iterator>
#include <string>

#include "chromstream/cluster_packing.hpp"
#include "chromstream/errors.hpp"
#include "chromstream/rng.hpp"

namespace chromstream {

namespace {

constexpr std::size_t kAttemptsPerSet = 20000;

const std::vector<std::vector<std::uint32_t>> kFanoLines = {
    {0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}};

std::size_t overlap(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

}  // namespace

SetFamily gen_intersection_family(std::size_t d, std::size_t w, std::size_t theta,
                                  std::size_t count, std::uint64_t seed, FamilyMode mode) {
  if (count == 0) throw ArgumentError("family must contain at least one set");
  if (w == 0 || w > d) throw ArgumentError("set size must satisfy 1 <= w <= d");
  if (theta >= w) throw ArgumentError("intersection bound must satisfy theta < w");

  SetFamily family{d, w, theta, {}};
  if (mode == FamilyMode::fano) {
    if (d != 7 || w != 3) throw ArgumentError("Fano mode requires d = 7 and w = 3");
    if (theta < 1) throw GenerationError("Fano lines intersect in one point; theta >= 1 needed");
    if (count > kFanoLines.size()) throw GenerationError("the Fano plane has only 7 lines");
    family.sets.assign(kFanoLines.begin(), kFanoLines.begin() + static_cast<std::ptrdiff_t>(count));
    return family;
  }

  Rng rng(seed);
  for (std::size_t index = 0; index < count; ++index) {
    std::size_t bad_with = 0;
    std::size_t bad_overlap = 0;
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kAttemptsPerSet && !accepted; ++attempt) {
      auto candidate = random_subset(rng, d, w);
      accepted = true;
      for (std::size_t j = 0; j < family.sets.size(); ++j) {
        const std::size_t common = overlap(candidate, family.sets[j]);
        if (common > theta) {
          accepted = false;
          bad_with = j;
          bad_overlap = common;
          break;
        }
      }
      if (accepted) family.sets.push_back(std::move(candidate));
    }
    if (!accepted) {
      throw GenerationError("retry budget exhausted for set " + std::to_string(index) +
                            ": last candidate met set " + std::to_string(bad_with) + " in " +
                            std::to_string(bad_overlap) + " > " + std::to_string(theta) +
                            " elements");
    }
  }
  return family;
}

VerificationReport verify_family(const SetFamily& family) {
  VerificationReport report;
  std::string shape_problem;
  for (std::size_t i = 0; i < family.sets.size() && shape_problem.empty(); ++i) {
    const auto& s = family.sets[i];
    if (s.size() != family.w) {
      shape_problem = "set " + std::to_string(i) + " has " + std::to_string(s.size()) +
                      " elements, expected " + std::to_string(family.w);
    } else if (!std::is_sorted(s.begin(), s.end()) ||
               std::adjacent_find(s.begin(), s.end()) != s.end()) {
      shape_problem = "set " + std::to_string(i) + " is not strictly ascending";
    } else if (!s.empty() && s.back() >= family.d) {
      shape_problem = "set " + std::to_string(i) + " leaves the universe";
    }
  }
  report.add("set-shape", shape_problem.empty(), shape_problem);

  std::string pair_problem;
  for (std::size_t i = 0; i < family.sets.size() && pair_problem.empty(); ++i) {
    for (std::size_t j = i + 1; j < family.sets.size(); ++j) {
      const std::size_t common = overlap(family.sets[i], family.sets[j]);
      if (common > family.theta) {
        pair_problem = "sets " + std::to_string(i) + " and " + std::to_string(j) + " share " +
                       std::to_string(common) + " elements";
        break;
      }
    }
  }
  report.add("pairwise-intersection", pair_problem.empty(), pair_problem);
  return report;
}

}  // namespace chromstream
