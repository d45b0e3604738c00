#pragma once

// Helly-type verification over box families.
//
// A report answers three questions for a subset size k:
//   (i)   is every k-subset feasible?
//   (ii)  is the whole family feasible?
//   (iii) which k-subset is the first infeasible one, in lexicographic order?
// With k at least the mode's Helly number, (i) without (ii) contradicts the
// theorem behind the mode and is flagged as a violation.
//
// The full family is decided first. If it is feasible every subset is too, so
// enumeration is only needed when it is infeasible; it then streams subsets
// by unranking a shared atomic counter and keeps the smallest failing rank,
// which makes the outcome independent of the thread count.

#include "tk/dual_flats.hpp"
#include "tk/transversal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace tk {

enum class HellyMode { Ascending, Sign, Global, Hyperplane, HyperplaneGlobal, Star };

inline std::string to_string(HellyMode m) {
  switch (m) {
    case HellyMode::Ascending: return "ascending";
    case HellyMode::Sign: return "sign";
    case HellyMode::Global: return "global";
    case HellyMode::Hyperplane: return "hyperplane";
    case HellyMode::HyperplaneGlobal: return "hyperplane-global";
    case HellyMode::Star: return "star";
  }
  return "unknown";
}

inline HellyMode parse_helly_mode(std::string_view s) {
  for (auto m : {HellyMode::Ascending, HellyMode::Sign, HellyMode::Global, HellyMode::Hyperplane,
                 HellyMode::HyperplaneGlobal, HellyMode::Star}) {
    if (s == to_string(m)) return m;
  }
  throw PreconditionError("unknown Helly mode '" + std::string(s) + "'");
}

/// 2d-1 for line modes within one sign class, d+1 for hyperplanes within one
/// sign class, times 2^(d-1) for the global versions.
inline std::size_t helly_number(HellyMode mode, Eigen::Index d) {
  const auto ud = static_cast<std::size_t>(d);
  const std::size_t classes = std::size_t{1} << (ud - 1);
  switch (mode) {
    case HellyMode::Ascending:
    case HellyMode::Sign:
    case HellyMode::Star: return 2 * ud - 1;
    case HellyMode::Global: return classes * (2 * ud - 1);
    case HellyMode::Hyperplane: return ud + 1;
    case HellyMode::HyperplaneGlobal: return classes * (ud + 1);
  }
  return 0;
}

struct HellyOptions {
  unsigned jobs = 1;
  /// Enumerate every subset even when the full family is feasible.
  bool exhaustive = false;
  /// Subset size to test instead of the Helly number.
  std::optional<std::size_t> subset_size;
};

struct HellyReport {
  std::size_t family_size = 0;
  std::size_t helly_number = 0;
  std::size_t subset_size = 0;
  bool all_subsets_feasible = false;                    // (i)
  bool family_feasible = false;                         // (ii)
  std::optional<std::vector<std::size_t>> violating_subset;  // (iii)
  std::uint64_t subsets_total = 0;
  std::uint64_t subsets_checked = 0;
  /// (i) was inferred from a transversal of the whole family.
  bool certified_by_family = false;
  bool theorem_violation = false;
  /// Subset size below the Helly number, (i) true and (ii) false.
  bool tightness_instance = false;
};

/// C(n, k), throwing when it does not fit in 63 bits.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (unsigned __int128)INT64_MAX) throw PreconditionError("subset count exceeds 2^63");
  }
  return static_cast<std::uint64_t>(r);
}

/// The rank-th k-subset of {0..n-1} in lexicographic order.
inline std::vector<std::size_t> unrank_subset(std::size_t n, std::size_t k, std::uint64_t rank) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t c = next;; ++c) {
      const std::uint64_t block = binomial(n - c - 1, k - slot - 1);
      if (rank < block) {
        out.push_back(c);
        next = c + 1;
        break;
      }
      rank -= block;
    }
  }
  return out;
}

template <typename Item>
using FamilyPredicate = std::function<bool(const std::vector<Item>&)>;

template <typename Item>
HellyReport helly_check_predicate(const std::vector<Item>& family, std::size_t helly, const FamilyPredicate<Item>& feasible,
                                  const HellyOptions& options = {}) {
  HellyReport rep;
  rep.family_size = family.size();
  rep.helly_number = helly;
  rep.subset_size = options.subset_size.value_or(helly);
  if (rep.subset_size == 0) throw PreconditionError("subset size must be positive");
  rep.family_feasible = family.empty() || feasible(family);

  const std::size_t n = family.size();
  const std::size_t k = std::min(rep.subset_size, n);
  rep.subsets_total = n == 0 ? 0 : binomial(n, k);

  if (rep.family_feasible && !options.exhaustive) {
    rep.all_subsets_feasible = true;
    rep.certified_by_family = true;
  } else if (k == n) {
    rep.subsets_checked = rep.subsets_total;
    rep.all_subsets_feasible = rep.family_feasible;
    if (!rep.family_feasible) {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      rep.violating_subset = std::move(all);
    }
  } else {
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> first_bad{rep.subsets_total};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      try {
        std::vector<Item> subset;
        subset.reserve(k);
        while (true) {
          const std::uint64_t r = next.fetch_add(1);
          if (r >= first_bad.load()) return;
          subset.clear();
          for (auto i : unrank_subset(n, k, r)) subset.push_back(family[i]);
          if (!feasible(subset)) {
            std::uint64_t cur = first_bad.load();
            while (r < cur && !first_bad.compare_exchange_weak(cur, r)) {
            }
          }
        }
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        first_bad.store(0);
      }
    };
    const unsigned jobs = std::max(1U, options.jobs);
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);
    const std::uint64_t bad = first_bad.load();
    if (bad < rep.subsets_total) {
      rep.violating_subset = unrank_subset(n, k, bad);
      rep.subsets_checked = bad + 1;
    } else {
      rep.all_subsets_feasible = true;
      rep.subsets_checked = rep.subsets_total;
    }
  }
  const bool contradiction = rep.all_subsets_feasible && !rep.family_feasible;
  rep.theorem_violation = contradiction && rep.subset_size >= rep.helly_number;
  rep.tightness_instance = contradiction && rep.subset_size < rep.helly_number;
  return rep;
}

/// Feasibility predicate of a line/hyperplane mode. Sign and Hyperplane use
/// eps (ascending when absent).
template <typename Scalar>
FamilyPredicate<Box<Scalar>> mode_predicate(HellyMode mode, Eigen::Index d, std::optional<SignClass> eps = {}) {
  const SignClass sign = eps.value_or(SignClass::ascending(d));
  if (sign.dim() != d) throw DimensionError("sign class dimension differs from boxes");
  switch (mode) {
    case HellyMode::Ascending:
      return [](const std::vector<Box<Scalar>>& b) {
        return strict_sign_transversal(b, SignClass::ascending(b.front().dim())).has_value();
      };
    case HellyMode::Sign:
      return [sign](const std::vector<Box<Scalar>>& b) { return sign_transversal(b, sign).has_value(); };
    case HellyMode::Global:
      return [](const std::vector<Box<Scalar>>& b) { return santalo_transversal(b).feasible; };
    case HellyMode::Hyperplane:
      return [sign](const std::vector<Box<Scalar>>& b) { return hyperplane_transversal(b, sign).has_value(); };
    case HellyMode::HyperplaneGlobal:
      return [](const std::vector<Box<Scalar>>& b) { return hyperplane_transversal_any(b).has_value(); };
    case HellyMode::Star:
      return [](const std::vector<Box<Scalar>>& b) {
        std::vector<StarBox<Scalar>> s;
        for (const auto& box : b) s.emplace_back(box.min_corner(), box.max_corner());
        return star_family_transversal(s).has_value();
      };
  }
  throw PreconditionError("unknown Helly mode");
}

/// Star mode reads each box as the *-box with the same bounds.
template <typename Scalar>
HellyReport helly_check(const std::vector<Box<Scalar>>& boxes, HellyMode mode, std::optional<SignClass> eps = {},
                        const HellyOptions& options = {}) {
  const Eigen::Index d = family_dim(boxes);
  if ((mode == HellyMode::Global || mode == HellyMode::HyperplaneGlobal || mode == HellyMode::Star) && d < 2) {
    throw PreconditionError("mode needs d >= 2");
  }
  return helly_check_predicate<Box<Scalar>>(boxes, helly_number(mode, d), mode_predicate<Scalar>(mode, d, eps),
                                            options);
}

template <typename Scalar>
HellyReport helly_check_hyperplanes(const std::vector<Box<Scalar>>& boxes, std::optional<SignClass> eps = {},
                                    const HellyOptions& options = {}) {
  return helly_check(boxes, HellyMode::Hyperplane, std::move(eps), options);
}

}  // namespace tk
