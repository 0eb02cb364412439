#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bier/complex.hpp"

namespace bier::verify {

/// Complexes on [m] other than the empty family and Δ_[m]: D(m) - 2.
std::int64_t expected_count(int m);

/// A node of the antichain decision tree: facets are subset masks chosen in
/// increasing order. A subtree task emits the node and all its descendants,
/// otherwise only the node itself. Tasks are listed in preorder, so their
/// concatenated output is the serial enumeration order.
struct Task {
  std::vector<int> prefix;
  bool subtree = false;
};

/// Fixed-depth partition; independent of the worker count.
std::vector<Task> partition(int m, int depth = 2);

using Visitor = std::function<void(const SimplicialComplex&)>;

void for_each_in_task(int m, const Task& task, const Visitor& visit);
/// Serial enumeration in canonical order. Throws MTooLarge for m > 6, BadM for m < 2.
void for_each_complex(int m, const Visitor& visit);
std::vector<SimplicialComplex> enumerate_complexes(int m);
std::int64_t count_complexes(int m, int jobs = 1);

enum class TheoremId { kSphere, kChromatic, kBuchstaber, kChordal, kSymmetry, kSuspension };
const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
const std::vector<TheoremId>& all_theorems();

struct VerifyOptions {
  int jobs = 1;
  bool up_to_iso = false;
  /// Seeded subsample size; 0 means every complex. m = 6 defaults to 10^5
  /// unless `full` is set.
  std::int64_t sample = 0;
  std::uint64_t seed = 1;
  bool full = false;
  /// Buchstaber: run the mod-p oracle on every Bier sphere.
  bool oracle = false;
  int p = 2;
  std::int64_t budget = 100'000'000;
};

enum class Status { kPass, kFail, kSkipped };
const char* to_string(Status status);

struct Failure {
  SimplicialComplex complex;
  std::string diagnostic;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::kSphere;
  int m = 0;
  Status status = Status::kPass;
  std::int64_t checked = 0;
  std::int64_t skipped = 0;
  std::vector<Failure> failures;
  VerifyOptions options;
  double wall_seconds = 0;
};

struct CheckOutcome {
  bool skipped = false;
  std::string failure;  // empty when the complex passes
};

/// One theorem on one complex.
CheckOutcome check_complex(TheoremId id, const SimplicialComplex& k, const VerifyOptions& options);

/// Throws MTooLarge for m > 6, BadM for m < 2 and InvalidInput for option
/// combinations outside the supported envelope.
TheoremReport verify_theorem(TheoremId id, int m, const VerifyOptions& options);

/// Byte-stable unless `include_timing` is set; the worker count is never recorded.
nlohmann::json to_json(const TheoremReport& report, bool include_timing = false);

}  // namespace bier::verify
