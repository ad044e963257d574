#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bicirc/matroid.hpp"
#include "bicirc/multigraph.hpp"

namespace bicirc {

struct VerificationReport {
  std::string check_id;
  std::string status;  // "pass", "fail", or "skipped(<reason>)"
  std::vector<std::string> witnesses;
  std::optional<std::string> counterexample;
  long long elapsed_ms = 0;
};

/// JSON array with fields exactly
/// {check_id, status, witnesses, counterexample, elapsed_ms}.
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Builtin matroids: "U<r>,<n>", "U2,6p" and "U2,5pp" (series extensions),
/// "MK23", "T223", "T222p", "W3", "W4", "K4l", "D4ll".
Matroid builtin_matroid(const std::string& name);
std::vector<std::string> builtin_matroid_names();

/// Exhaustive single-element delete/contract search with memoized failure
/// classes.  |E(m)| <= 14, |E(target)| <= 10.  The witness is the op
/// sequence ('d' or 'c', element label) reaching a matroid isomorphic to
/// the target.
bool matroid_minor_contains(const Matroid& m, const Matroid& target,
                            std::vector<std::pair<char, int>>* witness = nullptr);

/// Every check accepts a negative-control flag: with corrupt=true a
/// deliberately broken fixture is substituted and the check must fail.
VerificationReport check_self_dualities(bool corrupt = false);
VerificationReport check_free_swirls(int n_max = 7, bool corrupt = false);
VerificationReport check_excluded_minors(bool corrupt = false);
VerificationReport check_representation_catalogs(bool corrupt = false);
VerificationReport check_cobicircular_equivalence(bool corrupt = false);
VerificationReport check_extension_minors(bool corrupt = false);
VerificationReport check_main_characterization(int max_edges = 9, int jobs = 1,
                                               bool corrupt = false);

std::vector<std::string> check_ids();

/// Runs one check by id ("all" is handled by the caller).
VerificationReport run_check(const std::string& check_id, int max_edges,
                             int jobs);

}  // namespace bicirc
