#pragma once

#include "qpath/chromatic.hpp"
#include "qpath/lattice.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qpath {

struct VerifyReport {
  std::string identity;
  std::string instance;
  bool pass = false;
  std::string left;
  std::string right;
};

struct SuiteResult {
  std::string identity;
  int bound = 0;
  std::vector<VerifyReport> reports;
  /// Instances outside the identity's domain, with the reason.
  std::vector<std::string> skipped;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  const VerifyReport* first_failure() const;
};

/// Modular law on the factor dyck[start, start+3), which must be ENE or NEN
/// inside an abelian subpath. Throws std::invalid_argument otherwise.
VerifyReport verify_modular_law(const Word& dyck, std::size_t start);
/// X_{UVW} against the rectangular expansion of V. Throws
/// std::invalid_argument unless UVW is Dyck and V is abelian.
VerifyReport verify_guay_paquet(const Word& u, const Word& v, const Word& w);
/// One report per number of sources k = 1..n.
std::vector<VerifyReport> verify_sum_clambda(const DyckGraph& g);
/// One report per j = 0..n; requires g abelian.
std::vector<VerifyReport> verify_initial_run_proposition(const DyckGraph& g);

/// Names accepted by run_suite, in the order `--all` runs them.
const std::vector<std::string>& suite_names();
int default_bound(const std::string& identity);
/// bound <= 0 selects the default. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& identity, int bound = 0);

} // namespace qpath
