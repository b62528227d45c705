#ifndef QUANDLEKIT_SUITES_HPP_
#define QUANDLEKIT_SUITES_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "quandlekit/caps.hpp"
#include "quandlekit/fingroup.hpp"
#include "quandlekit/io.hpp"

namespace quandlekit {

struct SuiteOptions {
  /// Largest group or quandle order a sweep visits.
  std::size_t max_order = 8;
  std::uint64_t seed = 1;
  /// Randomized suites draw this many samples.
  std::size_t samples = 200;
  Caps caps;
};

struct SuiteCheck {
  std::string name;
  bool pass = false;
};

struct SuiteResult {
  std::string id;
  std::string title;
  Json results = Json::object();
  std::vector<SuiteCheck> checks;

  bool pass() const;
};

/// Identifiers accepted by run_theorem, in catalog order.
std::vector<std::string> const& theorem_ids();

/// Short description of a suite. Throws UnsupportedSpec for unknown ids.
std::string theorem_title(std::string const& id);

/// Runs one named verification suite. Throws UnsupportedSpec for unknown ids.
/// Equal options give equal results.
SuiteResult run_theorem(std::string const& id, SuiteOptions const& options = {});

/// The small-group catalog used by the conjugation and core sweeps, filtered
/// to orders <= max_order and sorted by order, then name.
std::vector<std::pair<std::string, FiniteGroup>> group_catalog(std::size_t max_order);

}  // namespace quandlekit

#endif  // QUANDLEKIT_SUITES_HPP_
