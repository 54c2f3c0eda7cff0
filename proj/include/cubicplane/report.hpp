// Copyright 2026 The cubicplane Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CUBICPLANE_REPORT_HPP
#define CUBICPLANE_REPORT_HPP

#include <optional>
#include <string>

#include "cubicplane/curves.hpp"
#include "cubicplane/detrep.hpp"
#include "cubicplane/examples.hpp"
#include "cubicplane/fourfold.hpp"
#include "cubicplane/lattice.hpp"

namespace cubicplane {

struct AnalysisReport {
  Field field;
  DerivedEquations eq;
  SingClassification sc;
  SingularLocusX sx;
  CouplesReport couples;
  std::optional<Ns2Report> ns2;  // absent when there are no couples

  /// Bounds, double points, zero-dimensionality, and each couple being two
  /// planes of X meeting in a line.
  bool consistent() const;
};

/// Runs the full pipeline on a validated representation.
AnalysisReport analyze(const SymDetRep& rep);

Highlights highlights(const AnalysisReport& r);

/// Flat `key = value` lines, or one JSON object with the same keys.
/// Output depends only on the report, so repeated runs are identical.
std::string format_report(const AnalysisReport& r, bool json = false);

std::string format_highlights(const Highlights& h);

}  // namespace cubicplane

#endif  // CUBICPLANE_REPORT_HPP
