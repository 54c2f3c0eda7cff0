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

#include "cubicplane/report.hpp"

#include <sstream>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

namespace cubicplane {

bool AnalysisReport::consistent() const {
  // Cross-couple points and planes distinct from P are reported only: both
  // fail on singular members such as ex42i and ex43_fermat.
  const bool couples_ok = couples.within_lines && couples.all_on_x;
  return sx.bounds_ok && sx.all_double && sx.zero_dimensional && couples_ok;
}

AnalysisReport analyze(const SymDetRep& rep) {
  AnalysisReport r{rep.field(), derived_equations(rep), {}, {}, {}, std::nullopt};
  r.sc = classify_singularities(rep, r.eq);
  r.sx = singular_locus_x(rep, r.eq, r.sc);
  r.couples = couples_and_intersections(rep, r.eq, r.sc.s_theta);
  if (!r.sc.s_theta.empty()) r.ns2 = ns2_gram(static_cast<int>(r.sc.s_theta.size()));
  return r;
}

Highlights highlights(const AnalysisReport& r) {
  Highlights h;
  h.sing_c = static_cast<int>(r.sc.sing_c.size());
  h.s_theta = static_cast<int>(r.sc.s_theta.size());
  h.s_theta_tilde = static_cast<int>(r.sc.s_theta_tilde.size());
  h.s_c = static_cast<int>(r.sc.s_c.size());
  h.b = static_cast<int>(r.sx.base.points.size());
  h.sing_x = static_cast<int>(r.sx.points.size());
  h.smooth = r.sx.smooth;
  return h;
}

namespace {

using Value = std::variant<std::string, long, bool, std::vector<std::string>>;
using Entries = std::vector<std::pair<std::string, Value>>;

std::vector<std::string> point_list(const std::vector<Point>& pts) {
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(point_to_string(p));
  return out;
}

Entries collect(const AnalysisReport& r) {
  Entries e;
  auto put = [&e](const std::string& k, Value v) { e.emplace_back(k, std::move(v)); };
  auto count = [](const auto& v) { return static_cast<long>(v.size()); };

  put("field", field_spec(r.field));
  put("sextic", r.eq.sextic.to_string());
  put("d_cubic", r.eq.d_cubic.to_string());
  put("fourfold", r.eq.fourfold.to_string());
  put("complete", r.sc.complete && r.sx.complete);

  std::vector<Point> sing;
  std::vector<std::string> ranks;
  for (const auto& rec : r.sc.sing_c) {
    sing.push_back(rec.p);
    ranks.push_back(point_to_string(rec.p) + " rank " + std::to_string(rec.rank) + (rec.on_d ? " on_d" : " off_d"));
  }
  put("sing_c_count", count(sing));
  put("sing_c", point_list(sing));
  put("sing_c_ranks", ranks);
  put("s_theta_count", count(r.sc.s_theta));
  put("s_theta", point_list(r.sc.s_theta));
  put("s_theta_tilde_count", count(r.sc.s_theta_tilde));
  put("s_theta_tilde", point_list(r.sc.s_theta_tilde));
  // Points of S-tilde-theta where M has rank 3; nonempty exactly when the
  // D-criterion admits nodes outside the rank-2 stratum.
  std::vector<Point> tilde_rank3;
  for (const auto& rec : r.sc.sing_c)
    if (rec.on_d && rec.rank == 3) tilde_rank3.push_back(rec.p);
  put("s_theta_tilde_rank3_count", count(tilde_rank3));
  put("s_theta_tilde_rank3", point_list(tilde_rank3));
  put("s_c_count", count(r.sc.s_c));
  put("s_c", point_list(r.sc.s_c));
  put("i_c_count", count(r.sc.i_c));
  put("i_c", point_list(r.sc.i_c));

  put("net_rank", static_cast<long>(r.sx.base.net_rank));
  put("b_count", count(r.sx.base.points));
  put("b_points", point_list(r.sx.base.points));
  put("b_general_position", r.sx.base.general_position);
  put("cone_vertices", point_list(r.sx.cone_vertices));
  put("sing_x_count", count(r.sx.points));
  put("sing_x", point_list(r.sx.points));
  put("all_double", r.sx.all_double);
  put("zero_dimensional", r.sx.zero_dimensional);
  put("bounds_ok", r.sx.bounds_ok);
  put("smooth", r.sx.smooth);

  std::vector<std::string> couples;
  for (const auto& c : r.couples.couples) {
    std::string s = point_to_string(c.source) + ": " + c.first.to_string() + " | " + c.second.to_string();
    couples.push_back(std::move(s));
  }
  put("couples_count", count(r.couples.couples));
  put("couples", couples);
  put("couples_within_lines", r.couples.within_lines);
  put("couples_cross_points", r.couples.cross_points);
  put("couples_cross_checks", static_cast<long>(r.couples.cross_checks));
  put("couples_none_is_p", r.couples.none_is_p);
  put("couples_on_x", r.couples.all_on_x);

  if (r.ns2) {
    put("ns2_class_count", static_cast<long>(r.ns2->class_count));
    put("ns2_det", r.ns2->det.get_str());
    put("ns2_rank", static_cast<long>(r.ns2->rank));
    put("ns2_rank_lower_bound", static_cast<long>(r.ns2->rank_lower_bound));
  } else {
    put("ns2_class_count", 1L);
    put("ns2_det", std::string("3"));
    put("ns2_rank", 1L);
    put("ns2_rank_lower_bound", 1L);
  }
  return e;
}

}  // namespace

std::string format_report(const AnalysisReport& r, bool json) {
  const Entries e = collect(r);
  if (json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : e) std::visit([&j, &k](const auto& x) { j[k] = x; }, v);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  for (const auto& [k, v] : e) {
    out << k << " = ";
    if (const auto* s = std::get_if<std::string>(&v)) {
      out << *s;
    } else if (const auto* n = std::get_if<long>(&v)) {
      out << *n;
    } else if (const auto* b = std::get_if<bool>(&v)) {
      out << (*b ? "true" : "false");
    } else {
      const auto& list = std::get<std::vector<std::string>>(v);
      out << "[";
      for (std::size_t i = 0; i < list.size(); ++i) out << (i ? "; " : "") << list[i];
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

std::string format_highlights(const Highlights& h) {
  std::ostringstream out;
  out << "sing_c=" << h.sing_c << " s_theta=" << h.s_theta << " s_theta_tilde=" << h.s_theta_tilde
      << " s_c=" << h.s_c << " b=" << h.b << " sing_x=" << h.sing_x << " smooth=" << (h.smooth ? "true" : "false");
  return out.str();
}

}  // namespace cubicplane
