#ifndef ABELIAN_JSON_HPP_
#define ABELIAN_JSON_HPP_

// JSON renderings of profiles, triple maps and search reports. Requires
// nlohmann/json.

#include <string>

#include <nlohmann/json.hpp>

#include "complexity.hpp"
#include "search.hpp"
#include "triples.hpp"

namespace abelian {

  using ordered_json = nlohmann::ordered_json;

  inline ordered_json to_json(ComplexityProfile const& profile) {
    ordered_json rows = ordered_json::array();
    for (auto const& r : profile.rows()) {
      rows.push_back({{"m", r.m}, {"f", r.f}, {"f_abelian", r.f_abelian}});
    }
    return {{"length", profile.length()}, {"rows", std::move(rows)}};
  }

  //! {"1": ["112", "123"], ...}: classes as sorted words, keyed by middle
  //! letter, in label order.
  inline ordered_json to_json(TripleMap const& t) {
    ordered_json out = ordered_json::object();
    for (std::size_t b = 0; b < t.alphabet().size(); ++b) {
      ordered_json classes = ordered_json::array();
      for (auto const& cls : t.at(static_cast<Letter>(b))) {
        classes.push_back(cls.sorted_word());
      }
      out[std::string(1, kLabels[b])] = std::move(classes);
    }
    return out;
  }

  //! The echoed config leaves out `shards`, which never affects results, so
  //! reports are byte-identical across schedules.
  inline ordered_json to_json(SearchReport const& report) {
    ordered_json pruned = ordered_json::object();
    for (auto r : kPruneRules) {
      pruned[to_string(r)] = report.pruned(r);
    }
    auto const& c = report.config;
    ordered_json out;
    out["survivors"] = report.survivors;
    if (report.exhaustion_depth) {
      out["exhaustion_depth"] = *report.exhaustion_depth;
    } else {
      out["exhaustion_depth"] = nullptr;
    }
    out["nodes_expanded"] = report.nodes_expanded;
    out["nodes_pruned"]   = std::move(pruned);
    out["config"]         = {{"n", c.n},         {"max_depth", c.max_depth},
                             {"r", c.r},         {"W", c.gap},
                             {"D", c.deadline},  {"B", c.letters_by}};
    return out;
  }

  inline std::string dump(ordered_json const& j) {
    return j.dump(2) + "\n";
  }

}  // namespace abelian

#endif  // ABELIAN_JSON_HPP_
