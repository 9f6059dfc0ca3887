#ifndef ABELIAN_PERIODICITY_HPP_
#define ABELIAN_PERIODICITY_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "word.hpp"

namespace abelian {

  //! w_i = w_{i + period} for all i >= preperiod, with the periodic tail
  //! holding at least two full periods.
  struct UltimatePeriod {
    std::size_t preperiod;
    std::size_t period;

    friend bool operator==(UltimatePeriod const&, UltimatePeriod const&)
        = default;
  };

  struct PeriodReport {
    std::size_t                   period;  // least p >= 1 with w_i = w_{i+p}
    bool                          aperiodic_at_scale;  // period > L/2
    std::optional<UltimatePeriod> ultimate;
  };

  namespace detail {
    // Least period of a nonempty w, via the prefix function.
    inline std::size_t least_period(std::span<Letter const> w) {
      std::size_t const        n = w.size();
      std::vector<std::size_t> border(n, 0);
      for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = border[i - 1];
        while (k > 0 && w[i] != w[k]) {
          k = border[k - 1];
        }
        if (w[i] == w[k]) {
          ++k;
        }
        border[i] = k;
      }
      return n - border[n - 1];
    }
  }  // namespace detail

  //! Least period, finite-scale aperiodicity flag, and the ultimate period
  //! (least period first, then least preperiod) whose tail repeats at
  //! least twice.
  inline PeriodReport period_report(Word const& word) {
    if (word.empty()) {
      throw Error("period_report needs a nonempty word");
    }
    auto const        w = word.letters();
    std::size_t const L = w.size();
    PeriodReport      report{};
    report.period             = detail::least_period(w);
    report.aperiodic_at_scale = 2 * report.period > L;

    for (std::size_t p = 1; 2 * p <= L && !report.ultimate; ++p) {
      // Longest suffix with period p: walk back while w_i = w_{i+p}.
      std::size_t c = L - p;
      while (c > 0 && w[c - 1] == w[c - 1 + p]) {
        --c;
      }
      if (c + 2 * p <= L) {
        report.ultimate = UltimatePeriod{c, p};
      }
    }
    return report;
  }

  //! Occurrence-gap statistics for one factor length.
  struct LengthGaps {
    static constexpr std::size_t kInfinite
        = std::numeric_limits<std::size_t>::max();

    std::size_t length;
    //! Maximum gap between consecutive occurrence starts of any factor;
    //! kInfinite if some factor occurs only once.
    std::size_t max_gap;
    //! Maximum consecutive-start gap, ignoring unrepeated factors (0 if none).
    std::size_t max_finite_gap;
    //! Maximum over factors of (L - length + 1) - last start: how far the
    //! earliest possible next occurrence lies beyond the last one.
    std::size_t max_tail;
  };

  struct GapReport {
    std::size_t             r;
    std::vector<LengthGaps> lengths;  // lengths[l - 1] for l = 1..r
  };

  //! Recurrence gaps, measured between start positions, for factor lengths
  //! 1..r.
  inline GapReport gap_report(Word const& word, std::size_t r) {
    if (r < 1 || r > word.size()) {
      throw Error("gap_report: r out of range");
    }
    auto const        w = word.letters();
    std::size_t const L = w.size();
    GapReport         report{r, {}};
    for (std::size_t len = 1; len <= r; ++len) {
      std::map<std::vector<Letter>, std::size_t> last;
      LengthGaps g{len, 0, 0, 0};
      for (std::size_t i = 0; i + len <= L; ++i) {
        std::vector<Letter> key(w.begin() + static_cast<std::ptrdiff_t>(i),
                                w.begin() + static_cast<std::ptrdiff_t>(i + len));
        auto [it, fresh] = last.try_emplace(std::move(key), i);
        if (!fresh) {
          g.max_finite_gap = std::max(g.max_finite_gap, i - it->second);
          it->second       = i;
        }
      }
      g.max_gap = g.max_finite_gap;
      std::map<std::vector<Letter>, std::size_t> count;
      for (std::size_t i = 0; i + len <= L; ++i) {
        ++count[std::vector<Letter>(
            w.begin() + static_cast<std::ptrdiff_t>(i),
            w.begin() + static_cast<std::ptrdiff_t>(i + len))];
      }
      for (auto const& [key, c] : count) {
        if (c == 1) {
          g.max_gap = LengthGaps::kInfinite;
        }
        g.max_tail = std::max(g.max_tail, (L - len + 1) - last.at(key));
      }
      report.lengths.push_back(g);
    }
    return report;
  }

}  // namespace abelian

#endif  // ABELIAN_PERIODICITY_HPP_
