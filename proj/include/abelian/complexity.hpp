#ifndef ABELIAN_COMPLEXITY_HPP_
#define ABELIAN_COMPLEXITY_HPP_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "parikh.hpp"
#include "word.hpp"

namespace abelian {

  struct ComplexityRow {
    std::size_t m;
    std::size_t f;           // distinct factors of length m
    std::size_t f_abelian;   // distinct abelian classes of length m

    friend bool operator==(ComplexityRow const&, ComplexityRow const&) = default;
  };

  //! Subword and abelian complexity of a finite word for m = 1..m_max.
  class ComplexityProfile {
   public:
    ComplexityProfile(std::size_t length, std::vector<ComplexityRow> rows)
        : length_(length), rows_(std::move(rows)) {}

    [[nodiscard]] std::size_t length() const noexcept {
      return length_;
    }

    [[nodiscard]] std::size_t max_m() const noexcept {
      return rows_.size();
    }

    [[nodiscard]] std::vector<ComplexityRow> const& rows() const noexcept {
      return rows_;
    }

    //! f(0) = 1 by convention.
    [[nodiscard]] std::size_t f(std::size_t m) const {
      return m == 0 ? 1 : row(m).f;
    }

    //! f_ab(0) = 1 by convention.
    [[nodiscard]] std::size_t f_abelian(std::size_t m) const {
      return m == 0 ? 1 : row(m).f_abelian;
    }

    friend bool operator==(ComplexityProfile const&,
                           ComplexityProfile const&) = default;

   private:
    [[nodiscard]] ComplexityRow const& row(std::size_t m) const {
      if (m > rows_.size()) {
        throw Error("m = " + std::to_string(m) + " beyond profile range");
      }
      return rows_[m - 1];
    }

    std::size_t                length_;
    std::vector<ComplexityRow> rows_;
  };

  //! Number of distinct factors of length m (exact string keys).
  inline std::size_t subword_complexity(Word const& word, std::size_t m) {
    if (m == 0) {
      return 1;
    }
    if (m > word.size()) {
      return 0;
    }
    auto        letters = word.letters();
    std::string_view text(reinterpret_cast<char const*>(letters.data()),
                          letters.size());
    std::unordered_set<std::string_view> seen;
    seen.reserve(word.size() - m + 1);
    for (std::size_t i = 0; i + m <= word.size(); ++i) {
      seen.insert(text.substr(i, m));
    }
    return seen.size();
  }

  //! Number of distinct abelian classes of length m, by one sliding window
  //! that adds the entering letter and removes the leaving one.
  inline std::size_t abelian_complexity(Word const& word, std::size_t m) {
    if (m == 0) {
      return 1;
    }
    if (m > word.size()) {
      return 0;
    }
    auto                                         w = word.letters();
    ParikhVector                                 window(word.alphabet().size());
    std::unordered_set<ParikhVector, ParikhHash> classes;
    for (std::size_t i = 0; i < m; ++i) {
      ++window[w[i]];
    }
    classes.insert(window);
    for (std::size_t i = m; i < w.size(); ++i) {
      ++window[w[i]];
      --window[w[i - m]];
      classes.insert(window);
    }
    return classes.size();
  }

  inline ComplexityProfile complexity_profile(Word const& word,
                                              std::size_t m_max) {
    if (m_max > word.size()) {
      throw Error("m_max = " + std::to_string(m_max)
                  + " exceeds word length " + std::to_string(word.size()));
    }
    std::vector<ComplexityRow> rows;
    rows.reserve(m_max);
    for (std::size_t m = 1; m <= m_max; ++m) {
      rows.push_back({m, subword_complexity(word, m),
                      abelian_complexity(word, m)});
    }
    return ComplexityProfile(word.size(), std::move(rows));
  }

  //! Brute-force count of abelian classes of length m: every factor's
  //! Parikh vector is computed from scratch. For cross-validation only.
  inline std::size_t oracle_abelian_count(Word const& word, std::size_t m) {
    if (m < 1 || m > word.size()) {
      throw Error("oracle_abelian_count: m out of range");
    }
    std::vector<ParikhVector> seen;
    for (std::size_t i = 0; i + m <= word.size(); ++i) {
      ParikhVector v = parikh(word.factor(i, m));
      bool         fresh = true;
      for (auto const& s : seen) {
        if (s == v) {
          fresh = false;
          break;
        }
      }
      if (fresh) {
        seen.push_back(std::move(v));
      }
    }
    return seen.size();
  }

  //! CSV with header "m,f,f_abelian", LF line endings.
  inline std::string to_csv(ComplexityProfile const& profile) {
    std::ostringstream out;
    out << "m,f,f_abelian\n";
    for (auto const& r : profile.rows()) {
      out << r.m << ',' << r.f << ',' << r.f_abelian << '\n';
    }
    return out.str();
  }

}  // namespace abelian

#endif  // ABELIAN_COMPLEXITY_HPP_
