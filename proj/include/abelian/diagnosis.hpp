#ifndef ABELIAN_DIAGNOSIS_HPP_
#define ABELIAN_DIAGNOSIS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "word.hpp"

namespace abelian {

  enum class Verdict { pass, fail, inconclusive };

  inline char const* to_string(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return "PASS";
      case Verdict::fail:
        return "FAIL";
      case Verdict::inconclusive:
        return "INCONCLUSIVE";
    }
    return "?";
  }

  //! A factor occurrence: word[position, position + factor.size()) == factor.
  struct Witness {
    std::size_t position;
    std::string factor;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct Diagnosis {
    Verdict              verdict = Verdict::pass;
    std::string          code;    // e.g. "EdgeCount", "BoundaryEffect"
    std::string          detail;
    std::vector<Witness> witnesses;

    [[nodiscard]] bool passed() const noexcept {
      return verdict == Verdict::pass;
    }

    //! One line: "PASS", "FAIL EdgeCount: 2 != 3", ...
    [[nodiscard]] std::string line() const {
      std::string out = to_string(verdict);
      if (!code.empty()) {
        out += " " + code;
      }
      if (!detail.empty()) {
        out += (code.empty() ? " " : ": ") + detail;
      }
      return out;
    }
  };

  //! Every witness is a genuine occurrence in `word`.
  inline bool witnesses_hold(Diagnosis const& d, Word const& word) {
    std::string const text = word.str();
    for (auto const& w : d.witnesses) {
      if (w.position + w.factor.size() > text.size()
          || text.compare(w.position, w.factor.size(), w.factor) != 0) {
        return false;
      }
    }
    return true;
  }

}  // namespace abelian

#endif  // ABELIAN_DIAGNOSIS_HPP_
