#ifndef ABELIAN_TRIPLES_HPP_
#define ABELIAN_TRIPLES_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "parikh.hpp"
#include "word.hpp"

namespace abelian {

  //! For each letter b, the abelian classes [abc] of length-3 factors abc
  //! with middle letter b, together with the first position each was seen.
  class TripleMap {
   public:
    explicit TripleMap(Alphabet alphabet)
        : alphabet_(alphabet), by_middle_(alphabet.size()) {}

    void add(Letter middle, ParikhVector cls, std::size_t position) {
      by_middle_[middle].try_emplace(std::move(cls), position);
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }

    //! T(b), ordered.
    [[nodiscard]] std::set<ParikhVector> at(Letter b) const {
      std::set<ParikhVector> out;
      for (auto const& [cls, pos] : by_middle_.at(b)) {
        out.insert(cls);
      }
      return out;
    }

    [[nodiscard]] bool contains(Letter b, ParikhVector const& cls) const {
      return by_middle_.at(b).contains(cls);
    }

    //! Start position of the first occurrence attesting cls in T(b).
    [[nodiscard]] std::size_t witness(Letter b, ParikhVector const& cls) const {
      return by_middle_.at(b).at(cls);
    }

    //! The union of all T(b).
    [[nodiscard]] std::set<ParikhVector> all() const {
      std::set<ParikhVector> out;
      for (auto const& m : by_middle_) {
        for (auto const& [cls, pos] : m) {
          out.insert(cls);
        }
      }
      return out;
    }

   private:
    Alphabet                                         alphabet_;
    std::vector<std::map<ParikhVector, std::size_t>> by_middle_;
  };

  inline TripleMap triple_map(Word const& word) {
    if (word.size() < 3) {
      throw Error("triple_map needs a word of length >= 3");
    }
    TripleMap t(word.alphabet());
    for (std::size_t i = 0; i + 3 <= word.size(); ++i) {
      t.add(word[i + 1], parikh(word.factor(i, 3)), i);
    }
    return t;
  }

}  // namespace abelian

#endif  // ABELIAN_TRIPLES_HPP_
