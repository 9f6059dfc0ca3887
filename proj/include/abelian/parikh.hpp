#ifndef ABELIAN_PARIKH_HPP_
#define ABELIAN_PARIKH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "word.hpp"

namespace abelian {

  //! Per-letter occurrence counts; two words are anagrams iff their
  //! Parikh vectors are equal.
  class ParikhVector {
   public:
    ParikhVector() = default;

    explicit ParikhVector(std::size_t n) : counts_(n, 0) {}

    explicit ParikhVector(std::vector<std::uint32_t> counts)
        : counts_(std::move(counts)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return counts_.size();
    }

    [[nodiscard]] std::uint32_t operator[](std::size_t i) const {
      return counts_[i];
    }

    [[nodiscard]] std::uint32_t& operator[](std::size_t i) {
      return counts_[i];
    }

    [[nodiscard]] std::vector<std::uint32_t> const& counts() const noexcept {
      return counts_;
    }

    //! Length of any word in the class.
    [[nodiscard]] std::size_t total() const {
      return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
    }

    //! Letters of the class in nondecreasing order, e.g. "112".
    [[nodiscard]] std::string sorted_word() const {
      std::string out;
      for (std::size_t a = 0; a < counts_.size(); ++a) {
        out.append(counts_[a], kLabels[a]);
      }
      return out;
    }

    friend bool operator==(ParikhVector const&, ParikhVector const&) = default;
    friend auto operator<=>(ParikhVector const&, ParikhVector const&) = default;

   private:
    std::vector<std::uint32_t> counts_;
  };

  struct ParikhHash {
    std::size_t operator()(ParikhVector const& v) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto c : v.counts()) {
        h ^= c + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    }
  };

  inline ParikhVector parikh(Word const& word) {
    ParikhVector v(word.alphabet().size());
    for (Letter a : word.letters()) {
      ++v[a];
    }
    return v;
  }

  //! True iff u and v are anagrams of each other.
  inline bool abelian_equivalent(Word const& u, Word const& v) {
    if (!(u.alphabet() == v.alphabet())) {
      throw Error("abelian_equivalent: alphabet mismatch");
    }
    return parikh(u) == parikh(v);
  }

}  // namespace abelian

#endif  // ABELIAN_PARIKH_HPP_
