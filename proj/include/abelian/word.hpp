#ifndef ABELIAN_WORD_HPP_
#define ABELIAN_WORD_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace abelian {

  //! Thrown for malformed words, alphabets, and out-of-range arguments.
  class Error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  using Letter = std::uint8_t;

  //! Fixed label set; letter i prints as kLabels[i].
  inline constexpr std::string_view kLabels
      = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

  inline constexpr std::size_t kMaxAlphabet = kLabels.size();

  //! The alphabet {1, ..., n}, with n <= 35.
  class Alphabet {
   public:
    explicit Alphabet(std::size_t size) : size_(size) {
      if (size < 1 || size > kMaxAlphabet) {
        throw Error("alphabet size must be in [1, 35], got "
                    + std::to_string(size));
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return size_;
    }

    [[nodiscard]] char label(Letter a) const {
      if (a >= size_) {
        throw Error("letter index out of range");
      }
      return kLabels[a];
    }

    [[nodiscard]] std::optional<Letter> index_of(char c) const noexcept {
      auto pos = kLabels.substr(0, size_).find(c);
      if (pos == std::string_view::npos) {
        return std::nullopt;
      }
      return static_cast<Letter>(pos);
    }

    [[nodiscard]] std::string labels() const {
      return std::string(kLabels.substr(0, size_));
    }

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    std::size_t size_;
  };

  //! Smallest alphabet containing every label in `text`.
  inline Alphabet alphabet_covering(std::string_view text) {
    std::size_t n = 1;
    for (char c : text) {
      auto pos = kLabels.find(c);
      if (pos == std::string_view::npos) {
        throw Error(std::string("invalid letter label '") + c + "'");
      }
      n = std::max(n, pos + 1);
    }
    return Alphabet(n);
  }

  //! A finite word over an Alphabet, stored as letter indices.
  class Word {
   public:
    explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}

    Word(Alphabet alphabet, std::vector<Letter> letters)
        : alphabet_(alphabet), letters_(std::move(letters)) {
      for (Letter a : letters_) {
        if (a >= alphabet_.size()) {
          throw Error("letter index " + std::to_string(a)
                      + " outside alphabet of size "
                      + std::to_string(alphabet_.size()));
        }
      }
    }

    //! Parses label characters, e.g. "1232".
    static Word parse(std::string_view text, Alphabet alphabet) {
      std::vector<Letter> letters;
      letters.reserve(text.size());
      for (char c : text) {
        auto a = alphabet.index_of(c);
        if (!a) {
          throw Error(std::string("letter '") + c + "' not in alphabet \""
                      + alphabet.labels() + "\"");
        }
        letters.push_back(*a);
      }
      return Word(alphabet, std::move(letters));
    }

    //! Parses over the smallest covering alphabet.
    static Word parse(std::string_view text) {
      return parse(text, alphabet_covering(text));
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }

    [[nodiscard]] Letter operator[](std::size_t i) const {
      return letters_[i];
    }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    [[nodiscard]] Word prefix(std::size_t len) const {
      len = std::min(len, letters_.size());
      return Word(alphabet_,
                  std::vector<Letter>(letters_.begin(),
                                      letters_.begin()
                                          + static_cast<std::ptrdiff_t>(len)));
    }

    [[nodiscard]] Word factor(std::size_t pos, std::size_t len) const {
      if (pos + len > letters_.size()) {
        throw Error("factor out of range");
      }
      auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
      return Word(alphabet_,
                  std::vector<Letter>(first,
                                      first + static_cast<std::ptrdiff_t>(len)));
    }

    [[nodiscard]] std::string str() const {
      std::string out;
      out.reserve(letters_.size());
      for (Letter a : letters_) {
        out.push_back(kLabels[a]);
      }
      return out;
    }

    //! Number of distinct letters that occur.
    [[nodiscard]] std::size_t distinct_letters() const {
      std::array<bool, kMaxAlphabet> seen{};
      std::size_t count = 0;
      for (Letter a : letters_) {
        if (!seen[a]) {
          seen[a] = true;
          ++count;
        }
      }
      return count;
    }

    friend bool operator==(Word const&, Word const&) = default;

   private:
    Alphabet            alphabet_;
    std::vector<Letter> letters_;
  };

  //! Renames letters so that first occurrences appear as 1, 2, 3, ...
  //! The alphabet is unchanged.
  inline Word canonical_relabel(Word const& word) {
    std::array<int, kMaxAlphabet> rename;
    rename.fill(-1);
    int                 next = 0;
    std::vector<Letter> out;
    out.reserve(word.size());
    for (Letter a : word.letters()) {
      if (rename[a] < 0) {
        rename[a] = next++;
      }
      out.push_back(static_cast<Letter>(rename[a]));
    }
    return Word(word.alphabet(), std::move(out));
  }

  //! Applies the letter bijection `perm` (perm[a] is the image of a).
  inline Word relabel(Word const& word, std::span<Letter const> perm) {
    if (perm.size() != word.alphabet().size()) {
      throw Error("permutation size does not match alphabet");
    }
    std::vector<Letter> out;
    out.reserve(word.size());
    for (Letter a : word.letters()) {
      out.push_back(perm[a]);
    }
    return Word(word.alphabet(), std::move(out));
  }

}  // namespace abelian

#endif  // ABELIAN_WORD_HPP_
