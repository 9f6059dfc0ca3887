#ifndef ABELIAN_GENERATOR_HPP_
#define ABELIAN_GENERATOR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "word.hpp"

namespace abelian {

  //! Fixed point of a prolongable morphism, started from `seed`.
  struct Morphic {
    Alphabet                         alphabet;
    std::vector<std::vector<Letter>> images;  // images[a] = image of letter a
    Letter                           seed = 0;
  };

  //! pattern^omega
  struct Periodic {
    Word pattern;
  };

  //! An explicit word, optionally continued by repeating `pad` forever.
  struct Literal {
    Word                  word;
    std::optional<Letter> pad;
  };

  //! Characteristic Sturmian word from the standard sequence
  //! s_{-1} = 2, s_0 = 1, s_{k+1} = s_k^{d_{k+1}} s_{k-1}.
  //! The directive sequence d_1, d_2, ... is repeated cyclically, so "1"
  //! gives the Fibonacci word.
  struct StandardSequence {
    std::vector<std::size_t> directive;
  };

  using GeneratorSpec = std::variant<Morphic, Periodic, Literal, StandardSequence>;

  //! Throws Error if the spec does not define a unique infinite word.
  inline void validate(GeneratorSpec const& spec) {
    struct Visitor {
      void operator()(Morphic const& m) const {
        if (m.images.size() != m.alphabet.size()) {
          throw Error("morphism must give one image per letter");
        }
        if (m.seed >= m.alphabet.size()) {
          throw Error("morphism seed outside alphabet");
        }
        for (auto const& img : m.images) {
          if (img.empty()) {
            throw Error("morphism images must be nonempty");
          }
          for (Letter a : img) {
            if (a >= m.alphabet.size()) {
              throw Error("morphism image letter outside alphabet");
            }
          }
        }
        auto const& s = m.images[m.seed];
        if (s.size() < 2 || s.front() != m.seed) {
          throw Error("morphism is not prolongable on its seed");
        }
      }
      void operator()(Periodic const& p) const {
        if (p.pattern.empty()) {
          throw Error("periodic pattern must be nonempty");
        }
      }
      void operator()(Literal const& l) const {
        if (l.pad && *l.pad >= l.word.alphabet().size()) {
          throw Error("pad letter outside alphabet");
        }
      }
      void operator()(StandardSequence const& s) const {
        if (s.directive.empty()) {
          throw Error("directive sequence must be nonempty");
        }
        for (auto d : s.directive) {
          if (d == 0) {
            throw Error("directive sequence entries must be positive");
          }
        }
      }
    };
    std::visit(Visitor{}, spec);
  }

  inline Alphabet alphabet_of(GeneratorSpec const& spec) {
    struct Visitor {
      Alphabet operator()(Morphic const& m) const {
        return m.alphabet;
      }
      Alphabet operator()(Periodic const& p) const {
        return p.pattern.alphabet();
      }
      Alphabet operator()(Literal const& l) const {
        return l.word.alphabet();
      }
      Alphabet operator()(StandardSequence const&) const {
        return Alphabet(2);
      }
    };
    return std::visit(Visitor{}, spec);
  }

  namespace detail {
    inline std::vector<Letter> morphic_prefix(Morphic const& m,
                                              std::size_t    length) {
      // The fixed point x satisfies x = phi(x), so x can be written out while
      // reading it: x[i] is always known before phi(x[i]) is needed.
      std::vector<Letter> x(m.images[m.seed]);
      for (std::size_t i = 1; x.size() < length; ++i) {
        auto const& img = m.images[x[i]];
        x.insert(x.end(), img.begin(), img.end());
      }
      x.resize(length);
      return x;
    }

    inline std::vector<Letter> standard_prefix(StandardSequence const& s,
                                               std::size_t             length) {
      std::vector<Letter> older{1};  // s_{-1}
      std::vector<Letter> cur{0};    // s_0
      for (std::size_t k = 0; cur.size() < length || k == 0; ++k) {
        std::size_t const   d = s.directive[k % s.directive.size()];
        std::vector<Letter> next;
        next.reserve(d * cur.size() + older.size());
        for (std::size_t j = 0; j < d; ++j) {
          next.insert(next.end(), cur.begin(), cur.end());
        }
        next.insert(next.end(), older.begin(), older.end());
        older = std::move(cur);
        cur   = std::move(next);
      }
      cur.resize(length);
      return cur;
    }
  }  // namespace detail

  //! The length-`length` prefix of the infinite word described by `spec`.
  inline Word generate_prefix(GeneratorSpec const& spec, std::size_t length) {
    validate(spec);
    struct Visitor {
      std::size_t length;

      Word operator()(Morphic const& m) const {
        return Word(m.alphabet, detail::morphic_prefix(m, length));
      }
      Word operator()(Periodic const& p) const {
        std::vector<Letter> out;
        out.reserve(length);
        for (std::size_t i = 0; i < length; ++i) {
          out.push_back(p.pattern[i % p.pattern.size()]);
        }
        return Word(p.pattern.alphabet(), std::move(out));
      }
      Word operator()(Literal const& l) const {
        if (length > l.word.size() && !l.pad) {
          throw Error("literal word of length " + std::to_string(l.word.size())
                      + " has no pad letter to reach length "
                      + std::to_string(length));
        }
        std::vector<Letter> out(l.word.letters().begin(),
                                l.word.letters().end());
        out.resize(length, l.pad.value_or(0));
        return Word(l.word.alphabet(), std::move(out));
      }
      Word operator()(StandardSequence const& s) const {
        return Word(Alphabet(2), detail::standard_prefix(s, length));
      }
    };
    return std::visit(Visitor{length}, spec);
  }

  //! The morphism 1 -> 12, 2 -> 1 seeded at 1.
  inline GeneratorSpec fibonacci_morphism() {
    return Morphic{Alphabet(2), {{0, 1}, {0}}, 0};
  }

  //! (12...n)^omega
  inline GeneratorSpec cyclic_pattern(std::size_t n) {
    std::vector<Letter> p;
    for (std::size_t a = 0; a < n; ++a) {
      p.push_back(static_cast<Letter>(a));
    }
    return Periodic{Word(Alphabet(n), std::move(p))};
  }

  //! 12...(n-1) n n n ...
  inline GeneratorSpec staircase(std::size_t n) {
    std::vector<Letter> p;
    for (std::size_t a = 0; a < n; ++a) {
      p.push_back(static_cast<Letter>(a));
    }
    return Literal{Word(Alphabet(n), std::move(p)),
                   static_cast<Letter>(n - 1)};
  }

  //! Parses the flat parameter string used on the command line.
  //!
  //!   morphic   "1>12,2>1;seed=1"   (seed defaults to the first rule)
  //!   periodic  "123"
  //!   literal   "1234;pad=4"        (pad optional)
  //!   standard  "1,2,3"             (directive sequence, cycled)
  inline GeneratorSpec parse_generator(std::string_view kind,
                                       std::string_view params) {
    auto split = [](std::string_view s, char sep) {
      std::vector<std::string_view> parts;
      std::size_t                   start = 0;
      while (true) {
        auto pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) {
          break;
        }
        start = pos + 1;
      }
      return parts;
    };
    auto single_label = [](std::string_view s) {
      if (s.size() != 1 || kLabels.find(s[0]) == std::string_view::npos) {
        throw Error("expected a single letter label, got \"" + std::string(s)
                    + "\"");
      }
      return s[0];
    };

    if (kind == "morphic") {
      auto        sections = split(params, ';');
      std::optional<char>                       seed;
      std::vector<std::pair<char, std::string>> rules;
      for (auto rule : split(sections[0], ',')) {
        auto gt = rule.find('>');
        if (gt == std::string_view::npos) {
          throw Error("morphism rule must look like a>word, got \""
                      + std::string(rule) + "\"");
        }
        rules.emplace_back(single_label(rule.substr(0, gt)),
                           std::string(rule.substr(gt + 1)));
      }
      for (std::size_t i = 1; i < sections.size(); ++i) {
        auto opt = sections[i];
        if (opt.substr(0, 5) != "seed=") {
          throw Error("unknown morphism option \"" + std::string(opt) + "\"");
        }
        seed = single_label(opt.substr(5));
      }
      std::string all_labels;
      for (auto const& [from, to] : rules) {
        all_labels += from;
        all_labels += to;
      }
      Alphabet alphabet = alphabet_covering(all_labels);
      std::vector<std::vector<Letter>> images(alphabet.size());
      std::vector<bool>                defined(alphabet.size(), false);
      for (auto const& [from, to] : rules) {
        Letter a = *alphabet.index_of(from);
        if (defined[a]) {
          throw Error(std::string("duplicate morphism rule for '") + from
                      + "'");
        }
        defined[a] = true;
        Word const img = Word::parse(to, alphabet);
        images[a].assign(img.letters().begin(), img.letters().end());
      }
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        if (!defined[a]) {
          throw Error(std::string("morphism has no rule for '") + kLabels[a]
                      + "'");
        }
      }
      Letter s = *alphabet.index_of(seed.value_or(rules.front().first));
      GeneratorSpec spec = Morphic{alphabet, std::move(images), s};
      validate(spec);
      return spec;
    }
    if (kind == "periodic") {
      GeneratorSpec spec = Periodic{Word::parse(params)};
      validate(spec);
      return spec;
    }
    if (kind == "literal") {
      auto sections = split(params, ';');
      std::optional<char> pad;
      for (std::size_t i = 1; i < sections.size(); ++i) {
        if (sections[i].substr(0, 4) != "pad=") {
          throw Error("unknown literal option \"" + std::string(sections[i])
                      + "\"");
        }
        pad = single_label(sections[i].substr(4));
      }
      std::string all(sections[0]);
      if (pad) {
        all += *pad;
      }
      Alphabet      alphabet = alphabet_covering(all);
      GeneratorSpec spec
          = Literal{Word::parse(sections[0], alphabet),
                    pad ? alphabet.index_of(*pad) : std::nullopt};
      validate(spec);
      return spec;
    }
    if (kind == "standard") {
      StandardSequence s;
      for (auto part : split(params, ',')) {
        std::size_t value = 0;
        if (part.empty()) {
          throw Error("empty directive entry");
        }
        for (char c : part) {
          if (c < '0' || c > '9') {
            throw Error("directive entries must be positive integers");
          }
          value = value * 10 + static_cast<std::size_t>(c - '0');
        }
        s.directive.push_back(value);
      }
      GeneratorSpec spec = s;
      validate(spec);
      return spec;
    }
    throw Error("unknown generator kind \"" + std::string(kind) + "\"");
  }

}  // namespace abelian

#endif  // ABELIAN_GENERATOR_HPP_
