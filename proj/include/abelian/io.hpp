#ifndef ABELIAN_IO_HPP_
#define ABELIAN_IO_HPP_

#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "word.hpp"

namespace abelian {

  //! Word file format:
  //!
  //!   # alphabet=1234        (optional header)
  //!   1234444444             (the word, one label per letter)
  //!
  //! The trailing newline is optional. Without a header the alphabet is the
  //! smallest {1..n} containing every label present.
  inline Word parse_word_file(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t                   start = 0;
    while (start <= text.size()) {
      auto pos = text.find('\n', start);
      if (pos == std::string_view::npos) {
        pos = text.size();
      }
      auto line = text.substr(start, pos - start);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      lines.push_back(line);
      start = pos + 1;
    }
    while (!lines.empty() && lines.back().empty()) {
      lines.pop_back();
    }

    constexpr std::string_view kHeader = "# alphabet=";
    std::optional<Alphabet>    alphabet;
    std::size_t                first = 0;
    if (!lines.empty() && lines[0].starts_with('#')) {
      if (!lines[0].starts_with(kHeader)) {
        throw Error("word file: malformed header \"" + std::string(lines[0])
                    + "\"");
      }
      auto labels = lines[0].substr(kHeader.size());
      if (labels.empty() || labels.size() > kMaxAlphabet
          || labels != kLabels.substr(0, labels.size())) {
        throw Error("word file: alphabet must be a prefix of \""
                    + std::string(kLabels) + "\"");
      }
      alphabet = Alphabet(labels.size());
      first    = 1;
    }
    if (lines.size() > first + 1) {
      throw Error("word file: expected a single word line");
    }
    std::string_view body = lines.size() > first ? lines[first] : "";
    return alphabet ? Word::parse(body, *alphabet) : Word::parse(body);
  }

  inline std::string format_word_file(Word const& word) {
    return "# alphabet=" + word.alphabet().labels() + "\n" + word.str() + "\n";
  }

  inline std::string read_text(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot open \"" + path + "\"");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  inline void write_text(std::string const& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw Error("cannot write \"" + path + "\"");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
  }

  inline Word read_word_file(std::string const& path) {
    return parse_word_file(read_text(path));
  }

}  // namespace abelian

#endif  // ABELIAN_IO_HPP_
