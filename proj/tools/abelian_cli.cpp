// abelian: command-line front end.
//
//   abelian gen --kind morphic --params "1>12,2>1;seed=1" --length 13 --out fib.txt
//   abelian complexity --in fib.txt --max-m 5 --format csv
//   abelian search --n 4 --depth 400 --r 3 --gap 40 --deadline 8 --letters-by 20 --out r.json
//
// Exit codes: 0 success, 1 check failed or oracle mismatch, 2 bad input.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "abelian/abelian.hpp"
#include "abelian/json.hpp"

namespace {

  constexpr int kOk       = 0;
  constexpr int kFailed   = 1;
  constexpr int kBadInput = 2;

  constexpr char const* kGeneratorHelp = R"(Generator parameter grammar:
  morphic   "a>word,b>word;seed=a"   one rule per letter; the seed image must
                                     start with the seed and have length >= 2
  periodic  "123"                    the pattern, repeated forever
  literal   "1234;pad=4"             the word, then the pad letter forever
  standard  "1,2,3"                  directive sequence of a characteristic
                                     Sturmian word, repeated cyclically)";

  void emit(std::optional<std::string> const& path, std::string const& text) {
    if (path) {
      abelian::write_text(*path, text);
    } else {
      std::cout << text;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Abelian and subword complexity toolkit for finite words"};
  app.require_subcommand(1);
  app.footer(kGeneratorHelp);

  // gen
  std::string gen_kind, gen_params, gen_out;
  std::size_t gen_length = 0;
  auto*       gen = app.add_subcommand("gen", "Write a prefix of a generated word");
  gen->add_option("--kind", gen_kind, "morphic|periodic|literal|standard")
      ->required()
      ->check(CLI::IsMember({"morphic", "periodic", "literal", "standard"}));
  gen->add_option("--params", gen_params, "Generator parameters (see below)")
      ->required();
  gen->add_option("--length", gen_length, "Prefix length")->required();
  gen->add_option("--out", gen_out, "Output word file")->required();
  gen->footer(kGeneratorHelp);

  // complexity
  std::string                cx_in, cx_format = "csv";
  std::optional<std::string> cx_out;
  std::size_t                cx_max_m = 0;
  bool                       cx_oracle = false;
  auto* cx = app.add_subcommand("complexity", "Subword and abelian complexity profile");
  cx->add_option("--in", cx_in, "Input word file")->required();
  cx->add_option("--max-m", cx_max_m, "Largest factor length")->required();
  cx->add_option("--format", cx_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cx->add_flag("--oracle", cx_oracle,
               "Cross-check abelian counts against brute force");
  cx->add_option("--out", cx_out, "Output file (default stdout)");

  // graph
  std::string graph_in, graph_dot;
  auto*       graph = app.add_subcommand("graph", "Factor graph as DOT");
  graph->add_option("--in", graph_in, "Input word file")->required();
  graph->add_option("--dot", graph_dot, "Output DOT file")->required();

  // triples
  std::string                tr_in, tr_format = "json";
  std::optional<std::string> tr_out;
  auto* tr = app.add_subcommand("triples", "Triple sets T(b) as JSON");
  tr->add_option("--in", tr_in, "Input word file")->required();
  tr->add_option("--format", tr_format, "json")->check(CLI::IsMember({"json"}));
  tr->add_option("--out", tr_out, "Output file (default stdout)");

  // lemmas
  std::string lm_in;
  std::size_t lm_n = 0;
  auto*       lm = app.add_subcommand("lemmas", "Run the structural lemma checkers");
  lm->add_option("--in", lm_in, "Input word file")->required();
  lm->add_option("--n", lm_n, "Number of letters")->required();

  // search
  abelian::SearchConfig cfg;
  std::string           search_out;
  auto* se = app.add_subcommand("search", "Canonical pruned backtracking search");
  se->add_option("--n", cfg.n, "Alphabet size")->required();
  se->add_option("--depth", cfg.max_depth, "Maximum word length")->required();
  se->add_option("--r", cfg.r, "Surrogate factor length")->required();
  se->add_option("--gap", cfg.gap, "Maximum recurrence gap W")->required();
  se->add_option("--deadline", cfg.deadline, "Attainment slack D")->required();
  se->add_option("--letters-by", cfg.letters_by, "Letter deadline B")->required();
  se->add_option("--shards", cfg.shards, "Worker threads")->capture_default_str();
  se->add_option("--out", search_out, "Output JSON report")->required();

  // verify
  abelian::SearchConfig      vcfg;
  std::string                ver_in;
  std::optional<std::size_t> ver_b, ver_depth;
  auto* ve = app.add_subcommand("verify", "Check a word against rules P1-P4");
  ve->add_option("--in", ver_in, "Input word file")->required();
  ve->add_option("--n", vcfg.n, "Alphabet size")->required();
  ve->add_option("--r", vcfg.r, "Surrogate factor length")->required();
  ve->add_option("--gap", vcfg.gap, "Maximum recurrence gap W")->required();
  ve->add_option("--deadline", vcfg.deadline, "Attainment slack D")->required();
  ve->add_option("--letters-by", ver_b, "Letter deadline B (default 5n)");
  ve->add_option("--depth", ver_depth, "Maximum depth (default word length)");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (gen->parsed()) {
      auto spec = abelian::parse_generator(gen_kind, gen_params);
      abelian::write_text(gen_out, abelian::format_word_file(
                                       abelian::generate_prefix(spec, gen_length)));
      return kOk;
    }
    if (cx->parsed()) {
      auto word    = abelian::read_word_file(cx_in);
      auto profile = abelian::complexity_profile(word, cx_max_m);
      if (cx_oracle) {
        for (auto const& row : profile.rows()) {
          auto expected = abelian::oracle_abelian_count(word, row.m);
          if (expected != row.f_abelian) {
            std::cerr << "oracle mismatch at m = " << row.m << ": "
                      << row.f_abelian << " != " << expected << "\n";
            return kFailed;
          }
        }
      }
      emit(cx_out, cx_format == "csv" ? abelian::to_csv(profile)
                                      : abelian::dump(abelian::to_json(profile)));
      return kOk;
    }
    if (graph->parsed()) {
      auto word = abelian::read_word_file(graph_in);
      abelian::write_text(graph_dot,
                          abelian::to_dot(abelian::build_factor_graph(word)));
      return kOk;
    }
    if (tr->parsed()) {
      auto word = abelian::read_word_file(tr_in);
      emit(tr_out, abelian::dump(abelian::to_json(abelian::triple_map(word))));
      return kOk;
    }
    if (lm->parsed()) {
      auto word = abelian::read_word_file(lm_in);
      auto one  = abelian::check_lemma_one(word, lm_n);
      auto two  = abelian::check_lemma_two(word);
      auto deg  = abelian::check_degree_lemmas(word);
      std::cout << "lemma1 " << one.line() << "\n"
                << "lemma2 " << two.line() << "\n"
                << "lemma3+4 " << deg.line() << "\n";
      bool failed = one.verdict == abelian::Verdict::fail
                    || two.verdict == abelian::Verdict::fail
                    || deg.verdict == abelian::Verdict::fail;
      return failed ? kFailed : kOk;
    }
    if (se->parsed()) {
      auto report = abelian::search(cfg);
      abelian::write_text(search_out, abelian::dump(abelian::to_json(report)));
      return kOk;
    }
    if (ve->parsed()) {
      auto word       = abelian::read_word_file(ver_in);
      vcfg.letters_by = ver_b.value_or(5 * vcfg.n);
      vcfg.max_depth  = ver_depth.value_or(std::max<std::size_t>(word.size(), vcfg.r));
      auto d          = abelian::verify_candidate(word, vcfg);
      std::cout << d.line() << "\n";
      return d.passed() ? kOk : kFailed;
    }
  } catch (abelian::Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (abelian::CycleError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
