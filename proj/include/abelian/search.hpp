#ifndef ABELIAN_SEARCH_HPP_
#define ABELIAN_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "complexity.hpp"
#include "diagnosis.hpp"
#include "periodicity.hpp"
#include "word.hpp"

namespace abelian {

  enum class PruneRule : std::uint8_t {
    complexity_cap,       // P1: more than n abelian classes of some length
    attainment_deadline,  // P2: fewer than n classes of length m by m + D
    recurrence_gap,       // P3: a short factor fails to recur within W
    letter_deadline,      // P4: fewer than n letters by position B
    canonicity,           // P5: letter introduced out of order
  };

  inline constexpr std::array<PruneRule, 5> kPruneRules{
      PruneRule::complexity_cap, PruneRule::attainment_deadline,
      PruneRule::recurrence_gap, PruneRule::letter_deadline,
      PruneRule::canonicity};

  inline char const* to_string(PruneRule r) {
    switch (r) {
      case PruneRule::complexity_cap:
        return "P1_ComplexityCap";
      case PruneRule::attainment_deadline:
        return "P2_AttainmentDeadline";
      case PruneRule::recurrence_gap:
        return "P3_RecurrenceGap";
      case PruneRule::letter_deadline:
        return "P4_LetterDeadline";
      case PruneRule::canonicity:
        return "P5_Canonicity";
    }
    return "?";
  }

  struct SearchConfig {
    std::size_t n         = 2;
    std::size_t max_depth = 60;
    std::size_t r         = 2;   // surrogate factor length
    std::size_t gap       = 20;  // W: maximum recurrence gap
    std::size_t deadline  = 4;   // D: attainment slack
    std::size_t letters_by = 10;  // B: all n letters must occur by here
    std::size_t shards    = 1;

    //! D = 2n, B = 5n.
    static SearchConfig with_defaults(std::size_t n, std::size_t max_depth,
                                      std::size_t r, std::size_t gap) {
      return {n, max_depth, r, gap, 2 * n, 5 * n, 1};
    }

    void validate() const {
      if (n < 1 || n > kMaxAlphabet) {
        throw Error("search: n must be in [1, 35]");
      }
      if (r < 1 || r > max_depth) {
        throw Error("search: need 1 <= r <= max_depth");
      }
      if (gap < n) {
        throw Error("search: need W >= n");
      }
      if (letters_by < n) {
        throw Error("search: need B >= n");
      }
      if (shards < 1) {
        throw Error("search: need at least one shard");
      }
      if (max_depth >= (std::size_t{1} << 24)) {
        throw Error("search: max_depth too large");
      }
      double codes = 1;
      for (std::size_t l = 0; l < r; ++l) {
        codes *= static_cast<double>(n);
      }
      if (codes > double(1 << 22)) {
        throw Error("search: n^r too large for the recurrence table");
      }
    }
  };

  //! Deadline exemption: n classes of length m cannot exist among the D + 1
  //! windows available at length m + D, or among all Parikh vectors of
  //! length m.
  inline bool deadline_exempt(std::size_t n, std::size_t m, std::size_t D) {
    if (D + 1 < n) {
      return true;
    }
    // C(m + n - 1, n - 1) >= n as soon as m >= 1; compute with a cap.
    std::size_t classes = 1;
    for (std::size_t k = 1; k < n && classes < n; ++k) {
      classes = classes * (m + k) / k;
    }
    return classes < n;
  }

  //! A letter a may follow a prefix using letters 0..used-1 iff a <= used.
  inline bool canonical_extension(std::size_t used, Letter a) noexcept {
    return a <= used;
  }

  //! Incremental prefix state for the search. push() appends a letter if the
  //! result passes P1-P5 and otherwise leaves the state untouched and reports
  //! the first violated rule; pop() undoes the last accepted push.
  class SearchEngine {
   public:
    explicit SearchEngine(SearchConfig const& config) : cfg_(config) {
      cfg_.validate();
      std::size_t const n = cfg_.n;
      bits_               = std::max<std::size_t>(
          1, std::bit_width(static_cast<std::uint64_t>(cfg_.max_depth)));
      per_word_ = 64 / bits_;
      words_    = std::max<std::size_t>(1, (n - 1 + per_word_ - 1) / per_word_);

      letters_.reserve(cfg_.max_depth);
      prefix_.assign((cfg_.max_depth + 1) * words_, 0);
      classes_.assign((cfg_.max_depth + 1) * n * words_, 0);
      class_count_.assign(cfg_.max_depth + 1, 0);
      exempt_.resize(cfg_.max_depth + 1);
      for (std::size_t m = 0; m <= cfg_.max_depth; ++m) {
        exempt_[m] = deadline_exempt(n, m, cfg_.deadline);
      }
      codes_.resize(cfg_.r + 1, 1);
      for (std::size_t l = 1; l <= cfg_.r; ++l) {
        codes_[l] = codes_[l - 1] * n;
        last_start_.emplace_back(codes_[l], -1);
      }
      scratch_.resize(words_);
    }

    [[nodiscard]] SearchConfig const& config() const noexcept {
      return cfg_;
    }

    [[nodiscard]] std::size_t length() const noexcept {
      return letters_.size();
    }

    [[nodiscard]] std::size_t letters_used() const noexcept {
      return used_;
    }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    [[nodiscard]] std::size_t classes(std::size_t m) const {
      return class_count_[m];
    }

    std::optional<PruneRule> push(Letter a) {
      std::size_t const n = cfg_.n;
      if (a >= n) {
        throw Error("search: letter outside alphabet");
      }
      if (letters_.size() >= cfg_.max_depth) {
        throw Error("search: push beyond max_depth");
      }
      if (!canonical_extension(used_, a)) {
        return PruneRule::canonicity;
      }
      std::size_t const L = letters_.size() + 1;

      // Prefix Parikh key for length L.
      std::uint64_t const* before = &prefix_[(L - 1) * words_];
      std::uint64_t*       now    = &prefix_[L * words_];
      std::copy(before, before + words_, now);
      if (std::size_t{a} + 1 < n) {
        now[a / per_word_] += std::uint64_t{1} << (bits_ * (a % per_word_));
      }

      // P1, checked before any class is recorded.
      pending_.clear();
      for (std::size_t m = 1; m <= L; ++m) {
        window_key(L, m);
        if (!known_class(m)) {
          if (class_count_[m] == n) {
            return PruneRule::complexity_cap;
          }
          pending_.push_back(static_cast<std::uint32_t>(m));
        }
      }

      Level level{class_log_.size(), gap_log_.size(), used_};
      letters_.push_back(a);
      levels_.push_back(level);
      if (a == used_) {
        ++used_;
      }
      for (std::uint32_t m : pending_) {
        window_key(L, m);
        std::uint64_t* slot
            = &classes_[(m * n + class_count_[m]) * words_];
        std::copy(scratch_.begin(), scratch_.end(), slot);
        ++class_count_[m];
        class_log_.push_back(m);
      }

      // P2: the deadline for length m falls due exactly at L = m + D.
      if (L > cfg_.deadline) {
        std::size_t const m = L - cfg_.deadline;
        if (!exempt_[m] && class_count_[m] < n) {
          pop();
          return PruneRule::attainment_deadline;
        }
      }

      // P3: record the new occurrence of each short suffix, then make sure
      // no factor's next occurrence is already overdue.
      bool gap_violation = false;
      std::size_t const top = std::min(cfg_.r, L);
      for (std::size_t l = 1; l <= top; ++l) {
        std::size_t const start = L - l;
        std::size_t       code  = 0;
        for (std::size_t i = start; i < L; ++i) {
          code = code * n + letters_[i];
        }
        auto& slot = last_start_[l - 1][code];
        if (slot >= 0 && start - static_cast<std::size_t>(slot) > cfg_.gap) {
          gap_violation = true;
        }
        gap_log_.push_back({static_cast<std::uint32_t>(l),
                            static_cast<std::uint32_t>(code), slot});
        slot = static_cast<std::int32_t>(start);
      }
      for (std::size_t l = 1; l <= top && !gap_violation; ++l) {
        auto const next = static_cast<std::int64_t>(L - l + 1);
        for (auto s : last_start_[l - 1]) {
          if (s >= 0 && next - s > static_cast<std::int64_t>(cfg_.gap)) {
            gap_violation = true;
            break;
          }
        }
      }
      if (gap_violation) {
        pop();
        return PruneRule::recurrence_gap;
      }

      // P4
      if (L == cfg_.letters_by && used_ < n) {
        pop();
        return PruneRule::letter_deadline;
      }
      return std::nullopt;
    }

    void pop() {
      Level const level = levels_.back();
      levels_.pop_back();
      letters_.pop_back();
      while (class_log_.size() > level.class_log) {
        --class_count_[class_log_.back()];
        class_log_.pop_back();
      }
      while (gap_log_.size() > level.gap_log) {
        auto const& g                     = gap_log_.back();
        last_start_[g.length - 1][g.code] = g.previous;
        gap_log_.pop_back();
      }
      used_ = level.used;
    }

   private:
    struct Level {
      std::size_t class_log;
      std::size_t gap_log;
      std::size_t used;
    };

    struct GapUndo {
      std::uint32_t length;
      std::uint32_t code;
      std::int32_t  previous;
    };

    // Parikh key of the window of length m ending at L, into scratch_.
    // Fields never borrow: prefix counts are componentwise monotone.
    void window_key(std::size_t L, std::size_t m) {
      std::uint64_t const* hi = &prefix_[L * words_];
      std::uint64_t const* lo = &prefix_[(L - m) * words_];
      for (std::size_t k = 0; k < words_; ++k) {
        scratch_[k] = hi[k] - lo[k];
      }
    }

    [[nodiscard]] bool known_class(std::size_t m) const {
      std::uint64_t const* base = &classes_[m * cfg_.n * words_];
      for (std::size_t c = 0; c < class_count_[m]; ++c) {
        if (std::equal(scratch_.begin(), scratch_.end(), base + c * words_)) {
          return true;
        }
      }
      return false;
    }

    SearchConfig cfg_;
    std::size_t  bits_     = 0;
    std::size_t  per_word_ = 0;
    std::size_t  words_    = 0;
    std::size_t  used_     = 0;

    std::vector<Letter>        letters_;
    std::vector<std::uint64_t> prefix_;
    std::vector<std::uint64_t> classes_;
    std::vector<std::size_t>   class_count_;
    std::vector<bool>          exempt_;
    std::vector<std::size_t>   codes_;
    std::vector<std::vector<std::int32_t>> last_start_;

    std::vector<Level>         levels_;
    std::vector<std::uint32_t> class_log_;
    std::vector<GapUndo>       gap_log_;
    std::vector<std::uint32_t> pending_;
    std::vector<std::uint64_t> scratch_;
  };

  struct SearchReport {
    SearchConfig             config;
    std::vector<std::string> survivors;  // sorted
    //! Longest accepted prefix, reported when no survivor reached max_depth.
    std::optional<std::size_t>  exhaustion_depth;
    std::uint64_t               nodes_expanded = 0;
    std::array<std::uint64_t, 5> nodes_pruned{};

    [[nodiscard]] std::uint64_t pruned(PruneRule r) const {
      return nodes_pruned[static_cast<std::size_t>(r)];
    }
  };

  //! Called for every pruned child with the rejected prefix (child letter
  //! included). Must be thread-safe when shards > 1.
  using PruneObserver
      = std::function<void(std::span<Letter const>, PruneRule)>;

  namespace detail {
    struct ShardResult {
      std::vector<std::string>     survivors;
      std::size_t                  deepest = 0;
      std::uint64_t                expanded = 0;
      std::array<std::uint64_t, 5> pruned{};
      std::vector<std::vector<Letter>> frontier;
    };

    inline std::string render(std::span<Letter const> w) {
      std::string s;
      s.reserve(w.size());
      for (Letter a : w) {
        s.push_back(kLabels[a]);
      }
      return s;
    }

    // Depth-first over canonical extensions, children in ascending order.
    // Accepted prefixes of length `stop` are collected in `frontier` when
    // stop < max_depth; otherwise they are survivors.
    inline void explore(SearchEngine& engine, std::size_t stop,
                        ShardResult& out, PruneObserver const& observer,
                        std::vector<Letter>& probe) {
      std::size_t const n = engine.config().n;
      if (engine.length() == stop) {
        if (stop == engine.config().max_depth) {
          out.survivors.push_back(render(engine.letters()));
        } else {
          auto l = engine.letters();
          out.frontier.emplace_back(l.begin(), l.end());
        }
        return;
      }
      for (std::size_t a = 0; a < n; ++a) {
        auto const letter = static_cast<Letter>(a);
        auto const rule   = engine.push(letter);
        if (rule) {
          ++out.pruned[static_cast<std::size_t>(*rule)];
          if (observer) {
            auto l = engine.letters();
            probe.assign(l.begin(), l.end());
            probe.push_back(letter);
            observer(probe, *rule);
          }
          continue;
        }
        ++out.expanded;
        out.deepest = std::max(out.deepest, engine.length());
        explore(engine, stop, out, observer, probe);
        engine.pop();
      }
    }
  }  // namespace detail

  //! Canonical, pruned depth-first enumeration. The report depends only on
  //! the configuration; `shards` only changes how subtrees are scheduled.
  inline SearchReport search(SearchConfig const& config,
                             PruneObserver const& observer = {}) {
    config.validate();
    constexpr std::size_t kSplitDepth = 8;
    std::size_t const     split = std::min(config.max_depth, kSplitDepth);

    detail::ShardResult head;
    {
      SearchEngine        engine(config);
      std::vector<Letter> probe;
      detail::explore(engine, split, head, observer, probe);
    }

    std::vector<detail::ShardResult> shards(head.frontier.size());
    std::atomic<std::size_t>         next{0};
    auto                             worker = [&] {
      SearchEngine        engine(config);
      std::vector<Letter> probe;
      for (std::size_t i = next++; i < shards.size(); i = next++) {
        for (Letter a : head.frontier[i]) {
          if (engine.push(a)) {
            throw Error("search: frontier prefix no longer accepted");
          }
        }
        detail::explore(engine, config.max_depth, shards[i], observer, probe);
        while (engine.length() > 0) {
          engine.pop();
        }
      }
    };
    std::size_t const threads
        = std::min<std::size_t>(config.shards, std::max<std::size_t>(1, shards.size()));
    if (threads <= 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
      }
    }

    SearchReport report;
    report.config         = config;
    report.survivors      = std::move(head.survivors);
    report.nodes_expanded = head.expanded;
    report.nodes_pruned   = head.pruned;
    std::size_t deepest   = head.deepest;
    for (auto& s : shards) {
      report.survivors.insert(report.survivors.end(),
                              std::make_move_iterator(s.survivors.begin()),
                              std::make_move_iterator(s.survivors.end()));
      report.nodes_expanded += s.expanded;
      for (std::size_t k = 0; k < 5; ++k) {
        report.nodes_pruned[k] += s.pruned[k];
      }
      deepest = std::max(deepest, s.deepest);
    }
    std::sort(report.survivors.begin(), report.survivors.end());
    if (report.survivors.empty()) {
      report.exhaustion_depth = deepest;
    }
    return report;
  }

  //! Why `word` violates `rule`, or nothing if it does not. Computed from
  //! the complexity and gap routines, not from search state. P5 is a
  //! property of the enumeration, not of a word, and is never reported.
  inline std::optional<std::string> rule_violation(Word const&         word,
                                                   SearchConfig const& config,
                                                   PruneRule           rule) {
    std::size_t const n = config.n;
    std::size_t const L = word.size();
    std::size_t const D = config.deadline;
    switch (rule) {
      case PruneRule::complexity_cap:
        for (std::size_t m = 1; m <= L; ++m) {
          std::size_t const c = abelian_complexity(word, m);
          if (c > n) {
            return "m = " + std::to_string(m) + ": " + std::to_string(c)
                   + " classes > " + std::to_string(n);
          }
        }
        break;
      case PruneRule::attainment_deadline:
        for (std::size_t m = 1; m + D <= L; ++m) {
          if (deadline_exempt(n, m, D)) {
            continue;
          }
          std::size_t const c = abelian_complexity(word.prefix(m + D), m);
          if (c < n) {
            return "m = " + std::to_string(m) + ": only " + std::to_string(c)
                   + " classes by length " + std::to_string(m + D);
          }
        }
        break;
      case PruneRule::recurrence_gap:
        if (L >= 1) {
          GapReport const g = gap_report(word, std::min(config.r, L));
          for (auto const& len : g.lengths) {
            std::size_t const worst = std::max(len.max_finite_gap, len.max_tail);
            if (worst > config.gap) {
              return "length " + std::to_string(len.length) + ": gap "
                     + std::to_string(worst) + " > "
                     + std::to_string(config.gap);
            }
          }
        }
        break;
      case PruneRule::letter_deadline:
        if (L >= config.letters_by) {
          std::size_t const used
              = word.prefix(config.letters_by).distinct_letters();
          if (used < n) {
            return std::to_string(used) + " letters by position "
                   + std::to_string(config.letters_by);
          }
        }
        break;
      case PruneRule::canonicity:
        break;
    }
    return std::nullopt;
  }

  //! Independent re-check of P1-P4 on a whole word, in rule order. On
  //! failure `code` is the rule tag of the first violated rule.
  inline Diagnosis verify_candidate(Word const& word, SearchConfig const& config) {
    config.validate();
    if (word.size() > config.max_depth) {
      throw Error("verify: word longer than max_depth");
    }
    for (Letter a : word.letters()) {
      if (a >= config.n) {
        throw Error("verify: word uses a letter beyond n");
      }
    }
    for (auto rule : kPruneRules) {
      if (auto why = rule_violation(word, config, rule)) {
        return Diagnosis{Verdict::fail, to_string(rule), std::move(*why), {}};
      }
    }
    return Diagnosis{Verdict::pass, {}, {}, {}};
  }

  //! Brute-force check that canonical words of length `depth` over n letters
  //! are exactly one representative per letter-permutation orbit.
  inline bool orbit_count_check(std::size_t n, std::size_t depth) {
    if (n < 1 || n > 5 || depth > 8) {
      throw Error("orbit_count_check: need 1 <= n <= 5 and depth <= 8");
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < depth; ++i) {
      total *= n;
    }
    std::vector<Letter> perm(n);
    for (std::size_t a = 0; a < n; ++a) {
      perm[a] = static_cast<Letter>(a);
    }
    std::vector<std::vector<Letter>> perms;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Orbit of each word, identified by its least image.
    std::vector<std::size_t> orbit_of(total);
    std::vector<Letter>      w(depth), image(depth);
    auto decode = [&](std::size_t code, std::vector<Letter>& out) {
      for (std::size_t i = depth; i-- > 0;) {
        out[i] = static_cast<Letter>(code % n);
        code /= n;
      }
    };
    auto encode = [&](std::vector<Letter> const& in) {
      std::size_t code = 0;
      for (Letter a : in) {
        code = code * n + a;
      }
      return code;
    };
    std::vector<bool> is_orbit_rep(total, false);
    for (std::size_t code = 0; code < total; ++code) {
      decode(code, w);
      std::size_t least = code;
      for (auto const& p : perms) {
        for (std::size_t i = 0; i < depth; ++i) {
          image[i] = p[w[i]];
        }
        least = std::min(least, encode(image));
      }
      orbit_of[code]      = least;
      is_orbit_rep[least] = true;
    }
    std::size_t const orbits
        = static_cast<std::size_t>(std::count(is_orbit_rep.begin(),
                                              is_orbit_rep.end(), true));

    // Canonical enumeration under the search's extension rule.
    std::vector<bool>   hit(total, false);
    std::size_t         visited = 0;
    bool                ok      = true;
    std::vector<Letter> prefix;
    std::function<void(std::size_t)> walk = [&](std::size_t used) {
      if (prefix.size() == depth) {
        ++visited;
        std::size_t const o = orbit_of[encode(prefix)];
        if (hit[o]) {
          ok = false;
        }
        hit[o] = true;
        return;
      }
      for (std::size_t a = 0; a < n; ++a) {
        if (!canonical_extension(used, static_cast<Letter>(a))) {
          continue;
        }
        prefix.push_back(static_cast<Letter>(a));
        walk(a == used ? used + 1 : used);
        prefix.pop_back();
      }
    };
    walk(0);
    return ok && visited == orbits;
  }

}  // namespace abelian

#endif  // ABELIAN_SEARCH_HPP_
