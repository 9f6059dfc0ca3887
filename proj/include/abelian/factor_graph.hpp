#ifndef ABELIAN_FACTOR_GRAPH_HPP_
#define ABELIAN_FACTOR_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace abelian {

  //! An edge {u, v} with u <= v; u == v is a loop.
  struct Edge {
    Letter u;
    Letter v;

    [[nodiscard]] bool is_loop() const noexcept {
      return u == v;
    }

    friend bool operator==(Edge const&, Edge const&) = default;
    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  //! Graph on the alphabet with an edge {i, j} whenever ij or ji is a
  //! factor. Loops allowed, no multiple edges. A vertex is never its own
  //! neighbour, but a loop adds 1 to its degree.
  class FactorGraph {
   public:
    explicit FactorGraph(Alphabet alphabet)
        : alphabet_(alphabet),
          adjacent_(alphabet.size() * alphabet.size(), false),
          occurs_(alphabet.size(), false) {}

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }

    void add_edge(Letter a, Letter b) {
      adjacent_[index(a, b)] = true;
      adjacent_[index(b, a)] = true;
    }

    void mark_occurs(Letter a) {
      occurs_[a] = true;
    }

    [[nodiscard]] bool has_edge(Letter a, Letter b) const {
      return adjacent_[index(a, b)];
    }

    [[nodiscard]] bool has_loop(Letter a) const {
      return has_edge(a, a);
    }

    [[nodiscard]] bool occurs(Letter a) const {
      return occurs_[a];
    }

    [[nodiscard]] std::vector<Letter> occurring() const {
      std::vector<Letter> out;
      for (std::size_t a = 0; a < alphabet_.size(); ++a) {
        if (occurs_[a]) {
          out.push_back(static_cast<Letter>(a));
        }
      }
      return out;
    }

    //! Distinct neighbours, ascending; never includes a itself.
    [[nodiscard]] std::vector<Letter> neighbours(Letter a) const {
      std::vector<Letter> out;
      for (std::size_t b = 0; b < alphabet_.size(); ++b) {
        if (b != a && has_edge(a, static_cast<Letter>(b))) {
          out.push_back(static_cast<Letter>(b));
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t degree(Letter a) const {
      return neighbours(a).size() + (has_loop(a) ? 1 : 0);
    }

    //! All edges, loops included, in lexicographic order.
    [[nodiscard]] std::vector<Edge> edges() const {
      std::vector<Edge> out;
      for (std::size_t a = 0; a < alphabet_.size(); ++a) {
        for (std::size_t b = a; b < alphabet_.size(); ++b) {
          if (adjacent_[index(static_cast<Letter>(a), static_cast<Letter>(b))]) {
            out.push_back({static_cast<Letter>(a), static_cast<Letter>(b)});
          }
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t edge_count() const {
      return edges().size();
    }

    //! True iff the subgraph induced on occurring letters is connected.
    [[nodiscard]] bool connected_on_occurring() const {
      auto vs = occurring();
      if (vs.empty()) {
        return true;
      }
      std::vector<bool>   seen(alphabet_.size(), false);
      std::vector<Letter> stack{vs.front()};
      seen[vs.front()]   = true;
      std::size_t count = 0;
      while (!stack.empty()) {
        Letter a = stack.back();
        stack.pop_back();
        ++count;
        for (Letter b : neighbours(a)) {
          if (occurs_[b] && !seen[b]) {
            seen[b] = true;
            stack.push_back(b);
          }
        }
      }
      return count == vs.size();
    }

    friend bool operator==(FactorGraph const&, FactorGraph const&) = default;

   private:
    [[nodiscard]] std::size_t index(Letter a, Letter b) const {
      if (a >= alphabet_.size() || b >= alphabet_.size()) {
        throw Error("vertex outside alphabet");
      }
      return a * alphabet_.size() + b;
    }

    Alphabet          alphabet_;
    std::vector<bool> adjacent_;
    std::vector<bool> occurs_;
  };

  inline FactorGraph build_factor_graph(Word const& word) {
    if (word.size() < 2) {
      throw Error("build_factor_graph needs a word of length >= 2");
    }
    FactorGraph g(word.alphabet());
    auto        w = word.letters();
    for (std::size_t i = 0; i < w.size(); ++i) {
      g.mark_occurs(w[i]);
      if (i + 1 < w.size()) {
        g.add_edge(w[i], w[i + 1]);
      }
    }
    return g;
  }

  enum class CycleKind { loop, triangle, long_cycle };

  struct CycleInfo {
    CycleKind           kind;
    std::vector<Letter> vertices;  // in cycle order, starting at the least

    [[nodiscard]] std::size_t length() const noexcept {
      return vertices.size();
    }
  };

  class CycleError : public std::runtime_error {
   public:
    enum class Kind { no_cycle, multiple_cycles, disconnected };

    CycleError(Kind kind, std::string const& what)
        : std::runtime_error(what), kind_(kind) {}

    [[nodiscard]] Kind kind() const noexcept {
      return kind_;
    }

   private:
    Kind kind_;
  };

  //! The unique cycle of a connected graph with as many edges as occurring
  //! vertices. A loop counts as a cycle.
  inline CycleInfo unique_cycle(FactorGraph const& g) {
    if (!g.connected_on_occurring()) {
      throw CycleError(CycleError::Kind::disconnected,
                       "graph is not connected on occurring letters");
    }
    auto const        vs = g.occurring();
    std::size_t const e  = g.edge_count();
    if (e < vs.size()) {
      throw CycleError(CycleError::Kind::no_cycle, "graph is a tree");
    }
    if (e > vs.size()) {
      throw CycleError(CycleError::Kind::multiple_cycles,
                       "graph has " + std::to_string(e) + " edges on "
                           + std::to_string(vs.size()) + " vertices");
    }
    // Leaf pruning: what survives is the cycle.
    std::size_t const        n = g.alphabet().size();
    std::vector<bool>        alive(n, false);
    std::vector<std::size_t> live_degree(n, 0);
    for (Letter a : vs) {
      alive[a]       = true;
      live_degree[a] = g.degree(a) + (g.has_loop(a) ? 1 : 0);
    }
    std::vector<Letter> leaves;
    for (Letter a : vs) {
      if (live_degree[a] == 1) {
        leaves.push_back(a);
      }
    }
    while (!leaves.empty()) {
      Letter a = leaves.back();
      leaves.pop_back();
      alive[a] = false;
      for (Letter b : g.neighbours(a)) {
        if (alive[b] && --live_degree[b] == 1) {
          leaves.push_back(b);
        }
      }
    }
    std::vector<Letter> core;
    for (Letter a : vs) {
      if (alive[a]) {
        core.push_back(a);
      }
    }
    if (core.size() == 1) {
      return {CycleKind::loop, core};
    }
    // Walk the cycle from its least vertex towards the smaller neighbour.
    std::vector<Letter> order{core.front()};
    Letter              prev = core.front();
    Letter              cur  = core.front();
    for (Letter b : g.neighbours(cur)) {
      if (alive[b]) {
        cur = b;
        break;
      }
    }
    while (cur != core.front()) {
      order.push_back(cur);
      for (Letter b : g.neighbours(cur)) {
        if (alive[b] && b != prev) {
          prev = cur;
          cur  = b;
          break;
        }
      }
    }
    return {order.size() == 3 ? CycleKind::triangle : CycleKind::long_cycle,
            order};
  }

  //! Graphviz rendering: vertices and edges (loops as self-edges) in
  //! lexicographic order so the bytes are stable.
  inline std::string to_dot(FactorGraph const& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Letter a : g.occurring()) {
      out << "  \"" << kLabels[a] << "\";\n";
    }
    for (auto const& e : g.edges()) {
      out << "  \"" << kLabels[e.u] << "\" -- \"" << kLabels[e.v] << "\";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace abelian

#endif  // ABELIAN_FACTOR_GRAPH_HPP_
