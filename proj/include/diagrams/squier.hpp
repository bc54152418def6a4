// Bounded pieces of Squier complexes, their fundamental groups, and the
// diagram product presentation builders.

#ifndef DIAGRAMS_SQUIER_HPP_
#define DIAGRAMS_SQUIER_HPP_

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "diagrams/diagram.hpp"

namespace diagrams {

  struct SquierBounds {
    std::size_t max_word_len = 16;
    std::size_t max_visited  = 10000;
    std::size_t max_depth    = std::numeric_limits<std::size_t>::max();
  };

  // Positive edge (prefix, lhs -> rhs, suffix) with (lhs, rhs) a relation.
  struct SquierEdge {
    std::size_t from;
    std::size_t to;
    std::size_t offset;
    std::size_t relation;
  };

  // The 2-cell of two disjoint positive applications at `corner`, the
  // first strictly left of the second. Boundary: first_a then first_b
  // versus second_a then second_b (edges indices).
  struct SquierCell {
    std::size_t corner;
    Step        left;
    Step        right;
    std::size_t first_a, first_b;    // left, then right
    std::size_t second_a, second_b;  // right, then left
  };

  struct SquierComplex {
    PresentationPtr          presentation;
    Word                     base;
    std::vector<Word>        vertices;  // BFS order, vertices[0] = base
    std::vector<SquierEdge>  edges;     // by (from, offset, relation)
    std::vector<SquierCell>  two_cells;
    bool                     truncated = false;

    std::size_t vertex(Word const& w) const;  // throws if absent
  };

  SquierComplex build_component(PresentationPtr p, Word const& w, SquierBounds bounds = {});

  // Indices of tree edges: BFS from the base, edges at each vertex taken by
  // (offset, relation, leaving before entering).
  std::vector<std::size_t> spanning_tree(SquierComplex const& k);

  struct SignedGen {
    std::size_t gen;
    int         exp;  // +1 / -1

    bool operator==(SignedGen const&) const = default;
  };

  using GroupWord = std::vector<SignedGen>;

  struct GroupPresentationOut {
    std::vector<std::string> generators;
    std::vector<std::size_t> generator_edges;  // edge index per generator
    std::vector<GroupWord>   relators;
    bool                     tietze_reduced = false;
  };

  GroupPresentationOut pi1_presentation(SquierComplex const& k, bool tietze = true);
  // Free/cyclic reduction, g = 1 and g = h eliminations, to a fixpoint.
  GroupPresentationOut tietze_reduce(GroupPresentationOut g);
  std::string          format_group_presentation(GroupPresentationOut const& g);
  // Free of the returned rank when no relators are left.
  bool                 is_free(GroupPresentationOut const& g);

  struct PathEdge {
    std::size_t edge;
    bool        reversed = false;
  };

  // Throws PreconditionError for broken paths.
  Diagram path_to_diagram(SquierComplex const& k, std::size_t start,
                          std::vector<PathEdge> const& path);

  std::string format_edge(SquierComplex const& k, SquierEdge const& e);
  std::string complex_to_json(SquierComplex const& k);
  std::string complex_to_dot(SquierComplex const& k);

  // --- diagram products ---------------------------------------------------

  struct FamilyEntry {
    Presentation presentation;
    Word         base;
  };

  struct PresentationWithBase {
    Presentation presentation;
    Word         base;
  };

  // <X u A u Sigma | S u W u R>, W = {x = a_x w_x a_x}; letters ordered X,
  // A, Sigma and relations S, W, R. Clashing names are renamed.
  PresentationWithBase diagram_product_presentation(Presentation const&                 q,
                                                    Word const&                         w,
                                                    std::map<Letter, FamilyEntry> const& family);

  enum class NamedKind { direct_product, free_product, bullet, direct_power, wreath_with_z, big_o };

  PresentationWithBase named_builder(NamedKind kind, std::size_t n = 3);
  // Q = <x, y, z | xy = x, yz = z> with y carrying <u | uu = u>, base xz.
  PresentationWithBase f_wr_z_product();

}  // namespace diagrams

#endif  // DIAGRAMS_SQUIER_HPP_
