// The plane graph behind a derivation: edges are letter occurrences, cells
// consume a contiguous run of edges and produce another. Isotopic
// derivations give the same graph, so this is where canonical order,
// dipoles and the Thompson tree readings are computed.

#ifndef DIAGRAMS_CELL_GRAPH_HPP_
#define DIAGRAMS_CELL_GRAPH_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "diagrams/presentation.hpp"

namespace diagrams {

  inline constexpr std::size_t no_cell = static_cast<std::size_t>(-1);

  struct Cell {
    std::size_t              relation;
    Direction                direction;
    std::vector<std::size_t> in;
    std::vector<std::size_t> out;
    bool                     alive = true;
  };

  struct CellGraph {
    std::vector<Letter>      labels;    // per edge
    std::vector<std::size_t> producer;  // per edge, no_cell for top edges
    std::vector<std::size_t> consumer;  // per edge, no_cell for bottom edges
    std::vector<std::size_t> top;
    std::vector<std::size_t> bottom;
    std::vector<Cell>        cells;     // in the order of the source steps
  };

  CellGraph build_cell_graph(Presentation const&      p,
                             Word const&              top,
                             std::vector<Step> const& steps);

  enum class Pick { leftmost, rightmost };

  struct PlacedCell {
    std::size_t cell;
    std::size_t offset;
    std::size_t length;  // word length just before the cell fires
  };

  struct Linearization {
    std::vector<PlacedCell>  order;
    std::vector<std::size_t> final_edges;
  };

  // Fires cells one at a time, always the ready one whose first input edge is
  // leftmost (or rightmost). `keep` restricts to a set of cells closed under
  // predecessors; by default every live cell is used.
  Linearization linearize(CellGraph const&                         g,
                          Pick                                     pick,
                          std::function<bool(std::size_t)> const& keep = {});

  std::vector<Step> linear_steps(CellGraph const& g, Linearization const& lin);

  // c2 consumes exactly the output of c1 and undoes it.
  bool is_dipole(CellGraph const& g, std::size_t c1, std::size_t c2);

  // Cell consuming the first output edge of c, or no_cell.
  std::size_t successor(CellGraph const& g, std::size_t c);

  void remove_dipole(CellGraph& g, std::size_t c1, std::size_t c2);

  // Removes dipoles until none is left; returns the number removed.
  std::size_t remove_all_dipoles(CellGraph& g);

}  // namespace diagrams

#endif  // DIAGRAMS_CELL_GRAPH_HPP_
