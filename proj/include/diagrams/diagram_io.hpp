// Text serialization and DOT export of diagrams.
//
//   diagram over thompson: x x x => x x x
//   (x x, x -> x x, 1)
//   (1, x x -> x, x x)
//
// Empty words are written "1". The parser accepts any valid derivation in
// this notation and canonicalizes it; the printer emits canonical order.

#ifndef DIAGRAMS_DIAGRAM_IO_HPP_
#define DIAGRAMS_DIAGRAM_IO_HPP_

#include <string>
#include <string_view>

#include "diagrams/diagram.hpp"

namespace diagrams {

  std::string format_step(Presentation const& p, Word const& word, Step const& s);
  std::string format_diagram(Diagram const& d);

  // Throws ParseError (line-based positions are line numbers) or
  // NotApplicable for derivations that do not replay.
  Diagram parse_diagram(PresentationPtr p, std::string_view text);

  // Plane graph: vertices are the points of the boundary paths, edges the
  // letters; every cell is a cluster holding a node labelled by its relation.
  std::string diagram_to_dot(Diagram const& d);

}  // namespace diagrams

#endif  // DIAGRAMS_DIAGRAM_IO_HPP_
