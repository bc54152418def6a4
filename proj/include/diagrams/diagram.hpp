// Semigroup diagrams stored as (top word, canonical derivation).

#ifndef DIAGRAMS_DIAGRAM_HPP_
#define DIAGRAMS_DIAGRAM_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "diagrams/presentation.hpp"

namespace diagrams {

  class Diagram {
   public:
    Diagram() = default;

    PresentationPtr const& presentation_ptr() const noexcept {
      return _presentation;
    }

    Presentation const& presentation() const noexcept {
      return *_presentation;
    }

    Word const& top() const noexcept {
      return _top;
    }

    Word const& bottom() const noexcept {
      return _bottom;
    }

    // Canonical (greedy leftmost) step list.
    std::vector<Step> const& steps() const noexcept {
      return _steps;
    }

    std::size_t cell_count() const noexcept {
      return _steps.size();
    }

    bool is_spherical() const noexcept {
      return _top == _bottom;
    }

    Derivation derivation() const {
      return Derivation{_top, _steps};
    }

    // Isotopy, i.e. identical canonical data. Not equivalence; see equal().
    bool operator==(Diagram const& other) const;

   private:
    friend Diagram make_canonical_diagram(PresentationPtr, Word, std::vector<Step>);

    PresentationPtr   _presentation;
    Word              _top;
    std::vector<Step> _steps;
    Word              _bottom;
  };

  // Wraps an already canonical step list. Internal; prefer from_derivation.
  Diagram make_canonical_diagram(PresentationPtr p, Word top, std::vector<Step> steps);

  bool same_presentation(Diagram const& a, Diagram const& b);

  Diagram trivial(PresentationPtr p, Word const& w);

  // Throws NotApplicable naming the offending step.
  Diagram from_derivation(PresentationPtr p, Derivation const& d);

  std::vector<Step> canonicalize(Presentation const&      p,
                                 Word const&              top,
                                 std::vector<Step> const& steps);

  Diagram compose(Diagram const& d1, Diagram const& d2);
  Diagram sum(Diagram const& d1, Diagram const& d2);
  Diagram inverse(Diagram const& d);

  // Lexicographically least dipole (i, j) in canonical step positions.
  std::optional<std::pair<std::size_t, std::size_t>> find_dipole(Diagram const& d);

  // All dipoles, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> find_dipoles(Diagram const& d);

  // Removes the dipole formed by canonical steps i and j. Throws
  // PreconditionError if they do not form one.
  Diagram remove_dipole(Diagram const& d, std::size_t i, std::size_t j);

  bool    is_reduced(Diagram const& d);
  Diagram reduce(Diagram const& d);
  bool    equal(Diagram const& d1, Diagram const& d2);

  // The diagram group D(P, w). Inputs must be spherical with equal bases.
  Diagram identity(PresentationPtr p, Word const& w);
  Diagram group_mul(Diagram const& d1, Diagram const& d2);
  Diagram group_inv(Diagram const& d);
  Diagram group_pow(Diagram const& d, long long n);
  // [a, b] = a^-1 b^-1 a b
  Diagram group_commutator(Diagram const& a, Diagram const& b);
  // a^b = b^-1 a b
  Diagram group_conj(Diagram const& a, Diagram const& b);

  struct SumDecomposition {
    std::vector<Diagram>     parts;
    std::vector<std::size_t> seams;
  };

  // Finest decomposition of a spherical diagram into spherical summands.
  SumDecomposition decompose_components(Diagram const& d);
  std::size_t      comp(Diagram const& d);

  // Whether the seam at position k of the top survives every step and
  // returns to k. Exposed for tests.
  bool seam_survives(Diagram const& d, std::size_t k, std::size_t* final_k = nullptr);

  struct LabelMorphism {
    PresentationPtr      source;
    PresentationPtr      target;
    std::vector<Word>    letter_map;    // by source letter
    std::vector<Diagram> relation_map;  // by source relation: (image u, image v)
  };

  // Checks the LabelMorphism invariants. Throws PreconditionError.
  void validate(LabelMorphism const& m);

  Word    map_word(LabelMorphism const& m, Word const& w);
  Diagram substitute(Diagram const& d, LabelMorphism const& m);

}  // namespace diagrams

#endif  // DIAGRAMS_DIAGRAM_HPP_
