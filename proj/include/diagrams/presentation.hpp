// Words, semigroup presentations, elementary transformations and a bounded
// oracle for equality of words modulo a presentation.

#ifndef DIAGRAMS_PRESENTATION_HPP_
#define DIAGRAMS_PRESENTATION_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "diagrams/errors.hpp"

namespace diagrams {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;

  // A defining relation lhs = rhs, stored in the orientation it was given.
  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  // An anti-symmetric semigroup presentation <alphabet | relations>.
  //
  // Letters are interned: a Letter is an index into alphabet().
  class Presentation {
   public:
    Presentation() = default;

    // Throws PreconditionError if a relation has an empty side, if u = u or
    // both (u, v) and (v, u) are listed, if a letter is out of range, or if
    // the alphabet contains duplicate or malformed names.
    Presentation(std::vector<std::string> alphabet,
                 std::vector<Relation>    relations,
                 std::string              name = "P");

    std::vector<std::string> const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    std::string const& name() const noexcept {
      return _name;
    }

    std::size_t size() const noexcept {
      return _alphabet.size();
    }

    std::optional<Letter> find_letter(std::string_view name) const;

    // Throws PreconditionError for unknown letters.
    Letter letter(std::string_view name) const;

    // Parses a space separated word such as "x y x". "1" and the empty
    // string denote the empty word.
    Word word(std::string_view text) const;

    // "x y x"; the empty word is written "1".
    std::string format_word(Word const& w) const;

    // Letters concatenated, as in "xyx"; the empty word is written "1".
    std::string compact_word(Word const& w) const;

    // Relation index i written as "u=v" in compact form.
    std::string format_relation(std::size_t i) const;

    // Same alphabet and same relations; the name is ignored.
    bool operator==(Presentation const& other) const {
      return _alphabet == other._alphabet && _relations == other._relations;
    }

   private:
    std::vector<std::string>                     _alphabet;
    std::vector<Relation>                        _relations;
    std::string                                  _name;
    std::unordered_map<std::string, Letter>      _index;
  };

  using PresentationPtr = std::shared_ptr<Presentation const>;

  bool is_identifier(std::string_view s);

  // Grammar: `a b c | u = v , u = v , ...`, words are space separated
  // identifiers. An empty relation list is allowed after `|`.
  Presentation parse_presentation(std::string_view text,
                                  std::string      name = "P");

  // Inverse of parse_presentation.
  std::string format_presentation(Presentation const& p);

  // Display form <x, y | xy = x, ...>; with unicode the brackets are
  // U+27E8/U+27E9 and the bar U+2223.
  std::string display_presentation(Presentation const& p,
                                   bool                unicode = false);

  enum class Direction : std::uint8_t { forward, backward };

  inline Direction flip(Direction d) noexcept {
    return d == Direction::forward ? Direction::backward : Direction::forward;
  }

  // An edge (prefix, lhs -> rhs, suffix) of the graph of elementary
  // transformations, addressed by the letter offset of lhs.
  struct Step {
    std::size_t offset;
    std::size_t relation;
    Direction   direction;

    bool operator==(Step const&) const = default;
  };

  inline Step flip(Step s) noexcept {
    return Step{s.offset, s.relation, flip(s.direction)};
  }

  Word const& step_lhs(Presentation const& p, Step const& s);
  Word const& step_rhs(Presentation const& p, Step const& s);

  bool is_applicable(Word const& w, Presentation const& p, Step const& s);

  // Throws NotApplicable.
  Word apply_step(Word const& w, Presentation const& p, Step const& s);

  struct Derivation {
    Word              start;
    std::vector<Step> steps;

    bool operator==(Derivation const&) const = default;
  };

  // Replays the derivation and returns the final word. Throws NotApplicable
  // naming the first offending step.
  Word replay(Presentation const& p, Derivation const& d);

  // Every step applicable to w, in exploration order: offset ascending, then
  // relation index ascending, forward before backward.
  std::vector<Step> applicable_steps(Word const& w, Presentation const& p);

  struct SearchLimits {
    std::size_t max_word_len = 32;
    std::size_t max_visited  = 100000;
  };

  struct Equal {
    Derivation witness;
  };

  struct NotEqualWithinBound {};

  struct BoundExceeded {};

  using EqualityVerdict = std::variant<Equal, NotEqualWithinBound, BoundExceeded>;

  // Breadth first search from w1. Returns the shortest derivation to w2
  // found in exploration order, NotEqualWithinBound when the whole class of
  // w1 was exhausted, BoundExceeded when the frontier had to be cut.
  EqualityVerdict words_equal_bounded(Presentation const& p,
                                      Word const&         w1,
                                      Word const&         w2,
                                      SearchLimits        limits = {});

}  // namespace diagrams

#endif  // DIAGRAMS_PRESENTATION_HPP_
