// Thompson's group F: normal forms, and diagrams over <x | x = x x>.

#ifndef DIAGRAMS_THOMPSON_HPP_
#define DIAGRAMS_THOMPSON_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "diagrams/diagram.hpp"

namespace diagrams {

  // x_index^exponent with exponent +1 or -1.
  struct FLetter {
    std::uint32_t index;
    int           exponent;

    bool operator==(FLetter const&) const = default;
  };

  using FWord = std::vector<FLetter>;

  inline FWord inverse(FWord const& w) {
    FWord out(w.rbegin(), w.rend());
    for (auto& l : out) {
      l.exponent = -l.exponent;
    }
    return out;
  }

  // x_{i1}^{s1} ... x_{im}^{sm} x_{jn}^{-tn} ... x_{j1}^{-t1}. Both lists hold
  // (index, exponent) with strictly ascending indices.
  struct NormalForm {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pos;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> neg;

    bool is_identity() const noexcept {
      return pos.empty() && neg.empty();
    }

    // Total exponent length sum s_k + sum t_k.
    std::size_t syllable_length() const;

    auto operator<=>(NormalForm const&) const = default;
  };

  // Checks the shape and the side condition.
  bool is_normal_form(NormalForm const& f);

  NormalForm nf_from_word(FWord const& w);
  NormalForm nf_mul(NormalForm const& a, NormalForm const& b);
  NormalForm nf_inv(NormalForm const& a);
  NormalForm nf_generator(std::uint32_t i, int exponent = 1);
  FWord      nf_to_word(NormalForm const& f);

  // "x0 x2^2 x4^-1"; the identity is "1".
  std::string format_nf(NormalForm const& f);
  std::string format_fword(FWord const& w);
  // Accepts any product of x<i>, x<i>^<k>, x<i>^-<k> and "1".
  FWord       parse_fword(std::string_view text);
  NormalForm  parse_nf(std::string_view text);

  // <x | x = x x>, shared.
  PresentationPtr thompson_presentation();

  Word x_power(std::size_t k);

  // The (x, x^k) left comb.
  Diagram base_comb(std::size_t k);

  // Conjugates a spherical diagram over x^m to base x^k by the combs.
  Diagram change_base(Diagram const& d, std::size_t k);

  Diagram generator_diagram(std::uint32_t i, std::size_t k);
  Diagram nf_to_diagram(NormalForm const& f, std::size_t k);
  NormalForm diagram_to_nf(Diagram const& d);

  // Number of cells of the reduced diagram of f over base x^k.
  std::size_t cell_count_k(NormalForm const& f, std::size_t k);

  // Cell labels x_i, rightmost cell first, i the number of edges to the
  // right of the cell; the negative half is read through the mirror.
  // Exposed for tests.
  struct CellReading {
    FWord positive;
    FWord negative;
  };
  CellReading read_cells(Diagram const& d);

  // Freely reduced words over {x0, x1}^{±1} of length exactly n, in
  // length-lex order x0 < x0^-1 < x1 < x1^-1.
  std::vector<FWord> words_of_length(std::size_t n);

}  // namespace diagrams

#endif  // DIAGRAMS_THOMPSON_HPP_
