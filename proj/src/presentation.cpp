#include "diagrams/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

namespace diagrams {

  bool is_identifier(std::string_view s) {
    if (s.empty()) {
      return false;
    }
    auto head = static_cast<unsigned char>(s.front());
    if (!(std::isalpha(head) || head == '_')) {
      return false;
    }
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
      auto u = static_cast<unsigned char>(c);
      return std::isalnum(u) || u == '_';
    });
  }

  Presentation::Presentation(std::vector<std::string> alphabet,
                             std::vector<Relation>    relations,
                             std::string              name)
      : _alphabet(std::move(alphabet)),
        _relations(std::move(relations)),
        _name(std::move(name)) {
    for (std::size_t i = 0; i < _alphabet.size(); ++i) {
      if (!is_identifier(_alphabet[i])) {
        throw PreconditionError("invalid letter name '" + _alphabet[i] + "'");
      }
      if (!_index.emplace(_alphabet[i], static_cast<Letter>(i)).second) {
        throw PreconditionError("duplicate letter '" + _alphabet[i] + "'");
      }
    }
    for (std::size_t i = 0; i < _relations.size(); ++i) {
      auto const& r = _relations[i];
      if (r.lhs.empty() || r.rhs.empty()) {
        throw PreconditionError("relation " + std::to_string(i)
                                + " has an empty defining word");
      }
      for (Word const* w : {&r.lhs, &r.rhs}) {
        for (Letter a : *w) {
          if (a >= _alphabet.size()) {
            throw PreconditionError("relation " + std::to_string(i)
                                    + " uses a letter outside the alphabet");
          }
        }
      }
      if (r.lhs == r.rhs) {
        throw PreconditionError("relation " + std::to_string(i)
                                + " has the form u = u");
      }
      for (std::size_t j = 0; j < i; ++j) {
        auto const& s = _relations[j];
        if ((s.lhs == r.lhs && s.rhs == r.rhs)
            || (s.lhs == r.rhs && s.rhs == r.lhs)) {
          throw PreconditionError("relations " + std::to_string(j) + " and "
                                  + std::to_string(i)
                                  + " violate anti-symmetry");
        }
      }
    }
  }

  std::optional<Letter> Presentation::find_letter(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter Presentation::letter(std::string_view name) const {
    auto a = find_letter(name);
    if (!a) {
      throw PreconditionError("unknown letter '" + std::string(name) + "'");
    }
    return *a;
  }

  Word Presentation::word(std::string_view text) const {
    Word               result;
    std::istringstream in{std::string(text)};
    std::string        token;
    while (in >> token) {
      if (token == "1") {
        continue;
      }
      result.push_back(letter(token));
    }
    return result;
  }

  std::string Presentation::format_word(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += _alphabet.at(w[i]);
    }
    return out;
  }

  std::string Presentation::compact_word(Word const& w) const {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (Letter a : w) {
      out += _alphabet.at(a);
    }
    return out;
  }

  std::string Presentation::format_relation(std::size_t i) const {
    auto const& r = _relations.at(i);
    return compact_word(r.lhs) + "=" + compact_word(r.rhs);
  }

  namespace {

    enum class TokenKind { identifier, bar, equals, comma, end };

    struct Token {
      TokenKind   kind;
      std::string text;
      std::size_t position;
    };

    std::vector<Token> tokenize(std::string_view text) {
      std::vector<Token> tokens;
      std::size_t        i = 0;
      while (i < text.size()) {
        auto c = static_cast<unsigned char>(text[i]);
        if (std::isspace(c)) {
          ++i;
        } else if (c == '|') {
          tokens.push_back({TokenKind::bar, "|", i++});
        } else if (c == '=') {
          tokens.push_back({TokenKind::equals, "=", i++});
        } else if (c == ',') {
          tokens.push_back({TokenKind::comma, ",", i++});
        } else if (std::isalpha(c) || c == '_') {
          std::size_t start = i;
          while (i < text.size()
                 && (std::isalnum(static_cast<unsigned char>(text[i]))
                     || text[i] == '_')) {
            ++i;
          }
          tokens.push_back(
              {TokenKind::identifier, std::string(text.substr(start, i - start)), start});
        } else {
          throw ParseError(std::string("unexpected character '")
                               + static_cast<char>(c) + "'",
                           i);
        }
      }
      tokens.push_back({TokenKind::end, "", text.size()});
      return tokens;
    }

  }  // namespace

  Presentation parse_presentation(std::string_view text, std::string name) {
    auto                     tokens = tokenize(text);
    std::size_t              pos    = 0;
    std::vector<std::string> alphabet;
    while (tokens[pos].kind == TokenKind::identifier) {
      alphabet.push_back(tokens[pos++].text);
    }
    if (tokens[pos].kind != TokenKind::bar) {
      throw ParseError("expected '|' after the alphabet", tokens[pos].position);
    }
    ++pos;
    if (alphabet.empty()) {
      throw ParseError("empty alphabet", tokens[pos - 1].position);
    }
    std::map<std::string, Letter> index;
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (!index.emplace(alphabet[i], static_cast<Letter>(i)).second) {
        throw ParseError("duplicate letter '" + alphabet[i] + "'",
                         tokens[i].position);
      }
    }
    auto read_word = [&](char const* what) {
      Word        w;
      std::size_t start = tokens[pos].position;
      while (tokens[pos].kind == TokenKind::identifier) {
        auto it = index.find(tokens[pos].text);
        if (it == index.end()) {
          throw ParseError("unknown letter '" + tokens[pos].text + "'",
                           tokens[pos].position);
        }
        w.push_back(it->second);
        ++pos;
      }
      if (w.empty()) {
        throw ParseError(std::string("empty ") + what, start);
      }
      return w;
    };

    std::vector<Relation> relations;
    if (tokens[pos].kind != TokenKind::end) {
      while (true) {
        std::size_t rel_start = tokens[pos].position;
        Word        lhs       = read_word("left-hand side");
        if (tokens[pos].kind != TokenKind::equals) {
          throw ParseError("expected '='", tokens[pos].position);
        }
        ++pos;
        Word rhs = read_word("right-hand side");
        if (lhs == rhs) {
          throw ParseError("relation of the form u = u", rel_start);
        }
        for (auto const& r : relations) {
          if ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs)) {
            throw ParseError("relation violates anti-symmetry", rel_start);
          }
        }
        relations.push_back({std::move(lhs), std::move(rhs)});
        if (tokens[pos].kind == TokenKind::comma) {
          ++pos;
          continue;
        }
        if (tokens[pos].kind == TokenKind::end) {
          break;
        }
        throw ParseError("expected ',' or end of input", tokens[pos].position);
      }
    }
    return Presentation(std::move(alphabet), std::move(relations), std::move(name));
  }

  std::string format_presentation(Presentation const& p) {
    std::string out;
    for (auto const& a : p.alphabet()) {
      out += a;
      out += ' ';
    }
    out += '|';
    auto const& rels = p.relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
      out += i == 0 ? " " : " , ";
      out += p.format_word(rels[i].lhs) + " = " + p.format_word(rels[i].rhs);
    }
    return out;
  }

  namespace {
    // "ybar" is displayed as ȳ in unicode mode: precomposed where Unicode
    // has the letter, otherwise followed by a combining macron.
    std::string display_letter(std::string const& name, bool unicode) {
      if (!unicode || name.size() <= 3 || !name.ends_with("bar")) {
        return name;
      }
      static std::map<std::string, std::string> const precomposed{
          {"a", "ā"}, {"e", "ē"}, {"i", "ī"}, {"o", "ō"}, {"u", "ū"},
          {"y", "ȳ"}, {"A", "Ā"}, {"E", "Ē"}, {"I", "Ī"}, {"O", "Ō"},
          {"U", "Ū"}, {"Y", "Ȳ"}, {"g", "ḡ"}, {"G", "Ḡ"}};
      std::string stem = name.substr(0, name.size() - 3);
      auto        it   = precomposed.find(stem);
      return it != precomposed.end() ? it->second : stem + "̄";
    }

    std::string display_word(Presentation const& p, Word const& w, bool unicode) {
      std::string out;
      for (Letter a : w) {
        out += display_letter(p.alphabet()[a], unicode);
      }
      return out;
    }
  }  // namespace

  std::string display_presentation(Presentation const& p, bool unicode) {
    std::string out = unicode ? "⟨" : "<";
    for (std::size_t i = 0; i < p.alphabet().size(); ++i) {
      out += i == 0 ? "" : ", ";
      out += display_letter(p.alphabet()[i], unicode);
    }
    out += unicode ? " ∣" : " |";
    auto const& rels = p.relations();
    if (rels.empty()) {
      out += unicode ? " ∅" : " {}";
    }
    for (std::size_t i = 0; i < rels.size(); ++i) {
      out += i == 0 ? " " : ", ";
      out += display_word(p, rels[i].lhs, unicode) + " = "
             + display_word(p, rels[i].rhs, unicode);
    }
    out += unicode ? "⟩" : ">";
    return out;
  }

  Word const& step_lhs(Presentation const& p, Step const& s) {
    auto const& r = p.relations().at(s.relation);
    return s.direction == Direction::forward ? r.lhs : r.rhs;
  }

  Word const& step_rhs(Presentation const& p, Step const& s) {
    auto const& r = p.relations().at(s.relation);
    return s.direction == Direction::forward ? r.rhs : r.lhs;
  }

  bool is_applicable(Word const& w, Presentation const& p, Step const& s) {
    if (s.relation >= p.relations().size()) {
      return false;
    }
    auto const& lhs = step_lhs(p, s);
    if (s.offset > w.size() || lhs.size() > w.size() - s.offset) {
      return false;
    }
    return std::equal(lhs.begin(), lhs.end(), w.begin() + s.offset);
  }

  Word apply_step(Word const& w, Presentation const& p, Step const& s) {
    if (!is_applicable(w, p, s)) {
      throw NotApplicable("step (" + std::to_string(s.offset) + ", relation "
                          + std::to_string(s.relation) + ") does not match "
                          + p.format_word(w));
    }
    auto const& lhs = step_lhs(p, s);
    auto const& rhs = step_rhs(p, s);
    Word        out;
    out.reserve(w.size() - lhs.size() + rhs.size());
    out.insert(out.end(), w.begin(), w.begin() + s.offset);
    out.insert(out.end(), rhs.begin(), rhs.end());
    out.insert(out.end(), w.begin() + s.offset + lhs.size(), w.end());
    return out;
  }

  Word replay(Presentation const& p, Derivation const& d) {
    Word w = d.start;
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      if (!is_applicable(w, p, d.steps[i])) {
        throw NotApplicable("step " + std::to_string(i) + " (offset "
                            + std::to_string(d.steps[i].offset) + ", relation "
                            + std::to_string(d.steps[i].relation)
                            + ") is not applicable to " + p.format_word(w));
      }
      w = apply_step(w, p, d.steps[i]);
    }
    return w;
  }

  std::vector<Step> applicable_steps(Word const& w, Presentation const& p) {
    std::vector<Step> out;
    for (std::size_t o = 0; o < w.size(); ++o) {
      for (std::size_t r = 0; r < p.relations().size(); ++r) {
        for (auto dir : {Direction::forward, Direction::backward}) {
          Step s{o, r, dir};
          if (is_applicable(w, p, s)) {
            out.push_back(s);
          }
        }
      }
    }
    return out;
  }

  namespace {
    struct WordHash {
      std::size_t operator()(Word const& w) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (Letter a : w) {
          h ^= a + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
      }
    };
  }  // namespace

  EqualityVerdict words_equal_bounded(Presentation const& p,
                                      Word const&         w1,
                                      Word const&         w2,
                                      SearchLimits        limits) {
    if (w1.empty() || w2.empty()) {
      throw PreconditionError("words_equal_bounded: words must be nonempty");
    }
    if (limits.max_word_len == 0 || limits.max_visited == 0) {
      throw PreconditionError("words_equal_bounded: limits must be positive");
    }
    struct Parent {
      std::size_t node;
      Step        step;
    };
    std::vector<Word>                              nodes{w1};
    std::vector<std::optional<Parent>>             parents{std::nullopt};
    std::unordered_map<Word, std::size_t, WordHash> seen{{w1, 0}};
    std::deque<std::size_t>                        queue{0};
    bool                                           truncated = false;

    auto witness_to = [&](std::size_t node) {
      std::vector<Step> steps;
      while (parents[node]) {
        steps.push_back(parents[node]->step);
        node = parents[node]->node;
      }
      std::reverse(steps.begin(), steps.end());
      return Equal{Derivation{w1, std::move(steps)}};
    };

    if (w1 == w2) {
      return witness_to(0);
    }
    while (!queue.empty()) {
      std::size_t current = queue.front();
      queue.pop_front();
      Word const word = nodes[current];
      for (Step const& s : applicable_steps(word, p)) {
        Word next = apply_step(word, p, s);
        if (next.size() > limits.max_word_len) {
          truncated = true;
          continue;
        }
        if (seen.count(next) != 0) {
          continue;
        }
        if (nodes.size() >= limits.max_visited) {
          truncated = true;
          continue;
        }
        seen.emplace(next, nodes.size());
        nodes.push_back(next);
        parents.push_back(Parent{current, s});
        if (next == w2) {
          return witness_to(nodes.size() - 1);
        }
        queue.push_back(nodes.size() - 1);
      }
    }
    if (truncated) {
      return BoundExceeded{};
    }
    return NotEqualWithinBound{};
  }

}  // namespace diagrams
