#include "diagrams/diagram_io.hpp"

#include <sstream>
#include <vector>

#include "diagrams/cell_graph.hpp"

namespace diagrams {

  std::string format_step(Presentation const& p, Word const& word, Step const& s) {
    auto const& lhs = step_lhs(p, s);
    Word        prefix(word.begin(), word.begin() + s.offset);
    Word        suffix(word.begin() + s.offset + lhs.size(), word.end());
    return "(" + p.format_word(prefix) + ", " + p.format_word(lhs) + " -> "
           + p.format_word(step_rhs(p, s)) + ", " + p.format_word(suffix) + ")";
  }

  std::string format_diagram(Diagram const& d) {
    auto const& p = d.presentation();
    std::string out = "diagram over " + p.name() + ": " + p.format_word(d.top())
                      + " => " + p.format_word(d.bottom()) + "\n";
    Word word = d.top();
    for (Step const& s : d.steps()) {
      out += format_step(p, word, s) + "\n";
      word = apply_step(word, p, s);
    }
    return out;
  }

  namespace {
    std::string trim(std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return "";
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::string(s.substr(b, e - b + 1));
    }

    Word parse_word(Presentation const& p, std::string const& text, std::size_t line) {
      try {
        return p.word(text);
      } catch (PreconditionError const& e) {
        throw ParseError(e.what(), line);
      }
    }
  }  // namespace

  Diagram parse_diagram(PresentationPtr p, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        line_no = 0;
    std::optional<Word> top;
    std::optional<Word> bottom;
    Derivation          d;
    Word                word;
    while (std::getline(in, line)) {
      ++line_no;
      std::string t = trim(line);
      if (t.empty() || t.front() == '#') {
        continue;
      }
      if (!top) {
        if (!t.starts_with("diagram")) {
          throw ParseError("expected a 'diagram over <name>: <top> => <bottom>' header",
                           line_no);
        }
        auto colon = t.find(':');
        auto arrow = t.find("=>");
        if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
          throw ParseError("malformed header", line_no);
        }
        top    = parse_word(*p, trim(t.substr(colon + 1, arrow - colon - 1)), line_no);
        bottom = parse_word(*p, trim(t.substr(arrow + 2)), line_no);
        if (top->empty()) {
          throw ParseError("empty top word", line_no);
        }
        d.start = *top;
        word    = *top;
        continue;
      }
      if (t.front() != '(' || t.back() != ')') {
        throw ParseError("expected a step '(prefix, lhs -> rhs, suffix)'", line_no);
      }
      std::string body = t.substr(1, t.size() - 2);
      std::vector<std::string> fields;
      std::string              field;
      std::istringstream       parts(body);
      while (std::getline(parts, field, ',')) {
        fields.push_back(trim(field));
      }
      if (fields.size() != 3) {
        throw ParseError("a step has three comma separated fields", line_no);
      }
      auto arrow = fields[1].find("->");
      if (arrow == std::string::npos) {
        throw ParseError("expected '->' in the middle field", line_no);
      }
      Word prefix = parse_word(*p, fields[0], line_no);
      Word lhs    = parse_word(*p, trim(fields[1].substr(0, arrow)), line_no);
      Word rhs    = parse_word(*p, trim(fields[1].substr(arrow + 2)), line_no);
      Word suffix = parse_word(*p, fields[2], line_no);
      std::optional<Step> step;
      for (std::size_t r = 0; r < p->relations().size() && !step; ++r) {
        auto const& rel = p->relations()[r];
        if (rel.lhs == lhs && rel.rhs == rhs) {
          step = Step{prefix.size(), r, Direction::forward};
        } else if (rel.rhs == lhs && rel.lhs == rhs) {
          step = Step{prefix.size(), r, Direction::backward};
        }
      }
      if (!step) {
        throw ParseError("no relation " + p->format_word(lhs) + " = "
                             + p->format_word(rhs),
                         line_no);
      }
      Word expected = prefix;
      expected.insert(expected.end(), lhs.begin(), lhs.end());
      expected.insert(expected.end(), suffix.begin(), suffix.end());
      if (expected != word) {
        throw NotApplicable("step on line " + std::to_string(line_no)
                            + " does not match the current word "
                            + p->format_word(word));
      }
      word = apply_step(word, *p, *step);
      d.steps.push_back(*step);
    }
    if (!top) {
      throw ParseError("missing diagram header", line_no);
    }
    if (word != *bottom) {
      throw MismatchError("derivation ends in " + p->format_word(word)
                          + ", header says " + p->format_word(*bottom));
    }
    return from_derivation(std::move(p), d);
  }

  std::string diagram_to_dot(Diagram const& d) {
    auto const& p = d.presentation();
    auto        g = build_cell_graph(p, d.top(), d.steps());
    // vertex ids along the current path; a cell keeps the two ends of its
    // lhs and creates |rhs| - 1 new inner vertices
    std::vector<std::size_t> verts;
    std::size_t              next_vertex = 0;
    for (std::size_t i = 0; i <= d.top().size(); ++i) {
      verts.push_back(next_vertex++);
    }
    struct EdgeEnds {
      std::size_t from, to;
    };
    std::vector<EdgeEnds> ends(g.labels.size());
    for (std::size_t i = 0; i < g.top.size(); ++i) {
      ends[g.top[i]] = {verts[i], verts[i + 1]};
    }
    std::ostringstream out;
    out << "digraph diagram {\n  rankdir=TB;\n  node [shape=point];\n";
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      Step const& s = d.steps()[c];
      auto const& cell = g.cells[c];
      std::size_t a = cell.in.size();
      std::vector<std::size_t> fresh{verts[s.offset]};
      for (std::size_t k = 1; k < cell.out.size(); ++k) {
        fresh.push_back(next_vertex++);
      }
      fresh.push_back(verts[s.offset + a]);
      for (std::size_t k = 0; k < cell.out.size(); ++k) {
        ends[cell.out[k]] = {fresh[k], fresh[k + 1]};
      }
      verts.erase(verts.begin() + s.offset, verts.begin() + s.offset + a + 1);
      verts.insert(verts.begin() + s.offset, fresh.begin(), fresh.end());
      out << "  subgraph cluster_" << c << " {\n    label=\"" << p.format_relation(cell.relation)
          << (cell.direction == Direction::forward ? "" : " (inv)") << "\";\n"
          << "    cell_" << c << " [shape=box, label=\"" << c << "\"];\n  }\n";
    }
    for (std::size_t v = 0; v < next_vertex; ++v) {
      out << "  v" << v << ";\n";
    }
    for (std::size_t e = 0; e < g.labels.size(); ++e) {
      out << "  v" << ends[e].from << " -> v" << ends[e].to << " [label=\""
          << p.alphabet()[g.labels[e]] << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace diagrams
