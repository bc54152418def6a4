#include "diagrams/diagram.hpp"

#include <algorithm>
#include <string>

#include "diagrams/cell_graph.hpp"

namespace diagrams {

  // ---------------------------------------------------------------------------
  // cell graph

  CellGraph build_cell_graph(Presentation const&      p,
                             Word const&              top,
                             std::vector<Step> const& steps) {
    CellGraph g;
    auto      new_edge = [&g](Letter a, std::size_t producer) {
      g.labels.push_back(a);
      g.producer.push_back(producer);
      g.consumer.push_back(no_cell);
      return g.labels.size() - 1;
    };
    std::vector<std::size_t> current;
    for (Letter a : top) {
      current.push_back(new_edge(a, no_cell));
    }
    g.top = current;
    Word word = top;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      Step const& s = steps[i];
      if (!is_applicable(word, p, s)) {
        throw NotApplicable("step " + std::to_string(i) + " (offset "
                            + std::to_string(s.offset) + ", relation "
                            + std::to_string(s.relation)
                            + ") is not applicable to " + p.format_word(word));
      }
      auto const& lhs = step_lhs(p, s);
      auto const& rhs = step_rhs(p, s);
      Cell        c{s.relation, s.direction, {}, {}};
      c.in.assign(current.begin() + s.offset,
                  current.begin() + s.offset + lhs.size());
      for (std::size_t e : c.in) {
        g.consumer[e] = g.cells.size();
      }
      for (Letter a : rhs) {
        c.out.push_back(new_edge(a, g.cells.size()));
      }
      current.erase(current.begin() + s.offset,
                    current.begin() + s.offset + lhs.size());
      current.insert(current.begin() + s.offset, c.out.begin(), c.out.end());
      word = apply_step(word, p, s);
      g.cells.push_back(std::move(c));
    }
    g.bottom = current;
    return g;
  }

  Linearization linearize(CellGraph const&                        g,
                          Pick                                    pick,
                          std::function<bool(std::size_t)> const& keep) {
    auto kept = [&](std::size_t c) {
      return c != no_cell && g.cells[c].alive && (!keep || keep(c));
    };
    std::vector<std::size_t> missing(g.cells.size(), 0);
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      missing[c] = g.cells[c].in.size();
    }
    std::vector<std::size_t> ready;
    auto                     arrive = [&](std::size_t e) {
      std::size_t c = g.consumer[e];
      if (kept(c) && --missing[c] == 0) {
        ready.push_back(c);
      }
    };
    std::vector<std::size_t> current = g.top;
    for (std::size_t e : current) {
      arrive(e);
    }
    std::vector<std::size_t> pos(g.labels.size(), 0);
    Linearization            lin;
    while (!ready.empty()) {
      for (std::size_t i = 0; i < current.size(); ++i) {
        pos[current[i]] = i;
      }
      std::size_t best = 0;
      for (std::size_t k = 1; k < ready.size(); ++k) {
        auto here  = pos[g.cells[ready[k]].in.front()];
        auto there = pos[g.cells[ready[best]].in.front()];
        if (pick == Pick::leftmost ? here < there : here > there) {
          best = k;
        }
      }
      std::size_t c = ready[best];
      ready.erase(ready.begin() + best);
      Cell const& cell   = g.cells[c];
      std::size_t offset = pos[cell.in.front()];
      lin.order.push_back({c, offset, current.size()});
      current.erase(current.begin() + offset,
                    current.begin() + offset + cell.in.size());
      current.insert(current.begin() + offset, cell.out.begin(), cell.out.end());
      for (std::size_t e : cell.out) {
        arrive(e);
      }
    }
    lin.final_edges = std::move(current);
    return lin;
  }

  std::vector<Step> linear_steps(CellGraph const& g, Linearization const& lin) {
    std::vector<Step> steps;
    steps.reserve(lin.order.size());
    for (auto const& pc : lin.order) {
      auto const& c = g.cells[pc.cell];
      steps.push_back(Step{pc.offset, c.relation, c.direction});
    }
    return steps;
  }

  std::size_t successor(CellGraph const& g, std::size_t c) {
    auto const& out = g.cells[c].out;
    if (out.empty()) {
      return no_cell;
    }
    return g.consumer[out.front()];
  }

  bool is_dipole(CellGraph const& g, std::size_t c1, std::size_t c2) {
    if (c1 == no_cell || c2 == no_cell) {
      return false;
    }
    auto const& a = g.cells[c1];
    auto const& b = g.cells[c2];
    return a.alive && b.alive && a.relation == b.relation
           && a.direction != b.direction && b.in == a.out;
  }

  void remove_dipole(CellGraph& g, std::size_t c1, std::size_t c2) {
    if (!is_dipole(g, c1, c2)) {
      throw PreconditionError("cells do not form a dipole");
    }
    auto& a = g.cells[c1];
    auto& b = g.cells[c2];
    for (std::size_t k = 0; k < b.out.size(); ++k) {
      std::size_t old_edge = b.out[k];
      std::size_t new_edge = a.in[k];
      std::size_t c        = g.consumer[old_edge];
      g.consumer[new_edge] = c;
      if (c == no_cell) {
        std::replace(g.bottom.begin(), g.bottom.end(), old_edge, new_edge);
      } else {
        auto& in = g.cells[c].in;
        std::replace(in.begin(), in.end(), old_edge, new_edge);
      }
    }
    a.alive = false;
    b.alive = false;
  }

  std::size_t remove_all_dipoles(CellGraph& g) {
    std::size_t removed = 0;
    bool        again   = true;
    while (again) {
      again = false;
      for (std::size_t c = 0; c < g.cells.size(); ++c) {
        if (!g.cells[c].alive) {
          continue;
        }
        std::size_t s = successor(g, c);
        if (is_dipole(g, c, s)) {
          remove_dipole(g, c, s);
          ++removed;
          again = true;
        }
      }
    }
    return removed;
  }

  // ---------------------------------------------------------------------------
  // diagrams

  Diagram make_canonical_diagram(PresentationPtr p, Word top, std::vector<Step> steps) {
    Diagram d;
    d._bottom       = replay(*p, Derivation{top, steps});
    d._presentation = std::move(p);
    d._top          = std::move(top);
    d._steps        = std::move(steps);
    return d;
  }

  bool Diagram::operator==(Diagram const& other) const {
    if (_top != other._top || _steps != other._steps) {
      return false;
    }
    if (_presentation == other._presentation) {
      return true;
    }
    return _presentation && other._presentation
           && *_presentation == *other._presentation;
  }

  bool same_presentation(Diagram const& a, Diagram const& b) {
    return a.presentation_ptr() == b.presentation_ptr()
           || a.presentation() == b.presentation();
  }

  namespace {
    void require_same(Diagram const& a, Diagram const& b, char const* op) {
      if (!same_presentation(a, b)) {
        throw MismatchError(std::string(op) + ": diagrams over different presentations");
      }
    }

    Diagram from_graph(PresentationPtr p, Word top, CellGraph const& g) {
      auto steps = linear_steps(g, linearize(g, Pick::leftmost));
      return make_canonical_diagram(std::move(p), std::move(top), std::move(steps));
    }
  }  // namespace

  Diagram trivial(PresentationPtr p, Word const& w) {
    if (w.empty()) {
      throw PreconditionError("trivial diagram over the empty word");
    }
    for (Letter a : w) {
      if (a >= p->size()) {
        throw PreconditionError("letter outside the alphabet");
      }
    }
    return make_canonical_diagram(std::move(p), w, {});
  }

  std::vector<Step> canonicalize(Presentation const&      p,
                                 Word const&              top,
                                 std::vector<Step> const& steps) {
    auto g = build_cell_graph(p, top, steps);
    return linear_steps(g, linearize(g, Pick::leftmost));
  }

  Diagram from_derivation(PresentationPtr p, Derivation const& d) {
    if (d.start.empty()) {
      throw PreconditionError("diagram with an empty top word");
    }
    auto g = build_cell_graph(*p, d.start, d.steps);
    return from_graph(std::move(p), d.start, g);
  }

  Diagram compose(Diagram const& d1, Diagram const& d2) {
    require_same(d1, d2, "compose");
    if (d1.bottom() != d2.top()) {
      throw MismatchError("compose: bottom " + d1.presentation().format_word(d1.bottom())
                          + " does not match top "
                          + d2.presentation().format_word(d2.top()));
    }
    Derivation d{d1.top(), d1.steps()};
    d.steps.insert(d.steps.end(), d2.steps().begin(), d2.steps().end());
    return from_derivation(d1.presentation_ptr(), d);
  }

  Diagram sum(Diagram const& d1, Diagram const& d2) {
    require_same(d1, d2, "sum");
    Derivation d{d1.top(), d1.steps()};
    d.start.insert(d.start.end(), d2.top().begin(), d2.top().end());
    std::size_t shift = d1.bottom().size();
    for (Step s : d2.steps()) {
      s.offset += shift;
      d.steps.push_back(s);
    }
    return from_derivation(d1.presentation_ptr(), d);
  }

  Diagram inverse(Diagram const& d) {
    Derivation inv{d.bottom(), {}};
    for (auto it = d.steps().rbegin(); it != d.steps().rend(); ++it) {
      inv.steps.push_back(flip(*it));
    }
    return from_derivation(d.presentation_ptr(), inv);
  }

  std::vector<std::pair<std::size_t, std::size_t>> find_dipoles(Diagram const& d) {
    // the canonical steps are already in leftmost order, so cell index k of
    // the graph built from them is canonical position k
    auto g = build_cell_graph(d.presentation(), d.top(), d.steps());
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t c = 0; c < g.cells.size(); ++c) {
      std::size_t s = successor(g, c);
      if (is_dipole(g, c, s)) {
        out.emplace_back(c, s);
      }
    }
    return out;
  }

  std::optional<std::pair<std::size_t, std::size_t>> find_dipole(Diagram const& d) {
    auto all = find_dipoles(d);
    if (all.empty()) {
      return std::nullopt;
    }
    return all.front();
  }

  Diagram remove_dipole(Diagram const& d, std::size_t i, std::size_t j) {
    auto g = build_cell_graph(d.presentation(), d.top(), d.steps());
    if (i >= g.cells.size() || j >= g.cells.size() || !is_dipole(g, i, j)) {
      throw PreconditionError("steps " + std::to_string(i) + " and "
                              + std::to_string(j) + " do not form a dipole");
    }
    remove_dipole(g, i, j);
    return from_graph(d.presentation_ptr(), d.top(), g);
  }

  bool is_reduced(Diagram const& d) {
    return !find_dipole(d).has_value();
  }

  Diagram reduce(Diagram const& d) {
    auto g = build_cell_graph(d.presentation(), d.top(), d.steps());
    if (remove_all_dipoles(g) == 0) {
      return d;
    }
    return from_graph(d.presentation_ptr(), d.top(), g);
  }

  bool equal(Diagram const& d1, Diagram const& d2) {
    require_same(d1, d2, "equal");
    if (d1.top() != d2.top() || d1.bottom() != d2.bottom()) {
      return false;
    }
    return reduce(d1) == reduce(d2);
  }

  namespace {
    void require_spherical(Diagram const& d, char const* op) {
      if (!d.is_spherical()) {
        throw PreconditionError(std::string(op) + ": diagram is not spherical");
      }
    }
  }  // namespace

  Diagram identity(PresentationPtr p, Word const& w) {
    return trivial(std::move(p), w);
  }

  Diagram group_mul(Diagram const& d1, Diagram const& d2) {
    require_spherical(d1, "group_mul");
    require_spherical(d2, "group_mul");
    require_same(d1, d2, "group_mul");
    if (d1.top() != d2.top()) {
      throw MismatchError("group_mul: different bases");
    }
    return reduce(compose(d1, d2));
  }

  Diagram group_inv(Diagram const& d) {
    require_spherical(d, "group_inv");
    return reduce(inverse(d));
  }

  Diagram group_pow(Diagram const& d, long long n) {
    require_spherical(d, "group_pow");
    Diagram base   = n < 0 ? group_inv(d) : reduce(d);
    Diagram result = trivial(d.presentation_ptr(), d.top());
    for (long long k = 0; k < (n < 0 ? -n : n); ++k) {
      result = group_mul(result, base);
    }
    return result;
  }

  Diagram group_commutator(Diagram const& a, Diagram const& b) {
    return group_mul(group_mul(group_inv(a), group_inv(b)), group_mul(a, b));
  }

  Diagram group_conj(Diagram const& a, Diagram const& b) {
    return group_mul(group_mul(group_inv(b), a), b);
  }

  // ---------------------------------------------------------------------------
  // components

  bool seam_survives(Diagram const& d, std::size_t k, std::size_t* final_k) {
    auto const& p = d.presentation();
    for (Step const& s : d.steps()) {
      std::size_t a = step_lhs(p, s).size();
      std::size_t b = step_rhs(p, s).size();
      if (s.offset + a <= k) {
        k = k + b - a;
      } else if (s.offset < k) {
        return false;
      }
    }
    if (final_k) {
      *final_k = k;
    }
    return true;
  }

  SumDecomposition decompose_components(Diagram const& d) {
    if (!d.is_spherical()) {
      throw PreconditionError("decompose_components: diagram is not spherical");
    }
    auto const&              p = d.presentation();
    std::size_t              n = d.top().size();
    std::vector<std::size_t> seams;
    for (std::size_t k = 1; k < n; ++k) {
      std::size_t end = 0;
      if (seam_survives(d, k, &end) && end == k) {
        seams.push_back(k);
      }
    }
    // boundaries include both ends; they move along with the steps
    std::vector<std::size_t> bounds{0};
    bounds.insert(bounds.end(), seams.begin(), seams.end());
    bounds.push_back(n);
    std::vector<Derivation> parts;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
      parts.push_back(Derivation{Word(d.top().begin() + bounds[i],
                                      d.top().begin() + bounds[i + 1]),
                                 {}});
    }
    std::vector<std::size_t> cur = bounds;
    for (Step const& s : d.steps()) {
      std::size_t a = step_lhs(p, s).size();
      std::size_t b = step_rhs(p, s).size();
      // the part whose interval contains the whole lhs
      std::size_t part = 0;
      while (part + 1 < parts.size() && s.offset >= cur[part + 1]) {
        ++part;
      }
      Step local = s;
      local.offset -= cur[part];
      parts[part].steps.push_back(local);
      for (std::size_t k = part + 1; k < cur.size(); ++k) {
        cur[k] = cur[k] + b - a;
      }
    }
    SumDecomposition out;
    out.seams = std::move(seams);
    for (auto const& part : parts) {
      out.parts.push_back(from_derivation(d.presentation_ptr(), part));
    }
    return out;
  }

  std::size_t comp(Diagram const& d) {
    auto        dec   = decompose_components(d);
    std::size_t count = 0;
    for (auto const& part : dec.parts) {
      if (part.cell_count() > 0) {
        ++count;
      }
    }
    return count;
  }

  // ---------------------------------------------------------------------------
  // label morphisms

  void validate(LabelMorphism const& m) {
    if (!m.source || !m.target) {
      throw PreconditionError("label morphism without presentations");
    }
    if (m.letter_map.size() != m.source->size()) {
      throw PreconditionError("label morphism: letter map has the wrong size");
    }
    if (m.relation_map.size() != m.source->relations().size()) {
      throw PreconditionError("label morphism: relation map has the wrong size");
    }
    for (auto const& w : m.letter_map) {
      if (w.empty()) {
        throw PreconditionError("label morphism: letter mapped to the empty word");
      }
    }
    for (std::size_t r = 0; r < m.relation_map.size(); ++r) {
      auto const& rel = m.source->relations()[r];
      auto const& img = m.relation_map[r];
      if (!(img.presentation() == *m.target) || img.top() != map_word(m, rel.lhs)
          || img.bottom() != map_word(m, rel.rhs)) {
        throw PreconditionError("label morphism: relation " + std::to_string(r)
                                + " has an image with the wrong boundary");
      }
    }
  }

  Word map_word(LabelMorphism const& m, Word const& w) {
    Word out;
    for (Letter a : w) {
      auto const& img = m.letter_map.at(a);
      out.insert(out.end(), img.begin(), img.end());
    }
    return out;
  }

  Diagram substitute(Diagram const& d, LabelMorphism const& m) {
    if (!(d.presentation() == *m.source)) {
      throw MismatchError("substitute: diagram is not over the morphism source");
    }
    auto const& p = d.presentation();
    Derivation  out{map_word(m, d.top()), {}};
    Word        word = d.top();
    for (Step const& s : d.steps()) {
      Word        prefix(word.begin(), word.begin() + s.offset);
      std::size_t shift = map_word(m, prefix).size();
      Diagram const& cell = m.relation_map.at(s.relation);
      if (s.direction == Direction::forward) {
        for (Step t : cell.steps()) {
          t.offset += shift;
          out.steps.push_back(t);
        }
      } else {
        for (auto it = cell.steps().rbegin(); it != cell.steps().rend(); ++it) {
          Step t = flip(*it);
          t.offset += shift;
          out.steps.push_back(t);
        }
      }
      word = apply_step(word, p, s);
    }
    return from_derivation(m.target, out);
  }

}  // namespace diagrams
