#include "diagrams/squier.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace diagrams {

  std::size_t SquierComplex::vertex(Word const& w) const {
    auto it = std::find(vertices.begin(), vertices.end(), w);
    if (it == vertices.end()) {
      throw PreconditionError("word is not a vertex of the complex");
    }
    return static_cast<std::size_t>(it - vertices.begin());
  }

  SquierComplex build_component(PresentationPtr p, Word const& w, SquierBounds bounds) {
    if (w.empty()) {
      throw PreconditionError("Squier component of the empty word");
    }
    SquierComplex k;
    k.presentation = p;
    k.base         = w;
    std::map<Word, std::size_t> index;
    std::vector<std::size_t>    depth;
    k.vertices.push_back(w);
    index.emplace(w, 0);
    depth.push_back(0);
    for (std::size_t head = 0; head < k.vertices.size(); ++head) {
      Word const current = k.vertices[head];
      for (Step const& s : applicable_steps(current, *p)) {
        Word next = apply_step(current, *p, s);
        if (index.count(next) != 0) {
          continue;
        }
        if (next.size() > bounds.max_word_len || depth[head] + 1 > bounds.max_depth
            || k.vertices.size() >= bounds.max_visited) {
          k.truncated = true;
          continue;
        }
        index.emplace(next, k.vertices.size());
        k.vertices.push_back(next);
        depth.push_back(depth[head] + 1);
      }
    }
    std::map<std::pair<std::size_t, std::pair<std::size_t, std::size_t>>, std::size_t> edge_at;
    for (std::size_t v = 0; v < k.vertices.size(); ++v) {
      for (Step const& s : applicable_steps(k.vertices[v], *p)) {
        if (s.direction != Direction::forward) {
          continue;
        }
        auto it = index.find(apply_step(k.vertices[v], *p, s));
        if (it == index.end()) {
          continue;
        }
        edge_at[{v, {s.offset, s.relation}}] = k.edges.size();
        k.edges.push_back({v, it->second, s.offset, s.relation});
      }
    }
    auto find_edge = [&](std::size_t v, Step const& s) -> std::optional<std::size_t> {
      auto it = edge_at.find({v, {s.offset, s.relation}});
      if (it == edge_at.end()) {
        return std::nullopt;
      }
      return it->second;
    };
    for (std::size_t v = 0; v < k.vertices.size(); ++v) {
      std::vector<Step> fwd;
      for (Step const& s : applicable_steps(k.vertices[v], *p)) {
        if (s.direction == Direction::forward) {
          fwd.push_back(s);
        }
      }
      for (Step const& s1 : fwd) {
        for (Step const& s2 : fwd) {
          std::size_t a1 = step_lhs(*p, s1).size();
          std::size_t b1 = step_rhs(*p, s1).size();
          if (s1.offset + a1 > s2.offset) {
            continue;
          }
          Step s2_after = s2;
          s2_after.offset = s2.offset + b1 - a1;
          auto e1a = find_edge(v, s1);
          auto e2a = find_edge(v, s2);
          if (!e1a || !e2a) {
            continue;
          }
          auto e1b = find_edge(k.edges[*e1a].to, s2_after);
          auto e2b = find_edge(k.edges[*e2a].to, s1);
          if (!e1b || !e2b) {
            continue;
          }
          k.two_cells.push_back({v, s1, s2, *e1a, *e1b, *e2a, *e2b});
        }
      }
    }
    return k;
  }

  std::vector<std::size_t> spanning_tree(SquierComplex const& k) {
    // incident edges per vertex, sorted by (offset, relation, leaving first)
    struct Incident {
      std::size_t offset, relation;
      int         entering;
      std::size_t edge;
      std::size_t other;
      auto operator<=>(Incident const&) const = default;
    };
    std::vector<std::vector<Incident>> inc(k.vertices.size());
    for (std::size_t e = 0; e < k.edges.size(); ++e) {
      auto const& E = k.edges[e];
      inc[E.from].push_back({E.offset, E.relation, 0, e, E.to});
      inc[E.to].push_back({E.offset, E.relation, 1, e, E.from});
    }
    for (auto& v : inc) {
      std::sort(v.begin(), v.end());
    }
    std::vector<bool>        seen(k.vertices.size(), false);
    std::vector<std::size_t> tree;
    std::deque<std::size_t>  queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      for (auto const& i : inc[v]) {
        if (!seen[i.other]) {
          seen[i.other] = true;
          tree.push_back(i.edge);
          queue.push_back(i.other);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
      throw PreconditionError("spanning_tree: complex is disconnected");
    }
    std::sort(tree.begin(), tree.end());
    return tree;
  }

  std::string format_edge(SquierComplex const& k, SquierEdge const& e) {
    auto const& p    = *k.presentation;
    Word const& word = k.vertices[e.from];
    auto const& rel  = p.relations()[e.relation];
    Word        prefix(word.begin(), word.begin() + e.offset);
    Word        suffix(word.begin() + e.offset + rel.lhs.size(), word.end());
    return "(" + p.compact_word(prefix) + ", " + p.compact_word(rel.lhs) + " -> "
           + p.compact_word(rel.rhs) + ", " + p.compact_word(suffix) + ")";
  }

  namespace {
    GroupWord free_reduce(GroupWord const& w) {
      GroupWord out;
      for (auto const& g : w) {
        if (!out.empty() && out.back().gen == g.gen && out.back().exp == -g.exp) {
          out.pop_back();
        } else {
          out.push_back(g);
        }
      }
      return out;
    }

    GroupWord cyclic_reduce(GroupWord w) {
      w = free_reduce(w);
      while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().exp == -w.back().exp) {
        w.erase(w.begin());
        w.pop_back();
      }
      return w;
    }

    std::string format_group_word(GroupPresentationOut const& g, GroupWord const& w) {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto const& s : w) {
        if (!out.empty()) {
          out += ' ';
        }
        out += g.generators[s.gen];
        if (s.exp < 0) {
          out += "^-1";
        }
      }
      return out;
    }
  }  // namespace

  GroupPresentationOut pi1_presentation(SquierComplex const& k, bool tietze) {
    auto                     tree = spanning_tree(k);
    std::set<std::size_t>    in_tree(tree.begin(), tree.end());
    GroupPresentationOut     out;
    std::vector<std::size_t> gen_of(k.edges.size(), static_cast<std::size_t>(-1));
    for (std::size_t e = 0; e < k.edges.size(); ++e) {
      if (in_tree.count(e) == 0) {
        gen_of[e] = out.generators.size();
        out.generators.push_back("g" + std::to_string(out.generators.size()));
        out.generator_edges.push_back(e);
      }
    }
    auto letter = [&](GroupWord& w, std::size_t e, int exp) {
      if (gen_of[e] != static_cast<std::size_t>(-1)) {
        w.push_back({gen_of[e], exp});
      }
    };
    for (auto const& c : k.two_cells) {
      GroupWord r;
      letter(r, c.first_a, 1);
      letter(r, c.first_b, 1);
      letter(r, c.second_b, -1);
      letter(r, c.second_a, -1);
      out.relators.push_back(r);
    }
    return tietze ? tietze_reduce(std::move(out)) : out;
  }

  GroupPresentationOut tietze_reduce(GroupPresentationOut g) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<GroupWord> rels;
      for (auto const& r : g.relators) {
        auto c = cyclic_reduce(r);
        if (!c.empty() && std::find(rels.begin(), rels.end(), c) == rels.end()) {
          rels.push_back(std::move(c));
        }
      }
      g.relators = std::move(rels);
      // find an eliminable generator
      std::optional<std::size_t> victim;
      GroupWord                  replacement;
      for (auto const& r : g.relators) {
        if (r.size() == 1) {
          victim = r[0].gen;
          break;
        }
        if (r.size() == 2 && r[0].gen != r[1].gen) {
          // g^a h^b = 1 gives g = h^(-a b)
          victim      = r[0].gen;
          replacement = {{r[1].gen, -r[0].exp * r[1].exp}};
          break;
        }
      }
      if (!victim) {
        break;
      }
      changed = true;
      for (auto& r : g.relators) {
        GroupWord next;
        for (auto const& s : r) {
          if (s.gen != *victim) {
            next.push_back(s);
            continue;
          }
          if (s.exp > 0) {
            next.insert(next.end(), replacement.begin(), replacement.end());
          } else {
            for (auto it = replacement.rbegin(); it != replacement.rend(); ++it) {
              next.push_back({it->gen, -it->exp});
            }
          }
        }
        r = std::move(next);
      }
      // renumber the remaining generators
      std::size_t v = *victim;
      g.generators.erase(g.generators.begin() + static_cast<std::ptrdiff_t>(v));
      g.generator_edges.erase(g.generator_edges.begin() + static_cast<std::ptrdiff_t>(v));
      for (auto& r : g.relators) {
        for (auto& s : r) {
          if (s.gen > v) {
            --s.gen;
          }
        }
      }
    }
    g.tietze_reduced = true;
    return g;
  }

  bool is_free(GroupPresentationOut const& g) {
    return g.relators.empty();
  }

  std::string format_group_presentation(GroupPresentationOut const& g) {
    std::string out = "<";
    for (std::size_t i = 0; i < g.generators.size(); ++i) {
      out += (i == 0 ? " " : ", ") + g.generators[i];
    }
    out += " |";
    for (std::size_t i = 0; i < g.relators.size(); ++i) {
      out += (i == 0 ? " " : ", ") + format_group_word(g, g.relators[i]);
    }
    out += " >";
    return out;
  }

  Diagram path_to_diagram(SquierComplex const& k, std::size_t start,
                          std::vector<PathEdge> const& path) {
    if (start >= k.vertices.size()) {
      throw PreconditionError("path starts outside the complex");
    }
    Derivation  d{k.vertices[start], {}};
    std::size_t at = start;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i].edge >= k.edges.size()) {
        throw PreconditionError("path uses an unknown edge");
      }
      auto const& e = k.edges[path[i].edge];
      if (!path[i].reversed) {
        if (e.from != at) {
          throw PreconditionError("broken path at edge " + std::to_string(i));
        }
        d.steps.push_back({e.offset, e.relation, Direction::forward});
        at = e.to;
      } else {
        if (e.to != at) {
          throw PreconditionError("broken path at edge " + std::to_string(i));
        }
        d.steps.push_back({e.offset, e.relation, Direction::backward});
        at = e.from;
      }
    }
    return from_derivation(k.presentation, d);
  }

  std::string complex_to_json(SquierComplex const& k) {
    auto const&              p = *k.presentation;
    std::vector<std::string> vertices;
    for (auto const& v : k.vertices) {
      vertices.push_back(p.compact_word(v));
    }
    std::vector<std::string> edges;
    for (auto const& e : k.edges) {
      edges.push_back(format_edge(k, e));
    }
    std::vector<std::string> cells;
    for (auto const& c : k.two_cells) {
      Word const& w  = k.vertices[c.corner];
      auto        l1 = step_lhs(p, c.left);
      auto        l2 = step_lhs(p, c.right);
      Word        u(w.begin(), w.begin() + c.left.offset);
      Word        z(w.begin() + c.left.offset + l1.size(), w.begin() + c.right.offset);
      Word        v(w.begin() + c.right.offset + l2.size(), w.end());
      cells.push_back("(" + p.compact_word(u) + ", " + p.format_relation(c.left.relation) + ", "
                      + p.compact_word(z) + ", " + p.format_relation(c.right.relation) + ", "
                      + p.compact_word(v) + ")");
    }
    std::sort(vertices.begin(), vertices.end());
    std::sort(edges.begin(), edges.end());
    std::sort(cells.begin(), cells.end());
    nlohmann::ordered_json j;
    j["base"]      = p.compact_word(k.base);
    j["truncated"] = k.truncated;
    j["vertices"]  = vertices;
    j["edges"]     = edges;
    j["two_cells"] = cells;
    return j.dump(2) + "\n";
  }

  std::string complex_to_dot(SquierComplex const& k) {
    auto const&        p = *k.presentation;
    std::ostringstream out;
    out << "digraph squier {\n";
    for (std::size_t v = 0; v < k.vertices.size(); ++v) {
      out << "  v" << v << " [label=\"" << p.compact_word(k.vertices[v]) << "\"];\n";
    }
    for (auto const& e : k.edges) {
      out << "  v" << e.from << " -> v" << e.to << " [label=\"" << p.format_relation(e.relation)
          << " @" << e.offset << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  // ---------------------------------------------------------------------------
  // diagram products

  namespace {
    std::string fresh_name(std::string base, std::set<std::string> const& taken) {
      if (taken.count(base) == 0) {
        return base;
      }
      for (int i = 2;; ++i) {
        std::string candidate = base + "_" + std::to_string(i);
        if (taken.count(candidate) == 0) {
          return candidate;
        }
      }
    }
  }  // namespace

  PresentationWithBase diagram_product_presentation(Presentation const&                  q,
                                                    Word const&                          w,
                                                    std::map<Letter, FamilyEntry> const& family) {
    std::vector<std::string> alphabet = q.alphabet();
    std::set<std::string>    taken(alphabet.begin(), alphabet.end());
    std::vector<Relation>    relations = q.relations();
    std::map<Letter, Letter> a_of;
    for (auto const& [x, entry] : family) {
      if (x >= q.size()) {
        throw PreconditionError("family letter outside the alphabet");
      }
      if (entry.base.empty()) {
        throw PreconditionError("family entry with an empty base");
      }
      std::string name = family.size() == 1 ? "a" : "a_" + q.alphabet()[x];
      name             = fresh_name(name, taken);
      taken.insert(name);
      a_of[x] = static_cast<Letter>(alphabet.size());
      alphabet.push_back(name);
    }
    std::vector<Relation> w_rels;
    std::vector<Relation> r_rels;
    for (auto const& [x, entry] : family) {
      std::vector<Letter> map(entry.presentation.size());
      for (std::size_t i = 0; i < entry.presentation.size(); ++i) {
        std::string name = fresh_name(entry.presentation.alphabet()[i], taken);
        taken.insert(name);
        map[i] = static_cast<Letter>(alphabet.size());
        alphabet.push_back(name);
      }
      auto image = [&map](Word const& u) {
        Word out;
        for (Letter a : u) {
          out.push_back(map.at(a));
        }
        return out;
      };
      Word rhs{a_of[x]};
      Word base = image(entry.base);
      rhs.insert(rhs.end(), base.begin(), base.end());
      rhs.push_back(a_of[x]);
      w_rels.push_back({{x}, rhs});
      for (auto const& r : entry.presentation.relations()) {
        r_rels.push_back({image(r.lhs), image(r.rhs)});
      }
    }
    relations.insert(relations.end(), w_rels.begin(), w_rels.end());
    relations.insert(relations.end(), r_rels.begin(), r_rels.end());
    return {Presentation(std::move(alphabet), std::move(relations), q.name() + "_product"), w};
  }

  PresentationWithBase named_builder(NamedKind kind, std::size_t n) {
    switch (kind) {
      case NamedKind::direct_product: {
        if (n < 1) {
          throw PreconditionError("direct_product needs n >= 1");
        }
        std::vector<std::string> letters;
        Word                     base;
        for (std::size_t i = 1; i <= n; ++i) {
          letters.push_back("x" + std::to_string(i));
          base.push_back(static_cast<Letter>(i - 1));
        }
        return {Presentation(letters, {}, "direct_product"), base};
      }
      case NamedKind::free_product: {
        if (n < 1) {
          throw PreconditionError("free_product needs n >= 1");
        }
        std::vector<std::string> letters{"x"};
        std::vector<Relation>    rels;
        for (std::size_t i = 1; i <= n; ++i) {
          letters.push_back("x" + std::to_string(i));
          rels.push_back({{0}, {static_cast<Letter>(i)}});
        }
        return {Presentation(letters, rels, "free_product"), Word{0}};
      }
      case NamedKind::bullet:
        return {parse_presentation("x y z | x = x y , z = y z", "bullet"), Word{0, 2}};
      case NamedKind::direct_power:
        return {parse_presentation("x y | x = x y", "direct_power"), Word{0}};
      case NamedKind::wreath_with_z:
        return {parse_presentation("x y z | x = x y , z = y z", "wreath_with_z"), Word{0, 2}};
      case NamedKind::big_o: {
        auto p = parse_presentation(
            "x y ybar z p q r | x = x y p , z = r ybar z , p y q = q ybar r", "big_o");
        return {p, p.word("x y q ybar z")};
      }
    }
    throw PreconditionError("unknown builder");
  }

  PresentationWithBase f_wr_z_product() {
    auto q = parse_presentation("x y z | x y = x , y z = z", "f_wr_z");
    std::map<Letter, FamilyEntry> family;
    family.emplace(1, FamilyEntry{parse_presentation("u | u u = u", "F"), Word{0}});
    return diagram_product_presentation(q, q.word("x z"), family);
  }

}  // namespace diagrams
