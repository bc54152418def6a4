#include "diagrams/subgroup.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "diagrams/pl.hpp"

namespace diagrams {

  ZwrZPair thm18_generators(PresentationPtr p, Word const& x, Word const& y, Word const& z,
                            Diagram const& delta, Diagram const& gamma1, Diagram const& gamma2) {
    if (x.empty() || y.empty() || z.empty()) {
      throw PreconditionError("thm18: x, y, z must be nonempty");
    }
    auto const& P = *p;
    for (Diagram const* d : {&delta, &gamma1, &gamma2}) {
      if (!(d->presentation() == P)) {
        throw MismatchError("thm18: diagrams over different presentations");
      }
    }
    if (delta.top() != y || delta.bottom() != y) {
      throw PreconditionError("thm18: delta must be a (y, y)-diagram");
    }
    if (reduce(delta).cell_count() == 0) {
      throw PreconditionError("thm18: delta is trivial");
    }
    Word xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    Word yz = y;
    yz.insert(yz.end(), z.begin(), z.end());
    if (gamma1.top() != xy || gamma1.bottom() != x) {
      throw PreconditionError("thm18: gamma1 must be an (xy, x)-diagram");
    }
    if (gamma2.top() != z || gamma2.bottom() != yz) {
      throw PreconditionError("thm18: gamma2 must be a (z, yz)-diagram");
    }
    Diagram a = sum(sum(trivial(p, x), delta), trivial(p, z));
    Diagram b = sum(gamma1, gamma2);
    return {reduce(a), reduce(b)};
  }

  ZwrZPair thm18_thompson_example() {
    auto    p     = thompson_presentation();
    Word    x{0};
    Diagram delta = nf_to_diagram(nf_generator(0), 1);
    Diagram up    = from_derivation(p, Derivation{{0}, {Step{0, 0, Direction::forward}}});
    return thm18_generators(p, x, x, x, delta, inverse(up), up);
  }

  ZwrZPair example37_zwrz_pair() {
    return {nf_to_diagram(parse_nf("x1 x2 x1^-2"), 1), nf_to_diagram(nf_generator(0), 1)};
  }

  ZwrZReport verify_zwrz(Diagram const& a, Diagram const& b, std::size_t depth,
                         std::size_t products, unsigned seed) {
    if (!a.is_spherical() || !b.is_spherical() || a.top() != b.top()) {
      throw PreconditionError("verify_zwrz: spherical diagrams with one base expected");
    }
    ZwrZReport r;
    auto       e           = identity(a.presentation_ptr(), a.top());
    r.commutator_nontrivial = !equal(group_commutator(a, b), e);
    std::vector<Diagram> conj;
    Diagram              bp = e;
    for (std::size_t i = 0; i <= depth; ++i) {
      conj.push_back(group_conj(a, bp));
      bp = group_mul(bp, b);
    }
    for (std::size_t i = 0; i < conj.size(); ++i) {
      for (std::size_t j = i + 1; j < conj.size(); ++j) {
        ++r.pairs_checked;
        if (!equal(group_commutator(conj[i], conj[j]), e)) {
          ++r.pairs_failed;
        }
      }
    }
    std::mt19937                       rng(seed);
    std::uniform_int_distribution<int> coin(-2, 2);
    for (std::size_t k = 0; k < products; ++k) {
      std::vector<int> ex(conj.size(), 0);
      while (std::all_of(ex.begin(), ex.end(), [](int v) { return v == 0; })) {
        for (auto& v : ex) {
          v = coin(rng);
        }
      }
      Diagram prod = e;
      for (std::size_t i = 0; i < conj.size(); ++i) {
        prod = group_mul(prod, group_pow(conj[i], ex[i]));
      }
      ++r.products_checked;
      if (equal(prod, e)) {
        ++r.products_trivial;
      }
    }
    return r;
  }

  std::string format_report(ZwrZReport const& r) {
    std::ostringstream out;
    out << "[a,b] nontrivial: " << (r.commutator_nontrivial ? "yes" : "no") << "\n"
        << "commuting conjugate pairs: " << (r.pairs_checked - r.pairs_failed) << "/"
        << r.pairs_checked << "\n"
        << "nontrivial random products: " << (r.products_checked - r.products_trivial) << "/"
        << r.products_checked << "\n"
        << "verdict: " << (r.passed() ? "pass" : "fail") << "\n";
    return out.str();
  }

  std::optional<Diagram> nontrivial_spherical(PresentationPtr p, Word const& y,
                                              SquierBounds bounds) {
    auto k    = build_component(p, y, bounds);
    auto tree = spanning_tree(k);
    // tree path from the base to each vertex
    std::vector<std::vector<PathEdge>> to(k.vertices.size());
    std::vector<bool>                  done(k.vertices.size(), false);
    done[0] = true;
    for (bool progress = true; progress;) {
      progress = false;
      for (std::size_t e : tree) {
        auto const& E = k.edges[e];
        if (done[E.from] && !done[E.to]) {
          to[E.to] = to[E.from];
          to[E.to].push_back({e, false});
          done[E.to] = progress = true;
        } else if (done[E.to] && !done[E.from]) {
          to[E.from] = to[E.to];
          to[E.from].push_back({e, true});
          done[E.from] = progress = true;
        }
      }
    }
    std::set<std::size_t>  in_tree(tree.begin(), tree.end());
    std::optional<Diagram> best;
    for (std::size_t e = 0; e < k.edges.size(); ++e) {
      if (in_tree.count(e) != 0) {
        continue;
      }
      auto const&           E    = k.edges[e];
      std::vector<PathEdge> loop = to[E.from];
      loop.push_back({e, false});
      for (auto it = to[E.to].rbegin(); it != to[E.to].rend(); ++it) {
        loop.push_back({it->edge, !it->reversed});
      }
      Diagram d = reduce(path_to_diagram(k, 0, loop));
      if (d.cell_count() > 0 && (!best || d.cell_count() < best->cell_count())) {
        best = d;
      }
    }
    return best;
  }

  std::optional<Thm24Witness> thm24_witness_search(PresentationPtr p, Word const& w,
                                                   Thm24Bounds bounds) {
    auto const& P = *p;
    auto equal_mod = [&](Word const& u, Word const& v) {
      return std::holds_alternative<Equal>(words_equal_bounded(P, u, v, bounds.equality));
    };
    SquierBounds comp_bounds{2 * bounds.max_piece_len, bounds.equality.max_visited};
    auto         comp = build_component(p, w, comp_bounds);
    std::set<std::pair<Word, Word>> splits;
    for (auto const& v : comp.vertices) {
      for (std::size_t cut = 1; cut < v.size(); ++cut) {
        if (cut <= bounds.max_piece_len && v.size() - cut <= bounds.max_piece_len) {
          splits.emplace(Word(v.begin(), v.begin() + cut), Word(v.begin() + cut, v.end()));
        }
      }
    }
    // candidate y words by length then lexicographic order
    std::vector<Word> ys{{}};
    std::vector<Word> candidates;
    for (std::size_t len = 1; len <= bounds.max_piece_len; ++len) {
      std::vector<Word> next;
      for (auto const& u : ys) {
        for (Letter a = 0; a < P.size(); ++a) {
          Word v = u;
          v.push_back(a);
          next.push_back(v);
        }
      }
      ys = next;
      candidates.insert(candidates.end(), next.begin(), next.end());
    }
    std::map<Word, std::optional<Diagram>> loops;
    for (auto const& y : candidates) {
      for (auto const& [x, z] : splits) {
        Word xy = x;
        xy.insert(xy.end(), y.begin(), y.end());
        Word yz = y;
        yz.insert(yz.end(), z.begin(), z.end());
        if (!equal_mod(xy, x) || !equal_mod(yz, z)) {
          continue;
        }
        auto it = loops.find(y);
        if (it == loops.end()) {
          SquierBounds lb = bounds.loops;
          lb.max_word_len = std::max(lb.max_word_len, y.size());
          it              = loops.emplace(y, nontrivial_spherical(p, y, lb)).first;
        }
        if (it->second) {
          return Thm24Witness{x, y, z, *it->second};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<NormalForm> example37_generators() {
    return {
        parse_nf("x1^2 x2^2 x6^2 x7^2 x8^-1 x7^-1 x6^-2 x3^-1 x2^-1 x1^-2"),
        parse_nf("x1 x2 x4 x5 x4^-2 x1^-2"),
        parse_nf("x1^3 x2^2 x5 x6 x5^-2 x3^-1 x2^-1 x1^-3"),
    };
  }

  namespace {
    NormalForm nf_pow(NormalForm const& g, long n) {
      NormalForm base = n < 0 ? nf_inv(g) : g;
      NormalForm out;
      for (long k = 0; k < std::abs(n); ++k) {
        out = nf_mul(out, base);
      }
      return out;
    }
  }  // namespace

  NormalForm ff_embed(NormalForm const& g, Side side) {
    NormalForm img0 = side == Side::left ? parse_nf("x1 x2 x1^-2") : parse_nf("x2 x3 x2^-2");
    NormalForm img1 =
        side == Side::left ? parse_nf("x1^2 x2 x1^-3") : parse_nf("x2^2 x3 x2^-3");
    std::map<std::uint32_t, NormalForm> image;
    NormalForm                          out;
    for (FLetter l : nf_to_word(g)) {
      auto it = image.find(l.index);
      if (it == image.end()) {
        // x_i = x0^(1-i) x1 x0^(i-1)
        NormalForm v = img0;
        if (l.index >= 1) {
          long s = static_cast<long>(l.index) - 1;
          v      = nf_mul(nf_mul(nf_pow(img0, -s), img1), nf_pow(img0, s));
        }
        it = image.emplace(l.index, v).first;
      }
      out = nf_mul(out, l.exponent > 0 ? it->second : nf_inv(it->second));
    }
    return out;
  }

  std::string distortion_csv(DistortionTable const& t) {
    std::string out = "n,disto_lower,exact\n";
    for (auto const& r : t.rows) {
      out += std::to_string(r.n) + "," + std::to_string(r.disto_lower) + ","
             + (r.exact ? "true" : "false") + "\n";
    }
    return out;
  }

  std::function<std::optional<std::size_t>(std::size_t)>
  cyclic_x_bound(NormalForm const& g, std::vector<NormalForm> const& y) {
    auto slope = [](NormalForm const& f) {
      return std::labs(pl_from_nf(f).log2_slope_left(mpq_class(1)));
    };
    long sg = slope(g);
    if (sg == 0) {
      return {};
    }
    long sy = 0;
    for (auto const& h : y) {
      sy = std::max(sy, slope(h));
    }
    return [sg, sy](std::size_t n) -> std::optional<std::size_t> {
      return (n * static_cast<std::size_t>(sy) + static_cast<std::size_t>(sg) - 1)
             / static_cast<std::size_t>(sg);
    };
  }

  GroupOps<NormalForm> nf_group_ops() {
    return {nf_mul, nf_inv, format_nf, NormalForm{}};
  }

}  // namespace diagrams
