#include "diagrams/pl.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "diagrams/cell_graph.hpp"

namespace diagrams {

  namespace {

    mpq_class slope(PLPoint const& a, PLPoint const& b) {
      mpq_class s = (b.value - a.value).to_rational() / (b.t - a.t).to_rational();
      return s;
    }

    mpz_class floor_of(Dyadic const& t) {
      mpz_class q;
      mpz_fdiv_q_2exp(q.get_mpz_t(), t.numerator().get_mpz_t(), t.exponent());
      return q;
    }

    template <PLDomain D>
    void check_domain(mpq_class const& t) {
      if (t < 0 || (D == PLDomain::unit && t > 1)) {
        throw PreconditionError("evaluation point " + t.get_str() + " outside the domain");
      }
    }

  }  // namespace

  template <PLDomain D>
  PLMap<D>::PLMap() {
    _points.push_back({Dyadic(0), Dyadic(0)});
    if constexpr (D == PLDomain::unit) {
      _points.push_back({Dyadic(1), Dyadic(1)});
    }
  }

  template <PLDomain D>
  PLMap<D>::PLMap(std::vector<PLPoint> points) : _points(std::move(points)) {
    if (_points.empty() || _points.front().t != Dyadic(0) || _points.front().value != Dyadic(0)) {
      throw PreconditionError("PL map must start at (0,0)");
    }
    if constexpr (D == PLDomain::unit) {
      if (_points.size() < 2 || _points.back().t != Dyadic(1) || _points.back().value != Dyadic(1)) {
        throw PreconditionError("PL map on [0,1] must end at (1,1)");
      }
    }
    for (std::size_t i = 0; i + 1 < _points.size(); ++i) {
      if (!(_points[i].t < _points[i + 1].t) || !(_points[i].value < _points[i + 1].value)) {
        throw PreconditionError("PL map breakpoints must be strictly increasing");
      }
      if (!log2_exact(slope(_points[i], _points[i + 1]))) {
        throw PreconditionError("PL map slope is not a power of two");
      }
    }
    // drop interior points with equal slopes on both sides
    std::vector<PLPoint> clean{_points.front()};
    for (std::size_t i = 1; i + 1 < _points.size(); ++i) {
      if (slope(clean.back(), _points[i]) != slope(_points[i], _points[i + 1])) {
        clean.push_back(_points[i]);
      }
    }
    if (_points.size() > 1) {
      clean.push_back(_points.back());
    }
    if constexpr (D == PLDomain::halfline) {
      while (clean.size() >= 2 && slope(clean[clean.size() - 2], clean.back()) == 1) {
        clean.pop_back();
      }
    }
    _points = std::move(clean);
  }

  template <PLDomain D>
  Dyadic PLMap<D>::tail() const {
    return _points.back().value - _points.back().t;
  }

  template <PLDomain D>
  bool PLMap<D>::is_identity() const {
    return *this == PLMap<D>();
  }

  template <PLDomain D>
  mpq_class PLMap<D>::eval(mpq_class const& t) const {
    check_domain<D>(t);
    auto const& pts = _points;
    if (t >= pts.back().t.to_rational()) {
      return t + tail().to_rational();
    }
    std::size_t i = 0;
    while (t > pts[i + 1].t.to_rational()) {
      ++i;
    }
    mpq_class a  = pts[i].t.to_rational();
    mpq_class va = pts[i].value.to_rational();
    mpq_class r  = va + (t - a) * slope(pts[i], pts[i + 1]);
    r.canonicalize();
    return r;
  }

  template <PLDomain D>
  Dyadic PLMap<D>::eval(Dyadic const& t) const {
    return Dyadic::from_rational(eval(t.to_rational()));
  }

  template <PLDomain D>
  mpq_class PLMap<D>::eval_inverse(mpq_class const& t) const {
    check_domain<D>(t);
    auto const& pts = _points;
    if (t >= pts.back().value.to_rational()) {
      return t - tail().to_rational();
    }
    std::size_t i = 0;
    while (t > pts[i + 1].value.to_rational()) {
      ++i;
    }
    mpq_class r = pts[i].t.to_rational()
                  + (t - pts[i].value.to_rational()) / slope(pts[i], pts[i + 1]);
    r.canonicalize();
    return r;
  }

  template <PLDomain D>
  long PLMap<D>::log2_slope_right(mpq_class const& t) const {
    check_domain<D>(t);
    auto const& pts = _points;
    if (t >= pts.back().t.to_rational()) {
      if constexpr (D == PLDomain::unit) {
        return *log2_exact(slope(pts[pts.size() - 2], pts.back()));
      }
      return 0;
    }
    std::size_t i = 0;
    while (t >= pts[i + 1].t.to_rational()) {
      ++i;
    }
    return *log2_exact(slope(pts[i], pts[i + 1]));
  }

  template <PLDomain D>
  long PLMap<D>::log2_slope_left(mpq_class const& t) const {
    check_domain<D>(t);
    if (t == 0) {
      return log2_slope_right(t);
    }
    auto const& pts = _points;
    if (t > pts.back().t.to_rational()) {
      return 0;
    }
    std::size_t i = 0;
    while (t > pts[i + 1].t.to_rational()) {
      ++i;
    }
    return *log2_exact(slope(pts[i], pts[i + 1]));
  }

  template <PLDomain D>
  PLMap<D> pl_compose(PLMap<D> const& f, PLMap<D> const& g) {
    std::vector<Dyadic> ts;
    for (auto const& p : f.points()) {
      ts.push_back(p.t);
    }
    for (auto const& p : g.points()) {
      ts.push_back(Dyadic::from_rational(f.eval_inverse(p.t.to_rational())));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<PLPoint> pts;
    for (auto const& t : ts) {
      pts.push_back({t, g.eval(f.eval(t))});
    }
    return PLMap<D>(std::move(pts));
  }

  template <PLDomain D>
  PLMap<D> pl_inverse(PLMap<D> const& f) {
    std::vector<PLPoint> pts;
    for (auto const& p : f.points()) {
      pts.push_back({p.value, p.t});
    }
    return PLMap<D>(std::move(pts));
  }

  template <PLDomain D>
  PLMap<D> pl_commutator(PLMap<D> const& f, PLMap<D> const& g) {
    return pl_compose(pl_compose(pl_inverse(f), pl_inverse(g)), pl_compose(f, g));
  }

  template <PLDomain D>
  PLMap<D> pl_conj(PLMap<D> const& f, PLMap<D> const& g) {
    return pl_compose(pl_compose(pl_inverse(g), f), g);
  }

  template <PLDomain D>
  PLMap<D> pl_pow(PLMap<D> const& f, long n) {
    PLMap<D> base = n < 0 ? pl_inverse(f) : f;
    PLMap<D> out;
    for (long k = 0; k < (n < 0 ? -n : n); ++k) {
      out = pl_compose(out, base);
    }
    return out;
  }

  template <PLDomain D>
  std::vector<OpenInterval> support(PLMap<D> const& f) {
    std::vector<OpenInterval> pieces;
    auto const&               pts = f.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      mpq_class a  = pts[i].t.to_rational();
      mpq_class b  = pts[i + 1].t.to_rational();
      mpq_class da = (pts[i].value - pts[i].t).to_rational();
      mpq_class db = (pts[i + 1].value - pts[i + 1].t).to_rational();
      if (da == 0 && db == 0) {
        continue;
      }
      if (sgn(da) * sgn(db) < 0) {
        mpq_class r = a + da * (b - a) / (da - db);
        r.canonicalize();
        pieces.push_back({a, r});
        pieces.push_back({r, b});
      } else {
        pieces.push_back({a, b});
      }
    }
    if (f.tail().sign() != 0) {
      pieces.push_back({pts.back().t.to_rational(), std::nullopt});
    }
    std::vector<OpenInterval> out;
    for (auto& piece : pieces) {
      if (!out.empty() && out.back().hi && *out.back().hi == piece.lo
          && f.eval(piece.lo) != piece.lo) {
        out.back().hi = piece.hi;
      } else {
        out.push_back(piece);
      }
    }
    return out;
  }

  std::string format_interval(OpenInterval const& i) {
    return "(" + rational_to_string(i.lo) + ", "
           + (i.hi ? rational_to_string(*i.hi) : std::string("inf")) + ")";
  }

  // ---------------------------------------------------------------------------
  // from normal forms

  namespace {
    // Leaf intervals of the positive forest of a reduced base-x diagram.
    std::vector<std::pair<Dyadic, Dyadic>> leaf_partition(Diagram const& d) {
      auto g       = build_cell_graph(d.presentation(), d.top(), d.steps());
      auto forward = [&g](std::size_t c) {
        return g.cells[c].direction == Direction::forward;
      };
      std::vector<std::pair<Dyadic, Dyadic>> iv(g.labels.size());
      iv[g.top.front()] = {Dyadic(0), Dyadic(1)};
      auto lin          = linearize(g, Pick::leftmost, forward);
      for (auto const& pc : lin.order) {
        auto const& cell = g.cells[pc.cell];
        auto [a, b]      = iv[cell.in.front()];
        Dyadic mid       = (a + b).scaled(-1);
        iv[cell.out[0]]  = {a, mid};
        iv[cell.out[1]]  = {mid, b};
      }
      std::vector<std::pair<Dyadic, Dyadic>> out;
      for (auto e : lin.final_edges) {
        out.push_back(iv[e]);
      }
      return out;
    }
  }  // namespace

  DyadicPL pl_from_nf(NormalForm const& f) {
    Diagram d   = nf_to_diagram(f, 1);
    auto    dom = leaf_partition(d);
    auto    ran = leaf_partition(inverse(d));
    if (dom.size() != ran.size()) {
      throw Error("pl_from_nf: positive and negative parts differ in size");
    }
    std::vector<PLPoint> pts;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      pts.push_back({dom[i].first, ran[i].first});
    }
    pts.push_back({Dyadic(1), Dyadic(1)});
    return DyadicPL(std::move(pts));
  }

  // ---------------------------------------------------------------------------
  // the half line

  namespace {
    Dyadic theta(Dyadic const& s) {
      long n = 0;
      while (s >= Dyadic(1) - Dyadic::power_of_two(-(n + 1))) {
        ++n;
      }
      return Dyadic(n) + (s - (Dyadic(1) - Dyadic::power_of_two(-n))).scaled(n + 1);
    }

    Dyadic theta_inverse(Dyadic const& t) {
      long n = floor_of(t).get_si();
      return Dyadic(1) - Dyadic::power_of_two(-n) + (t - Dyadic(n)).scaled(-n - 1);
    }
  }  // namespace

  HalflinePL to_halfline(DyadicPL const& f) {
    auto const& pts = f.points();
    long        a   = f.log2_slope_left(1);
    // f is affine on [1 - 2^-big, 1]
    long big = 0;
    Dyadic before_end = pts[pts.size() - 2].t;
    while (Dyadic(1) - Dyadic::power_of_two(-big) < before_end) {
      ++big;
    }
    long m = big + (a < 0 ? -a : a) + 1;
    std::vector<Dyadic> ts;
    for (long n = 0; n <= m; ++n) {
      ts.push_back(Dyadic(n));
    }
    for (auto const& p : pts) {
      if (p.t < Dyadic(1)) {
        ts.push_back(theta(p.t));
      }
    }
    for (long k = 0; k <= m + (a < 0 ? -a : a) + 1; ++k) {
      Dyadic s = Dyadic(1) - Dyadic::power_of_two(-k);
      ts.push_back(theta(Dyadic::from_rational(f.eval_inverse(s.to_rational()))));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::vector<PLPoint> out;
    for (auto const& t : ts) {
      if (t > Dyadic(m)) {
        break;
      }
      out.push_back({t, theta(f.eval(theta_inverse(t)))});
    }
    return HalflinePL(std::move(out));
  }

  HalflinePL phi_k_embed(DyadicPL const& f, long k) {
    if (k < 0) {
      throw PreconditionError("phi_k_embed needs k >= 0");
    }
    std::vector<PLPoint> pts;
    if (k > 0) {
      pts.push_back({Dyadic(0), Dyadic(0)});
    }
    for (auto const& p : f.points()) {
      pts.push_back({p.t + Dyadic(k), p.value + Dyadic(k)});
    }
    return HalflinePL(std::move(pts));
  }

  HalflinePL x0_halfline() {
    return HalflinePL({{Dyadic(0), Dyadic(0)}, {Dyadic(1), Dyadic(2)}});
  }

  // ---------------------------------------------------------------------------
  // text

  template <PLDomain D>
  std::string format_pl(PLMap<D> const& f) {
    std::string out;
    for (auto const& p : f.points()) {
      if (!out.empty()) {
        out += ';';
      }
      out += p.t.to_string() + ":" + p.value.to_string();
    }
    return out;
  }

  namespace {
    std::vector<PLPoint> parse_points(std::string_view text) {
      std::vector<PLPoint> pts;
      std::size_t          start = 0;
      while (start <= text.size()) {
        auto end   = text.find(';', start);
        auto item  = text.substr(start, end == std::string_view::npos ? text.npos : end - start);
        auto trim  = [](std::string_view s) {
          while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
          while (!s.empty() && (s.back() == ' ' || s.back() == '\n')) s.remove_suffix(1);
          return s;
        };
        item = trim(item);
        if (!item.empty()) {
          auto colon = item.find(':');
          if (colon == std::string_view::npos) {
            throw ParseError("expected 'breakpoint:value'", start);
          }
          pts.push_back({Dyadic::parse(trim(item.substr(0, colon))),
                         Dyadic::parse(trim(item.substr(colon + 1)))});
        }
        if (end == std::string_view::npos) {
          break;
        }
        start = end + 1;
      }
      return pts;
    }
  }  // namespace

  DyadicPL parse_pl(std::string_view text) {
    return DyadicPL(parse_points(text));
  }

  HalflinePL parse_halfline_pl(std::string_view text) {
    return HalflinePL(parse_points(text));
  }

  std::string pl_csv(DyadicPL const& f, std::size_t samples) {
    std::vector<Dyadic> ts;
    for (auto const& p : f.points()) {
      ts.push_back(p.t);
    }
    long bits = 0;
    while ((std::size_t{1} << bits) < samples) {
      ++bits;
    }
    for (std::size_t i = 0; i <= (std::size_t{1} << bits); ++i) {
      ts.push_back(Dyadic(mpz_class(static_cast<unsigned long>(i)), static_cast<std::uint64_t>(bits)));
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::ostringstream out;
    out << "t,value,t_exact,value_exact\n";
    for (auto const& t : ts) {
      Dyadic v = f.eval(t);
      char   buf[64];
      std::snprintf(buf, sizeof buf, "%.12g,%.12g", t.to_double(), v.to_double());
      out << buf << ',' << t.to_string() << ',' << v.to_string() << '\n';
    }
    return out.str();
  }

  // ---------------------------------------------------------------------------
  // wreath witness

  std::string format_pl_word(PLWord const& w) {
    static char const* const names[4] = {"f", "f^-1", "g", "g^-1"};
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (int l : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += names[l];
    }
    return out;
  }

  namespace {
    std::vector<OpenInterval> merge_overlapping(std::vector<OpenInterval> v) {
      std::sort(v.begin(), v.end(), [](auto const& a, auto const& b) { return a.lo < b.lo; });
      std::vector<OpenInterval> out;
      for (auto& iv : v) {
        if (!out.empty() && (!out.back().hi || iv.lo < *out.back().hi)) {
          if (out.back().hi && (!iv.hi || *iv.hi > *out.back().hi)) {
            out.back().hi = iv.hi;
          }
        } else {
          out.push_back(iv);
        }
      }
      return out;
    }

    bool inside(OpenInterval const& small, OpenInterval const& big) {
      bool hi_ok = !big.hi || (small.hi && *small.hi <= *big.hi);
      return small.lo >= big.lo && hi_ok;
    }
  }  // namespace

  template <PLDomain D>
  WitnessResult<D> wreath_witness(PLMap<D> const& f, PLMap<D> const& g, WitnessBounds bounds) {
    PLMap<D> h0 = pl_commutator(f, g);
    if (h0.is_identity()) {
      return CommutingInput{};
    }
    auto comps = support(f);
    auto sg    = support(g);
    comps.insert(comps.end(), sg.begin(), sg.end());
    comps      = merge_overlapping(std::move(comps));
    auto sh    = support(h0);
    // leftmost component meeting supp h0
    OpenInterval const* comp = nullptr;
    for (auto const& c : comps) {
      if (inside(sh.front(), c)) {
        comp = &c;
        break;
      }
    }
    if (!comp) {
      throw Error("wreath_witness: commutator support escapes supp f u supp g");
    }
    mpq_class c0 = sh.front().lo;
    mpq_class d0 = c0;
    for (auto const& s : sh) {
      if (inside(s, *comp)) {
        if (!s.hi) {
          throw Error("wreath_witness: unbounded commutator support");
        }
        d0 = std::max(d0, *s.hi);
      }
    }
    std::vector<PLMap<D>> letters{f, pl_inverse(f), g, pl_inverse(g)};
    std::size_t           tried    = 0;
    std::size_t           rejected = 0;
    // depth-first in lex order per length keeps memory flat
    for (std::size_t len = 1; len <= bounds.max_word_len; ++len) {
      PLWord                 word;
      std::vector<mpq_class> values{c0};
      std::optional<WitnessResult<D>> found;
      auto recurse = [&](auto&& self) -> void {
        if (found) {
          return;
        }
        if (word.size() == len) {
          ++tried;
          if (values.back() <= d0) {
            return;
          }
          PLMap<D> w;
          for (int l : word) {
            w = pl_compose(w, letters[l]);
          }
          std::vector<PLMap<D>> hs{h0};
          for (std::size_t i = 1; i <= bounds.check_depth; ++i) {
            hs.push_back(pl_conj(hs.back(), w));
          }
          std::size_t pairs = 0;
          for (std::size_t i = 0; i < hs.size(); ++i) {
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
              ++pairs;
              if (!pl_commutator(hs[i], hs[j]).is_identity()) {
                ++rejected;
                return;
              }
            }
          }
          found = WitnessCertificate<D>{h0, w, word, c0, d0, bounds.check_depth, pairs, rejected};
          return;
        }
        for (int l = 0; l < 4; ++l) {
          if (!word.empty() && (word.back() ^ 1) == l) {
            continue;
          }
          word.push_back(l);
          values.push_back(letters[l].eval(values.back()));
          self(self);
          word.pop_back();
          values.pop_back();
        }
      };
      recurse(recurse);
      if (found) {
        return *found;
      }
    }
    return WitnessNotFound{tried};
  }

  // ---------------------------------------------------------------------------

#define DIAGRAMS_PL_INSTANTIATE(D)                                                   \
  template class PLMap<D>;                                                            \
  template PLMap<D> pl_compose(PLMap<D> const&, PLMap<D> const&);                     \
  template PLMap<D> pl_inverse(PLMap<D> const&);                                      \
  template PLMap<D> pl_commutator(PLMap<D> const&, PLMap<D> const&);                  \
  template PLMap<D> pl_conj(PLMap<D> const&, PLMap<D> const&);                        \
  template PLMap<D> pl_pow(PLMap<D> const&, long);                                    \
  template std::vector<OpenInterval> support(PLMap<D> const&);                        \
  template std::string format_pl(PLMap<D> const&);                                    \
  template WitnessResult<D> wreath_witness(PLMap<D> const&, PLMap<D> const&, WitnessBounds);

  DIAGRAMS_PL_INSTANTIATE(PLDomain::unit)
  DIAGRAMS_PL_INSTANTIATE(PLDomain::halfline)

}  // namespace diagrams
