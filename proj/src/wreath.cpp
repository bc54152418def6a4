#include "diagrams/wreath.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace diagrams {

  namespace {
    void require_level(WreathElement const& a, WreathElement const& b, char const* op) {
      if (a.level() != b.level()) {
        throw PreconditionError(std::string(op) + ": level mismatch ("
                                + std::to_string(a.level()) + " vs "
                                + std::to_string(b.level()) + ")");
      }
    }
  }  // namespace

  WreathElement WreathElement::identity(int level) {
    if (level < 0) {
      throw PreconditionError("negative wreath level");
    }
    WreathElement e;
    e._level = level;
    return e;
  }

  WreathElement WreathElement::generator(int k, int level) {
    if (k < 1 || k > level) {
      throw PreconditionError("a_" + std::to_string(k) + " does not exist in H_"
                              + std::to_string(level));
    }
    if (k == level) {
      return make(level, {}, 1);
    }
    return make(level, {{0, generator(k, level - 1)}}, 0);
  }

  WreathElement WreathElement::make(int level, Fibers fibers, std::int64_t top) {
    if (level < 1 && (top != 0 || !fibers.empty())) {
      throw PreconditionError("level 0 is trivial");
    }
    WreathElement e;
    e._level = level;
    e._top   = top;
    std::sort(fibers.begin(), fibers.end(),
              [](auto const& x, auto const& y) { return x.first < y.first; });
    for (auto& [l, y] : fibers) {
      if (y.level() != level - 1) {
        throw PreconditionError("fiber level mismatch");
      }
      if (!e._fibers.empty() && e._fibers.back().first == l) {
        throw PreconditionError("repeated fiber index");
      }
      if (!y.is_identity()) {
        e._fibers.emplace_back(l, std::move(y));
      }
    }
    return e;
  }

  WreathElement WreathElement::fiber(std::int64_t l) const {
    auto it = std::lower_bound(_fibers.begin(), _fibers.end(), l,
                               [](auto const& x, std::int64_t v) { return x.first < v; });
    if (it != _fibers.end() && it->first == l) {
      return it->second;
    }
    return identity(_level - 1);
  }

  WreathElement w_identity(int level) {
    return WreathElement::identity(level);
  }

  WreathElement w_mul(WreathElement const& a, WreathElement const& b) {
    require_level(a, b, "w_mul");
    if (a.level() == 0) {
      return a;
    }
    // l -> f(l) g(l + m)
    std::map<std::int64_t, WreathElement> out;
    for (auto const& [l, y] : a.fibers()) {
      out.emplace(l, y);
    }
    for (auto const& [l, y] : b.fibers()) {
      std::int64_t at = l - a.top();
      auto         it = out.find(at);
      if (it == out.end()) {
        out.emplace(at, y);
      } else {
        it->second = w_mul(it->second, y);
      }
    }
    WreathElement::Fibers fibers(out.begin(), out.end());
    return WreathElement::make(a.level(), std::move(fibers), a.top() + b.top());
  }

  WreathElement w_inv(WreathElement const& a) {
    if (a.level() == 0) {
      return a;
    }
    // l -> f(l - m)^-1
    WreathElement::Fibers fibers;
    for (auto const& [l, y] : a.fibers()) {
      fibers.emplace_back(l + a.top(), w_inv(y));
    }
    return WreathElement::make(a.level(), std::move(fibers), -a.top());
  }

  WreathElement w_conj(WreathElement const& a, WreathElement const& b) {
    return w_mul(w_mul(w_inv(b), a), b);
  }

  WreathElement w_commutator(WreathElement const& a, WreathElement const& b) {
    return w_mul(w_mul(w_inv(a), w_inv(b)), w_mul(a, b));
  }

  WreathElement w_pow(WreathElement const& a, std::int64_t n) {
    WreathElement base = n < 0 ? w_inv(a) : a;
    WreathElement out  = w_identity(a.level());
    for (std::int64_t k = 0; k < std::llabs(n); ++k) {
      out = w_mul(out, base);
    }
    return out;
  }

  WreathElement w_embed(WreathElement const& a) {
    return WreathElement::make(a.level() + 1, {{0, a}}, 0);
  }

  WreathElement basic(int i, std::vector<std::int64_t> const& t, int level) {
    if (i < 1 || i + static_cast<int>(t.size()) > level) {
      throw PreconditionError("basic element index out of range");
    }
    WreathElement x = WreathElement::generator(i, level);
    for (std::size_t r = 0; r < t.size(); ++r) {
      auto gen = WreathElement::generator(i + 1 + static_cast<int>(r), level);
      x        = w_conj(x, w_pow(gen, t[r]));
    }
    return x;
  }

  WreathElement g_k_n(int k, std::int64_t n) {
    if (k < 1) {
      throw PreconditionError("g_k(n) needs k >= 1");
    }
    WreathElement g = w_pow(WreathElement::generator(1, k), n);
    for (int j = 2; j <= k; ++j) {
      g = w_commutator(g, w_pow(WreathElement::generator(j, k), n));
    }
    return g;
  }

  TowerWord g_k_n_word(int k, std::int64_t n) {
    if (k < 1 || n < 0) {
      throw PreconditionError("g_k(n) word needs k >= 1 and n >= 0");
    }
    TowerWord w(static_cast<std::size_t>(n), 1);
    for (int j = 2; j <= k; ++j) {
      TowerWord next;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        next.push_back(-*it);
      }
      next.insert(next.end(), static_cast<std::size_t>(n), -j);
      next.insert(next.end(), w.begin(), w.end());
      next.insert(next.end(), static_cast<std::size_t>(n), j);
      w = std::move(next);
    }
    return w;
  }

  WreathElement eval_tower_word(TowerWord const& w, int level) {
    WreathElement out = w_identity(level);
    for (int l : w) {
      auto gen = WreathElement::generator(std::abs(l), level);
      out      = w_mul(out, l > 0 ? gen : w_inv(gen));
    }
    return out;
  }

  bool in_m_k(WreathElement const& a) {
    if (a.level() <= 1) {
      return true;
    }
    if (a.top() != 0) {
      return false;
    }
    return std::all_of(a.fibers().begin(), a.fibers().end(),
                       [](auto const& f) { return in_m_k(f.second); });
  }

  std::int64_t phi(WreathElement const& a) {
    if (a.level() == 0) {
      return 0;
    }
    if (a.level() == 1) {
      return a.top();
    }
    if (a.top() != 0) {
      throw NotInSubgroup("element is not in M_" + std::to_string(a.level()));
    }
    std::int64_t total = 0;
    for (auto const& [l, y] : a.fibers()) {
      total += l * phi(y);
    }
    return total;
  }

  WreathElement zwrz_a() {
    return WreathElement::generator(1, 2);
  }

  WreathElement zwrz_b() {
    return WreathElement::generator(2, 2);
  }

  WreathElement zwrz_a_i(std::int64_t i) {
    return w_conj(zwrz_a(), w_pow(zwrz_b(), i));
  }

  WreathElement zwrz_c_i(std::int64_t i) {
    return w_mul(w_inv(zwrz_a_i(i)), zwrz_a_i(i + 1));
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> c_coefficients(WreathElement const& g) {
    if (g.level() != 2) {
      throw PreconditionError("relator cost is defined on Z wr Z (level 2)");
    }
    std::int64_t sum = 0;
    for (auto const& [l, y] : g.fibers()) {
      sum += y.top();
    }
    if (g.top() != 0 || sum != 0) {
      throw NotInSubgroup("element is not in the normal closure of [a, b]");
    }
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t                                      partial = 0;
    auto const&                                       fib     = g.fibers();
    for (std::size_t k = 0; k < fib.size(); ++k) {
      partial -= fib[k].second.top();
      if (partial == 0) {
        continue;
      }
      std::int64_t next = k + 1 < fib.size() ? fib[k + 1].first : fib[k].first + 1;
      for (std::int64_t i = fib[k].first; i < next; ++i) {
        out.emplace_back(i, partial);
      }
    }
    return out;
  }

  std::int64_t relator_cost_zwrz(WreathElement const& g) {
    std::int64_t total = 0;
    for (auto const& [i, d] : c_coefficients(g)) {
      total += std::llabs(d);
    }
    return total;
  }

  std::string format_wreath(WreathElement const& a) {
    if (a.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& [l, y] : a.fibers()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "(" + std::to_string(l) + ":" + format_wreath(y) + ")";
    }
    if (a.top() != 0) {
      if (!out.empty()) {
        out += ' ';
      }
      out += "a_" + std::to_string(a.level());
      if (a.top() != 1) {
        out += "^" + std::to_string(a.top());
      }
    }
    return out;
  }

}  // namespace diagrams
