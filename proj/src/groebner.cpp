#include "twinned/groebner.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "twinned/errors.hpp"

namespace twinned {

// ---------------------------------------------------------------------------
// Admissible orders
// ---------------------------------------------------------------------------

namespace {

// Pairs (lower, upper) of variable indices that every admissible ranking
// must respect.
std::vector<std::pair<std::size_t, std::size_t>> order_constraints(const VariableSet& vs) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = vs.size();
  for (std::size_t a = 0; a < n; ++a) {
    const Variable& va = vs[a];
    if (va.kind == VarKind::kZ) continue;
    out.emplace_back(vs.z(), a);
    for (std::size_t b = 0; b < n; ++b) {
      const Variable& vb = vs[b];
      if (a == b || vb.kind != va.kind) continue;
      if ((va.ideal & vb.ideal) == va.ideal) out.emplace_back(a, b);
    }
  }
  return out;
}

}  // namespace

MonomialOrder make_order(const VariableSet& vs, std::vector<std::size_t> ranking) {
  if (ranking.size() != vs.size()) throw InputError("ranking length does not match the variable count");
  MonomialOrder order(std::move(ranking));
  for (auto [lo, hi] : order_constraints(vs)) {
    if (order.rank_of(lo) > order.rank_of(hi))
      throw InputError("ranking places " + vs[lo].name() + " above " + vs[hi].name());
  }
  return order;
}

MonomialOrder default_order(const VariableSet& vs) {
  std::vector<std::size_t> ranking{vs.z()};
  for (VarKind kind : {VarKind::kY, VarKind::kX})
    for (std::size_t i = 0; i < vs.size(); ++i)
      if (vs[i].kind == kind) ranking.push_back(i);
  return make_order(vs, std::move(ranking));
}

MonomialOrder random_order(const VariableSet& vs, std::uint64_t seed) {
  const std::size_t n = vs.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<int> indegree(n, 0);
  for (auto [lo, hi] : order_constraints(vs)) {
    succ[lo].push_back(hi);
    ++indegree[hi];
  }
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> ready, ranking;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    const std::size_t k = rng() % ready.size();
    const std::size_t v = ready[k];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(k));
    ranking.push_back(v);
    for (auto w : succ[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return make_order(vs, std::move(ranking));
}

MonomialOrder parse_order(const VariableSet& vs, const std::string& text) {
  std::istringstream in(text);
  std::vector<std::size_t> ranking;
  for (std::string token; in >> token;) {
    auto idx = vs.find_by_name(token);
    if (!idx) throw InputError("order file names unknown variable " + token);
    ranking.push_back(*idx);
  }
  return make_order(vs, std::move(ranking));
}

// ---------------------------------------------------------------------------
// Engine internals. Monomials are stored in rank space (position r holds the
// exponent of the r-th lowest variable) so comparisons scan contiguously.
// ---------------------------------------------------------------------------

namespace {

struct Term {
  std::vector<Exponent> e;
  std::uint64_t mask = 0;
  Exponent degree = 0;

  bool operator==(const Term& o) const { return e == o.e; }
};

struct Poly {
  Term lead;
  Term tail;
};

class Engine {
 public:
  explicit Engine(const MonomialOrder& order) : order_(order), n_(order.nvars()) {
    std::size_t end = n_;
    for (auto it = order.block_sizes().rbegin(); it != order.block_sizes().rend(); ++it) {
      blocks_.emplace_back(end - *it, end);
      end -= *it;
    }
  }

  Term to_term(const Monomial& m) const {
    Term t;
    t.e.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) t.e[r] = m[order_.ranking()[r]];
    finish(t);
    return t;
  }

  Monomial to_monomial(const Term& t) const {
    Monomial m(n_);
    for (std::size_t r = 0; r < n_; ++r) m[order_.ranking()[r]] = t.e[r];
    return m;
  }

  void finish(Term& t) const {
    t.mask = 0;
    t.degree = 0;
    for (std::size_t r = 0; r < n_; ++r) {
      if (t.e[r] < 0) throw InternalError("binomial reduction produced a negative exponent");
      if (t.e[r]) t.mask |= std::uint64_t{1} << (r & 63);
      t.degree += t.e[r];
    }
  }

  int cmp(const Term& a, const Term& b) const {
    for (auto [begin, end] : blocks_) {
      if (blocks_.size() > 1) {
        Exponent da = 0, db = 0;
        for (std::size_t r = begin; r < end; ++r) {
          da += a.e[r];
          db += b.e[r];
        }
        if (da != db) return da < db ? -1 : 1;
      } else if (a.degree != b.degree) {
        return a.degree < b.degree ? -1 : 1;
      }
      for (std::size_t r = begin; r < end; ++r)
        if (a.e[r] != b.e[r]) return a.e[r] > b.e[r] ? -1 : 1;
    }
    return 0;
  }

  static bool divides(const Term& a, const Term& b) {
    if (a.mask & ~b.mask) return false;
    for (std::size_t r = 0; r < a.e.size(); ++r)
      if (a.e[r] > b.e[r]) return false;
    return true;
  }

  static bool coprime(const Term& a, const Term& b) {
    if ((a.mask & b.mask) == 0) return true;
    for (std::size_t r = 0; r < a.e.size(); ++r)
      if (a.e[r] && b.e[r]) return false;
    return true;
  }

  Term lcm_of(const Term& a, const Term& b) const {
    Term t;
    t.e.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) t.e[r] = std::max(a.e[r], b.e[r]);
    finish(t);
    return t;
  }

  // m / divisor * factor
  Term rewrite(const Term& m, const Term& divisor, const Term& factor) const {
    Term t;
    t.e.resize(n_);
    for (std::size_t r = 0; r < n_; ++r) t.e[r] = m.e[r] - divisor.e[r] + factor.e[r];
    finish(t);
    return t;
  }

  // Orients so that lead > tail; false if the binomial is zero.
  bool normalize(Poly& f) const {
    const int c = cmp(f.lead, f.tail);
    if (c == 0) return false;
    if (c < 0) std::swap(f.lead, f.tail);
    return true;
  }

  Poly to_poly(const Binomial& b) const { return {to_term(b.first), to_term(b.second)}; }
  Binomial to_binomial(const Poly& p) const { return {to_monomial(p.lead), to_monomial(p.tail)}; }

  std::optional<Poly> s_poly(const Poly& f, const Poly& g) const {
    const Term l = lcm_of(f.lead, g.lead);
    Poly s{rewrite(l, f.lead, f.tail), rewrite(l, g.lead, g.tail)};
    if (!normalize(s)) return std::nullopt;
    return s;
  }

  // Reduces the initial monomial until no element of `basis` divides it.
  bool top_reduce(Poly& f, const std::vector<Poly>& polys, const std::vector<std::size_t>& basis) const {
    for (;;) {
      const Poly* divisor = nullptr;
      for (auto i : basis)
        if (divides(polys[i].lead, f.lead)) {
          divisor = &polys[i];
          break;
        }
      if (!divisor) return true;
      f.lead = rewrite(f.lead, divisor->lead, divisor->tail);
      if (!normalize(f)) return false;
    }
  }

  // Reduces the trailing monomial to normal form; the initial monomial must
  // already be irreducible.
  void tail_reduce(Poly& f, const std::vector<Poly>& polys, const std::vector<std::size_t>& basis) const {
    for (bool changed = true; changed;) {
      changed = false;
      for (auto i : basis)
        if (divides(polys[i].lead, f.tail)) {
          f.tail = rewrite(f.tail, polys[i].lead, polys[i].tail);
          changed = true;
          break;
        }
    }
  }

  const MonomialOrder& order() const { return order_; }

 private:
  const MonomialOrder& order_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> blocks_;
};

// Buchberger with the Gebauer-Moeller pair update.
class Buchberger {
 public:
  Buchberger(const Engine& engine, PairSchedule schedule) : eng_(engine), schedule_(schedule) {}

  void add_generator(const Binomial& b) {
    Poly f = eng_.to_poly(b);
    if (!eng_.normalize(f)) return;
    if (!eng_.top_reduce(f, polys_, active_)) return;
    update(std::move(f));
  }

  void run() {
    while (!queue_.empty()) {
      const std::size_t id = queue_.top();
      queue_.pop();
      Pair& pair = pairs_[id];
      if (pair.dead) continue;
      pair.dead = true;
      auto s = eng_.s_poly(polys_[pair.i], polys_[pair.j]);
      if (!s) continue;
      if (!eng_.top_reduce(*s, polys_, active_)) continue;
      update(std::move(*s));
    }
  }

  std::vector<Binomial> reduced_basis() const {
    std::vector<Poly> out;
    for (auto i : active_) {
      Poly f = polys_[i];
      eng_.tail_reduce(f, polys_, active_);
      out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return eng_.cmp(a.lead, b.lead) < 0; });
    std::vector<Binomial> result;
    result.reserve(out.size());
    for (const auto& f : out) result.push_back(eng_.to_binomial(f));
    return result;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Term lcm;
    std::uint64_t seq;
    bool dead = false;
  };

  struct PairLater {
    const Buchberger* self;
    bool operator()(std::size_t a, std::size_t b) const {
      const Pair& pa = self->pairs_[a];
      const Pair& pb = self->pairs_[b];
      if (self->schedule_ == PairSchedule::kFifo) return pa.seq > pb.seq;
      if (pa.lcm.degree != pb.lcm.degree) return pa.lcm.degree > pb.lcm.degree;
      return std::tie(pa.i, pa.j) > std::tie(pb.i, pb.j);
    }
  };

  static bool lcm_equal(const Term& a, const Term& b, const Term& l) {
    for (std::size_t r = 0; r < l.e.size(); ++r)
      if (std::max(a.e[r], b.e[r]) != l.e[r]) return false;
    return true;
  }

  void update(Poly h) {
    const std::size_t hid = polys_.size();
    polys_.push_back(std::move(h));
    const Term& hl = polys_[hid].lead;

    // New pairs (h, g), pruned by the chain criterion among themselves.
    struct Candidate {
      std::size_t g;
      Term lcm;
      bool coprime;
      bool keep = false;
      bool pending = true;
    };
    std::vector<Candidate> cands;
    for (auto g : active_) {
      Candidate c{g, eng_.lcm_of(hl, polys_[g].lead), Engine::coprime(hl, polys_[g].lead)};
      cands.push_back(std::move(c));
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      cands[a].pending = false;
      bool keep = cands[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = 0; b < cands.size() && keep; ++b) {
          if (b == a) continue;
          if ((cands[b].pending || cands[b].keep) && Engine::divides(cands[b].lcm, cands[a].lcm)) keep = false;
        }
      }
      cands[a].keep = keep;
    }

    // Old pairs made redundant by h.
    std::vector<std::size_t> live;
    for (auto id : live_) {
      Pair& p = pairs_[id];
      if (p.dead) continue;
      if (Engine::divides(hl, p.lcm) && !lcm_equal(polys_[p.i].lead, hl, p.lcm) &&
          !lcm_equal(hl, polys_[p.j].lead, p.lcm)) {
        p.dead = true;
        continue;
      }
      live.push_back(id);
    }
    live_ = std::move(live);

    for (auto& c : cands) {
      if (!c.keep || c.coprime) continue;
      const std::size_t id = pairs_.size();
      pairs_.push_back(Pair{c.g, hid, std::move(c.lcm), seq_++});
      live_.push_back(id);
      queue_.push(id);
    }

    std::vector<std::size_t> active;
    for (auto g : active_)
      if (!Engine::divides(hl, polys_[g].lead)) active.push_back(g);
    active.push_back(hid);
    active_ = std::move(active);
  }

  const Engine& eng_;
  PairSchedule schedule_;
  std::vector<Poly> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::vector<std::size_t> live_;
  std::uint64_t seq_ = 0;
  std::priority_queue<std::size_t, std::vector<std::size_t>, PairLater> queue_{PairLater{this}};
};

}  // namespace

std::optional<Binomial> orient(const Binomial& f, const MonomialOrder& order) {
  const auto c = order.compare(f.first, f.second);
  if (c == 0) return std::nullopt;
  if (c > 0) return f;
  return Binomial{f.second, f.first};
}

std::optional<Binomial> reduce(const Binomial& f, std::span<const Binomial> basis, const MonomialOrder& order) {
  Engine eng(order);
  std::vector<Poly> polys;
  std::vector<std::size_t> ids;
  for (const auto& b : basis) {
    Poly p = eng.to_poly(b);
    if (!eng.normalize(p)) continue;
    ids.push_back(polys.size());
    polys.push_back(std::move(p));
  }
  Poly g = eng.to_poly(f);
  if (!eng.normalize(g)) return std::nullopt;
  if (!eng.top_reduce(g, polys, ids)) return std::nullopt;
  eng.tail_reduce(g, polys, ids);
  return eng.to_binomial(g);
}

std::optional<Binomial> s_binomial(const Binomial& f, const Binomial& g, const MonomialOrder& order) {
  Engine eng(order);
  Poly pf = eng.to_poly(f), pg = eng.to_poly(g);
  if (!eng.normalize(pf) || !eng.normalize(pg)) return std::nullopt;
  auto s = eng.s_poly(pf, pg);
  if (!s) return std::nullopt;
  return eng.to_binomial(*s);
}

GroebnerBasis buchberger(std::span<const Binomial> gens, const MonomialOrder& order, PairSchedule schedule) {
  Engine eng(order);
  std::vector<Binomial> oriented;
  for (const auto& g : gens)
    if (auto o = orient(g, order)) oriented.push_back(*o);
  std::sort(oriented.begin(), oriented.end(),
            [&](const Binomial& a, const Binomial& b) { return order.less(a.first, b.first); });
  Buchberger bb(eng, schedule);
  for (const auto& g : oriented) bb.add_generator(g);
  bb.run();
  return GroebnerBasis{bb.reduced_basis(), order, true};
}

bool is_groebner(const VariableSet& vs, std::span<const Binomial> candidate, std::span<const Binomial> ideal_gens,
                 const MonomialOrder& order) {
  for (const auto& b : candidate)
    if (!in_toric_ideal(vs, b))
      throw InputError("candidate element " + format_binomial(vs, b) + " is not in the toric ideal");
  Engine eng(order);
  std::vector<Poly> polys;
  std::vector<std::size_t> ids;
  for (const auto& b : candidate) {
    Poly p = eng.to_poly(b);
    if (!eng.normalize(p)) continue;
    ids.push_back(polys.size());
    polys.push_back(std::move(p));
  }
  for (std::size_t a = 0; a < polys.size(); ++a)
    for (std::size_t b = a + 1; b < polys.size(); ++b) {
      if (Engine::coprime(polys[a].lead, polys[b].lead)) continue;
      auto s = eng.s_poly(polys[a], polys[b]);
      if (s && eng.top_reduce(*s, polys, ids)) return false;
    }
  for (const auto& g : ideal_gens) {
    Poly p = eng.to_poly(g);
    if (eng.normalize(p) && eng.top_reduce(p, polys, ids)) return false;
  }
  return true;
}

int max_degree(std::span<const Binomial> binomials) {
  int best = 0;
  for (const auto& b : binomials) best = std::max(best, static_cast<int>(b.degree()));
  return best;
}

int max_degree(const GroebnerBasis& gb) { return max_degree(gb.elements); }

bool ideal_equality(std::span<const Binomial> gens_a, std::span<const Binomial> gens_b, const MonomialOrder& order) {
  const auto gb_a = buchberger(gens_a, order);
  const auto gb_b = buchberger(gens_b, order);
  for (const auto& g : gens_b)
    if (reduce(g, gb_a.elements, order)) return false;
  for (const auto& g : gens_a)
    if (reduce(g, gb_b.elements, order)) return false;
  return true;
}

}  // namespace twinned
