#include "twinned/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "twinned/errors.hpp"
#include "twinned/groebner.hpp"
#include "twinned/polytope.hpp"

namespace twinned {

std::string Variable::name() const {
  switch (kind) {
    case VarKind::kX: return "x" + format_mask(ideal);
    case VarKind::kY: return "y" + format_mask(ideal);
    case VarKind::kZ: return "z";
  }
  return "?";
}

VariableSet::VariableSet(int d, std::vector<Variable> vars) : d_(d), vars_(std::move(vars)) {
  if (vars_.empty() || vars_.back().kind != VarKind::kZ) throw InternalError("variable set must end with z");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    IntVector img = rho(vars_[i].ideal, d_);
    if (vars_[i].kind == VarKind::kY)
      for (auto& c : img) c = -c;
    img.push_back(1);
    images_.push_back(std::move(img));
    by_name_.emplace(vars_[i].name(), i);
  }
}

std::optional<std::size_t> VariableSet::find(VarKind kind, Mask ideal) const {
  if (ideal == 0) return z();
  auto it = by_name_.find(Variable{kind, ideal}.name());
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableSet::index_of(VarKind kind, Mask ideal) const {
  auto idx = find(kind, ideal);
  if (!idx) throw InputError("no variable " + Variable{kind, ideal}.name());
  return *idx;
}

std::optional<std::size_t> VariableSet::find_by_name(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

Monomial VariableSet::monomial(std::initializer_list<std::size_t> vars) const {
  Monomial m(vars_.size());
  for (auto v : vars) m[v] += 1;
  return m;
}

VariableSet build_variables(const Poset& p, const Poset& q) {
  if (p.size() != q.size()) throw InputError("posets have different sizes");
  std::vector<Variable> vars;
  for (Mask i : enumerate_ideals(p).ideals)
    if (i) vars.push_back({VarKind::kX, i});
  for (Mask j : enumerate_ideals(q).ideals)
    if (j) vars.push_back({VarKind::kY, j});
  vars.push_back({VarKind::kZ, 0});
  return VariableSet(p.size(), std::move(vars));
}

IntVector pi_eval(const VariableSet& vs, const Monomial& m) {
  if (m.nvars() != vs.size()) throw InputError("monomial is not over this variable set");
  IntVector out(vs.d() + 1, 0);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (!m[v]) continue;
    const auto& img = vs.pi_image(v);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += m[v] * img[k];
  }
  return out;
}

bool in_toric_ideal(const VariableSet& vs, const Binomial& b) {
  return pi_eval(vs, b.first) == pi_eval(vs, b.second);
}

std::vector<Binomial> family_G(const Poset& p, const Poset& q, const VariableSet& vs) {
  const auto jp = enumerate_ideals(p).ideals;
  const auto jq = enumerate_ideals(q).ideals;
  std::vector<Binomial> out;
  std::set<std::pair<Monomial, Monomial>> seen;
  auto emit = [&](std::initializer_list<std::size_t> first, std::initializer_list<std::size_t> second) {
    Binomial b{vs.monomial(first), vs.monomial(second)};
    if (b.first == b.second) return;
    if (!in_toric_ideal(vs, b)) throw InternalError("family G produced " + format_binomial(vs, b) + " outside the ideal");
    if (seen.emplace(b.first, b.second).second) out.push_back(std::move(b));
  };
  auto lattice_relations = [&](const std::vector<Mask>& ideals, VarKind kind) {
    for (std::size_t a = 0; a < ideals.size(); ++a)
      for (std::size_t b = a + 1; b < ideals.size(); ++b) {
        const Mask i = ideals[a], j = ideals[b];
        if ((i & j) == i || (i & j) == j) continue;
        emit({vs.index_of(kind, i), vs.index_of(kind, j)}, {vs.index_of(kind, i & j), vs.index_of(kind, i | j)});
      }
  };
  lattice_relations(jp, VarKind::kX);
  lattice_relations(jq, VarKind::kY);
  for (Mask i : jp) {
    if (!i) continue;
    for (Mask j : jq) {
      if (!j) continue;
      for (int label = 0; label < p.size(); ++label) {
        if (!p.is_maximal_in(label, i) || !q.is_maximal_in(label, j)) continue;
        const Mask bit = Mask{1} << label;
        emit({vs.index_of(VarKind::kX, i), vs.index_of(VarKind::kY, j)},
             {vs.index_of(VarKind::kX, i & ~bit), vs.index_of(VarKind::kY, j & ~bit)});
      }
    }
  }
  return out;
}

std::vector<Binomial> toric_ideal_generators(const VariableSet& vs, const MonomialOrder& main_order,
                                             const std::vector<std::size_t>& ambient_ranking) {
  // Extended variable list: the toric variables, then t_1..t_d, w, s.
  const std::size_t n = vs.size();
  const int d = vs.d();
  const std::size_t ambient = static_cast<std::size_t>(d) + 2;
  const std::size_t total = n + ambient;
  const std::size_t w = n + d, s = n + d + 1;

  std::vector<std::size_t> ranking = main_order.ranking();
  if (ambient_ranking.empty()) {
    for (std::size_t k = 0; k < ambient; ++k) ranking.push_back(n + k);
  } else {
    if (ambient_ranking.size() != ambient) throw InputError("ambient ranking has the wrong length");
    for (auto k : ambient_ranking) ranking.push_back(n + k);
  }
  const MonomialOrder elim(std::move(ranking), {n, ambient});

  std::vector<Binomial> relations;
  for (std::size_t v = 0; v < n; ++v) {
    Monomial lhs(total), rhs(total);
    lhs[v] = 1;
    const auto& img = vs.pi_image(v);
    const bool has_negative = std::any_of(img.begin(), img.begin() + d, [](auto c) { return c < 0; });
    // t^alpha with alpha in {0,-1}^d is cleared by multiplying through by
    // (t_1...t_d) and compensating with w = (t_1...t_d)^{-1}.
    for (int k = 0; k < d; ++k) rhs[n + k] = static_cast<Exponent>(img[k] + (has_negative ? 1 : 0));
    if (has_negative) rhs[w] = 1;
    rhs[s] = static_cast<Exponent>(img[d]);
    relations.push_back({std::move(lhs), std::move(rhs)});
  }
  Monomial tw(total);
  for (int k = 0; k < d; ++k) tw[n + k] = 1;
  tw[w] = 1;
  relations.push_back({std::move(tw), Monomial(total)});

  const auto gb = buchberger(relations, elim);
  std::vector<Binomial> out;
  for (const auto& b : gb.elements) {
    bool pure = true;
    for (std::size_t k = n; k < total && pure; ++k) pure = b.first[k] == 0 && b.second[k] == 0;
    if (!pure) continue;
    std::vector<Exponent> f(b.first.exponents().begin(), b.first.exponents().begin() + n);
    std::vector<Exponent> g(b.second.exponents().begin(), b.second.exponents().begin() + n);
    Binomial proj{Monomial(std::move(f)), Monomial(std::move(g))};
    if (!in_toric_ideal(vs, proj)) throw InternalError("elimination produced a binomial outside the toric ideal");
    out.push_back(std::move(proj));
  }
  return out;
}

std::vector<Binomial> toric_ideal_generators(const VariableSet& vs) {
  return toric_ideal_generators(vs, default_order(vs));
}

std::vector<Binomial> quadratic_binomials(const VariableSet& vs, const MonomialOrder& order) {
  std::map<IntVector, std::vector<Monomial>> fibers;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a; b < vs.size(); ++b) {
      Monomial m = vs.monomial({a, b});
      fibers[pi_eval(vs, m)].push_back(std::move(m));
    }
  // Consecutive differences inside each fiber span all of its differences.
  std::vector<Binomial> out;
  for (auto& [image, monos] : fibers) {
    if (monos.size() < 2) continue;
    std::sort(monos.begin(), monos.end(), [&](const Monomial& x, const Monomial& y) { return order.less(x, y); });
    for (std::size_t k = 1; k < monos.size(); ++k) out.push_back({monos[k], monos[k - 1]});
  }
  return out;
}

std::string format_monomial(const VariableSet& vs, const Monomial& m) {
  std::string out;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    for (Exponent e = 0; e < m[v]; ++e) {
      if (!out.empty()) out += '*';
      out += vs[v].name();
    }
  }
  return out.empty() ? "1" : out;
}

std::string format_binomial(const VariableSet& vs, const Binomial& b) {
  return format_monomial(vs, b.first) + " - " + format_monomial(vs, b.second);
}

nlohmann::json monomial_json(const VariableSet& vs, const Monomial& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    if (!m[v]) continue;
    const Variable& var = vs[v];
    std::vector<int> labels;
    for (int i = 0; i < vs.d(); ++i)
      if ((var.ideal >> i) & 1u) labels.push_back(i + 1);
    const char* tag = var.kind == VarKind::kX ? "x" : var.kind == VarKind::kY ? "y" : "z";
    out.push_back({{"var", tag}, {"ideal", labels}, {"exp", m[v]}});
  }
  return out;
}

nlohmann::json binomial_json(const VariableSet& vs, const Binomial& b) {
  return {{"first", monomial_json(vs, b.first)}, {"second", monomial_json(vs, b.second)}};
}

Monomial parse_monomial(const VariableSet& vs, const std::string& text) {
  Monomial m = vs.one();
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('*', pos);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(pos, end - pos);
    factor.erase(std::remove_if(factor.begin(), factor.end(), ::isspace), factor.end());
    Exponent power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      power = std::stoi(factor.substr(caret + 1));
      factor.resize(caret);
    }
    if (factor != "1") {
      auto idx = vs.find_by_name(factor);
      if (!idx) throw InputError("unknown variable " + factor);
      m[*idx] += power;
    }
    pos = end + 1;
  }
  return m;
}

}  // namespace twinned
