#include "qadm/mpoly.hpp"

#include <algorithm>
#include <limits>

#include "qadm/error.hpp"

namespace qadm {

namespace {

std::uint64_t total(const Exponents& e) {
  std::uint64_t s = 0;
  for (Exponent x : e) s += x;
  return s;
}

Exponent checked_add(Exponent a, Exponent b) {
  if (a > std::numeric_limits<Exponent>::max() - b) fail(ErrorKind::ExponentOverflow, "exponent overflow");
  return a + b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a,
                                    const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void accumulate(MPoly::TermMap& into, const Exponents& e, const Rational& c) {
  auto [it, inserted] = into.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) into.erase(it);
  } else if (c.is_zero()) {
    into.erase(it);
  }
}

}  // namespace

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t ta = total(a), tb = total(b);
  if (ta != tb) return ta > tb;
  return a > b;
}

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MPoly MPoly::var(const std::string& name) {
  MPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MPoly MPoly::monomial(const Rational& c,
                      const std::vector<std::pair<std::string, Exponent>>& powers) {
  MPoly p(c);
  for (const auto& [name, e] : powers) p *= var(name).pow(e);
  return p;
}

MPoly MPoly::from_terms(std::vector<std::string> vars,
                        const std::vector<std::pair<Exponents, Rational>>& terms) {
  // Sort variables and permute exponents accordingly; duplicates are merged.
  std::vector<std::size_t> order(vars.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
  std::vector<std::string> sorted;
  std::vector<std::size_t> slot(vars.size());
  for (std::size_t i : order) {
    if (sorted.empty() || sorted.back() != vars[i]) sorted.push_back(vars[i]);
    slot[i] = sorted.size() - 1;
  }
  MPoly p;
  p.vars_ = std::move(sorted);
  for (const auto& [e, c] : terms) {
    if (e.size() != vars.size()) fail(ErrorKind::PreconditionViolated, "exponent vector length mismatch");
    Exponents ne(p.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[slot[i]] = checked_add(ne[slot[i]], e[i]);
    accumulate(p.terms_, ne, c);
  }
  p.canonicalize();
  return p;
}

void MPoly::canonicalize() {
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  TermMap nt;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    ne.reserve(nv.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    nt.emplace(std::move(ne), c);
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

MPoly::TermMap MPoly::embedded(const std::vector<std::string>& universe) const {
  if (universe == vars_) return terms_;
  std::vector<std::size_t> pos(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    pos[i] = static_cast<std::size_t>(std::lower_bound(universe.begin(), universe.end(), vars_[i]) - universe.begin());
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents ne(universe.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
    out.emplace(std::move(ne), c);
  }
  return out;
}

Rational MPoly::constant_value() const {
  if (!is_constant()) fail(ErrorKind::PreconditionViolated, "polynomial is not constant: " + str());
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MPoly::var_index(const std::string& name) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
  if (it == vars_.end() || *it != name) return -1;
  return static_cast<int>(it - vars_.begin());
}

Exponent MPoly::degree_in(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) return 0;
  Exponent d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
  return d;
}

Exponent MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  return static_cast<Exponent>(total(terms_.begin()->first));
}

std::pair<Exponents, Rational> MPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorKind::PreconditionViolated, "leading term of zero polynomial");
  return *terms_.begin();
}

MPoly MPoly::coefficient(const std::string& name, Exponent e) const {
  int i = var_index(name);
  if (i < 0) return e == 0 ? *this : MPoly();
  std::vector<std::pair<Exponents, Rational>> out;
  for (const auto& [ex, c] : terms_) {
    if (ex[static_cast<std::size_t>(i)] != e) continue;
    Exponents ne = ex;
    ne[static_cast<std::size_t>(i)] = 0;
    out.emplace_back(std::move(ne), c);
  }
  return from_terms(vars_, out);
}

MPoly MPoly::derivative(const std::string& name) const {
  int i = var_index(name);
  if (i < 0) return MPoly();
  std::vector<std::pair<Exponents, Rational>> out;
  for (const auto& [ex, c] : terms_) {
    Exponent d = ex[static_cast<std::size_t>(i)];
    if (d == 0) continue;
    Exponents ne = ex;
    ne[static_cast<std::size_t>(i)] = d - 1;
    out.emplace_back(std::move(ne), c * Rational(static_cast<long>(d)));
  }
  return from_terms(vars_, out);
}

MPoly MPoly::substitute(const std::map<std::string, MPoly>& bindings) const {
  if (bindings.empty()) return *this;
  std::vector<const MPoly*> bound(vars_.size(), nullptr);
  bool any = false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = bindings.find(vars_[i]);
    if (it != bindings.end()) {
      bound[i] = &it->second;
      any = true;
    }
  }
  if (!any) return *this;
  std::vector<std::map<Exponent, MPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t i, Exponent e) -> const MPoly& {
    auto& cache = powers[i];
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    return cache.emplace(e, bound[i]->pow(e)).first->second;
  };
  MPoly result;
  for (const auto& [ex, c] : terms_) {
    std::vector<std::pair<std::string, Exponent>> free;
    MPoly term(c);
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0) continue;
      if (bound[i])
        term *= power_of(i, ex[i]);
      else
        free.emplace_back(vars_[i], ex[i]);
    }
    if (!free.empty()) term *= monomial(Rational(1), free);
    result += term;
  }
  return result;
}

MPoly MPoly::rename(const std::map<std::string, std::string>& names) const {
  std::map<std::string, MPoly> b;
  for (const auto& [from, to] : names) b.emplace(from, var(to));
  return substitute(b);
}

Rational MPoly::evaluate(const std::map<std::string, Rational>& values) const {
  Rational sum;
  for (const auto& [ex, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < ex.size(); ++i) {
      if (ex[i] == 0) continue;
      auto it = values.find(vars_[i]);
      if (it == values.end()) fail(ErrorKind::PreconditionViolated, "unbound variable " + vars_[i]);
      t *= it->second.pow(ex[i]);
    }
    sum += t;
  }
  return sum;
}

MPoly MPoly::pow(std::uint64_t e) const {
  MPoly result(1);
  MPoly base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.terms_.empty()) return *this;
  if (vars_ != o.vars_) {
    auto u = merge_vars(vars_, o.vars_);
    terms_ = embedded(u);
    vars_ = std::move(u);
    for (const auto& [e, c] : o.embedded(vars_)) accumulate(terms_, e, c);
  } else {
    for (const auto& [e, c] : o.terms_) accumulate(terms_, e, c);
  }
  canonicalize();
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) { return *this += -o; }

MPoly& MPoly::operator*=(const MPoly& o) {
  if (terms_.empty()) return *this;
  if (o.terms_.empty()) {
    *this = MPoly();
    return *this;
  }
  auto u = merge_vars(vars_, o.vars_);
  TermMap a = embedded(u), b = o.embedded(u);
  TermMap out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e(u.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
      accumulate(out, e, ca * cb);
    }
  }
  vars_ = std::move(u);
  terms_ = std::move(out);
  canonicalize();
  return *this;
}

MPoly exact_div(const MPoly& p, const MPoly& q) {
  if (q.is_zero()) fail(ErrorKind::PreconditionViolated, "division by the zero polynomial");
  auto [lq, cq] = q.leading_term();
  std::map<std::string, Exponent> lead_q;
  for (std::size_t i = 0; i < lq.size(); ++i)
    if (lq[i] > 0) lead_q.emplace(q.variables()[i], lq[i]);
  MPoly rem = p;
  MPoly quot;
  while (!rem.is_zero()) {
    auto [lr, cr] = rem.leading_term();
    const auto& rvars = rem.variables();
    // LT(q) must divide LT(rem) whenever q divides p.
    std::vector<std::pair<std::string, Exponent>> powers;
    std::size_t matched = 0;
    for (std::size_t ri = 0; ri < rvars.size(); ++ri) {
      Exponent need = 0;
      auto it = lead_q.find(rvars[ri]);
      if (it != lead_q.end()) {
        need = it->second;
        ++matched;
      }
      if (lr[ri] < need) fail(ErrorKind::NotDivisible, p.str() + " is not divisible by " + q.str());
      if (lr[ri] > need) powers.emplace_back(rvars[ri], lr[ri] - need);
    }
    if (matched != lead_q.size()) fail(ErrorKind::NotDivisible, p.str() + " is not divisible by " + q.str());
    MPoly t = MPoly::monomial(cr / cq, powers);
    quot += t;
    rem -= t * q;
  }
  return quot;
}

}  // namespace qadm
