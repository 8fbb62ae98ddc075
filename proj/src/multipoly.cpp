#include "charvar/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return i;
  }
  return std::nullopt;
}

Vars make_vars(std::vector<std::string> names, std::vector<std::string> laurent_names) {
  auto vs = std::make_shared<VarSet>();
  vs->laurent.assign(names.size(), false);
  vs->names = std::move(names);
  for (const auto& l : laurent_names) {
    auto idx = vs->index_of(l);
    if (!idx) throw UnsupportedInput("Laurent variable '" + l + "' is not in the variable list");
    vs->laurent[*idx] = true;
  }
  for (std::size_t i = 0; i < vs->names.size(); ++i) {
    for (std::size_t j = i + 1; j < vs->names.size(); ++j) {
      if (vs->names[i] == vs->names[j]) throw UnsupportedInput("duplicate variable '" + vs->names[i] + "'");
    }
  }
  return vs;
}

namespace {
const Vars& empty_vars() {
  static const Vars v = make_vars({});
  return v;
}
}  // namespace

MultiPoly::MultiPoly() : vars_(empty_vars()) {}

MultiPoly::MultiPoly(Vars vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(Vars vars, const Rational& c) {
  MultiPoly p(std::move(vars));
  p.add_term(Exponents(p.num_vars(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(Vars vars, std::string_view name) {
  MultiPoly p(std::move(vars));
  Exponents e(p.num_vars(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

MultiPoly MultiPoly::monomial(Vars vars, Exponents exps, const Rational& c) {
  MultiPoly p(std::move(vars));
  if (exps.size() != p.num_vars()) throw AlignmentError("monomial exponent vector has wrong length");
  p.add_term(exps, c);
  return p;
}

std::size_t MultiPoly::index_of(std::string_view name) const {
  auto idx = vars_->index_of(name);
  if (!idx) throw AlignmentError("variable '" + std::string(name) + "' not in polynomial's variable list");
  return *idx;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 && !vars_->laurent[i]) {
      throw UnsupportedInput("negative exponent for non-Laurent variable '" + vars_->names[i] + "'");
    }
  }
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Exponents(num_vars(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

const MultiPoly::TermMap::value_type& MultiPoly::leading_term() const {
  if (terms_.empty()) throw UndefinedOperation("leading term of the zero polynomial");
  return *terms_.rbegin();
}

int MultiPoly::degree_in(std::size_t var) const {
  if (terms_.empty()) return -1;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int MultiPoly::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.rbegin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MultiPoly::has_negative_exponents() const {
  for (const auto& [e, c] : terms_) {
    if (std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) return true;
  }
  return false;
}

bool MultiPoly::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

MultiPoly MultiPoly::coeff_in(std::size_t var, int k) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] != k) continue;
    Exponents f = e;
    f[var] = 0;
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    if (std::accumulate(e.begin(), e.end(), 0) == degree) out.terms_.emplace(e, c);
  }
  return out;
}

void MultiPoly::require_same_vars(const MultiPoly& other, const char* op) const {
  if (vars_ == other.vars_) return;
  if (!vars_->same_names(*other.vars_)) {
    throw AlignmentError(std::string(op) + ": operands have different variable lists");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_vars(rhs, "add");
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_vars(rhs, "sub");
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_vars(b, "mul");
  MultiPoly out(a.vars_);
  const std::size_t n = a.num_vars();
  Exponents e(n);
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      prod = ca * cb;
      auto [it, inserted] = out.terms_.try_emplace(e, prod);
      if (!inserted) it->second += prod;
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator+(MultiPoly a, const Rational& c) {
  a.add_term(Exponents(a.num_vars(), 0), c);
  return a;
}

MultiPoly operator-(MultiPoly a, const Rational& c) {
  a.add_term(Exponents(a.num_vars(), 0), -c);
  return a;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ && !a.vars_->same_names(*b.vars_)) return false;
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw UnsupportedInput("negative power of a polynomial");
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::shifted(const Exponents& by) const {
  MultiPoly out(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += by[i];
    out.add_term(f, c);
  }
  return out;
}

MultiPoly align(const MultiPoly& p, const Vars& target) {
  if (p.vars() == target) return p;
  std::vector<std::optional<std::size_t>> map(p.num_vars());
  for (std::size_t i = 0; i < p.num_vars(); ++i) map[i] = target->index_of(p.vars()->names[i]);
  MultiPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(target->size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i]) {
        throw AlignmentError("cannot align: variable '" + p.vars()->names[i] + "' occurs but is absent from target");
      }
      f[*map[i]] = e[i];
    }
    out.add_term(f, c);
  }
  return out;
}

MultiPoly relabel(const MultiPoly& p, const Vars& renamed) {
  if (renamed->size() != p.num_vars()) throw AlignmentError("relabel: variable count mismatch");
  MultiPoly out(renamed);
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

Exponents min_exponents(const MultiPoly& p) {
  Exponents m(p.num_vars(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = p.min_degree_in(i);
  return m;
}

}  // namespace charvar
