#include "tga/laurent.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "tga/errors.hpp"

namespace tga {

namespace {
struct NameRegistry {
  std::mutex mu;
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> names;
};
NameRegistry& registry() {
  static NameRegistry r;
  return r;
}
}  // namespace

int intern_name(const std::string& name) {
  NameRegistry& r = registry();
  std::scoped_lock lock(r.mu);
  auto it = r.ids.find(name);
  if (it != r.ids.end()) return it->second;
  int id = (int)r.names.size();
  r.names.push_back(name);
  r.ids.emplace(name, id);
  return id;
}

const std::string& interned_name(int id) {
  NameRegistry& r = registry();
  std::scoped_lock lock(r.mu);
  return r.names.at(id);
}

std::string t_name(const std::string& group_elt) { return "t(" + group_elt + ")"; }

std::string t_name(int index, const std::string& group_elt) {
  return "t(" + std::to_string(index) + "," + group_elt + ")";
}

bool LMonoLess::operator()(const LMono& a, const LMono& b) const {
  size_t i = 0, j = 0;
  while (i < a.e.size() && j < b.e.size()) {
    const std::string& an = interned_name(a.e[i].first);
    const std::string& bn = interned_name(b.e[j].first);
    if (an != bn) return an < bn;
    if (a.e[i].second != b.e[j].second) return a.e[i].second < b.e[j].second;
    ++i;
    ++j;
  }
  return a.e.size() < b.e.size();
}

Laurent::Laurent(long v) {
  if (v != 0) t_.emplace(LMono{}, Cyclo(v));
}

Laurent::Laurent(const Cyclo& v) {
  if (!v.is_zero()) t_.emplace(LMono{}, v);
}

Laurent Laurent::variable(const std::string& name, int exp) {
  Laurent r;
  if (exp == 0) return Laurent(1);
  LMono m;
  m.e.push_back({intern_name(name), exp});
  r.t_.emplace(std::move(m), Cyclo(1));
  return r;
}

bool Laurent::is_one() const {
  return t_.size() == 1 && t_.begin()->first.e.empty() && t_.begin()->second.is_one();
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

void Laurent::prune(const LMono& m) {
  auto it = t_.find(m);
  if (it != t_.end() && it->second.is_zero()) t_.erase(it);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [m, c] : o.t_) {
    auto [it, fresh] = t_.try_emplace(m, c);
    if (!fresh) it->second += c;
    prune(m);
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  *this += -o;
  return *this;
}

namespace {
// Merge two sorted exponent vectors, summing exponents, dropping zeros.
// Sort order here is by id; LMono vectors are kept id-sorted internally.
LMono mono_mul(const LMono& a, const LMono& b) {
  LMono r;
  size_t i = 0, j = 0;
  while (i < a.e.size() || j < b.e.size()) {
    if (j == b.e.size() || (i < a.e.size() && a.e[i].first < b.e[j].first)) {
      r.e.push_back(a.e[i++]);
    } else if (i == a.e.size() || b.e[j].first < a.e[i].first) {
      r.e.push_back(b.e[j++]);
    } else {
      int ex = a.e[i].second + b.e[j].second;
      if (ex != 0) r.e.push_back({a.e[i].first, ex});
      ++i;
      ++j;
    }
  }
  return r;
}
}  // namespace

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent out;
  for (const auto& [am, ac] : t_) {
    for (const auto& [bm, bc] : o.t_) {
      LMono m = mono_mul(am, bm);
      Cyclo c = ac * bc;
      auto [it, fresh] = out.t_.try_emplace(m, c);
      if (!fresh) it->second += c;
      out.prune(m);
    }
  }
  *this = std::move(out);
  return *this;
}

Laurent Laurent::inv() const {
  check_input(t_.size() == 1, "Laurent inv: not a single term");
  Laurent r;
  LMono m = t_.begin()->first;
  for (auto& [id, ex] : m.e) ex = -ex;
  r.t_.emplace(std::move(m), t_.begin()->second.inv());
  return r;
}

Laurent Laurent::pow(long k) const {
  Laurent base = *this;
  if (k < 0) {
    base = base.inv();
    k = -k;
  }
  Laurent r(1);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Cyclo Laurent::substitute(const std::map<std::string, Cyclo>& values) const {
  Cyclo total;
  for (const auto& [m, c] : t_) {
    Cyclo term = c;
    for (const auto& [id, ex] : m.e) {
      const std::string& name = interned_name(id);
      auto it = values.find(name);
      check_input(it != values.end(), "substitute: no value for " + name);
      if (it->second.is_zero()) {
        check_input(ex > 0, "substitute: zero raised to negative power for " + name);
        term = Cyclo();
        break;
      }
      term *= it->second.pow(ex);
    }
    total += term;
  }
  return total;
}

std::string Laurent::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    bool wrote_coeff = false;
    if (cs != "1" || m.e.empty()) {
      // Parenthesize multi-term coefficients so factors stay unambiguous.
      if (cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos)
        cs = "(" + cs + ")";
      os << cs;
      wrote_coeff = true;
    }
    // Render factors in name order.
    std::vector<std::pair<std::string, int>> factors;
    for (const auto& [id, ex] : m.e) factors.push_back({interned_name(id), ex});
    std::sort(factors.begin(), factors.end());
    for (const auto& [name, ex] : factors) {
      if (wrote_coeff) os << " * ";
      os << name << "^" << ex;
      wrote_coeff = true;
    }
  }
  return os.str();
}

}  // namespace tga
