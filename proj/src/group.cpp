#include "tga/group.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tga/errors.hpp"
#include "tga/zlattice.hpp"

namespace tga {

void Group::finish(std::vector<std::string> names) {
  n_ = (int)table_.size();
  check_input(n_ >= 1, "group: empty table");
  for (const auto& row : table_) {
    check_input((int)row.size() == n_, "group: table not square");
    for (int v : row) check_input(v >= 0 && v < n_, "group: entry out of range");
  }
  // Identity at index 0.
  for (int a = 0; a < n_; ++a)
    check_input(table_[0][a] == a && table_[a][0] == a,
                "group: element 0 is not the identity");
  // Latin square (necessary for a group; cheap at any size).
  for (int a = 0; a < n_; ++a) {
    std::vector<bool> seen_row(n_, false), seen_col(n_, false);
    for (int b = 0; b < n_; ++b) {
      check_input(!seen_row[table_[a][b]], "group: repeated product in a row");
      check_input(!seen_col[table_[b][a]], "group: repeated product in a column");
      seen_row[table_[a][b]] = seen_col[table_[b][a]] = true;
    }
  }
  // Associativity: full check up to order 256, deterministic sample beyond.
  if (n_ <= 256) {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          check_input(table_[table_[a][b]][c] == table_[a][table_[b][c]],
                      "group: table is not associative");
  } else {
    unsigned long long s = 0x9e3779b97f4a7c15ULL;
    auto next = [&s]() {
      s ^= s << 13;
      s ^= s >> 7;
      s ^= s << 17;
      return s;
    };
    for (int i = 0; i < 200000; ++i) {
      int a = (int)(next() % n_), b = (int)(next() % n_), c = (int)(next() % n_);
      check_input(table_[table_[a][b]][c] == table_[a][table_[b][c]],
                  "group: table is not associative (sampled)");
    }
  }
  // Inverses.
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b)
      if (table_[a][b] == 0) {
        check_input(table_[b][a] == 0, "group: one-sided inverse");
        inv_[a] = b;
        break;
      }
    check_input(inv_[a] >= 0, "group: missing inverse");
  }
  // Element orders.
  order_.assign(n_, 1);
  for (int a = 0; a < n_; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = table_[x][a];
      ++k;
      check_math(k <= n_ + 1, "group: runaway order computation");
    }
    order_[a] = a == 0 ? 1 : k;
  }
  if (names.empty()) {
    names_.resize(n_);
    for (int a = 0; a < n_; ++a) names_[a] = a == 0 ? "e" : "g" + std::to_string(a);
  } else {
    check_input((int)names.size() == n_, "group: wrong number of names");
    names_ = std::move(names);
  }
  parse_names_.clear();
  parse_names_["e"] = 0;
  for (const auto& [nm, elt] : gens_) parse_names_[nm] = elt;
}

std::shared_ptr<Group> Group::from_table(std::vector<std::vector<int>> table,
                                         std::vector<std::string> names) {
  auto g = std::make_shared<Group>();
  g->table_ = std::move(table);
  g->structure_ = "table(" + std::to_string(g->table_.size()) + ")";
  // Use every element as a generator for word parsing on raw tables.
  g->finish(std::move(names));
  for (int a = 1; a < g->n_; ++a) g->gens_.push_back({g->names_[a], a});
  for (const auto& [nm, elt] : g->gens_) g->parse_names_[nm] = elt;
  return g;
}

std::shared_ptr<Group> Group::cyclic(int n, const std::string& gen) {
  check_input(n >= 1, "cyclic: order must be positive");
  check_input(!gen.empty(), "cyclic: generator name empty");
  auto g = std::make_shared<Group>();
  g->table_.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[a][b] = (a + b) % n;
  std::vector<std::string> names(n);
  for (int a = 0; a < n; ++a)
    names[a] = a == 0 ? "e" : (a == 1 ? gen : gen + "^" + std::to_string(a));
  if (n > 1) g->gens_.push_back({gen, 1});
  g->structure_ = "cyclic(" + std::to_string(n) + ")";
  g->finish(std::move(names));
  return g;
}

namespace {

std::string join_name(const std::string& a, const std::string& b) {
  if (a == "e") return b == "e" ? "e" : b;
  if (b == "e") return a;
  return a + "*" + b;
}

}  // namespace

std::shared_ptr<Group> Group::direct(GroupPtr a, GroupPtr b) {
  check_input(a && b, "direct: null factor");
  int na = a->size(), nb = b->size();
  auto g = std::make_shared<Group>();
  auto idx = [nb](int x, int y) { return x * nb + y; };
  g->table_.assign(na * nb, std::vector<int>(na * nb));
  for (int x1 = 0; x1 < na; ++x1)
    for (int y1 = 0; y1 < nb; ++y1)
      for (int x2 = 0; x2 < na; ++x2)
        for (int y2 = 0; y2 < nb; ++y2)
          g->table_[idx(x1, y1)][idx(x2, y2)] = idx(a->op(x1, x2), b->op(y1, y2));
  std::vector<std::string> names(na * nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) names[idx(x, y)] = join_name(a->name(x), b->name(y));
  for (const auto& [nm, elt] : a->generators()) g->gens_.push_back({nm, idx(elt, 0)});
  for (const auto& [nm, elt] : b->generators()) {
    check_input(std::none_of(g->gens_.begin(), g->gens_.end(),
                             [&](const auto& p) { return p.first == nm; }),
                "direct: duplicate generator name " + nm);
    g->gens_.push_back({nm, idx(0, elt)});
  }
  g->structure_ = "direct(" + a->structure() + "," + b->structure() + ")";
  g->finish(std::move(names));
  // Carry aliases through, qualified by position being unambiguous.
  for (const auto& [nm, elt] : a->parse_names())
    g->parse_names_.emplace(nm, idx(elt, 0));
  for (const auto& [nm, elt] : b->parse_names())
    g->parse_names_.emplace(nm, idx(0, elt));
  return g;
}

std::shared_ptr<Group> Group::semidirect(
    GroupPtr normal, GroupPtr acting,
    const std::map<std::string, std::map<std::string, std::string>>& action) {
  check_input(normal && acting, "semidirect: null factor");
  int na = normal->size(), nh = acting->size();

  // Build the automorphism of the normal part for each acting generator.
  std::vector<int> acting_gen_elts;
  std::vector<std::vector<int>> gen_auto;
  for (const auto& [hname, images] : action) {
    auto it = acting->parse_names().find(hname);
    check_input(it != acting->parse_names().end(),
                "semidirect: unknown acting generator " + hname);
    std::vector<int> gen_idx, gen_img;
    for (const auto& [aname, word] : images) {
      auto ait = normal->parse_names().find(aname);
      check_input(ait != normal->parse_names().end(),
                  "semidirect: unknown normal generator " + aname);
      gen_idx.push_back(ait->second);
      gen_img.push_back(normal->eval_word(word));
    }
    auto full = extend_generator_map(*normal, gen_idx, gen_img);
    check_input(full.has_value(),
                "semidirect: action of " + hname + " is not an automorphism");
    acting_gen_elts.push_back(it->second);
    gen_auto.push_back(*full);
  }
  // Every acting generator must have an assigned action.
  for (const auto& [nm, elt] : acting->generators()) {
    (void)elt;
    check_input(action.count(nm) == 1, "semidirect: no action given for " + nm);
  }

  // Extend to phi_h for every h by composing along generator words.
  std::vector<std::vector<int>> words = generator_words(*acting, acting_gen_elts);
  std::vector<std::vector<int>> act(nh);
  for (int h = 0; h < nh; ++h) {
    std::vector<int> phi(na);
    for (int x = 0; x < na; ++x) phi[x] = x;
    for (int letter : words[h]) {
      std::vector<int> next(na);
      for (int x = 0; x < na; ++x) next[x] = phi[gen_auto[letter][x]];
      phi = std::move(next);
    }
    act[h] = std::move(phi);
  }

  auto g = std::make_shared<Group>();
  auto idx = [na](int h, int a) { return h * na + a; };
  g->table_.assign(nh * na, std::vector<int>(nh * na));
  std::vector<int> act_inv_h(nh);
  for (int h = 0; h < nh; ++h) act_inv_h[h] = acting->inv(h);
  for (int h1 = 0; h1 < nh; ++h1)
    for (int a1 = 0; a1 < na; ++a1)
      for (int h2 = 0; h2 < nh; ++h2)
        for (int a2 = 0; a2 < na; ++a2) {
          // (h1 a1)(h2 a2) = (h1 h2)(phi_{h2^{-1}}(a1) a2)
          int moved = act[act_inv_h[h2]][a1];
          g->table_[idx(h1, a1)][idx(h2, a2)] =
              idx(acting->op(h1, h2), normal->op(moved, a2));
        }
  std::vector<std::string> names(nh * na);
  for (int h = 0; h < nh; ++h)
    for (int a = 0; a < na; ++a)
      names[idx(h, a)] = join_name(acting->name(h), normal->name(a));
  for (const auto& [nm, elt] : acting->generators()) g->gens_.push_back({nm, idx(elt, 0)});
  for (const auto& [nm, elt] : normal->generators()) {
    check_input(std::none_of(g->gens_.begin(), g->gens_.end(),
                             [&](const auto& p) { return p.first == nm; }),
                "semidirect: duplicate generator name " + nm);
    g->gens_.push_back({nm, idx(0, elt)});
  }
  g->structure_ = "semidirect(" + normal->structure() + "," + acting->structure() + ")";
  g->finish(std::move(names));
  for (const auto& [nm, elt] : acting->parse_names()) g->parse_names_.emplace(nm, idx(elt, 0));
  for (const auto& [nm, elt] : normal->parse_names()) g->parse_names_.emplace(nm, idx(0, elt));

  SemidirectInfo info;
  info.normal = normal;
  info.acting = acting;
  info.pair_to_elt.resize(nh * na);
  info.h_part.resize(nh * na);
  info.a_part.resize(nh * na);
  for (int h = 0; h < nh; ++h)
    for (int a = 0; a < na; ++a) {
      info.pair_to_elt[idx(h, a)] = idx(h, a);
      info.h_part[idx(h, a)] = h;
      info.a_part[idx(h, a)] = a;
    }
  info.act = std::move(act);
  info.normal_embed.resize(na);
  for (int a = 0; a < na; ++a) info.normal_embed[a] = idx(0, a);
  info.acting_embed.resize(nh);
  for (int h = 0; h < nh; ++h) info.acting_embed[h] = idx(h, 0);
  g->semi_ = std::move(info);
  return g;
}

int Group::pow(int a, long k) const {
  int base = a;
  if (k < 0) {
    base = inv(a);
    k = -k;
  }
  int r = 0;
  while (k > 0) {
    if (k & 1) r = op(r, base);
    base = op(base, base);
    k >>= 1;
  }
  return r;
}

void Group::add_alias(const std::string& name, int elt) {
  check_input(elt >= 0 && elt < n_, "alias: element out of range");
  auto [it, fresh] = parse_names_.emplace(name, elt);
  check_input(fresh || it->second == elt, "alias: name already bound: " + name);
}

int Group::eval_word(const std::string& word) const {
  int acc = 0;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < word.size() && std::isspace((unsigned char)word[i])) ++i;
  };
  skip_ws();
  check_input(i < word.size(), "empty element word");
  bool expect_factor = true;
  while (i < word.size()) {
    if (expect_factor) {
      if (word[i] == '1') {
        ++i;
      } else {
        check_input(std::isalpha((unsigned char)word[i]) || word[i] == '_',
                    "element word: expected a name in '" + word + "'");
        size_t start = i;
        while (i < word.size() &&
               (std::isalnum((unsigned char)word[i]) || word[i] == '_'))
          ++i;
        std::string nm = word.substr(start, i - start);
        auto it = parse_names_.find(nm);
        check_input(it != parse_names_.end(), "element word: unknown name " + nm);
        int base = it->second;
        long exp = 1;
        skip_ws();
        if (i < word.size() && word[i] == '^') {
          ++i;
          skip_ws();
          bool neg = false;
          if (i < word.size() && (word[i] == '-' || word[i] == '+')) {
            neg = word[i] == '-';
            ++i;
          }
          check_input(i < word.size() && std::isdigit((unsigned char)word[i]),
                      "element word: bad exponent in '" + word + "'");
          exp = 0;
          while (i < word.size() && std::isdigit((unsigned char)word[i]))
            exp = exp * 10 + (word[i++] - '0');
          if (neg) exp = -exp;
        }
        acc = op(acc, pow(base, exp));
      }
      expect_factor = false;
      skip_ws();
    } else {
      check_input(word[i] == '*', "element word: expected '*' in '" + word + "'");
      ++i;
      skip_ws();
      expect_factor = true;
    }
  }
  check_input(!expect_factor, "element word: trailing '*' in '" + word + "'");
  return acc;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> Group::closure(std::vector<int> gens) const {
  std::vector<bool> in(n_, false);
  in[0] = true;
  std::vector<int> queue = {0};
  for (int g : gens) {
    check_input(g >= 0 && g < n_, "closure: element out of range");
    if (!in[g]) {
      in[g] = true;
      queue.push_back(g);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int g : gens) {
      int x = op(queue[head], g);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
      x = op(g, queue[head]);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<int> Group::centralizer(const std::vector<int>& elts) const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x) {
    bool ok = true;
    for (int g : elts)
      if (!commutes(x, g)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<int> Group::center() const {
  std::vector<int> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return centralizer(all);
}

std::vector<int> Group::derived_subgroup() const {
  std::vector<int> comms;
  std::vector<bool> seen(n_, false);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      int c = commutator(a, b);
      if (!seen[c]) {
        seen[c] = true;
        comms.push_back(c);
      }
    }
  return closure(std::move(comms));
}

bool Group::is_nilpotent() const {
  // Ascending central series; nilpotent iff it reaches the whole group.
  std::vector<int> z = {0};
  while ((int)z.size() < n_) {
    std::vector<int> proj;
    auto q = quotient(z, &proj);
    std::vector<int> zq = q->center();
    std::vector<bool> in_zq(q->size(), false);
    for (int x : zq) in_zq[x] = true;
    std::vector<int> nz;
    for (int x = 0; x < n_; ++x)
      if (in_zq[proj[x]]) nz.push_back(x);
    if (nz.size() == z.size()) return false;  // series stalled
    z = std::move(nz);
  }
  return true;
}

std::vector<long> relation_lattice_invariants(const Group& g) {
  int n = g.size();
  std::set<zlat::Row> rows;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      zlat::Row r(n, zlat::Int(0));
      r[a] += 1;
      r[b] += 1;
      r[g.op(a, b)] -= 1;
      rows.insert(std::move(r));
    }
  std::vector<zlat::Row> m(rows.begin(), rows.end());
  std::vector<zlat::Int> inv = zlat::smith_invariants(m, n);
  check_math(zlat::rank(m) == n, "relation lattice: unexpected free quotient");
  std::vector<long> out;
  for (const auto& d : inv)
    if (d != 1) out.push_back((long)d.get_si());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> Group::abelian_invariants() const {
  if (is_abelian()) return relation_lattice_invariants(*this);
  auto q = quotient(derived_subgroup());
  return relation_lattice_invariants(*q);
}

std::map<long, std::vector<int>> Group::sylow_decomposition() const {
  std::map<long, std::vector<int>> out;
  long n = n_;
  std::vector<long> primes;
  long m = n;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);
  long product = 1;
  for (long p : primes) {
    std::vector<int> members;
    for (int x = 0; x < n_; ++x) {
      int o = order_[x];
      while (o % p == 0) o /= (int)p;
      if (o == 1) members.push_back(x);
    }
    // Must be a subgroup for the decomposition to exist.
    for (int a : members)
      for (int b : members) {
        int c = op(a, b);
        check_math(std::binary_search(members.begin(), members.end(), c),
                   "sylow_decomposition: p-elements do not close; group is not nilpotent");
      }
    product *= (long)members.size();
    out[p] = std::move(members);
  }
  check_math(product == n, "sylow_decomposition: sizes do not multiply to the order");
  return out;
}

std::shared_ptr<Group> Group::quotient(const std::vector<int>& normal_members,
                                       std::vector<int>* proj) const {
  std::vector<bool> in_n(n_, false);
  for (int x : normal_members) {
    check_input(x >= 0 && x < n_, "quotient: member out of range");
    in_n[x] = true;
  }
  check_input(in_n[0], "quotient: subgroup must contain the identity");
  for (int a : normal_members)
    for (int b : normal_members)
      check_input(in_n[op(a, b)], "quotient: members do not form a subgroup");
  for (int g = 0; g < n_; ++g)
    for (int x : normal_members)
      check_input(in_n[conj(g, x)], "quotient: subgroup is not normal");

  // Cosets keyed by their minimal member.
  std::vector<int> coset_of(n_, -1);
  std::vector<int> reps;
  for (int x = 0; x < n_; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = (int)reps.size();
    for (int h : normal_members) coset_of[op(x, h)] = id;
    reps.push_back(x);
  }
  int m = (int)reps.size();
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) table[i][j] = coset_of[op(reps[i], reps[j])];
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) names[i] = names_[reps[i]] + "N";
  auto q = from_table(std::move(table), std::move(names));
  if (proj) *proj = coset_of;
  return q;
}

std::shared_ptr<Group> Group::subgroup(const std::vector<int>& members,
                                       std::vector<int>* embed) const {
  std::vector<int> mem = members;
  std::sort(mem.begin(), mem.end());
  check_input(!mem.empty() && mem[0] == 0, "subgroup: must contain the identity");
  std::vector<int> pos(n_, -1);
  for (int i = 0; i < (int)mem.size(); ++i) pos[mem[i]] = i;
  std::vector<std::vector<int>> table(mem.size(), std::vector<int>(mem.size()));
  for (size_t i = 0; i < mem.size(); ++i)
    for (size_t j = 0; j < mem.size(); ++j) {
      int c = op(mem[i], mem[j]);
      check_input(pos[c] >= 0, "subgroup: members are not closed");
      table[i][j] = pos[c];
    }
  std::vector<std::string> names(mem.size());
  for (size_t i = 0; i < mem.size(); ++i) names[i] = names_[mem[i]];
  auto s = from_table(std::move(table), std::move(names));
  if (embed) *embed = mem;
  return s;
}

std::shared_ptr<Group> Group::relabel(const std::vector<int>& perm) const {
  check_input((int)perm.size() == n_, "relabel: permutation size mismatch");
  check_input(perm[0] == 0, "relabel: identity must stay at index 0");
  std::vector<bool> hit(n_, false);
  for (int v : perm) {
    check_input(v >= 0 && v < n_ && !hit[v], "relabel: not a permutation");
    hit[v] = true;
  }
  std::vector<std::vector<int>> table(n_, std::vector<int>(n_));
  std::vector<std::string> names(n_);
  for (int a = 0; a < n_; ++a) {
    names[perm[a]] = names_[a];
    for (int b = 0; b < n_; ++b) table[perm[a]][perm[b]] = perm[table_[a][b]];
  }
  return from_table(std::move(table), std::move(names));
}

std::vector<std::vector<int>> generator_words(const Group& g, const std::vector<int>& gens) {
  int n = g.size();
  std::vector<std::vector<int>> words(n);
  std::vector<bool> known(n, false);
  known[0] = true;
  std::vector<int> queue = {0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      int y = g.op(x, gens[gi]);
      if (!known[y]) {
        known[y] = true;
        words[y] = words[x];
        words[y].push_back((int)gi);
        queue.push_back(y);
      }
    }
  }
  check_math((int)queue.size() == n, "generator_words: the given elements do not generate");
  return words;
}

std::optional<std::vector<int>> extend_generator_map(const Group& g,
                                                     const std::vector<int>& gens,
                                                     const std::vector<int>& images) {
  check_input(gens.size() == images.size(), "extend_generator_map: size mismatch");
  int n = g.size();
  std::vector<std::vector<int>> words;
  try {
    words = generator_words(g, gens);
  } catch (const math_error&) {
    return std::nullopt;
  }
  std::vector<int> phi(n);
  for (int x = 0; x < n; ++x) {
    int y = 0;
    for (int letter : words[x]) y = g.op(y, images[letter]);
    phi[x] = y;
  }
  // Exact homomorphism check over the whole table, then bijectivity.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (phi[g.op(a, b)] != g.op(phi[a], phi[b])) return std::nullopt;
  std::vector<bool> hit(n, false);
  for (int v : phi) {
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return phi;
}

}  // namespace tga
