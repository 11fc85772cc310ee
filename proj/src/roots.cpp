#include "mixf4/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace mixf4 {

std::string Root::to_string() const {
  std::ostringstream os;
  os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
  return os.str();
}

namespace {

std::vector<Root> generate_f4() {
  std::vector<Root> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {2, -2})
        for (int sj : {2, -2}) {
          Root r;
          r.c[i] = si;
          r.c[j] = sj;
          out.push_back(r);
        }
  for (int i = 0; i < 4; ++i)
    for (int s : {2, -2}) {
      Root r;
      r.c[i] = s;
      out.push_back(r);
    }
  for (int m = 0; m < 16; ++m) {
    Root r;
    for (int i = 0; i < 4; ++i) r.c[i] = (m >> i) & 1 ? -1 : 1;
    out.push_back(r);
  }
  return out;
}

// Solve r = sum n_i a_i for the fundamental roots fixed in the header.
std::array<int, 4> solve_expansion(const Root& r) {
  int n1 = r.c[3];
  int n4 = (r.c[0] + n1) / 2;
  int n3 = (r.c[1] + n1 + 2 * n4) / 2;
  int n2 = (r.c[2] + n1 + 2 * n3) / 2;
  return {n1, n2, n3, n4};
}

}  // namespace

const RootSystem& RootSystem::f4() {
  static const RootSystem rs;
  return rs;
}

RootSystem::RootSystem() {
  roots_ = generate_f4();
  const int n = static_cast<int>(roots_.size());
  std::map<Root, int> idx;
  for (int i = 0; i < n; ++i) idx[roots_[i]] = i;
  auto lookup = [&](const Root& r) {
    auto it = idx.find(r);
    return it == idx.end() ? -1 : it->second;
  };

  neg_.resize(n);
  sum_.assign(n, std::vector<int>(n, -1));
  cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    neg_[i] = lookup(-roots_[i]);
    for (int j = 0; j < n; ++j) {
      sum_[i][j] = lookup(roots_[i] + roots_[j]);
      cartan_[i][j] = 2 * dot4(roots_[i], roots_[j]) / dot4(roots_[i], roots_[i]);
    }
  }

  const Root a[4] = {{{-1, -1, -1, 1}}, {{0, 0, 2, 0}}, {{0, 2, -2, 0}}, {{2, -2, 0, 0}}};
  for (int i = 0; i < 4; ++i) fundamental_[i] = lookup(a[i]);

  expansion_.resize(n);
  coroot_.resize(n);
  positive_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto e = solve_expansion(roots_[i]);
    Root check;
    for (int k = 0; k < 4; ++k) check = check + e[k] * a[k];
    if (!(check == roots_[i])) throw std::logic_error("root expansion failed");
    expansion_[i] = e;
    positive_[i] = std::all_of(e.begin(), e.end(), [](int x) { return x >= 0; });
    // coroot 2r/<r,r>; fundamental coroots 2a1, 2a2 (short) and a3, a4 (long)
    if (is_long(i)) {
      coroot_[i] = {e[0] / 2, e[1] / 2, e[2], e[3]};
    } else {
      coroot_[i] = {e[0], e[1], 2 * e[2], 2 * e[3]};
    }
  }

  // Build chains by peeling fundamental roots off towards zero.
  chain_.resize(n);
  for (int i = 0; i < n; ++i) {
    const int sign = positive_[i] ? 1 : -1;
    std::vector<int> rev;
    Root cur = roots_[i];
    while (!cur.is_zero()) {
      int ci = lookup(cur);
      bool found = false;
      for (int k = 0; k < 4 && !found; ++k) {
        if (ci == fundamental_[k] || ci == neg_[fundamental_[k]]) {
          rev.push_back(k);
          cur = Root{};
          found = true;
          break;
        }
        Root next = cur - sign * a[k];
        if (lookup(next) >= 0) {
          rev.push_back(k);
          cur = next;
          found = true;
        }
      }
      if (!found) throw std::logic_error("no build chain");
    }
    chain_[i].assign(rev.rbegin(), rev.rend());
  }

  sigma_.resize(n);
  flip_.resize(n);
  for (int i = 0; i < n; ++i) {
    const Root& r = roots_[i];
    sigma_[i] = lookup(Root{{-r.c[0], -r.c[1], -r.c[2], r.c[3]}});
    flip_[i] = lookup(Root{{r.c[0], r.c[1], r.c[2], -r.c[3]}});
  }

  const Root list[15] = {
      {{0, 0, 0, 2}},    {{2, 0, 0, 2}},    {{-2, 0, 0, 2}},   {{0, 2, 0, 2}},
      {{0, -2, 0, 2}},   {{0, 0, 2, 2}},    {{0, 0, -2, 2}},   {{1, 1, -1, 1}},
      {{-1, -1, 1, 1}},  {{1, -1, 1, 1}},   {{-1, 1, -1, 1}},  {{-1, 1, 1, 1}},
      {{1, -1, -1, 1}},  {{-1, -1, -1, 1}}, {{1, 1, 1, 1}}};
  u_pos_.assign(n, 0);
  for (int k = 0; k < 15; ++k) {
    u_list_[k] = lookup(list[k]);
    u_pos_[u_list_[k]] = k + 1;
  }
}

int RootSystem::index(const Root& r) const {
  auto it = std::find(roots_.begin(), roots_.end(), r);
  return it == roots_.end() ? -1 : static_cast<int>(it - roots_.begin());
}

int RootSystem::reflect(int s, int r) const {
  const Root& rs = roots_[s];
  const Root& rr = roots_[r];
  int k = cartan_[s][r];  // 2<s,r>/<s,s>
  return index(rr - k * rs);
}

std::pair<int, int> RootSystem::root_string(int r, int s) const {
  if (s == r || s == neg_[r]) throw LinearlyDependent();
  int p = 0, q = 0;
  Root cur = roots_[s];
  while (is_root(cur - roots_[r])) {
    cur = cur - roots_[r];
    ++p;
  }
  cur = roots_[s];
  while (is_root(cur + roots_[r])) {
    cur = cur + roots_[r];
    ++q;
  }
  return {p, q};
}

std::string RootSystem::name(int i) const {
  const Root& r = roots_[i];
  std::ostringstream os;
  bool half = std::any_of(r.c.begin(), r.c.end(), [](int x) { return x % 2 != 0; });
  if (half) os << "(";
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    int v = half ? r.c[k] : r.c[k] / 2;
    if (v == 0) continue;
    if (v < 0) os << "-";
    else if (!first) os << "+";
    if (std::abs(v) != 1) os << std::abs(v);
    os << "e" << (k + 1);
    first = false;
  }
  if (half) os << ")/2";
  return os.str();
}

bool verify_lemma_long() {
  const auto& rs = RootSystem::f4();
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    if (!rs.is_long(i)) continue;
    for (int k = 0; k < 4; ++k) {
      if (!rs.is_short(rs.fundamental(k))) continue;
      if (rs.expansion(i)[k] % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace mixf4
